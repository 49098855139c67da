//! Shared inputs for the benchmarks.

use monopole_core::manifolds::{Factor, Junction, Summand};
use monopole_core::{Library, MonopoleClassDescriptor};

/// Connected sum of `count` copies of the bundled library entry `name`.
pub fn repeated_sum(name: &str, count: usize) -> MonopoleClassDescriptor {
    let r = Library::bundled()
        .get(name)
        .unwrap_or_else(|| panic!("{name} is not in the bundled library"))
        .clone();
    let f = Factor::from_manifold(r.manifold, r.status);
    MonopoleClassDescriptor {
        junction: Junction::Connected,
        summands: vec![Summand::Factor(f); count],
    }
}

/// The five elliptic surfaces E(2)..E(6), summed.
pub fn elliptic_chain() -> MonopoleClassDescriptor {
    let lib = Library::bundled();
    let summands = (2..=6)
        .map(|n| {
            let r = lib.get(&format!("E{n}")).expect("bundled").clone();
            Summand::Factor(Factor::from_manifold(r.manifold, r.status))
        })
        .collect();
    MonopoleClassDescriptor {
        junction: Junction::Connected,
        summands,
    }
}
