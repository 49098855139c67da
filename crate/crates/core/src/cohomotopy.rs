//! Stable cohomotopy groups that receive refined Seiberg–Witten invariants.
//!
//! For a K-oriented 4-manifold with `b₁ = 0` and `b⁺ > 1` the invariant lives
//! in `π^{b⁺−1}(P(C^d)) ≅ Z ⊕ A(k,d)` (for even `k ≥ 0`), where `d` is the
//! Dirac index and `k = 2d − b⁺ − 1`. The torsion group `A(k,d)` is tabulated
//! for `k ≤ 4`; beyond that only the rank and a range of vanishing primary
//! parts are known. The `b₁ = 0`, `b⁺ > 1` hypothesis is enforced by callers.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::james;
use crate::rings::{is_prime, AbelianGroupDesc, Knowledge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomotopyError {
    #[error("{what} = {value} lies outside the tabulated range {range}")]
    OutOfTable {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("truncation order n must be at least 1")]
    ZeroOrder,
}

/// Target group data of a monopole class: `b⁺` and the complex Dirac index `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantTarget {
    pub b_plus: u32,
    pub d: u32,
}

impl InvariantTarget {
    pub fn new(b_plus: u32, d: u32) -> Self {
        Self { b_plus, d }
    }

    /// Virtual dimension `2d − b⁺ − 1`.
    pub fn k(&self) -> i64 {
        2 * self.d as i64 - self.b_plus as i64 - 1
    }
}

/// `π^{st}_n(S⁰)` for `0 ≤ n ≤ 5`.
pub fn stable_stem(n: i64) -> Result<AbelianGroupDesc, CohomotopyError> {
    let order = match n {
        0 => 0,
        1 | 2 => 2,
        3 => 24,
        4 | 5 => 1,
        _ => {
            return Err(CohomotopyError::OutOfTable {
                what: "n",
                value: n,
                range: "[0, 5]",
            })
        }
    };
    Ok(AbelianGroupDesc::cyclic(order))
}

/// Order of the cyclic 2-primary part of `A(3, d)` by `d mod 8`; 0 is read
/// as the trivial group.
const A3_TWO_PRIMARY: [u64; 8] = [8, 0, 2, 4, 4, 0, 2, 2];

/// The finite group `A(k, d)` for `0 ≤ k ≤ 4`.
pub fn torsion_part_a(k: u32, d: u32) -> Result<AbelianGroupDesc, CohomotopyError> {
    let torsion = match k {
        0 | 4 => vec![],
        1 | 2 if d.is_multiple_of(2) => vec![2],
        1 | 2 => vec![],
        3 => {
            let mut t = Vec::new();
            match A3_TWO_PRIMARY[(d % 8) as usize] {
                0 => {}
                order => t.push(order),
            }
            if d.is_multiple_of(3) {
                t.push(3);
            }
            t
        }
        _ => {
            return Err(CohomotopyError::OutOfTable {
                what: "k",
                value: k as i64,
                range: "[0, 4]",
            })
        }
    };
    Ok(AbelianGroupDesc::new(0, torsion, Knowledge::Complete).expect("table orders are >= 2"))
}

/// Whether the `p`-primary part of `A(k, d)` is known to vanish (`k < 2p − 3`).
/// `false` means "not certified", not "nonzero".
pub fn p_primary_vanishes(k: u32, p: u64) -> Result<bool, CohomotopyError> {
    if !is_prime(p) {
        return Err(CohomotopyError::NotPrime(p));
    }
    Ok((k as u64) < 2 * p - 3)
}

/// Smallest prime `p` with `k < 2p − 3`; every larger prime also qualifies.
pub fn first_certified_prime(k: u32) -> u64 {
    (2..)
        .find(|&p| is_prime(p) && (k as u64) < 2 * p - 3)
        .expect("primes are unbounded")
}

pub fn invariant_group(t: &InvariantTarget) -> AbelianGroupDesc {
    invariant_group_kd(t.k(), t.d)
}

/// `Z ⊕ A(k,d)` for even `k ≥ 0`, `A(k,d)` for odd `k`, zero for `k < 0`.
pub fn invariant_group_kd(k: i64, d: u32) -> AbelianGroupDesc {
    if k < 0 {
        return AbelianGroupDesc::trivial();
    }
    let free = AbelianGroupDesc::free(if k % 2 == 0 { 1 } else { 0 });
    if k <= 4 {
        let torsion = torsion_part_a(k as u32, d).expect("k in table range");
        return free.direct_sum(&torsion);
    }
    let k = u32::try_from(k).unwrap_or(u32::MAX);
    let partial = AbelianGroupDesc::new(
        0,
        vec![],
        Knowledge::PartialBeyondTable {
            p_primary_zero_from: first_certified_prime(k),
        },
    )
    .expect("no torsion entries");
    free.direct_sum(&partial)
}

/// Divisibility forced on Seiberg–Witten integers by the index of the
/// Hurewicz image in `H^{2m}(P(C^{m+n}))`, i.e. the K-theory lower bound for
/// the stable James number. The literature writes this index as `U(−m, n)`
/// while the integrality statement uses `U(m, n)`; both denote the same
/// nonnegative-`m` quantity here.
pub fn hurewicz_divisibility(m: u32, n: usize) -> Result<BigInt, CohomotopyError> {
    james::james_lower_bound(m, n).map_err(|_| CohomotopyError::ZeroOrder)
}
