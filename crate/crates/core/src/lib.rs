//! Exact computations around refined Seiberg–Witten invariants: representation
//! rings of `T` and `Pin(2)`, equivariant K-theory degrees and the 10/8-type
//! bounds they give, stable cohomotopy tables, James-number lower bounds, and
//! a rule engine deciding (non-)vanishing of monopole classes of sums.
//!
//! Everything is exact: integers are arbitrary precision and series carry
//! rational coefficients.

pub mod cohomotopy;
pub mod james;
pub mod ktheory;
pub mod manifolds;
pub mod rings;

pub use cohomotopy::{invariant_group, invariant_group_kd, stable_stem, InvariantTarget};
pub use james::{james_lower_bound, james_oracle};
pub use ktheory::{furuta_bound, furuta_solve, refined_furuta_bound, FurutaDerivation};
pub use manifolds::{
    classify, DescriptorFile, FourManifold, Library, MonopoleClassDescriptor, SpinCStructure,
    Verdict, VerdictKind,
};
pub use rings::{AbelianGroupDesc, Knowledge, LaurentPoly, PinRingElem, RatSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
