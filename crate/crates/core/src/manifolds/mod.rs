//! 4-manifold and spin^c descriptors, sum calculus and the decision engine.

mod charnum;
mod descriptor;
mod engine;
mod format;
mod library;
mod sums;
mod verdict;

pub use charnum::{
    almost_complex_admissible, bplus_zero_constraint, dirac_index, galois_congruence_check,
    morgan_szabo_check, virtual_dimension,
};
pub use descriptor::{Flag, FourManifold, MinusTwoSphere, SpinCStructure};
pub use engine::{
    classify, smash, smash_along_minus2, EngineError, Factor, FactorStatus, Junction,
    MonopoleClassDescriptor, Summand,
};
pub use format::{DescriptorFile, FormatError, ManifoldRecord, NamedExpr, SumExpr, FORMAT_VERSION};
pub use library::Library;
pub use sums::{connected_sum, sum_along_minus2};
pub use verdict::{Rule, Verdict, VerdictKind};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ManifoldError {
    #[error("{name}: simply connected but b1 != 0")]
    SimplyConnectedWithB1 { name: String },
    #[error("{name}: spin but sign = {sign} is not divisible by 16")]
    SpinSignature { name: String, sign: i64 },
    #[error("{name}: symplectic needs b+ >= 1 and b+ - b1 odd (b1 = {b1}, b+ = {b_plus})")]
    SymplecticBetti { name: String, b1: u32, b_plus: u32 },
    #[error("{name}: almost complex hypothesis needs b+ >= 1 when b1 = 0")]
    AlmostComplexFlagWithoutBPlus { name: String },
    #[error("c1^2 = {c1_squared} is not congruent to sign = {sign} mod 8")]
    IndexNotIntegral { c1_squared: i64, sign: i64 },
    #[error("b+ = {0}, expected 0")]
    WrongBPlus(u32),
    #[error("{0} has no designated -2-sphere")]
    NoDesignatedSphere(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("sum has b+ = {b_plus}, b- = {b_minus}: the inputs are not consistent")]
    InvalidBookkeeping { b_plus: i64, b_minus: i64 },
}
