//! Exact arithmetic substrate.

mod group;
mod laurent;
mod pin;
mod series;

pub use group::{AbelianGroupDesc, Knowledge};
pub use laurent::LaurentPoly;
pub use pin::PinRingElem;
pub use series::RatSeries;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("no Laurent polynomial quotient with integer coefficients exists")]
    NotDivisible,
    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,
    #[error("series has nonzero constant term and is not divisible by z")]
    NonzeroConstantTerm,
    #[error("power series must have truncation order at least 1")]
    EmptySeries,
    #[error("torsion order {0} is not a valid cyclic group order (must be >= 2)")]
    InvalidTorsionOrder(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
