//! K-theoretic lower bounds for stable James numbers.
//!
//! `U(m, n)` is bounded below by the least positive integer that makes the
//! truncation of `(z / log(1+z))^m` modulo `z^n` integral. The bound is
//! conjecturally sharp but is only ever reported as a lower bound here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rings::RatSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JamesError {
    #[error("log(1+z) needs truncation order at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("truncation order n must be at least 1")]
    ZeroOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JamesQuery {
    m: u32,
    n: usize,
}

impl JamesQuery {
    pub fn new(m: u32, n: usize) -> Result<Self, JamesError> {
        if n == 0 {
            return Err(JamesError::ZeroOrder);
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(z / log(1+z))^m mod z^n`.
    pub fn series(&self) -> RatSeries {
        z_over_log_series(self.n).pow(self.m)
    }

    pub fn lower_bound(&self) -> BigInt {
        self.series().denominator_lcm()
    }
}

/// `log(1+z) = Σ_{i≥1} (−1)^{i+1} z^i / i`, truncated to order `n`.
pub fn log_series(n: usize) -> Result<RatSeries, JamesError> {
    if n < 2 {
        return Err(JamesError::OrderTooSmall(n));
    }
    let coeffs = (0..n)
        .map(|i| match i {
            0 => BigRational::zero(),
            i => {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign), BigInt::from(i))
            }
        })
        .collect();
    Ok(RatSeries::new(coeffs).expect("n >= 2"))
}

/// `z / log(1+z)` to order `n >= 1`.
pub fn z_over_log_series(n: usize) -> RatSeries {
    let n = n.max(1);
    let log_over_z = log_series(n + 1)
        .expect("order n + 1 >= 2")
        .shift_down()
        .expect("log(1+z) has zero constant term");
    log_over_z
        .inverse()
        .expect("log(1+z)/z has constant term 1")
}

/// Least positive `U` such that `U · (z / log(1+z))^m` is integral mod `z^n`.
pub fn james_lower_bound(m: u32, n: usize) -> Result<BigInt, JamesError> {
    Ok(JamesQuery::new(m, n)?.lower_bound())
}

/// Computes the same bound as [`james_lower_bound`] along a separate route:
/// `P = (log(1+z)/z)^m` is built with the power recurrence
/// `k·f₀·g_k = Σ_{j=1}^{k} ((m+1)j − k) f_j g_{k−j}`, then `S` with `P·S = 1`
/// is found by forward substitution. No series inversion or powering of
/// [`RatSeries`] is involved.
pub fn james_oracle(m: u32, n: usize) -> Result<BigInt, JamesError> {
    if n == 0 {
        return Err(JamesError::ZeroOrder);
    }
    // f_j = (−1)^j / (j+1), so f_0 = 1
    let f: Vec<BigRational> = (0..n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            BigRational::new(BigInt::from(sign), BigInt::from(j + 1))
        })
        .collect();
    let m_big = BigInt::from(m);
    let mut p: Vec<BigRational> = Vec::with_capacity(n);
    p.push(BigRational::one());
    for k in 1..n {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            let weight = (&m_big + 1) * BigInt::from(j) - BigInt::from(k);
            acc += BigRational::from_integer(weight) * &f[j] * &p[k - j];
        }
        p.push(acc / BigRational::from_integer(BigInt::from(k)));
    }

    let mut s: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut rhs = if k == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        for j in 1..=k {
            rhs -= &p[j] * &s[k - j];
        }
        s.push(rhs / &p[0]);
    }
    Ok(s.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom())))
}
