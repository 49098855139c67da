//! Truncated power series with exact rational coefficients.
//!
//! A [`RatSeries`] of order `n` is known modulo `z^n`. Binary operations
//! narrow to the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RingError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

impl RatSeries {
    /// `coeffs[i]` is the coefficient of `z^i`; the order is `coeffs.len()`.
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self, RingError> {
        if coeffs.is_empty() {
            return Err(RingError::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self, RingError> {
        Self::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer((*c).into()))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Result<Self, RingError> {
        Self::new(vec![BigRational::zero(); order])
    }

    pub fn one(order: usize) -> Result<Self, RingError> {
        let mut s = Self::zero(order)?;
        s.coeffs[0] = BigRational::one();
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Keeps only the terms below `z^order`; `order` is clamped to the current one.
    pub fn truncate(&self, order: usize) -> Result<Self, RingError> {
        Self::new(self.coeffs[..order.min(self.order())].to_vec())
    }

    /// Divides by `z`, lowering the order by one. Requires a zero constant term.
    pub fn shift_down(&self) -> Result<Self, RingError> {
        if !self.coeffs[0].is_zero() {
            return Err(RingError::NonzeroConstantTerm);
        }
        Self::new(self.coeffs[1..].to_vec())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplicative inverse by Newton iteration `g ← g·(2 − f·g)`, which
    /// doubles the number of correct coefficients per step.
    pub fn inverse(&self) -> Result<Self, RingError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(RingError::ZeroConstantTerm);
        }
        let n = self.order();
        let mut g = Self {
            coeffs: vec![a0.recip()],
        };
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            g.coeffs.resize(prec, BigRational::zero());
            let f = Self {
                coeffs: self.coeffs[..prec].to_vec(),
            };
            let mut correction = -&(&f * &g);
            correction.coeffs[0] += BigRational::from_integer(BigInt::from(2));
            g = &g * &correction;
        }
        Ok(g)
    }

    /// `self / den`, to order `min(self.order(), den.order())`.
    pub fn div(&self, den: &RatSeries) -> Result<Self, RingError> {
        let n = self.order().min(den.order());
        let inv = den.truncate(n)?.inverse()?;
        Ok(&self.truncate(n)? * &inv)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self {
            coeffs: {
                let mut v = vec![BigRational::zero(); self.order()];
                v[0] = BigRational::one();
                v
            },
        };
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Least common multiple of the (lowest-terms) denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else if mag.is_integer() {
                write!(f, "{mag}{mono}")?;
            } else if mag.numer().is_one() {
                write!(f, "{}/{}", mono, mag.denom())?;
            } else {
                write!(f, "{}{}/{}", mag.numer(), mono, mag.denom())?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order())
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;
    fn add(self, rhs: &RatSeries) -> RatSeries {
        let n = self.order().min(rhs.order());
        RatSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: &RatSeries) -> RatSeries {
        let n = self.order().min(rhs.order());
        RatSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &RatSeries {
    type Output = RatSeries;
    fn neg(self) -> RatSeries {
        RatSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;
    /// Convolves integer numerators over one common denominator per factor,
    /// so only the final coefficients are reduced.
    fn mul(self, rhs: &RatSeries) -> RatSeries {
        let n = self.order().min(rhs.order());
        let (a, da) = common_denominator(&self.coeffs[..n]);
        let (b, db) = common_denominator(&rhs.coeffs[..n]);
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[..n - i].iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        RatSeries {
            coeffs: out
                .into_iter()
                .map(|c| BigRational::new(c, den.clone()))
                .collect(),
        }
    }
}

fn common_denominator(coeffs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    use num_integer::Integer;
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn order_zero_rejected() {
        assert_eq!(RatSeries::new(vec![]), Err(RingError::EmptySeries));
        assert_eq!(RatSeries::zero(0), Err(RingError::EmptySeries));
    }

    #[test]
    fn geometric_series() {
        let one = RatSeries::one(6).unwrap();
        let den = RatSeries::from_integers(&[1, -1, 0, 0, 0, 0]).unwrap();
        let g = one.div(&den).unwrap();
        assert_eq!(g, RatSeries::from_integers(&[1; 6]).unwrap());
    }

    #[test]
    fn self_quotient_is_one() {
        let p = RatSeries::new(vec![q(3, 2), q(-1, 5), q(7, 3), q(0, 1)]).unwrap();
        assert_eq!(p.div(&p).unwrap(), RatSeries::one(4).unwrap());
    }

    #[test]
    fn zero_constant_term_rejected() {
        let p = RatSeries::from_integers(&[1, 2]).unwrap();
        let z = RatSeries::from_integers(&[0, 1]).unwrap();
        assert_eq!(p.div(&z), Err(RingError::ZeroConstantTerm));
    }

    #[test]
    fn orders_narrow() {
        let a = RatSeries::from_integers(&[1, 1, 1, 1, 1]).unwrap();
        let b = RatSeries::from_integers(&[1, 2, 3]).unwrap();
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!(a.div(&b).unwrap().order(), 3);
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let s = RatSeries::new(vec![q(4, -6)]).unwrap();
        assert_eq!(s.coeff(0).numer(), &BigInt::from(-2));
        assert_eq!(s.coeff(0).denom(), &BigInt::from(3));
    }

    #[test]
    fn display() {
        let s = RatSeries::new(vec![q(1, 1), q(1, 2), q(-1, 12), q(0, 1)]).unwrap();
        assert_eq!(s.to_string(), "1 + z/2 - z^2/12 + O(z^4)");
    }
}
