//! The representation ring of `Pin(2)`, presented as `Z[λ, h] / (λ² − 1, λh − h)`.
//!
//! `λ` is the sign character on which `j` acts by −1 and `h` is the
//! quaternions. With the two relations applied exhaustively every element has
//! the unique normal form `c₀ + c₀′λ + Σ_{k≥1} c_k hᵏ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PinRingElem {
    unit: BigInt,
    lambda: BigInt,
    /// Coefficients of `h^k` for `k >= 1`; zero entries are never stored.
    h: BTreeMap<u32, BigInt>,
}

impl PinRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self {
            unit: c.into(),
            ..Self::default()
        }
    }

    pub fn lambda() -> Self {
        Self {
            lambda: BigInt::one(),
            ..Self::default()
        }
    }

    pub fn h() -> Self {
        Self::h_power(1, 1)
    }

    /// `c * h^k`; `k = 0` gives the constant `c`.
    pub fn h_power(c: impl Into<BigInt>, k: u32) -> Self {
        let c = c.into();
        if k == 0 {
            return Self::constant(c);
        }
        let mut out = Self::zero();
        out.add_h(k, c);
        out
    }

    /// Builds an element directly from normal-form coefficients.
    pub fn from_parts<I, C>(unit: impl Into<BigInt>, lambda: impl Into<BigInt>, h: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self {
            unit: unit.into(),
            lambda: lambda.into(),
            h: BTreeMap::new(),
        };
        for (k, c) in h {
            let c = c.into();
            if k == 0 {
                out.unit += c;
            } else {
                out.add_h(k, c);
            }
        }
        out
    }

    /// `1 − λ`, the Euler class of the sign representation.
    pub fn one_minus_lambda() -> Self {
        Self::from_parts(1, -1, std::iter::empty::<(u32, i32)>())
    }

    /// `2 − h`, the Euler class of the quaternions.
    pub fn two_minus_h() -> Self {
        Self::from_parts(2, 0, [(1u32, -1)])
    }

    fn add_h(&mut self, k: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.h.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.h.remove(&k);
        }
    }

    pub fn unit_coeff(&self) -> &BigInt {
        &self.unit
    }

    pub fn lambda_coeff(&self) -> &BigInt {
        &self.lambda
    }

    pub fn h_coeff(&self, k: u32) -> BigInt {
        match k {
            0 => self.unit.clone(),
            _ => self.h.get(&k).cloned().unwrap_or_default(),
        }
    }

    pub fn h_terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.h.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.lambda.is_zero() && self.h.is_empty()
    }

    /// If `self = c·(1 − λ)` for an integer `c`, returns `c`.
    pub fn as_multiple_of_one_minus_lambda(&self) -> Option<BigInt> {
        (self.h.is_empty() && self.lambda == -&self.unit).then(|| self.unit.clone())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            unit: &self.unit * s,
            lambda: &self.lambda * s,
            h: self.h.iter().map(|(k, c)| (*k, c * s)).collect(),
        }
    }

    /// Repeated multiplication; every intermediate product is reduced.
    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Restriction to the maximal torus: `λ ↦ 1`, `h ↦ z + z⁻¹`.
    pub fn restrict_to_torus(&self) -> LaurentPoly {
        let mut out = LaurentPoly::constant(&self.unit + &self.lambda);
        if self.h.is_empty() {
            return out;
        }
        let h = LaurentPoly::from_terms([(-1, 1), (1, 1)]);
        let mut power = LaurentPoly::one();
        let mut current = 0u32;
        for (k, c) in &self.h {
            power = &power * &h.pow(k - current);
            current = *k;
            out = &out + &power.scale(c);
        }
        out
    }

    /// Character value at `j`: `λ(j) = −1`, `h(j) = 0`.
    pub fn eval_at_j(&self) -> BigInt {
        &self.unit - &self.lambda
    }
}

impl fmt::Display for PinRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&BigInt, String)> = Vec::new();
        if !self.unit.is_zero() {
            terms.push((&self.unit, String::new()));
        }
        if !self.lambda.is_zero() {
            terms.push((&self.lambda, "λ".into()));
        }
        for (k, c) in &self.h {
            let sym = if *k == 1 {
                "h".into()
            } else {
                format!("h^{k}")
            };
            terms.push((c, sym));
        }
        for (i, (c, sym)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if sym.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&sym)?;
            } else {
                write!(f, "{mag}{sym}")?;
            }
        }
        Ok(())
    }
}

impl Add for &PinRingElem {
    type Output = PinRingElem;
    fn add(self, rhs: &PinRingElem) -> PinRingElem {
        let mut out = self.clone();
        out.unit += &rhs.unit;
        out.lambda += &rhs.lambda;
        for (k, c) in &rhs.h {
            out.add_h(*k, c.clone());
        }
        out
    }
}

impl Neg for &PinRingElem {
    type Output = PinRingElem;
    fn neg(self) -> PinRingElem {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &PinRingElem {
    type Output = PinRingElem;
    fn sub(self, rhs: &PinRingElem) -> PinRingElem {
        self + &(-rhs)
    }
}

impl Mul for &PinRingElem {
    type Output = PinRingElem;
    /// `(a₀ + a₁λ + A)(b₀ + b₁λ + B)` with `λ² = 1` and `λA = A`.
    fn mul(self, rhs: &PinRingElem) -> PinRingElem {
        let (a0, a1, b0, b1) = (&self.unit, &self.lambda, &rhs.unit, &rhs.lambda);
        let mut out = PinRingElem {
            unit: a0 * b0 + a1 * b1,
            lambda: a0 * b1 + a1 * b0,
            h: BTreeMap::new(),
        };
        let a_sum = a0 + a1;
        let b_sum = b0 + b1;
        for (k, c) in &rhs.h {
            out.add_h(*k, &a_sum * c);
        }
        for (k, c) in &self.h {
            out.add_h(*k, &b_sum * c);
        }
        for (ka, ca) in &self.h {
            for (kb, cb) in &rhs.h {
                out.add_h(ka + kb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for PinRingElem {
            type Output = PinRingElem;
            fn $m(self, rhs: PinRingElem) -> PinRingElem {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for PinRingElem {
    type Output = PinRingElem;
    fn neg(self) -> PinRingElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oml() -> PinRingElem {
        PinRingElem::one_minus_lambda()
    }

    #[test]
    fn lambda_squared_is_one() {
        let l = PinRingElem::lambda();
        assert_eq!(&l * &l, PinRingElem::one());
    }

    #[test]
    fn one_minus_lambda_squared() {
        assert_eq!(&oml() * &oml(), oml().scale(&BigInt::from(2)));
        assert_eq!((&oml() * &oml()).to_string(), "2 - 2λ");
    }

    #[test]
    fn h_kills_one_minus_lambda() {
        assert!((&PinRingElem::h() * &oml()).is_zero());
    }

    #[test]
    fn two_minus_h_times_one_minus_lambda() {
        let prod = &PinRingElem::two_minus_h() * &oml();
        assert_eq!(prod, oml().scale(&BigInt::from(2)));
        // independent check through both character maps
        assert!(prod.restrict_to_torus().is_zero());
        assert_eq!(prod.eval_at_j(), BigInt::from(4));
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(
            PinRingElem::lambda().restrict_to_torus(),
            LaurentPoly::one()
        );
        assert!(oml().restrict_to_torus().is_zero());
        let r = PinRingElem::two_minus_h().restrict_to_torus();
        assert_eq!(r, LaurentPoly::from_terms([(-1, -1), (0, 2), (1, -1)]));
        let alt = &LaurentPoly::from_dense(&[1, -1]).pow(2) * &LaurentPoly::monomial(-1, -1);
        assert_eq!(r, alt);
    }

    #[test]
    fn eval_at_j_examples() {
        assert_eq!(oml().eval_at_j(), BigInt::from(2));
        assert_eq!(
            PinRingElem::two_minus_h().pow(10).eval_at_j(),
            BigInt::from(1024)
        );
        assert_eq!(oml().pow(6).eval_at_j(), BigInt::from(64));
    }

    #[test]
    fn display_forms() {
        assert_eq!(PinRingElem::zero().to_string(), "0");
        let x = PinRingElem::from_parts(0, -1, [(1u32, 3), (4, -1)]);
        assert_eq!(x.to_string(), "-λ + 3h - h^4");
        assert_eq!(
            PinRingElem::two_minus_h().pow(2).to_string(),
            "4 - 4h + h^2"
        );
    }

    #[test]
    fn multiple_of_one_minus_lambda() {
        assert_eq!(
            oml()
                .scale(&BigInt::from(-7))
                .as_multiple_of_one_minus_lambda(),
            Some(BigInt::from(-7))
        );
        assert_eq!(
            PinRingElem::two_minus_h().as_multiple_of_one_minus_lambda(),
            None
        );
        assert_eq!(
            PinRingElem::zero().as_multiple_of_one_minus_lambda(),
            Some(BigInt::zero())
        );
    }
}
