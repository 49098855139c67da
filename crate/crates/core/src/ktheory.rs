//! Equivariant K-theory Euler classes, the fixed-point degree relation
//! `e(W_C)·d(f^C) = a_C(f)·e(V_C)`, and the `Pin(2)` character argument that
//! yields 10/8-type bounds on the second Betti number of spin 4-manifolds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rings::{LaurentPoly, PinRingElem, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KTheoryError {
    #[error("no integral character solves the degree relation: no equivariant map with this fixed-point degree exists")]
    Inconsistent,
    #[error("representation contains a zero weight; strip fixed parts before solving the degree relation")]
    ZeroWeight,
    #[error("fixed-point degree 0 carries no constraint")]
    ZeroFixedDegree,
    #[error("signature {0} is not divisible by 16, so the manifold cannot be spin")]
    NotSpin(i64),
    #[error("signature {0} is not negative")]
    WrongSign(i64),
}

/// Lowest second Betti number at which a counterexample to the 11/8
/// conjecture is not excluded by the known Pin(2)-equivariant methods.
pub const LOWEST_OPEN_RANK_ELEVEN_EIGHTHS: i64 = 104;
/// Signature belonging to [`LOWEST_OPEN_RANK_ELEVEN_EIGHTHS`].
pub const LOWEST_OPEN_SIGNATURE: i64 = -80;

/// A complex `T`-representation `⊕ C_w`, given by its multiset of weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TRep {
    weights: Vec<i64>,
}

impl TRep {
    pub fn new(mut weights: Vec<i64>) -> Self {
        weights.sort_unstable();
        Self { weights }
    }

    /// `count` copies of the standard representation `C_1`.
    pub fn standard(count: usize) -> Self {
        Self::new(vec![1; count])
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn direct_sum(&self, other: &TRep) -> TRep {
        let mut w = self.weights.clone();
        w.extend_from_slice(&other.weights);
        TRep::new(w)
    }

    /// Character `Σ z^w`.
    pub fn character(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.weights.iter().map(|&w| (w, 1)))
    }
}

/// A `Pin(2)`-representation built from trivial lines, copies of the sign
/// line `λ`, and copies of the quaternions `H` (complex dimension 2 each).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pin2Rep {
    pub trivial_count: u32,
    pub lambda_count: u32,
    pub h_count: u32,
}

impl Pin2Rep {
    pub fn complex_dim(&self) -> u64 {
        self.trivial_count as u64 + self.lambda_count as u64 + 2 * self.h_count as u64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegreeVerdict {
    /// No equivariant map with the given data exists.
    Impossible,
    /// The nonequivariant degree equals the fixed-point degree.
    DegreeForced {
        degree: i64,
    },
    NoConstraint,
}

/// `e(V) = Σ (−1)^i Λ^i V = Π_w (1 − z^w)`.
pub fn euler_class_t(v: &TRep) -> LaurentPoly {
    // dense coefficients from z^lo, multiplied in place by each (1 − z^w)
    let lo: i64 = v.weights.iter().filter(|&&w| w < 0).sum();
    let span: i64 = v.weights.iter().map(|w| w.abs()).sum();
    let mut coeffs = vec![BigInt::zero(); span as usize + 1];
    coeffs[(-lo) as usize] = BigInt::one();
    for &w in &v.weights {
        let shift = w.unsigned_abs() as usize;
        if w > 0 {
            for i in (shift..coeffs.len()).rev() {
                let t = coeffs[i - shift].clone();
                coeffs[i] -= t;
            }
        } else {
            for i in 0..coeffs.len() - shift {
                let t = coeffs[i + shift].clone();
                coeffs[i] -= t;
            }
        }
    }
    LaurentPoly::from_dense(&coeffs).shift(lo)
}

/// `(1 − λ)^{#λ} · (2 − h)^{#H}`, or zero if a trivial summand is present.
pub fn euler_class_pin2(v: &Pin2Rep) -> PinRingElem {
    if v.trivial_count > 0 {
        return PinRingElem::zero();
    }
    let lam = PinRingElem::one_minus_lambda().pow(v.lambda_count);
    let quat = PinRingElem::two_minus_h().pow(v.h_count);
    &lam * &quat
}

/// Solves the degree relation for the `K_T`-degree of a map `S^V → S^W`
/// whose restriction to fixed points has degree `fixed_degree`:
/// `a(z) = fixed_degree · e(W) / e(V)`.
///
/// [`KTheoryError::Inconsistent`] certifies that no such equivariant map exists.
pub fn kdegree_t(fixed_degree: i64, v: &TRep, w: &TRep) -> Result<LaurentPoly, KTheoryError> {
    if v.weights.contains(&0) || w.weights.contains(&0) {
        return Err(KTheoryError::ZeroWeight);
    }
    // e is multiplicative, so weights common to V and W cancel before dividing
    let mut v_rest = Vec::new();
    let mut w_rest = w.weights.clone();
    for &x in &v.weights {
        match w_rest.iter().position(|&y| y == x) {
            Some(i) => {
                w_rest.swap_remove(i);
            }
            None => v_rest.push(x),
        }
    }
    let num = euler_class_t(&TRep::new(w_rest)).scale(&BigInt::from(fixed_degree));
    if v_rest.is_empty() {
        return Ok(num);
    }
    num.divide_exact(&euler_class_t(&TRep::new(v_rest)))
        .map_err(|e| match e {
            RingError::NotDivisible => KTheoryError::Inconsistent,
            // e(V) of a representation without zero weights is never zero
            other => unreachable!("unexpected ring error {other}"),
        })
}

/// Degree constraint for a `T`-map `S^{2n} ∧ S^{C^m} → S^{2n} ∧ S^{C^{m+l}}`
/// whose restriction to fixed points has degree `d ≠ 0`. Only `l` and `d`
/// enter the verdict.
pub fn degree1_verdict(_n: u32, _m: u32, l: i64, d: i64) -> Result<DegreeVerdict, KTheoryError> {
    if d == 0 {
        return Err(KTheoryError::ZeroFixedDegree);
    }
    Ok(match l {
        l if l < 0 => DegreeVerdict::Impossible,
        0 => DegreeVerdict::DegreeForced { degree: d },
        _ => DegreeVerdict::NoConstraint,
    })
}

fn check_spin_signature(sign: i64) -> Result<(), KTheoryError> {
    if sign >= 0 {
        return Err(KTheoryError::WrongSign(sign));
    }
    if sign % 16 != 0 {
        return Err(KTheoryError::NotSpin(sign));
    }
    Ok(())
}

/// Both sides of the `K_{Pin(2)}` degree equation
/// `½(1 − λ)^{b⁺+1} = a · (2 − h)^{dH} · (1 − λ)`, reduced to normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FurutaDerivation {
    pub sign: i64,
    pub b_plus: u32,
    /// Quaternionic dimension of the index of the squared monopole map, `−sign/8`.
    pub quaternionic_dim: u32,
    /// `(1 − λ)^{b⁺+1}` in normal form, before halving.
    pub lhs_doubled: PinRingElem,
    /// `(2 − h)^{dH}` in normal form.
    pub quaternion_euler: PinRingElem,
    /// `(2 − h)^{dH} · (1 − λ)` in normal form.
    pub rhs_unit: PinRingElem,
    /// Integer `a` with `½·lhs_doubled = a · rhs_unit`, if one exists.
    pub solution: Option<BigInt>,
}

impl FurutaDerivation {
    pub fn is_solvable(&self) -> bool {
        self.solution.is_some()
    }
}

/// Runs the character computation behind the 10/8 bound for a spin manifold
/// with the given signature and `b⁺`. The coefficient `a` is found by
/// reducing both sides with ring multiplication and matching coefficients.
pub fn furuta_solve(sign: i64, b_plus: u32) -> Result<FurutaDerivation, KTheoryError> {
    check_spin_signature(sign)?;
    let quaternionic_dim = u32::try_from(-sign / 8).map_err(|_| KTheoryError::WrongSign(sign))?;
    let oml = PinRingElem::one_minus_lambda();

    // H⁺ ⊗ C is b⁺ copies of λ; the fixed-point degree is ½(1 − λ).
    let lhs_doubled = &euler_class_pin2(&Pin2Rep {
        lambda_count: b_plus,
        ..Pin2Rep::default()
    }) * &oml;
    let quaternion_euler = euler_class_pin2(&Pin2Rep {
        h_count: quaternionic_dim,
        ..Pin2Rep::default()
    });
    let rhs_unit = &quaternion_euler * &oml;

    debug_assert!(lhs_doubled.restrict_to_torus().is_zero());
    let solution = match (
        lhs_doubled.as_multiple_of_one_minus_lambda(),
        rhs_unit.as_multiple_of_one_minus_lambda(),
    ) {
        (Some(left), Some(right)) if !right.is_zero() => {
            let (a, r) = left.div_rem(&(right * 2));
            r.is_zero().then_some(a)
        }
        _ => None,
    };
    Ok(FurutaDerivation {
        sign,
        b_plus,
        quaternionic_dim,
        lhs_doubled,
        quaternion_euler,
        rhs_unit,
        solution,
    })
}

/// `2 − (10/8)·sign`, the lower bound on `b₂` of a spin manifold with `sign < 0`.
pub fn furuta_bound(sign: i64) -> Result<i64, KTheoryError> {
    check_spin_signature(sign)?;
    Ok(2 - 10 * sign / 8)
}

/// The sharpened bound `2a − (10/8)·sign`, with `a` read off the signature
/// modulo 64, and the special value 88 at signature −64.
pub fn refined_furuta_bound(sign: i64) -> Result<i64, KTheoryError> {
    check_spin_signature(sign)?;
    if sign == -64 {
        return Ok(88);
    }
    Ok(2 * refinement_coefficient(sign) - 10 * sign / 8)
}

/// Note the asymmetry: the first case tests `sign`, the second `|sign|`.
fn refinement_coefficient(sign: i64) -> i64 {
    if sign.rem_euclid(64) == 32 {
        2
    } else if sign.abs() % 64 == 48 {
        3
    } else {
        1
    }
}

/// Smallest `b⁺` for which [`furuta_solve`] finds an integral coefficient.
pub fn minimal_b_plus(sign: i64) -> Result<u32, KTheoryError> {
    check_spin_signature(sign)?;
    let mut b_plus = 0;
    loop {
        if furuta_solve(sign, b_plus)?.is_solvable() {
            return Ok(b_plus);
        }
        b_plus += 1;
    }
}

/// `2^{b⁺ − 1 − dH}` when the exponent is nonnegative.
pub fn furuta_closed_form(sign: i64, b_plus: u32) -> Option<BigInt> {
    let exp = b_plus as i64 - 1 + sign / 8;
    (exp >= 0).then(|| BigInt::one() << exp as usize)
}
