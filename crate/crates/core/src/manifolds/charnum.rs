//! Characteristic numbers of spin^c structures and the consistency checks
//! that follow from them.

use crate::rings::is_prime;

use super::{Flag, FourManifold, ManifoldError, Rule, SpinCStructure, Verdict, VerdictKind};

/// Complex index of the spin^c Dirac operator, `(c₁² − sign)/8`.
pub fn dirac_index(m: &FourManifold, s: &SpinCStructure) -> Result<i64, ManifoldError> {
    let num = s.c1_squared - m.sign();
    if num.rem_euclid(8) != 0 {
        return Err(ManifoldError::IndexNotIntegral {
            c1_squared: s.c1_squared,
            sign: m.sign(),
        });
    }
    Ok(num / 8)
}

/// Expected dimension of the moduli space, `(c₁² − sign)/4 − (b⁺ − b₁ + 1)`.
/// It vanishes exactly when the structure comes from an almost complex one.
pub fn virtual_dimension(m: &FourManifold, s: &SpinCStructure) -> Result<i64, ManifoldError> {
    dirac_index(m, s)?;
    Ok((s.c1_squared - m.sign()) / 4 - (m.b_plus as i64 - m.b1 as i64 + 1))
}

/// `c₁² = 3·sign + 2·e`, which for connected `m` is equivalent to the stable
/// almost complex structure being unstably almost complex.
pub fn almost_complex_admissible(m: &FourManifold, s: &SpinCStructure) -> bool {
    s.c1_squared == 3 * m.sign() + 2 * m.euler_characteristic()
}

/// For `b⁺ = 0` every K-orientation satisfies `c₁² ≤ sign`. A violation
/// means the descriptor is inconsistent.
pub fn bplus_zero_constraint(
    m: &FourManifold,
    s: &SpinCStructure,
) -> Result<Verdict, ManifoldError> {
    if m.b_plus != 0 {
        return Err(ManifoldError::WrongBPlus(m.b_plus));
    }
    if s.c1_squared > m.sign() {
        return Ok(
            Verdict::new(VerdictKind::Inconsistent, Rule::KOrientationBound).with_note(format!(
                "c1^2 = {} > sign = {}: no such K-orientation exists",
                s.c1_squared,
                m.sign()
            )),
        );
    }
    Ok(Verdict::unknown())
}

/// A symplectic manifold with `b₁ = 0` and trivial canonical class has
/// signature −16 (and is then homeomorphic to K3).
pub fn morgan_szabo_check(m: &FourManifold) -> Result<Verdict, ManifoldError> {
    let symplectic = m.has(Flag::Symplectic) || m.has(Flag::Kahler);
    let trivial_canonical = m
        .spinc_list
        .iter()
        .any(|s| s.c1_trivial && s.c1_squared == 0);
    if !symplectic {
        return Err(ManifoldError::PreconditionUnmet(
            "manifold is not symplectic",
        ));
    }
    if m.b1 != 0 {
        return Err(ManifoldError::PreconditionUnmet(
            "first Betti number is not zero",
        ));
    }
    if !trivial_canonical {
        return Err(ManifoldError::PreconditionUnmet(
            "no spin^c structure with trivial first Chern class",
        ));
    }
    if m.sign() != -16 {
        return Ok(
            Verdict::new(VerdictKind::Inconsistent, Rule::MorganSzabo).with_note(format!(
                "sign = {} != -16: no such manifold exists",
                m.sign()
            )),
        );
    }
    Ok(Verdict::unknown().with_note("consistent; homeomorphic to a K3 surface"))
}

/// Congruence between the SW integer of a free `Z/p`-manifold and the sum
/// over the spin^c structures of the quotient.
pub fn galois_congruence_check(
    sw_total: i64,
    sw_quotients: &[i64],
    p: u64,
) -> Result<bool, ManifoldError> {
    if !is_prime(p) {
        return Err(ManifoldError::NotPrime(p));
    }
    let p = p as i128;
    let sum: i128 = sw_quotients.iter().map(|&x| x as i128).sum();
    Ok((sw_total as i128 - sum).rem_euclid(p) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> FourManifold {
        FourManifold::new("K3", 0, 3, 19).with_flags([Flag::Spin, Flag::Symplectic, Flag::Kahler])
    }

    fn c(c1: i64) -> SpinCStructure {
        SpinCStructure::with_c1_squared(c1)
    }

    #[test]
    fn dirac_index_examples() {
        assert_eq!(dirac_index(&k3(), &c(0)), Ok(2));
        let m = FourManifold::new("X", 0, 2, 5);
        assert_eq!(dirac_index(&m, &c(m.sign())), Ok(0));
        assert!(matches!(
            dirac_index(&k3(), &c(3)),
            Err(ManifoldError::IndexNotIntegral { .. })
        ));
    }

    #[test]
    fn virtual_dimension_examples() {
        assert_eq!(virtual_dimension(&k3(), &c(0)), Ok(0));
        let m = FourManifold::new("X", 0, 1, 4);
        assert_eq!(virtual_dimension(&m, &c(m.sign())), Ok(-2));
        let cp2 = FourManifold::new("CP2", 0, 1, 0);
        assert_eq!(virtual_dimension(&cp2, &c(9)), Ok(0));
    }

    #[test]
    fn almost_complex_examples() {
        assert!(almost_complex_admissible(&k3(), &c(0)));
        let cp2 = FourManifold::new("CP2", 0, 1, 0);
        assert!(!almost_complex_admissible(&cp2, &c(1)));
        assert!(almost_complex_admissible(&cp2, &c(9)));
    }

    #[test]
    fn bplus_zero() {
        let m1 = FourManifold::new("CP2bar", 0, 0, 1);
        assert_eq!(
            bplus_zero_constraint(&m1, &c(-1)).unwrap().kind,
            VerdictKind::Unknown
        );
        let m2 = FourManifold::new("X", 0, 0, 2);
        let v = bplus_zero_constraint(&m2, &c(0)).unwrap();
        assert_eq!(v.kind, VerdictKind::Inconsistent);
        assert_eq!(v.rule, Rule::KOrientationBound);
        let m8 = FourManifold::new("X", 0, 0, 8);
        assert_eq!(
            bplus_zero_constraint(&m8, &c(-8)).unwrap().kind,
            VerdictKind::Unknown
        );
        assert_eq!(
            bplus_zero_constraint(&k3(), &c(0)),
            Err(ManifoldError::WrongBPlus(3))
        );
    }

    #[test]
    fn morgan_szabo() {
        let trivial = SpinCStructure {
            c1_trivial: true,
            ..c(0)
        };
        let ok = k3().with_spinc(trivial.clone());
        assert_eq!(morgan_szabo_check(&ok).unwrap().kind, VerdictKind::Unknown);
        let fake = FourManifold::new("X", 0, 5, 37)
            .with_flags([Flag::Symplectic])
            .with_spinc(trivial.clone());
        let v = morgan_szabo_check(&fake).unwrap();
        assert_eq!(v.kind, VerdictKind::Inconsistent);
        assert_eq!(v.rule, Rule::MorganSzabo);
        let plain = FourManifold::new("X", 0, 3, 19).with_spinc(trivial);
        assert!(matches!(
            morgan_szabo_check(&plain),
            Err(ManifoldError::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn galois() {
        assert_eq!(galois_congruence_check(7, &[2, 2, 3], 2), Ok(true));
        assert_eq!(galois_congruence_check(1, &[0], 3), Ok(false));
        assert_eq!(galois_congruence_check(5, &[0, 0, 0], 5), Ok(true));
        assert_eq!(galois_congruence_check(-4, &[1], 5), Ok(true));
        assert_eq!(
            galois_congruence_check(1, &[1], 6),
            Err(ManifoldError::NotPrime(6))
        );
    }
}
