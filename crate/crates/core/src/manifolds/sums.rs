//! Descriptor-level bookkeeping for connected sums and sums along −2-spheres.

use std::collections::BTreeSet;

use super::{Flag, FourManifold, ManifoldError, SpinCStructure};

/// `a # b`. Betti numbers add, spin survives only if both summands are spin,
/// and spin^c structures pair up with `c₁²` adding. A summand with
/// `b₁ = b⁺ = b⁻ = 0` is treated as the unit.
pub fn connected_sum(a: &FourManifold, b: &FourManifold) -> FourManifold {
    if b.is_sphere_like() && b.flags.contains(&Flag::SimplyConnected) {
        return a.clone();
    }
    if a.is_sphere_like() && a.flags.contains(&Flag::SimplyConnected) {
        return b.clone();
    }
    let mut flags = BTreeSet::new();
    for f in [Flag::Spin, Flag::SimplyConnected] {
        if a.has(f) && b.has(f) {
            flags.insert(f);
        }
    }
    let spinc_list = a
        .spinc_list
        .iter()
        .flat_map(|sa| {
            b.spinc_list
                .iter()
                .map(move |sb| SpinCStructure::with_c1_squared(sa.c1_squared + sb.c1_squared))
        })
        .collect();
    let out = FourManifold {
        name: format!("{} # {}", a.name, b.name),
        b1: a.b1 + b.b1,
        b_plus: a.b_plus + b.b_plus,
        b_minus: a.b_minus + b.b_minus,
        flags,
        spinc_list,
        minus_two_spheres: Vec::new(),
        nonzero_c1_span_semidefinite: None,
    };
    debug_assert_eq!(
        out.euler_characteristic(),
        a.euler_characteristic() + b.euler_characteristic() - 2
    );
    out
}

/// Sum of `a` and `b` along their designated −2-spheres.
///
/// Each −2-sphere neighbourhood has signature −1 and Euler characteristic 2,
/// and the gluing region `RP³` has Euler characteristic 0, so
/// `sign = sign(a) + sign(b) + 2` and `e = e(a) + e(b) − 4`; `b₁` adds.
///
/// Spin^c structures pair when one `c₁` evaluates to 2 and the other to 0
/// (mod 4) on the respective spheres. Additivity of the Dirac index under the
/// gluing identification then gives `c₁² = c₁²(a) + c₁²(b) + 2`.
pub fn sum_along_minus2(a: &FourManifold, b: &FourManifold) -> Result<FourManifold, ManifoldError> {
    let sa = a
        .designated_sphere()
        .ok_or_else(|| ManifoldError::NoDesignatedSphere(a.name.clone()))?;
    let sb = b
        .designated_sphere()
        .ok_or_else(|| ManifoldError::NoDesignatedSphere(b.name.clone()))?;

    let sign = a.sign() + b.sign() + 2;
    let euler = a.euler_characteristic() + b.euler_characteristic() - 4;
    let b1 = a.b1 as i64 + b.b1 as i64;
    let b2 = euler - 2 + 2 * b1;
    let (b_plus, b_minus) = ((b2 + sign) / 2, (b2 - sign) / 2);
    if b_plus < 0 || b_minus < 0 {
        return Err(ManifoldError::InvalidBookkeeping { b_plus, b_minus });
    }

    let mut spinc_list = Vec::new();
    for x in &a.spinc_list {
        let Some(ex) = x.evaluation_on(&sa.name) else {
            continue;
        };
        for y in &b.spinc_list {
            let Some(ey) = y.evaluation_on(&sb.name) else {
                continue;
            };
            let pair = (ex.rem_euclid(4), ey.rem_euclid(4));
            if pair == (2, 0) || pair == (0, 2) {
                spinc_list.push(SpinCStructure::with_c1_squared(
                    x.c1_squared + y.c1_squared + 2,
                ));
            }
        }
    }

    Ok(FourManifold {
        name: format!("{} #_2 {}", a.name, b.name),
        b1: b1 as u32,
        b_plus: b_plus as u32,
        b_minus: b_minus as u32,
        flags: BTreeSet::new(),
        spinc_list,
        minus_two_spheres: Vec::new(),
        nonzero_c1_span_semidefinite: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifolds::MinusTwoSphere;
    use std::collections::BTreeMap;

    fn k3() -> FourManifold {
        FourManifold::new("K3", 0, 3, 19)
            .with_flags([Flag::Spin, Flag::Symplectic, Flag::SimplyConnected])
            .with_spinc(SpinCStructure::with_c1_squared(0))
    }

    fn with_sphere(mut m: FourManifold) -> FourManifold {
        m.minus_two_spheres.push(MinusTwoSphere {
            name: "C".into(),
            nonzero_evaluations: None,
        });
        m
    }

    #[test]
    fn sphere_is_unit() {
        let x = k3();
        assert_eq!(connected_sum(&x, &FourManifold::s4()), x);
        assert_eq!(connected_sum(&FourManifold::s4(), &x), x);
    }

    #[test]
    fn k3_sum_k3() {
        let s = connected_sum(&k3(), &k3());
        assert_eq!((s.b_plus, s.b_minus, s.sign()), (6, 38, -32));
        assert!(s.has(Flag::Spin));
        assert!(!s.has(Flag::Symplectic));
        assert_eq!(s.spinc_list, vec![SpinCStructure::with_c1_squared(0)]);
    }

    #[test]
    fn four_k3() {
        let s = (0..3).fold(k3(), |acc, _| connected_sum(&acc, &k3()));
        assert_eq!(s.b_plus, 12);
    }

    #[test]
    fn minus_two_bookkeeping() {
        // sign −17 each: b⁺ = 1, b⁻ = 18
        let a = with_sphere(FourManifold::new("A", 0, 1, 18));
        let s = sum_along_minus2(&a, &a).unwrap();
        assert_eq!(s.sign(), -32);
        assert_eq!(s.euler_characteristic(), 2 * a.euler_characteristic() - 4);

        // e = 4 each: b⁺ = 0, b⁻ = 2
        let n = with_sphere(FourManifold::new("N", 0, 0, 2));
        let s = sum_along_minus2(&n, &n).unwrap();
        assert_eq!(s.euler_characteristic(), 4);
        assert_eq!(s.b1, 0);
        assert_eq!(s.sign(), -2);
    }

    #[test]
    fn minus_two_needs_spheres() {
        assert_eq!(
            sum_along_minus2(&k3(), &with_sphere(k3())),
            Err(ManifoldError::NoDesignatedSphere("K3".into()))
        );
    }

    #[test]
    fn minus_two_spinc_pairing() {
        let eval = |v: i64| {
            let mut s = SpinCStructure::with_c1_squared(0);
            s.c1_evaluations = Some(BTreeMap::from([("C".to_string(), v)]));
            s
        };
        let mut a = with_sphere(FourManifold::new("A", 0, 3, 19));
        a.spinc_list = vec![eval(0), eval(2)];
        let mut b = with_sphere(FourManifold::new("B", 0, 3, 19));
        b.spinc_list = vec![eval(0), eval(6)];
        let s = sum_along_minus2(&a, &b).unwrap();
        // (0,6) and (2,0) pair; (0,0) and (2,6) do not
        assert_eq!(s.spinc_list.len(), 2);
        assert!(s.spinc_list.iter().all(|x| x.c1_squared == 2));
        assert!(s.validate().is_ok());
    }
}
