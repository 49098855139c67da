use monopole_core::manifolds::{
    almost_complex_admissible, classify, connected_sum, dirac_index, smash, virtual_dimension,
    EngineError, Factor, FactorStatus, Flag, FourManifold, Junction, Library,
    MonopoleClassDescriptor, SpinCStructure, Summand, VerdictKind,
};
use proptest::prelude::*;

fn manifold() -> impl Strategy<Value = FourManifold> {
    (0u32..4, 0u32..12, 0u32..30, -6i64..6).prop_map(|(b1, bp, bm, shift)| {
        let m = FourManifold::new("X", b1, bp, bm);
        let c1 = m.sign() + 8 * shift;
        m.with_spinc(SpinCStructure::with_c1_squared(c1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn virtual_dimension_identity(m in manifold()) {
        let s = &m.spinc_list[0];
        let d = dirac_index(&m, s).unwrap();
        let k = virtual_dimension(&m, s).unwrap();
        prop_assert_eq!(k, 2 * d - m.b_plus as i64 + m.b1 as i64 - 1);
    }

    #[test]
    fn almost_complex_has_dimension_zero(b1 in 0u32..4, j in 0u32..6, bm in 0u32..30) {
        // c1^2 - sign = 4(1 - b1 + b+) is divisible by 8 iff b+ - b1 is odd
        let m = FourManifold::new("X", b1, 2 * j + (b1 + 1) % 2, bm);
        let s = SpinCStructure::with_c1_squared(3 * m.sign() + 2 * m.euler_characteristic());
        prop_assert!(almost_complex_admissible(&m, &s));
        prop_assert_eq!(virtual_dimension(&m, &s).unwrap(), 0);
    }

    #[test]
    fn connected_sum_monoid(a in manifold(), b in manifold(), c in manifold()) {
        let ab = connected_sum(&a, &b);
        prop_assert!(ab.same_invariants(&connected_sum(&b, &a)));
        prop_assert!(connected_sum(&ab, &c).same_invariants(&connected_sum(&a, &connected_sum(&b, &c))));
        prop_assert_eq!(ab.euler_characteristic(), a.euler_characteristic() + b.euler_characteristic() - 2);
        prop_assert_eq!(connected_sum(&a, &FourManifold::s4()), a.clone());
        prop_assert_eq!(connected_sum(&FourManifold::s4(), &a), a);
    }
}

fn library_factor(name: &str) -> Factor {
    let r = Library::bundled().get(name).unwrap().clone();
    Factor::from_manifold(r.manifold, r.status)
}

fn connected(factors: Vec<Factor>) -> MonopoleClassDescriptor {
    MonopoleClassDescriptor {
        junction: Junction::Connected,
        summands: factors.into_iter().map(Summand::Factor).collect(),
    }
}

#[test]
fn unit_smash_preserves_verdict() {
    let lib = Library::bundled();
    let names: Vec<&str> = lib.names().collect();
    for a in &names {
        for b in &names {
            let x = connected(vec![library_factor(a), library_factor(b)]);
            for unit in ["S4", "N"] {
                let y = smash(&x, &MonopoleClassDescriptor::single(library_factor(unit)));
                assert_eq!(classify(&y), classify(&x), "{a} # {b} # {unit}");
            }
        }
    }
}

#[test]
fn n0_agrees_with_sw_integer() {
    for sw in -5i64..=5 {
        for n in 2..=6u32 {
            let mut f = library_factor(&format!("E{n}"));
            f.status = FactorStatus::AlmostComplexSw(sw);
            let v = classify(&MonopoleClassDescriptor::single(f)).unwrap();
            let want = if sw != 0 {
                VerdictKind::Nonvanishing
            } else {
                VerdictKind::Unknown
            };
            assert_eq!(v.kind, want, "sw={sw} n={n}");
        }
    }
}

#[test]
fn four_elliptic_surfaces_of_genus_one() {
    let d = connected((0..4).map(|_| library_factor("E2")).collect());
    let v = classify(&d).unwrap();
    assert_eq!(v.kind, VerdictKind::Nonvanishing);
    assert_eq!(v.rule.id(), "N3");
}

#[test]
fn spin_flag_survives_only_when_shared() {
    let k3 = library_factor("K3").manifold;
    let cp2 = library_factor("CP2").manifold;
    assert!(connected_sum(&k3, &k3).has(Flag::Spin));
    assert!(!connected_sum(&k3, &cp2).has(Flag::Spin));
    assert!(matches!(
        classify(&MonopoleClassDescriptor {
            junction: Junction::AlongMinusTwo,
            summands: vec![],
        }),
        Err(EngineError::MinusTwoArity(0))
    ));
}
