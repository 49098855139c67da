use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::ManifoldError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flag {
    Spin,
    Symplectic,
    Minimal,
    Kahler,
    SimplyConnected,
    /// Every spin^c structure with nontrivial refined invariant is almost
    /// complex. The connected-sum vanishing rules accept this in place of
    /// `Symplectic`.
    AllNonzeroClassesAlmostComplex,
}

/// A spin^c structure, recorded through the numbers the engine needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinCStructure {
    pub c1_squared: i64,
    /// Values of `c₁` on named −2-spheres.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1_evaluations: Option<BTreeMap<String, i64>>,
    /// `c₁` is torsion, e.g. the canonical class of a manifold with trivial
    /// canonical bundle.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub c1_trivial: bool,
}

impl SpinCStructure {
    pub fn with_c1_squared(c1_squared: i64) -> Self {
        Self {
            c1_squared,
            ..Self::default()
        }
    }

    pub fn evaluation_on(&self, sphere: &str) -> Option<i64> {
        self.c1_evaluations.as_ref()?.get(sphere).copied()
    }
}

/// A designated smoothly embedded sphere of self-intersection −2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinusTwoSphere {
    pub name: String,
    /// Values on this sphere of `c₁` of all spin^c structures whose refined
    /// invariant is nonzero, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonzero_evaluations: Option<Vec<i64>>,
}

/// Numeric descriptor of a closed oriented connected 4-manifold.
///
/// Signature, second Betti number and Euler characteristic are derived from
/// `b₁`, `b⁺` and `b⁻`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourManifold {
    pub name: String,
    pub b1: u32,
    pub b_plus: u32,
    pub b_minus: u32,
    #[serde(default)]
    pub flags: BTreeSet<Flag>,
    #[serde(default, rename = "spinc")]
    pub spinc_list: Vec<SpinCStructure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub minus_two_spheres: Vec<MinusTwoSphere>,
    /// Whether the first Chern classes of the spin^c structures with nonzero
    /// refined invariant span a subspace on which the cup product is
    /// positive semi-definite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonzero_c1_span_semidefinite: Option<bool>,
}

impl FourManifold {
    pub fn new(name: impl Into<String>, b1: u32, b_plus: u32, b_minus: u32) -> Self {
        Self {
            name: name.into(),
            b1,
            b_plus,
            b_minus,
            flags: BTreeSet::new(),
            spinc_list: Vec::new(),
            minus_two_spheres: Vec::new(),
            nonzero_c1_span_semidefinite: None,
        }
    }

    pub fn with_flags(mut self, flags: impl IntoIterator<Item = Flag>) -> Self {
        self.flags.extend(flags);
        self
    }

    pub fn with_spinc(mut self, s: SpinCStructure) -> Self {
        self.spinc_list.push(s);
        self
    }

    /// The 4-sphere: the unit for connected sum.
    pub fn s4() -> Self {
        Self::new("S4", 0, 0, 0)
            .with_flags([Flag::Spin, Flag::SimplyConnected])
            .with_spinc(SpinCStructure::with_c1_squared(0))
    }

    pub fn sign(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }

    pub fn b2(&self) -> i64 {
        self.b_plus as i64 + self.b_minus as i64
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.b1 as i64 + self.b2()
    }

    pub fn has(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }

    /// Symplectic, Kähler, or the weaker almost-complex hypothesis.
    pub fn is_symplectic_like(&self) -> bool {
        self.has(Flag::Symplectic)
            || self.has(Flag::Kahler)
            || self.has(Flag::AllNonzeroClassesAlmostComplex)
    }

    /// Descriptor of a rational homology 4-sphere with `b₁ = 0`, which acts as
    /// the identity under connected sum at the level of these invariants.
    pub fn is_sphere_like(&self) -> bool {
        self.b1 == 0 && self.b_plus == 0 && self.b_minus == 0
    }

    pub fn designated_sphere(&self) -> Option<&MinusTwoSphere> {
        self.minus_two_spheres.first()
    }

    /// Compares everything except the name, with spin^c lists as multisets.
    pub fn same_invariants(&self, other: &Self) -> bool {
        let sorted = |m: &Self| {
            let mut v: Vec<SpinCStructure> = m.spinc_list.clone();
            v.sort_by(|a, b| {
                (a.c1_squared, &a.c1_evaluations, a.c1_trivial).cmp(&(
                    b.c1_squared,
                    &b.c1_evaluations,
                    b.c1_trivial,
                ))
            });
            v
        };
        self.b1 == other.b1
            && self.b_plus == other.b_plus
            && self.b_minus == other.b_minus
            && self.flags == other.flags
            && self.minus_two_spheres == other.minus_two_spheres
            && self.nonzero_c1_span_semidefinite == other.nonzero_c1_span_semidefinite
            && sorted(self) == sorted(other)
    }

    /// Checks the descriptor against the constraints every closed oriented
    /// 4-manifold with the stated flags satisfies.
    pub fn validate(&self) -> Result<(), ManifoldError> {
        let name = || self.name.clone();
        if self.has(Flag::SimplyConnected) && self.b1 != 0 {
            return Err(ManifoldError::SimplyConnectedWithB1 { name: name() });
        }
        if self.has(Flag::Spin) && self.sign() % 16 != 0 {
            return Err(ManifoldError::SpinSignature {
                name: name(),
                sign: self.sign(),
            });
        }
        if self.has(Flag::Symplectic) || self.has(Flag::Kahler) {
            // ω ∧ ω > 0, and an almost complex structure needs b⁺ − b₁ odd
            if self.b_plus == 0 || (self.b_plus + self.b1).is_multiple_of(2) {
                return Err(ManifoldError::SymplecticBetti {
                    name: name(),
                    b1: self.b1,
                    b_plus: self.b_plus,
                });
            }
        }
        if self.has(Flag::AllNonzeroClassesAlmostComplex) && self.b1 == 0 && self.b_plus == 0 {
            return Err(ManifoldError::AlmostComplexFlagWithoutBPlus { name: name() });
        }
        for s in &self.spinc_list {
            if (s.c1_squared - self.sign()).rem_euclid(8) != 0 {
                return Err(ManifoldError::IndexNotIntegral {
                    c1_squared: s.c1_squared,
                    sign: self.sign(),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_numbers() {
        let k3 = FourManifold::new("K3", 0, 3, 19);
        assert_eq!(k3.sign(), -16);
        assert_eq!(k3.b2(), 22);
        assert_eq!(k3.euler_characteristic(), 24);
    }

    #[test]
    fn validation_catches_bad_descriptors() {
        let bad_spin = FourManifold::new("X", 0, 1, 9).with_flags([Flag::Spin]);
        assert!(matches!(
            bad_spin.validate(),
            Err(ManifoldError::SpinSignature { sign: -8, .. })
        ));
        let bad_pi1 = FourManifold::new("X", 2, 1, 1).with_flags([Flag::SimplyConnected]);
        assert!(bad_pi1.validate().is_err());
        let bad_index =
            FourManifold::new("X", 0, 3, 19).with_spinc(SpinCStructure::with_c1_squared(4));
        assert!(matches!(
            bad_index.validate(),
            Err(ManifoldError::IndexNotIntegral { .. })
        ));
        let bad_symp = FourManifold::new("X", 0, 2, 3).with_flags([Flag::Symplectic]);
        assert!(bad_symp.validate().is_err());
        let neg_def =
            FourManifold::new("X", 0, 0, 3).with_flags([Flag::AllNonzeroClassesAlmostComplex]);
        assert!(neg_def.validate().is_err());
        assert!(FourManifold::s4().validate().is_ok());
    }

    #[test]
    fn json_shape() {
        let m = FourManifold::new("CP2", 0, 1, 0)
            .with_flags([Flag::Symplectic, Flag::Kahler])
            .with_spinc(SpinCStructure::with_c1_squared(9));
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"name":"CP2","b1":0,"b_plus":1,"b_minus":0,"flags":["Symplectic","Kahler"],"spinc":[{"c1_squared":9}]}"#
        );
        let back: FourManifold = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }
}
