//! Monopole-class descriptors and the decision engine.
//!
//! A descriptor records the summands of a connected sum (or a sum along
//! −2-spheres) together with what is known about each summand's refined
//! invariant. [`classify`] applies a fixed, ordered table of vanishing and
//! non-vanishing rules. The rules are sufficient conditions only, so anything
//! they do not decide stays [`VerdictKind::Unknown`].

use serde::{Deserialize, Serialize};

use super::charnum::{almost_complex_admissible, bplus_zero_constraint, morgan_szabo_check};
use super::sums::{connected_sum, sum_along_minus2};
use super::{Flag, FourManifold, ManifoldError, Rule, SpinCStructure, Verdict, VerdictKind};

/// What is known about the refined invariants of one summand.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorStatus {
    /// Monopole class is the identity (S⁴, or conj(CP²#CP²) with one of its
    /// four distinguished spin^c structures).
    Unit,
    /// The chosen spin^c structure is almost complex with this SW integer.
    AlmostComplexSw(i64),
    /// Some spin^c structure has nonvanishing refined invariant.
    KnownNonzero,
    /// Refined invariants vanish for every spin^c structure.
    KnownZero,
    #[default]
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub manifold: FourManifold,
    pub spinc: SpinCStructure,
    pub status: FactorStatus,
}

impl Factor {
    pub fn new(manifold: FourManifold, spinc: SpinCStructure, status: FactorStatus) -> Self {
        Self {
            manifold,
            spinc,
            status,
        }
    }

    /// Uses the first listed spin^c structure (or `c₁² = sign` if none is listed).
    pub fn from_manifold(manifold: FourManifold, status: FactorStatus) -> Self {
        let spinc = manifold
            .spinc_list
            .first()
            .cloned()
            .unwrap_or_else(|| SpinCStructure::with_c1_squared(manifold.sign()));
        Self::new(manifold, spinc, status)
    }

    fn known_nonzero(&self) -> bool {
        match self.status {
            FactorStatus::KnownNonzero | FactorStatus::Unit => true,
            FactorStatus::AlmostComplexSw(sw) => sw != 0 && self.manifold.b_plus > 1,
            _ => false,
        }
    }

    fn odd_almost_complex_3_mod_4(&self) -> bool {
        matches!(self.status, FactorStatus::AlmostComplexSw(sw) if sw % 2 != 0)
            && self.manifold.b_plus % 4 == 3
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Junction {
    #[default]
    Connected,
    AlongMinusTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Summand {
    Factor(Factor),
    Nested(MonopoleClassDescriptor),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonopoleClassDescriptor {
    pub junction: Junction,
    pub summands: Vec<Summand>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error(
        "rule conflict: {vanishing} and {nonvanishing} both fire; the descriptor is inconsistent"
    )]
    RuleConflict { vanishing: Rule, nonvanishing: Rule },
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
    #[error("a sum along -2-spheres needs exactly two summands, got {0}")]
    MinusTwoArity(usize),
}

impl MonopoleClassDescriptor {
    pub fn single(factor: Factor) -> Self {
        Self {
            junction: Junction::Connected,
            summands: vec![Summand::Factor(factor)],
        }
    }

    /// The monopole class of `S⁴`.
    pub fn unit() -> Self {
        Self {
            junction: Junction::Connected,
            summands: Vec::new(),
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = &Factor> {
        self.summands.iter().filter_map(|s| match s {
            Summand::Factor(f) => Some(f),
            Summand::Nested(_) => None,
        })
    }

    /// A `KnownZero` summand absorbs the whole smash product.
    pub fn is_known_zero(&self) -> bool {
        self.factors().any(|f| f.status == FactorStatus::KnownZero)
    }

    fn into_connected_summands(self) -> Vec<Summand> {
        match self.junction {
            Junction::Connected => self.summands,
            Junction::AlongMinusTwo => vec![Summand::Nested(self)],
        }
    }

    fn into_single_summand(self) -> Summand {
        if self.summands.len() == 1 {
            return self.summands.into_iter().next().expect("one summand");
        }
        Summand::Nested(self)
    }

    /// The underlying manifold of the whole sum, with the combined spin^c
    /// structure of the chosen factor structures.
    pub fn total(&self) -> Result<Factor, EngineError> {
        let parts: Vec<Factor> = self
            .summands
            .iter()
            .map(|s| match s {
                Summand::Factor(f) => Ok(f.clone()),
                Summand::Nested(d) => d.total(),
            })
            .collect::<Result<_, _>>()?;
        match self.junction {
            Junction::Connected => Ok(parts
                .into_iter()
                .reduce(|a, b| {
                    let manifold = connected_sum(&a.manifold, &b.manifold);
                    let spinc =
                        SpinCStructure::with_c1_squared(a.spinc.c1_squared + b.spinc.c1_squared);
                    Factor::new(manifold, spinc, FactorStatus::Unknown)
                })
                .unwrap_or_else(|| Factor::from_manifold(FourManifold::s4(), FactorStatus::Unit))),
            Junction::AlongMinusTwo => {
                let [a, b] = <[Factor; 2]>::try_from(parts)
                    .map_err(|p| EngineError::MinusTwoArity(p.len()))?;
                let manifold = sum_along_minus2(&a.manifold, &b.manifold)?;
                let spinc =
                    SpinCStructure::with_c1_squared(a.spinc.c1_squared + b.spinc.c1_squared + 2);
                Ok(Factor::new(manifold, spinc, FactorStatus::Unknown))
            }
        }
    }
}

/// Monopole class of a connected sum: the smash product of the summands'
/// classes. Factor lists concatenate and unit factors drop out.
pub fn smash(a: &MonopoleClassDescriptor, b: &MonopoleClassDescriptor) -> MonopoleClassDescriptor {
    let summands = a
        .clone()
        .into_connected_summands()
        .into_iter()
        .chain(b.clone().into_connected_summands())
        .filter(|s| !matches!(s, Summand::Factor(f) if f.status == FactorStatus::Unit))
        .collect();
    MonopoleClassDescriptor {
        junction: Junction::Connected,
        summands,
    }
}

/// Monopole class of the sum along designated −2-spheres.
pub fn smash_along_minus2(
    a: &MonopoleClassDescriptor,
    b: &MonopoleClassDescriptor,
) -> MonopoleClassDescriptor {
    MonopoleClassDescriptor {
        junction: Junction::AlongMinusTwo,
        summands: vec![
            a.clone().into_single_summand(),
            b.clone().into_single_summand(),
        ],
    }
}

/// Checks one summand for contradictions between its data and its status.
fn factor_consistency(f: &Factor) -> Result<Option<Verdict>, EngineError> {
    let m = &f.manifold;
    m.validate()?;
    if (f.spinc.c1_squared - m.sign()).rem_euclid(8) != 0 {
        return Err(ManifoldError::IndexNotIntegral {
            c1_squared: f.spinc.c1_squared,
            sign: m.sign(),
        }
        .into());
    }
    if m.b_plus == 0 {
        let v = bplus_zero_constraint(m, &f.spinc)?;
        if v.is_inconsistent() {
            return Ok(Some(v));
        }
        if f.status == FactorStatus::KnownZero {
            return Ok(Some(
                Verdict::new(VerdictKind::Inconsistent, Rule::StatusConsistency).with_note(
                    format!(
                    "{} has b+ = 0, so some spin^c structure has nonvanishing refined invariant",
                    m.name
                ),
                ),
            ));
        }
    }
    if let Ok(v) = morgan_szabo_check(m) {
        if v.is_inconsistent() {
            return Ok(Some(v));
        }
    }
    if let FactorStatus::AlmostComplexSw(_) = f.status {
        if !almost_complex_admissible(m, &f.spinc) {
            return Ok(Some(
                Verdict::new(VerdictKind::Inconsistent, Rule::StatusConsistency).with_note(
                    format!(
                        "{}: c1^2 = {} is not 3 sign + 2 e = {}",
                        m.name,
                        f.spinc.c1_squared,
                        3 * m.sign() + 2 * m.euler_characteristic()
                    ),
                ),
            ));
        }
    }
    Ok(None)
}

/// Collapses every summand to a plain factor, classifying nested sums first.
fn resolve(d: &MonopoleClassDescriptor) -> Result<Result<Vec<Factor>, Verdict>, EngineError> {
    let mut out = Vec::with_capacity(d.summands.len());
    for s in &d.summands {
        match s {
            Summand::Factor(f) => {
                if let Some(bad) = factor_consistency(f)? {
                    return Ok(Err(bad));
                }
                out.push(f.clone());
            }
            Summand::Nested(inner) => {
                let verdict = classify(inner)?;
                let status = match verdict.kind {
                    VerdictKind::Inconsistent => return Ok(Err(verdict)),
                    VerdictKind::Vanishes => FactorStatus::KnownZero,
                    VerdictKind::Nonvanishing => FactorStatus::KnownNonzero,
                    VerdictKind::Unknown => FactorStatus::Unknown,
                };
                let mut total = inner.total()?;
                total.status = status;
                out.push(total);
            }
        }
    }
    Ok(Ok(out))
}

/// Applies the rule table to a descriptor.
///
/// Descriptor inconsistencies (a violated K-orientation bound, the
/// Morgan–Szabó constraint, or a status that contradicts the data) are
/// reported as [`VerdictKind::Inconsistent`]. If a vanishing and a
/// non-vanishing rule both fire, [`EngineError::RuleConflict`] is returned.
pub fn classify(d: &MonopoleClassDescriptor) -> Result<Verdict, EngineError> {
    let factors = match resolve(d)? {
        Ok(f) => f,
        Err(inconsistent) => return Ok(inconsistent),
    };
    let verdict = match d.junction {
        Junction::Connected => classify_connected(factors)?,
        Junction::AlongMinusTwo => classify_minus_two(factors)?,
    };
    if verdict.kind == VerdictKind::Vanishes {
        let total = d.total()?.manifold;
        if total.b_plus == 0 {
            return Ok(
                Verdict::new(VerdictKind::Inconsistent, Rule::StatusConsistency).with_note(
                    format!(
                        "{} fires on {}, which has b+ = 0",
                        verdict.rule.id(),
                        total.name
                    ),
                ),
            );
        }
    }
    Ok(verdict)
}

fn classify_connected(factors: Vec<Factor>) -> Result<Verdict, EngineError> {
    let factors: Vec<Factor> = factors
        .into_iter()
        .filter(|f| f.status != FactorStatus::Unit)
        .collect();

    match factors.as_slice() {
        [] => return Ok(Verdict::new(VerdictKind::Nonvanishing, Rule::Unit)),
        [f] => {
            return Ok(match &f.status {
                FactorStatus::KnownZero => Verdict::new(VerdictKind::Vanishes, Rule::Declared),
                FactorStatus::KnownNonzero => {
                    Verdict::new(VerdictKind::Nonvanishing, Rule::Declared)
                }
                FactorStatus::AlmostComplexSw(sw) if *sw != 0 && f.manifold.b_plus > 1 => {
                    Verdict::new(VerdictKind::Nonvanishing, Rule::N0)
                }
                _ => Verdict::unknown(),
            })
        }
        _ => {}
    }

    let n = factors.len();
    let total_b1: u64 = factors.iter().map(|f| f.manifold.b1 as u64).sum();
    let total_b_plus: u64 = factors.iter().map(|f| f.manifold.b_plus as u64).sum();
    let symplectic_b1_zero: Vec<&Factor> = factors
        .iter()
        .filter(|f| f.manifold.is_symplectic_like() && f.manifold.b1 == 0)
        .collect();
    let all_symplectic = factors.iter().all(|f| f.manifold.is_symplectic_like());

    let mut vanishing = Vec::new();
    if factors.iter().any(|f| f.status == FactorStatus::KnownZero) {
        vanishing.push(Rule::V1);
    }
    if symplectic_b1_zero.len() >= 2
        && symplectic_b1_zero
            .iter()
            .any(|f| f.manifold.b_plus % 4 == 1)
    {
        vanishing.push(Rule::V2);
    }
    if n == 4 && all_symplectic && total_b1 == 0 && total_b_plus % 8 != 4 {
        vanishing.push(Rule::V3);
    }
    if n == 5 && all_symplectic && total_b1 == 0 {
        vanishing.push(Rule::V4);
    }

    let mut nonvanishing = Vec::new();
    let n1 = (0..n).any(|i| {
        factors[i].known_nonzero()
            && factors
                .iter()
                .enumerate()
                .all(|(j, f)| j == i || f.manifold.b_plus == 0)
    });
    if n1 {
        nonvanishing.push(Rule::N1);
    }
    let all_odd_3_mod_4 = factors.iter().all(Factor::odd_almost_complex_3_mod_4);
    if (2..=3).contains(&n) && total_b1 == 0 && all_odd_3_mod_4 {
        nonvanishing.push(Rule::N2);
    }
    if n == 4 && total_b1 == 0 && total_b_plus % 8 == 4 && all_odd_3_mod_4 {
        nonvanishing.push(Rule::N3);
    }

    decide(&vanishing, &nonvanishing)
}

fn classify_minus_two(factors: Vec<Factor>) -> Result<Verdict, EngineError> {
    let [a, b] =
        <[Factor; 2]>::try_from(factors).map_err(|f| EngineError::MinusTwoArity(f.len()))?;
    for m in [&a.manifold, &b.manifold] {
        if m.designated_sphere().is_none() {
            return Err(ManifoldError::NoDesignatedSphere(m.name.clone()).into());
        }
    }
    // a unit summand contributes the identity to the smash product
    if a.status == FactorStatus::Unit {
        return classify_connected(vec![b]);
    }
    if b.status == FactorStatus::Unit {
        return classify_connected(vec![a]);
    }

    let mut vanishing = Vec::new();
    if a.status == FactorStatus::KnownZero || b.status == FactorStatus::KnownZero {
        vanishing.push(Rule::V1Minus2);
    }
    let residues: Option<Vec<i64>> = [&a, &b]
        .iter()
        .map(|f| {
            f.manifold
                .designated_sphere()
                .and_then(|s| s.nonzero_evaluations.clone())
        })
        .collect::<Option<Vec<Vec<i64>>>>()
        .map(|lists| lists.concat().iter().map(|v| v.rem_euclid(4)).collect());
    if let Some(residues) = residues {
        if residues.windows(2).all(|w| w[0] == w[1]) {
            vanishing.push(Rule::V2Minus2);
        }
    }
    if [&a, &b]
        .iter()
        .all(|f| f.manifold.nonzero_c1_span_semidefinite == Some(true))
    {
        vanishing.push(Rule::V3Minus2);
    }
    if [&a, &b].iter().all(|f| {
        f.manifold.has(Flag::Minimal) && f.manifold.has(Flag::Kahler) && f.manifold.b_plus > 1
    }) {
        vanishing.push(Rule::V4Minus2);
    }
    decide(&vanishing, &[])
}

fn decide(vanishing: &[Rule], nonvanishing: &[Rule]) -> Result<Verdict, EngineError> {
    match (vanishing.first(), nonvanishing.first()) {
        (Some(&v), Some(&n)) => Err(EngineError::RuleConflict {
            vanishing: v,
            nonvanishing: n,
        }),
        (Some(&v), None) => Ok(Verdict::new(VerdictKind::Vanishes, v)),
        (None, Some(&n)) => Ok(Verdict::new(VerdictKind::Nonvanishing, n)),
        (None, None) => Ok(Verdict::unknown()),
    }
}
