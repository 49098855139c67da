use std::fmt;

use serde::{Deserialize, Serialize};

use super::RingError;

/// How much of a group is actually known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Knowledge {
    Complete,
    /// Rank is exact; torsion is only certified to have no `p`-primary part
    /// for primes `p >= p_primary_zero_from`.
    PartialBeyondTable {
        p_primary_zero_from: u64,
    },
}

/// A finitely generated abelian group `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup")]
pub struct AbelianGroupDesc {
    rank: u32,
    torsion: Vec<u64>,
    knowledge: Knowledge,
}

#[derive(Deserialize)]
struct RawGroup {
    rank: u32,
    torsion: Vec<u64>,
    knowledge: Knowledge,
}

impl TryFrom<RawGroup> for AbelianGroupDesc {
    type Error = RingError;
    fn try_from(raw: RawGroup) -> Result<Self, RingError> {
        Self::new(raw.rank, raw.torsion, raw.knowledge)
    }
}

impl AbelianGroupDesc {
    /// Torsion orders must be at least 2; they are stored sorted.
    pub fn new(rank: u32, mut torsion: Vec<u64>, knowledge: Knowledge) -> Result<Self, RingError> {
        if let Some(&bad) = torsion.iter().find(|&&t| t < 2) {
            return Err(RingError::InvalidTorsionOrder(bad));
        }
        torsion.sort_unstable();
        Ok(Self {
            rank,
            torsion,
            knowledge,
        })
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: u32) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
            knowledge: Knowledge::Complete,
        }
    }

    pub fn cyclic(order: u64) -> Self {
        match order {
            0 => Self::free(1),
            1 => Self::trivial(),
            n => Self {
                rank: 0,
                torsion: vec![n],
                knowledge: Knowledge::Complete,
            },
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn knowledge(&self) -> Knowledge {
        self.knowledge
    }

    pub fn is_complete(&self) -> bool {
        self.knowledge == Knowledge::Complete
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty() && self.is_complete()
    }

    /// Order of the torsion subgroup, when known.
    pub fn torsion_order(&self) -> Option<u64> {
        self.is_complete().then(|| self.torsion.iter().product())
    }

    /// Direct sum; knowledge degrades to the weaker of the two.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let knowledge = match (self.knowledge, other.knowledge) {
            (Knowledge::Complete, Knowledge::Complete) => Knowledge::Complete,
            (Knowledge::Complete, k) | (k, Knowledge::Complete) => k,
            (
                Knowledge::PartialBeyondTable {
                    p_primary_zero_from: a,
                },
                Knowledge::PartialBeyondTable {
                    p_primary_zero_from: b,
                },
            ) => Knowledge::PartialBeyondTable {
                p_primary_zero_from: a.max(b),
            },
        };
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        torsion.sort_unstable();
        Self {
            rank: self.rank + other.rank,
            torsion,
            knowledge,
        }
    }
}

impl fmt::Display for AbelianGroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if let Knowledge::PartialBeyondTable {
            p_primary_zero_from,
        } = self.knowledge
        {
            parts.push(format!(
                "(torsion: partial; p-parts vanish for p ≥ {p_primary_zero_from})"
            ));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" ⊕ "))
    }
}
