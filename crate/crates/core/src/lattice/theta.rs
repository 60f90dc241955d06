use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Norms are rationals with denominator dividing the lattice scale.
pub type Norm = Ratio<i64>;

/// Vector counts by norm, complete up to `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPrefix {
    pub bound: Norm,
    counts: BTreeMap<Norm, u64>,
}

impl ThetaPrefix {
    pub fn new(bound: Norm) -> Self {
        Self {
            bound,
            counts: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, norm: Norm, count: u64) {
        if count > 0 {
            *self.counts.entry(norm).or_insert(0) += count;
        }
    }

    pub fn count(&self, norm: Norm) -> u64 {
        self.counts.get(&norm).copied().unwrap_or(0)
    }

    pub fn count_int(&self, norm: i64) -> u64 {
        self.count(Norm::from_integer(norm))
    }

    pub fn counts(&self) -> &BTreeMap<Norm, u64> {
        &self.counts
    }

    /// Smallest stored positive norm.
    pub fn min_norm(&self) -> Option<Norm> {
        self.counts
            .keys()
            .copied()
            .find(|n| *n > Norm::from_integer(0))
    }

    /// Number of vectors at the minimal positive norm.
    pub fn kissing(&self) -> Option<u64> {
        self.min_norm().map(|n| self.count(n))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Counts of two disjoint sets combined (e.g. a sublattice and a coset).
    pub fn merged(&self, other: &Self) -> Self {
        let mut out = Self::new(self.bound.min(other.bound));
        for (n, c) in self.counts.iter().chain(other.counts.iter()) {
            if *n <= out.bound {
                out.add(*n, *c);
            }
        }
        out
    }

    /// Restrict to norms `<= bound`.
    pub fn truncated(&self, bound: Norm) -> Self {
        let mut out = Self::new(bound.min(self.bound));
        for (n, c) in &self.counts {
            if *n <= out.bound {
                out.add(*n, *c);
            }
        }
        out
    }
}

fn norm_key(n: &Norm) -> String {
    format!("{}/{}", n.numer(), n.denom())
}

pub(crate) fn parse_norm(s: &str) -> Option<Norm> {
    match s.split_once('/') {
        Some((a, b)) => {
            let n: i64 = a.trim().parse().ok()?;
            let d: i64 = b.trim().parse().ok()?;
            (d != 0).then(|| Norm::new(n, d))
        }
        None => s.trim().parse().ok().map(Norm::from_integer),
    }
}

#[derive(Serialize, Deserialize)]
struct ThetaJson {
    bound: String,
    counts: BTreeMap<String, u64>,
}

// {"bound": "4/1", "counts": {"num/den": count}}
impl Serialize for ThetaPrefix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ThetaJson {
            bound: norm_key(&self.bound),
            counts: self.counts.iter().map(|(n, c)| (norm_key(n), *c)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThetaPrefix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = ThetaJson::deserialize(d)?;
        let bound = parse_norm(&j.bound).ok_or_else(|| D::Error::custom("bad bound"))?;
        let mut t = ThetaPrefix::new(bound);
        for (k, c) in j.counts {
            let n = parse_norm(&k).ok_or_else(|| D::Error::custom(format!("bad norm `{k}`")))?;
            t.add(n, c);
        }
        Ok(t)
    }
}
