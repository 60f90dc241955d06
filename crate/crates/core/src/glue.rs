//! Even sublattice, shadow and the two unimodular neighbors of an odd
//! unimodular lattice.
//!
//! For odd unimodular `L` with even part `L₀`, the dual `L₀*` is the union of
//! four cosets `L₀, L₀+t₁, L₀+t₂, L₀+t₃` with `L = L₀ ∪ (L₀+t₂)`. The shadow
//! is `(L₀+t₁) ∪ (L₀+t₃)` and, when `4 | n`, both `L₀ ∪ (L₀+t₁)` and
//! `L₀ ∪ (L₀+t₃)` are unimodular.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, EnumOptions, Lattice, Norm, ThetaPrefix};
use crate::linalg::{self, Q};

#[derive(Clone, Debug)]
pub struct ShadowDecomposition {
    pub even_part: Lattice,
    /// `t₁, t₂, t₃` as ambient vectors at the lattice scale.
    pub coset_reps: [Vec<Q>; 3],
    /// Index of the representative lying in `L`.
    pub in_lattice_index: usize,
}

impl ShadowDecomposition {
    /// The two representatives of the shadow cosets.
    pub fn shadow_reps(&self) -> [&[Q]; 2] {
        let mut it = (0..3)
            .filter(|&i| i != self.in_lattice_index)
            .map(|i| self.coset_reps[i].as_slice());
        [it.next().unwrap(), it.next().unwrap()]
    }

    /// Counts of shadow vectors up to `bound`, one prefix per shadow coset.
    pub fn coset_thetas(&self, bound: Norm, opts: EnumOptions) -> Result<[ThetaPrefix; 2]> {
        let [a, b] = self.shadow_reps();
        Ok([
            lattice::short_vectors_in_coset(&self.even_part, a, bound, opts)?,
            lattice::short_vectors_in_coset(&self.even_part, b, bound, opts)?,
        ])
    }

    /// Counts of shadow vectors up to `bound`.
    pub fn shadow_theta(&self, bound: Norm, opts: EnumOptions) -> Result<ThetaPrefix> {
        let [a, b] = self.coset_thetas(bound, opts)?;
        Ok(a.merged(&b))
    }

    /// Minimal norm of the shadow, searching norms `>= from`. Shadow norms of
    /// an odd unimodular lattice are `≡ n/4 (mod 2)` and the minimum is at
    /// most `n/4`, so only those candidates are tested.
    pub fn shadow_min(&self, from: Norm, opts: EnumOptions) -> Result<Norm> {
        let top = Norm::new(self.even_part.dim() as i64, 4);
        let two = Norm::from_integer(2);
        let mut m = top;
        while m - two >= Norm::from_integer(0) {
            m -= two;
        }
        while m < from {
            m += two;
        }
        loop {
            for t in self.shadow_reps() {
                if lattice::coset_has_vector(&self.even_part, t, m, opts)? {
                    return Ok(m);
                }
            }
            assert!(m < top, "shadow has no vector of norm at most n/4");
            m += two;
        }
    }
}

/// Reduced lattice, its Gram matrix, a characteristic vector and its norm.
type OddParts = (Lattice, Vec<Vec<i64>>, Vec<i64>, usize);

fn odd_unimodular_parts(l: &Lattice) -> Result<OddParts> {
    if !l.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let red = lattice::reduce(l).lattice;
    let g = red
        .integral_gram()
        .expect("unimodular lattices are integral");
    let parity: Vec<i64> = (0..g.len()).map(|i| g[i][i].rem_euclid(2)).collect();
    let j = parity.iter().position(|&e| e == 1).ok_or(Error::NotOdd)?;
    Ok((red, g, parity, j))
}

fn even_part_from(red: &Lattice, parity: &[i64], j: usize) -> Lattice {
    let b = red.basis();
    let rows: Vec<Vec<i64>> = (0..b.len())
        .map(|i| {
            if i == j {
                b[j].iter().map(|x| 2 * x).collect()
            } else {
                b[i].iter()
                    .zip(&b[j])
                    .map(|(x, y)| x + parity[i] * y)
                    .collect()
            }
        })
        .collect();
    Lattice::new(linalg::hnf_lattice(&rows), red.scale())
        .expect("index-2 sublattice is nonsingular")
}

/// Kernel of `x ↦ (x, x) mod 2` on an odd unimodular lattice (index 2).
pub fn even_sublattice(l: &Lattice) -> Result<Lattice> {
    let (red, _, parity, j) = odd_unimodular_parts(l)?;
    Ok(even_part_from(&red, &parity, j))
}

pub fn shadow(l: &Lattice) -> Result<ShadowDecomposition> {
    let (red, g, parity, j) = odd_unimodular_parts(l)?;
    let even_part = even_part_from(&red, &parity, j);
    // characteristic vector u: (u, b_i) ≡ (b_i, b_i) mod 2, here u = G⁻¹·ε
    let gq = linalg::to_rational(&linalg::to_big(&g));
    let eps: Vec<Q> = parity.iter().map(|&e| linalg::q_int(e)).collect();
    let coords = linalg::solve_left(&gq, &eps).expect("Gram matrix is nonsingular");
    let n = red.dim();
    let b = red.basis();
    let u: Vec<Q> = (0..n)
        .map(|col| {
            coords
                .iter()
                .zip(b)
                .map(|(c, row)| c * linalg::q_int(row[col]))
                .sum()
        })
        .collect();
    let half = linalg::q_frac(1, 2);
    let t1: Vec<Q> = u.iter().map(|x| x * &half).collect();
    let t2: Vec<Q> = b[j].iter().map(|&x| linalg::q_int(x)).collect();
    let t3: Vec<Q> = t1.iter().zip(&t2).map(|(a, c)| a + c).collect();
    Ok(ShadowDecomposition {
        even_part,
        coset_reps: [t1, t2, t3],
        in_lattice_index: 1,
    })
}

/// `L₀ ∪ (L₀ + t)` for `2t` integral, built at scale `4s` and normalized.
fn overlattice(even: &Lattice, t: &[Q]) -> Result<Lattice> {
    let mut rows: Vec<Vec<i64>> = even
        .basis()
        .iter()
        .map(|r| r.iter().map(|x| 2 * x).collect())
        .collect();
    let two = linalg::q_int(2);
    let glue: Option<Vec<i64>> = t
        .iter()
        .map(|x| {
            let y = x * &two;
            y.is_integer()
                .then(|| i64::try_from(y.to_integer()).ok())
                .flatten()
        })
        .collect();
    rows.push(glue.ok_or_else(|| Error::Invalid("glue vector is not half-integral".into()))?);
    let basis = linalg::hnf_lattice(&rows);
    let l = Lattice::new(basis, even.scale() * 4)?.normalized();
    if !l.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(l)
}

/// The two unimodular neighbors `L₀ ∪ (L₀+t₁)` and `L₀ ∪ (L₀+t₃)`.
pub fn neighbors(l: &Lattice) -> Result<(Lattice, Lattice)> {
    if !l.dim().is_multiple_of(4) {
        return Err(Error::DimensionNotDivisibleBy4(l.dim()));
    }
    let s = shadow(l)?;
    let [a, b] = s.shadow_reps();
    Ok((overlattice(&s.even_part, a)?, overlattice(&s.even_part, b)?))
}

/// Norm-3 counts of the two neighbors, ascending. `L₀` is even, so only the
/// shadow cosets contribute.
pub fn n_counts(l: &Lattice, opts: EnumOptions) -> Result<[u64; 2]> {
    if !l.dim().is_multiple_of(4) {
        return Err(Error::DimensionNotDivisibleBy4(l.dim()));
    }
    let s = shadow(l)?;
    let [a, b] = s.coset_thetas(Norm::from_integer(3), opts)?;
    Ok(sorted_pair(a.count_int(3), b.count_int(3)))
}

fn sorted_pair(a: u64, b: u64) -> [u64; 2] {
    [a.min(b), a.max(b)]
}

/// The neighbor of minimum norm 3 of a 36-dimensional lattice of minimum
/// norm 4 whose neighbor norm-3 counts are `{0, 960}`, provided its own
/// shadow has no vectors of norm below 5.
pub fn long_shadow_extract(l: &Lattice, opts: EnumOptions) -> Result<Option<Lattice>> {
    if l.dim() != 36 || !l.is_unimodular() {
        return Ok(None);
    }
    if lattice::min_norm(l, Norm::from_integer(3), opts)?.is_some() {
        return Ok(None);
    }
    let s = shadow(l)?;
    let [ta, tb] = s.coset_thetas(Norm::from_integer(3), opts)?;
    let (na, nb) = (ta.count_int(3), tb.count_int(3));
    if sorted_pair(na, nb) != [0, 960] {
        return Ok(None);
    }
    let [a, b] = s.shadow_reps();
    let cand = overlattice(&s.even_part, if na == 960 { a } else { b })?;
    let cs = shadow(&cand)?;
    if cs.shadow_theta(Norm::from_integer(4), opts)?.total() != 0 {
        return Ok(None);
    }
    Ok(Some(cand))
}

mod norm_json {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::lattice::Norm;

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Frac(String),
    }

    fn to_repr(n: &Norm) -> Repr {
        if n.is_integer() {
            Repr::Int(n.to_integer())
        } else {
            Repr::Frac(format!("{}/{}", n.numer(), n.denom()))
        }
    }

    fn from_repr<E: serde::de::Error>(r: Repr) -> Result<Norm, E> {
        match r {
            Repr::Int(i) => Ok(Norm::from_integer(i)),
            Repr::Frac(s) => {
                crate::lattice::parse_norm(&s).ok_or_else(|| E::custom(format!("bad norm `{s}`")))
            }
        }
    }

    pub fn serialize<S: Serializer>(n: &Option<Norm>, s: S) -> Result<S::Ok, S::Error> {
        n.as_ref().map(to_repr).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Norm>, D::Error> {
        Option::<Repr>::deserialize(d)?.map(from_repr).transpose()
    }
}

/// Invariants of an odd unimodular lattice. Fields that could not be
/// determined within the enumeration bound are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub dimension: usize,
    #[serde(with = "norm_json")]
    pub min_norm: Option<Norm>,
    pub kissing: Option<u64>,
    /// Number of shadow vectors of norm 1.
    pub alpha: u64,
    #[serde(with = "norm_json")]
    pub shadow_min: Option<Norm>,
    /// Norm-3 counts of the two neighbors, ascending; absent unless `4 | n`.
    pub n_counts: Option<[u64; 2]>,
}

/// Settings for [`analyze`].
#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    /// Norm bound for the lattice's own theta prefix.
    pub bound: Norm,
    pub enumeration: EnumOptions,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            bound: Norm::from_integer(4),
            enumeration: EnumOptions::default(),
        }
    }
}

pub fn analyze(l: &Lattice, opts: AnalyzeOptions) -> Result<LatticeReport> {
    let e = opts.enumeration;
    let theta = lattice::theta_prefix(l, opts.bound, e)?;
    log::info!("theta prefix to norm {}: {:?}", opts.bound, theta.counts());
    let s = shadow(l)?;
    let [ta, tb] = s.coset_thetas(Norm::from_integer(3), e)?;
    let merged = ta.merged(&tb);
    let shadow_min = match merged.counts().keys().next().copied() {
        Some(m) => m,
        None => s.shadow_min(Norm::from_integer(3), e)?,
    };
    let n_counts = l
        .dim()
        .is_multiple_of(4)
        .then(|| sorted_pair(ta.count_int(3), tb.count_int(3)));
    Ok(LatticeReport {
        dimension: l.dim(),
        min_norm: theta.min_norm(),
        kissing: theta.kissing(),
        alpha: merged.count_int(1),
        shadow_min: Some(shadow_min),
        n_counts,
    })
}
