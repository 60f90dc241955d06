//! Rational lattices stored as an integer basis with a scale: the lattice
//! vectors are the integer combinations of the basis rows divided by
//! `sqrt(scale)`. All Gram matrices are therefore `B·Bᵀ / scale`.

pub mod enumerate;
pub mod lll;
mod theta;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

pub use enumerate::DEFAULT_NODE_BUDGET;
pub(crate) use theta::parse_norm;
pub use theta::{Norm, ThetaPrefix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    basis: Vec<Vec<i64>>,
    scale: u64,
}

impl Lattice {
    pub fn new(basis: Vec<Vec<i64>>, scale: u64) -> Result<Self> {
        let m = basis.len();
        if m == 0 {
            return Err(Error::Invalid("empty basis".into()));
        }
        if basis.iter().any(|r| r.len() != m) {
            return Err(Error::Invalid("basis must be square".into()));
        }
        if scale == 0 {
            return Err(Error::Invalid("scale must be positive".into()));
        }
        if linalg::det_i64(&basis).is_zero() {
            return Err(Error::Invalid("basis is singular".into()));
        }
        Ok(Self { basis, scale })
    }

    pub fn integer_lattice(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect();
        Self { basis, scale: 1 }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// `B·Bᵀ` (the Gram matrix times the scale).
    pub fn gram_int(&self) -> Vec<Vec<i64>> {
        linalg::gram_int(&self.basis)
    }

    /// Exact Gram matrix `B·Bᵀ / scale`.
    pub fn gram(&self) -> Vec<Vec<Q>> {
        let s = BigInt::from(self.scale);
        self.gram_int()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Q::new(BigInt::from(x), s.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn determinant(&self) -> Q {
        let d = linalg::det_i64(&self.gram_int());
        Q::new(d, BigInt::from(self.scale).pow(self.dim() as u32))
    }

    pub fn is_integral(&self) -> bool {
        let s = self.scale as i64;
        self.gram_int().iter().flatten().all(|x| x % s == 0)
    }

    /// Integral with determinant 1.
    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.determinant().is_one()
    }

    /// Integral Gram matrix, when the lattice is integral.
    pub fn integral_gram(&self) -> Option<Vec<Vec<i64>>> {
        let s = self.scale as i64;
        let g = self.gram_int();
        g.iter().flatten().all(|x| x % s == 0).then(|| {
            g.iter()
                .map(|r| r.iter().map(|x| x / s).collect())
                .collect()
        })
    }

    /// Multiply basis entries by `c` and the scale by `c²` (same lattice).
    pub fn rescaled(&self, c: i64) -> Self {
        let basis = self
            .basis
            .iter()
            .map(|r| r.iter().map(|x| x * c).collect())
            .collect();
        Self {
            basis,
            scale: self.scale * (c * c) as u64,
        }
    }

    /// Remove the largest `g` with `g | every entry` and `g² | scale`.
    pub fn normalized(&self) -> Self {
        let content = self.basis.iter().flatten().fold(0i64, |a, &x| a.gcd(&x));
        let mut g = content.unsigned_abs();
        while g > 1 && !self.scale.is_multiple_of(g * g) {
            // largest divisor of the content whose square divides the scale
            let p = smallest_prime_factor(g);
            g /= p;
        }
        if g <= 1 {
            return self.clone();
        }
        let gi = g as i64;
        let basis = self
            .basis
            .iter()
            .map(|r| r.iter().map(|x| x / gi).collect())
            .collect();
        Self {
            basis,
            scale: self.scale / (g * g),
        }
    }

    /// Same lattice with a Hermite-normal-form basis.
    pub fn hermite(&self) -> Self {
        Self {
            basis: linalg::hnf_lattice(&self.basis),
            scale: self.scale,
        }
    }

    /// Coordinates of the ambient vector `v` (entries at this lattice's scale)
    /// with respect to the basis.
    pub fn coordinates(&self, v: &[Q]) -> Vec<Q> {
        let b = linalg::to_rational(&linalg::to_big(&self.basis));
        linalg::solve_left(&b, v).expect("basis is nonsingular")
    }

    /// Whether the ambient vector `v` (at this scale) lies in the lattice.
    pub fn contains(&self, v: &[Q]) -> bool {
        self.coordinates(v).iter().all(|c| c.is_integer())
    }

    /// Ambient vector `x·B` for integer coordinates.
    pub fn combine(&self, x: &[i64]) -> Vec<i64> {
        let n = self.dim();
        (0..n)
            .map(|j| {
                let s: i128 = x
                    .iter()
                    .zip(&self.basis)
                    .map(|(&c, r)| c as i128 * r[j] as i128)
                    .sum();
                i64::try_from(s).expect("lattice vector entry overflows i64")
            })
            .collect()
    }

    /// `(u, v)` for ambient vectors at this lattice's scale.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> Q {
        Q::new(
            BigInt::from(linalg::dot_i64(u, v)),
            BigInt::from(self.scale),
        )
    }

    /// Text form: `m s` then `m` rows of the basis.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.dim(), self.scale);
        for r in &self.basis {
            let row: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut nums = text.split_whitespace().map(|t| {
            t.parse::<i64>()
                .map_err(|e| Error::Parse(format!("`{t}`: {e}")))
        });
        let mut next = |what: &str| {
            nums.next()
                .unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))))
        };
        let m = next("dimension")?;
        let s = next("scale")?;
        if m <= 0 || s <= 0 {
            return Err(Error::Parse("dimension and scale must be positive".into()));
        }
        let m = m as usize;
        let mut basis = vec![vec![0i64; m]; m];
        for row in basis.iter_mut() {
            for x in row.iter_mut() {
                *x = next("basis entry")?;
            }
        }
        if nums.next().is_some() {
            return Err(Error::Parse("trailing data after basis".into()));
        }
        Self::new(basis, s as u64)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..)
        .take_while(|p| p * p <= n)
        .find(|p| n.is_multiple_of(*p))
        .unwrap_or(n)
}

pub fn gram(l: &Lattice) -> Vec<Vec<Q>> {
    l.gram()
}

/// `L* = {x : (x, y) ∈ Z for all y ∈ L}`; its Gram matrix is the inverse of `gram(L)`.
pub fn dual(l: &Lattice) -> Lattice {
    let g = linalg::to_rational(&linalg::to_big(&l.gram_int()));
    let inv = linalg::inverse(&g).expect("Gram matrix is nonsingular");
    // dual basis rows = s·G_int^{-1}·B / sqrt(s)
    let s = Q::from_integer(BigInt::from(l.scale));
    let m: Vec<Vec<Q>> = inv
        .iter()
        .map(|r| r.iter().map(|x| x * &s).collect())
        .collect();
    let d = m
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mi: Vec<Vec<i64>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    (x * Q::from_integer(d.clone()))
                        .to_integer()
                        .to_i64()
                        .expect("dual entry overflows")
                })
                .collect()
        })
        .collect();
    let di = d.to_u64().expect("dual denominator overflows");
    let basis = linalg::mat_mul_i64(&mi, &l.basis);
    Lattice {
        basis,
        scale: di * di * l.scale,
    }
    .normalized()
}

pub fn is_unimodular(l: &Lattice) -> bool {
    l.is_unimodular()
}

/// An LLL-reduced basis together with the transform back to the input basis.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub lattice: Lattice,
    /// `reduced.basis = transform · original.basis`
    pub transform: Vec<Vec<i64>>,
}

/// LLL (δ = 0.99) on the exact basis; the lattice itself is unchanged.
pub fn reduce(l: &Lattice) -> Reduced {
    let mut b = l.basis.clone();
    let transform = lll::lll_reduce(&mut b, lll::LLL_DELTA);
    Reduced {
        lattice: Lattice {
            basis: b,
            scale: l.scale,
        },
        transform,
    }
}

/// Enumeration settings shared by theta and coset searches.
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub budget: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_NODE_BUDGET,
        }
    }
}

fn bound_numerator(bound: Norm, scale: u64, den: i64) -> i128 {
    // floor(bound · scale · den²)
    let num = *bound.numer() as i128 * scale as i128 * (den as i128 * den as i128);
    num.div_euclid(*bound.denom() as i128)
}

fn norm_from(q: i128, scale: u64, den: i64) -> Norm {
    let d = scale as i128 * den as i128 * den as i128;
    let g = q.gcd(&d);
    Norm::new_raw((q / g) as i64, (d / g) as i64)
}

/// One representative `v` of each `±v` pair with `0 < (v,v) <= bound`, as
/// ambient integer vectors at the lattice's scale, with their norms.
/// Sorted by norm, then lexicographically; every representative has a
/// positive first nonzero entry.
pub fn short_vectors(l: &Lattice, bound: Norm, opts: EnumOptions) -> Result<Vec<(Vec<i64>, Norm)>> {
    let red = reduce(l);
    let g = red.lattice.gram_int();
    let p = enumerate::EnumProblem {
        gram: &g,
        center_num: vec![0; l.dim()],
        center_den: 1,
        bound: bound_numerator(bound, l.scale, 1),
        half: true,
        budget: opts.budget,
    };
    let found = enumerate::enumerate(
        &p,
        Vec::new,
        |acc: &mut Vec<(Vec<i64>, i128)>, x, q| acc.push((x.to_vec(), q)),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    let mut out: Vec<(Vec<i64>, Norm)> = found
        .into_iter()
        .map(|(x, q)| {
            let mut v = red.lattice.combine(&x);
            if v.iter().find(|&&e| e != 0).is_some_and(|&e| e < 0) {
                v.iter_mut().for_each(|e| *e = -*e);
            }
            (v, norm_from(q, l.scale, 1))
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// Exact counts of lattice vectors with norm `<= bound`, grouped by norm.
pub fn theta_prefix(l: &Lattice, bound: Norm, opts: EnumOptions) -> Result<ThetaPrefix> {
    let red = reduce(l);
    let g = red.lattice.gram_int();
    let p = enumerate::EnumProblem {
        gram: &g,
        center_num: vec![0; l.dim()],
        center_den: 1,
        bound: bound_numerator(bound, l.scale, 1),
        half: true,
        budget: opts.budget,
    };
    let counts = enumerate::enumerate(
        &p,
        std::collections::BTreeMap::<i128, u64>::new,
        |m, _, q| *m.entry(q).or_insert(0) += 1,
        merge_counts,
    )?;
    let mut theta = ThetaPrefix::new(bound);
    theta.add(Norm::from_integer(0), 1);
    for (q, c) in counts {
        theta.add(norm_from(q, l.scale, 1), 2 * c);
    }
    Ok(theta)
}

fn merge_counts(
    mut a: std::collections::BTreeMap<i128, u64>,
    b: std::collections::BTreeMap<i128, u64>,
) -> std::collections::BTreeMap<i128, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Prepared coset search: reduced basis plus the shift in its coordinates.
struct CosetProblem {
    reduced: Reduced,
    gram: Vec<Vec<i64>>,
    num: Vec<i64>,
    den: i64,
}

fn coset_problem(l: &Lattice, t: &[Q]) -> Result<CosetProblem> {
    if t.len() != l.dim() {
        return Err(Error::Invalid("coset shift has wrong length".into()));
    }
    let reduced = reduce(l);
    let c = reduced.lattice.coordinates(t);
    let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let num: Vec<i64> = c
        .iter()
        .map(|x| {
            // shift into [0, 1) before scaling; the coset is unchanged
            let frac = x - Q::from_integer(x.floor().to_integer());
            (frac * Q::from_integer(den.clone()))
                .to_integer()
                .to_i64()
                .expect("shift overflows")
        })
        .collect();
    let den = den
        .to_i64()
        .ok_or_else(|| Error::Invalid("shift denominator too large".into()))?;
    let gram = reduced.lattice.gram_int();
    Ok(CosetProblem {
        reduced,
        gram,
        num,
        den,
    })
}

/// Exact counts of vectors `v ∈ L + t` with `(v, v) <= bound`; `t` is an
/// ambient vector at the scale of `L`.
pub fn short_vectors_in_coset(
    l: &Lattice,
    t: &[Q],
    bound: Norm,
    opts: EnumOptions,
) -> Result<ThetaPrefix> {
    let cp = coset_problem(l, t)?;
    let p = enumerate::EnumProblem {
        gram: &cp.gram,
        center_num: cp.num.clone(),
        center_den: cp.den,
        bound: bound_numerator(bound, l.scale, cp.den),
        half: false,
        budget: opts.budget,
    };
    let counts = enumerate::enumerate(
        &p,
        std::collections::BTreeMap::<i128, u64>::new,
        |m, _, q| *m.entry(q).or_insert(0) += 1,
        merge_counts,
    )?;
    let mut theta = ThetaPrefix::new(bound);
    for (q, c) in counts {
        theta.add(norm_from(q, l.scale, cp.den), c);
    }
    Ok(theta)
}

/// Ambient coset vectors with their norms, and the scale they are given at.
pub type CosetVectors = (Vec<(Vec<i64>, Norm)>, u64);

/// The vectors of `L + t` with norm `<= bound`, as ambient vectors at scale
/// `scale · den²` (returned alongside), sorted by norm then lexicographically.
pub fn coset_vectors(l: &Lattice, t: &[Q], bound: Norm, opts: EnumOptions) -> Result<CosetVectors> {
    let cp = coset_problem(l, t)?;
    let p = enumerate::EnumProblem {
        gram: &cp.gram,
        center_num: cp.num.clone(),
        center_den: cp.den,
        bound: bound_numerator(bound, l.scale, cp.den),
        half: false,
        budget: opts.budget,
    };
    let found = enumerate::enumerate(
        &p,
        Vec::new,
        |acc: &mut Vec<(Vec<i64>, i128)>, x, q| acc.push((x.to_vec(), q)),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    let mut out: Vec<(Vec<i64>, Norm)> = found
        .into_iter()
        .map(|(x, q)| {
            let y: Vec<i64> = x
                .iter()
                .zip(&cp.num)
                .map(|(&xi, &ci)| cp.den * xi + ci)
                .collect();
            (
                cp.reduced.lattice.combine(&y),
                norm_from(q, l.scale, cp.den),
            )
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok((out, l.scale * (cp.den * cp.den) as u64))
}

/// Minimal norm of `L + t` when it is `<= max_bound`, found by repeated
/// first-hit searches with a shrinking radius.
pub fn coset_min_norm(
    l: &Lattice,
    t: &[Q],
    max_bound: Norm,
    opts: EnumOptions,
) -> Result<Option<Norm>> {
    let cp = coset_problem(l, t)?;
    let mut bound = bound_numerator(max_bound, l.scale, cp.den);
    let mut best = None;
    loop {
        let p = enumerate::EnumProblem {
            gram: &cp.gram,
            center_num: cp.num.clone(),
            center_den: cp.den,
            bound,
            half: false,
            budget: opts.budget,
        };
        match enumerate::find_first(&p)? {
            Some((_, q)) => {
                best = Some(q);
                bound = q - 1;
            }
            None => return Ok(best.map(|q| norm_from(q, l.scale, cp.den))),
        }
    }
}

/// Whether `L + t` has a vector of norm `<= bound`.
pub fn coset_has_vector(l: &Lattice, t: &[Q], bound: Norm, opts: EnumOptions) -> Result<bool> {
    let cp = coset_problem(l, t)?;
    let p = enumerate::EnumProblem {
        gram: &cp.gram,
        center_num: cp.num.clone(),
        center_den: cp.den,
        bound: bound_numerator(bound, l.scale, cp.den),
        half: false,
        budget: opts.budget,
    };
    Ok(enumerate::find_first(&p)?.is_some())
}

/// Minimal nonzero norm of `L` when it is `<= max_bound`.
pub fn min_norm(l: &Lattice, max_bound: Norm, opts: EnumOptions) -> Result<Option<Norm>> {
    let red = reduce(l);
    let g = red.lattice.gram_int();
    let mut bound = bound_numerator(max_bound, l.scale, 1);
    let mut best = None;
    loop {
        let p = enumerate::EnumProblem {
            gram: &g,
            center_num: vec![0; l.dim()],
            center_den: 1,
            bound,
            half: true,
            budget: opts.budget,
        };
        match enumerate::find_first(&p)? {
            Some((_, q)) => {
                best = Some(q);
                bound = q - 1;
            }
            None => return Ok(best.map(|q| norm_from(q, l.scale, 1))),
        }
    }
}
