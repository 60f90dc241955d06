//! Linear codes over `Z_k`.
//!
//! A code is stored through the Hermite normal form of its lift
//! `C + kZ^n ⊂ Z^n`. The HNF is unique, so two codes are equal iff their
//! canonical generators are equal, and every pivot divides `k`; the rows with
//! pivot `< k` (reduced mod `k`) are the canonical generators and
//! `|C| = Π k / pivot`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, solve_affine, Q};
use crate::poly::UnivariatePoly;

/// Minimum distance of the zero code.
pub const INFINITE_DISTANCE: u32 = u32::MAX;

/// Codes with more codewords than `2^ENUMERATION_GUARD_LOG2` are never enumerated.
pub const ENUMERATION_GUARD_LOG2: u32 = 26;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZkCode {
    modulus: u32,
    length: usize,
    /// Full `n × n` HNF of `C + kZ^n`.
    hnf: Vec<Vec<i64>>,
}

impl ZkCode {
    /// The code spanned by `rows` (entries are reduced mod `k`, any integers allowed).
    pub fn new(modulus: u32, length: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Invalid(format!("modulus {modulus} < 2")));
        }
        if length == 0 {
            return Err(Error::Invalid("code length must be at least 1".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != length) {
            return Err(Error::Invalid(format!(
                "row of length {} in a length-{length} code",
                r.len()
            )));
        }
        // a zero row fixes the width when no generators are given
        let mut big: Vec<Vec<BigInt>> = linalg::to_big(rows);
        big.push(vec![BigInt::zero(); length]);
        let hnf = linalg::from_big(&linalg::hnf_modular(&big, &BigInt::from(modulus)));
        Ok(Self {
            modulus,
            length,
            hnf,
        })
    }

    pub fn zero(modulus: u32, length: usize) -> Result<Self> {
        Self::new(modulus, length, &[])
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// HNF basis of the integer lattice `C + kZ^n`.
    pub fn lift_basis(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    /// Canonical generators: HNF rows whose pivot is a proper divisor of `k`.
    pub fn generators(&self) -> Vec<Vec<u32>> {
        let k = self.modulus as i64;
        self.hnf
            .iter()
            .enumerate()
            .filter(|(i, r)| r[*i] < k)
            .map(|(_, r)| r.iter().map(|&x| x.rem_euclid(k) as u32).collect())
            .collect()
    }

    /// Additive pivot order `k / pivot` of each canonical generator.
    pub fn pivot_orders(&self) -> Vec<u32> {
        let k = self.modulus as i64;
        self.hnf
            .iter()
            .enumerate()
            .filter(|(i, r)| r[*i] < k)
            .map(|(i, r)| (k / r[i]) as u32)
            .collect()
    }

    pub fn cardinality(&self) -> BigUint {
        self.pivot_orders()
            .iter()
            .fold(BigUint::one(), |acc, &o| acc * o)
    }

    fn cardinality_small(&self) -> Option<u64> {
        self.cardinality().to_u64()
    }

    fn check_guard(&self) -> Result<u64> {
        match self.cardinality_small() {
            Some(c) if c <= 1u64 << ENUMERATION_GUARD_LOG2 => Ok(c),
            _ => Err(Error::CardinalityTooLarge {
                cardinality: self.cardinality().to_string(),
                guard_log2: ENUMERATION_GUARD_LOG2,
            }),
        }
    }

    pub fn contains(&self, word: &[i64]) -> bool {
        if word.len() != self.length {
            return false;
        }
        // reduce against the triangular lift basis
        let mut v: Vec<i64> = word.to_vec();
        for (i, row) in self.hnf.iter().enumerate() {
            let q = v[i].div_euclid(row[i]);
            if v[i].rem_euclid(row[i]) != 0 {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= q * y;
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Visit every codeword once (entries in `[0, k)`).
    pub fn for_each_codeword<F: FnMut(&[u32])>(&self, mut f: F) -> Result<()> {
        self.check_guard()?;
        let gens = self.generators();
        let orders = self.pivot_orders();
        let k = self.modulus;
        let mut digits = vec![0u32; gens.len()];
        let mut cur = vec![0u32; self.length];
        loop {
            f(&cur);
            let mut i = 0;
            loop {
                if i == gens.len() {
                    return Ok(());
                }
                digits[i] += 1;
                if digits[i] < orders[i] {
                    for (c, g) in cur.iter_mut().zip(&gens[i]) {
                        *c = (*c + g) % k;
                    }
                    break;
                }
                // wrap: subtract (order - 1)·g
                let back = orders[i] - 1;
                for (c, g) in cur.iter_mut().zip(&gens[i]) {
                    *c = (*c + (k - (back * g) % k)) % k;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    pub fn codewords(&self) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        self.for_each_codeword(|c| out.push(c.to_vec()))?;
        Ok(out)
    }

    /// Binary generators as bit masks (bit `i` = coordinate `i`); needs `k = 2`, `n <= 64`.
    fn binary_masks(&self) -> Option<Vec<u64>> {
        (self.modulus == 2 && self.length <= 64).then(|| {
            self.generators()
                .iter()
                .map(|g| {
                    g.iter()
                        .enumerate()
                        .fold(0u64, |m, (i, &b)| m | ((b as u64 & 1) << i))
                })
                .collect()
        })
    }

    /// Number of codewords of each Hamming weight `0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        self.check_guard()?;
        let mut dist = vec![0u64; self.length + 1];
        if let Some(masks) = self.binary_masks() {
            // Gray-code walk
            let mut cur = 0u64;
            dist[0] += 1;
            for step in 1u64..(1u64 << masks.len()) {
                cur ^= masks[step.trailing_zeros() as usize];
                dist[cur.count_ones() as usize] += 1;
            }
        } else {
            self.for_each_codeword(|c| dist[c.iter().filter(|&&x| x != 0).count()] += 1)?;
        }
        Ok(dist)
    }

    /// Minimum Hamming weight, [`INFINITE_DISTANCE`] for the zero code.
    pub fn min_distance(&self) -> Result<u32> {
        let d = self.weight_distribution()?;
        Ok(d.iter()
            .skip(1)
            .position(|&c| c > 0)
            .map_or(INFINITE_DISTANCE, |p| p as u32 + 1))
    }
}

/// Header `k n r` followed by `r` rows of `n` integers.
pub fn parse_code_matrix(text: &str) -> Result<(u32, usize, Vec<Vec<i64>>)> {
    let mut nums = text.split_whitespace().map(|t| {
        t.parse::<i64>()
            .map_err(|e| Error::Parse(format!("`{t}`: {e}")))
    });
    let mut next = |what: &str| {
        nums.next()
            .unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))))
    };
    let k = next("modulus")?;
    let n = next("length")?;
    let r = next("row count")?;
    if k < 2 || n < 1 || r < 0 {
        return Err(Error::Parse(format!("bad header `{k} {n} {r}`")));
    }
    let rows = (0..r)
        .map(|_| {
            (0..n)
                .map(|_| next("matrix entry"))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if nums.next().is_some() {
        return Err(Error::Parse("trailing data after matrix".into()));
    }
    Ok((k as u32, n as usize, rows))
}

impl ZkCode {
    pub fn from_text(text: &str) -> Result<Self> {
        let (k, n, rows) = parse_code_matrix(text)?;
        Self::new(k, n, &rows)
    }

    /// Code file text with the canonical generators as rows.
    pub fn to_text(&self) -> String {
        let gens = self.generators();
        let mut s = format!("{} {} {}\n", self.modulus, self.length, gens.len());
        for g in &gens {
            let row: Vec<String> = g.iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

fn inner_mod(a: &[u32], b: &[u32], k: u32) -> u64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x as u64 * y as u64)
        .sum::<u64>()
        % k as u64
}

/// `C^⊥`, computed as `k · (C + kZ^n)^*`.
pub fn dual_code(c: &ZkCode) -> ZkCode {
    let k = c.modulus as i64;
    let h = linalg::to_rational(&linalg::to_big(&c.hnf));
    let inv = linalg::inverse(&h).expect("lift of a code is full rank");
    let n = c.length;
    // rows of k·(H^{-1})^T
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = &inv[j][i] * Q::from_integer(BigInt::from(k));
                    assert!(v.is_integer(), "dual lift is not integral");
                    v.to_integer().to_i64().expect("dual entry exceeds i64")
                })
                .collect()
        })
        .collect();
    ZkCode::new(c.modulus, n, &rows).expect("dual of a valid code is valid")
}

/// Generators pairwise orthogonal mod `k` and `|C|² = k^n`.
pub fn is_self_dual(c: &ZkCode) -> bool {
    let gens = c.generators();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            if inner_mod(a, b, c.modulus) != 0 {
                return false;
            }
        }
    }
    let card = c.cardinality();
    &card * &card == BigUint::from(c.modulus).pow(c.length as u32)
}

/// `Σ_{c ∈ C} y^{wt(c)}`.
pub fn hamming_we(c: &ZkCode) -> Result<UnivariatePoly> {
    let dist = c.weight_distribution()?;
    Ok(UnivariatePoly::from_terms(
        dist.iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(w, &m)| (w as u32, m as i64)),
    ))
}

/// Coefficients of `(1 - y)^w (1 + (q-1)y)^{n-w}`, i.e. the Krawtchouk values `K_j(w)`.
pub fn krawtchouk_column(n: u32, w: u32, q: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n as usize + 1];
    // (1 - y)^w
    let mut a = vec![BigInt::zero(); w as usize + 1];
    for (i, x) in a.iter_mut().enumerate() {
        let b = binom(w, i as u32);
        *x = if i % 2 == 0 { b } else { -b };
    }
    // (1 + (q-1) y)^{n-w}
    let m = n - w;
    let qm = BigInt::from(q - 1);
    let bpoly: Vec<BigInt> = (0..=m)
        .map(|i| binom(m, i) * num_traits::pow(qm.clone(), i as usize))
        .collect();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in bpoly.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `(1/|C|)·(1 + (q-1)y)^n · W((1-y)/(1+(q-1)y))`, no integrality check.
pub fn macwilliams_transform(
    w: &UnivariatePoly,
    n: u32,
    cardinality: &Q,
    q: u32,
) -> UnivariatePoly {
    let mut out = UnivariatePoly::zero();
    for (e, a) in w.terms() {
        let col = krawtchouk_column(n, e, q);
        for (j, kj) in col.into_iter().enumerate() {
            if !kj.is_zero() {
                out.add_term(j as u32, a * Q::from_integer(kj) / cardinality);
            }
        }
    }
    out
}

/// Dual weight enumerator by the MacWilliams identity over `GF(q)`, `q ∈ {2, 3}`.
pub fn macwilliams_dual_we(
    w: &UnivariatePoly,
    n: u32,
    cardinality: u64,
    q: u32,
) -> Result<UnivariatePoly> {
    if !(q == 2 || q == 3) {
        return Err(Error::Invalid(format!("field size {q} not supported")));
    }
    if w.degree().is_some_and(|d| d > n) {
        return Err(Error::Invalid(format!(
            "enumerator degree exceeds length {n}"
        )));
    }
    let out = macwilliams_transform(w, n, &Q::from_integer(BigInt::from(cardinality)), q);
    if let Some((e, c)) = out.terms().find(|(_, c)| !c.is_integer()) {
        return Err(Error::NonIntegerResult {
            exponent: e,
            coefficient: c.to_string(),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCodePair {
    pub residue: ZkCode,
    pub torsion: ZkCode,
}

/// Residue `C^(1) = C mod 2` and torsion `C^(2) = {c mod 2 : 2c ∈ C}` of a `Z_4` code.
///
/// The torsion code is computed directly from the generators. For self-dual
/// `C` it is then checked against the dual of the residue code.
pub fn residue_torsion(c: &ZkCode) -> Result<BinaryCodePair> {
    if c.modulus != 4 {
        return Err(Error::Invalid(format!(
            "residue/torsion needs modulus 4, got {}",
            c.modulus
        )));
    }
    let n = c.length;
    let gens = c.generators();
    let bar: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| (x % 2) as i64).collect())
        .collect();
    let residue = ZkCode::new(2, n, &bar)?;

    // F2-kernel of m ↦ Σ m_i ḡ_i, as the dual of the code spanned by the columns of Ḡ
    let mut torsion_rows = bar.clone();
    if !gens.is_empty() {
        let cols: Vec<Vec<i64>> = (0..n).map(|j| bar.iter().map(|r| r[j]).collect()).collect();
        let kernel = dual_code(&ZkCode::new(2, gens.len(), &cols)?);
        for m in kernel.generators() {
            let sum: Vec<i64> = (0..n)
                .map(|j| {
                    m.iter()
                        .zip(&gens)
                        .map(|(&mi, g)| (mi * g[j]) as i64)
                        .sum::<i64>()
                        .rem_euclid(4)
                })
                .collect();
            debug_assert!(sum.iter().all(|x| x % 2 == 0));
            torsion_rows.push(sum.iter().map(|x| (x / 2) % 2).collect());
        }
    }
    let torsion = ZkCode::new(2, n, &torsion_rows)?;
    if is_self_dual(c) && torsion != dual_code(&residue) {
        return Err(Error::TorsionMismatch);
    }
    Ok(BinaryCodePair { residue, torsion })
}

/// `m_1(x) + 4 m_2(x) + m_3(x)` for `x ∈ Z_4^n`.
pub fn euclidean_weight(x: &[u32]) -> u32 {
    x.iter()
        .map(|&v| match v % 4 {
            1 | 3 => 1,
            2 => 4,
            _ => 0,
        })
        .sum()
}

/// Brute-force minimum Euclidean weight of a `Z_4` code.
pub fn min_euclidean_weight_brute(c: &ZkCode) -> Result<u32> {
    let mut best = INFINITE_DISTANCE;
    c.for_each_codeword(|w| {
        let e = euclidean_weight(w);
        if e > 0 {
            best = best.min(e);
        }
    })?;
    Ok(best)
}

/// `(min{d(C^(1)), 4 d(C^(2))}, 4 d(C^(2)))`, bracketing `d_E(C)`.
///
/// For self-dual codes `d(C^(2))` is read off the MacWilliams dual of the
/// residue enumerator, so the torsion code is never enumerated.
pub fn min_euclidean_bounds(c: &ZkCode) -> Result<(u32, u32)> {
    let pair = residue_torsion(c)?;
    let res_we = hamming_we(&pair.residue)?;
    let d1 = res_we.min_positive_exponent().unwrap_or(INFINITE_DISTANCE);
    let d2 = if is_self_dual(c) {
        let card = pair.residue.cardinality_small().expect("guarded above");
        let dual = macwilliams_dual_we(&res_we, c.length as u32, card, 2)?;
        dual.min_positive_exponent().unwrap_or(INFINITE_DISTANCE)
    } else {
        pair.torsion.min_distance()?
    };
    let upper = d2.saturating_mul(4);
    Ok((d1.min(upper), upper))
}

/// Parameters of a binary code class whose weight enumerator is sought.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeConstraints {
    pub length: u32,
    pub dimension: u32,
    pub weights_divisible_by: u32,
    pub min_weight: u32,
    pub dual_min_weight: u32,
    /// `Some(true)`: contains the all-one word; `None`: unknown (both cases tried).
    pub contains_allone: Option<bool>,
}

impl WeConstraints {
    /// Check a candidate enumerator against every constraint.
    pub fn is_satisfied_by(&self, w: &UnivariatePoly) -> bool {
        let n = self.length;
        if !w.is_integral() || !w.is_nonnegative() || w.coeff(0) != Q::one() {
            return false;
        }
        if w.coefficient_sum() != Q::from_integer(BigInt::one() << self.dimension) {
            return false;
        }
        for (e, _) in w.terms() {
            if e > n || (e > 0 && (e % self.weights_divisible_by != 0 || e < self.min_weight)) {
                return false;
            }
        }
        let allone = w.coeff(n) == Q::one();
        match self.contains_allone {
            Some(true) if !allone => return false,
            Some(false) if !w.coeff(n).is_zero() => return false,
            _ => {}
        }
        if allone && (0..=n).any(|e| w.coeff(e) != w.coeff(n - e)) {
            return false;
        }
        let dual =
            macwilliams_transform(w, n, &Q::from_integer(BigInt::one() << self.dimension), 2);
        (1..self.dual_min_weight).all(|j| dual.coeff(j).is_zero())
    }
}

/// Largest number of free-coefficient assignments tried before giving up.
const SOLVE_SEARCH_LIMIT: u128 = 100_000_000;

/// Every weight enumerator compatible with the constraints, found by exact
/// elimination of the MacWilliams conditions and bounded enumeration of the
/// coefficients left free.
pub fn solve_constrained_we(cons: &WeConstraints) -> Result<Vec<UnivariatePoly>> {
    let n = cons.length;
    if n == 0 || n > 64 || cons.weights_divisible_by == 0 || cons.dimension > 40 {
        return Err(Error::Invalid(format!(
            "unsupported constraint set {cons:?}"
        )));
    }
    let cases: &[bool] = match cons.contains_allone {
        Some(true) => &[true],
        Some(false) => &[false],
        None => &[false, true],
    };
    let mut found: BTreeSet<Vec<(u32, String)>> = BTreeSet::new();
    let mut out = Vec::new();
    for &allone in cases {
        for w in solve_case(cons, allone)? {
            debug_assert!(cons.is_satisfied_by(&w));
            let key: Vec<(u32, String)> = w.terms().map(|(e, c)| (e, c.to_string())).collect();
            if found.insert(key) {
                out.push(w);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoSolution);
    }
    Ok(out)
}

fn solve_case(cons: &WeConstraints, allone: bool) -> Result<Vec<UnivariatePoly>> {
    let n = cons.length;
    let weights: Vec<u32> = (1..=n)
        .filter(|w| w % cons.weights_divisible_by == 0 && *w >= cons.min_weight)
        .collect();
    let idx = |w: u32| weights.iter().position(|&x| x == w);
    let nv = weights.len();
    let total = (1u128 << cons.dimension) - 1;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    let unit = |i: usize| {
        let mut r = vec![Q::zero(); nv];
        r[i] = Q::one();
        r
    };
    // Σ A_w = 2^dim - 1
    rows.push(vec![Q::one(); nv]);
    rhs.push(Q::from_integer(BigInt::from(total)));
    if allone {
        match idx(n) {
            Some(i) => {
                rows.push(unit(i));
                rhs.push(Q::one());
            }
            None => return Ok(vec![]),
        }
        for (i, &w) in weights.iter().enumerate() {
            if w == n {
                continue;
            }
            let mut r = unit(i);
            if let Some(j) = idx(n - w) {
                r[j] -= Q::one();
            }
            rows.push(r);
            rhs.push(Q::zero());
        }
    } else if let Some(i) = idx(n) {
        rows.push(unit(i));
        rhs.push(Q::zero());
    }
    // dual coefficients at y^1 .. y^{d⊥-1} vanish
    let cols: Vec<Vec<BigInt>> = weights
        .iter()
        .map(|&w| krawtchouk_column(n, w, 2))
        .collect();
    let k0 = krawtchouk_column(n, 0, 2);
    for j in 1..cons.dual_min_weight as usize {
        rows.push(cols.iter().map(|c| Q::from_integer(c[j].clone())).collect());
        rhs.push(Q::from_integer(-k0[j].clone()));
    }

    let Some(sol) = solve_affine(&rows, &rhs) else {
        return Ok(vec![]);
    };
    let f = sol.free.len();
    let space = (total + 1).checked_pow(f as u32).unwrap_or(u128::MAX);
    if space > SOLVE_SEARCH_LIMIT {
        return Err(Error::SolveFailed(format!(
            "{f} free coefficients exceed the search limit"
        )));
    }
    let mut results = Vec::new();
    let mut assignment = vec![0u128; f];
    loop {
        let mut x = sol.particular.clone();
        for (t, kv) in assignment.iter().zip(&sol.kernel) {
            if *t != 0 {
                let tq = Q::from_integer(BigInt::from(*t));
                for (xi, ki) in x.iter_mut().zip(kv) {
                    *xi += &tq * ki;
                }
            }
        }
        if x.iter().all(|v| v.is_integer() && !v.is_negative()) {
            let mut p = UnivariatePoly::one();
            for (w, v) in weights.iter().zip(&x) {
                p.add_term(*w, v.clone());
            }
            if cons.is_satisfied_by(&p) {
                results.push(p);
            }
        }
        // odometer over free values
        let mut i = 0;
        loop {
            if i == f {
                return Ok(results);
            }
            assignment[i] += 1;
            if assignment[i] <= total {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Point set `0..v` with a list of blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    pub point_count: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl Design {
    /// `Some(λ)` iff the blocks have equal size and every pair of distinct
    /// points lies in exactly `λ` blocks.
    pub fn is_2_design(&self) -> Option<u64> {
        let first = self.blocks.first()?;
        if self.blocks.iter().any(|b| b.len() != first.len()) || self.point_count < 2 {
            return None;
        }
        let v = self.point_count;
        let mut pairs = vec![0u64; v * v];
        for b in &self.blocks {
            for (i, &p) in b.iter().enumerate() {
                for &q in &b[i + 1..] {
                    pairs[p * v + q] += 1;
                }
            }
        }
        let lambda = pairs[1];
        let uniform = (0..v).all(|p| (p + 1..v).all(|q| pairs[p * v + q] == lambda));
        uniform.then_some(lambda)
    }
}

/// Supports of the weight-`w` codewords of a binary code.
pub fn weight_words_design(c: &ZkCode, w: usize) -> Result<Design> {
    if c.modulus != 2 {
        return Err(Error::Invalid("designs are read from binary codes".into()));
    }
    let mut blocks = Vec::new();
    c.for_each_codeword(|word| {
        if word.iter().filter(|&&x| x != 0).count() == w && w > 0 {
            blocks.push(
                word.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, _)| i)
                    .collect(),
            );
        }
    })?;
    blocks.sort();
    Ok(Design {
        point_count: c.length,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_int;

    fn code(k: u32, rows: &[&[i64]]) -> ZkCode {
        let n = rows[0].len();
        ZkCode::new(k, n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn tetracode() -> ZkCode {
        code(3, &[&[1, 0, 1, 1], &[0, 1, 1, 2]])
    }

    fn hamming8() -> ZkCode {
        code(
            2,
            &[
                &[1, 1, 1, 1, 0, 0, 0, 0],
                &[0, 0, 1, 1, 1, 1, 0, 0],
                &[0, 0, 0, 0, 1, 1, 1, 1],
                &[0, 1, 0, 1, 0, 1, 0, 1],
            ],
        )
    }

    /// Oracle: brute-force dual over all of Z_k^n.
    fn brute_dual(c: &ZkCode) -> ZkCode {
        let k = c.modulus();
        let n = c.length();
        let words = c.codewords().unwrap();
        let mut rows = Vec::new();
        let total = (k as u64).pow(n as u32);
        for idx in 0..total {
            let mut x = vec![0u32; n];
            let mut t = idx;
            for xi in x.iter_mut() {
                *xi = (t % k as u64) as u32;
                t /= k as u64;
            }
            if words.iter().all(|w| inner_mod(&x, w, k) == 0) {
                rows.push(x.iter().map(|&v| v as i64).collect());
            }
        }
        ZkCode::new(k, n, &rows).unwrap()
    }

    #[test]
    fn dual_examples() {
        let c = code(4, &[&[2]]);
        assert_eq!(dual_code(&c), c);
        let c = code(2, &[&[1, 1]]);
        assert_eq!(dual_code(&c), c);
        let t = tetracode();
        assert_eq!(brute_dual(&t), t);
        assert_eq!(dual_code(&t), t);
    }

    #[test]
    fn canonical_form_and_cardinality() {
        let c = code(4, &[&[2, 1]]);
        assert_eq!(c.generators(), vec![vec![2, 1], vec![0, 2]]);
        assert_eq!(c.cardinality(), BigUint::from(4u32));
        assert_eq!(c.codewords().unwrap().len(), 4);
        // different generating sets, same code
        assert_eq!(code(4, &[&[2, 3]]), c);
        assert_eq!(code(6, &[&[2, 3]]).cardinality(), BigUint::from(6u32));
    }

    #[test]
    fn self_duality() {
        assert!(!is_self_dual(&code(2, &[&[1, 0]])));
        assert!(is_self_dual(&code(4, &[&[2, 0], &[0, 2]])));
        assert!(is_self_dual(&tetracode()));
        assert!(is_self_dual(&hamming8()));
    }

    #[test]
    fn hamming_enumerators() {
        assert_eq!(
            hamming_we(&code(2, &[&[1, 1]])).unwrap(),
            UnivariatePoly::from_terms([(0, 1), (2, 1)])
        );
        assert_eq!(
            hamming_we(&tetracode()).unwrap(),
            UnivariatePoly::from_terms([(0, 1), (3, 8)])
        );
        assert_eq!(
            hamming_we(&hamming8()).unwrap(),
            UnivariatePoly::from_terms([(0, 1), (4, 14), (8, 1)])
        );
    }

    #[test]
    fn macwilliams_examples() {
        let w = UnivariatePoly::from_terms([(0, 1), (2, 1)]);
        assert_eq!(macwilliams_dual_we(&w, 2, 2, 2).unwrap(), w);
        let rep = UnivariatePoly::from_terms([(0, 1), (3, 1)]);
        assert_eq!(
            macwilliams_dual_we(&rep, 3, 2, 2).unwrap(),
            UnivariatePoly::from_terms([(0, 1), (2, 3)])
        );
        let lemma = UnivariatePoly::from_terms([(0, 1), (16, 63), (20, 63), (36, 1)]);
        let dual = macwilliams_dual_we(&lemma, 36, 128, 2).unwrap();
        for j in 1..4 {
            assert!(dual.coeff(j).is_zero());
        }
        assert_eq!(dual.coefficient_sum(), q_int(1 << 29));
        // inconsistent input
        let bad = UnivariatePoly::from_terms([(0, 1), (2, 1)]);
        assert!(matches!(
            macwilliams_dual_we(&bad, 2, 3, 2),
            Err(Error::NonIntegerResult { .. })
        ));
    }

    #[test]
    fn residue_and_torsion() {
        let p = residue_torsion(&code(4, &[&[2]])).unwrap();
        assert_eq!(p.residue.cardinality(), BigUint::from(1u32));
        assert_eq!(p.torsion.cardinality(), BigUint::from(2u32));
        let c = code(4, &[&[1, 1, 1, 1], &[0, 2, 0, 2], &[0, 0, 2, 2]]);
        let p = residue_torsion(&c).unwrap();
        assert_eq!(p.residue, code(2, &[&[1, 1, 1, 1]]));
        assert_eq!(
            p.torsion,
            code(2, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]])
        );
    }

    #[test]
    fn euclidean_weights() {
        assert_eq!(euclidean_weight(&[1, 2, 3, 0]), 6);
        assert_eq!(euclidean_weight(&[2, 2]), 8);
        assert_eq!(euclidean_weight(&[0, 0, 0]), 0);
        let c = code(4, &[&[2, 0], &[0, 2]]);
        assert_eq!(min_euclidean_bounds(&c).unwrap(), (4, 4));
        assert_eq!(min_euclidean_weight_brute(&c).unwrap(), 4);
    }

    #[test]
    fn constrained_we_repetition() {
        let cons = WeConstraints {
            length: 8,
            dimension: 1,
            weights_divisible_by: 8,
            min_weight: 8,
            dual_min_weight: 1,
            contains_allone: Some(true),
        };
        assert_eq!(
            solve_constrained_we(&cons).unwrap(),
            vec![UnivariatePoly::from_terms([(0, 1), (8, 1)])]
        );
        let infeasible = WeConstraints {
            dimension: 3,
            ..cons
        };
        assert!(matches!(
            solve_constrained_we(&infeasible),
            Err(Error::NoSolution)
        ));
    }

    #[test]
    fn designs() {
        let d = weight_words_design(&hamming8(), 4).unwrap();
        assert_eq!(d.blocks.len(), 14);
        assert_eq!(d.is_2_design(), Some(3));
        let z = ZkCode::zero(2, 5).unwrap();
        let d = weight_words_design(&z, 2).unwrap();
        assert!(d.blocks.is_empty());
        assert_eq!(d.is_2_design(), None);
    }

    #[test]
    fn contains_codewords() {
        let t = tetracode();
        assert!(t.contains(&[1, 0, 1, 1]));
        assert!(t.contains(&[2, 2, 1, 0]));
        assert!(!t.contains(&[1, 0, 0, 0]));
    }
}
