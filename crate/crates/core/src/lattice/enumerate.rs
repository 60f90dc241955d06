//! Fincke–Pohst / Schnorr–Euchner enumeration of short (coset) vectors.
//!
//! The search runs on a floating Cholesky factorization of an integer Gram
//! matrix with a small safety margin on the radius; every leaf is re-checked
//! with exact integer arithmetic, so results are exact. The tree is split
//! near the root and the subtrees are searched in parallel; per-subtree
//! results are merged in a fixed order.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000_000;

/// Vectors `y = den·x + num` (x ∈ Z^n) with `yᵀ G y <= bound`.
#[derive(Clone, Debug)]
pub struct EnumProblem<'a> {
    pub gram: &'a [Vec<i64>],
    /// Numerators of the coset shift, over `center_den`.
    pub center_num: Vec<i64>,
    pub center_den: i64,
    /// Exact bound on `yᵀ G y`.
    pub bound: i128,
    /// Enumerate one of each `±y` pair (only valid for the zero shift); the
    /// zero vector is skipped.
    pub half: bool,
    pub budget: u64,
}

struct Gso {
    mu: Vec<Vec<f64>>, // mu[i][j], j < i
    bstar: Vec<f64>,
}

fn cholesky(g: &[Vec<i64>]) -> Gso {
    let n = g.len();
    let mut mu = vec![vec![0f64; n]; n];
    let mut r = vec![vec![0f64; n]; n];
    let mut bstar = vec![0f64; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = g[i][j] as f64;
            for k in 0..j {
                s -= mu[j][k] * r[i][k];
            }
            if j < i {
                r[i][j] = s;
                mu[i][j] = s / bstar[j];
            } else {
                bstar[i] = s;
            }
        }
        assert!(bstar[i] > 0.0, "Gram matrix is not positive definite");
    }
    Gso { mu, bstar }
}

struct Ctx<'a> {
    p: &'a EnumProblem<'a>,
    gso: Gso,
    center: Vec<f64>,
    radius: f64,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
}

impl<'a> Ctx<'a> {
    fn new(p: &'a EnumProblem<'a>, nodes: &'a AtomicU64, abort: &'a AtomicBool) -> Self {
        let gso = cholesky(p.gram);
        let den = p.center_den as f64;
        let center: Vec<f64> = p.center_num.iter().map(|&c| c as f64 / den).collect();
        let r = p.bound as f64 / (den * den);
        let radius = r * (1.0 + 1e-9) + 1e-7;
        Ctx {
            p,
            gso,
            center,
            radius,
            nodes,
            abort,
        }
    }

    fn exact_norm(&self, x: &[i64], y: &mut [i64]) -> i128 {
        let den = self.p.center_den;
        for ((yi, &xi), &ci) in y.iter_mut().zip(x).zip(&self.p.center_num) {
            *yi = den * xi + ci;
        }
        let g = self.p.gram;
        let mut q: i128 = 0;
        for i in 0..y.len() {
            if y[i] == 0 {
                continue;
            }
            let row = &g[i];
            let mut s: i128 = 0;
            for j in 0..y.len() {
                s += row[j] as i128 * y[j] as i128;
            }
            q += s * y[i] as i128;
        }
        q
    }

    /// Depth-first search of levels `top-1 ..= stop` with `x[top..]` fixed.
    /// `leaf` is called with the full `x` whenever levels `stop..` are set and
    /// the partial norm is within the radius; returning `false` ends the search.
    fn search<F: FnMut(&[i64]) -> bool>(
        &self,
        x: &mut [i64],
        top: usize,
        stop: usize,
        mut leaf: F,
    ) -> Result<()> {
        let n = x.len();
        let mu = &self.gso.mu;
        let bstar = &self.gso.bstar;
        let c = &self.center;
        let half = self.p.half;
        let z = |x: &[i64], k: usize| x[k] as f64 + c[k];

        // partdist[i] = contribution of levels >= i
        let mut partdist = vec![0f64; n + 1];
        for i in (top..n).rev() {
            let s: f64 = (i + 1..n).map(|k| mu[k][i] * z(x, k)).sum();
            let t = z(x, i) + s;
            partdist[i] = partdist[i + 1] + bstar[i] * t * t;
        }
        if partdist[top] > self.radius {
            return Ok(());
        }
        if top == stop {
            leaf(x);
            return Ok(());
        }
        let mut stopped = false;
        let mut zero_above = vec![true; n + 1];
        for i in (top..n).rev() {
            zero_above[i] = zero_above[i + 1] && x[i] == 0;
        }
        // sigma[i][j] = Σ_{k >= j} mu[k][i] z_k; entries j <= hi[i] are stale
        let mut sigma = vec![vec![0f64; n + 1]; n];
        let mut hi: Vec<usize> = vec![n - 1; n];
        let mut ctr = vec![0f64; n];
        let mut dx = vec![0i64; n];
        let mut ddx = vec![0i64; n];
        let mut local_nodes: u64 = 0;

        let mut level = top - 1;
        macro_rules! enter {
            ($lv:expr) => {{
                let lv = $lv;
                for j in (lv + 1..=hi[lv]).rev() {
                    sigma[lv][j] = sigma[lv][j + 1] + mu[j][lv] * z(x, j);
                }
                if lv > 0 {
                    hi[lv - 1] = hi[lv - 1].max(hi[lv]).max(lv);
                }
                hi[lv] = lv;
                if half && zero_above[lv + 1] {
                    ctr[lv] = 0.0;
                    x[lv] = 0;
                } else {
                    ctr[lv] = -(c[lv] + sigma[lv][lv + 1]);
                    let r = ctr[lv].round();
                    x[lv] = r as i64;
                    let d = if ctr[lv] >= r { 1 } else { -1 };
                    dx[lv] = d;
                    ddx[lv] = d;
                }
            }};
        }
        macro_rules! advance {
            ($lv:expr) => {{
                let lv = $lv;
                if half && zero_above[lv + 1] {
                    x[lv] += 1;
                } else {
                    x[lv] += dx[lv];
                    ddx[lv] = -ddx[lv];
                    dx[lv] = ddx[lv] - dx[lv];
                }
                if lv > 0 {
                    hi[lv - 1] = hi[lv - 1].max(lv);
                }
            }};
        }
        enter!(level);
        loop {
            local_nodes += 1;
            if local_nodes & 0xffff == 0 {
                let total = self.nodes.fetch_add(0x10000, Ordering::Relaxed) + 0x10000;
                if total > self.p.budget {
                    self.abort.store(true, Ordering::Relaxed);
                }
                if self.abort.load(Ordering::Relaxed) {
                    return Err(Error::BudgetExceeded {
                        budget: self.p.budget,
                    });
                }
            }
            let t = x[level] as f64 - ctr[level];
            let d = partdist[level + 1] + bstar[level] * t * t;
            if d <= self.radius {
                if level == stop {
                    if !leaf(x) {
                        stopped = true;
                        break;
                    }
                    advance!(level);
                } else {
                    partdist[level] = d;
                    zero_above[level] = zero_above[level + 1] && x[level] == 0;
                    level -= 1;
                    enter!(level);
                }
            } else {
                // values at this level only move away from the center from here on
                if level + 1 == top {
                    break;
                }
                level += 1;
                advance!(level);
            }
        }
        let total = self
            .nodes
            .fetch_add(local_nodes & 0xffff, Ordering::Relaxed)
            + (local_nodes & 0xffff);
        if total > self.p.budget && !stopped {
            self.abort.store(true, Ordering::Relaxed);
            return Err(Error::BudgetExceeded {
                budget: self.p.budget,
            });
        }
        Ok(())
    }
}

/// Exhaustively visit every vector of the problem. `visit` receives the integer
/// coordinates `x` and the exact value `yᵀ G y`.
pub fn enumerate<S, M, V, G>(p: &EnumProblem<'_>, make: M, visit: V, merge: G) -> Result<S>
where
    S: Send,
    M: Fn() -> S + Sync,
    V: Fn(&mut S, &[i64], i128) + Sync,
    G: Fn(S, S) -> S,
{
    let n = p.gram.len();
    assert!(n > 0);
    assert_eq!(p.center_num.len(), n);
    let mut acc = make();
    if p.bound < 0 {
        return Ok(acc);
    }
    if p.half {
        assert!(
            p.center_num.iter().all(|&c| c == 0),
            "halving needs a zero shift"
        );
    }
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let ctx = Ctx::new(p, &nodes, &abort);

    // collect root prefixes deep enough to feed the thread pool
    let want = 64 * rayon::current_num_threads().max(1);
    let mut split = n;
    let mut prefixes: Vec<Vec<i64>> = vec![vec![0; n]];
    while split > 0 && prefixes.len() < want && n - split < 12 {
        let next = split - 1;
        let mut grown = Vec::new();
        for pre in &prefixes {
            let mut x = pre.clone();
            ctx.search(&mut x, split, next, |x| {
                grown.push(x.to_vec());
                true
            })?;
        }
        prefixes = grown;
        split = next;
        if prefixes.is_empty() {
            break;
        }
    }
    if split == n {
        // unreachable for n > 0, kept for clarity
        return Ok(acc);
    }

    let results: Vec<Result<S>> = prefixes
        .par_iter()
        .map(|pre| {
            let mut s = make();
            let mut x = pre.clone();
            let mut y = vec![0i64; n];
            if split == 0 {
                let q = ctx.exact_norm(&x, &mut y);
                if q <= p.bound && !(p.half && x.iter().all(|&v| v == 0)) {
                    visit(&mut s, &x, q);
                }
                return Ok(s);
            }
            ctx.search(&mut x, split, 0, |x| {
                if p.half && x.iter().all(|&v| v == 0) {
                    return true;
                }
                let q = ctx.exact_norm(x, &mut y);
                if q <= p.bound {
                    visit(&mut s, x, q);
                }
                true
            })?;
            Ok(s)
        })
        .collect();
    for r in results {
        acc = merge(acc, r?);
    }
    log::debug!(
        "enumeration visited ~{} nodes",
        nodes.load(Ordering::Relaxed)
    );
    Ok(acc)
}

/// Some vector of the problem (not necessarily the shortest), searched
/// sequentially in Schnorr–Euchner order.
pub fn find_first(p: &EnumProblem<'_>) -> Result<Option<(Vec<i64>, i128)>> {
    let n = p.gram.len();
    assert!(n > 0);
    assert_eq!(p.center_num.len(), n);
    if p.bound < 0 {
        return Ok(None);
    }
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let ctx = Ctx::new(p, &nodes, &abort);
    let mut x = vec![0i64; n];
    let mut y = vec![0i64; n];
    let mut hit = None;
    ctx.search(&mut x, n, 0, |x| {
        if p.half && x.iter().all(|&v| v == 0) {
            return true;
        }
        let q = ctx.exact_norm(x, &mut y);
        if q <= p.bound {
            hit = Some((x.to_vec(), q));
            return false;
        }
        true
    })?;
    Ok(hit)
}
