//! Exact integer and rational linear algebra.
//!
//! Everything here is small-dimensional (n <= ~72) and exactness matters far
//! more than speed, so the implementations are plain big-number algorithms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_rational(m: &[Vec<BigInt>]) -> Vec<Vec<Q>> {
    m.iter()
        .map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect())
        .collect()
}

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

pub fn det_i64(m: &[Vec<i64>]) -> BigInt {
    det_bareiss(&to_big(m))
}

/// Inverse of a square rational matrix, `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(piv, col);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve `x · m = v` for a row vector `x` (m square, nonsingular).
pub fn solve_left(m: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let inv = inverse(m)?;
    let n = m.len();
    Some(
        (0..n)
            .map(|j| (0..n).fold(Q::zero(), |acc, i| acc + &v[i] * &inv[i][j]))
            .collect(),
    )
}

/// Affine solution set `{particular + Σ t_i kernel_i}` of a linear system.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Vec<Q>,
    pub kernel: Vec<Vec<Q>>,
    /// Pivot column of each independent equation, in order.
    pub pivots: Vec<usize>,
    /// Columns left free.
    pub free: Vec<usize>,
    /// Reduced rows `[coeffs | rhs]` for the pivot equations.
    pub reduced: Vec<(Vec<Q>, Q)>,
}

/// Solve `a · x = b` exactly by reduction to row echelon form. Returns `None`
/// when inconsistent.
pub fn solve_affine(a: &[Vec<Q>], b: &[Q]) -> Option<AffineSolution> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<(Vec<Q>, Q)> = a.iter().cloned().zip(b.iter().cloned()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i].0[c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r].0[c].recip();
        for x in m[r].0.iter_mut() {
            *x *= &inv;
        }
        m[r].1 *= &inv;
        let (pr, prhs) = m[r].clone();
        for (i, (row, rhs)) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pr) {
                    *x -= &f * p;
                }
                *rhs -= &f * &prhs;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|(_, rhs)| !rhs.is_zero()) {
        return None;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut particular = vec![Q::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = m[i].1.clone();
    }
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i].0[f].clone();
            }
            v
        })
        .collect();
    m.truncate(r);
    Some(AffineSolution {
        particular,
        kernel,
        pivots,
        free,
        reduced: m,
    })
}

fn modp(x: &BigInt, d: &BigInt) -> BigInt {
    x.mod_floor(d)
}

/// Row-style Hermite normal form of the full-rank lattice generated by `rows`
/// together with `d·Z^n` (so `d` must be a multiple of the lattice exponent,
/// e.g. its determinant, or the modulus `k` of a code lifted with `kZ^n`).
///
/// Returns the `n × n` upper-triangular basis with positive pivots and the
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hnf_modular(rows: &[Vec<BigInt>], d: &BigInt) -> Vec<Vec<BigInt>> {
    assert!(d.is_positive(), "modulus must be positive");
    let n = rows.first().map_or(0, Vec::len);
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|x| modp(x, d)).collect())
        .filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for col in 0..n {
        // gcd-eliminate column `col` among the working rows
        loop {
            let mut nz: Vec<usize> = (0..work.len())
                .filter(|&i| !work[i][col].is_zero())
                .collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by(|&a, &b| work[a][col].cmp(&work[b][col]));
            let p = nz[0];
            let pr = work[p].clone();
            for &i in &nz[1..] {
                let q = work[i][col].div_floor(&pr[col]);
                for (x, y) in work[i].iter_mut().zip(&pr) {
                    *x = modp(&(&*x - &q * y), d);
                }
            }
        }
        let idx = (0..work.len()).find(|&i| !work[i][col].is_zero());
        let pivot_row = match idx {
            None => {
                let mut e = vec![BigInt::zero(); n];
                e[col] = d.clone();
                e
            }
            Some(i) => {
                let w = work.swap_remove(i);
                let ext = w[col].extended_gcd(d);
                let g = ext.gcd.clone();
                // h = u·w (mod d) has g in column `col`
                let mut h: Vec<BigInt> = w.iter().map(|x| modp(&(&ext.x * x), d)).collect();
                h[col] = g.clone();
                // (d/g)·w is zero in column `col` modulo d and must stay available
                let dg = d / &g;
                let rest: Vec<BigInt> = w.iter().map(|x| modp(&(&dg * x), d)).collect();
                if rest.iter().any(|x| !x.is_zero()) {
                    work.push(rest);
                }
                h
            }
        };
        out.push(pivot_row);
        for r in work.iter_mut() {
            debug_assert!(r[col].is_zero());
            r[col] = BigInt::zero();
        }
        work.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    // exact back-reduction of entries above pivots, left to right so that
    // earlier columns stay reduced
    for col in 0..n {
        let (upper, lower) = out.split_at_mut(col);
        let pr = &lower[0];
        let piv = pr[col].clone();
        for row in upper.iter_mut() {
            let q = row[col].div_floor(&piv);
            if !q.is_zero() {
                for (x, y) in row.iter_mut().zip(pr.iter()) {
                    *x -= &q * y;
                }
            }
        }
    }
    out
}

/// Hermite normal form of a full-rank integer lattice given by a spanning set
/// that contains `n` independent rows (the first `n` rows are used to obtain a
/// determinant bound when `d` is not supplied).
pub fn hnf_lattice(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let big = to_big(rows);
    let n = rows.first().map_or(0, Vec::len);
    let d = independent_det(&big, n);
    assert!(!d.is_zero(), "rows do not span a full-rank lattice");
    from_big(&hnf_modular(&big, &d))
}

/// |det| of the first `n` linearly independent rows found greedily.
fn independent_det(rows: &[Vec<BigInt>], n: usize) -> BigInt {
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    for r in rows {
        let mut trial = chosen.clone();
        trial.push(r.clone());
        if rank_q(&to_rational(&trial)) == trial.len() {
            chosen = trial;
            if chosen.len() == n {
                break;
            }
        }
    }
    if chosen.len() < n {
        return BigInt::zero();
    }
    det_bareiss(&chosen).abs()
}

pub fn rank_q(m: &[Vec<Q>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let zeros = vec![Q::zero(); m.len()];
    solve_affine(m, &zeros).map_or(0, |s| cols - s.free.len())
}

pub fn from_big(m: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().expect("entry exceeds i64"))
                .collect()
        })
        .collect()
}

pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let s: i128 = (0..inner).map(|k| row[k] as i128 * b[k][j] as i128).sum();
                    i64::try_from(s).expect("matrix product overflows i64")
                })
                .collect()
        })
        .collect()
}

pub fn dot_i64(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// `B · Bᵀ` for an integer basis.
pub fn gram_int(basis: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = basis.len();
    let mut g = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = i64::try_from(dot_i64(&basis[i], &basis[j])).expect("Gram entry overflows i64");
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_small_cases() {
        assert_eq!(det_i64(&[vec![2, 1], vec![1, 1]]), BigInt::from(1));
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(
            det_i64(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]),
            BigInt::from(0)
        );
        assert_eq!(
            det_i64(&[vec![2, 0, 0], vec![1, 3, 0], vec![5, 7, 4]]),
            BigInt::from(24)
        );
    }

    #[test]
    fn hnf_of_code_lattice() {
        // Z_4-span{(2,1)} lifted with 4Z^2
        let h = hnf_modular(&to_big(&[vec![2, 1]]), &BigInt::from(4));
        assert_eq!(from_big(&h), vec![vec![2, 1], vec![0, 2]]);
        // already triangular basis is left alone
        let h = hnf_lattice(&[vec![1, 0], vec![1000, 1]]);
        assert_eq!(h, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn hnf_spanning_set() {
        // D4 plus the glue vector (1,1,1,1)/2 scaled by 2
        let rows = vec![
            vec![2, 2, 0, 0],
            vec![0, 2, 2, 0],
            vec![0, 0, 2, 2],
            vec![0, 0, 2, -2],
            vec![1, 1, 1, 1],
        ];
        let h = hnf_lattice(&rows);
        assert_eq!(det_i64(&h).abs(), BigInt::from(16));
        for (i, r) in h.iter().enumerate() {
            assert!(r[i] > 0);
            assert!(r[..i].iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn affine_solve_reports_kernel() {
        let a = vec![
            vec![q_int(1), q_int(1), q_int(0)],
            vec![q_int(0), q_int(1), q_int(1)],
        ];
        let s = solve_affine(&a, &[q_int(2), q_int(3)]).unwrap();
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(s.free, vec![2]);
        // x = (-1, 3, 0) + t(1, -1, 1)
        assert_eq!(s.particular, vec![q_int(-1), q_int(3), q_int(0)]);
        assert_eq!(s.kernel[0], vec![q_int(1), q_int(-1), q_int(1)]);
        assert!(solve_affine(&[vec![q_int(0)]], &[q_int(1)]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = to_rational(&to_big(&[vec![2, 1], vec![1, 1]]));
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, to_rational(&to_big(&[vec![1, -1], vec![-1, 2]])));
    }
}
