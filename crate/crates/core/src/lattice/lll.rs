//! LLL reduction with floating Gram–Schmidt data and exact integer basis
//! updates (Schnorr–Euchner). Only the reduction quality depends on floating
//! point; the returned basis always spans the input lattice exactly.

use crate::linalg::dot_i64;

pub const LLL_DELTA: f64 = 0.99;

/// Reduce `basis` in place and return the unimodular transform `U` with
/// `new_basis = U · old_basis`.
pub fn lll_reduce(basis: &mut [Vec<i64>], delta: f64) -> Vec<Vec<i64>> {
    let n = basis.len();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    if n <= 1 {
        return u;
    }
    let mut mu = vec![vec![0f64; n]; n];
    let mut r = vec![vec![0f64; n]; n];
    let mut bstar = vec![0f64; n];
    let dot = |a: &[i64], b: &[i64]| dot_i64(a, b) as f64;

    bstar[0] = dot(&basis[0], &basis[0]);
    r[0][0] = bstar[0];
    let mut k = 1;
    let mut iterations: u64 = 0;
    while k < n {
        iterations += 1;
        assert!(iterations < 100_000_000, "LLL failed to terminate");
        // size reduction of b_k, repeated while large multipliers appear
        loop {
            for j in 0..k {
                let mut s = dot(&basis[k], &basis[j]);
                for i in 0..j {
                    s -= mu[j][i] * r[k][i];
                }
                r[k][j] = s;
                mu[k][j] = s / bstar[j];
            }
            let mut big = false;
            for j in (0..k).rev() {
                let q = mu[k][j].round();
                if q != 0.0 {
                    if q.abs() > 1e9 {
                        big = true;
                    }
                    let qi = q as i64;
                    let (lo, hi) = basis.split_at_mut(k);
                    for (x, y) in hi[0].iter_mut().zip(&lo[j]) {
                        *x = x
                            .checked_sub(qi.checked_mul(*y).expect("LLL overflow"))
                            .expect("LLL overflow");
                    }
                    let (ulo, uhi) = u.split_at_mut(k);
                    for (x, y) in uhi[0].iter_mut().zip(&ulo[j]) {
                        *x -= qi * y;
                    }
                    let (mlo, mhi) = mu.split_at_mut(k);
                    for (x, y) in mhi[0][..j].iter_mut().zip(&mlo[j][..j]) {
                        *x -= q * y;
                    }
                    mu[k][j] -= q;
                }
            }
            if !big {
                break;
            }
        }
        // recompute r[k][*] consistently with the reduced b_k
        let mut nk = dot(&basis[k], &basis[k]);
        for j in 0..k {
            let mut s = dot(&basis[k], &basis[j]);
            for i in 0..j {
                s -= mu[j][i] * r[k][i];
            }
            r[k][j] = s;
            mu[k][j] = s / bstar[j];
            nk -= mu[k][j] * s;
        }
        bstar[k] = nk;
        if delta * bstar[k - 1] > bstar[k] + mu[k][k - 1] * mu[k][k - 1] * bstar[k - 1] {
            basis.swap(k, k - 1);
            u.swap(k, k - 1);
            if k > 1 {
                k -= 1;
            } else {
                bstar[0] = dot(&basis[0], &basis[0]);
                r[0][0] = bstar[0];
            }
        } else {
            k += 1;
        }
    }
    u
}
