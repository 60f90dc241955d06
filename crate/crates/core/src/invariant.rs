//! Complete weight enumerators of ternary codes as homogeneous polynomials,
//! the Gleason-basis solve for ternary Hamming enumerators, and the theta
//! prefixes forced on odd unimodular lattices in dimension 36.
//!
//! Monomials `x^i y^j z^l` count codewords with `i` zeros, `j` ones and `l`
//! twos, so the Hamming weight of a monomial is `j + l = d − i`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{Norm, ThetaPrefix};
use crate::linalg::{self, q_int, Q};
use crate::poly::{format_rational, UnivariatePoly};

/// Homogeneous polynomial in `x, y, z` with dense rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivariatePoly {
    degree: u32,
    /// `coeffs[pos(i, j)]` is the coefficient of `x^i y^j z^(d−i−j)`.
    coeffs: Vec<Q>,
}

impl TrivariatePoly {
    pub fn zero(degree: u32) -> Self {
        let n = ((degree + 1) * (degree + 2) / 2) as usize;
        Self {
            degree,
            coeffs: vec![Q::zero(); n],
        }
    }

    /// `c · x^i y^j z^l`.
    pub fn monomial(c: Q, i: u32, j: u32, l: u32) -> Self {
        let mut p = Self::zero(i + j + l);
        p.set(i, j, l, c);
        p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, i: u32, j: u32, l: u32) -> Q {
        if i + j + l != self.degree {
            return Q::zero();
        }
        self.coeffs[self.pos(i, j)].clone()
    }

    pub fn set(&mut self, i: u32, j: u32, l: u32, c: Q) {
        assert_eq!(i + j + l, self.degree, "monomial degree mismatch");
        let p = self.pos(i, j);
        self.coeffs[p] = c;
    }

    fn pos(&self, i: u32, j: u32) -> usize {
        let d = self.degree as usize;
        let (i, j) = (i as usize, j as usize);
        // rows 0..i hold (d+1) + d + ... + (d−i+2) entries
        i * (d + 1) - i * i.saturating_sub(1) / 2 + j
    }

    /// Nonzero terms `((i, j, l), c)`, ordered by decreasing `i`, then decreasing `j`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), &Q)> + '_ {
        let d = self.degree;
        (0..=d)
            .rev()
            .flat_map(move |i| (0..=d - i).rev().map(move |j| (i, j, d - i - j)))
            .filter_map(move |(i, j, l)| {
                let c = &self.coeffs[self.pos(i, j)];
                (!c.is_zero()).then_some(((i, j, l), c))
            })
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(
            self.degree, other.degree,
            "adding polynomials of different degree"
        );
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            degree: self.degree,
            coeffs,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (d1, d2) = (self.degree, other.degree);
        let mut out = Self::zero(d1 + d2);
        let rhs: Vec<((u32, u32), &Q)> = (0..=d2)
            .flat_map(|i| (0..=d2 - i).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), &other.coeffs[other.pos(i, j)]))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for i in 0..=d1 {
            for j in 0..=d1 - i {
                let a = &self.coeffs[self.pos(i, j)];
                if a.is_zero() {
                    continue;
                }
                for &((k, m), b) in &rhs {
                    let p = out.pos(i + k, j + m);
                    out.coeffs[p] += a * b;
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::monomial(Q::one(), 0, 0, 0);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Q, y: &Q, z: &Q) -> Q {
        self.terms().fold(Q::zero(), |acc, ((i, j, l), c)| {
            acc + c
                * num_traits::pow(x.clone(), i as usize)
                * num_traits::pow(y.clone(), j as usize)
                * num_traits::pow(z.clone(), l as usize)
        })
    }

    /// `Σ_{i+j+l = d} c · y^(j+l)`: the Hamming weight enumerator.
    pub fn hamming(&self) -> UnivariatePoly {
        let mut out = UnivariatePoly::zero();
        for ((i, _, _), c) in self.terms() {
            out.add_term(self.degree - i, c.clone());
        }
        out
    }

    /// Whether `x^i y^j z^l` and `x^i y^l z^j` have equal coefficients throughout.
    pub fn is_symmetric_in_y_z(&self) -> bool {
        self.terms().all(|((i, j, l), c)| self.coeff(i, l, j) == *c)
    }

    pub fn is_integral_nonnegative(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

fn format_monomial(i: u32, j: u32, l: u32) -> String {
    let mut parts = Vec::new();
    for (v, e) in [("x", i), ("y", j), ("z", l)] {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join(" ")
}

impl fmt::Display for TrivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j, l), c) in self.terms() {
            let mono = format_monomial(i, j, l);
            let neg = c.is_negative();
            let mag = c.abs();
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            f.write_str(sep)?;
            if mono.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{} {}", format_rational(&mag), mono)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

// {"x^i y^j z^l": "num/den"}
impl Serialize for TrivariatePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        for ((i, j, l), c) in self.terms() {
            m.serialize_entry(&format!("{i},{j},{l}"), &format_rational(c))?;
        }
        m.end()
    }
}

/// The polynomials generating the ring that contains the complete weight
/// enumerators considered here.
#[derive(Clone, Debug)]
pub struct RingGenerators {
    /// `x³ + y³ + z³`
    pub a: TrivariatePoly,
    /// `3xyz`
    pub p: TrivariatePoly,
    /// `x³y³ + x³z³ + y³z³`
    pub b: TrivariatePoly,
    /// `a(a³ + 8p³)`
    pub alpha12: TrivariatePoly,
    /// `a² − 12b`
    pub beta6: TrivariatePoly,
    /// `a⁶ − 20a³p³ − 8p⁶`
    pub gamma18: TrivariatePoly,
    /// `p³(a³ − p³)³`
    pub delta36: TrivariatePoly,
}

fn mono(c: i64, i: u32, j: u32, l: u32) -> TrivariatePoly {
    TrivariatePoly::monomial(q_int(c), i, j, l)
}

pub fn ring_generators() -> RingGenerators {
    let a = mono(1, 3, 0, 0)
        .add(&mono(1, 0, 3, 0))
        .add(&mono(1, 0, 0, 3));
    let p = mono(3, 1, 1, 1);
    let b = mono(1, 3, 3, 0)
        .add(&mono(1, 3, 0, 3))
        .add(&mono(1, 0, 3, 3));
    let a3 = a.pow(3);
    let p3 = p.pow(3);
    let alpha12 = a.mul(&a3.add(&p3.scale(&q_int(8))));
    let beta6 = a.pow(2).add(&b.scale(&q_int(-12)));
    let gamma18 = a3
        .pow(2)
        .add(&a3.mul(&p3).scale(&q_int(-20)))
        .add(&p3.pow(2).scale(&q_int(-8)));
    let delta36 = p3.mul(&a3.add(&p3.scale(&q_int(-1))).pow(3));
    RingGenerators {
        a,
        p,
        b,
        alpha12,
        beta6,
        gamma18,
        delta36,
    }
}

/// The seven degree-36 products whose combinations form the family.
fn family_basis(g: &RingGenerators) -> [TrivariatePoly; 7] {
    let b2 = g.beta6.pow(2);
    [
        g.delta36.clone(),
        g.alpha12.pow(3),
        g.alpha12.pow(2).mul(&b2),
        g.alpha12.mul(&b2.pow(2)),
        b2.pow(3),
        g.beta6.mul(&g.gamma18).mul(&g.alpha12),
        g.beta6.mul(&g.gamma18).mul(&b2),
    ]
}

/// Degree-36 combinations `Σ a_k P_k` with leading term `x^36` and no terms of
/// Hamming weight 1..=11, parametrized by the free coefficient `a₁`.
#[derive(Clone, Debug)]
pub struct CweFamily {
    basis: [TrivariatePoly; 7],
    /// `a_k = constant + slope · a₁` for `k = 2..=7`.
    pub relations: Vec<(Q, Q)>,
}

impl CweFamily {
    /// Coefficients `a₁..a₇` at the given `a₁`.
    pub fn coefficients(&self, a1: &Q) -> Vec<Q> {
        std::iter::once(a1.clone())
            .chain(self.relations.iter().map(|(c, s)| c + s * a1))
            .collect()
    }

    pub fn evaluate(&self, a1: &Q) -> TrivariatePoly {
        self.coefficients(a1)
            .iter()
            .zip(&self.basis)
            .fold(TrivariatePoly::zero(36), |acc, (c, p)| acc.add(&p.scale(c)))
    }

    /// The coefficient of `x^i y^j z^l` as `constant + slope · a₁`.
    pub fn coefficient(&self, i: u32, j: u32, l: u32) -> (Q, Q) {
        let c0 = self.evaluate(&Q::zero()).coeff(i, j, l);
        let c1 = self.evaluate(&Q::one()).coeff(i, j, l);
        let slope = &c1 - &c0;
        (c0, slope)
    }
}

/// Smallest Hamming weight allowed besides 0 in the family.
const FAMILY_MIN_WEIGHT: u32 = 12;

pub fn extremal_cwe_family() -> Result<CweFamily> {
    let basis = family_basis(&ring_generators());
    let d = 36;
    // rows: x^36 coefficient = 1, then every monomial with weight 1..=11 vanishes
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    rows.push(basis.iter().map(|p| p.coeff(d, 0, 0)).collect());
    rhs.push(Q::one());
    for w in 1..FAMILY_MIN_WEIGHT {
        let i = d - w;
        for j in 0..=w {
            let row: Vec<Q> = basis.iter().map(|p| p.coeff(i, j, w - j)).collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
                rhs.push(Q::zero());
            }
        }
    }
    // solve for a₂..a₇ with a₁ moved to the right-hand side, at a₁ = 0 and 1
    let sub: Vec<Vec<Q>> = rows.iter().map(|r| r[1..].to_vec()).collect();
    let solve = |a1: &Q| -> Result<Vec<Q>> {
        let b: Vec<Q> = rows.iter().zip(&rhs).map(|(r, v)| v - &r[0] * a1).collect();
        let sol = linalg::solve_affine(&sub, &b)
            .ok_or_else(|| Error::SolveFailed("family system is inconsistent".into()))?;
        if !sol.kernel.is_empty() {
            return Err(Error::SolveFailed(format!(
                "family has {} extra free parameters",
                sol.kernel.len()
            )));
        }
        Ok(sol.particular)
    };
    let at0 = solve(&Q::zero())?;
    let at1 = solve(&Q::one())?;
    let relations = at0
        .iter()
        .zip(&at1)
        .map(|(c, e)| (c.clone(), e - c))
        .collect();
    Ok(CweFamily { basis, relations })
}

/// `a₁` making the `y¹⁵z²¹` coefficient vanish.
pub fn admissible_a1(family: &CweFamily) -> Result<Q> {
    let (c, s) = family.coefficient(0, 15, 21);
    if s.is_zero() {
        return Err(Error::SolveFailed(
            "y^15 z^21 coefficient does not depend on a1".into(),
        ));
    }
    Ok(-c / s)
}

/// The member of the family with no `y¹⁵z²¹` term.
pub fn admissible_cwe() -> Result<TrivariatePoly> {
    let family = extremal_cwe_family()?;
    let a1 = admissible_a1(&family)?;
    let w = family.evaluate(&a1);
    if !w.is_integral_nonnegative() {
        return Err(Error::ConstraintViolated(
            "admissible enumerator has a non-integral or negative coefficient".into(),
        ));
    }
    Ok(w)
}

/// Weight-36 monomials `y^j z^l` with an odd number `j` of ones and a nonzero
/// coefficient.
pub fn odd_one_count_top_terms(w: &TrivariatePoly) -> Vec<(u32, u32, Q)> {
    let d = w.degree();
    (0..=d)
        .filter(|j| j % 2 == 1)
        .map(|j| (j, d - j, w.coeff(0, j, d - j)))
        .filter(|(_, _, c)| !c.is_zero())
        .collect()
}

/// `1 + 8y³`, the enumerator of the ternary tetracode.
pub fn gleason_g4() -> UnivariatePoly {
    UnivariatePoly::from_terms([(0, 1), (3, 8)])
}

/// `1 + 264y⁶ + 440y⁹ + 24y¹²`, the enumerator of the ternary Golay code.
pub fn gleason_g12() -> UnivariatePoly {
    UnivariatePoly::from_terms([(0, 1), (6, 264), (9, 440), (12, 24)])
}

/// The Hamming enumerator of a ternary self-dual code of length `n` with all
/// nonzero weights in `min_weight..=max_weight`, written in the basis
/// `g₄^((n−12k)/4) g₁₂^k`.
pub fn gleason_ternary_we(n: u32, min_weight: u32, max_weight: u32) -> Result<UnivariatePoly> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(Error::Invalid(format!(
            "length {n} is not a positive multiple of 4"
        )));
    }
    let basis: Vec<UnivariatePoly> = (0..=n / 12)
        .map(|k| {
            gleason_g4()
                .pow((n - 12 * k) / 4)
                .mul(&gleason_g12().pow(k))
        })
        .collect();
    let mut rows = vec![basis.iter().map(|p| p.coeff(0)).collect::<Vec<Q>>()];
    let mut rhs = vec![Q::one()];
    for e in (1..min_weight).chain(max_weight + 1..=n) {
        let row: Vec<Q> = basis.iter().map(|p| p.coeff(e)).collect();
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
            rhs.push(Q::zero());
        }
    }
    let sol = linalg::solve_affine(&rows, &rhs).ok_or(Error::NoSolution)?;
    if !sol.kernel.is_empty() {
        return Err(Error::NonUnique {
            dimension: sol.kernel.len(),
        });
    }
    Ok(basis
        .iter()
        .zip(&sol.particular)
        .fold(UnivariatePoly::zero(), |acc, (p, c)| acc.add(&p.scale(c))))
}

/// Power series in `t = q^{1/4}`, truncated to a fixed number of terms.
#[derive(Clone, Debug)]
struct QuarterSeries(Vec<Q>);

impl QuarterSeries {
    fn one(len: usize) -> Self {
        let mut c = vec![Q::zero(); len];
        c[0] = Q::one();
        Self(c)
    }

    /// `Σ_{m ∈ Z} sign(m) t^{exponent(m)}` over the `m` with exponent below `len`.
    fn lattice_sum(len: usize, exponent: impl Fn(i64) -> i64, sign: impl Fn(i64) -> i64) -> Self {
        let mut c = vec![Q::zero(); len];
        let reach = (len as f64).sqrt() as i64 + 1;
        for m in -reach..=reach {
            let e = exponent(m);
            if (0..len as i64).contains(&e) {
                c[e as usize] += q_int(sign(m));
            }
        }
        Self(c)
    }

    fn mul(&self, other: &Self) -> Self {
        let len = self.0.len();
        let mut c = vec![Q::zero(); len];
        for (i, a) in self.0.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.0[..len - i].iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self(c)
    }

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.0.len()), |acc, _| acc.mul(self))
    }

    fn scale(&self, c: &Q) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }
}

/// Which series a theta condition refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaSide {
    Lattice,
    Shadow,
}

/// Theta and shadow prefixes of an odd unimodular lattice of dimension `n`,
/// to norm `max_norm`, from `θ_L = Σ_r a_r θ_3^{n−8r} Δ_8^r` with
/// `Δ_8 = θ_2^4 θ_4^4 / 16` and `θ_S = Σ_r a_r (−1/16)^r θ_2^{n−8r} (θ_3 θ_4)^{4r}`.
/// The `a_r` are fixed by `a_0 = 1` and the conditions `(side, norm, count)`.
pub fn theta_from_conditions(
    n: u32,
    max_norm: i64,
    conditions: &[(ThetaSide, Norm, i64)],
) -> Result<(ThetaPrefix, ThetaPrefix)> {
    let len = 4 * max_norm as usize + 1;
    let theta2 = QuarterSeries::lattice_sum(len, |m| (2 * m + 1) * (2 * m + 1), |_| 1);
    let theta3 = QuarterSeries::lattice_sum(len, |m| 4 * m * m, |_| 1);
    let theta4 =
        QuarterSeries::lattice_sum(len, |m| 4 * m * m, |m| if m % 2 == 0 { 1 } else { -1 });
    let delta8 = theta2
        .pow(4)
        .mul(&theta4.pow(4))
        .scale(&linalg::q_frac(1, 16));
    let theta34 = theta3.mul(&theta4);
    let ranks = n / 8 + 1;
    let mut lattice_basis = Vec::new();
    let mut shadow_basis = Vec::new();
    for r in 0..ranks {
        lattice_basis.push(theta3.pow(n - 8 * r).mul(&delta8.pow(r)));
        let c = linalg::q_frac(-1, 16).pow(r as i32);
        shadow_basis.push(theta2.pow(n - 8 * r).mul(&theta34.pow(4 * r)).scale(&c));
    }
    let mut rows = vec![(0..ranks)
        .map(|r| q_int(i64::from(r == 0)))
        .collect::<Vec<Q>>()];
    let mut rhs = vec![Q::one()];
    for &(side, norm, count) in conditions {
        let e = norm * Norm::from_integer(4);
        if !e.is_integer() || e.to_integer() < 0 || e.to_integer() as usize >= len {
            return Err(Error::Invalid(format!("norm {norm} outside the series")));
        }
        let basis = if side == ThetaSide::Lattice {
            &lattice_basis
        } else {
            &shadow_basis
        };
        rows.push(
            basis
                .iter()
                .map(|s| s.0[e.to_integer() as usize].clone())
                .collect(),
        );
        rhs.push(q_int(count));
    }
    let sol = linalg::solve_affine(&rows, &rhs).ok_or(Error::NoSolution)?;
    if !sol.kernel.is_empty() {
        return Err(Error::NonUnique {
            dimension: sol.kernel.len(),
        });
    }
    let combine = |basis: &[QuarterSeries]| -> Result<ThetaPrefix> {
        let mut t = ThetaPrefix::new(Norm::from_integer(max_norm));
        for e in 0..len {
            let c: Q = basis
                .iter()
                .zip(&sol.particular)
                .map(|(s, a)| &s.0[e] * a)
                .sum();
            if !c.is_integer() || c.is_negative() {
                return Err(Error::ConstraintViolated(format!(
                    "coefficient {c} at norm {e}/4"
                )));
            }
            let count = c
                .to_integer()
                .try_into()
                .map_err(|_| Error::ConstraintViolated(format!("coefficient {c} too large")))?;
            t.add(Norm::new(e as i64, 4), count);
        }
        Ok(t)
    };
    Ok((combine(&lattice_basis)?, combine(&shadow_basis)?))
}

/// Theta and shadow prefixes (to norm 5) of an odd unimodular lattice in
/// dimension 36 with minimum norm 4 and `alpha` shadow vectors of norm 1.
pub fn extremal_theta36(alpha: i64) -> Result<(ThetaPrefix, ThetaPrefix)> {
    if !(0..=16).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let n = Norm::from_integer;
    let conditions = [
        (ThetaSide::Lattice, n(1), 0),
        (ThetaSide::Lattice, n(2), 0),
        (ThetaSide::Lattice, n(3), 0),
        (ThetaSide::Shadow, n(1), alpha),
    ];
    theta_from_conditions(36, 5, &conditions)
}

/// Theta and shadow prefixes (to norm 5) of an odd unimodular lattice in
/// dimension 36 with minimum norm at least 3, `960 − alpha` vectors of norm 3
/// and `beta` shadow vectors of norm 1.
pub fn min3_theta36(alpha: i64, beta: i64) -> Result<(ThetaPrefix, ThetaPrefix)> {
    if beta < 0 || 60 * beta > alpha || alpha >= 960 {
        return Err(Error::ConstraintViolated(format!(
            "need 0 <= beta <= alpha/60 < 16, got alpha={alpha}, beta={beta}"
        )));
    }
    let n = Norm::from_integer;
    let conditions = [
        (ThetaSide::Lattice, n(1), 0),
        (ThetaSide::Lattice, n(2), 0),
        (ThetaSide::Lattice, n(3), 960 - alpha),
        (ThetaSide::Shadow, n(1), beta),
    ];
    theta_from_conditions(36, 5, &conditions)
}

/// Upper bound on the minimum norm of an odd unimodular lattice of dimension `n`.
pub fn extremal_bound(n: u32) -> u32 {
    if n == 23 {
        3
    } else {
        2 * (n / 24) + 2
    }
}
