//! Univariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::Q;

/// `Σ c_e y^e`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: BTreeMap<u32, Q>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    pub fn monomial(exp: u32, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Build from `(exponent, integer coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, Q::from_integer(BigInt::from(c)));
        }
        p
    }

    /// Dense integer coefficients starting at y^0.
    pub fn from_dense(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as u32, c)))
    }

    pub fn add_term(&mut self, exp: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: u32) -> Q {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Q)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest positive exponent, i.e. the minimum weight of a code enumerator.
    pub fn min_positive_exponent(&self) -> Option<u32> {
        self.coeffs.keys().copied().find(|&e| e > 0)
    }

    pub fn coefficient_sum(&self) -> Q {
        self.coeffs.values().fold(Q::zero(), |a, c| a + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Integer coefficient at `exp`, panicking if it is fractional or huge.
    pub fn int_coeff(&self, exp: u32) -> i64 {
        let c = self.coeff(exp);
        assert!(c.is_integer(), "coefficient of y^{exp} is not an integer");
        c.to_integer().to_i64().expect("coefficient exceeds i64")
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.coeffs {
            out.add_term(*e, c * s);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, y: &Q) -> Q {
        self.coeffs.iter().fold(Q::zero(), |acc, (e, c)| {
            acc + c * num_traits::pow(y.clone(), *e as usize)
        })
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "y")?,
                (1, false) => write!(f, "{a}y")?,
                (_, true) => write!(f, "y^{e}")?,
                (_, false) => write!(f, "{a}y^{e}")?,
            }
        }
        Ok(())
    }
}

pub fn format_rational(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Q::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

// JSON form: {"exponent": "numerator/denominator"}
impl Serialize for UnivariatePoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), format_rational(c)))
            .collect();
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UnivariatePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let m = BTreeMap::<String, String>::deserialize(d)?;
        let mut p = UnivariatePoly::zero();
        for (e, c) in m {
            let e: u32 = e.parse().map_err(D::Error::custom)?;
            let c = parse_rational(&c)
                .ok_or_else(|| D::Error::custom(format!("bad rational `{c}`")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}
