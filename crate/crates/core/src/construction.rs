//! Lattices from codes (Construction A), the two generator-matrix builders
//! used for the length-36 codes, and the embedded code data.

use crate::code::{self, dual_code, is_self_dual, ZkCode};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// `A_k(C) = (1/√k)·{x ∈ Z^n : x mod k ∈ C}`.
///
/// The basis is the HNF of the lifted generators stacked on `k·I`, at scale `k`.
/// Unimodular exactly when `C` is self-dual.
pub fn construction_a(c: &ZkCode) -> Result<Lattice> {
    if !is_self_dual(c) {
        return Err(Error::NotSelfDual {
            reason: "Construction A input must be self-dual".into(),
        });
    }
    let l = Lattice::new(c.lift_basis().to_vec(), u64::from(c.modulus()))?;
    if !l.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(l)
}

/// Square matrix whose row `i + 1` is row `i` shifted right, the wrapped entry
/// negated. Entries are reduced into `[0, k)`.
pub fn negacirculant(r: &[i64], k: u32) -> Vec<Vec<i64>> {
    let m = r.len();
    let k = i64::from(k);
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if j >= i { r[j - i] } else { -r[m + j - i] }.rem_euclid(k))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegacirculantSpec {
    pub modulus: u32,
    pub first_row_a: Vec<i64>,
    pub first_row_b: Vec<i64>,
}

impl NegacirculantSpec {
    pub fn new(modulus: u32, first_row_a: Vec<i64>, first_row_b: Vec<i64>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Invalid(format!("modulus {modulus} < 2")));
        }
        if first_row_a.len() != first_row_b.len() || first_row_a.is_empty() {
            return Err(Error::Invalid(
                "first rows must have the same nonzero length".into(),
            ));
        }
        let k = i64::from(modulus);
        if first_row_a
            .iter()
            .chain(&first_row_b)
            .any(|&x| !(0..k).contains(&x))
        {
            return Err(Error::Invalid(format!(
                "entries must lie in [0, {modulus})"
            )));
        }
        Ok(Self {
            modulus,
            first_row_a,
            first_row_b,
        })
    }

    pub fn matrices(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        (
            negacirculant(&self.first_row_a, self.modulus),
            negacirculant(&self.first_row_b, self.modulus),
        )
    }

    /// `A·Aᵀ + B·Bᵀ mod k`.
    pub fn gram_sum(&self) -> Vec<Vec<i64>> {
        let (a, b) = self.matrices();
        let k = i64::from(self.modulus);
        let m = a.len();
        let dot = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(p, q)| p * q).sum::<i64>();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| (dot(&a[i], &a[j]) + dot(&b[i], &b[j])).rem_euclid(k))
                    .collect()
            })
            .collect()
    }

    /// Whether `A·Aᵀ + B·Bᵀ ≡ −I (mod k)`.
    pub fn satisfies_identity(&self) -> bool {
        let k = i64::from(self.modulus);
        self.gram_sum().iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, &x)| x == if i == j { k - 1 } else { 0 })
        })
    }
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j]).collect())
        .collect()
}

/// The code generated by `(I | [[A, B], [−Bᵀ, Aᵀ]])`, length `4m` for `m × m`
/// negacirculant `A`, `B`.
pub fn build_double_negacirculant(spec: &NegacirculantSpec) -> Result<ZkCode> {
    if !spec.satisfies_identity() {
        let g = spec.gram_sum();
        let k = i64::from(spec.modulus);
        let (i, j) = (0..g.len())
            .flat_map(|i| (0..g.len()).map(move |j| (i, j)))
            .find(|&(i, j)| g[i][j] != if i == j { k - 1 } else { 0 })
            .expect("identity fails somewhere");
        return Err(Error::NotSelfDual {
            reason: format!("A·Aᵀ + B·Bᵀ has entry {} at ({i}, {j}) mod {k}", g[i][j]),
        });
    }
    let (a, b) = spec.matrices();
    let k = i64::from(spec.modulus);
    let m = a.len();
    let (at, bt) = (transpose(&a), transpose(&b));
    let rows: Vec<Vec<i64>> = (0..2 * m)
        .map(|i| {
            let mut row = vec![0i64; 4 * m];
            row[i] = 1;
            let (left, right) = if i < m {
                (&a[i], &b[i])
            } else {
                (&bt[i - m], &at[i - m])
            };
            for j in 0..m {
                if i < m {
                    row[2 * m + j] = left[j];
                    row[3 * m + j] = right[j];
                } else {
                    row[2 * m + j] = (-left[j]).rem_euclid(k);
                    row[3 * m + j] = right[j];
                }
            }
            row
        })
        .collect();
    let c = ZkCode::new(spec.modulus, 4 * m, &rows)?;
    if !is_self_dual(&c) {
        return Err(Error::NotSelfDual {
            reason: "generated code is not self-dual".into(),
        });
    }
    Ok(c)
}

/// The `r × (n − r)` block `M` of a `Z_4` generator row set `(I_r | M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Seed {
    length: usize,
    rows: Vec<Vec<i64>>,
}

impl Z4Seed {
    pub fn new(length: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        if r > length {
            return Err(Error::Invalid(format!("{r} rows exceed length {length}")));
        }
        if rows.iter().any(|row| row.len() != length - r) {
            return Err(Error::Invalid(format!(
                "seed rows must have {} entries",
                length - r
            )));
        }
        if rows.iter().flatten().any(|x| !(0..4).contains(x)) {
            return Err(Error::Invalid("seed entries must lie in [0, 4)".into()));
        }
        Ok(Self { length, rows })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The rows `(I_r | M)`.
    pub fn generator_rows(&self) -> Vec<Vec<i64>> {
        let r = self.rows.len();
        self.rows
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let mut row = vec![0i64; r];
                row[i] = 1;
                row.extend_from_slice(m);
                row
            })
            .collect()
    }
}

/// Self-dual `Z_4` code with rows `(I_r | M)` and torsion code equal to the
/// dual of the residue code: the rows are completed by `2·g` for every
/// generator `g` of the binary dual of the residue.
pub fn build_z4(seed: &Z4Seed) -> Result<ZkCode> {
    let n = seed.length;
    let top = seed.generator_rows();
    let bar: Vec<Vec<i64>> = top
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(2)).collect())
        .collect();
    let residue = ZkCode::new(2, n, &bar)?;
    let gens = residue.generators();
    for (i, a) in gens.iter().enumerate() {
        let wt = a.iter().filter(|&&x| x == 1).count();
        if wt % 4 != 0 {
            return Err(Error::NotDoublyEven {
                reason: format!("residue generator {i} has weight {wt}"),
            });
        }
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            let meet = a.iter().zip(b).filter(|&(&x, &y)| x == 1 && y == 1).count();
            if meet % 2 != 0 {
                return Err(Error::NotDoublyEven {
                    reason: format!("residue generators {i} and {j} meet in {meet} coordinates"),
                });
            }
        }
    }
    let mut rows = top;
    for g in dual_code(&residue).generators() {
        rows.push(g.iter().map(|&x| 2 * i64::from(x)).collect());
    }
    let c = ZkCode::new(4, n, &rows)?;
    if !is_self_dual(&c) {
        return Err(Error::CompletionFailed);
    }
    Ok(c)
}

/// Embedded code identifiers, in display order.
pub const DATASET_NAMES: [&str; 21] = [
    "C36_1", "C36_2", "C36_3", "C36_4", "C36_5", "C36_6", "C36_7", "C36_8", "C36_9", "C36_10",
    "D36_1", "D36_2", "D36_3", "D36_4", "D36_5", "D36_6", "D36_7", "D36_8", "D36_9", "E36_1",
    "E36_2",
];

macro_rules! data_file {
    ($($name:literal => $file:literal),* $(,)?) => {
        fn raw_data(name: &str) -> Option<&'static str> {
            match name {
                $($name => Some(include_str!(concat!("../data/", $file))),)*
                _ => None,
            }
        }
    };
}

data_file! {
    "C36_1" => "C36_1.seed", "C36_2" => "C36_2.seed", "C36_3" => "C36_3.seed",
    "C36_4" => "C36_4.seed", "C36_5" => "C36_5.seed", "C36_6" => "C36_6.seed",
    "C36_7" => "C36_7.seed", "C36_8" => "C36_8.seed", "C36_9" => "C36_9.seed",
    "C36_10" => "C36_10.seed",
    "D36_1" => "D36_1.nega", "D36_2" => "D36_2.nega", "D36_3" => "D36_3.nega",
    "D36_4" => "D36_4.nega", "D36_5" => "D36_5.nega", "D36_6" => "D36_6.nega",
    "D36_7" => "D36_7.nega", "D36_8" => "D36_8.nega", "D36_9" => "D36_9.nega",
    "E36_1" => "E36_1.nega", "E36_2" => "E36_2.nega",
}

/// The raw text of an embedded data file.
pub fn dataset_text(name: &str) -> Result<&'static str> {
    raw_data(name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Source data of an embedded code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatasetEntry {
    /// `Z_4` code from `(I_7 | M)`, completed to self-duality.
    Z4(Z4Seed),
    /// Double-negacirculant code over `Z_k`.
    Negacirculant(NegacirculantSpec),
}

pub fn dataset_entry(name: &str) -> Result<DatasetEntry> {
    let text = dataset_text(name)?;
    let (k, cols, rows) = code::parse_code_matrix(text)?;
    if name.starts_with('C') {
        if k != 4 {
            return Err(Error::Parse(format!("{name}: seed modulus must be 4")));
        }
        Ok(DatasetEntry::Z4(Z4Seed::new(cols + rows.len(), rows)?))
    } else {
        let [a, b]: [Vec<i64>; 2] = rows
            .try_into()
            .map_err(|_| Error::Parse(format!("{name}: expected two first rows")))?;
        Ok(DatasetEntry::Negacirculant(NegacirculantSpec::new(
            k, a, b,
        )?))
    }
}

/// The embedded code with the given identifier.
pub fn dataset(name: &str) -> Result<ZkCode> {
    match dataset_entry(name)? {
        DatasetEntry::Z4(seed) => build_z4(&seed),
        DatasetEntry::Negacirculant(spec) => build_double_negacirculant(&spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negacirculant_rows() {
        assert_eq!(negacirculant(&[0, 1], 5), vec![vec![0, 1], vec![4, 0]]);
        assert_eq!(negacirculant(&[1, 2, 3], 7)[1], vec![4, 1, 2]);
        assert_eq!(negacirculant(&[1, 2, 3], 7)[2], vec![5, 4, 1]);
    }

    #[test]
    fn zero_rows_fail_identity() {
        let spec = NegacirculantSpec::new(5, vec![0; 9], vec![0; 9]).unwrap();
        assert!(matches!(
            build_double_negacirculant(&spec),
            Err(Error::NotSelfDual { .. })
        ));
    }

    #[test]
    fn empty_seed_gives_twice_the_ambient_code() {
        let c = build_z4(&Z4Seed::new(2, vec![]).unwrap()).unwrap();
        let mut words = c.codewords().unwrap();
        words.sort();
        assert_eq!(words, vec![vec![0, 0], vec![0, 2], vec![2, 0], vec![2, 2]]);
    }

    #[test]
    fn odd_residue_is_rejected() {
        let seed = Z4Seed::new(4, vec![vec![1, 1, 0]]).unwrap();
        assert!(matches!(build_z4(&seed), Err(Error::NotDoublyEven { .. })));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(dataset("C36_11"), Err(Error::UnknownName(_))));
    }
}
