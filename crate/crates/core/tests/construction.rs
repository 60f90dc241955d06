use proptest::prelude::*;
use unimod::code::{self, ZkCode};
use unimod::construction::{self, DatasetEntry, NegacirculantSpec, Z4Seed};
use unimod::lattice::{self, EnumOptions, Lattice, Norm};
use unimod::poly::UnivariatePoly;
use unimod::Error;

fn opts() -> EnumOptions {
    EnumOptions::default()
}

#[test]
fn every_dataset_code_is_self_dual() {
    for name in construction::DATASET_NAMES {
        let c = construction::dataset(name).unwrap();
        assert_eq!(c.length(), 36, "{name}");
        assert!(code::is_self_dual(&c), "{name}");
        let l = construction::construction_a(&c).unwrap();
        assert!(l.is_unimodular(), "{name}");
    }
}

#[test]
fn negacirculant_specs_satisfy_the_identity() {
    for name in construction::DATASET_NAMES
        .iter()
        .filter(|n| !n.starts_with('C'))
    {
        let DatasetEntry::Negacirculant(spec) = construction::dataset_entry(name).unwrap() else {
            panic!("{name} is not a negacirculant entry");
        };
        assert!(spec.satisfies_identity(), "{name}");
        let k = i64::from(spec.modulus);
        let g = spec.gram_sum();
        for (i, row) in g.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j { k - 1 } else { 0 };
                assert_eq!(x.rem_euclid(k), want, "{name} entry ({i}, {j})");
            }
        }
    }
}

#[test]
fn z4_residues_meet_the_weight_enumerator() {
    let expected = UnivariatePoly::from_terms([(0, 1), (16, 63), (20, 63), (36, 1)]);
    for name in construction::DATASET_NAMES
        .iter()
        .filter(|n| n.starts_with('C'))
    {
        let c = construction::dataset(name).unwrap();
        let pair = code::residue_torsion(&c).unwrap();
        assert_eq!(code::hamming_we(&pair.residue).unwrap(), expected, "{name}");
        assert_eq!(code::min_euclidean_bounds(&c).unwrap(), (16, 16), "{name}");
    }
}

#[test]
fn broken_negacirculant_is_rejected() {
    let DatasetEntry::Negacirculant(spec) = construction::dataset_entry("D36_1").unwrap() else {
        panic!("D36_1 is a negacirculant entry");
    };
    let mut a = spec.first_row_a.clone();
    a[0] = (a[0] + 1) % i64::from(spec.modulus);
    let bad = NegacirculantSpec::new(spec.modulus, a, spec.first_row_b.clone()).unwrap();
    assert!(!bad.satisfies_identity());
    assert!(matches!(
        construction::build_double_negacirculant(&bad),
        Err(Error::NotSelfDual { .. })
    ));
}

#[test]
fn construction_a_rejects_non_self_dual_codes() {
    let c = ZkCode::new(2, 2, &[vec![1, 0]]).unwrap();
    assert!(matches!(
        construction::construction_a(&c),
        Err(Error::NotSelfDual { .. })
    ));
}

#[test]
fn tetracode_lattice() {
    let t = ZkCode::new(3, 4, &[vec![1, 1, 1, 0], vec![0, 1, 2, 1]]).unwrap();
    let l = construction::construction_a(&t).unwrap();
    assert!(l.is_unimodular());
    let theta = lattice::theta_prefix(&l, Norm::from_integer(3), opts()).unwrap();
    assert_eq!(theta.count_int(1), 8);
    assert_eq!(theta.min_norm(), Some(Norm::from_integer(1)));
}

#[test]
fn hamming_code_gives_e8() {
    let h = ZkCode::new(
        2,
        8,
        &[
            vec![1, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 1, 1, 1, 0, 0],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
            vec![0, 1, 0, 1, 0, 1, 0, 1],
        ],
    )
    .unwrap();
    let l = construction::construction_a(&h).unwrap();
    let theta = lattice::theta_prefix(&l, Norm::from_integer(2), opts()).unwrap();
    assert_eq!(theta.count_int(2), 240);
    assert_eq!(theta.count_int(1), 0);
}

#[test]
fn lattice_text_round_trip() {
    let l = construction::construction_a(&construction::dataset("E36_2").unwrap()).unwrap();
    assert_eq!(Lattice::from_text(&l.to_text()).unwrap(), l);
}

/// A self-dual `Z_4` code of length 8 with minimum Euclidean weight 8.
fn octacode_rows() -> Vec<Vec<i64>> {
    vec![
        vec![1, 0, 0, 0, 3, 1, 2, 1],
        vec![0, 1, 0, 0, 1, 2, 3, 1],
        vec![0, 0, 1, 0, 3, 3, 3, 2],
        vec![0, 0, 0, 1, 2, 3, 1, 1],
    ]
}

#[test]
fn octacode_gives_e8() {
    let c = ZkCode::new(4, 8, &octacode_rows()).unwrap();
    assert!(code::is_self_dual(&c));
    assert_eq!(code::min_euclidean_weight_brute(&c).unwrap(), 8);
    let l = construction::construction_a(&c).unwrap();
    let theta = lattice::theta_prefix(&l, Norm::from_integer(2), opts()).unwrap();
    assert_eq!(theta.count_int(2), 240);
}

#[test]
fn seeds_build_through_the_completion() {
    // residue spanned by the all-one word of length 8
    let seed = Z4Seed::new(8, vec![vec![1, 3, 1, 3, 1, 3, 1]]).unwrap();
    let c = construction::build_z4(&seed).unwrap();
    assert!(code::is_self_dual(&c));
    assert_eq!(code::min_euclidean_weight_brute(&c).unwrap(), 8);
}

#[derive(Clone, Copy, Debug)]
enum Block {
    /// `{0, 2}` in one coordinate.
    Two,
    /// An odd lift of `1111` completed by twice its binary dual.
    Four([i64; 3]),
    Octacode,
}

impl Block {
    fn rows(self) -> Vec<Vec<i64>> {
        match self {
            Block::Two => vec![vec![2]],
            Block::Four(s) => {
                vec![
                    vec![1, s[0], s[1], s[2]],
                    vec![2, 2, 0, 0],
                    vec![0, 2, 2, 0],
                    vec![0, 0, 2, 2],
                ]
            }
            Block::Octacode => octacode_rows(),
        }
    }

    fn len(self) -> usize {
        match self {
            Block::Two => 1,
            Block::Four(_) => 4,
            Block::Octacode => 8,
        }
    }
}

fn block() -> impl Strategy<Value = Block> {
    let sign = prop::sample::select(vec![1i64, 3]);
    prop_oneof![
        Just(Block::Two),
        [sign.clone(), sign.clone(), sign].prop_map(Block::Four),
        Just(Block::Octacode),
    ]
}

/// Direct sums of small self-dual blocks, with coordinates permuted and negated.
fn small_self_dual_z4() -> impl Strategy<Value = ZkCode> {
    prop::collection::vec(block(), 1..=3)
        .prop_filter("length at most 12", |bs| {
            bs.iter().map(|b| b.len()).sum::<usize>() <= 12
        })
        .prop_flat_map(|bs| {
            let n: usize = bs.iter().map(|b| b.len()).sum();
            let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
            (Just(bs), perm, prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(bs, perm, neg)| {
            let n = perm.len();
            let mut rows = Vec::new();
            let mut offset = 0;
            for b in bs {
                for r in b.rows() {
                    let mut row = vec![0i64; n];
                    for (i, &x) in r.iter().enumerate() {
                        let p = perm[offset + i];
                        row[p] = if neg[p] { (4 - x) % 4 } else { x };
                    }
                    rows.push(row);
                }
                offset += b.len();
            }
            ZkCode::new(4, n, &rows).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn min_norm_follows_euclidean_weight(c in small_self_dual_z4()) {
        prop_assert!(code::is_self_dual(&c));
        let de = code::min_euclidean_weight_brute(&c).unwrap();
        let l = construction::construction_a(&c).unwrap();
        let m = lattice::min_norm(&l, Norm::from_integer(4), opts()).unwrap();
        let expected = Norm::new(i64::from(de.min(16)), 4);
        prop_assert_eq!(m, Some(expected));
    }
}
