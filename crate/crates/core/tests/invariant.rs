use num_traits::{One, Zero};
use proptest::prelude::*;
use unimod::invariant::{self, TrivariatePoly};
use unimod::linalg::{q_frac, q_int, Q};
use unimod::poly::UnivariatePoly;

#[test]
fn generator_sanity() {
    let g = invariant::ring_generators();
    let (one, zero) = (Q::one(), Q::zero());
    assert_eq!(g.beta6.eval(&one, &zero, &zero), one);
    assert_eq!(g.p.eval(&one, &one, &one), q_int(3));
    assert_eq!(g.delta36.degree(), 36);
    assert_eq!(g.alpha12.degree(), 12);
    assert_eq!(g.gamma18.degree(), 18);
}

#[test]
fn family_relations() {
    let f = invariant::extremal_cwe_family().unwrap();
    // a_k = c + s·a1 for k = 2..=7
    let expected = [
        (q_frac(3281, 13824), q_frac(-1, 64)),
        (q_frac(203, 4608), q_frac(-9, 256)),
        (q_frac(1763, 13824), q_frac(3, 128)),
        (q_frac(-277, 13824), q_frac(-1, 256)),
        (q_frac(1133, 1728), q_frac(3, 64)),
        (q_frac(-77, 1728), q_frac(-1, 64)),
    ];
    assert_eq!(f.relations, expected.to_vec());
    assert_eq!(f.coefficient(0, 15, 21), (q_int(15180), q_int(2916)));
    assert_eq!(invariant::admissible_a1(&f).unwrap(), q_frac(-15180, 2916));
}

/// Orbit coefficients of the admissible enumerator: `(i, j, l, coefficient, symmetric)`;
/// a symmetric entry stands for all six permutations of the exponents.
const ADMISSIBLE: &[(u32, u32, u32, i64, bool)] = &[
    (36, 0, 0, 1, false),
    (0, 36, 0, 1, false),
    (0, 0, 36, 1, false),
    (12, 12, 12, 78706260, false),
    (18, 18, 0, 682, false),
    (18, 0, 18, 682, false),
    (0, 18, 18, 682, false),
    (15, 15, 6, 7019232, false),
    (15, 6, 15, 7019232, false),
    (6, 15, 15, 7019232, false),
    (24, 6, 6, 29172, false),
    (6, 24, 6, 29172, false),
    (6, 6, 24, 29172, false),
    (18, 9, 9, 10260316, false),
    (9, 18, 9, 10260316, false),
    (9, 9, 18, 10260316, false),
    (12, 15, 9, 37995408, true),
    (12, 18, 6, 3924756, true),
    (12, 21, 3, 58344, true),
    (12, 24, 0, 102, true),
    (15, 18, 3, 170544, true),
    (21, 6, 9, 641784, true),
    (24, 3, 9, 6732, true),
];

fn permutations(i: u32, j: u32, l: u32) -> Vec<(u32, u32, u32)> {
    let mut v = vec![
        (i, j, l),
        (i, l, j),
        (j, i, l),
        (j, l, i),
        (l, i, j),
        (l, j, i),
    ];
    v.sort();
    v.dedup();
    v
}

#[test]
fn admissible_enumerator_matches_display() {
    let w = invariant::admissible_cwe().unwrap();
    let mut expected = TrivariatePoly::zero(36);
    for &(i, j, l, c, sym) in ADMISSIBLE {
        let monos = if sym {
            permutations(i, j, l)
        } else {
            vec![(i, j, l)]
        };
        for (a, b, d) in monos {
            expected.set(a, b, d, q_int(c));
        }
    }
    for ((i, j, l), c) in w.terms() {
        assert_eq!(
            *c,
            expected.coeff(i, j, l),
            "coefficient of x^{i} y^{j} z^{l}"
        );
    }
    assert_eq!(w, expected);
    assert!(w.is_integral_nonnegative());
    assert!(w.coeff(0, 15, 21).is_zero());
    // weight-12 stratum: 29172 + 2·102 + 2·6732
    let he = w.hamming();
    assert_eq!(he.coeff(12), q_int(42840));
    assert_eq!(he.coeff(0), Q::one());
    assert!(he.terms().all(|(e, c)| e % 3 == 0 && c.is_integer()));
    assert_eq!(he.coefficient_sum(), q_int(3i64.pow(18)));
}

#[test]
fn no_odd_one_count_words_of_full_weight() {
    let w = invariant::admissible_cwe().unwrap();
    assert!(invariant::odd_one_count_top_terms(&w).is_empty());
}

#[test]
fn gleason_solves() {
    let w = invariant::gleason_ternary_we(36, 9, 33).unwrap();
    let expected = UnivariatePoly::from_terms([
        (0, 1),
        (9, 888),
        (12, 34848),
        (15, 1432224),
        (18, 18377688),
        (21, 90482256),
        (24, 162551592),
        (27, 97883072),
        (30, 16178688),
        (33, 479232),
    ]);
    assert_eq!(w, expected);
    assert_eq!(w.coefficient_sum(), q_int(3i64.pow(18)));
    assert_eq!(
        invariant::gleason_ternary_we(4, 3, 4).unwrap(),
        invariant::gleason_g4()
    );
    assert_eq!(
        invariant::gleason_ternary_we(12, 6, 12).unwrap(),
        invariant::gleason_g12()
    );
    assert!(matches!(
        invariant::gleason_ternary_we(36, 3, 36),
        Err(unimod::Error::NonUnique { dimension: 3 })
    ));
    assert!(matches!(
        invariant::gleason_ternary_we(12, 9, 12),
        Err(unimod::Error::NoSolution)
    ));
}

#[test]
fn gleason_basis_matches_tetracode() {
    let c = unimod::code::ZkCode::new(3, 4, &[vec![1, 1, 1, 0], vec![0, 1, 2, 1]]).unwrap();
    assert_eq!(
        unimod::code::hamming_we(&c).unwrap(),
        invariant::gleason_g4()
    );
}

#[test]
fn theta_formulas() {
    let (t, s) = invariant::extremal_theta36(0).unwrap();
    assert_eq!(t.count_int(4), 42840);
    assert_eq!(s.count_int(5), 3799296);
    assert_eq!(s.count_int(3), 960);
    let (t, _) = invariant::extremal_theta36(2).unwrap();
    assert_eq!(t.count_int(4), 51032);
    assert!(invariant::extremal_theta36(17).is_err());

    let (t, s) = invariant::min3_theta36(0, 0).unwrap();
    assert_eq!(t.count_int(3), 960);
    assert_eq!(s.total(), s.count_int(5));
    let (_, s) = invariant::min3_theta36(60, 1).unwrap();
    assert_eq!(s.count_int(1), 1);
    assert_eq!(s.count_int(3), 0);
    assert!(invariant::min3_theta36(960, 0).is_err());
    assert!(invariant::min3_theta36(59, 1).is_err());

    // with alpha = 0 the neighbor norm-3 counts sum to 960, so 72 in one forces 888 in the other
    let (_, s) = invariant::extremal_theta36(0).unwrap();
    assert_eq!(s.count_int(3) - 72, 888);
}

#[test]
fn theta_derivation_matches_closed_forms() {
    for alpha in 0..=16 {
        let (t, s) = invariant::extremal_theta36(alpha).unwrap();
        assert_eq!(t.count_int(4) as i64, 42840 + 4096 * alpha);
        assert_eq!(t.count_int(5) as i64, 1916928 - 98304 * alpha);
        assert_eq!(s.count_int(1) as i64, alpha);
        assert_eq!(s.count_int(3) as i64, 960 - 60 * alpha);
        assert_eq!(s.count_int(5) as i64, 3799296 + 1734 * alpha);
        assert!(s
            .counts()
            .keys()
            .all(|k| k.is_integer() && k.to_integer() % 2 == 1));
    }
    for (alpha, beta) in [(0, 0), (60, 1), (120, 1), (300, 5), (900, 15)] {
        let (t, s) = invariant::min3_theta36(alpha, beta).unwrap();
        assert_eq!(t.count_int(3) as i64, 960 - alpha);
        assert_eq!(t.count_int(4) as i64, 42840 + 4096 * beta);
        assert_eq!(s.count_int(1) as i64, beta);
        assert_eq!(s.count_int(3) as i64, alpha - 60 * beta);
        assert_eq!(s.count_int(5) as i64, 3833856 - 36 * alpha + 1734 * beta);
    }
}

#[test]
fn theta_derivation_on_small_lattices() {
    use invariant::ThetaSide::{Lattice, Shadow};
    use unimod::lattice::Norm;
    let n = Norm::from_integer;
    // Z^8: 16 vectors of norm 1, shadow (Z + 1/2)^8 with 256 vectors of norm 2
    let (t, s) = invariant::theta_from_conditions(8, 2, &[(Lattice, n(1), 16)]).unwrap();
    assert_eq!(t.count_int(2), 112);
    assert_eq!(s.count_int(2), 256);
    // Z ⊕ E8: the shadow is (Z + 1/2) ⊕ E8
    let (t, s) = invariant::theta_from_conditions(9, 3, &[(Lattice, n(1), 2)]).unwrap();
    assert_eq!(t.count_int(2), 240);
    assert_eq!(s.count(Norm::new(1, 4)), 2);
    assert_eq!(s.count(Norm::new(9, 4)), 2 + 2 * 240);
    // one condition short in dimension 16
    assert!(matches!(
        invariant::theta_from_conditions(16, 2, &[(Shadow, n(2), 0)]),
        Err(unimod::Error::NonUnique { dimension: 1 })
    ));
}

#[test]
fn extremal_bounds() {
    assert_eq!(invariant::extremal_bound(36), 4);
    assert_eq!(invariant::extremal_bound(23), 3);
    assert_eq!(invariant::extremal_bound(24), 4);
    assert_eq!(invariant::extremal_bound(1), 2);
}

fn small_poly(d: u32) -> impl Strategy<Value = TrivariatePoly> {
    proptest::collection::vec(-5i64..=5, ((d + 1) * (d + 2) / 2) as usize).prop_map(move |cs| {
        let mut p = TrivariatePoly::zero(d);
        let mut it = cs.into_iter();
        for i in 0..=d {
            for j in 0..=d - i {
                p.set(i, j, d - i - j, q_int(it.next().unwrap()));
            }
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn multiplication_is_associative(f in small_poly(12), g in small_poly(12), h in small_poly(12)) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn multiplication_agrees_with_evaluation(f in small_poly(5), g in small_poly(7), x in -3i64..3, y in -3i64..3, z in -3i64..3) {
        let (x, y, z) = (q_int(x), q_int(y), q_int(z));
        prop_assert_eq!(f.mul(&g).eval(&x, &y, &z), f.eval(&x, &y, &z) * g.eval(&x, &y, &z));
    }
}
