use unimod::code::ZkCode;
use unimod::construction;
use unimod::glue::{self, AnalyzeOptions, LatticeReport};
use unimod::lattice::{self, EnumOptions, Lattice, Norm};
use unimod::linalg::q_int;
use unimod::Error;

fn opts() -> EnumOptions {
    EnumOptions::default()
}

fn n(v: i64) -> Norm {
    Norm::from_integer(v)
}

fn tetracode_lattice() -> Lattice {
    let t = ZkCode::new(3, 4, &[vec![1, 1, 1, 0], vec![0, 1, 2, 1]]).unwrap();
    construction::construction_a(&t).unwrap()
}

/// `E_8 ⊕ Z` from the octacode plus a `{0, 2}` coordinate.
fn e8_plus_z() -> Lattice {
    let rows = vec![
        vec![1, 0, 0, 0, 3, 1, 2, 1, 0],
        vec![0, 1, 0, 0, 1, 2, 3, 1, 0],
        vec![0, 0, 1, 0, 3, 3, 3, 2, 0],
        vec![0, 0, 0, 1, 2, 3, 1, 1, 0],
        vec![0, 0, 0, 0, 0, 0, 0, 0, 2],
    ];
    construction::construction_a(&ZkCode::new(4, 9, &rows).unwrap()).unwrap()
}

#[test]
fn even_part_of_z4_is_d4() {
    let z = Lattice::integer_lattice(4);
    let d4 = glue::even_sublattice(&z).unwrap();
    assert_eq!(d4.determinant(), q_int(4));
    let theta = lattice::theta_prefix(&d4, n(2), opts()).unwrap();
    assert_eq!(theta.count_int(2), 24);
    assert_eq!(theta.count_int(1), 0);
}

#[test]
fn neighbors_of_z4_and_z8() {
    let (a, b) = glue::neighbors(&Lattice::integer_lattice(4)).unwrap();
    for l in [a, b] {
        assert!(l.is_unimodular());
        assert_eq!(
            lattice::theta_prefix(&l, n(1), opts())
                .unwrap()
                .count_int(1),
            8
        );
    }
    let (a, b) = glue::neighbors(&Lattice::integer_lattice(8)).unwrap();
    for l in [a, b] {
        let theta = lattice::theta_prefix(&l, n(2), opts()).unwrap();
        assert_eq!(theta.count_int(1), 0);
        assert_eq!(theta.count_int(2), 240);
    }
}

#[test]
fn shadow_of_integer_lattices() {
    let z5 = Lattice::integer_lattice(5);
    let s = glue::shadow(&z5).unwrap();
    assert_eq!(s.shadow_min(n(0), opts()).unwrap(), Norm::new(5, 4));
    let theta = s.shadow_theta(Norm::new(5, 4), opts()).unwrap();
    assert_eq!(theta.count(Norm::new(5, 4)), 32);

    let z20 = Lattice::integer_lattice(20);
    let s = glue::shadow(&z20).unwrap();
    assert_eq!(s.shadow_min(n(1), opts()).unwrap(), n(5));
    assert_eq!(
        glue::n_counts(&Lattice::integer_lattice(36), opts()).unwrap(),
        [0, 0]
    );
}

#[test]
fn cosets_add_up() {
    for l in [
        Lattice::integer_lattice(4),
        tetracode_lattice(),
        e8_plus_z(),
    ] {
        let bound = n(3);
        let s = glue::shadow(&l).unwrap();
        let even = lattice::theta_prefix(&s.even_part, bound, opts()).unwrap();
        let odd = lattice::short_vectors_in_coset(
            &s.even_part,
            &s.coset_reps[s.in_lattice_index],
            bound,
            opts(),
        )
        .unwrap();
        let whole = lattice::theta_prefix(&l, bound, opts()).unwrap();
        assert_eq!(even.merged(&odd), whole);
        assert!(even
            .counts()
            .keys()
            .all(|k| k.is_integer() && k.to_integer() % 2 == 0));
        assert!(odd
            .counts()
            .keys()
            .all(|k| k.is_integer() && k.to_integer() % 2 == 1));
        // shadow norms are congruent to n/4 mod 2
        let sh = s.shadow_theta(n(6), opts()).unwrap();
        let quarter = Norm::new(l.dim() as i64, 4);
        for k in sh.counts().keys() {
            let d = *k - quarter;
            assert!(d.is_integer() && d.to_integer() % 2 == 0, "shadow norm {k}");
        }
    }
}

#[test]
fn neighbor_theta_is_even_part_plus_shadow_coset() {
    let l = e8_plus_z();
    assert!(matches!(
        glue::neighbors(&l),
        Err(Error::DimensionNotDivisibleBy4(9))
    ));
    let l = tetracode_lattice();
    let s = glue::shadow(&l).unwrap();
    let (na, nb) = glue::neighbors(&l).unwrap();
    let [ca, cb] = s.coset_thetas(n(3), opts()).unwrap();
    let even = lattice::theta_prefix(&s.even_part, n(3), opts()).unwrap();
    assert_eq!(
        lattice::theta_prefix(&na, n(3), opts()).unwrap(),
        even.merged(&ca)
    );
    assert_eq!(
        lattice::theta_prefix(&nb, n(3), opts()).unwrap(),
        even.merged(&cb)
    );
}

#[test]
fn even_lattices_are_rejected() {
    let e8 = glue::neighbors(&Lattice::integer_lattice(8)).unwrap().0;
    assert!(matches!(glue::shadow(&e8), Err(Error::NotOdd)));
    let d4 = glue::even_sublattice(&Lattice::integer_lattice(4)).unwrap();
    assert!(matches!(glue::shadow(&d4), Err(Error::NotUnimodular)));
}

#[test]
fn report_of_z20() {
    let z = Lattice::integer_lattice(20);
    let r = glue::analyze(
        &z,
        AnalyzeOptions {
            bound: n(1),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(r.min_norm, Some(n(1)));
    assert_eq!(r.kissing, Some(40));
    assert_eq!(r.alpha, 0);
    assert_eq!(r.shadow_min, Some(n(5)));
    assert_eq!(r.n_counts, Some([0, 0]));
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<LatticeReport>(&json).unwrap(), r);
}

#[test]
fn report_of_odd_dimension_has_fractional_shadow() {
    let r = glue::analyze(&e8_plus_z(), AnalyzeOptions::default()).unwrap();
    assert_eq!(r.min_norm, Some(n(1)));
    assert_eq!(r.kissing, Some(2));
    assert_eq!(r.shadow_min, Some(Norm::new(1, 4)));
    assert_eq!(r.n_counts, None);
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"1/4\""), "{json}");
    assert_eq!(serde_json::from_str::<LatticeReport>(&json).unwrap(), r);
}

#[test]
fn long_shadow_refuses_other_counts() {
    let l = construction::construction_a(&construction::dataset("C36_1").unwrap()).unwrap();
    assert!(glue::long_shadow_extract(&l, opts()).unwrap().is_none());
    assert!(
        glue::long_shadow_extract(&Lattice::integer_lattice(36), opts())
            .unwrap()
            .is_none()
    );
}
