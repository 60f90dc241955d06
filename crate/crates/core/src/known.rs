//! Reference values that computed results are compared against.

use crate::invariant::TrivariatePoly;
use crate::linalg::q_int;
use crate::poly::UnivariatePoly;

/// Invariants of the Construction A lattice of a dataset code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedRow {
    pub name: &'static str,
    pub kissing: u64,
    /// Norm-3 counts of the two neighbors, ascending.
    pub n_counts: [u64; 2],
}

const fn row(name: &'static str, kissing: u64, n_counts: [u64; 2]) -> ExpectedRow {
    ExpectedRow {
        name,
        kissing,
        n_counts,
    }
}

/// One row per entry of [`crate::construction::DATASET_NAMES`], same order.
pub const DATASET_ROWS: [ExpectedRow; 21] = [
    row("C36_1", 51032, [0, 840]),
    row("C36_2", 42840, [0, 960]),
    row("C36_3", 51032, [0, 840]),
    row("C36_4", 51032, [0, 840]),
    row("C36_5", 51032, [0, 840]),
    row("C36_6", 42840, [0, 960]),
    row("C36_7", 42840, [0, 960]),
    row("C36_8", 42840, [0, 960]),
    row("C36_9", 51032, [0, 840]),
    row("C36_10", 51032, [0, 840]),
    row("D36_1", 42840, [144, 816]),
    row("D36_2", 42840, [456, 504]),
    row("D36_3", 42840, [240, 720]),
    row("D36_4", 42840, [240, 720]),
    row("D36_5", 42840, [288, 672]),
    row("D36_6", 42840, [144, 816]),
    row("D36_7", 42840, [144, 816]),
    row("D36_8", 42840, [384, 576]),
    row("D36_9", 42840, [288, 672]),
    row("E36_1", 42840, [456, 504]),
    row("E36_2", 42840, [384, 576]),
];

pub fn dataset_row(name: &str) -> Option<ExpectedRow> {
    DATASET_ROWS.iter().copied().find(|r| r.name == name)
}

/// Dataset codes whose lattice has a neighbor of minimum norm 3 with 960
/// norm-3 vectors and shadow minimum 5.
pub const LONG_SHADOW_SOURCES: [&str; 4] = ["C36_2", "C36_6", "C36_7", "C36_8"];

/// Frame graph data of those neighbors: vertices, valency, maximum clique.
pub const LONG_SHADOW_FRAME_GRAPH: (usize, usize, usize) = (480, 368, 12);

/// Weight enumerator of a doubly even `[36, 7, 16]` code with dual distance 4.
pub fn doubly_even_36_7() -> UnivariatePoly {
    UnivariatePoly::from_terms([(0, 1), (16, 63), (20, 63), (36, 1)])
}

/// Weight enumerator of a doubly even `[36, 8, 16]` code with dual distance 4.
pub fn doubly_even_36_8() -> UnivariatePoly {
    UnivariatePoly::from_terms([(0, 1), (16, 153), (20, 72), (24, 30)])
}

/// Weight enumerator of a ternary self-dual `[36, 18, 9]` code whose
/// maximum weight is 33.
pub fn ternary_36_9_33() -> UnivariatePoly {
    UnivariatePoly::from_terms([
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
    ])
}

/// `a_k = c + s·a₁` for `k = 2..=7` in the extremal complete weight
/// enumerator family, as `(c_num, c_den, s_num, s_den)`.
pub const CWE_RELATIONS: [(i64, i64, i64, i64); 6] = [
    (3281, 13824, -1, 64),
    (203, 4608, -9, 256),
    (1763, 13824, 3, 128),
    (-277, 13824, -1, 256),
    (1133, 1728, 3, 64),
    (-77, 1728, -1, 64),
];

/// The `y^15 z^21` coefficient of the family as `(constant, slope in a₁)`.
pub const CWE_TOP_COEFFICIENT: (i64, i64) = (15180, 2916);

/// Closed forms of the dimension-36 theta prefixes with minimum norm 4:
/// `[θ_4, θ_5, S_1, S_3, S_5]` at the given `alpha`.
pub fn extremal_theta36_closed(alpha: i64) -> [i64; 5] {
    [
        42840 + 4096 * alpha,
        1916928 - 98304 * alpha,
        alpha,
        960 - 60 * alpha,
        3799296 + 1734 * alpha,
    ]
}

/// Closed forms with minimum norm at least 3: `[θ_3, θ_4, S_1, S_3, S_5]`.
pub fn min3_theta36_closed(alpha: i64, beta: i64) -> [i64; 5] {
    [
        960 - alpha,
        42840 + 4096 * beta,
        beta,
        alpha - 60 * beta,
        3833856 - 36 * alpha + 1734 * beta,
    ]
}

/// Orbit coefficients `(i, j, l, c, symmetric)` of the admissible complete
/// weight enumerator; a symmetric entry stands for every permutation of
/// `(i, j, l)`.
pub const ADMISSIBLE_ORBITS: [(u32, u32, u32, i64, bool); 23] = [
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

/// The admissible complete weight enumerator expanded from [`ADMISSIBLE_ORBITS`].
pub fn admissible_cwe() -> TrivariatePoly {
    let mut p = TrivariatePoly::zero(36);
    for &(i, j, l, c, symmetric) in &ADMISSIBLE_ORBITS {
        let mut monos = if symmetric {
            vec![
                (i, j, l),
                (i, l, j),
                (j, i, l),
                (j, l, i),
                (l, i, j),
                (l, j, i),
            ]
        } else {
            vec![(i, j, l)]
        };
        monos.sort_unstable();
        monos.dedup();
        for (a, b, d) in monos {
            p.set(a, b, d, q_int(c));
        }
    }
    p
}
