//! Symbolic derivations with comparisons against the reference values.

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{json, Value};
use unimod::code::{self, WeConstraints};
use unimod::invariant;
use unimod::known;
use unimod::linalg::{q_frac, q_int, Q};
use unimod::poly::format_rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Weight enumerator of a doubly even [36,7,16] code with dual distance 4.
    Lemma1,
    /// The same for dimension 8.
    Remark368,
    /// Extremal complete weight enumerator family and its admissible member.
    Cwe,
    /// Ternary [36,18,9] enumerator with maximum weight 33.
    GleasonB,
    /// Theta and shadow prefixes in dimension 36.
    Theta,
}

/// Printable derivation with its verdict.
pub struct Derivation {
    pub text: String,
    pub json: Value,
    pub pass: bool,
}

pub fn run(target: Target) -> Result<Derivation> {
    match target {
        Target::Lemma1 => weight_enumerator(7, known::doubly_even_36_7()),
        Target::Remark368 => weight_enumerator(8, known::doubly_even_36_8()),
        Target::Cwe => cwe(),
        Target::GleasonB => gleason(),
        Target::Theta => theta(),
    }
}

fn weight_enumerator(dimension: u32, expected: unimod::poly::UnivariatePoly) -> Result<Derivation> {
    let cons = WeConstraints {
        length: 36,
        dimension,
        weights_divisible_by: 4,
        min_weight: 16,
        dual_min_weight: 4,
        contains_allone: None,
    };
    let sols = code::solve_constrained_we(&cons)?;
    let pass = sols == [expected.clone()];
    let mut text = format!("doubly even [36,{dimension}] codes, d >= 16, dual distance >= 4\n");
    text.push_str(&format!("solutions: {}\n", sols.len()));
    for s in &sols {
        text.push_str(&format!("  W(y) = {s}\n"));
    }
    text.push_str(&format!("expected: {expected}\n"));
    let json = json!({
        "constraints": {"length": 36, "dimension": dimension, "divisible_by": 4, "min_weight": 16, "dual_min_weight": 4},
        "solutions": sols,
        "expected": expected,
    });
    Ok(Derivation { text, json, pass })
}

fn q(num: i64, den: i64) -> Q {
    q_frac(num, den)
}

fn cwe() -> Result<Derivation> {
    let family = invariant::extremal_cwe_family()?;
    let expected: Vec<(Q, Q)> = known::CWE_RELATIONS
        .iter()
        .map(|&(a, b, c, d)| (q(a, b), q(c, d)))
        .collect();
    let top = family.coefficient(0, 15, 21);
    let (tc, ts) = known::CWE_TOP_COEFFICIENT;
    let a1 = invariant::admissible_a1(&family)?;
    let w = family.evaluate(&a1);
    let odd = invariant::odd_one_count_top_terms(&w);
    let relations_ok = family.relations == expected;
    let top_ok = top == (q_int(tc), q_int(ts));
    let poly_ok = w == known::admissible_cwe();
    let pass = relations_ok && top_ok && poly_ok && w.is_integral_nonnegative();

    let mut text = String::from("family with x^36 leading and no words of weight 1..11:\n");
    for (k, (c, s)) in family.relations.iter().enumerate() {
        text.push_str(&format!(
            "  a{} = {} + ({}) a1\n",
            k + 2,
            format_rational(c),
            format_rational(s)
        ));
    }
    text.push_str(&format!(
        "coefficient of y^15 z^21: {} + {} a1\n",
        format_rational(&top.0),
        format_rational(&top.1)
    ));
    text.push_str(&format!("admissible a1 = {}\n", format_rational(&a1)));
    text.push_str(&format!("W = {w}\n"));
    text.push_str(&format!(
        "weight-36 terms with an odd number of ones: {}\n",
        odd.len()
    ));
    text.push_str(&format!(
        "relations {}, y^15 z^21 coefficient {}, enumerator {}\n",
        super::report::status(relations_ok),
        super::report::status(top_ok),
        super::report::status(poly_ok)
    ));
    let json = json!({
        "relations": family.relations.iter().map(|(c, s)| [format_rational(c), format_rational(s)]).collect::<Vec<_>>(),
        "top_coefficient": [format_rational(&top.0), format_rational(&top.1)],
        "a1": format_rational(&a1),
        "enumerator": w,
        "odd_one_count_top_terms": odd.len(),
    });
    Ok(Derivation { text, json, pass })
}

fn gleason() -> Result<Derivation> {
    let w = invariant::gleason_ternary_we(36, 9, 33)?;
    let expected = known::ternary_36_9_33();
    let pass = w == expected;
    let text =
        format!("ternary self-dual [36,18,9], weights <= 33:\nW(y) = {w}\nexpected: {expected}\n");
    Ok(Derivation {
        text,
        json: json!({"enumerator": w, "expected": expected}),
        pass,
    })
}

fn theta() -> Result<Derivation> {
    let mut pass = true;
    let mut text = String::from(
        "minimum norm 4: alpha | theta_4 | theta_5 | shadow_1 | shadow_3 | shadow_5\n",
    );
    let mut extremal = Vec::new();
    for alpha in 0..=16 {
        let (t, s) = invariant::extremal_theta36(alpha)?;
        let got = [
            t.count_int(4),
            t.count_int(5),
            s.count_int(1),
            s.count_int(3),
            s.count_int(5),
        ]
        .map(|c| c as i64);
        let ok = got == known::extremal_theta36_closed(alpha);
        pass &= ok;
        text.push_str(&format!(
            "  {alpha:>2} | {} | {}\n",
            join(&got),
            super::report::status(ok)
        ));
        extremal.push(json!({"alpha": alpha, "theta": t, "shadow": s}));
    }
    text.push_str(
        "minimum norm 3: alpha beta | theta_3 | theta_4 | shadow_1 | shadow_3 | shadow_5\n",
    );
    let mut min3 = Vec::new();
    for (alpha, beta) in [(0, 0), (60, 1), (120, 2)] {
        let (t, s) = invariant::min3_theta36(alpha, beta)?;
        let got = [
            t.count_int(3),
            t.count_int(4),
            s.count_int(1),
            s.count_int(3),
            s.count_int(5),
        ]
        .map(|c| c as i64);
        let ok = got == known::min3_theta36_closed(alpha, beta);
        pass &= ok;
        text.push_str(&format!(
            "  {alpha} {beta} | {} | {}\n",
            join(&got),
            super::report::status(ok)
        ));
        min3.push(json!({"alpha": alpha, "beta": beta, "theta": t, "shadow": s}));
    }
    // alpha = 0 forces n1 + n2 = 960, so 72 norm-3 vectors in one neighbor leave 888
    let (_, s) = invariant::extremal_theta36(0)?;
    let split = s.count_int(3) - 72;
    pass &= split == 888;
    text.push_str(&format!(
        "alpha = 0 neighbor counts with 72 in one: {{72, {split}}}\n"
    ));
    Ok(Derivation {
        text,
        json: json!({"extremal": extremal, "min3": min3, "split": [72, split]}),
        pass,
    })
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" | ")
}
