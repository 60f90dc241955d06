//! Output helpers shared by the commands.

use serde_json::{json, Value};
use unimod::glue::LatticeReport;
use unimod::lattice::Norm;

/// Integers as JSON numbers, other norms as `"a/b"`.
pub fn norm_value(n: Option<Norm>) -> Value {
    match n {
        None => Value::Null,
        Some(n) if n.is_integer() => json!(n.to_integer()),
        Some(n) => json!(format!("{}/{}", n.numer(), n.denom())),
    }
}

pub fn norm_text(n: Option<Norm>) -> String {
    n.map_or_else(|| "-".to_string(), |n| n.to_string())
}

pub fn pair_text(p: Option<[u64; 2]>) -> String {
    p.map_or_else(|| "-".to_string(), |[a, b]| format!("{{{a}, {b}}}"))
}

/// The JSON row of one analyzed lattice.
pub fn row_json(name: &str, r: &LatticeReport) -> Value {
    json!({
        "name": name,
        "dimension": r.dimension,
        "min_norm": norm_value(r.min_norm),
        "tau": r.kissing,
        "alpha": r.alpha,
        "shadow_min": norm_value(r.shadow_min),
        "n_counts": r.n_counts,
    })
}

/// A Markdown table with a header row.
pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for r in rows {
        out.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    out
}

pub fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}
