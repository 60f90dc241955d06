use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn unimod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unimod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("unimod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const TETRACODE: &str = "3 4 2\n1 1 1 0\n0 1 2 1\n";

#[test]
fn derivations_pass() {
    for target in ["lemma1", "remark368", "cwe", "gleason-b", "theta"] {
        let out = unimod(&["derive", target, "--json"]);
        assert_eq!(out.status.code(), Some(0), "{target}");
        assert_eq!(json(&out)["status"], "PASS", "{target}");
    }
}

#[test]
fn lemma_text_shows_the_enumerator() {
    let out = unimod(&["derive", "lemma1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 + 63y^16 + 63y^20 + y^36"));
    assert!(text.trim_end().ends_with("PASS"));
}

#[test]
fn analyze_code_file() {
    let path = scratch("tetra.code", TETRACODE);
    let out = unimod(&["analyze", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["min_norm"], 1);
    assert_eq!(v["tau"], 8);
    // the shadow of Z^4 is (Z + 1/2)^4
    assert_eq!(v["alpha"], 16);
    assert_eq!(v["shadow_min"], 1);
}

#[test]
fn analyze_lattice_file_with_markdown() {
    let path = scratch(
        "z5.lat",
        "5 1\n1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 1\n",
    );
    let out = unimod(&["analyze", "--file", path.to_str().unwrap(), "--md"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("| lattice | dim |"));
    // alpha counts norm-1 shadow vectors; the shadow of Z^5 starts at 5/4
    assert!(text.contains("| 5 | 1 | 10 | 0 | 5/4 |"));
}

#[test]
fn frames_on_tetracode() {
    let path = scratch("tetra-frames.code", TETRACODE);
    let out = unimod(&[
        "frames",
        "--file",
        path.to_str().unwrap(),
        "--json",
        "--witness",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"], 16);
    assert_eq!(v["frame"], true);
    assert_eq!(v["witness_vectors"].as_array().unwrap().len(), 4);
}

#[test]
fn minimum_norm_4_lattice_has_an_empty_frame_graph() {
    let out = unimod(&["frames", "C36_1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"], 0);
    assert_eq!(v["max_clique"], 0);
    assert_eq!(v["frame"], false);
}

#[test]
fn export_prints_code_and_lattice() {
    let out = unimod(&["export", "D36_1", "--code"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("5 36 18\n"));
    let out = unimod(&["export", "D36_1"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("36 5\n"));
}

#[test]
fn input_errors_exit_with_2() {
    let bad = scratch("bad.txt", "1 2 3 4\n");
    assert_eq!(
        unimod(&["analyze", "--file", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        unimod(&["analyze", "--file", "/nonexistent/file"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(unimod(&["analyze", "X36_1"]).status.code(), Some(2));
    assert_eq!(unimod(&["analyze"]).status.code(), Some(2));
    let code = scratch("both.code", TETRACODE);
    assert_eq!(
        unimod(&["analyze", "C36_1", "--file", code.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exhausted_budget_exits_with_3() {
    let path = scratch("budget.code", TETRACODE);
    let out = unimod(&["analyze", "--file", path.to_str().unwrap(), "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));
}

#[test]
fn refused_long_shadow_source_fails() {
    let out = unimod(&["long-shadow", "--source", "C36_1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "FAIL");
    assert_eq!(v["neighbors"][0]["refused"], true);
    assert_eq!(v["neighbors"][0]["n_counts"], serde_json::json!([0, 840]));
}
