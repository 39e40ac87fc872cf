use std::fs;
use std::process::{Command, Output};

use ordsemi::fixtures;

fn ordsemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordsemi")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_accepts_a_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("n2.json");
    fs::write(&p, fixtures::n2().to_json()).unwrap();
    let o = ordsemi(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "valid");
}

#[test]
fn validate_reports_non_associativity() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, r#"{"order":2,"table":[[1,0],[0,0]],"leq":[[0,0],[1,1]]}"#).unwrap();
    let o = ordsemi(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.starts_with("invalid"));
    assert!(text.to_lowercase().contains("associ"), "{text}");
}

#[test]
fn validate_rejects_out_of_range_entries() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("range.json");
    fs::write(&p, r#"{"order":2,"table":[[0,2],[0,0]],"leq":[]}"#).unwrap();
    assert_eq!(ordsemi(&["validate", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn unknown_theorem_is_a_usage_error() {
    assert_eq!(
        ordsemi(&["verify", "--order", "2", "--theorem", "thm-nope"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn bad_filter_expression_exits_two() {
    let o = ordsemi(&["search", "--order", "2", "--where", "right-pi-inverse &&"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_count_matches_streamed_lines() {
    let counted = ordsemi(&[
        "search",
        "--order",
        "3",
        "--where",
        "regular | t-archimedean",
        "--count",
    ]);
    let streamed = ordsemi(&["search", "--order", "3", "--where", "regular | t-archimedean"]);
    let n: usize = stdout(&counted).trim().parse().unwrap();
    assert_eq!(n, stdout(&streamed).lines().count());
    assert!(n > 0);
}

#[test]
fn enumerate_resumes_from_a_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let whole = dir.path().join("whole.jsonl");
    let parts = dir.path().join("parts.jsonl");
    let cursor = dir.path().join("cursor.json");
    let whole_s = whole.to_str().unwrap();
    assert!(ordsemi(&["enumerate", "--order", "3", "--out", whole_s])
        .status
        .success());
    let args = [
        "enumerate",
        "--order",
        "3",
        "--out",
        parts.to_str().unwrap(),
        "--checkpoint",
        cursor.to_str().unwrap(),
        "--limit",
        "250",
    ];
    for _ in 0..5 {
        assert!(ordsemi(&args).status.success());
    }
    assert_eq!(fs::read_to_string(&whole).unwrap(), fs::read_to_string(&parts).unwrap());
    assert_eq!(fs::read_to_string(&whole).unwrap().lines().count(), 971);
}

#[test]
fn verify_finds_counterexamples_under_the_vacuous_reading() {
    let o = ordsemi(&["verify", "--order", "3", "--theorem", "lem-ne53", "--rv-vacuous"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn theorems_lists_the_catalog() {
    let text = stdout(&ordsemi(&["theorems"]));
    for info in ordsemi::theorems::CATALOG {
        assert!(text.contains(info.id));
    }
}
