use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn septica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_septica"))
        .args(args)
        .env("SEPTICA_CACHE", scratch_cache())
        .output()
        .expect("binary should run")
}

fn scratch_cache() -> PathBuf {
    std::env::temp_dir()
        .join(format!("septica-cli-test-{}", std::process::id()))
        .join("constants.tsv")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    fs::read_to_string(path).expect("golden file should exist")
}

#[test]
fn verify_json_matches_golden() {
    let out = septica(&[
        "verify",
        "--check",
        "trig-41",
        "--check",
        "g-closed-n25",
        "--check",
        "lemma6-bounds-q0.2",
        "--digits",
        "30",
        "--json",
        "-",
        "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("verify_small.json"));
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = septica(&["verify", "--all", "--digits", "30", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["version"], 1);
    assert_eq!(report["digits"], 30);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 30);
    for c in checks {
        for key in ["id", "pass", "digits_agreed", "lhs", "rhs", "elapsed_ms"] {
            assert!(c.get(key).is_some(), "missing {key} in {c}");
        }
        assert_eq!(c["pass"], true, "{c}");
    }
}

#[test]
fn markdown_report_has_one_row_per_check() {
    let out = septica(&[
        "verify",
        "--check",
        "thm1",
        "--digits",
        "40",
        "--markdown",
        "-",
        "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("| `thm1`")).count(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(septica(&["verify", "--check", "nonexistent"]).status.code(), Some(2));
    assert_eq!(septica(&["verify"]).status.code(), Some(2));
    assert_eq!(septica(&["verify", "--all", "--digits", "3"]).status.code(), Some(2));
    assert_eq!(septica(&["eval", "--id", "nonexistent"]).status.code(), Some(2));
    assert_eq!(septica(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        septica(&["verify", "--check", "trig-41", "--digits", "20"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn eval_prints_truncated_digits_and_fills_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.tsv");
    let run = |digits: &str| {
        Command::new(env!("CARGO_BIN_EXE_septica"))
            .args(["eval", "--id", "g343-thm2", "--digits", digits])
            .env("SEPTICA_CACHE", &cache)
            .output()
            .unwrap()
    };
    let first = run("30");
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(first.stdout).unwrap().trim(),
        "9.49731818207185519097071790280"
    );
    let text = fs::read_to_string(&cache).unwrap();
    assert!(text.lines().any(|l| l.starts_with("g343-thm2\t30\t")));
    let again = run("30");
    assert_eq!(again.stdout, run("30").stdout);
    let wider = String::from_utf8(run("50").stdout).unwrap();
    assert!(wider.starts_with("9.49731818207185519097071790280"));
    assert_eq!(fs::read_to_string(&cache).unwrap().lines().count(), 3);
}

#[test]
fn eval_with_parameter() {
    let out = septica(&["eval", "--id", "m-of-p", "--arg", "p=1", "--digits", "20"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2.6457513110645905905");
}

#[test]
fn table_formats() {
    for (format, marker) in [
        ("json", "\"invariants\""),
        ("markdown", "| `G_343` |"),
        ("latex", "\\begin{tabular}"),
    ] {
        let out = septica(&["table", "--format", format, "--digits", "25"]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains(marker), "{format}: {text}");
    }
    let out = septica(&["table", "--format", "json", "--digits", "25"]);
    let table: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table["phi"].as_array().unwrap().len(), 10);
    assert_eq!(table["invariants"].as_array().unwrap().len(), 10);
}
