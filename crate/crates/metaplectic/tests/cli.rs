//! End-to-end checks of the command-line interface: exit codes, JSON
//! schema, config merging, determinism of emitted datasets.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_metaplectic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should execute")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be utf-8")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("metaplectic-cli-{}-{name}", std::process::id()))
}

#[test]
fn passing_suite_exits_zero() {
    let out = run(&["--suite", "sl2-matrix", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("suite sl2-matrix:"));
    assert!(text.contains("total: "));
    assert!(!text.contains("FAIL"));
}

#[test]
fn failing_check_exits_one() {
    let out = run(&["--suite", "spectrum", "--size", "64", "--tol", "1e-12"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["--emit", "nada"]).status.code(), Some(2));
    assert_eq!(run(&["--emit", "density", "--format", "toml"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    // clap rejects --suite together with --emit
    assert_eq!(run(&["--suite", "norms", "--emit", "density"]).status.code(), Some(2));
}

#[test]
fn json_report_is_versioned() {
    let out = run(&["--suite", "norms", "--mmax", "4", "--k", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["suite"], "norms");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn config_batch_merges_with_flags() {
    let path = temp_path("config.json");
    std::fs::write(
        &path,
        r#"{"suites": [{"suite": "norms", "mmax": 3}, {"suite": "recurrence", "weight": 0, "mmax": 6}]}"#,
    )
    .unwrap();
    let out = run(&["--config", path.to_str().unwrap(), "--k", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "1");
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 2);
    assert_eq!(suites[0]["suite"], "norms");
    assert_eq!(suites[1]["suite"], "recurrence");
    std::fs::remove_file(&path).ok();

    let bad = temp_path("bad-config.json");
    std::fs::write(&bad, r#"{"suites": [{"suite": "norms", "bogus": 1}]}"#).unwrap();
    assert_eq!(run(&["--config", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(&bad).ok();
}

#[test]
fn out_flag_writes_file_instead_of_stdout() {
    let path = temp_path("report.txt");
    let out = run(&["--suite", "sl2-weyl", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("suite sl2-weyl:"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn emitted_datasets_are_byte_deterministic() {
    for args in [
        &["--emit", "spectrum", "--size", "120", "--weight", "0"][..],
        &["--emit", "recurrence", "--mmax", "6", "--format", "csv"][..],
        &["--emit", "density", "--format", "json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(stdout(&a), stdout(&b), "nondeterministic output for {args:?}");
    }
}

#[test]
fn emitted_csv_matches_frozen_values() {
    let out = run(&["--emit", "hwv-partials", "--format", "csv", "--k", "1", "--terms", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("l,a,term,partial\n"));
    assert!(text.contains("2,1/12,10/243,280/243"));

    let dens = stdout(&run(&["--emit", "density", "--format", "csv"]));
    assert!(dens.starts_with("x,density\n"));
    assert_eq!(dens.lines().count(), 2002);

    let rec = stdout(&run(&["--emit", "recurrence", "--format", "csv", "--weight", "-1", "--mmax", "1"]));
    assert!(rec.contains("0,2/9,-1/3,0/1,1/1"));
    assert!(rec.contains("1,20/9,-10/3,1/1,9/2"));
}
