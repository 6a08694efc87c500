use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use simplest_cubic::cli::AnalysisRecord;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simplest-cubic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<AnalysisRecord> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn analyze_twelve() {
    let o = run(&["analyze", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: AnalysisRecord = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.case.as_str(), "a");
    let pib = r.pib.unwrap();
    assert_eq!((pib.a, pib.m), (1, 3));
    assert_eq!(r.delta_factors, ["3^3", "7^1"]);
}

#[test]
fn analyze_verify_case_c() {
    let o = run(&["analyze", "21", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("case               c"));
    assert!(text.contains("verification PASSED"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn analyze_negative_parameter() {
    let o = run(&["analyze", "-4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: AnalysisRecord = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((r.t, r.normalized_t), (-4, 1));
    let one: AnalysisRecord = serde_json::from_slice(&run(&["analyze", "1", "--format", "json"]).stdout).unwrap();
    assert_eq!(AnalysisRecord { t: 1, ..r }, one);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["analyze", "x"][..],
        &["analyze"],
        &["analyze", "1.5"],
        &["scan", "-2", "4"],
        &["scan", "9", "3"],
        &["scan", "0", "5", "--cases", "d"],
        &["scan", "0", "5", "--jobs", "0"],
        &["tables", "3"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn scan_single_row() {
    let o = run(&["scan", "0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "t,delta,delta_factors,conductor,conductor_factors,case,ck_principal,monogenic,witness_t,pib_a,pib_m"
    );
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("0,9,"));
    assert!(lines[1].contains(",true,true,"));
}

#[test]
fn scan_principal_case_c() {
    let o = run(&["scan", "100000", "200000", "--cases", "c", "--filter", "principal", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let ts: Vec<i64> = json_lines(&o).iter().map(|r| r.t).collect();
    assert_eq!(ts, [101_471, 182_451]);
}

#[test]
fn scan_case_a_includes_trivial() {
    let o = run(&["scan", "-1", "12", "--cases", "a", "--format", "json"]);
    let cases: Vec<&str> = json_lines(&o).iter().map(|r| r.case.as_str()).collect();
    assert!(cases.contains(&"trivial") && cases.contains(&"a"));
    assert!(!cases.contains(&"b"));
}

#[test]
fn jobs_from_environment() {
    let a = bin().args(["scan", "-1", "500", "--format", "json"]).env("SIMPLEST_CUBIC_JOBS", "1").output().unwrap();
    let b = bin().args(["scan", "-1", "500", "--format", "json"]).env("SIMPLEST_CUBIC_JOBS", "3").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let bad = bin().args(["scan", "0", "1"]).env("SIMPLEST_CUBIC_JOBS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn scan_verify_passes() {
    let o = run(&["scan", "-1", "60", "--verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json_lines(&o).iter().all(|r| r.verification.as_ref().unwrap().overall));
}

#[test]
fn tables_match_fixtures() {
    for which in ["1", "2"] {
        let o = run(&["tables", which]);
        assert_eq!(o.status.code(), Some(0), "tables {which}");
        assert!(!stdout(&o).contains("FAIL"));
    }
}

fn fixture_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("simplest-cubic-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for f in ["table1.txt", "table1_case_c.txt", "table2.txt"] {
        fs::copy(src.join(f), dir.join(f)).unwrap();
    }
    dir
}

#[test]
fn tables_report_mismatch() {
    let dir = fixture_dir("tampered");
    let path = dir.join("table2.txt");
    let text = fs::read_to_string(&path).unwrap().replace("5479^1|c", "5479^1|a");
    fs::write(&path, text).unwrap();
    let o = run(&["tables", "2", "--fixtures", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL"));

    let o = run(&["tables", "2", "--fixtures", dir.join("missing").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    fs::remove_dir_all(dir).unwrap();
}
