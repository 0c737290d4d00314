//! End-to-end tests of the binary: exit codes, golden outputs, the JSON
//! report round trip and persisted search outcomes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn generate_golden_prefixes() {
    let out = run(&["generate", "--avoid", "s1", "--n", "12"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "abcacbabcbac\n");

    let out = run(&["generate", "--avoid", "s2", "--n", "10"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "abcacbabca\n");
}

#[test]
fn generate_writes_word_files_readable_by_check_word() {
    let dir = tempfile::tempdir().unwrap();
    let word_path = dir.path().join("s3.txt");
    let out = run(&[
        "generate",
        "--avoid",
        "s3",
        "--n",
        "500",
        "--out",
        word_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);

    let out = run(&["check-word", word_path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("square-free"));
}

#[test]
fn generate_budget_exhaustion_exits_3() {
    let out = run(&["generate", "--avoid", "s2", "--n", "100", "--max-steps", "5"]);
    assert_eq!(exit_code(&out), 3);
    let out = run(&["generate", "--avoid", "s1", "--n", "100", "--max-prefix", "50"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn check_word_finds_squares() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    std::fs::write(&path, "abcabc\n").unwrap();
    let out = run(&["check-word", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("root \"abc\""));

    std::fs::write(&path, "0110\n").unwrap();
    let out = run(&["check-word", path.to_str().unwrap(), "--alphabet", "01"]);
    assert_eq!(exit_code(&out), 1);

    // letter outside the alphabet: input error
    let out = run(&["check-word", path.to_str().unwrap(), "--alphabet", "ab"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn test_morphism_verdicts() {
    let thue = fixture("thue.mor");
    let out = run(&["test-morphism", "--avoid", "s1", "--morphism", thue.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("pass"));

    let constant = fixture("constant.mor");
    let out = run(&[
        "test-morphism",
        "--avoid",
        "s1",
        "--morphism",
        constant.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn test_morphism_reports_length_2_witness_for_constant() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let constant = fixture("constant.mor");
    let out = run(&[
        "test-morphism",
        "--avoid",
        "s1",
        "--morphism",
        constant.to_str().unwrap(),
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(report["verdict"], "fail");
    assert_eq!(report["counts"]["minimal_failing_len"], 2);
    let factor = report["witnesses"][0]["factor"].as_str().unwrap();
    assert_eq!(factor.len(), 2);
}

#[test]
fn crochemore_verdicts() {
    let identity = fixture("identity.mor");
    let out = run(&["crochemore", "--morphism", identity.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);

    // The fixed-point substitution maps aba onto a word containing (ca)(ca),
    // so the length-5 preservation test genuinely fails.
    let thue = fixture("thue.mor");
    let out = run(&["crochemore", "--morphism", thue.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("aba"));
}

#[test]
fn morphism_file_errors_exit_2() {
    let out = run(&[
        "test-morphism",
        "--avoid",
        "s1",
        "--morphism",
        fixture("erasing.mor").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("non-erasing"), "stderr: {stderr}");

    let out = run(&["test-morphism", "--avoid", "s1", "--morphism", "/nonexistent.mor"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["generate", "--avoid", "s9", "--n", "5"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["scan"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn scan_and_census_over_generated_words() {
    let out = run(&["scan", "--avoid", "s1", "--n", "20000"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).starts_with("0 occurrence(s)"));

    let out = run(&["scan", "--avoid", "s2", "--n", "20000"]);
    assert_eq!(exit_code(&out), 0);

    let out = run(&["census", "--avoid", "s1", "--n", "4096"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("missing: aba cbc"));
}

#[test]
fn scan_reports_witnesses_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("remark.txt");
    std::fs::write(&path, "acabcbacbcabcbaca\n").unwrap();
    let out = run(&[
        "scan",
        "--file",
        path.to_str().unwrap(),
        "--templates",
        "azbza",
        "--min-z",
        "3",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("acabcbacbcabcbaca"));
}

#[test]
fn remark17_passes() {
    let out = run(&["remark17"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("acabcbacbcabcbaca"));
}

#[test]
fn verify_theorem1_small_space() {
    let out = run(&[
        "verify-theorem1",
        "--avoid",
        "s1",
        "--target",
        "01",
        "--max-len",
        "2",
        "--prefix-len",
        "4096",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("216 morphisms"));
    assert!(stdout_of(&out).contains("0 disagreements"));
}

#[test]
fn probe_outcomes_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("outcome.json");
    let args = [
        "probe-s3",
        "--target",
        "01",
        "--max-len",
        "3",
        "--k-min",
        "2",
        "--k-max",
        "6",
        "--random",
        "40",
        "--seed",
        "11",
        "--prefix-len",
        "4096",
        "--out",
        out_path.to_str().unwrap(),
    ];
    assert_eq!(exit_code(&run(&args)), 0);
    let a = std::fs::read(&out_path).unwrap();
    assert_eq!(exit_code(&run(&args)), 0);
    let b = std::fs::read(&out_path).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "persisted outcomes must be byte-identical");

    let parsed: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let command = parsed["command"].as_str().unwrap();
    assert!(command.starts_with("sqfree probe-s3"));
    assert!(command.contains("--seed 11"));
}

#[test]
fn json_report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let thue = fixture("thue.mor");
    let out = run(&[
        "test-morphism",
        "--avoid",
        "s1",
        "--morphism",
        thue.to_str().unwrap(),
        "--json",
        first.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);

    let mut report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&first).unwrap()).unwrap();
    let command = report["command"].as_str().unwrap().to_string();
    assert!(command.starts_with("sqfree "));

    // Replay the embedded command (it rewrites the same report path).
    let args: Vec<&str> = command.split_whitespace().skip(1).collect();
    let out = run(&args);
    assert_eq!(exit_code(&out), 0);
    let mut replayed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&first).unwrap()).unwrap();

    // Identical apart from timing.
    report.as_object_mut().unwrap().remove("timing_ms");
    replayed.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(report, replayed);
}
