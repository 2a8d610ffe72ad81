//! End-to-end tests against the compiled binary: output contracts, exit
//! codes, determinism, and the shipped fixtures.

use std::io::Write;
use std::process::{Command, Output};

fn superpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superpi"))
        .args(args)
        .env_remove("SUPERPI_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn codim_prints_the_bare_number() {
    let out = superpi(&["codim", "--algebra", "grassmann2", "--multidegree", "0,0,0,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn check_accepts_an_identity() {
    let out =
        superpi(&["check", "--algebra", "grassmann2", "--poly", "z1_1*z1_2 + z1_2*z1_1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).starts_with("identity: true"));
}

#[test]
fn check_flags_a_non_identity_with_exit_one() {
    let out = superpi(&["check", "--algebra", "grassmann2", "--poly", "z1_1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).starts_with("identity: false"));
}

#[test]
fn check_reads_a_file_of_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("identities.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# generating identities").unwrap();
    writeln!(f, "y1_1").unwrap();
    writeln!(f, "z0_1").unwrap();
    writeln!(f, "y0_1*y0_2 - y0_2*y0_1").unwrap();
    writeln!(f, "z1_1*y0_1").unwrap();
    writeln!(f, "y0_1*z1_1").unwrap();
    writeln!(f, "z1_1*z1_2 + z1_2*z1_1").unwrap();
    drop(f);
    let out = superpi(&["check", "--algebra", "grassmann2", "--poly", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    assert_eq!(stdout_of(&out).lines().count(), 6);
}

#[test]
fn parse_errors_exit_with_the_usage_code() {
    let out = superpi(&["check", "--algebra", "grassmann2", "--poly", "y0_1 +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("parse error at byte"));
}

#[test]
fn reproduce_fixtures_all_pass() {
    for name in ["example-6-1", "example-6-2", "mkk-1"] {
        let out = superpi(&["reproduce", name]);
        assert_eq!(out.status.code(), Some(0), "{name} stderr: {}", stderr_of(&out));
        assert!(stdout_of(&out).contains("all ok"), "{name}");
    }
}

#[test]
fn json_output_carries_the_schema_tag() {
    let out = superpi(&["hook", "--algebra", "grassmann2", "--max", "2", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["schema"], "superpi/1");
    assert_eq!(v["command"], "hook");
    assert_eq!(v["canonical"].as_array().unwrap().len(), 8);
    assert_eq!(v["reports"].as_array().unwrap().len(), 14);
}

#[test]
fn cocharacter_json_round_trips() {
    let out = superpi(&[
        "cocharacter",
        "--algebra",
        "grassmann2",
        "--multidegree",
        "0,0,0,2",
        "--output",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["codim"], 1);
    assert_eq!(v["mults"][0]["lambda"], serde_json::json!([[], [], [], [1, 1]]));
    assert_eq!(v["mults"][0]["m"], 1);
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["hook", "--algebra", "grassmann2", "--max", "3", "--output", "json"];
    let first = superpi(&args);
    let second = superpi(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());
}

#[test]
fn worker_count_does_not_change_output() {
    let base = superpi(&["codim-table", "--algebra", "matrix_super(1)", "--max", "3"]);
    let one = superpi(&["codim-table", "--algebra", "matrix_super(1)", "--max", "3", "--jobs", "1"]);
    let four =
        superpi(&["codim-table", "--algebra", "matrix_super(1)", "--max", "3", "--jobs", "4"]);
    assert_eq!(base.stdout, one.stdout);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn budget_refusal_states_the_predicted_size() {
    let out = superpi(&[
        "codim",
        "--algebra",
        "grassmann2",
        "--multidegree",
        "0,0,0,2",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("needs 26 matrix entries"), "stderr: {err}");
    assert!(err.contains("--budget"));
}

#[test]
fn environment_budget_is_honored_and_overridden() {
    let refused = Command::new(env!("CARGO_BIN_EXE_superpi"))
        .args(["codim", "--algebra", "grassmann2", "--multidegree", "0,0,0,2"])
        .env("SUPERPI_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(refused.status.code(), Some(2));
    let overridden = Command::new(env!("CARGO_BIN_EXE_superpi"))
        .args([
            "codim",
            "--algebra",
            "grassmann2",
            "--multidegree",
            "0,0,0,2",
            "--budget",
            "1000000",
        ])
        .env("SUPERPI_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));
}

#[test]
fn validate_passes_the_gallery_and_fails_a_broken_file() {
    let out = superpi(&["validate", "--algebra", "matrix_super(1)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("algebra is valid"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        r#"{
  "dim": 1,
  "basis": ["e"],
  "grading": [0],
  "mode": "superinvolution",
  "unit": null,
  "mult": [[0, 0, 0, "1"]],
  "inv": [["-1"]]
}"#,
    )
    .unwrap();
    let out = superpi(&["validate", "--algebra", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("algebra is INVALID"));
    assert!(stdout_of(&out).contains("anti-multiplicativity"));
}

#[test]
fn computation_rejects_a_broken_algebra_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        r#"{
  "dim": 1,
  "basis": ["e"],
  "grading": [0],
  "mode": "superinvolution",
  "unit": null,
  "mult": [[0, 0, 0, "1"]],
  "inv": [["-1"]]
}"#,
    )
    .unwrap();
    let out = superpi(&["codim", "--algebra", path.to_str().unwrap(), "--multidegree", "1,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommands_are_usage_errors() {
    let out = superpi(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn standard_failures_exit_one() {
    let out =
        superpi(&["standard", "--algebra", "matrix_super(1)", "--pairs", "1:1,1:1,1:1,1:1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out).matches("false").count(), 4);
}

#[test]
fn amitsur_witness_is_reported() {
    let out = superpi(&["amitsur", "--algebra", "grassmann2", "--rank", "0:0,0:0,0:0,0:1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("satisfied: false"));
    assert!(text.contains("witness family: 1"));
    let ok = superpi(&["amitsur", "--algebra", "grassmann2", "--rank", "1:0,0:0,0:0,0:1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout_of(&ok).contains("satisfied: true"));
}

#[test]
fn tideal_span_reads_generators_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gens.txt");
    std::fs::write(&path, "z1_1*z1_2 + z1_2*z1_1\n").unwrap();
    let out = superpi(&[
        "tideal",
        "--gens",
        path.to_str().unwrap(),
        "--multidegree",
        "0,0,0,2",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.starts_with("dim 1\n"));
    assert!(text.contains("z1_1*z1_2 + z1_2*z1_1"));
}
