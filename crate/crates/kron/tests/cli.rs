//! End-to-end tests of the `kron` binary: one JSON object per invocation,
//! exit code 0/2/1 for success/usage/internal, deterministic output.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn kron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kron"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn kron_with_env(args: &[&str], key: &str, value: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kron"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    let text = String::from_utf8(output.stdout.clone()).unwrap();
    assert_eq!(
        text.lines().count(),
        1,
        "expected exactly one JSON line, got: {text:?}"
    );
    serde_json::from_str(text.trim()).expect("stdout is a single JSON document")
}

#[test]
fn kronecker_subcommand() {
    let output = kron(&["g", "2,1", "2,1", "2,1"]);
    assert!(output.status.success());
    let json = stdout_json(&output);
    assert_eq!(json["kind"], "g");
    assert_eq!(json["value"], "1");
}

#[test]
fn reduced_subcommand_reports_gbar() {
    let output = kron(&["reduced", "1", "1", "1"]);
    assert!(output.status.success());
    let json = stdout_json(&output);
    assert_eq!(json["kind"], "gbar");
    assert_eq!(json["value"], "1");

    let empty = kron(&["reduced", "-", "2,1", "2,1"]);
    assert!(empty.status.success());
    assert_eq!(stdout_json(&empty)["value"], "1");
}

#[test]
fn lr_subcommand() {
    let output = kron(&["lr", "3,2,1", "2,1", "2,1"]);
    assert!(output.status.success());
    assert_eq!(stdout_json(&output)["value"], "2");
}

#[test]
fn mult_subcommand() {
    let output = kron(&["mult", "1", "1", "1", "--n", "2"]);
    assert!(output.status.success());
    let json = stdout_json(&output);
    assert_eq!(json["kind"], "mult");
    assert_eq!(json["value"], "0");

    let at_three = kron(&["mult", "1", "1", "1", "--n", "3"]);
    assert_eq!(stdout_json(&at_three)["value"], "1");
}

#[test]
fn class_subcommand_matches_the_chain() {
    let output = kron(&["class", "2,1", "--n", "5", "--depth", "3"]);
    assert!(output.status.success());
    let json = stdout_json(&output);
    assert_eq!(
        json["chain"],
        serde_json::json!(["2,1", "3,1", "3,3", "3,3,2"])
    );
}

#[test]
fn lift_and_status_subcommands() {
    let lifted = stdout_json(&kron(&["lift", "3,1", "--n", "5"]));
    assert_eq!(lifted["lift"], serde_json::json!(["3,1", "2,1"]));

    let status = stdout_json(&kron(&["status", "2", "--n", "3"]));
    assert_eq!(status["status"], "SimpleProjective");
    let status = stdout_json(&kron(&["status", "2,1", "--n", "5"]));
    assert_eq!(status["status"], "SimpleNonProjective");
    let status = stdout_json(&kron(&["status", "3,1", "--n", "5"]));
    assert_eq!(status["status"], "Projective");
}

#[test]
fn dimpoly_subcommand() {
    let json = stdout_json(&kron(&["dimpoly", "2"]));
    assert_eq!(json["coeffs"], serde_json::json!(["0", "-3/2", "1/2"]));
    assert_eq!(json["roots"], serde_json::json!([0, 3]));
}

#[test]
fn stabilize_subcommand() {
    let output = kron(&["stabilize", "1", "1", "1", "--from", "2", "--to", "5"]);
    assert!(output.status.success());
    let json = stdout_json(&output);
    assert_eq!(json["n_start"], 2);
    assert_eq!(json["n_stable"], 4);
    assert_eq!(
        json["samples"],
        serde_json::json!([[2, "0"], [3, "1"], [4, "1"], [5, "1"]])
    );
}

#[test]
fn verify_subcommand_passes_at_small_sizes() {
    let output = kron(&["verify", "--suite", "global", "--max-size", "2"]);
    assert!(output.status.success());
    let json = stdout_json(&output);
    assert_eq!(json["passed"], true);
    assert_eq!(json["reports"][0]["suite"], "global");
    assert_eq!(json["reports"][0]["violations"], serde_json::json!([]));
}

#[test]
fn usage_errors_exit_2_with_error_field() {
    // Malformed partition.
    let output = kron(&["g", "1,2", "1", "1"]);
    assert_eq!(output.status.code(), Some(2));
    let json = stdout_json(&output);
    assert!(json["error"].as_str().unwrap().contains("1,2"));

    // Size mismatch.
    let output = kron(&["g", "2,1", "2", "1"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stdout_json(&output)["error"].is_string());

    // Window starting below the first admissible parameter.
    let output = kron(&["stabilize", "2", "1", "1", "--from", "3", "--to", "6"]);
    assert_eq!(output.status.code(), Some(2));

    // Chain of a non-minimal diagram.
    let output = kron(&["class", "2,1", "--n", "4"]);
    assert_eq!(output.status.code(), Some(2));

    // Unknown suite name.
    let output = kron(&["verify", "--suite", "nonsense"]);
    assert_eq!(output.status.code(), Some(2));

    // Beyond the supported group bound.
    let output = kron(&["reduced", "30,30", "20,20", "10,10"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn clap_usage_errors_exit_2() {
    let output = kron(&["no-such-command"]);
    assert_eq!(output.status.code(), Some(2));
    let output = kron(&["g", "1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn table_subcommand_uses_the_env_cache_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let out = dir.path().join("table.csv");

    let cold = kron_with_env(
        &["table", "--max-size", "1", "--out", out.to_str().unwrap()],
        "KRON_CACHE",
        &cache,
    );
    assert!(cold.status.success(), "{cold:?}");
    assert!(
        cache.exists(),
        "cache file should be created via KRON_CACHE"
    );
    let first = std::fs::read(&out).unwrap();

    let warm = kron_with_env(
        &["table", "--max-size", "1", "--out", out.to_str().unwrap()],
        "KRON_CACHE",
        &cache,
    );
    assert!(warm.status.success());
    let second = std::fs::read(&out).unwrap();
    assert_eq!(first, second, "warm rerun must be byte-identical");

    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("lambda,mu,tau,value\n"));
    assert!(text.contains("-,-,-,1"));
}
