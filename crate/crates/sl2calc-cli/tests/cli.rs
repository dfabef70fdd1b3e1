//! End-to-end behaviour of the `sl2calc` binary and of the report layer.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use sl2calc::nilhecke::relations::Relation;
use sl2calc::NhElement;
use sl2calc_cli::report::run_checks;
use sl2calc_cli::{params, Check, Outcome, Status, SuiteReport};

fn sl2calc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2calc")).args(args).env_remove("SL2CALC_CONFIG").output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("sl2calc-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = sl2calc(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
    assert!(out.stdout.is_empty());
}

#[test]
fn out_of_range_and_malformed_arguments_are_usage_errors() {
    assert_eq!(sl2calc(&["verify", "--suite", "nilhecke", "--rank-max", "9"]).status.code(), Some(2));
    assert_eq!(sl2calc(&["verify", "--suite", "grassmannian", "--weight-cutoff", "13"]).status.code(), Some(2));
    assert_eq!(sl2calc(&["verify"]).status.code(), Some(2));
    assert_eq!(sl2calc(&["lr", "2,x", "1"]).status.code(), Some(2));
    assert_eq!(sl2calc(&["canon", "mult", "EFE", "1", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn json_report_schema_and_order() {
    let out = sl2calc(&["verify", "--suite", "partitions", "--format", "json", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "partitions");
    assert_eq!(v["seed"], 3);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 6, "{keys:?}");
        for k in ["name", "anchor", "params", "status", "witness", "ms"] {
            assert!(c.get(k).is_some(), "missing {k}");
        }
        assert!(c["params"].is_object());
        assert_eq!(c["status"], "pass");
        assert!(c["witness"].is_null());
        assert!(c["ms"].is_number());
    }
    let keys: Vec<(String, String)> =
        checks.iter().map(|c| (c["name"].as_str().unwrap().to_string(), c["params"].to_string())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let report = SuiteReport::from_json(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(report.checks.len(), checks.len());
}

#[test]
fn reports_are_byte_identical_across_runs_and_job_counts() {
    let a = sl2calc(&["verify", "--suite", "udot", "--format", "json", "--seed", "11", "--jobs", "1"]);
    let b = sl2calc(&["verify", "--suite", "udot", "--format", "json", "--seed", "11", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let t1 = sl2calc(&["verify", "--suite", "symfun", "--seed", "5"]);
    let t2 = sl2calc(&["verify", "--suite", "symfun", "--seed", "5"]);
    assert_eq!(t1.stdout, t2.stdout);
    assert!(String::from_utf8_lossy(&t1.stdout).contains("failed, 0 skipped") || String::from_utf8_lossy(&t1.stdout).contains("0 failed"));
}

#[test]
fn config_file_from_environment_and_flag_precedence() {
    let path = temp_file("config.toml", "rank-max = 2\nseed = 42\nformat = \"json\"\n");
    let out = Command::new(env!("CARGO_BIN_EXE_sl2calc"))
        .args(["verify", "--suite", "nilhecke"])
        .env("SL2CALC_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["seed"], 42);
    let max_a = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"] == "nilhecke.defining_relations")
        .map(|c| c["params"]["a"].as_u64().unwrap())
        .max();
    assert_eq!(max_a, Some(2));

    // Flags override the file.
    let out = Command::new(env!("CARGO_BIN_EXE_sl2calc"))
        .args(["verify", "--suite", "nilhecke", "--seed", "1", "--format", "text", "--rank-max", "1"])
        .env("SL2CALC_CONFIG", &path)
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("suite: nilhecke  seed: 1"), "{text}");

    let bad = temp_file("bad.toml", "rank_maximum = 3\n");
    let out = Command::new(env!("CARGO_BIN_EXE_sl2calc")).args(["verify", "--suite", "udot", "--config"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let _ = std::fs::remove_file(path);
    let _ = std::fs::remove_file(bad);
}

#[test]
fn failing_checks_carry_witnesses_and_set_the_exit_status() {
    let wrong = Relation::new(NhElement::dd(1, 2).unwrap(), NhElement::zero(2));
    let checks = vec![
        Check::new("demo.false_relation", "∂_1 = 0", params!("a" => 2), move || Outcome::relation(Ok(wrong.clone()))),
        Check::new("demo.true", "1 = 1", params!(), || Outcome::expect_eq(&1, &1)),
    ];
    let report = SuiteReport::new("demo", 0, run_checks(&checks, false));
    assert!(report.has_failures());
    let failed = &report.checks[0];
    assert_eq!(failed.status, Status::Fail);
    assert!(failed.witness.as_deref().unwrap().contains("lhs"));
    let json: Value = serde_json::from_str(&report.to_json().unwrap()).unwrap();
    assert!(json["checks"][0]["witness"].is_string());
    assert!(json["checks"][1]["witness"].is_null());
}

#[test]
fn table_subcommands() {
    let out = sl2calc(&["lr", "2,1", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let coeffs: Vec<(String, i64)> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["gamma"].as_str().unwrap().to_string(), r["coeff"].as_i64().unwrap()))
        .collect();
    assert_eq!(coeffs, vec![("(2,1,1)".to_string(), 1), ("(2,2)".to_string(), 1), ("(3,1)".to_string(), 1)]);

    let out = sl2calc(&["canon", "mult", "E2", "E1", "--n", "0", "--format", "json"]);
    let v = stdout_json(&out);
    assert_eq!(v["terms"][0]["tag"], "E^(3)F^(0)");
    assert_eq!(v["terms"][0]["coeff"]["text"], sl2calc::udot::qbin(3, 1).to_string());

    let out = sl2calc(&["hom-rank", "--a", "1", "--b", "1", "--delta", "0", "--n", "-1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["agree"], true);

    let out = sl2calc(&["schur", "∅", "--vars", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = sl2calc(&["schur", "2,1", "--vars", "2", "--method", "jacobi-trudy"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("jacobi-trudy"), "{text}");
}
