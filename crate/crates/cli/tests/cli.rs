use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

const STRETCH: &str = r#"{"m":2,"n":1,"entries":[["1","0","0"],["0","2","0"],["0","0","1"]]}"#;
const IDENTITY: &str = r#"{"m":2,"n":1,"entries":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#;

fn superkit(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_superkit"))
        .args(args)
        .env_remove("SUPERKIT_MAX_TERMS")
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn ber_of_identity_passes() {
    let o = superkit(&["ber"], IDENTITY, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o), json!({ "ber": "1" }));
}

#[test]
fn json_report_fields() {
    let o = superkit(&["--json", "ber", "-"], IDENTITY, &[]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    for key in ["command", "passed", "result", "counterexample", "timing_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "ber");
    assert_eq!(v["passed"], true);
    assert!(v["counterexample"].is_null());
}

#[test]
fn input_from_file() {
    let path = std::env::temp_dir().join(format!("superkit-cli-{}.json", std::process::id()));
    std::fs::write(&path, STRETCH).unwrap();
    let o = superkit(&["ber", path.to_str().unwrap()], "", &[]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(json_out(&o), json!({ "ber": "2" }));
}

#[test]
fn failed_check_exits_one_with_counterexample() {
    let o = superkit(&["--json", "susy-check"], STRETCH, &[]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_out(&o);
    assert_eq!(v["passed"], false);
    assert_eq!(v["counterexample"]["pullback"]["dz0"], "2*z1");
}

#[test]
fn bad_input_exits_two() {
    let o = superkit(&["ber"], "not json", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid JSON"));
    let o = superkit(&["--field", "9", "ber"], IDENTITY, &[]);
    assert_eq!(o.status.code(), Some(2));
    let o = superkit(&["chart-change", "--m", "1", "--n", "1", "--from", "0", "--to", "5"], "", &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn term_cap_from_environment() {
    let m = r#"{"m":1,"n":1,"entries":[["1+a+b+c","0"],["0","1"]]}"#;
    let o = superkit(&["ber"], m, &[("SUPERKIT_MAX_TERMS", "2")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("too large"));
    let o = superkit(&["ber"], m, &[("SUPERKIT_MAX_TERMS", "10")]);
    assert_eq!(o.status.code(), Some(0));
    let o = superkit(&["ber"], m, &[("SUPERKIT_MAX_TERMS", "zero")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn prime_field_reduces_coefficients() {
    let m = r#"{"m":1,"n":1,"entries":[["8","0"],["0","1/2"]]}"#;
    let o = superkit(&["--field", "7", "ber"], m, &[]);
    assert_eq!(json_out(&o), json!({ "ber": "2" }));
}

#[test]
fn p12_witness_matches_golden() {
    let o = superkit(&["p12-witness"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    let golden: Value = serde_json::from_str(include_str!("golden/p12_witness.json")).unwrap();
    assert_eq!(json_out(&o), golden);
}

#[test]
fn chart_cocycle_holds() {
    let o = superkit(&["--json", "chart-cocycle", "--m", "2", "--n", "1"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["passed"], true);
}

#[test]
fn selftest_passes() {
    let o = superkit(&["--samples", "10", "selftest"], "", &[]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
}
