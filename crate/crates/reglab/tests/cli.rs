use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/{}", env!("CARGO_MANIFEST_DIR"), name)
}

fn run(args: &[&str]) -> (i32, Value) {
    let mut v = vec!["reglab"];
    v.extend_from_slice(args);
    let (code, text) = reglab::cli::run(v);
    (code, serde_json::from_str(&text).unwrap_or(Value::Null))
}

fn is_zero(v: &Value) -> bool {
    v["digits"].as_array().is_some_and(|d| d.is_empty()) && v["val"] == v["prec"]
}

#[test]
fn lmod2_vanishes_at_zero() {
    let (code, v) = run(&["lmod2", "0", "--prime", "7", "--precision", "12"]);
    assert_eq!(code, 0);
    assert!(is_zero(&v["result"]["value"]));
    assert_eq!(v["result"]["value"]["prec"], 12);
    assert_eq!(v["config"]["precision"], 12);
    assert_eq!(v["achieved_precision"], 12);
}

#[test]
fn polylog_literals_and_routes() {
    let (code, v) = run(&["li2", r#"{"val": 1, "digits": [3, 1], "prec": 30}"#, "--precision", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["route"], "direct-series");
    assert_eq!(v["result"]["value"]["val"], 1);
    let (code, v) = run(&["ltwo", "50"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["route"], "reflection");
    let (code, v) = run(&["lmod2", "1/7"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["route"], "inversion");
}

#[test]
fn triple_index_of_logs_vanishes() {
    let (code, v) = run(&["triple-index", &data("triple_log.json")]);
    assert_eq!(code, 0);
    assert!(is_zero(&v["result"]["value"]));
    assert!(is_zero(&v["result"]["simple_pole_formula"]));
    assert_eq!(v["result"]["data"]["i_hdg"]["logdeg"], 2);
}

#[test]
fn global_index_vanishes() {
    let (code, v) = run(&["global-index", &data("global.json")]);
    assert_eq!(code, 0);
    assert!(is_zero(&v["result"]["total"]));
    assert_eq!(v["result"]["ends"].as_array().unwrap().len(), 3);
    assert!(v["result"]["nonzero_local_terms"].as_u64().unwrap() >= 2);
}

#[test]
fn element_checks_and_exit_codes() {
    let (code, v) = run(&["check-element", &data("closed.json"), "--require", "ocond", "--require", "ccond"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ocond"], true);
    let (code, v) = run(&["check-element", &data("tilde.json"), "--require", "tilde"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ocond"], false);
    let (code, v) = run(&["check-element", &data("open.json"), "--require", "ocond"]);
    assert_eq!(code, 5);
    assert_eq!(v["error"]["code"], "condition-failed");
    assert_eq!(v["result"]["ocond"], false);
}

#[test]
fn regulator_reports() {
    for f in ["thm1", "thm2", "thm3", "thm4a", "thm4b"] {
        let (code, v) = run(&["regulator", "--formula", f, &data("closed.json"), &data("omega.json")]);
        assert_eq!(code, 0, "{}", v);
        assert!(is_zero(&v["result"]["total"]), "{} {}", f, v["result"]["total"]);
        assert!(v["result"]["nonzero_local_terms"].as_u64().unwrap() >= 3);
    }
    for f in ["thm3", "thm4a", "thm4b"] {
        let (code, v) = run(&["regulator", "--formula", f, &data("tilde.json"), &data("omega.json")]);
        assert_eq!(code, 0);
        assert!(is_zero(&v["result"]["total"]), "{} {}", f, v["result"]["total"]);
    }
}

#[test]
fn error_exit_codes() {
    let (code, v) = run(&["ltwo", "5"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["code"], "unreachable");
    let (code, v) = run(&["lmod2", "abc"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "parse");
    let (code, _) = run(&["regulator", "--formula", "thm9", &data("closed.json"), &data("omega.json")]);
    assert_eq!(code, 2);
    let (code, v) = run(&["regulator", "--formula", "thm3", &data("closed.json"), &data("omega.json"), "--truncation", "2"]);
    assert_eq!(code, 4);
    assert_eq!(v["error"]["code"], "window-exhausted");
    let (code, _) = run(&["triple-index", &data("missing.json")]);
    assert_eq!(code, 2);
    let (code, _) = run(&["lmod2", "0", "--prime", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn selftest_is_deterministic() {
    let args = ["reglab", "selftest", "--suite", "index", "--quick", "--seed", "42"];
    let a = reglab::cli::run(args);
    let b = reglab::cli::run(args);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    let (code, v) = run(&["selftest", "--suite", "global", "--quick", "--seed", "42"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["result"]["suites"][0]["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["reciprocity", "constant-third-argument", "cyclic-sum"]);
}

#[test]
fn binary_reads_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_reglab")).args(["lmod2", "0"]).env("REGLAB_PRECISION", "9").env("REGLAB_PRIME", "5").output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["precision"], 9);
    assert_eq!(v["config"]["prime"], 5);
    let out = Command::new(env!("CARGO_BIN_EXE_reglab")).args(["ltwo", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}
