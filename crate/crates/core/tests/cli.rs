use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_transversal-lab"));
    c.env_remove("TRANSVERSAL_LAB_FORCE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).display().to_string();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn validate_and_solve_the_star_construction() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "prop6.json", &["--prop", "6", "--k", "2"]);

    let out = run(&["validate", &path]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["profile"]["d_B"]["exact"], "2");

    assert_eq!(run(&["solve", "--algo", "exact", &path]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--algo", "hyper", &path]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--algo", "mt", "--round-cap", "100", &path]).status.code(), Some(2));
    assert_eq!(run(&["verify-infeasible", &path]).status.code(), Some(0));
}

#[test]
fn feasible_instance_solves_with_every_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "r.json", &["--prop", "random", "--kA", "10", "--kB", "10", "--base", "bounded", "--seed", "3"]);
    for algo in ["exact", "mt", "hyper"] {
        let out = run(&["solve", "--algo", algo, "--seed", "1", &path]);
        assert_eq!(out.status.code(), Some(0), "{algo}");
        let v = json(&out);
        assert_eq!(v["status"], "FOUND");
        assert_eq!(v["transversal"].as_object().unwrap().len(), 20);
    }
    assert_eq!(run(&["verify-infeasible", &path]).status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "r.json", &["--prop", "random", "--density", "0.7", "--seed", "9"]);
    for args in [
        vec!["solve", "--algo", "mt", "--seed", "4", path.as_str()],
        vec!["solve", "--algo", "exact", path.as_str()],
        vec!["analyze", "--check", "correlation", path.as_str()],
        vec!["check", "--cond", "2", "--kA", "10", "--kB", "10", "--dA", "2", "--dB", "2"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
    let again = dir.path().join("again.json").display().to_string();
    run(&["construct", "--prop", "random", "--density", "0.7", "--seed", "9", "-o", &again]);
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn construct_round_trip_keeps_the_declared_profile() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [("p4", vec!["--prop", "4", "--k", "2"]), ("p7", vec!["--prop", "7", "--d", "16"]), ("p8", vec!["--prop", "8", "--k", "3", "--a-size", "15"])] {
        let path = dir.path().join(name).display().to_string();
        let mut full = vec!["construct"];
        full.extend(args.iter().copied());
        full.extend(["-o", path.as_str()]);
        let summary = json(&run(&full));
        let validated = json(&run(&["validate", &path]));
        assert_eq!(summary["declared_profile"], validated["profile"], "{name}");
    }
}

#[test]
fn usage_and_data_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(run(&["solve", "--algo", "nope", "x.json"]).status.code(), Some(64));
    assert_eq!(run(&["check", "--cond", "1", "--kA", "3"]).status.code(), Some(64));
    assert_eq!(run(&["check", "--cond", "1", "--kA", "1", "--kB", "3", "--dA", "1", "--dB", "1"]).status.code(), Some(64));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(run(&["validate", bad.to_str().unwrap()]).status.code(), Some(65));
    assert_eq!(run(&["solve", bad.to_str().unwrap()]).status.code(), Some(65));

    let invalid = dir.path().join("invalid.json");
    std::fs::write(
        &invalid,
        r#"{"base_vertices":[{"id":0,"side":"A"},{"id":1,"side":"B"}],"base_edges":[[0,1]],
            "cover_vertices":[{"id":5,"owner":0},{"id":6,"owner":1},{"id":7,"owner":1}],
            "cover_edges":[[5,6],[5,7]]}"#,
    )
    .unwrap();
    let out = run(&["validate", invalid.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(65));
    assert_eq!(json(&out)["error"], "MatchingViolation");
    assert_eq!(run(&["validate", "/nonexistent/file.json"]).status.code(), Some(66));
}

#[test]
fn size_guard_and_force() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p7.json").display().to_string();
    assert_eq!(run(&["construct", "--prop", "7", "--d", "64", "-o", &path]).status.code(), Some(3));
    assert_eq!(run(&["construct", "--prop", "7", "--d", "64", "--force", "-o", &path]).status.code(), Some(0));
    let out = bin().args(["construct", "--prop", "7", "--d", "64", "-o", &path]).env("TRANSVERSAL_LAB_FORCE", "1").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_reports_are_tagged() {
    let v = json(&run(&["check", "--cond", "2", "--kA", "10", "--kB", "10", "--dA", "2", "--dB", "2"]));
    assert_eq!(v["condition"], "COND2");
    assert_eq!(v["holds"], true);
    let value = v["details"]["value"]["float"].as_f64().unwrap();
    assert!((value - 6.349733045108008e-05).abs() < 1e-12);

    let v = json(&run(&["check", "--cond", "prop8", "--k", "3"]));
    assert_eq!(v["lower"]["exact"], "9/2");

    let v = json(&run(&["check", "--cond", "local", "--dA", "100", "--dB", "10001", "--epsilon", "0.5"]));
    assert_eq!(v["details"]["branch"], "COND1");
}

#[test]
fn analyze_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "p6.json", &["--prop", "6", "--k", "2"]);
    let v = json(&run(&["analyze", "--check", "blockprob", "--vertex", "0", &path]));
    // one neighbour in a part of size 2
    let probs = v["results"][0]["block_probability"].as_object().unwrap();
    assert!(probs.values().all(|p| p["exact"] == "1/2"));
    let v = json(&run(&["analyze", "--check", "correlation", &path]));
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["passes"] == true));
    let v = json(&run(&["analyze", "--check", "deps", "--mode", "cond3", &path]));
    assert!(v["results"].as_array().unwrap().iter().all(|r| r[0]["within_bound"] == true));
    let v = json(&run(&["analyze", "--check", "counting", "--k", "2", "--a-size", "2"]));
    assert_eq!(v["out_of_range"], true);
    assert_eq!(run(&["analyze", "--check", "counting", "--k", "4", "--a-size", "1"]).status.code(), Some(3));
}

#[test]
fn bench_subset_emits_a_summary() {
    let out = run(&["bench", "--suite", "acceptance", "--only", "1,7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["bench", "--only", "11"]).status.code(), Some(64));
}
