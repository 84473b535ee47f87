use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lagrangia")).current_dir(dir).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn construct_then_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["construct", "--what", "complete", "--n", "5", "--r", "3", "--output", "k5.txt"]);
    assert!(out.status.success());
    assert!(fs::read_to_string(dir.path().join("k5.txt")).unwrap().starts_with("3 5 10\n"));

    let out = run(dir.path(), &["lambda", "k5.txt", "--restarts", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tool"], "lagrangia");
    assert_eq!(v["command"], "lambda");
    assert_eq!(v["config"]["restarts"], 20);
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
    assert!((v["result"]["value"].as_f64().unwrap() - 0.08).abs() < 1e-9);
}

#[test]
fn orbit_solver_on_principal_star() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["construct", "--what", "principal_star", "--n", "12", "--r", "3", "--output", "s.txt"]);
    assert!(out.status.success());
    let v = json(&run(dir.path(), &["lambda", "s.txt", "--orbits", "1,11"]));
    assert_eq!(v["result"]["method"], "orbit-exact");
    assert!(v["result"]["certified_lower"].is_string());
    assert_eq!(run(dir.path(), &["lambda", "s.txt", "--orbits", "2,3"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "3 5 2\n1 2 3\n1 2\n").unwrap();
    let out = run(dir.path(), &["lambda", "bad.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(run(dir.path(), &["lambda"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["sweep", "--r", "x"]).status.code(), Some(2));
}

#[test]
fn wiss_commands() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("w.txt"), "3 4 4\n0.3 1/4 0.2 0.1\n1 2\n1 3\n2 3\n1 2 4\n").unwrap();
    let v = json(&run(dir.path(), &["wiss-weight", "w.txt", "--mc-samples", "20000"]));
    assert_eq!(v["result"]["total_exact"], "423/2000");
    assert!(v["result"]["monte_carlo"]["stderr"].as_f64().unwrap() > 0.0);

    let out = run(dir.path(), &["wiss-compress", "w.txt", "--fixpoint"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["weight_after"], "513/2000");
    assert_eq!(v["result"]["left_compressed"], true);

    let v = json(&run(dir.path(), &["wiss-opt", "w.txt", "--restarts", "10"]));
    assert!(v["result"]["value"].as_f64().unwrap() >= v["result"]["input_weight"].as_f64().unwrap() - 1e-12);
}

#[test]
fn enumerate_streams_and_respects_budget() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["enumerate", "--r", "3", "--max-ground", "5", "--maximal"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 13);
    assert!(text.lines().any(|l| l == "1 1: 1"));
    let out = run(dir.path(), &["enumerate", "--r", "3", "--max-ground", "5", "--node-budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sweep_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["sweep", "--r", "3", "--max-ground", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("canonical_key,s,principal,value,gap"));
    let v = json(&run(dir.path(), &["sweep", "--r", "3", "--format", "json"]));
    assert_eq!(v["result"]["summary"]["top_is_clique"], true);
}

#[test]
fn verify_paper_reports_constants() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["verify-paper", "--case", "constants", "--r", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.contains(r#""L_r":"27/64""#));
    let out = run(dir.path(), &["verify-paper", "--case", "2", "--r", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
    assert_eq!(run(dir.path(), &["verify-paper", "--case", "4"]).status.code(), Some(0));
}

#[test]
fn hom_check_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    for (what, args, file) in [
        ("k_rr", vec!["--r", "3"], "k33.txt"),
        ("star", vec!["--a", "2", "--b", "5", "--r", "3"], "star.txt"),
        ("complete", vec!["--n", "9", "--r", "3"], "k9.txt"),
    ] {
        let mut a = vec!["construct", "--what", what, "--output", file];
        a.extend(args);
        assert!(run(dir.path(), &a).status.success());
    }
    let v = json(&run(dir.path(), &["hom-check", "k33.txt", "star.txt", "--injective"]));
    assert_eq!(v["result"]["outcome"], "not_found");
    let v = json(&run(dir.path(), &["hom-check", "k33.txt", "k9.txt"]));
    assert_eq!(v["result"]["outcome"], "found");
    assert_eq!(run(dir.path(), &["hom-check", "k33.txt", "star.txt", "--budget", "1"]).status.code(), Some(3));
}

#[test]
fn config_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("run.cfg"), "restarts = 7\nseed = 11\n").unwrap();
    assert!(run(dir.path(), &["construct", "--what", "m2", "--r", "3", "--output", "m2.txt"]).status.success());
    let a = run(dir.path(), &["--config", "run.cfg", "lambda", "m2.txt"]);
    let b = run(dir.path(), &["lambda", "m2.txt", "--config", "run.cfg", "--threads", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["config"]["restarts"], 7);
    assert_eq!(v["config"]["seed"], 11);
    let c = run(dir.path(), &["--config", "run.cfg", "lambda", "m2.txt", "--seed", "2"]);
    assert_eq!(json(&c)["config"]["seed"], 2);
}
