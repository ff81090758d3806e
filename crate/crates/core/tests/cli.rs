use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn verify_pareigis_reports_five_equal_maps() {
    let out = run(&["--command", "verify-pareigis", "--s=-1", "--window=6"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = report["results"].as_array().unwrap();
    let names: Vec<&str> = results.iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["antipode", "delta", "epsilon", "eta", "mu"]);
    assert!(results.iter().all(|r| r["verdict"] == "Equal"));
    assert_eq!(report["config"]["window"], 6);
    assert!(report["version"].is_string());
}

#[test]
fn even_integral_carrier_is_rejected() {
    let p = scratch("even.json", r#"{"rank": 1, "summands": [{"degree": [0], "order": 0}]}"#);
    let out = run(&["--command", "carrier-check", "--carrier-file", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("sign +1 at even degree"), "{err}");
}

#[test]
fn odd_integral_carrier_is_accepted() {
    let p = scratch("odd.json", r#"{"rank": 1, "summands": [{"degree": [3], "order": 0}]}"#);
    let out = run(&["--command", "carrier-check", "--carrier-file", p.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("carrier: Accept"));
}

#[test]
fn roundtrip_reports_are_byte_identical() {
    let args = ["--command", "roundtrip", "--trials=100", "--seed=42"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = run(&["--command", "roundtrip", "--trials=100", "--seed=43"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn output_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("hopfring-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["--command", "bicomplex-check", "--kappa=1", "--s=1", "--trials=10", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["results"].as_array().unwrap().len(), 2);
}

#[test]
fn configuration_errors_exit_two() {
    assert_eq!(run(&["--command", "check-axioms", "--window=0"]).status.code(), Some(2));
    assert_eq!(run(&["--command", "check-axioms", "--ring", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["--command", "carrier-check"]).status.code(), Some(2));
    assert_eq!(run(&["--command", "verify-pareigis", "--s=2"]).status.code(), Some(2));
    assert_eq!(run(&["--command", "nope"]).status.code(), Some(2));
    let p = scratch("broken.json", "{not json");
    assert_eq!(
        run(&["--command", "carrier-check", "--carrier-file", p.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn inadmissible_differential_fails_with_exit_one() {
    let out = run(&["--command", "build-semidirect", "--s=1", "--kappa=1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn timing_is_opt_in() {
    let plain = run(&["--command", "check-axioms", "--ring", "laurent", "--window=2"]);
    assert!(!String::from_utf8(plain.stdout).unwrap().contains("millis"));
    let timed = run(&["--command", "check-axioms", "--ring", "laurent", "--window=2", "--timing"]);
    assert!(String::from_utf8(timed.stdout).unwrap().contains("millis"));
}
