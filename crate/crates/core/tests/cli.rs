//! Command-line behaviour through the library entry point.

use monopole::cli::main_with_args;
use serde_json::Value;

fn run(args: &[&str]) -> i32 {
    main_with_args(std::iter::once("monopole").chain(args.iter().copied()))
}

fn report(args: &[&str]) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out");
    let mut full = vec!["--output", path.to_str().unwrap()];
    full.extend_from_slice(args);
    let code = run(&full);
    (code, std::fs::read_to_string(&path).unwrap_or_default())
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["no-such-command"]), 2);
    assert_eq!(run(&["charge"]), 2);
    assert_eq!(run(&["charge", "--n", "4", "--method", "quadrature"]), 2);
    assert_eq!(run(&["charge", "--n", "1", "--axes", "1,2"]), 2);
    assert_eq!(run(&["charge", "--n", "1", "--axes", "1,-1,1"]), 2);
    assert_eq!(run(&["charge", "--n", "2", "--method", "monte-carlo", "--samples", "10"]), 2);
    assert_eq!(run(&["verify-clifford", "--n", "6"]), 2);
    assert_eq!(run(&["--sigma", "0", "traceless"]), 2);
}

#[test]
fn failing_checks_exit_with_one() {
    // At n = 1 the traces have unit modulus; an absurd tolerance still passes them,
    // so use a quadrature charge with too few nodes and a tight tolerance instead.
    let (code, text) = report(&["--tol-quadrature", "1e-14", "charge", "--n", "1", "--resolution", "4"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["pass"] == false));
}

#[test]
fn unwritable_output_exits_with_one() {
    assert_eq!(run(&["--output", "/nonexistent/dir/report.json", "traceless", "--n", "2"]), 1);
}

#[test]
fn json_report_shape() {
    let (code, text) = report(&["--seed", "3", "dirac"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["version"], "1");
    assert_eq!(v["config"]["seed"], 3);
    assert_eq!(v["config"]["command"]["name"], "dirac");
    assert!(v["config"].get("output").is_none());
    for c in v["checks"].as_array().unwrap() {
        for key in ["name", "paper_ref", "value", "expected", "tolerance", "pass", "runtime_s"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
        assert!(c["runtime_s"].is_null());
        assert_eq!(c["pass"], true);
    }
}

#[test]
fn timings_fill_runtime() {
    let (code, text) = report(&["--timings", "verify-clifford", "--n", "2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(v["checks"][0]["runtime_s"].as_f64().unwrap() >= 0.0);
}

#[test]
fn csv_and_text_formats() {
    let (code, csv) = report(&["--format", "csv", "traceless", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(csv.starts_with("name,paper_ref,value,expected,tolerance,pass,runtime_s\n"));
    assert_eq!(csv.lines().count(), 1 + 2 * 15);
    let (code, text) = report(&["--format", "text", "charge", "--n", "3", "--method", "closed-form"]);
    assert_eq!(code, 0);
    assert!(text.ends_with("2/2 checks passed\n"));
}

#[test]
fn every_subcommand_passes_with_defaults() {
    for args in [
        &["verify-clifford"][..],
        &["traceless"],
        &["potentials", "--points", "10"],
        &["transition", "--points", "10"],
        &["charge", "--n", "1", "--axes", "1,2,1"],
        &["charge", "--n", "2", "--method", "monte-carlo", "--samples", "20000"],
        &["yang", "--resolution", "12"],
    ] {
        assert_eq!(report(args).0, 0, "{args:?}");
    }
}
