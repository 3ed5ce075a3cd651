//! The `qprofile` binary end to end.

use std::process::Command;

use qprofile::cli::{Report, Value, VerifyReport};
use qprofile::QPoly;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qprofile"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn bpoly_headline() {
    let (code, out, _) = run(&["bpoly", "--mu", "5,1", "--nu", "3,3", "--method", "all"]);
    assert_eq!(code, 0);
    assert!(out.contains("value: q^4 + 2*q^3 + 3*q^2 + 2*q + 1"));
    assert!(out.contains("agreement: true"));
}

#[test]
fn every_subcommand_answers() {
    let cases: &[(&[&str], &str)] = &[
        (&["touchard", "--m", "2"], "value: q + 2"),
        (&["whittaker", "--mu", "2,1", "--nu", "1,1,1"], "value: q + 2"),
        (&["stirling", "--n", "3", "--m", "2"], "value: q + 2"),
        (&["rook", "--rows", "2", "--cols", "2", "--m", "2"], "value: q + 1"),
        (&["rook", "--board", "1,2", "--m", "1"], "value: q^2 + 2*q"),
        (&["rook", "--nu", "2,2", "--m", "1"], "value: q^3 + 2*q^2 + q"),
        (&["binmat", "--rows", "2,1", "--cols", "1,1,1"], "value: 3"),
        (
            &["sigma", "--mu", "5,1", "--nu", "3,3", "--primes", "2,3"],
            "value: q^5 + q^4 + q^3 - q^2 - q - 1",
        ),
        (
            &["sigma", "--mu", "1,1", "--operator", "irreducible", "--primes", "2,3"],
            "value: q + 1",
        ),
        (
            &["sigma", "--mu", "2,1", "--operator", "nilpotent", "--primes", "2"],
            "value: q^2 + q",
        ),
    ];
    for (args, expected) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {out}{err}");
        assert!(out.contains(expected), "{args:?}: {out}");
    }
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        &["bpoly", "--mu", "1,2", "--nu", "3"][..],
        &["stirling", "--n", "3", "--m", "1", "--nu", "2"],
        &["sigma", "--mu", "1", "--nu", "1", "--primes", "6"],
        &["touchard", "--m", "2", "--method", "guess"],
        &["rook", "--board", "3,1", "--m", "1"],
        &["nothing"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn json_reports_round_trip_and_are_deterministic() {
    let args = [
        "sigma", "--mu", "2,1", "--nu", "2,1", "--method", "all", "--primes", "2,3", "--json",
    ];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
    let report: Report = serde_json::from_str(&first).unwrap();
    assert!(report.agreement);
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", first);
    let Value::Poly(p) = &report.value else {
        panic!("polynomial value expected")
    };
    let raw: serde_json::Value = serde_json::from_str(&first).unwrap();
    let coeffs = raw["value"].as_array().unwrap();
    assert!(coeffs.iter().all(|c| c.is_string()));
    assert_eq!(coeffs.len(), p.coeffs().len());
    assert!(!first.contains("elapsed_ms"));
}

#[test]
fn timing_is_opt_in() {
    let (_, out, _) = run(&["touchard", "--m", "3", "--json", "--timing"]);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert!(report.elapsed_ms.is_some());
    assert_eq!(report.value, Value::Poly(QPoly::from_i64s(&[5, 6, 3, 1])));
}

#[test]
fn verify_suites_pass() {
    let (code, out, err) = run(&["verify", "--suite", "all", "--max-n", "4", "--max-cells", "8", "--json"]);
    assert_eq!(code, 0, "{err}");
    let report: VerifyReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.failed, 0);
    assert!(report.passed > 100);
    assert_eq!(report.suites.len(), 6);
}
