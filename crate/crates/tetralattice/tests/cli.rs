//! End-to-end tests of the `tetra` binary: outputs and exit codes.

use std::process::{Command, Output};

fn tetra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tetra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compute_vev_gives_schur_times_prefactor() {
    let out = tetra(&[
        "compute",
        "vev",
        "--word",
        "X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)",
        "--model",
        "q0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], "z1^2*z2^1");
}

#[test]
fn tasep_kernel_reports_worked_coefficient() {
    let out = tetra(&[
        "tasep",
        "--species",
        "3",
        "--sites",
        "5",
        "--sector",
        "2,1,1,1",
        "--config",
        "01203",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], "17");
}

#[test]
fn tasep_trace_method_agrees_with_closed_form() {
    for method in ["trace", "closed"] {
        let out = tetra(&[
            "tasep",
            "--species",
            "3",
            "--sites",
            "5",
            "--sector",
            "2,1,1,1",
            "--config",
            "30021",
            "--method",
            method,
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "method {method}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(json(&out)["value"], "6", "method {method}");
    }
}

#[test]
fn verify_single_entry_passes_with_exit_zero() {
    let out = tetra(&["verify", "--suite", "schur_corr", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["schema"], "tetralattice-report/1");
    assert_eq!(report["cases"][0]["status"], "pass");
}

#[test]
fn mutated_generic_suite_exits_one() {
    let out = tetra(&["verify", "--suite", "generic", "--mutate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        tetra(&["verify", "--suite", "no-such-suite"]).status.code(),
        Some(2)
    );
    assert_eq!(tetra(&["compute", "vev"]).status.code(), Some(2));
    assert_eq!(
        tetra(&["compute", "vev", "--word", "X(n=3"]).status.code(),
        Some(2)
    );
    assert_eq!(tetra(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let a = tetra(&["verify", "--suite", "q0", "--seed", "7", "--json", "-"]);
    let b = tetra(&["verify", "--suite", "q0", "--seed", "7", "--json", "-"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
