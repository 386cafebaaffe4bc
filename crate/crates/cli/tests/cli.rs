//! End-to-end behaviour of the `semiinv` binary.

use std::process::{Command, Output};

use semiinv::format::JsonPolynomial;
use semiinv_core::generators::GeneratorTable;
use semiinv_core::poly::{Polynomial, ZZ};
use semiinv_core::relations::main_relation;

fn semiinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiinv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

/// The report without timings, which legitimately vary between runs.
fn without_timings(mut v: serde_json::Value) -> serde_json::Value {
    for c in v["checks"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v["config"].as_object_mut().unwrap().remove("jobs");
    v
}

#[test]
fn emit_lists_names_and_aliases_agree() {
    let list = stdout(&semiinv(&["emit", "--list"]));
    for name in ["f300", "f1", "h", "q", "HH", "QQ", "Stilde", "Ttilde", "A", "nakamoto", "tracegens"] {
        assert!(list.lines().any(|l| l == name), "{name} missing from the list");
    }
    assert_eq!(stdout(&semiinv(&["emit", "f300"])), stdout(&semiinv(&["emit", "f1"])));
    assert_eq!(stdout(&semiinv(&["emit", "f111"])), stdout(&semiinv(&["emit", "f5"])));
}

#[test]
fn emitted_json_round_trips_to_the_library_value() {
    let out = semiinv(&["emit", "h", "--format", "json"]);
    assert!(out.status.success());
    let doc: JsonPolynomial = serde_json::from_slice(&out.stdout).unwrap();
    let h: Polynomial<_> = doc.to_polynomial(&ZZ).unwrap();
    assert_eq!(h, GeneratorTable::build().unwrap().h);
    let doc: JsonPolynomial = serde_json::from_slice(&semiinv(&["emit", "A", "--format", "json"]).stdout).unwrap();
    assert_eq!(doc.to_polynomial(&ZZ).unwrap(), main_relation());
}

#[test]
fn emitted_text_parses_back() {
    let text = stdout(&semiinv(&["emit", "A"]));
    let a = semiinv_core::poly::parse_polynomial(&text, &ZZ, main_relation().vars()).unwrap();
    assert_eq!(a, main_relation());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(semiinv(&["emit", "nonsense"]).status.code(), Some(2));
    assert_eq!(semiinv(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(semiinv(&["verify", "hwv", "--primes", "9"]).status.code(), Some(2));
    assert_eq!(semiinv(&["verify", "theorem1", "--primes", "3"]).status.code(), Some(2));
    assert_eq!(semiinv(&["verify", "hwv", "--h-beta", "1,2"]).status.code(), Some(2));
    assert_eq!(semiinv(&["verify", "main-relation", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(semiinv(&["frobnicate"]).status.code(), Some(2));
    let missing = semiinv(&["verify", "main-relation", "--relation-file", "/nonexistent/relation.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn report_is_versioned_json() {
    let out = semiinv(&["verify", "nonvanishing", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["suite"], "nonvanishing");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn modular_reports_do_not_depend_on_the_worker_count() {
    let args = |jobs: &'static str| {
        [
            "verify",
            "nakamoto",
            "--format",
            "json",
            "--trials",
            "20",
            "--primes",
            "1000003,998244353",
            "--seed",
            "7",
            "--jobs",
            jobs,
        ]
    };
    let one = without_timings(json(&semiinv(&args("1"))));
    let four = without_timings(json(&semiinv(&args("4"))));
    assert_eq!(one, four);
    let modular = one["checks"].as_array().unwrap().iter().find(|c| c["mode"] == "modular").unwrap();
    assert_eq!(modular["modular"]["trials_per_prime"], 20);
    assert_eq!(modular["modular"]["seed"], 7);
    assert_eq!(modular["modular"]["failures"], 0);
}

#[test]
fn small_characteristic_is_opt_in() {
    let out = semiinv(&["verify", "main-relation", "--primes", "3", "--allow-small-char", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn exact_budget_exhaustion_is_undecided() {
    let out = semiinv(&["verify", "main-relation", "--mode", "exact", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("UNDECIDED"));
}

#[test]
fn derive_st_and_solve_hwv_print_results() {
    let st = stdout(&semiinv(&["derive-st"]));
    let names: Vec<&str> = st.lines().map(|l| l.split(" = ").next().unwrap()).collect();
    assert_eq!(names, ["Stilde", "Ttilde", "S_cubic", "T_cubic"]);
    let solved = json(&semiinv(&["solve-hwv", "--format", "json"]));
    assert_eq!(solved[0]["solved"], serde_json::json!(["-1/3", "-1/3", "2/3", "1/12"]));
    assert_eq!(solved[0]["solved"], solved[0]["stored"]);
    assert_eq!(solved[1]["solved"], solved[1]["stored"]);
}

#[test]
fn failing_checks_exit_with_one_and_show_a_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.txt");
    let mut text = stdout(&semiinv(&["emit", "A"]));
    text.push_str(" + q*f1^3");
    std::fs::write(&path, text).unwrap();
    let out = semiinv(&[
        "verify",
        "main-relation",
        "--relation-file",
        path.to_str().unwrap(),
        "--trials",
        "3",
        "--primes",
        "1000003",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("counterexample mod 1000003"));
}

#[test]
fn relations_are_emitted_in_their_conventional_layout() {
    let a = stdout(&semiinv(&["emit", "A"]));
    assert!(a.starts_with("q^2 - q*h*f5 + 3*q*f1*f7*f10"), "{}", &a[..40]);
    let n = stdout(&semiinv(&["emit", "nakamoto"]));
    assert!(n.starts_with("r^2 - r*k*z + r*k*t1*t2"), "{}", &n[..40]);
    assert_eq!(n.split(" + ").count() + n.split(" - ").count() - 1, 170);
}

#[test]
fn full_run_passes_and_repeats_exactly() {
    let args = ["verify", "all", "--mode", "modular", "--trials", "100", "--seed", "0", "--format", "json"];
    let first = semiinv(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    let second = semiinv(&args);
    assert_eq!(without_timings(json(&first)), without_timings(json(&second)));
    assert_eq!(semiinv(&["verify", "s-ab", "--mode", "exact"]).status.code(), Some(0));
}
