//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every criterion drives the `semiinv` binary end to end.

use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

use semiinv_core::poly::{IntegerRing, Polynomial, ZZ};

fn semiinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiinv")).args(args).output().expect("binary runs")
}

/// Runs `verify SUITE` with JSON output; returns the exit code and report.
fn verify(suite: &str, extra: &[&str]) -> (Option<i32>, Value) {
    let mut args = vec!["verify", suite, "--format", "json"];
    args.extend_from_slice(extra);
    let out = semiinv(&args);
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code(), report)
}

fn checks(report: &Value) -> Vec<Value> {
    report["checks"].as_array().cloned().unwrap_or_default()
}

/// Exit 0, every check passing, and every check in `mode` when given.
fn all_pass(code: Option<i32>, report: &Value, mode: Option<&str>) -> Result<(), String> {
    if code != Some(0) {
        return Err(format!("exit code {code:?}"));
    }
    let cs = checks(report);
    if cs.is_empty() {
        return Err("no checks reported".into());
    }
    for c in &cs {
        if c["status"] != "pass" {
            return Err(format!("{} is {}", c["name"], c["status"]));
        }
        if let Some(m) = mode {
            if c["mode"] != m {
                return Err(format!("{} ran in {} mode", c["name"], c["mode"]));
            }
        }
    }
    Ok(())
}

fn find<'a>(cs: &'a [Value], name: &str) -> Result<&'a Value, String> {
    cs.iter().find(|c| c["name"] == name).ok_or_else(|| format!("no check named `{name}`"))
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!("took {took:.1?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn generators_well_formed() -> Result<(), String> {
    let start = Instant::now();
    let (code, report) = verify("generators", &[]);
    all_pass(code, &report, Some("exact"))?;
    let cs = checks(&report);
    for name in ["f multidegrees (i,j,k)", "h multidegree", "q multidegree", "f span rank"] {
        find(&cs, name)?;
    }
    within(Duration::from_secs(10), start)
}

fn correction_coefficients() -> Result<(), String> {
    let start = Instant::now();
    let out = semiinv(&["solve-hwv", "--format", "json"]);
    if !out.status.success() {
        return Err(format!("exit code {:?}", out.status.code()));
    }
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let h = serde_json::json!(["-1/3", "-1/3", "2/3", "1/12"]);
    let q = serde_json::json!(["-1/2", "3/2", "-1/2", "-1/2", "-1/2", "-1/2", "1/2", "1/2"]);
    if v[0]["name"] != "H" || v[0]["solved"] != h {
        return Err(format!("H: solved {}", v[0]["solved"]));
    }
    if v[1]["name"] != "Q" || v[1]["solved"] != q {
        return Err(format!("Q: solved {}", v[1]["solved"]));
    }
    within(Duration::from_secs(60), start)
}

fn highest_weight_certificates() -> Result<(), String> {
    let (code, report) = verify("hwv", &[]);
    all_pass(code, &report, None)?;
    let cs = checks(&report);
    for name in [
        "H fixed by u12, u23",
        "Q fixed by u12, u23",
        "H fixed by u12, u23, u21, u32",
        "Q fixed by u12, u23, u21, u32",
        "S~ fixed by u12, u23, u21, u32",
        "T~ fixed by u12, u23, u21, u32",
    ] {
        if find(&cs, name)?["mode"] != "exact" {
            return Err(format!("{name} is not exact"));
        }
    }
    for c in cs.iter().filter(|c| c["mode"] == "modular") {
        if c["modular"]["trials_per_prime"].as_u64() < Some(100) {
            return Err(format!("{} used fewer than 100 points", c["name"]));
        }
    }
    Ok(())
}

fn special_triples() -> Result<(), String> {
    let start = Instant::now();
    let (code, report) = verify("special-triples", &[]);
    all_pass(code, &report, Some("exact"))?;
    let cs = checks(&report);
    for name in [
        "skew: all f vanish",
        "skew: h = H = det^2",
        "skew: q = Q = det^3",
        "weierstrass: pencil determinant",
        "weierstrass: S~, T~, H, Q = -b^2/27, -4a^2/27, -b, -a",
    ] {
        find(&cs, name)?;
    }
    within(Duration::from_secs(60), start)
}

fn derivation_structure() -> Result<(), String> {
    let start = Instant::now();
    let (code, report) = verify("derive-st", &[]);
    all_pass(code, &report, Some("exact"))?;
    within(Duration::from_secs(10), start)
}

fn modular_protocol(report: &Value, name: &str, want_primes: &[u64]) -> Result<(), String> {
    let cs = checks(report);
    let c = find(&cs, name)?;
    let m = &c["modular"];
    let primes: Vec<u64> =
        m["primes"].as_array().map(|a| a.iter().filter_map(Value::as_u64).collect()).unwrap_or_default();
    if primes != want_primes {
        return Err(format!("{name}: primes {primes:?}"));
    }
    if m["trials_per_prime"] != 100 || m["seed"] != 0 || m["failures"] != 0 {
        return Err(format!("{name}: protocol {m}"));
    }
    Ok(())
}

fn main_relation() -> Result<(), String> {
    let start = Instant::now();
    let (code, report) = verify("main-relation", &[]);
    all_pass(code, &report, None)?;
    let large = semiinv_core::relations::DEFAULT_PRIMES;
    if large.iter().any(|&p| p < 1 << 30) {
        return Err("a default prime is below 2^30".into());
    }
    modular_protocol(&report, "A(q, h, f1, ..., f10) = 0", &large)?;
    modular_protocol(&report, "A(q, h, f1, ..., f10) = 0 in small characteristic", &[5, 7])?;
    within(Duration::from_secs(600), start)
}

fn theorem_form() -> Result<(), String> {
    let start = Instant::now();
    let (code, report) = verify("theorem1", &[]);
    all_pass(code, &report, None)?;
    modular_protocol(&report, "Q^2 - H^3 - 27 H S~ + 27/4 T~ = 0", &semiinv_core::relations::DEFAULT_PRIMES)?;
    within(Duration::from_secs(600), start)
}

fn trace_identities() -> Result<(), String> {
    let start = Instant::now();
    for suite in ["s-ab", "phi-images", "nonvanishing"] {
        let (code, report) = verify(suite, &[]);
        all_pass(code, &report, Some("exact")).map_err(|e| format!("{suite}: {e}"))?;
    }
    let (_, report) = verify("phi-images", &[]);
    if checks(&report).len() != 12 {
        return Err("expected twelve image formulas".into());
    }
    within(Duration::from_secs(60), start)
}

fn pair_relation() -> Result<(), String> {
    let start = Instant::now();
    let (code, report) = verify("nakamoto", &["--mode", "exact"]);
    all_pass(code, &report, None)?;
    let cs = checks(&report);
    let structural = find(&cs, "A rewritten in the traces equals the stored relation")?;
    if structural["mode"] != "exact" {
        return Err("structural identity not exact".into());
    }
    find(&cs, "relation composed with the traces = 0")?;
    within(Duration::from_secs(900), start)
}

/// Adds one to the coefficient of the `k`-th term.
fn bump_one_coefficient(p: &Polynomial<IntegerRing>, k: usize) -> Result<Polynomial<IntegerRing>, String> {
    let m = p.terms()[k].0.clone();
    p.try_add(&Polynomial::monomial(ZZ, p.vars().clone(), m, 1i64.into())).map_err(|e| e.to_string())
}

fn negative_controls() -> Result<(), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    // One coefficient of A changed: the leading term gets +1.
    let a = bump_one_coefficient(&semiinv_core::relations::main_relation(), 0)?;
    let a_path = dir.path().join("relation.txt");
    std::fs::write(&a_path, a.to_string()).map_err(|e| e.to_string())?;
    let (code, _) = verify("main-relation", &["--relation-file", a_path.to_str().unwrap(), "--trials", "10"]);
    if code != Some(1) {
        return Err(format!("mutated A: exit {code:?}"));
    }
    // One coefficient of the pair relation changed.
    let n = semiinv_core::conjinv::pair_relation();
    let n = bump_one_coefficient(&n, n.len() / 2)?;
    let n_path = dir.path().join("pair.txt");
    std::fs::write(&n_path, n.to_string()).map_err(|e| e.to_string())?;
    let (code, _) = verify("nakamoto", &["--pair-relation-file", n_path.to_str().unwrap(), "--trials", "10"]);
    if code != Some(1) {
        return Err(format!("mutated pair relation: exit {code:?}"));
    }
    // One correction coefficient of H changed.
    let (code, report) = verify("hwv", &["--h-beta", "-1/3,-1/3,2/3,1/11"]);
    if code != Some(1) {
        return Err(format!("wrong H coefficients: exit {code:?}"));
    }
    let cs = checks(&report);
    if find(&cs, "H fixed by u12, u23")?["status"] != "fail" {
        return Err("wrong H coefficients still give a highest weight vector".into());
    }
    Ok(())
}

type Criterion = fn() -> Result<(), String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("generators well-formed", generators_well_formed),
        ("correction coefficients of H and Q", correction_coefficients),
        ("highest weight and SL3 certificates", highest_weight_certificates),
        ("special triples", special_triples),
        ("derivation of S~, T~", derivation_structure),
        ("main relation", main_relation),
        ("Q^2 - H^3 - 27 H S~ + 27/4 T~ = 0", theorem_form),
        ("trace identities", trace_identities),
        ("relation among the trace generators", pair_relation),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2} PASS {name} ({secs:.1}s)", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1}s): {why}", n + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
