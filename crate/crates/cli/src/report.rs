//! Verdicts and the versioned JSON report.

use serde::Serialize;

/// Version of the JSON report layout; bumped on any incompatible change.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not finish under the configured limits.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Exact,
    Modular,
}

/// A sampled point at which an identity did not vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub prime: u64,
    pub trial: u64,
    pub variables: Vec<String>,
    pub point: Vec<u64>,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModularSummary {
    /// Upper bound on the total degree of the checked polynomial.
    pub degree: u32,
    pub primes: Vec<u64>,
    pub trials_per_prime: u64,
    pub seed: u64,
    /// `log10((degree / p)^trials)` per prime: the chance that a non-zero
    /// polynomial vanishes at every sampled point is at most `10^bound`.
    pub log10_failure_bound: Vec<f64>,
    pub failures: u64,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub status: Status,
    pub mode: CheckMode,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modular: Option<ModularSummary>,
    pub elapsed_ms: u64,
}

impl Check {
    pub fn exact(suite: &str, name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Check {
            suite: suite.to_string(),
            name: name.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            mode: CheckMode::Exact,
            detail: detail.into(),
            terms: None,
            modular: None,
            elapsed_ms: 0,
        }
    }

    pub fn with_terms(mut self, terms: usize) -> Self {
        self.terms = Some(terms);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub mode: String,
    pub trials: u64,
    pub primes: Vec<u64>,
    pub seed: u64,
    pub budget: usize,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub suite: String,
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl Report {
    pub fn new(suite: &str, config: ConfigEcho, checks: Vec<Check>) -> Self {
        let status = overall(&checks);
        Report {
            schema_version: REPORT_SCHEMA_VERSION,
            tool: "semiinv".to_string(),
            suite: suite.to_string(),
            config,
            checks,
            status,
        }
    }

    /// 0 when everything passed, 1 when an identity failed, 2 when some
    /// check could not be decided under the given limits.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "UNDECIDED",
            };
            let mode = match c.mode {
                CheckMode::Exact => "exact",
                CheckMode::Modular => "modular",
            };
            out.push_str(&format!("{tag:<9} {}/{} [{mode}] {}\n", c.suite, c.name, c.detail));
            if let Some(ce) = c.modular.as_ref().and_then(|m| m.counterexample.as_ref()) {
                out.push_str(&format!(
                    "          counterexample mod {} (trial {}): value {} at {}\n",
                    ce.prime,
                    ce.trial,
                    ce.value,
                    ce.variables.iter().zip(&ce.point).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(", ")
                ));
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }
}

/// Fail dominates, then inconclusive.
pub fn overall(checks: &[Check]) -> Status {
    if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if checks.iter().any(|c| c.status == Status::Inconclusive) {
        Status::Inconclusive
    } else {
        Status::Pass
    }
}
