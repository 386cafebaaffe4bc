//! Parallel modular checking of identity tasks.
//!
//! Each trial's point depends only on `(seed, prime, trial)`, so the set of
//! outcomes is the same for any worker count; failures are sorted before
//! reporting to keep the output order-independent.

use std::time::Instant;

use anyhow::{anyhow, Result};
use rayon::prelude::*;

use semiinv_core::identity::{IdentityTask, TrialOutcome};
use semiinv_core::poly::PrimeField;

use crate::report::{Check, CheckMode, Counterexample, ModularSummary, Status};

/// Runs every `(prime, trial)` pair and folds the outcomes into a check.
pub fn run_task(suite: &str, name: &str, task: &IdentityTask, primes: &[u64], trials: u64, seed: u64) -> Result<Check> {
    let start = Instant::now();
    let mut failures: Vec<TrialOutcome> = Vec::new();
    for &p in primes {
        let field = PrimeField::new(p).map_err(|e| anyhow!("prime {p}: {e}"))?;
        let prepared = task.prepare(&field).map_err(|e| anyhow!("{name} modulo {p}: {e}"))?;
        let outcomes: Vec<TrialOutcome> = (0..trials)
            .into_par_iter()
            .map(|t| prepared.trial(seed, t))
            .collect::<Result<_, _>>()
            .map_err(|e| anyhow!("{name} modulo {p}: {e}"))?;
        failures.extend(outcomes.into_iter().filter(|o| o.counterexample.is_some()));
    }
    failures.sort_by_key(|o| (o.prime, o.trial));
    let degree = task.degree();
    let bounds: Vec<f64> = primes
        .iter()
        .map(|&p| if degree == 0 { f64::NEG_INFINITY } else { trials as f64 * (degree as f64 / p as f64).log10() })
        .map(|b| (b * 1000.0).round() / 1000.0)
        .collect();
    let variables: Vec<String> = task.base_vars().map(|v| v.names().to_vec()).unwrap_or_default();
    let counterexample = failures.first().map(|o| Counterexample {
        prime: o.prime,
        trial: o.trial,
        variables: variables.clone(),
        point: o.counterexample.clone().unwrap_or_default(),
        value: o.value,
    });
    let passed = failures.is_empty();
    let worst = bounds.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let detail = if passed && worst >= 0.0 {
        format!(
            "{} points x {} primes vanish; degree <= {degree} is not below every prime, so this corroborates but bounds nothing",
            trials,
            primes.len()
        )
    } else if passed {
        format!(
            "{} points x {} primes vanish; degree <= {degree}, miss probability <= 10^{worst} per prime",
            trials,
            primes.len()
        )
    } else {
        format!("{} of {} evaluations non-zero", failures.len(), trials * primes.len() as u64)
    };
    Ok(Check {
        suite: suite.to_string(),
        name: name.to_string(),
        status: if passed { Status::Pass } else { Status::Fail },
        mode: CheckMode::Modular,
        detail,
        terms: None,
        modular: Some(ModularSummary {
            degree,
            primes: primes.to_vec(),
            trials_per_prime: trials,
            seed,
            log10_failure_bound: bounds,
            failures: failures.len() as u64,
            counterexample,
        }),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
