//! Validated run configuration for `verify`.

use std::path::PathBuf;

use anyhow::{bail, Result};
use num_rational::BigRational;

use semiinv_core::poly::PrimeField;
use semiinv_core::relations::DEFAULT_PRIMES;

use crate::report::ConfigEcho;

/// Default term budget for exact expansions.
pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Exact,
    Modular,
}

/// Everything a verification suite needs to know.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub mode: Mode,
    pub trials: u64,
    pub primes: Vec<u64>,
    /// True when the primes came from `--primes` rather than the defaults.
    pub explicit_primes: bool,
    pub seed: u64,
    pub jobs: usize,
    pub budget: usize,
    /// Replacement for the stored relation `A` (text format).
    pub relation_file: Option<PathBuf>,
    /// Replacement for the stored relation among the traces.
    pub pair_relation_file: Option<PathBuf>,
    /// Replacement for the four correction coefficients of `H`.
    pub h_beta: Option<Vec<BigRational>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::Modular,
            trials: 100,
            primes: DEFAULT_PRIMES.to_vec(),
            explicit_primes: false,
            seed: 0,
            jobs: 0,
            budget: DEFAULT_BUDGET,
            relation_file: None,
            pair_relation_file: None,
            h_beta: None,
        }
    }
}

impl RunConfig {
    /// Checks trials and primes; 2 and 3 are refused unless `allow_small_char`.
    pub fn validate(&self, allow_small_char: bool) -> Result<()> {
        if self.trials == 0 {
            bail!("--trials must be at least 1");
        }
        if self.primes.is_empty() {
            bail!("--primes must name at least one prime");
        }
        for &p in &self.primes {
            if p == 2 || p == 3 {
                if !allow_small_char {
                    bail!("prime {p} is excluded by default; pass --allow-small-char to use it");
                }
                if p == 2 {
                    bail!("characteristic 2 is not supported by the modular evaluator");
                }
                continue;
            }
            if PrimeField::new(p).is_err() {
                bail!("{p} is not an odd prime below 2^31");
            }
        }
        if let Some(beta) = &self.h_beta {
            if beta.len() != 4 {
                bail!("--h-beta takes exactly four coefficients, got {}", beta.len());
            }
        }
        Ok(())
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            mode: match self.mode {
                Mode::Exact => "exact".into(),
                Mode::Modular => "modular".into(),
            },
            trials: self.trials,
            primes: self.primes.clone(),
            seed: self.seed,
            budget: self.budget,
            jobs: self.jobs,
        }
    }
}

/// Parses `1/3,-2/3,...` into rationals.
pub fn parse_rationals(text: &str) -> Result<Vec<BigRational>> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<BigRational>().map_err(|_| anyhow::anyhow!("`{s}` is not a rational number"))
        })
        .collect()
}

/// Parses `p1,p2,...`.
pub fn parse_primes(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<u64>().map_err(|_| anyhow::anyhow!("`{s}` is not an unsigned integer"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut c = RunConfig::default();
        assert!(c.validate(false).is_ok());
        c.primes = vec![3];
        assert!(c.validate(false).is_err());
        assert!(c.validate(true).is_ok());
        c.primes = vec![9];
        assert!(c.validate(true).is_err());
        c.primes = vec![5];
        c.trials = 0;
        assert!(c.validate(false).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_primes("5, 7").unwrap(), vec![5, 7]);
        assert!(parse_primes("5,x").is_err());
        let r = parse_rationals("-1/3,2/3,1").unwrap();
        assert_eq!(r[0], BigRational::new((-1).into(), 3.into()));
        assert!(parse_rationals("1/0x").is_err());
    }
}
