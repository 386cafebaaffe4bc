use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context as _, Result};
use clap::{Parser, Subcommand};

use semiinv::config::{parse_primes, parse_rationals, Mode, RunConfig, DEFAULT_BUDGET};
use semiinv::emit;
use semiinv::format::Format;
use semiinv::report::Report;
use semiinv::suites::{run_suite, Context};

/// Semi-invariants of triples of 3x3 matrices: generators, relations and
/// their verification.
#[derive(Parser)]
#[command(name = "semiinv", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named polynomial (use `emit --list` for the names).
    Emit {
        /// Polynomial to print.
        name: Option<String>,
        /// List the known names instead.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite (`all` runs every suite).
    Verify {
        suite: String,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Derive S~ and T~ from the relation A.
    DeriveSt {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Use this relation instead of the stored one.
        #[arg(long)]
        relation_file: Option<PathBuf>,
    },
    /// Solve the highest-weight conditions for the corrections of H and Q.
    SolveHwv {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(clap::Args)]
struct VerifyOpts {
    #[arg(long, value_enum, default_value = "modular")]
    mode: Mode,
    /// Random points per prime.
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Comma-separated primes (default: five primes just below 2^31).
    #[arg(long)]
    primes: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Term budget for exact expansions.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Permit the prime 3.
    #[arg(long)]
    allow_small_char: bool,
    /// Verify this relation among q, h, f1..f10 instead of the stored one.
    #[arg(long)]
    relation_file: Option<PathBuf>,
    /// Verify this relation among the trace generators instead of the stored one.
    #[arg(long)]
    pair_relation_file: Option<PathBuf>,
    /// Four comma-separated coefficients for the corrections of H.
    #[arg(long, allow_hyphen_values = true)]
    h_beta: Option<String>,
}

impl VerifyOpts {
    fn config(&self) -> Result<RunConfig> {
        let mut c = RunConfig {
            mode: self.mode,
            trials: self.trials,
            seed: self.seed,
            jobs: self.jobs,
            budget: self.budget,
            relation_file: self.relation_file.clone(),
            pair_relation_file: self.pair_relation_file.clone(),
            ..RunConfig::default()
        };
        if let Some(p) = &self.primes {
            c.primes = parse_primes(p)?;
            c.explicit_primes = true;
        }
        if let Some(b) = &self.h_beta {
            c.h_beta = Some(parse_rationals(b)?);
        }
        c.validate(self.allow_small_char)?;
        Ok(c)
    }
}

/// Writes to stdout; a reader that closes the pipe early (`| head`) is not an error.
fn write_stdout(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Emit { name, list, format } => {
            if list {
                let list: String = emit::names().iter().map(|n| format!("{n}\n")).collect();
                write_stdout(&list)?;
                return Ok(0);
            }
            let name = name.context("missing polynomial name (see `emit --list`)")?;
            let ctx = Context::new(RunConfig::default())?;
            write_stdout(&emit::emit(&ctx, &name, format)?)?;
            Ok(0)
        }
        Command::DeriveSt { format, relation_file } => {
            let ctx = Context::new(RunConfig { relation_file, ..RunConfig::default() })?;
            write_stdout(&emit::derive_st(&ctx, format)?)?;
            Ok(0)
        }
        Command::SolveHwv { format } => {
            let ctx = Context::new(RunConfig::default())?;
            write_stdout(&emit::solve_hwv(&ctx, format)?)?;
            Ok(0)
        }
        Command::Verify { suite, opts } => {
            let config = opts.config()?;
            let pool = rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build()?;
            let ctx = Context::new(config)?;
            let checks = pool.install(|| run_suite(&ctx, &suite))?;
            let report = Report::new(&suite, ctx.config.echo(), checks);
            match opts.format {
                Format::Text => write_stdout(&report.to_text())?,
                Format::Json => write_stdout(&format!("{}\n", serde_json::to_string_pretty(&report)?))?,
            }
            Ok(report.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
