//! Command-line front end: figure sweeps as CSV/TSV, single-point
//! evaluation and the seeded validation run.
//!
//! Exit codes: 0 success, 1 domain or usage error, 2 validation failure,
//! 3 I/O error.

pub mod error;
pub mod eval;
pub mod output;
pub mod sweep;
pub mod validate;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use error::{CliError, CliResult};
pub use eval::{eval_point, EvalFamily, Evaluation};
pub use output::{emit, format_number, Format, Table};
pub use sweep::{run_sweep, Curve, Family, Grid, SweepSpec};
pub use validate::{run_validate, Check, Report};

#[derive(Debug, Parser)]
#[command(
    name = "mixedness",
    version,
    about = "Site mixedness and on-site concurrence of lattice electron states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a closed form over a grid of the swept parameter.
    Sweep(SweepArgs),
    /// Evaluate one point and print `name=value` lines.
    Eval(EvalArgs),
    /// Check the closed forms against exact enumeration on small rings.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Table format; `eval` and `validate` print plain text when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Electron densities, one curve each.
    #[arg(long = "n", value_delimiter = ',', num_args = 1..)]
    pub densities: Vec<f64>,
    /// Cutoff to Fermi energy ratios for the paired families.
    #[arg(long = "omega-ef", value_delimiter = ',', num_args = 1..)]
    pub omega_ef: Vec<f64>,
    /// Ring size for the one-hole family.
    #[arg(long, default_value_t = 10)]
    pub sites: usize,
    #[arg(long, visible_aliases = ["g-min", "delta-min", "l-min"])]
    pub min: Option<f64>,
    #[arg(long, visible_aliases = ["g-max", "delta-max", "l-max"])]
    pub max: Option<f64>,
    #[arg(long, visible_aliases = ["g-steps", "delta-steps", "l-steps"])]
    pub steps: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl SweepArgs {
    pub fn spec(&self) -> CliResult<SweepSpec> {
        let mut spec = SweepSpec::defaults(self.family, self.sites);
        if !self.densities.is_empty() {
            spec.densities = self.densities.clone();
        }
        if !self.omega_ef.is_empty() {
            if !matches!(self.family, Family::BcsEpsilon | Family::BcsConcurrence) {
                return Err(CliError::usage(
                    "--omega-ef applies only to the paired families",
                ));
            }
            spec.omega_ef = self.omega_ef.clone();
        }
        if self.family == Family::Nagaoka && !self.densities.is_empty() {
            return Err(CliError::usage("--n does not apply to the one-hole family"));
        }
        spec.grid.min = self.min.unwrap_or(spec.grid.min);
        spec.grid.max = self.max.unwrap_or(spec.grid.max);
        spec.grid.steps = self.steps.unwrap_or(spec.grid.steps);
        Ok(spec)
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub family: EvalFamily,
    /// Parameters as key=value.
    #[arg(value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Largest ring enumerated.
    #[arg(long = "max-l", default_value_t = 6)]
    pub max_l: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn execute(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Sweep(args) => {
            let table = run_sweep(&args.spec()?)?;
            emit(
                &table.render(args.out.format.unwrap_or(Format::Csv)),
                args.out.output.as_deref(),
            )
        }
        Command::Eval(args) => {
            let value = eval_point(args.family, &args.params)?;
            emit(&value.render(args.out.format), args.out.output.as_deref())
        }
        Command::Validate(args) => {
            let report = run_validate(args.max_l, args.seed)?;
            emit(&report.render(args.out.format), args.out.output.as_deref())?;
            let failed = report.failures();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Validation(failed))
            }
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
