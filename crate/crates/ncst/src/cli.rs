use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use ncst_core::well::BoundaryMode;
use ncst_core::{AlgebraParams, Epsilon};

use crate::commands::{self, linear_points, Width};
use crate::report::{Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ncst",
    version,
    about = "Deformed-Heisenberg algebra experiments and reports"
)]
pub struct Cli {
    /// Report format
    #[arg(long, value_enum, default_value_t = OutFormat::Csv, global = true)]
    pub format: OutFormat,

    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH", global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "snake_case")]
pub enum Boundary {
    OddImage,
    HardZero,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(required = true, multiple = false)]
pub struct WidthArgs {
    /// Well width
    #[arg(long)]
    pub delta: Option<f64>,

    /// Well width in lattice sites, delta = k * ell
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Particle-in-a-box levels: closed form, plus lattice diagonalization for epsilon = -1
    Spectra {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        epsilon: i32,
        #[arg(long, default_value_t = 1.0)]
        ell: f64,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[command(flatten)]
        width: WidthArgs,
        /// Number of levels (default: all lattice levels, or 5)
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long, value_enum, default_value_t = Boundary::OddImage)]
        boundary: Boundary,
    },
    /// Phase-space cell per added fermion
    Counting {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        epsilon: i32,
        #[arg(long, default_value_t = 1.0)]
        ell: f64,
        #[command(flatten)]
        width: WidthArgs,
        #[arg(long, default_value_t = 5)]
        levels: usize,
    },
    /// Characteristic function and moments of the arcsine momentum law
    Momstats {
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, default_value_t = 30.0)]
        s_max: f64,
        #[arg(long, default_value_t = 31)]
        steps: usize,
    },
    /// Gaussian uncertainty products on the hyperbola, swept over alpha
    Uncertainty {
        #[arg(long, default_value_t = 0.01)]
        alpha_start: f64,
        #[arg(long, default_value_t = 6.0)]
        alpha_stop: f64,
        #[arg(long, default_value_t = 25)]
        steps: usize,
        #[arg(long, default_value_t = 1.0)]
        ell: f64,
    },
    /// GUP lower bound on dx over a logarithmic dp sweep
    Gup {
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 0.01)]
        dp_min: f64,
        #[arg(long, default_value_t = 100.0)]
        dp_max: f64,
        #[arg(long, default_value_t = 41)]
        steps: usize,
    },
    /// Product of inverse densities of states for epsilon = -1
    Dos {
        #[arg(long, default_value_t = 0.1)]
        ell: f64,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
    },
    /// Gaussian-weighted momentum integrals under three phase-space measures
    Measures {
        #[arg(long, default_value_t = 1.0)]
        ell: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = 1.0)]
        tau: f64,
    },
    /// Run every invariant suite
    Verify,
}

#[derive(Debug)]
pub enum CliError {
    Args(String),
    Core(ncst_core::Error),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Args(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

impl From<ncst_core::Error> for CliError {
    fn from(e: ncst_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn params(epsilon: i32, ell: f64, mass: f64) -> Result<AlgebraParams, CliError> {
    let eps = Epsilon::from_sign(epsilon)?;
    Ok(AlgebraParams::new(ell, eps, 1.0, mass)?)
}

fn width(w: WidthArgs) -> Width {
    match (w.delta, w.k) {
        (Some(d), _) => Width::Delta(d),
        (None, Some(k)) => Width::Sites(k),
        (None, None) => unreachable!("clap requires one of --delta, --k"),
    }
}

fn check_sweep(start: f64, stop: f64, steps: usize) -> Result<(), CliError> {
    if steps == 0 {
        return Err(CliError::Args("--steps must be >= 1".into()));
    }
    if start.is_nan() || stop.is_nan() || start > stop {
        return Err(CliError::Args(format!(
            "sweep start {start} must not exceed stop {stop}"
        )));
    }
    Ok(())
}

/// Builds the report for `command`; the flag says whether every check passed.
pub fn build(command: &Command) -> Result<(Report, bool), CliError> {
    let report = match *command {
        Command::Spectra {
            epsilon,
            ell,
            mass,
            width: w,
            levels,
            boundary,
        } => {
            let mode = match boundary {
                Boundary::OddImage => BoundaryMode::OddImage,
                Boundary::HardZero => BoundaryMode::HardZero,
            };
            commands::spectra(params(epsilon, ell, mass)?, width(w), levels, mode)?
        }
        Command::Counting {
            epsilon,
            ell,
            width: w,
            levels,
        } => commands::counting(params(epsilon, ell, 1.0)?, width(w), levels)?,
        Command::Momstats { r, s_max, steps } => {
            check_sweep(0.0, s_max, steps)?;
            commands::momstats(r, s_max, steps)?
        }
        Command::Uncertainty {
            alpha_start,
            alpha_stop,
            steps,
            ell,
        } => {
            check_sweep(alpha_start, alpha_stop, steps)?;
            commands::uncertainty(ell, &linear_points(alpha_start, alpha_stop, steps))?
        }
        Command::Gup {
            c,
            dp_min,
            dp_max,
            steps,
        } => {
            check_sweep(dp_min, dp_max, steps)?;
            if dp_min.is_nan() || dp_min <= 0.0 {
                return Err(CliError::Args("--dp-min must be > 0".into()));
            }
            commands::gup(c, dp_min, dp_max, steps)?
        }
        Command::Dos { ell, r } => commands::dos(ell, r)?,
        Command::Measures { ell, beta, tau } => commands::measures(ell, beta, tau)?,
        Command::Verify => {
            let (report, checks) = commands::verify();
            for c in &checks {
                eprintln!("{} suite {} {}: {:e}", c.status(), c.suite, c.name, c.value);
            }
            let fails = checks.iter().filter(|c| !c.passed).count();
            eprintln!(
                "{} checks, {} PASS, {} FAIL",
                checks.len(),
                checks.len() - fails,
                fails
            );
            return Ok((report, fails == 0));
        }
    };
    Ok((report, true))
}

fn emit(report: &Report, format: OutFormat, out: Option<&PathBuf>) -> Result<(), CliError> {
    let fmt = match format {
        OutFormat::Csv => Format::Csv,
        OutFormat::Json => Format::Json,
    };
    let bytes = report.render(fmt)?;
    match out {
        Some(path) => fs::write(path, bytes)?,
        None => io::stdout().lock().write_all(&bytes)?,
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let result = build(&cli.command).and_then(|(report, ok)| {
        emit(&report, cli.format, cli.out.as_ref())?;
        Ok(ok)
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFY_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
