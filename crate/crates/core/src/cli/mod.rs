//! Command-line front end behind the `dipole-spectrum` binary.
//!
//! Every command writes CSV (header row, LF endings) to `--out` or stdout.
//! Parameters resolve as command-line flag, then `--config` file, then the
//! built-in defaults (`m = alpha = 1`, `lambda^2 = 12.5`, `omega = 1e-3`,
//! `R = 0.1`, `ell = 0`, `p_z = 0`).
//!
//! Exit codes: 0 success, 1 usage error, 2 regime violation (no bound
//! states), 3 numerical failure.

mod commands;
mod config;

pub use commands::{
    eval_special, oracle_levels, potential_csv, spectrum_csv, sweep_cutoff_csv, validate,
    wavefunction_csv, EvalKind, RouteSelection, RouteValue, ValidationReport, ValidationRow, ValidationSummary,
};
pub use config::{parse_config_file, ConfigValues};

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::model::PhysicalParams;
use crate::oracle::{GridScheme, RadialGridSpec};
use crate::spectrum::Thresholds;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REGIME: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Which command a [`RunConfig`] drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Spectrum,
    Validate,
    Wavefunction,
    SweepCutoff,
    EvalSpecial,
    Potential,
}

/// Fully resolved settings shared by the commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: PhysicalParams,
    pub command: CommandKind,
    pub n_max: u32,
    pub output_path: Option<PathBuf>,
    pub grid_overrides: Option<RadialGridSpec>,
    pub thresholds: Thresholds,
}

impl RunConfig {
    /// Defaults for `command` with the regime parameter set.
    pub fn new(params: PhysicalParams, command: CommandKind) -> Self {
        RunConfig {
            params,
            command,
            n_max: 3,
            output_path: None,
            grid_overrides: None,
            thresholds: Thresholds::default(),
        }
    }

    pub fn validate(&self) -> crate::Result<()> {
        self.params.validate()?;
        if self.n_max < 1 {
            return Err(Error::Domain("nmax must be >= 1".into()));
        }
        let t = &self.thresholds;
        if !(t.x0_admissible > 0.0 && t.beta_min > 0.0 && t.compare_tol > 0.0) {
            return Err(Error::Domain("thresholds must be positive".into()));
        }
        if let Some(g) = &self.grid_overrides {
            g.validate()?;
        }
        Ok(())
    }
}

/// Parameter set used when neither a flag nor the config file sets a value.
pub fn default_params() -> PhysicalParams {
    PhysicalParams {
        mass: 1.0,
        alpha: 1.0,
        lambda: 12.5f64.sqrt(),
        omega: 1e-3,
        radius: 0.1,
        ell: 0,
        pz: 0.0,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "dipole-spectrum",
    version,
    about = "Bound states of an induced dipole in an inverse-square plus harmonic potential with a hard-wall cut-off",
    after_help = "Precedence: command-line flag > --config file > built-in default.\n\
                  Config file: UTF-8 lines `key = value`, `#` starts a comment. Keys: mass, alpha, lambda, omega, radius, ell, pz, nmax, x0_admissible, beta_min, compare_tol.\n\
                  Exit codes: 0 success, 1 usage, 2 regime violation, 3 numerical failure."
)]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long, global = true, allow_negative_numbers = true)]
    mass: Option<f64>,
    /// Polarizability.
    #[arg(long, global = true, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Linear charge parameter; the dipole term is `-alpha lambda^2 / r^2`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    lambda: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// Cut-off radius R.
    #[arg(long, global = true, allow_negative_numbers = true)]
    radius: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    ell: Option<i64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pz: Option<f64>,
    #[arg(long, global = true)]
    nmax: Option<u32>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    x0_admissible: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    beta_min: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    compare_tol: Option<f64>,
    /// Oracle grid inner radius (defaults to R).
    #[arg(long, global = true, allow_negative_numbers = true)]
    grid_rmin: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    grid_rmax: Option<f64>,
    #[arg(long, global = true)]
    grid_points: Option<usize>,
    #[arg(long, global = true, value_enum)]
    grid_scheme: Option<SchemeArg>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SchemeArg {
    Uniform,
    Log,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy levels n = 1..nmax by one or all routes.
    Spectrum {
        #[arg(long, value_enum, default_value_t = RouteSelection::Asymptotic)]
        route: RouteSelection,
    },
    /// All three routes side by side with relative gaps and regime flags.
    Validate,
    /// Radial wavefunction of one level, normalized to max |f| = 1.
    Wavefunction {
        #[arg(long, default_value_t = 1)]
        level: u32,
        #[arg(long, value_enum, default_value_t = RouteSelection::Exact)]
        route: RouteSelection,
        /// Outer radius; defaults to three times the classical turning point.
        #[arg(long)]
        r_max: Option<f64>,
        #[arg(long, default_value_t = 400)]
        samples: usize,
    },
    /// Ground level as the cut-off radius shrinks.
    SweepCutoff {
        /// Cut-off radii, positive and strictly descending.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.2, 0.1, 0.05, 0.025])]
        radii: Vec<f64>,
    },
    /// Effective potential on a list of radii.
    Potential {
        #[arg(long, value_delimiter = ',')]
        r: Vec<f64>,
        /// Uniform grid `from,to,count` used when --r is absent.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        grid: Option<Vec<f64>>,
        /// Add a column including `ell^2 / (2 m r^2)`.
        #[arg(long)]
        centrifugal: bool,
    },
    /// Evaluate a special function: prints value and error estimate.
    Eval {
        #[arg(value_enum)]
        kind: EvalKind,
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        args: Vec<f64>,
    },
}

fn command_kind(c: &Command) -> CommandKind {
    match c {
        Command::Spectrum { .. } => CommandKind::Spectrum,
        Command::Validate => CommandKind::Validate,
        Command::Wavefunction { .. } => CommandKind::Wavefunction,
        Command::SweepCutoff { .. } => CommandKind::SweepCutoff,
        Command::Potential { .. } => CommandKind::Potential,
        Command::Eval { .. } => CommandKind::EvalSpecial,
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn resolve(common: &CommonArgs, kind: CommandKind) -> Result<RunConfig, Failure> {
    let file = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            parse_config_file(&text).map_err(Failure::Usage)?
        }
        None => ConfigValues::default(),
    };
    let d = default_params();
    let t = Thresholds::default();
    let params = PhysicalParams {
        mass: common.mass.or(file.mass).unwrap_or(d.mass),
        alpha: common.alpha.or(file.alpha).unwrap_or(d.alpha),
        lambda: common.lambda.or(file.lambda).unwrap_or(d.lambda),
        omega: common.omega.or(file.omega).unwrap_or(d.omega),
        radius: common.radius.or(file.radius).unwrap_or(d.radius),
        ell: common.ell.or(file.ell).unwrap_or(d.ell),
        pz: common.pz.or(file.pz).unwrap_or(d.pz),
    };
    let thresholds = Thresholds {
        x0_admissible: common
            .x0_admissible
            .or(file.x0_admissible)
            .unwrap_or(t.x0_admissible),
        beta_min: common.beta_min.or(file.beta_min).unwrap_or(t.beta_min),
        compare_tol: common.compare_tol.or(file.compare_tol).unwrap_or(t.compare_tol),
    };
    let grid_overrides = if common.grid_rmax.is_some()
        || common.grid_rmin.is_some()
        || common.grid_points.is_some()
        || common.grid_scheme.is_some()
    {
        let base = RadialGridSpec::default_for(&params, 3).ok();
        let r_max = common
            .grid_rmax
            .or(base.map(|g| g.r_max))
            .ok_or_else(|| Failure::Usage("--grid-rmax is required when omega = 0".into()))?;
        Some(RadialGridSpec {
            r_min: common.grid_rmin.unwrap_or(params.radius),
            r_max,
            points: common.grid_points.or(base.map(|g| g.points)).unwrap_or(2000),
            scheme: match common.grid_scheme {
                Some(SchemeArg::Uniform) => GridScheme::Uniform,
                Some(SchemeArg::Log) => GridScheme::LogUniform,
                None => base.map_or(GridScheme::Uniform, |g| g.scheme),
            },
        })
    } else {
        None
    };
    let config = RunConfig {
        params,
        command: kind,
        n_max: common.nmax.or(file.nmax).unwrap_or(3),
        output_path: common.out.clone(),
        grid_overrides,
        thresholds,
    };
    config.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(config)
}

fn emit(config: &RunConfig, text: &str) -> Result<(), Failure> {
    match &config.output_path {
        Some(path) => std::fs::write(path, text).map_err(Failure::Io),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(Failure::Io)
        }
    }
}

fn execute(cli: Cli) -> Result<(), Failure> {
    let kind = command_kind(&cli.command);
    if let Command::Eval { kind, args } = &cli.command {
        let text = eval_special(*kind, args).map_err(|e| match e {
            Error::DimensionMismatch(msg) => Failure::Usage(msg),
            other => Failure::Lib(other),
        })?;
        let config = RunConfig {
            output_path: cli.common.out.clone(),
            ..RunConfig::new(default_params(), CommandKind::EvalSpecial)
        };
        return emit(&config, &text);
    }
    let config = resolve(&cli.common, kind)?;
    let text = match &cli.command {
        Command::Spectrum { route } => spectrum_csv(&config, *route)?,
        Command::Validate => {
            let report = validate(&config)?;
            let s = &report.summary;
            eprintln!(
                "max_rel_gap = {:.6e}, regime_ok = {}{}",
                s.max_rel_gap,
                s.regime_ok,
                if s.violations.is_empty() {
                    String::new()
                } else {
                    format!(" (violated: {})", s.violations.join(", "))
                }
            );
            report.to_csv()
        }
        Command::Wavefunction {
            level,
            route,
            r_max,
            samples,
        } => {
            let (csv, warning) = wavefunction_csv(&config, *level, *route, *r_max, *samples)?;
            if let Some(w) = warning {
                eprintln!("warning: {w}");
            }
            csv
        }
        Command::SweepCutoff { radii } => {
            if radii.is_empty()
                || radii.iter().any(|r| !(*r > 0.0))
                || radii.windows(2).any(|w| !(w[1] < w[0]))
            {
                return Err(Failure::Usage(
                    "--radii must be positive and strictly descending".into(),
                ));
            }
            sweep_cutoff_csv(&config, radii)?
        }
        Command::Potential {
            r,
            grid,
            centrifugal,
        } => {
            let radii = if !r.is_empty() {
                r.clone()
            } else if let Some(g) = grid {
                if g.len() != 3 || !(g[2] >= 2.0) || !(g[1] > g[0]) {
                    return Err(Failure::Usage("--grid expects from,to,count".into()));
                }
                let count = g[2] as usize;
                (0..count)
                    .map(|i| g[0] + (g[1] - g[0]) * i as f64 / (count - 1) as f64)
                    .collect()
            } else {
                return Err(Failure::Usage("potential needs --r or --grid".into()));
            };
            let (csv, warnings) = potential_csv(&config, &radii, *centrifugal);
            for w in warnings {
                eprintln!("warning: {w}");
            }
            csv
        }
        Command::Eval { .. } => unreachable!(),
    };
    emit(&config, &text)
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_NUMERIC
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_regime_violation() {
                EXIT_REGIME
            } else {
                EXIT_NUMERIC
            }
        }
    }
}
