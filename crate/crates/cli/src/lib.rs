//! Command-line front end: `coulomb <subcommand> [flags]`.
//!
//! Exit codes: 0 success, 2 invalid input, 3 numerical failure. Errors are
//! reported as one JSON object on stderr.

mod commands;
mod input;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coulomb_core::Error as CoreError;
use serde_json::json;

pub use commands::Rendered;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("{what}: {source}")]
    Io { what: String, source: std::io::Error },
    #[error("CSV output: {0}")]
    Csv(#[from] csv::Error),
    /// Every check ran, some failed.
    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_validation() => 2,
            _ => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Csv(_) => "csv",
            CliError::ChecksFailed { .. } => "checks_failed",
        }
    }

    pub fn to_json(&self) -> String {
        let v = json!({ "schema": output::SCHEMA, "error": { "kind": self.kind(), "message": self.to_string() } });
        serde_json::to_string(&v).expect("error JSON serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub hbar: f64,
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub mass: f64,
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub kappa: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Root tolerance in tau for `spectrum`; check tolerance override for `verify`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,
}

/// One way of naming an extension; at most one of the first three may be given.
#[derive(Debug, Clone, Default, Args)]
pub struct ExtensionArgs {
    /// dirichlet, neumann-like, periodic or antiperiodic.
    #[arg(long, global = true)]
    pub named: Option<String>,
    /// JSON 2x2 matrix; entries are numbers or [re, im].
    #[arg(long, global = true)]
    pub unitary: Option<String>,
    /// theta,a_re,a_im,b_re,b_im for e^{i theta}((a, -conj b),(b, conj a)).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub uparams: Option<String>,
    /// Three-dimensional s-wave parameter: a real number or `inf`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Two-dimensional extension angle.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[arg(long, global = true, default_value_t = 1)]
    pub dim: u8,
}

#[derive(Debug, Parser)]
#[command(
    name = "coulomb",
    version,
    about = "Self-adjoint extensions of the one-dimensional Coulomb Hamiltonian"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(flatten)]
    pub ext: ExtensionArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialArg {
    Linear,
    Logarithmic,
    Coulomb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    Line,
    LineOriginRemoved,
    Plane,
    PlaneOriginRemoved,
    Space,
    SpaceOriginRemoved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Omega,
    Tau,
    Gamma,
    Digamma,
    WhittakerM,
    WhittakerW,
    KummerM,
    AiryAi,
    AiryAiPrime,
    AiryZero,
    AiryPrimeZero,
    BoundaryData,
    Eigencondition,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound states: the line for any extension, space for Dirichlet.
    Spectrum {
        #[arg(long = "tau-max")]
        tau_max: Option<f64>,
        #[arg(long = "n-max")]
        n_max: Option<u32>,
    },
    /// Boundary condition in Cayley form.
    Classify,
    /// Whether probability can flow through the origin.
    Permeability,
    /// Dirichlet resolvent kernel on a grid of (x, y).
    Greens {
        #[arg(long, allow_negative_numbers = true)]
        energy: f64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        x: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        y: Vec<f64>,
    },
    /// A single function value.
    Eval {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long, allow_negative_numbers = true)]
        energy: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        tau: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        mu: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        z: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        b: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Cross-check closed forms against the independent numerical oracles.
    Verify,
    /// Levels of the linear potential κ|x| and their asymptotic law.
    LaplaceSpectrum {
        #[arg(long = "n-max", default_value_t = 8)]
        n_max: usize,
    },
    /// Self-adjointness and deficiency indices of the Laplacian fundamental-solution potentials.
    Report {
        #[arg(long, value_enum)]
        potential: Option<PotentialArg>,
        #[arg(long, value_enum)]
        region: Option<RegionArg>,
        /// Also evaluate the Coulomb deficiency indices numerically.
        #[arg(long)]
        computed: bool,
    },
}

/// Rendered output plus a failure that still comes with a full report.
#[derive(Debug)]
pub struct Outcome {
    pub body: String,
    pub failure: Option<CliError>,
}

/// Runs a parsed command and renders its result in the requested format.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let rendered = commands::dispatch(cli)?;
    let body = match cli.global.format {
        Format::Json => output::render_json(rendered.json),
        Format::Csv => output::render_csv(&rendered.table)?,
    };
    let failure = rendered
        .failed_checks
        .map(|(failed, total)| CliError::ChecksFailed { failed, total });
    Ok(Outcome { body, failure })
}

/// Full process behaviour without exiting: parse, run, write, return the exit code.
pub fn main_with_args<I, A>(args: I) -> u8
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (body, code) = match run(&cli) {
        Ok(Outcome { body, failure: None }) => (Some(body), 0),
        Ok(Outcome { body, failure: Some(e) }) => {
            eprintln!("{}", e.to_json());
            (Some(body), e.exit_code())
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            (None, e.exit_code())
        }
    };
    if let Some(body) = body {
        let written = match &cli.global.out {
            Some(path) => std::fs::write(path, body.as_bytes()).map_err(|source| CliError::Io {
                what: format!("writing {}", path.display()),
                source,
            }),
            None => std::io::stdout()
                .write_all(body.as_bytes())
                .map_err(|source| CliError::Io {
                    what: "writing stdout".into(),
                    source,
                }),
        };
        if let Err(e) = written {
            eprintln!("{}", e.to_json());
            return e.exit_code();
        }
    }
    code
}
