//! Subcommand implementations. Each returns its rendered output and exit code.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use numrad_core::ab_normal::{ab_certify, lower_sab, lower_th5, lower_th6};
use numrad_core::alpha_norm::{alpha_norm_estimate, DEFAULT_RESTARTS};
use numrad_core::bounds::bound_report;
use numrad_core::linalg::DEFAULT_RANK_TOL;
use numrad_core::radius::numerical_radius;
use numrad_core::ComplexMatrix;

use crate::ensembles::Ensemble;
use crate::error::{Result, EXIT_OK, EXIT_VIOLATION};
use crate::fuzz::{fuzz_with, standard_properties, FuzzConfig, Property, DEFAULT_TOL};
use crate::io::parse_matrix;
use crate::reference_cases::{reference_rows, render_rows};
use crate::render::{
    render_ab_normal, render_alpha_norm, render_fuzz, render_radius, render_report, ABLowerBounds,
    Format,
};

/// Slack allowed before a report entry counts as violating the bracket.
pub const REPORT_SLACK: f64 = 1e-7;

#[derive(Debug, Parser)]
#[command(name = "numrad", version, about = "Numerical radius bounds, certificates and fuzzing")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every catalog bound next to a certified bracket of w(T).
    Report {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Certified bracket of the numerical radius.
    Radius {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Multistart estimate of the α-norm with a certified upper bound.
    AlphaNorm {
        file: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// (α,β)-normality certificate and the bounds that depend on it.
    Abnormal {
        file: PathBuf,
        /// Relative rank tolerance for the numerical kernels.
        #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
        tol: f64,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Seeded property fuzzing.
    Fuzz {
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        dims: Vec<usize>,
        /// Trials per (ensemble, dimension) cell.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, value_delimiter = ',', default_value = "ginibre")]
        ensemble: Vec<Ensemble>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Reproduce the worked examples against their closed forms.
    PaperExamples {
        #[arg(long, default_value = "table")]
        format: Format,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            exit_code: EXIT_OK,
        }
    }
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let source = std::fs::read_to_string(path)?;
    let m = parse_matrix(&source)?;
    m.ensure_square()?;
    Ok(m)
}

pub fn run_fuzz(config: &FuzzConfig, properties: &[Box<dyn Property>], format: Format) -> Result<Outcome> {
    let run = fuzz_with(config, properties)?;
    Ok(Outcome {
        output: render_fuzz(&run, format)?,
        exit_code: if run.violation_count() == 0 { EXIT_OK } else { EXIT_VIOLATION },
    })
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Report { file, tol, format } => {
            let r = bound_report(&read_matrix(&file)?, tol)?;
            let exit_code = if r.violations(REPORT_SLACK).is_empty() { EXIT_OK } else { EXIT_VIOLATION };
            Ok(Outcome {
                output: render_report(&r, format)?,
                exit_code,
            })
        }
        Command::Radius { file, tol, format } => {
            let b = numerical_radius(&read_matrix(&file)?, tol)?;
            Ok(Outcome::ok(render_radius(&b, format)?))
        }
        Command::AlphaNorm {
            file,
            alpha,
            restarts,
            seed,
            format,
        } => {
            if restarts == 0 {
                return Err(crate::CliError::Usage("restarts must be positive".into()));
            }
            let e = alpha_norm_estimate(&read_matrix(&file)?, alpha, restarts, seed)?;
            Ok(Outcome::ok(render_alpha_norm(&e, format)?))
        }
        Command::Abnormal { file, tol, format } => {
            let t = read_matrix(&file)?;
            let c = ab_certify(&t, tol)?;
            let lower = if c.is_ab_normal {
                Some(ABLowerBounds {
                    th5: lower_th5(&t, &c)?,
                    th6: lower_th6(&t, &c)?,
                    sab: lower_sab(&t, &c)?,
                })
            } else {
                None
            };
            Ok(Outcome::ok(render_ab_normal(&c, lower.as_ref(), format)?))
        }
        Command::Fuzz {
            dims,
            trials,
            ensemble,
            seed,
            tol,
            format,
        } => {
            let config = FuzzConfig {
                dims,
                trials,
                ensembles: ensemble,
                seed,
                tol,
            };
            run_fuzz(&config, &standard_properties(), format)
        }
        Command::PaperExamples { format } => {
            let rows = reference_rows()?;
            let exit_code = if rows.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_VIOLATION };
            Ok(Outcome {
                output: render_rows(&rows, format),
                exit_code,
            })
        }
    }
}
