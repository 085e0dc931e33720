//! Output formats for the subcommands.

use std::fmt::Write as _;
use std::str::FromStr;

use numrad_core::ab_normal::ABNormalCertificate;
use numrad_core::alpha_norm::AlphaNormEstimate;
use numrad_core::bounds::{BoundReport, BoundValue};
use numrad_core::radius::RadiusBracket;
use numrad_core::C64;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::fuzz::FuzzRun;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(CliError::Usage(format!("unknown format {s:?}"))),
        }
    }
}

pub const CSV_COLUMNS: [&str; 6] = [
    "bound_id",
    "kind",
    "value_on_w_scale",
    "alpha_at",
    "r_at",
    "slack_vs_w_lower",
];

#[derive(Serialize)]
struct EntryRow<'a> {
    bound_id: &'a str,
    kind: &'a str,
    value: f64,
    value_on_w_scale: f64,
    alpha_at: Option<f64>,
    r_at: Option<f64>,
    slack_vs_w_lower: f64,
}

impl<'a> EntryRow<'a> {
    fn new(r: &BoundReport, e: &'a BoundValue) -> Self {
        let v = e.on_radius_scale();
        Self {
            bound_id: e.id.as_str(),
            kind: e.kind.as_str(),
            value: e.value,
            value_on_w_scale: v,
            alpha_at: e.alpha_at,
            r_at: e.r_at,
            slack_vs_w_lower: v - r.w_bracket.lower,
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    w_lower: f64,
    w_upper: f64,
    norm: f64,
    tightest_upper: &'a str,
    tightest_lower: &'a str,
    entries: Vec<EntryRow<'a>>,
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(String::new, |v| v.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

pub fn render_report(r: &BoundReport, format: Format) -> Result<String> {
    let rows: Vec<EntryRow> = r.entries.iter().map(|e| EntryRow::new(r, e)).collect();
    Ok(match format {
        Format::Json => to_json(&ReportJson {
            w_lower: r.w_bracket.lower,
            w_upper: r.w_bracket.upper,
            norm: r.norm,
            tightest_upper: r.tightest_upper.as_str(),
            tightest_lower: r.tightest_lower.as_str(),
            entries: rows,
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS).map_err(csv_err)?;
            for row in &rows {
                w.write_record([
                    row.bound_id.to_string(),
                    row.kind.to_string(),
                    row.value_on_w_scale.to_string(),
                    opt(row.alpha_at),
                    opt(row.r_at),
                    row.slack_vs_w_lower.to_string(),
                ])
                .map_err(csv_err)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?)
                .expect("csv output is utf-8")
        }
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "w(T) in [{:.12}, {:.12}]   ‖T‖ = {:.12}", r.w_bracket.lower, r.w_bracket.upper, r.norm);
            let _ = writeln!(
                s,
                "{:<16} {:<12} {:>16} {:>10} {:>6} {:>14}",
                "bound", "kind", "on w scale", "alpha", "r", "slack"
            );
            for row in &rows {
                let fmt_opt = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"));
                let _ = writeln!(
                    s,
                    "{:<16} {:<12} {:>16.12} {:>10} {:>6} {:>14.3e}",
                    row.bound_id,
                    row.kind,
                    row.value_on_w_scale,
                    fmt_opt(row.alpha_at),
                    fmt_opt(row.r_at),
                    row.slack_vs_w_lower
                );
            }
            let _ = writeln!(s, "tightest upper: {}", r.tightest_upper);
            let _ = writeln!(s, "tightest lower: {}", r.tightest_lower);
            s
        }
    })
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

fn pairs(v: &[C64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn vector_text(v: &[C64]) -> String {
    v.iter()
        .map(|z| format!("({:.9}, {:.9})", z.re, z.im))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct RadiusJson {
    lower: f64,
    upper: f64,
    width: f64,
    argmax_angle: f64,
    evaluations: usize,
    witness: Vec<[f64; 2]>,
}

pub fn render_radius(b: &RadiusBracket, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(&RadiusJson {
            lower: b.lower,
            upper: b.upper,
            width: b.width(),
            argmax_angle: b.argmax_angle,
            evaluations: b.evaluations,
            witness: pairs(&b.witness),
        }),
        Format::Table => format!(
            "lower        {:.15}\nupper        {:.15}\nwidth        {:.3e}\nargmax angle {:.12}\nevaluations  {}\nwitness      {}\n",
            b.lower,
            b.upper,
            b.width(),
            b.argmax_angle,
            b.evaluations,
            vector_text(&b.witness)
        ),
        Format::Csv => return Err(CliError::Usage("csv is only available for report".into())),
    })
}

#[derive(Serialize)]
struct AlphaJson {
    alpha: f64,
    best_value: f64,
    upper_cert: f64,
    best_vector: Vec<[f64; 2]>,
}

pub fn render_alpha_norm(e: &AlphaNormEstimate, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(&AlphaJson {
            alpha: e.alpha,
            best_value: e.best_value,
            upper_cert: e.upper_cert,
            best_vector: pairs(&e.best_vector),
        }),
        Format::Table => format!(
            "alpha        {}\n‖T‖_alpha in [{:.12}, {:.12}]\nbest vector  {}\n",
            e.alpha,
            e.best_value,
            e.upper_cert,
            vector_text(&e.best_vector)
        ),
        Format::Csv => return Err(CliError::Usage("csv is only available for report".into())),
    })
}

/// `(α,β)` lower bounds, present only for certified matrices.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ABLowerBounds {
    pub th5: f64,
    pub th6: f64,
    pub sab: f64,
}

#[derive(Serialize)]
struct ABJson<'a> {
    is_ab_normal: bool,
    kernels_equal: bool,
    alpha_best: f64,
    /// `null` when the kernels differ (no finite β).
    beta_best: Option<f64>,
    raw_min_ratio: f64,
    raw_max_ratio: f64,
    rank: usize,
    kernel_dim: usize,
    adjoint_kernel_dim: usize,
    kernel_angle_sine: f64,
    witness_min: Vec<[f64; 2]>,
    witness_max: Vec<[f64; 2]>,
    lower_bounds: Option<&'a ABLowerBounds>,
}

pub fn render_ab_normal(
    c: &ABNormalCertificate,
    lower: Option<&ABLowerBounds>,
    format: Format,
) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(&ABJson {
            is_ab_normal: c.is_ab_normal,
            kernels_equal: c.kernels_equal,
            alpha_best: c.alpha_best,
            beta_best: c.beta_best.is_finite().then_some(c.beta_best),
            raw_min_ratio: c.raw_min_ratio,
            raw_max_ratio: c.raw_max_ratio,
            rank: c.rank,
            kernel_dim: c.kernel.kernel_dim,
            adjoint_kernel_dim: c.kernel.adjoint_kernel_dim,
            kernel_angle_sine: c.kernel.max_angle_sine,
            witness_min: pairs(&c.witness_min),
            witness_max: pairs(&c.witness_max),
            lower_bounds: lower,
        }),
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "(alpha,beta)-normal  {}", c.is_ab_normal);
            let _ = writeln!(
                s,
                "kernels             dim ker T = {}, dim ker T* = {}, angle sine {:.3e}",
                c.kernel.kernel_dim, c.kernel.adjoint_kernel_dim, c.kernel.max_angle_sine
            );
            let _ = writeln!(s, "alpha_best          {:.15}", c.alpha_best);
            let _ = writeln!(s, "beta_best           {:.15}", c.beta_best);
            let _ = writeln!(
                s,
                "raw ratios          [{:.15}, {:.15}] on rank {}",
                c.raw_min_ratio, c.raw_max_ratio, c.rank
            );
            match lower {
                Some(l) => {
                    let _ = writeln!(s, "lower th5           {:.15}", l.th5);
                    let _ = writeln!(s, "lower th6           {:.15}", l.th6);
                    let _ = writeln!(s, "lower sab           {:.15}", l.sab);
                }
                None => {
                    let _ = writeln!(s, "lower bounds        not applicable (ker T ≠ ker T*)");
                }
            }
            s
        }
        Format::Csv => return Err(CliError::Usage("csv is only available for report".into())),
    })
}

pub fn render_fuzz(run: &FuzzRun, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(run),
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "seed {}  tol {:e}  properties: {}", run.seed, run.tol, run.properties.join(", "));
            let _ = writeln!(
                s,
                "{:<16} {:>4} {:>7} {:>11} {:>9}  open question (w ≤ min‖α|T|+(1−α)|T*|‖)",
                "ensemble", "dim", "trials", "violations", "seconds"
            );
            for c in &run.cells {
                let _ = writeln!(
                    s,
                    "{:<16} {:>4} {:>7} {:>11} {:>9.2}  {} counterexamples / {}, max excess {:.3e}",
                    c.ensemble,
                    c.dimension,
                    c.trials,
                    c.violations.len(),
                    c.elapsed,
                    c.open_question.counterexamples,
                    c.open_question.checked,
                    c.open_question.max_excess
                );
            }
            for c in &run.cells {
                for v in &c.violations {
                    let obs: Vec<String> = v.observed.iter().map(|(k, x)| format!("{k}={x:.6e}")).collect();
                    let _ = writeln!(
                        s,
                        "VIOLATION {} dim {} trial {}: {}/{} {}",
                        c.ensemble,
                        c.dimension,
                        v.trial,
                        v.property,
                        v.check,
                        obs.join(" ")
                    );
                }
            }
            let _ = writeln!(
                s,
                "{} trials, {} violations",
                run.total_trials(),
                run.violation_count()
            );
            s
        }
        Format::Csv => return Err(CliError::Usage("csv is only available for report".into())),
    })
}
