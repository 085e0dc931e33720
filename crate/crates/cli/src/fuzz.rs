//! Seeded property fuzzing across ensembles and dimensions.
//!
//! Trial `k` of `(ensemble, dim)` draws from ChaCha stream
//! `ensemble << 56 | dim << 40 | k` of the master seed, so results do not
//! depend on the order in which trials run. Violations are data: they carry
//! the full matrix for replay.

use std::time::Instant;

use numrad_core::ab_normal::{ab_certify, lower_sab, lower_th5, lower_th6};
use numrad_core::alpha_norm::{alpha_norm_estimate_with, DEFAULT_RESTARTS};
use numrad_core::bounds::{BoundContext, BoundReport};
use numrad_core::linalg::{normalized, vec_norm, DEFAULT_RANK_TOL};
use numrad_core::radius::RadiusBracket;
use numrad_core::{ComplexMatrix, C64};
use rand::{Rng, RngCore};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::ScalarCheckContext;
use crate::ensembles::{complex_gaussian, random_matrix, stream_rng, Ensemble};
use crate::error::{CliError, Result};
use crate::io::MatrixFile;

pub const DEFAULT_TOL: f64 = 1e-7;
/// Slack for chains between closed-form quantities.
pub const CHAIN_TOL: f64 = 1e-9;
/// Agreement required at the α-norm endpoints.
pub const ENDPOINT_TOL: f64 = 1e-6;
pub const ALPHA_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
pub const VECTOR_PAIRS: usize = 8;
pub const CERTIFICATE_VECTORS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzConfig {
    pub dims: Vec<usize>,
    /// Trials per (ensemble, dimension) cell.
    pub trials: usize,
    pub ensembles: Vec<Ensemble>,
    pub seed: u64,
    /// Slack allowed for inequalities involving the radius bracket.
    pub tol: f64,
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(CliError::Usage("trials must be at least 1".into()));
        }
        if self.dims.is_empty() || self.dims.contains(&0) {
            return Err(CliError::Usage("dimensions must be positive".into()));
        }
        if self.ensembles.is_empty() {
            return Err(CliError::Usage("at least one ensemble is required".into()));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Usage(format!("tolerance {} must be positive", self.tol)));
        }
        Ok(())
    }

    /// Bracket tolerance for every radius computed during a run.
    pub fn radius_tol(&self) -> f64 {
        (self.tol / 100.0).max(numrad_core::radius::MIN_TOL)
    }
}

/// One fuzzed matrix with the expensive shared quantities precomputed.
pub struct Sample {
    pub ensemble: Ensemble,
    pub dimension: usize,
    pub trial: usize,
    pub matrix: ComplexMatrix,
    pub ctx: BoundContext,
    pub report: BoundReport,
    pub tol: f64,
    seed: u64,
}

impl Sample {
    pub fn new(t: ComplexMatrix, tol: f64, radius_tol: f64, seed: u64) -> Result<Self> {
        let ctx = BoundContext::new(&t, radius_tol)?;
        let report = ctx.report()?;
        Ok(Self {
            ensemble: Ensemble::Ginibre,
            dimension: t.rows(),
            trial: 0,
            matrix: t,
            ctx,
            report,
            tol,
            seed,
        })
    }

    pub fn w(&self) -> &RadiusBracket {
        &self.report.w_bracket
    }

    pub fn norm(&self) -> f64 {
        self.report.norm
    }

    /// Private randomness for one property, independent of property order.
    pub fn rng_for(&self, property: &str) -> ChaCha8Rng {
        // FNV-1a of the property id selects the stream.
        let salt = property
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
        stream_rng(self.seed, salt)
    }
}

/// A failed check: named observed quantities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub check: String,
    pub observed: Vec<(String, f64)>,
}

impl Finding {
    pub fn new(check: impl Into<String>, observed: &[(&str, f64)]) -> Self {
        Self {
            check: check.into(),
            observed: observed.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }
}

pub trait Property: Sync {
    fn id(&self) -> &str;
    fn check(&self, sample: &Sample) -> Result<Vec<Finding>>;
}

fn random_unit<R: Rng>(n: usize, rng: &mut R) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        if let Some(u) = normalized(&v) {
            return u;
        }
    }
}

/// `‖T‖/2 ≤ w(T) ≤ ‖T‖`.
pub struct NormSandwich;

impl Property for NormSandwich {
    fn id(&self) -> &str {
        "eqv1_sandwich"
    }

    fn check(&self, s: &Sample) -> Result<Vec<Finding>> {
        let (w, n, tol) = (s.w(), s.norm(), s.tol);
        let mut out = Vec::new();
        if n / 2.0 - tol > w.upper || w.lower > n + tol {
            out.push(Finding::new(
                "half_norm_le_w_le_norm",
                &[("norm", n), ("w_lower", w.lower), ("w_upper", w.upper)],
            ));
        }
        Ok(out)
    }
}

/// `w(T) ≤ ‖T‖_α ≤ ‖T‖`, with the estimate hitting both endpoints.
pub struct AlphaNormSandwich;

impl Property for AlphaNormSandwich {
    fn id(&self) -> &str {
        "eqv2_sandwich"
    }

    fn check(&self, s: &Sample) -> Result<Vec<Finding>> {
        let (w, n, tol) = (s.w(), s.norm(), s.tol);
        let seed = s.rng_for(self.id()).next_u64();
        let mut out = Vec::new();
        for alpha in ALPHA_GRID {
            let e = alpha_norm_estimate_with(&s.ctx, w, alpha, DEFAULT_RESTARTS, seed)?;
            let obs = [
                ("alpha", alpha),
                ("best_value", e.best_value),
                ("upper_cert", e.upper_cert),
                ("w_lower", w.lower),
                ("w_upper", w.upper),
                ("norm", n),
            ];
            if w.lower - tol > e.upper_cert || e.best_value > n + tol {
                out.push(Finding::new("w_le_alpha_norm_le_norm", &obs));
            }
            if e.best_value > e.upper_cert + CHAIN_TOL {
                out.push(Finding::new("estimate_le_certificate", &obs));
            }
            if alpha == 0.0 && (e.best_value - n).abs() > ENDPOINT_TOL {
                out.push(Finding::new("endpoint_norm", &obs));
            }
            if alpha == 1.0
                && (e.best_value < w.lower - ENDPOINT_TOL || e.best_value > w.upper + ENDPOINT_TOL)
            {
                out.push(Finding::new("endpoint_radius", &obs));
            }
        }
        Ok(out)
    }
}

/// Every catalog upper bound is above `w`, every lower bound below.
pub struct CatalogSoundness;

impl Property for CatalogSoundness {
    fn id(&self) -> &str {
        "catalog_soundness"
    }

    fn check(&self, s: &Sample) -> Result<Vec<Finding>> {
        let r = &s.report;
        Ok(r.violations(s.tol)
            .into_iter()
            .map(|e| {
                Finding::new(
                    e.id.as_str(),
                    &[
                        ("value_on_w_scale", e.on_radius_scale()),
                        ("w_lower", r.w_bracket.lower),
                        ("w_upper", r.w_bracket.upper),
                    ],
                )
            })
            .collect())
    }
}

/// `min{γ², δ²} ≤ ¼‖|T|²+|T*|²‖ + ½‖Re(|T||T*|)‖ ≤ ¼‖|T|²+|T*|²‖ + ½w(|T||T*|)`.
pub struct RefinementChain;

impl Property for RefinementChain {
    fn id(&self) -> &str {
        "rem1_chain"
    }

    fn check(&self, s: &Sample) -> Result<Vec<Finding>> {
        let c = s.ctx.refinement_chain()?;
        let obs = [
            ("min_gamma_delta_sq", c.min_gamma_delta_sq),
            ("middle", c.middle),
            ("outer", c.outer),
        ];
        let mut out = Vec::new();
        if c.min_gamma_delta_sq > c.middle + CHAIN_TOL {
            out.push(Finding::new("gamma_delta_le_middle", &obs));
        }
        if c.middle > c.outer + CHAIN_TOL {
            out.push(Finding::new("middle_le_outer", &obs));
        }
        Ok(out)
    }
}

/// `EQN5 ≤ ½‖T*T + TT*‖`, with the radius terms at their lower endpoints
/// (the chain is tight for normal matrices).
pub struct Eqn5Chain;

impl Property for Eqn5Chain {
    fn id(&self) -> &str {
        "eqn5_chain"
    }

    fn check(&self, s: &Sample) -> Result<Vec<Finding>> {
        let eqn5 = s.ctx.th3_family_below(1.0)?.th3;
        let ks = s.ctx.kittaneh_sum()?;
        Ok(if eqn5 > ks + CHAIN_TOL {
            vec![Finding::new("eqn5_le_kittaneh_sum", &[("eqn5", eqn5), ("kittaneh_sum", ks)])]
        } else {
            Vec::new()
        })
    }
}

/// `√(min_α‖α|T| + (1−α)|T*|‖·‖T‖) ≤ ‖T‖`.
pub struct Impr1Norm;

impl Property for Impr1Norm {
    fn id(&self) -> &str {
        "impr1_norm"
    }

    fn check(&self, s: &Sample) -> Result<Vec<Finding>> {
        let i = s.ctx.impr1()?;
        Ok(if i.impr1 > s.norm() + CHAIN_TOL {
            vec![Finding::new("impr1_le_norm", &[("impr1", i.impr1), ("norm", s.norm())])]
        } else {
            Vec::new()
        })
    }
}

/// Certificate validity and the (α,β) lower bounds, on certified samples.
pub struct ABNormalBounds;

impl Property for ABNormalBounds {
    fn id(&self) -> &str {
        "ab_normal"
    }

    fn check(&self, s: &Sample) -> Result<Vec<Finding>> {
        let t = &s.matrix;
        let c = ab_certify(t, DEFAULT_RANK_TOL)?;
        let mut out = Vec::new();
        if !c.is_ab_normal || s.norm() == 0.0 {
            return Ok(out);
        }
        let mut rng = s.rng_for(self.id());
        for _ in 0..CERTIFICATE_VECTORS {
            let x = random_unit(t.rows(), &mut rng);
            let tx = vec_norm(&t.mul_vec(&x));
            let tsx = vec_norm(&t.adjoint_mul_vec(&x));
            if c.alpha_best * tx > tsx + 1e-8 || tsx > c.beta_best * tx + 1e-8 {
                out.push(Finding::new(
                    "certificate",
                    &[("alpha", c.alpha_best), ("beta", c.beta_best), ("tx", tx), ("tsx", tsx)],
                ));
                break;
            }
        }
        let (th5, th6, sab) = (lower_th5(t, &c)?, lower_th6(t, &c)?, lower_sab(t, &c)?);
        let w = s.w();
        let obs = [
            ("th5", th5),
            ("th6", th6),
            ("sab", sab),
            ("w_upper", w.upper),
            ("norm", s.norm()),
        ];
        if th5 > w.upper + s.tol || th6 > w.upper + s.tol || sab > w.upper + s.tol {
            out.push(Finding::new("lower_bounds_le_w", &obs));
        }
        if sab > th5 + CHAIN_TOL || sab > th6 + CHAIN_TOL {
            out.push(Finding::new("sab_le_th5_th6", &obs));
        }
        if c.alpha_best > 0.0 && sab <= s.norm() / 2.0 {
            out.push(Finding::new("sab_gt_half_norm", &obs));
        }
        Ok(out)
    }
}

/// Kato, Kittaneh, Hölder–McCarthy and Buzano at random vectors.
pub struct ScalarIngredients;

impl Property for ScalarIngredients {
    fn id(&self) -> &str {
        "scalar_ingredients"
    }

    fn check(&self, s: &Sample) -> Result<Vec<Finding>> {
        let ctx = ScalarCheckContext::new(&s.matrix)?;
        let mut rng = s.rng_for(self.id());
        let n = s.matrix.rows();
        let mut out = Vec::new();
        for _ in 0..VECTOR_PAIRS {
            let x = random_unit(n, &mut rng);
            let y = random_unit(n, &mut rng);
            let r: f64 = rng.random_range(0.0..=1.0);
            let checks = ctx.check(&x, &y, r)?;
            for ((name, slack), ok) in checks.slacks().into_iter().zip(checks.passed()) {
                if !ok {
                    out.push(Finding::new(name, &[("slack", slack), ("r", r)]));
                }
            }
        }
        Ok(out)
    }
}

pub fn standard_properties() -> Vec<Box<dyn Property>> {
    vec![
        Box::new(NormSandwich),
        Box::new(AlphaNormSandwich),
        Box::new(CatalogSoundness),
        Box::new(RefinementChain),
        Box::new(Eqn5Chain),
        Box::new(Impr1Norm),
        Box::new(ABNormalBounds),
        Box::new(ScalarIngredients),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub trial: usize,
    pub property: String,
    pub check: String,
    pub observed: Vec<(String, f64)>,
    pub matrix: MatrixFile,
}

/// Empirical record for the unresolved question whether
/// `w(T) ≤ min_α ‖α|T| + (1−α)|T*|‖`. Informational only.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct OpenQuestionTally {
    pub checked: usize,
    pub counterexamples: usize,
    /// Largest observed `w.lower − min_α‖α|T| + (1−α)|T*|‖`.
    pub max_excess: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub trials: usize,
    pub dimension: usize,
    pub ensemble: String,
    pub seed: u64,
    pub violations: Vec<Violation>,
    pub open_question: OpenQuestionTally,
    pub elapsed: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzRun {
    pub seed: u64,
    pub tol: f64,
    pub properties: Vec<String>,
    pub cells: Vec<FuzzSummary>,
}

impl FuzzRun {
    pub fn violation_count(&self) -> usize {
        self.cells.iter().map(|c| c.violations.len()).sum()
    }

    pub fn total_trials(&self) -> usize {
        self.cells.iter().map(|c| c.trials).sum()
    }
}

pub fn trial_stream(ensemble: Ensemble, dim: usize, trial: usize) -> u64 {
    (ensemble.id() << 56) | ((dim as u64) << 40) | trial as u64
}

/// Draws and prepares trial `trial` of cell `(ensemble, dim)`.
pub fn draw_sample(config: &FuzzConfig, ensemble: Ensemble, dim: usize, trial: usize) -> Result<Sample> {
    let mut rng = stream_rng(config.seed, trial_stream(ensemble, dim, trial));
    let t = random_matrix(ensemble, dim, &mut rng)?;
    let mut s = Sample::new(t, config.tol, config.radius_tol(), rng.next_u64())?;
    s.ensemble = ensemble;
    s.trial = trial;
    Ok(s)
}

fn run_cell(
    config: &FuzzConfig,
    ensemble: Ensemble,
    dim: usize,
    properties: &[Box<dyn Property>],
) -> Result<FuzzSummary> {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut tally = OpenQuestionTally::default();
    for trial in 0..config.trials {
        let s = draw_sample(config, ensemble, dim, trial)?;
        for p in properties {
            for f in p.check(&s)? {
                violations.push(Violation {
                    trial,
                    property: p.id().to_string(),
                    check: f.check,
                    observed: f.observed,
                    matrix: MatrixFile::from(&s.matrix),
                });
            }
        }
        let excess = s.w().lower - s.ctx.impr1()?.inner_min;
        tally.checked += 1;
        tally.max_excess = if tally.checked == 1 { excess } else { tally.max_excess.max(excess) };
        if excess > config.tol {
            tally.counterexamples += 1;
        }
    }
    Ok(FuzzSummary {
        trials: config.trials,
        dimension: dim,
        ensemble: ensemble.to_string(),
        seed: config.seed,
        violations,
        open_question: tally,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// Runs every property on every trial of every `(ensemble, dim)` cell.
pub fn fuzz_with(config: &FuzzConfig, properties: &[Box<dyn Property>]) -> Result<FuzzRun> {
    config.validate()?;
    let mut cells = Vec::new();
    for &e in &config.ensembles {
        for &d in &config.dims {
            cells.push(run_cell(config, e, d, properties)?);
        }
    }
    Ok(FuzzRun {
        seed: config.seed,
        tol: config.tol,
        properties: properties.iter().map(|p| p.id().to_string()).collect(),
        cells,
    })
}

pub fn fuzz(config: &FuzzConfig) -> Result<FuzzRun> {
    fuzz_with(config, &standard_properties())
}
