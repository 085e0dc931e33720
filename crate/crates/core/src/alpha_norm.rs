//! The α-norm `‖T‖_α = sup_{‖x‖=1} √(α|⟨Tx,x⟩|² + (1−α)‖Tx‖²)`.
//!
//! Estimated by multistart projected gradient ascent on the unit sphere. The
//! ascent value is only a lower bound, so it is always paired with a
//! certified upper bound from the catalog.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::bounds::{BoundContext, DEFAULT_RADIUS_TOL};
use crate::error::{Error, Result};
use crate::linalg::{
    herm_eig, inner, normalized, phase_normalize, unit_vector, vec_norm, ComplexMatrix, C64,
    HERMITIAN_TOL,
};
use crate::radius::{numerical_radius, RadiusBracket};

pub const DEFAULT_RESTARTS: usize = 16;
pub const MAX_ASCENT_STEPS: usize = 500;
pub const GRADIENT_TOL: f64 = 1e-10;
const ARMIJO: f64 = 1e-4;
const MAX_HALVINGS: usize = 60;
const UNIT_TOL: f64 = 1e-10;

/// Bracket tolerance used for the radius witness start.
pub const WITNESS_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaNormEstimate {
    pub alpha: f64,
    /// Best ascent value: a lower bound on `‖T‖_α`.
    pub best_value: f64,
    pub best_vector: Vec<C64>,
    /// Certified upper bound on `‖T‖_α`.
    pub upper_cert: f64,
}

fn check_args(t: &ComplexMatrix, alpha: f64, x: &[C64]) -> Result<()> {
    let n = t.ensure_square()?;
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::BadAlpha(alpha));
    }
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let norm = vec_norm(x);
    if norm.is_nan() || (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnit(norm));
    }
    Ok(())
}

fn objective_unchecked(t: &ComplexMatrix, alpha: f64, x: &[C64]) -> f64 {
    let tx = t.mul_vec(x);
    let c = inner(&tx, x);
    let ntx = vec_norm(&tx);
    (alpha * c.norm_sqr() + (1.0 - alpha) * ntx * ntx).max(0.0)
}

fn gradient_unchecked(t: &ComplexMatrix, alpha: f64, x: &[C64]) -> Vec<C64> {
    let tx = t.mul_vec(x);
    let c = inner(&tx, x);
    let tsx = t.adjoint_mul_vec(x);
    let tstx = t.adjoint_mul_vec(&tx);
    let mut g: Vec<C64> = (0..x.len())
        .map(|i| (c.conj() * tx[i] + c * tsx[i]) * alpha + tstx[i] * (1.0 - alpha))
        .collect();
    // x*g = ⟨g, x⟩
    let along = inner(&g, x);
    for (gi, xi) in g.iter_mut().zip(x) {
        *gi -= along * xi;
    }
    g
}

/// `α|⟨Tx,x⟩|² + (1−α)‖Tx‖²` for a unit vector `x`.
pub fn alpha_objective(t: &ComplexMatrix, alpha: f64, x: &[C64]) -> Result<f64> {
    check_args(t, alpha, x)?;
    Ok(objective_unchecked(t, alpha, x))
}

/// Conjugate-coordinate gradient of [`alpha_objective`], projected onto the
/// tangent space of the sphere at `x`. The derivative of the objective along a
/// direction `d` is `2 Re⟨g, d⟩`.
pub fn alpha_gradient(t: &ComplexMatrix, alpha: f64, x: &[C64]) -> Result<Vec<C64>> {
    check_args(t, alpha, x)?;
    Ok(gradient_unchecked(t, alpha, x))
}

/// Projected gradient ascent from `x0` (assumed unit). Returns the limit point
/// and its objective value.
fn ascend(t: &ComplexMatrix, alpha: f64, x0: Vec<C64>, scale: f64) -> (Vec<C64>, f64) {
    let mut x = x0;
    let mut f = objective_unchecked(t, alpha, &x);
    let base_step = 1.0 / scale;
    let mut step = base_step;
    for _ in 0..MAX_ASCENT_STEPS {
        let g = gradient_unchecked(t, alpha, &x);
        let gn = vec_norm(&g);
        if gn <= GRADIENT_TOL * scale.max(1.0) {
            break;
        }
        let mut accepted = false;
        step = (2.0 * step).min(8.0 * base_step);
        for _ in 0..MAX_HALVINGS {
            let trial: Vec<C64> = x.iter().zip(&g).map(|(a, b)| a + b * step).collect();
            if let Some(y) = normalized(&trial) {
                let fy = objective_unchecked(t, alpha, &y);
                if fy >= f + ARMIJO * step * 2.0 * gn * gn {
                    x = y;
                    f = fy;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (x, f)
}

fn random_unit(n: usize, seed: u64, stream: u64) -> Vec<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    loop {
        let v: Vec<C64> = (0..n)
            .map(|_| C64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng)))
            .collect();
        if let Some(u) = normalized(&v) {
            return u;
        }
    }
}

/// Estimates `‖T‖_α` with `restarts` random starts (ChaCha stream `k` of
/// `seed` for the `k`-th) in addition to the top right singular vector and
/// the numerical-radius witness.
pub fn alpha_norm_estimate(
    t: &ComplexMatrix,
    alpha: f64,
    restarts: usize,
    seed: u64,
) -> Result<AlphaNormEstimate> {
    t.ensure_square()?;
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::BadAlpha(alpha));
    }
    let ctx = BoundContext::new(t, DEFAULT_RADIUS_TOL)?;
    let bracket = numerical_radius(t, WITNESS_TOL)?;
    alpha_norm_estimate_with(&ctx, &bracket, alpha, restarts, seed)
}

/// As [`alpha_norm_estimate`], reusing precomputed polar data and a radius
/// bracket of the same matrix.
pub fn alpha_norm_estimate_with(
    ctx: &BoundContext,
    bracket: &RadiusBracket,
    alpha: f64,
    restarts: usize,
    seed: u64,
) -> Result<AlphaNormEstimate> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::BadAlpha(alpha));
    }
    if restarts == 0 {
        return Err(Error::InvalidArgument("restarts must be positive".into()));
    }
    let t = ctx.matrix();
    let n = t.rows();
    let norm = ctx.norm();
    if norm == 0.0 {
        return Ok(AlphaNormEstimate {
            alpha,
            best_value: 0.0,
            best_vector: unit_vector(n, 0),
            upper_cert: 0.0,
        });
    }

    let top_singular = herm_eig(ctx.gram(), HERMITIAN_TOL)?.eigenvector(0);
    let mut starts = vec![top_singular, bracket.witness.clone()];
    starts.extend((0..restarts as u64).map(|k| random_unit(n, seed, k)));

    let scale = norm * norm;
    let mut best: Option<(Vec<C64>, f64)> = None;
    for x0 in starts {
        let Some(x0) = normalized(&x0) else { continue };
        let (x, f) = ascend(t, alpha, x0, scale);
        if best.as_ref().is_none_or(|(_, bf)| f > *bf) {
            best = Some((x, f));
        }
    }
    let (mut best_vector, _) = best.expect("at least one start");
    phase_normalize(&mut best_vector);
    let best_value = objective_unchecked(t, alpha, &best_vector).sqrt();

    let upper_cert = norm
        .min(ctx.th2(alpha)?.sqrt())
        .min(ctx.th1(alpha, 0.5)?.sqrt());
    Ok(AlphaNormEstimate {
        alpha,
        best_value,
        best_vector,
        upper_cert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 1.0, 1.0]).unwrap()
    }

    fn t3() -> ComplexMatrix {
        ComplexMatrix::from_real(3, 3, &[0.0, 1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn objective_examples() {
        for alpha in [0.0, 0.3, 1.0] {
            assert_eq!(alpha_objective(&t3(), alpha, &unit_vector(3, 0)).unwrap(), 0.0);
            let v = alpha_objective(&t3(), alpha, &unit_vector(3, 1)).unwrap();
            assert!((v - (1.0 - alpha)).abs() < 1e-15);
            let x = random_unit(4, 7, alpha.to_bits());
            let v = alpha_objective(&ComplexMatrix::identity(4), alpha, &x).unwrap();
            assert!((v - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn objective_rejects_bad_input() {
        let x = unit_vector(3, 0);
        assert!(matches!(alpha_objective(&t3(), 1.5, &x), Err(Error::BadAlpha(_))));
        let y = vec![C64::new(2.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        assert!(matches!(alpha_objective(&t3(), 0.5, &y), Err(Error::NotUnit(_))));
        assert!(matches!(
            alpha_objective(&t3(), 0.5, &unit_vector(2, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(alpha_norm_estimate(&t3(), -0.5, 4, 1), Err(Error::BadAlpha(_))));
    }

    #[test]
    fn gradient_vanishes_for_identity() {
        let x = random_unit(3, 11, 0);
        let g = alpha_gradient(&ComplexMatrix::identity(3), 0.4, &x).unwrap();
        assert!(vec_norm(&g) < 1e-14);
    }

    #[test]
    fn endpoints() {
        let e = alpha_norm_estimate(&t3(), 0.0, DEFAULT_RESTARTS, 42).unwrap();
        assert!((e.best_value - 2.0).abs() < 1e-6);
        let e = alpha_norm_estimate(&t2(), 1.0, DEFAULT_RESTARTS, 42).unwrap();
        assert!((e.best_value - 1.5).abs() < 1e-6);
        assert!(e.best_value <= e.upper_cert + 1e-9);
    }

    #[test]
    fn converged_maximizer_is_stationary() {
        let e = alpha_norm_estimate(&t2(), 0.5, DEFAULT_RESTARTS, 3).unwrap();
        let g = alpha_gradient(&t2(), 0.5, &e.best_vector).unwrap();
        assert!(vec_norm(&g) <= 1e-6, "{}", vec_norm(&g));
    }

    #[test]
    fn zero_matrix() {
        let e = alpha_norm_estimate(&ComplexMatrix::zeros(3, 3), 0.5, 4, 0).unwrap();
        assert_eq!(e.best_value, 0.0);
        assert_eq!(e.upper_cert, 0.0);
        assert_eq!(e.best_vector, unit_vector(3, 0));
    }

    #[test]
    fn deterministic_in_seed() {
        let t = ComplexMatrix::from_fn(3, 3, |i, j| C64::new((i + 2 * j) as f64 - 2.0, (i * j) as f64 * 0.5));
        let a = alpha_norm_estimate(&t, 0.3, 8, 9).unwrap();
        let b = alpha_norm_estimate(&t, 0.3, 8, 9).unwrap();
        assert_eq!(a, b);
    }
}
