//! (α,β)-normality: `α‖Tx‖ ≤ ‖T*x‖ ≤ β‖Tx‖` for all `x`, with `0 ≤ α ≤ 1 ≤ β`.
//!
//! The best constants are the extremal values of `‖T*x‖/‖Tx‖`, i.e. square
//! roots of the extremal generalized eigenvalues of the pencil `(TT*, T*T)`.
//! Positive `α` is possible only when `ker T = ker T*`; otherwise the matrix
//! is reported as not (α,β)-normal.

use crate::error::{Error, Result};
use crate::linalg::{
    cartesian_parts, herm_eig, hermitian_norm, kernels_equal, normalized, phase_normalize,
    spectral_norm, unit_vector, vec_norm, ComplexMatrix, KernelComparison, C64, HERMITIAN_TOL,
};

#[derive(Debug, Clone, PartialEq)]
pub struct ABNormalCertificate {
    pub alpha_best: f64,
    /// `+∞` when the kernels differ.
    pub beta_best: f64,
    pub kernels_equal: bool,
    pub is_ab_normal: bool,
    /// Minimizer of `‖T*x‖/‖Tx‖` off the kernel.
    pub witness_min: Vec<C64>,
    /// Maximizer of `‖T*x‖/‖Tx‖` off the kernel.
    pub witness_max: Vec<C64>,
    /// Unclamped extremal ratios on the complement of `ker T`.
    pub raw_min_ratio: f64,
    pub raw_max_ratio: f64,
    pub rank: usize,
    pub kernel: KernelComparison,
}

/// Ratio `‖T*x‖/‖Tx‖`, or `None` when `Tx = 0`.
pub fn adjoint_ratio(t: &ComplexMatrix, x: &[C64]) -> Option<f64> {
    let d = vec_norm(&t.mul_vec(x));
    (d > 0.0).then(|| vec_norm(&t.adjoint_mul_vec(x)) / d)
}

/// Certifies (α,β)-normality with rank tolerance `tol` (relative to `‖T‖`).
pub fn ab_certify(t: &ComplexMatrix, tol: f64) -> Result<ABNormalCertificate> {
    let n = t.ensure_square()?;
    let kernel = kernels_equal(t, tol)?;

    // Right singular directions off the numerical kernel.
    let gram_eig = herm_eig(&(&t.adjoint() * t), HERMITIAN_TOL)?;
    let sigma_max = gram_eig.max().max(0.0).sqrt();
    let range: Vec<Vec<C64>> = (0..n)
        .map(|k| gram_eig.eigenvector(k))
        .filter(|v| sigma_max > 0.0 && vec_norm(&t.mul_vec(v)) > tol * sigma_max)
        .collect();
    let rank = range.len();

    let (raw_min_ratio, raw_max_ratio, witness_min, witness_max) = if rank == 0 {
        // T = 0 numerically: every ratio constraint is vacuous.
        (1.0, 1.0, unit_vector(n, 0), unit_vector(n, 0))
    } else {
        // Congruence with B^{-1/2}, B = (TV)*(TV), turns the projected pencil
        // into an ordinary Hermitian problem.
        let v = ComplexMatrix::from_columns(n, &range);
        let tv = t * &v;
        let tsv = &t.adjoint() * &v;
        let b = (&tv.adjoint() * &tv).hermitian_part();
        let a = (&tsv.adjoint() * &tsv).hermitian_part();
        let b_eig = herm_eig(&b, HERMITIAN_TOL)?;
        let b_inv_sqrt = b_eig.reconstruct_with(|l| 1.0 / l.max(f64::MIN_POSITIVE).sqrt());
        let c = (&(&b_inv_sqrt * &a) * &b_inv_sqrt).hermitian_part();
        let c_eig = herm_eig(&c, HERMITIAN_TOL)?;
        let lift = |y: Vec<C64>| -> Vec<C64> {
            let mut x = normalized(&v.mul_vec(&b_inv_sqrt.mul_vec(&y)))
                .expect("range vectors are independent");
            phase_normalize(&mut x);
            x
        };
        (
            c_eig.min().max(0.0).sqrt(),
            c_eig.max().max(0.0).sqrt(),
            lift(c_eig.eigenvector(rank - 1)),
            lift(c_eig.eigenvector(0)),
        )
    };

    let (alpha_best, beta_best) = if kernel.equal {
        (raw_min_ratio.min(1.0), raw_max_ratio.max(1.0))
    } else {
        (0.0, f64::INFINITY)
    };
    Ok(ABNormalCertificate {
        alpha_best,
        beta_best,
        kernels_equal: kernel.equal,
        is_ab_normal: kernel.equal,
        witness_min,
        witness_max,
        raw_min_ratio,
        raw_max_ratio,
        rank,
        kernel,
    })
}

/// `max{1+α², 1+1/β²}`.
fn ab_factor(cert: &ABNormalCertificate) -> Result<f64> {
    if !cert.is_ab_normal {
        return Err(Error::NotABNormal);
    }
    let a = cert.alpha_best;
    let b = cert.beta_best;
    Ok((1.0 + a * a).max(1.0 + 1.0 / (b * b)))
}

/// `√(max{1+α², 1+1/β²}‖T‖²/4 + |‖Re T‖² − ‖Im T‖²|/2)`.
pub fn lower_th5(t: &ComplexMatrix, cert: &ABNormalCertificate) -> Result<f64> {
    let factor = ab_factor(cert)?;
    let norm = spectral_norm(t)?;
    let (re, im) = cartesian_parts(t)?;
    let (nr, ni) = (hermitian_norm(&re)?, hermitian_norm(&im)?);
    Ok((factor * norm * norm / 4.0 + (nr * nr - ni * ni).abs() / 2.0).sqrt())
}

/// `√(max{1+α², 1+1/β²}‖T‖²/4 + |‖Re T + Im T‖² − ‖Re T − Im T‖²|/4)`.
pub fn lower_th6(t: &ComplexMatrix, cert: &ABNormalCertificate) -> Result<f64> {
    let factor = ab_factor(cert)?;
    let norm = spectral_norm(t)?;
    let (re, im) = cartesian_parts(t)?;
    let plus = hermitian_norm(&(&re + &im))?;
    let minus = hermitian_norm(&(&re - &im))?;
    Ok((factor * norm * norm / 4.0 + (plus * plus - minus * minus).abs() / 4.0).sqrt())
}

/// `max{√(1+α²), √(1+1/β²)}·‖T‖/2`.
pub fn lower_sab(t: &ComplexMatrix, cert: &ABNormalCertificate) -> Result<f64> {
    let factor = ab_factor(cert)?;
    Ok(factor.sqrt() * spectral_norm(t)? / 2.0)
}
