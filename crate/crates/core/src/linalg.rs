//! Dense complex matrices and the spectral primitives built on a cyclic
//! Jacobi eigensolver: Hermitian eigendecomposition, operator norms, polar
//! moduli `|M| = (M*M)^{1/2}`, PSD powers, Cartesian parts and the kernel
//! comparison used to decide range equality of `M` and `M*`.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Maximum number of Jacobi sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius mass, relative to `‖H‖_F`, at which Jacobi stops.
pub const JACOBI_OFF_TOL: f64 = 1e-13;

/// Hermiticity tolerance used for internally generated Hermitian matrices.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Relative singular value threshold below which a direction counts as kernel.
///
/// Singular values are resolved through `M*M`, so directions much below
/// `sqrt(eps)·σ_max` cannot be told apart from exact zeros anyway.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Principal angle (as a sine) under which two kernels are treated as equal.
pub const KERNEL_ANGLE_TOL: f64 = 1e-8;

/// Dense row-major complex matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::new(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: bad.len(),
            });
        }
        Self::new(n, m, rows.concat())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, columns: &[Vec<C64>]) -> Self {
        Self::from_fn(n, columns.len(), |i, j| columns[j][i])
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
    }

    pub fn diag(values: &[C64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i] } else { C64::new(0.0, 0.0) })
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let v: Vec<C64> = values.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::diag(&v)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn scale_real(&self, c: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `‖M − M*‖_F`; zero for non-square input is never returned.
    pub fn hermitian_defect(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermitian_defect() <= tol * self.frobenius_norm().max(1.0)
    }

    /// `(M + M*)/2`, exactly Hermitian.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            if i == j {
                C64::new(self[(i, i)].re, 0.0)
            } else {
                (self[(i, j)] + self[(j, i)].conj()) * 0.5
            }
        })
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, x: &[C64]) -> Vec<C64> {
        debug_assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(x).map(|(a, b)| a * b).sum()
            })
            .collect()
    }

    /// `M* x` without forming the adjoint.
    pub fn adjoint_mul_vec(&self, x: &[C64]) -> Vec<C64> {
        debug_assert_eq!(x.len(), self.rows);
        let mut out = vec![C64::new(0.0, 0.0); self.cols];
        for (i, xi) in x.iter().enumerate() {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            for (o, a) in out.iter_mut().zip(row) {
                *o += a.conj() * xi;
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(C64, C64) -> C64) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// `a·self + b·other` with real weights.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Self {
        self.zip_with(other, |x, y| x * a + y * b)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale_real(-1.0)
    }
}

/// `⟨u, v⟩ = Σ u_i conj(v_i)`, linear in the first argument.
pub fn inner(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a * b.conj()).sum()
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Returns `v/‖v‖`, or `None` for the zero vector.
pub fn normalized(v: &[C64]) -> Option<Vec<C64>> {
    let n = vec_norm(v);
    (n > 0.0 && n.is_finite()).then(|| v.iter().map(|z| z / n).collect())
}

/// Rotates the phase of `v` so that its first non-negligible component is
/// real and positive.
pub fn phase_normalize(v: &mut [C64]) {
    let scale = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(z) = v.iter().copied().find(|z| z.norm() > 1e-12 * scale) {
        let phase = z.conj() / z.norm();
        for c in v.iter_mut() {
            *c *= phase;
        }
    }
}

pub fn unit_vector(n: usize, k: usize) -> Vec<C64> {
    let mut e = vec![C64::new(0.0, 0.0); n];
    e[k] = C64::new(1.0, 0.0);
    e
}

/// Eigendecomposition `H = U diag(λ) U*` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    /// Eigenvalues, sorted descending.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose columns are the matching eigenvectors.
    pub basis: ComplexMatrix,
}

impl HermitianEig {
    pub fn eigenvector(&self, k: usize) -> Vec<C64> {
        self.basis.column(k)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// `U diag(f(λ)) U*`.
    pub fn reconstruct_with(&self, mut f: impl FnMut(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let u = &self.basis;
        let mut out = ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .filter(|&k| weights[k] != 0.0)
                .map(|k| u[(i, k)] * u[(j, k)].conj() * weights[k])
                .sum()
        });
        out = out.hermitian_part();
        out
    }
}

/// Hermitian eigendecomposition by cyclic-by-row complex Jacobi rotations.
///
/// Fails with `NotHermitian` when `‖H − H*‖_F > tol·max(1, ‖H‖_F)`.
pub fn herm_eig(h: &ComplexMatrix, tol: f64) -> Result<HermitianEig> {
    let n = h.ensure_square()?;
    let defect = h.hermitian_defect();
    if defect > tol * h.frobenius_norm().max(1.0) {
        return Err(Error::NotHermitian { asymmetry: defect });
    }
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let target = JACOBI_OFF_TOL * a.frobenius_norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_mass(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_mass(&a) > target {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let basis = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEig { eigenvalues, basis })
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Annihilates `a[p][q]` with the unitary `G = diag(e^{iφ}, 1)·R(θ)` acting on
/// the (p, q) plane, where `a[p][q] = |a_pq| e^{iφ}` and `R` is the real
/// Jacobi rotation of the modulus problem.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let abs_b = b.norm();
    if abs_b == 0.0 {
        return;
    }
    let n = a.rows();
    let phase = b / abs_b;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * abs_b);
    let t = if tau.abs() > 1e150 {
        0.5 / tau
    } else if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let (gpp, gpq) = (phase * c, phase * s);

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * gpp - akq * s;
        a[(k, q)] = akp * gpq + akq * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = gpp.conj() * apk - aqk * s;
        a[(q, k)] = gpq.conj() * apk + aqk * c;
    }
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * gpp - vkq * s;
        v[(k, q)] = vkp * gpq + vkq * c;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(app - t * abs_b, 0.0);
    a[(q, q)] = C64::new(aqq + t * abs_b, 0.0);
}

/// Operator norm of a Hermitian matrix: the largest eigenvalue modulus.
pub fn hermitian_norm(h: &ComplexMatrix) -> Result<f64> {
    let eig = herm_eig(h, HERMITIAN_TOL)?;
    Ok(eig.max().abs().max(eig.min().abs()))
}

/// Largest eigenvalue of a Hermitian matrix.
pub fn lambda_max(h: &ComplexMatrix) -> Result<f64> {
    Ok(herm_eig(h, HERMITIAN_TOL)?.max())
}

/// Operator 2-norm `√λ_max(M*M)`.
pub fn spectral_norm(m: &ComplexMatrix) -> Result<f64> {
    let gram = if m.rows() < m.cols() {
        m * &m.adjoint()
    } else {
        &m.adjoint() * m
    };
    Ok(lambda_max(&gram)?.max(0.0).sqrt())
}

/// Singular values (descending) as square roots of the clamped eigenvalues of `M*M`.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let gram = &m.adjoint() * m;
    Ok(herm_eig(&gram, HERMITIAN_TOL)?
        .eigenvalues
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .collect())
}

/// `P^r` for Hermitian PSD `P` and `r ∈ [0, 1]`, with `0^0 := 1`.
///
/// Eigenvalues down to `−1e-10·‖P‖` are clamped to zero; anything more
/// negative is rejected.
pub fn psd_power(p: &ComplexMatrix, r: f64) -> Result<ComplexMatrix> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::BadExponent(r));
    }
    p.ensure_square()?;
    let eig = herm_eig(p, HERMITIAN_TOL)?;
    if r == 1.0 {
        return Ok(p.clone());
    }
    psd_power_from_eig(&eig, r)
}

pub(crate) fn psd_power_from_eig(eig: &HermitianEig, r: f64) -> Result<ComplexMatrix> {
    let scale = eig.max().abs().max(eig.min().abs());
    if eig.min() < -1e-10 * scale {
        return Err(Error::NotPositive {
            eigenvalue: eig.min(),
        });
    }
    Ok(eig.reconstruct_with(|l| {
        let l = l.max(0.0);
        if r == 0.0 {
            1.0
        } else if l == 0.0 {
            0.0
        } else {
            l.powf(r)
        }
    }))
}

/// `(|M|, |M*|)`, the PSD square roots of `M*M` and `MM*`.
pub fn polar_moduli(m: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    m.ensure_square()?;
    let adj = m.adjoint();
    let abs = psd_power(&(&adj * m), 0.5)?;
    let abs_adj = psd_power(&(m * &adj), 0.5)?;
    Ok((abs, abs_adj))
}

/// Hermitian `Re(M) = (M + M*)/2` and `Im(M) = (M − M*)/(2i)`.
pub fn cartesian_parts(m: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let n = m.ensure_square()?;
    let re = ComplexMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let minus_i_half = C64::new(0.0, -0.5);
    let im = ComplexMatrix::from_fn(n, n, |i, j| (m[(i, j)] - m[(j, i)].conj()) * minus_i_half);
    Ok((re, im))
}

/// Outcome of comparing the numerical kernels of `M` and `M*`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelComparison {
    pub equal: bool,
    pub kernel_dim: usize,
    pub adjoint_kernel_dim: usize,
    /// Sine of the largest principal angle between the kernels (1 if the
    /// dimensions differ).
    pub max_angle_sine: f64,
}

/// Orthonormal basis of the numerical kernel: right singular directions `v`
/// with `‖Mv‖ ≤ tol·σ_max`.
pub fn numerical_kernel(m: &ComplexMatrix, tol: f64) -> Result<Vec<Vec<C64>>> {
    let eig = herm_eig(&(&m.adjoint() * m), HERMITIAN_TOL)?;
    let sigma_max = eig.max().max(0.0).sqrt();
    let n = m.cols();
    Ok((0..n)
        .map(|k| eig.eigenvector(k))
        .filter(|v| vec_norm(&m.mul_vec(v)) <= tol * sigma_max)
        .collect())
}

/// Whether `ker M = ker M*` numerically; in finite dimension this is the same
/// as `Ran M = Ran M*`.
pub fn kernels_equal(m: &ComplexMatrix, tol: f64) -> Result<KernelComparison> {
    let n = m.ensure_square()?;
    let k1 = numerical_kernel(m, tol)?;
    let k2 = numerical_kernel(&m.adjoint(), tol)?;
    let (d1, d2) = (k1.len(), k2.len());
    if d1 != d2 {
        return Ok(KernelComparison {
            equal: false,
            kernel_dim: d1,
            adjoint_kernel_dim: d2,
            max_angle_sine: 1.0,
        });
    }
    if d1 == 0 {
        return Ok(KernelComparison {
            equal: true,
            kernel_dim: 0,
            adjoint_kernel_dim: 0,
            max_angle_sine: 0.0,
        });
    }
    // ‖(I − K1 K1*) K2‖ is the sine of the largest principal angle.
    let b1 = ComplexMatrix::from_columns(n, &k1);
    let b2 = ComplexMatrix::from_columns(n, &k2);
    let residual = &b2 - &(&b1 * &(&b1.adjoint() * &b2));
    let sine = spectral_norm(&residual)?;
    Ok(KernelComparison {
        equal: sine < KERNEL_ANGLE_TOL,
        kernel_dim: d1,
        adjoint_kernel_dim: d2,
        max_angle_sine: sine,
    })
}
