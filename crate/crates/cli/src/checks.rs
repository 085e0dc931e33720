//! Scalar inequalities that the catalog's proofs are built from, evaluated
//! at concrete vectors.

use numrad_core::linalg::{herm_eig, inner, vec_norm, HermitianEig, HERMITIAN_TOL};
use numrad_core::{ComplexMatrix, Error, C64};

use crate::error::Result;

/// A check passes when its slack (right side minus left side) is at least
/// `−SLACK_TOL`.
pub const SLACK_TOL: f64 = 1e-9;
const UNIT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarChecks {
    /// `⟨|T|^{2r}x,x⟩⟨|T*|^{2(1−r)}y,y⟩ − |⟨Tx,y⟩|²`.
    pub kato: f64,
    /// `‖f(|T|)x‖²‖g(|T*|)y‖² − |⟨Tx,y⟩|²` with `f = t^r`, `g = t^{1−r}`.
    pub kittaneh_fg: f64,
    /// `⟨|T|²x,x⟩ − ⟨|T|x,x⟩²`.
    pub mccarthy: f64,
    /// `‖u‖‖v‖ + |⟨u,v⟩| − 2|⟨u,x⟩⟨x,v⟩|` with `u = |T*|x`, `v = |T|x`.
    pub buzano: f64,
}

impl ScalarChecks {
    pub fn slacks(&self) -> [(&'static str, f64); 4] {
        [
            ("kato", self.kato),
            ("kittaneh_fg", self.kittaneh_fg),
            ("mccarthy", self.mccarthy),
            ("buzano", self.buzano),
        ]
    }

    /// `(kato, kittaneh_fg, mccarthy, buzano)` pass flags.
    pub fn passed(&self) -> [bool; 4] {
        self.slacks().map(|(_, s)| s >= -SLACK_TOL)
    }

    pub fn all_pass(&self) -> bool {
        self.passed().iter().all(|&b| b)
    }
}

fn quad(m: &ComplexMatrix, x: &[C64]) -> f64 {
    inner(&m.mul_vec(x), x).re
}

/// `⟨P^s x, x⟩ − ⟨Px, x⟩^s` for PSD `P`, unit `x` and `s ≥ 1`.
pub fn mccarthy_slack(p: &ComplexMatrix, x: &[C64], s: f64) -> Result<f64> {
    let eig = herm_eig(p, HERMITIAN_TOL)?;
    let ps = eig.reconstruct_with(|l| l.max(0.0).powf(s));
    Ok(quad(&ps, x) - quad(p, x).max(0.0).powf(s))
}

/// Spectral data of `T*T` and `TT*` reused across many vector pairs.
#[derive(Debug, Clone)]
pub struct ScalarCheckContext {
    t: ComplexMatrix,
    gram: HermitianEig,
    gram_adj: HermitianEig,
    abs: ComplexMatrix,
    abs_adj: ComplexMatrix,
}

fn check_unit(x: &[C64], n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        }
        .into());
    }
    let norm = vec_norm(x);
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnit(norm).into());
    }
    Ok(())
}

impl ScalarCheckContext {
    pub fn new(t: &ComplexMatrix) -> Result<Self> {
        t.ensure_square()?;
        let gram = herm_eig(&(&t.adjoint() * t), HERMITIAN_TOL)?;
        let gram_adj = herm_eig(&(t * &t.adjoint()), HERMITIAN_TOL)?;
        let abs = gram.reconstruct_with(|l| l.max(0.0).sqrt());
        let abs_adj = gram_adj.reconstruct_with(|l| l.max(0.0).sqrt());
        Ok(Self {
            t: t.clone(),
            gram,
            gram_adj,
            abs,
            abs_adj,
        })
    }

    pub fn check(&self, x: &[C64], y: &[C64], r: f64) -> Result<ScalarChecks> {
        let n = self.t.rows();
        check_unit(x, n)?;
        check_unit(y, n)?;
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::BadExponent(r).into());
        }
        let lhs = inner(&self.t.mul_vec(x), y).norm_sqr();

        let a = self.gram.reconstruct_with(|l| l.max(0.0).powf(r));
        let b = self.gram_adj.reconstruct_with(|l| l.max(0.0).powf(1.0 - r));
        let kato = quad(&a, x) * quad(&b, y) - lhs;

        // f(|T|) and g(|T*|) from the moduli' own spectra.
        let abs_eig = herm_eig(&self.abs, HERMITIAN_TOL)?;
        let abs_adj_eig = herm_eig(&self.abs_adj, HERMITIAN_TOL)?;
        let f = abs_eig.reconstruct_with(|l| l.max(0.0).powf(r));
        let g = abs_adj_eig.reconstruct_with(|l| l.max(0.0).powf(1.0 - r));
        let fx = vec_norm(&f.mul_vec(x));
        let gy = vec_norm(&g.mul_vec(y));
        let kittaneh_fg = fx * fx * gy * gy - lhs;

        let mccarthy = quad(&(&self.abs * &self.abs), x) - quad(&self.abs, x).powi(2);

        let u = self.abs_adj.mul_vec(x);
        let v = self.abs.mul_vec(x);
        let buzano = vec_norm(&u) * vec_norm(&v) + inner(&u, &v).norm()
            - 2.0 * (inner(&u, x) * inner(x, &v)).norm();

        Ok(ScalarChecks {
            kato,
            kittaneh_fg,
            mccarthy,
            buzano,
        })
    }
}

pub fn scalar_inequality_checks(
    t: &ComplexMatrix,
    x: &[C64],
    y: &[C64],
    r: f64,
) -> Result<ScalarChecks> {
    ScalarCheckContext::new(t)?.check(x, y, r)
}
