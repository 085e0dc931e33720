//! Catalog of numerical radius bounds.
//!
//! Every upper bound is built from the polar moduli `|T|`, `|T*|` and, for the
//! Buzano-type bounds, from numerical radii of `|T| + i|T*|` and `|T||T*|`.
//! Wherever a bound holds for every `α ∈ [0, 1]` and is minimized over `α`, the
//! objective is a norm of an affine matrix function of `α` plus a linear term,
//! hence convex, and golden-section search applies.
//!
//! Fixed parameters used by [`BoundContext::report`]:
//! - `TH1` at `α = 1`, minimized over the exponent grid [`R_GRID`];
//! - `TH2` and `TH4` at `α = ½` (their `α`-minimized forms are `PP0` and `IMPR1`);
//! - `EQN5` at `α = 1`;
//! - `TH3`, `COR3`, `COR4` minimized over `α`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::golden::{golden_section_min, Minimum, GOLDEN_TOL};
use crate::linalg::{
    cartesian_parts, herm_eig, hermitian_norm, psd_power_from_eig, spectral_norm, ComplexMatrix,
    HermitianEig, C64, HERMITIAN_TOL,
};
use crate::radius::{numerical_radius, RadiusBracket};

/// Exponents `r` scanned for the power family `f(t) = t^r`, `g(t) = t^{1−r}`.
pub const R_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Bracket tolerance for the radius terms when none is supplied.
pub const DEFAULT_RADIUS_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    Th1,
    Cor1Gamma,
    Cor1Delta,
    Cor1Min,
    Th2,
    Pp0,
    Th3,
    Cor3,
    Cor4,
    Eqn5,
    KittanehSum,
    KittanehModuli,
    Th4,
    Impr1,
    Low1,
    Low4,
}

impl BoundId {
    pub const ALL: [BoundId; 16] = [
        BoundId::Th1,
        BoundId::Cor1Gamma,
        BoundId::Cor1Delta,
        BoundId::Cor1Min,
        BoundId::Th2,
        BoundId::Pp0,
        BoundId::Th3,
        BoundId::Cor3,
        BoundId::Cor4,
        BoundId::Eqn5,
        BoundId::KittanehSum,
        BoundId::KittanehModuli,
        BoundId::Th4,
        BoundId::Impr1,
        BoundId::Low1,
        BoundId::Low4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Th1 => "TH1",
            BoundId::Cor1Gamma => "COR1_GAMMA",
            BoundId::Cor1Delta => "COR1_DELTA",
            BoundId::Cor1Min => "COR1_MIN",
            BoundId::Th2 => "TH2",
            BoundId::Pp0 => "PP0",
            BoundId::Th3 => "TH3",
            BoundId::Cor3 => "COR3",
            BoundId::Cor4 => "COR4",
            BoundId::Eqn5 => "EQN5",
            BoundId::KittanehSum => "KITTANEH_SUM",
            BoundId::KittanehModuli => "KITTANEH_MODULI",
            BoundId::Th4 => "TH4",
            BoundId::Impr1 => "IMPR1",
            BoundId::Low1 => "LOW1",
            BoundId::Low4 => "LOW4",
        }
    }

    pub fn kind(self) -> BoundKind {
        match self {
            BoundId::Cor1Gamma
            | BoundId::Cor1Delta
            | BoundId::Cor1Min
            | BoundId::KittanehModuli
            | BoundId::Impr1 => BoundKind::UpperOnRadius,
            BoundId::Low1 | BoundId::Low4 => BoundKind::LowerOnRadius,
            _ => BoundKind::UpperOnSquare,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown bound id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Upper bound on `w(T)²`.
    UpperOnSquare,
    /// Upper bound on `w(T)`.
    UpperOnRadius,
    /// Lower bound on `w(T)`.
    LowerOnRadius,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::UpperOnSquare => "upper-on-w2",
            BoundKind::UpperOnRadius => "upper-on-w",
            BoundKind::LowerOnRadius => "lower-on-w",
        }
    }

    pub fn is_upper(self) -> bool {
        !matches!(self, BoundKind::LowerOnRadius)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue {
    pub id: BoundId,
    pub kind: BoundKind,
    /// Value in the bound's own scale (`w²` for `UpperOnSquare`).
    pub value: f64,
    /// Minimizing `α`, present iff the bound was minimized over `α`.
    pub alpha_at: Option<f64>,
    pub r_at: Option<f64>,
}

impl BoundValue {
    fn new(id: BoundId, value: f64) -> Self {
        Self {
            id,
            kind: id.kind(),
            value: value.max(0.0),
            alpha_at: None,
            r_at: None,
        }
    }

    fn at_alpha(mut self, alpha: f64) -> Self {
        self.alpha_at = Some(alpha);
        self
    }

    fn at_r(mut self, r: f64) -> Self {
        self.r_at = Some(r);
        self
    }

    /// The value converted to the `w` scale.
    pub fn on_radius_scale(&self) -> f64 {
        match self.kind {
            BoundKind::UpperOnSquare => self.value.sqrt(),
            _ => self.value,
        }
    }
}

/// Every catalog entry evaluated on one matrix, next to the certified `w(T)`.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub w_bracket: RadiusBracket,
    pub norm: f64,
    pub entries: Vec<BoundValue>,
    pub tightest_upper: BoundId,
    pub tightest_lower: BoundId,
}

impl BoundReport {
    pub fn entry(&self, id: BoundId) -> Option<&BoundValue> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Signed slack of an entry against the bracket: `value − w.lower` for
    /// upper bounds, `w.upper − value` for lower bounds. Negative means the
    /// entry is inconsistent with the certified radius.
    pub fn slack(&self, entry: &BoundValue) -> f64 {
        let v = entry.on_radius_scale();
        if entry.kind.is_upper() {
            v - self.w_bracket.lower
        } else {
            self.w_bracket.upper - v
        }
    }

    /// Entries whose slack is below `−tol`.
    pub fn violations(&self, tol: f64) -> Vec<&BoundValue> {
        self.entries.iter().filter(|e| self.slack(e) < -tol).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaDelta {
    pub gamma: f64,
    pub delta: f64,
    pub alpha_gamma: f64,
    pub alpha_delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Th3Family {
    pub th3: f64,
    pub cor3: f64,
    pub cor4: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classics {
    pub eqn5: f64,
    pub kittaneh_sum: f64,
    pub kittaneh_moduli: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Impr1 {
    pub inner_min: f64,
    pub alpha: f64,
    pub impr1: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerGeneral {
    pub low1: f64,
    pub low4: f64,
}

/// The refinement chain `min{γ², δ²} ≤ middle ≤ outer`, with
/// `middle = ¼‖|T|²+|T*|²‖ + ½‖Re(|T||T*|)‖` and
/// `outer = ¼‖|T|²+|T*|²‖ + ½·w(|T||T*|)` (upper endpoint).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinementChain {
    pub min_gamma_delta_sq: f64,
    pub middle: f64,
    pub outer: f64,
}

fn check_unit(name: fn(f64) -> Error, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(name(x))
    }
}

/// Cached polar data of one operator, shared by every catalog entry.
#[derive(Debug)]
pub struct BoundContext {
    t: ComplexMatrix,
    tol: f64,
    norm: f64,
    abs: ComplexMatrix,
    abs_adj: ComplexMatrix,
    gram: ComplexMatrix,
    gram_adj: ComplexMatrix,
    gram_eig: HermitianEig,
    gram_adj_eig: HermitianEig,
    re_abs_product: ComplexMatrix,
    w_mix: OnceLock<RadiusBracket>,
    w_product: OnceLock<RadiusBracket>,
}

impl BoundContext {
    /// `tol` is the bracket tolerance for the radius terms and for the
    /// bracket of `w(T)` in [`report`](Self::report).
    pub fn new(t: &ComplexMatrix, tol: f64) -> Result<Self> {
        t.ensure_square()?;
        let adj = t.adjoint();
        let gram = &adj * t;
        let gram_adj = t * &adj;
        let gram_eig = herm_eig(&gram, HERMITIAN_TOL)?;
        let gram_adj_eig = herm_eig(&gram_adj, HERMITIAN_TOL)?;
        let abs = psd_power_from_eig(&gram_eig, 0.5)?;
        let abs_adj = psd_power_from_eig(&gram_adj_eig, 0.5)?;
        let re_abs_product = (&abs * &abs_adj).hermitian_part();
        Ok(Self {
            t: t.clone(),
            tol,
            norm: spectral_norm(t)?,
            abs,
            abs_adj,
            gram,
            gram_adj,
            gram_eig,
            gram_adj_eig,
            re_abs_product,
            w_mix: OnceLock::new(),
            w_product: OnceLock::new(),
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.t
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn abs(&self) -> &ComplexMatrix {
        &self.abs
    }

    pub fn abs_adj(&self) -> &ComplexMatrix {
        &self.abs_adj
    }

    /// `T*T = |T|²`.
    pub fn gram(&self) -> &ComplexMatrix {
        &self.gram
    }

    /// `TT* = |T*|²`.
    pub fn gram_adj(&self) -> &ComplexMatrix {
        &self.gram_adj
    }

    /// Bracket of `w(|T| + i|T*|)`.
    pub fn w_mix(&self) -> Result<&RadiusBracket> {
        if let Some(b) = self.w_mix.get() {
            return Ok(b);
        }
        let mix = &self.abs + &self.abs_adj.scale(C64::new(0.0, 1.0));
        let b = numerical_radius(&mix, self.tol)?;
        Ok(self.w_mix.get_or_init(|| b))
    }

    /// Bracket of `w(|T||T*|)`.
    pub fn w_product(&self) -> Result<&RadiusBracket> {
        if let Some(b) = self.w_product.get() {
            return Ok(b);
        }
        let b = numerical_radius(&(&self.abs * &self.abs_adj), self.tol)?;
        Ok(self.w_product.get_or_init(|| b))
    }

    /// `|T|^{2r}`.
    fn abs_power(&self, r: f64) -> Result<ComplexMatrix> {
        if r == 1.0 {
            Ok(self.gram.clone())
        } else {
            psd_power_from_eig(&self.gram_eig, r)
        }
    }

    /// `|T*|^{2r}`.
    fn abs_adj_power(&self, r: f64) -> Result<ComplexMatrix> {
        if r == 1.0 {
            Ok(self.gram_adj.clone())
        } else {
            psd_power_from_eig(&self.gram_adj_eig, r)
        }
    }

    /// Upper bound on `‖T‖_α²` (hence on `w²`) for `f(t) = t^r`, `g(t) = t^{1−r}`:
    /// `‖(α/4)(|T|^{4r} + |T*|^{4(1−r)}) + (1−α)|T|²‖ + (α/2)‖Re(|T|^{2r}|T*|^{2(1−r)})‖`.
    pub fn th1(&self, alpha: f64, r: f64) -> Result<f64> {
        check_unit(Error::BadAlpha, alpha)?;
        check_unit(Error::BadExponent, r)?;
        let f2 = self.abs_power(r)?;
        let g2 = self.abs_adj_power(1.0 - r)?;
        let quartic = (&(&f2 * &f2) + &(&g2 * &g2)).hermitian_part();
        let first = quartic.combine(alpha / 4.0, &self.gram, 1.0 - alpha);
        let cross = (&f2 * &g2).hermitian_part();
        Ok(hermitian_norm(&first)? + 0.5 * alpha * hermitian_norm(&cross)?)
    }

    /// `‖(1−3α/4)|T|² + (α/4)|T*|²‖ + (α/2)‖Re(|T||T*|)‖`.
    pub fn gamma_objective(&self, alpha: f64) -> Result<f64> {
        let m = self.gram.combine(1.0 - 0.75 * alpha, &self.gram_adj, 0.25 * alpha);
        Ok(hermitian_norm(&m)? + 0.5 * alpha * hermitian_norm(&self.re_abs_product)?)
    }

    /// `‖(1−3α/4)|T*|² + (α/4)|T|²‖ + (α/2)‖Re(|T||T*|)‖`.
    pub fn delta_objective(&self, alpha: f64) -> Result<f64> {
        let m = self.gram_adj.combine(1.0 - 0.75 * alpha, &self.gram, 0.25 * alpha);
        Ok(hermitian_norm(&m)? + 0.5 * alpha * hermitian_norm(&self.re_abs_product)?)
    }

    /// `γ`, `δ` and their minimizing `α`.
    pub fn gamma_delta(&self) -> Result<GammaDelta> {
        let g = golden_section_min(|a| self.gamma_objective(a), 0.0, 1.0, GOLDEN_TOL)?;
        let d = golden_section_min(|a| self.delta_objective(a), 0.0, 1.0, GOLDEN_TOL)?;
        Ok(GammaDelta {
            gamma: g.value.max(0.0).sqrt(),
            delta: d.value.max(0.0).sqrt(),
            alpha_gamma: g.arg,
            alpha_delta: d.arg,
        })
    }

    /// `‖α|T|² + (1−α)|T*|²‖`.
    pub fn pp0_objective(&self, alpha: f64) -> Result<f64> {
        hermitian_norm(&self.gram.combine(alpha, &self.gram_adj, 1.0 - alpha))
    }

    /// `min{‖α|T|² + (1−α)|T*|²‖, ‖α|T*|² + (1−α)|T|²‖}`.
    pub fn th2(&self, alpha: f64) -> Result<f64> {
        check_unit(Error::BadAlpha, alpha)?;
        Ok(self.pp0_objective(alpha)?.min(self.pp0_objective(1.0 - alpha)?))
    }

    pub fn pp0_min(&self) -> Result<Minimum> {
        golden_section_min(|a| self.pp0_objective(a), 0.0, 1.0, GOLDEN_TOL)
    }

    fn buzano_common(&self, alpha: f64, w_mix: f64, w_product: f64) -> f64 {
        0.25 * alpha * (w_mix * w_mix + w_product)
    }

    /// `‖(1−7α/8)|T|² + (α/8)|T*|²‖`.
    fn th3_norm(&self, alpha: f64) -> Result<f64> {
        hermitian_norm(&self.gram.combine(1.0 - 0.875 * alpha, &self.gram_adj, 0.125 * alpha))
    }

    /// `‖(1−7α/8)|T*|² + (α/8)|T|²‖`.
    fn cor3_norm(&self, alpha: f64) -> Result<f64> {
        hermitian_norm(&self.gram_adj.combine(1.0 - 0.875 * alpha, &self.gram, 0.125 * alpha))
    }

    fn th3_family_with(&self, alpha: f64, w_mix: f64, w_product: f64) -> Result<Th3Family> {
        check_unit(Error::BadAlpha, alpha)?;
        let common = self.buzano_common(alpha, w_mix, w_product);
        let (n3, nc3) = (self.th3_norm(alpha)?, self.cor3_norm(alpha)?);
        Ok(Th3Family {
            th3: common + n3,
            cor3: common + nc3,
            cor4: common + n3.min(nc3),
        })
    }

    /// The Buzano-type bounds on `‖T‖_α²`, with the radius terms taken at the
    /// upper end of their brackets so the results stay upper bounds.
    pub fn th3_family(&self, alpha: f64) -> Result<Th3Family> {
        let (wm, wp) = (self.w_mix()?.upper, self.w_product()?.upper);
        self.th3_family_with(alpha, wm, wp)
    }

    /// Same expressions with the radius terms at the lower end of their
    /// brackets: never above the exact values, for one-sided comparisons.
    pub fn th3_family_below(&self, alpha: f64) -> Result<Th3Family> {
        let (wm, wp) = (self.w_mix()?.lower, self.w_product()?.lower);
        self.th3_family_with(alpha, wm, wp)
    }

    /// Minimizes `TH3` and `COR3` over `α`; `COR4` is the smaller of the two.
    pub fn th3_family_min(&self) -> Result<(Minimum, Minimum)> {
        let (wm, wp) = (self.w_mix()?.upper, self.w_product()?.upper);
        let th3 = golden_section_min(
            |a| Ok(self.buzano_common(a, wm, wp) + self.th3_norm(a)?),
            0.0,
            1.0,
            GOLDEN_TOL,
        )?;
        let cor3 = golden_section_min(
            |a| Ok(self.buzano_common(a, wm, wp) + self.cor3_norm(a)?),
            0.0,
            1.0,
            GOLDEN_TOL,
        )?;
        Ok((th3, cor3))
    }

    pub fn kittaneh_sum(&self) -> Result<f64> {
        Ok(0.5 * hermitian_norm(&(&self.gram + &self.gram_adj))?)
    }

    pub fn kittaneh_moduli(&self) -> Result<f64> {
        Ok(0.5 * hermitian_norm(&(&self.abs + &self.abs_adj))?)
    }

    pub fn classics(&self) -> Result<Classics> {
        Ok(Classics {
            eqn5: self.th3_family(1.0)?.th3,
            kittaneh_sum: self.kittaneh_sum()?,
            kittaneh_moduli: self.kittaneh_moduli()?,
        })
    }

    /// `‖α|T| + (1−α)|T*|‖`.
    pub fn moduli_mix_norm(&self, alpha: f64) -> Result<f64> {
        hermitian_norm(&self.abs.combine(alpha, &self.abs_adj, 1.0 - alpha))
    }

    /// `‖α|T| + (1−α)|T*|‖·‖T‖`, an upper bound on `w²`.
    pub fn th4(&self, alpha: f64) -> Result<f64> {
        check_unit(Error::BadAlpha, alpha)?;
        Ok(self.moduli_mix_norm(alpha)? * self.norm)
    }

    pub fn impr1(&self) -> Result<Impr1> {
        if self.norm == 0.0 {
            return Ok(Impr1 {
                inner_min: 0.0,
                alpha: 0.5,
                impr1: 0.0,
            });
        }
        let m = golden_section_min(|a| self.moduli_mix_norm(a), 0.0, 1.0, GOLDEN_TOL)?;
        Ok(Impr1 {
            inner_min: m.value,
            alpha: m.arg,
            impr1: (m.value * self.norm).max(0.0).sqrt(),
        })
    }

    pub fn lower_general(&self) -> Result<LowerGeneral> {
        let (re, im) = cartesian_parts(&self.t)?;
        let low1 = hermitian_norm(&re)?.max(hermitian_norm(&im)?);
        let plus = hermitian_norm(&(&re + &im))?;
        let minus = hermitian_norm(&(&re - &im))?;
        Ok(LowerGeneral {
            low1,
            low4: plus.max(minus) / std::f64::consts::SQRT_2,
        })
    }

    pub fn refinement_chain(&self) -> Result<RefinementChain> {
        let gd = self.gamma_delta()?;
        let quarter = 0.25 * hermitian_norm(&(&self.gram + &self.gram_adj))?;
        Ok(RefinementChain {
            min_gamma_delta_sq: (gd.gamma * gd.gamma).min(gd.delta * gd.delta),
            middle: quarter + 0.5 * hermitian_norm(&self.re_abs_product)?,
            outer: quarter + 0.5 * self.w_product()?.upper,
        })
    }

    /// Evaluates every catalog entry against a fresh bracket of `w(T)`.
    pub fn report(&self) -> Result<BoundReport> {
        let w_bracket = numerical_radius(&self.t, self.tol)?;
        let mut entries = Vec::with_capacity(BoundId::ALL.len());

        let mut th1_best: Option<(f64, f64)> = None;
        for r in R_GRID {
            let v = self.th1(1.0, r)?;
            if th1_best.is_none_or(|(b, _)| v < b) {
                th1_best = Some((v, r));
            }
        }
        let (th1, r_at) = th1_best.expect("non-empty exponent grid");
        entries.push(BoundValue::new(BoundId::Th1, th1).at_r(r_at));

        let gd = self.gamma_delta()?;
        entries.push(BoundValue::new(BoundId::Cor1Gamma, gd.gamma).at_alpha(gd.alpha_gamma));
        entries.push(BoundValue::new(BoundId::Cor1Delta, gd.delta).at_alpha(gd.alpha_delta));
        let (cor1, cor1_alpha) = if gd.gamma <= gd.delta {
            (gd.gamma, gd.alpha_gamma)
        } else {
            (gd.delta, gd.alpha_delta)
        };
        entries.push(BoundValue::new(BoundId::Cor1Min, cor1).at_alpha(cor1_alpha));

        entries.push(BoundValue::new(BoundId::Th2, self.th2(0.5)?));
        let pp0 = self.pp0_min()?;
        entries.push(BoundValue::new(BoundId::Pp0, pp0.value).at_alpha(pp0.arg));

        let (th3, cor3) = self.th3_family_min()?;
        entries.push(BoundValue::new(BoundId::Th3, th3.value).at_alpha(th3.arg));
        entries.push(BoundValue::new(BoundId::Cor3, cor3.value).at_alpha(cor3.arg));
        let cor4 = if th3.value <= cor3.value { th3 } else { cor3 };
        entries.push(BoundValue::new(BoundId::Cor4, cor4.value).at_alpha(cor4.arg));

        let classics = self.classics()?;
        entries.push(BoundValue::new(BoundId::Eqn5, classics.eqn5));
        entries.push(BoundValue::new(BoundId::KittanehSum, classics.kittaneh_sum));
        entries.push(BoundValue::new(BoundId::KittanehModuli, classics.kittaneh_moduli));

        entries.push(BoundValue::new(BoundId::Th4, self.th4(0.5)?));
        let impr1 = self.impr1()?;
        entries.push(BoundValue::new(BoundId::Impr1, impr1.impr1).at_alpha(impr1.alpha));

        let low = self.lower_general()?;
        entries.push(BoundValue::new(BoundId::Low1, low.low1));
        entries.push(BoundValue::new(BoundId::Low4, low.low4));

        let tightest_upper = tightest(&entries, true);
        let tightest_lower = tightest(&entries, false);
        Ok(BoundReport {
            w_bracket,
            norm: self.norm,
            entries,
            tightest_upper,
            tightest_lower,
        })
    }
}

/// Smallest upper (largest lower) bound on the `w` scale; ties go to the
/// lexicographically smallest id. `COR1_GAMMA` and `COR1_DELTA` are the
/// components of `COR1_MIN` and do not compete with it.
fn tightest(entries: &[BoundValue], upper: bool) -> BoundId {
    let mut best: Option<&BoundValue> = None;
    for e in entries {
        if e.kind.is_upper() != upper || matches!(e.id, BoundId::Cor1Gamma | BoundId::Cor1Delta) {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => {
                let (v, bv) = (e.on_radius_scale(), b.on_radius_scale());
                let strictly = if upper { v < bv } else { v > bv };
                strictly || (v == bv && e.id.as_str() < b.id.as_str())
            }
        };
        if better {
            best = Some(e);
        }
    }
    best.expect("catalog has upper and lower entries").id
}

pub fn bound_th1(t: &ComplexMatrix, alpha: f64, r: f64) -> Result<f64> {
    BoundContext::new(t, DEFAULT_RADIUS_TOL)?.th1(alpha, r)
}

pub fn gamma_delta(t: &ComplexMatrix) -> Result<GammaDelta> {
    BoundContext::new(t, DEFAULT_RADIUS_TOL)?.gamma_delta()
}

pub fn bound_th2(t: &ComplexMatrix, alpha: f64) -> Result<f64> {
    BoundContext::new(t, DEFAULT_RADIUS_TOL)?.th2(alpha)
}

/// `min_α ‖α|T|² + (1−α)|T*|²‖` and its minimizer.
pub fn pp0_min(t: &ComplexMatrix) -> Result<(f64, f64)> {
    let m = BoundContext::new(t, DEFAULT_RADIUS_TOL)?.pp0_min()?;
    Ok((m.value, m.arg))
}

pub fn bound_th3_family(t: &ComplexMatrix, alpha: f64) -> Result<Th3Family> {
    BoundContext::new(t, DEFAULT_RADIUS_TOL)?.th3_family(alpha)
}

pub fn eqn5_and_classics(t: &ComplexMatrix) -> Result<Classics> {
    BoundContext::new(t, DEFAULT_RADIUS_TOL)?.classics()
}

pub fn bound_th4_impr1(t: &ComplexMatrix) -> Result<Impr1> {
    BoundContext::new(t, DEFAULT_RADIUS_TOL)?.impr1()
}

pub fn lower_general(t: &ComplexMatrix) -> Result<LowerGeneral> {
    BoundContext::new(t, DEFAULT_RADIUS_TOL)?.lower_general()
}

pub fn bound_report(t: &ComplexMatrix, tol: f64) -> Result<BoundReport> {
    BoundContext::new(t, tol)?.report()
}
