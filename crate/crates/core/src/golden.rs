//! Golden-section search for convex functions of one variable.

use crate::error::Result;

/// Default bracket length at which the search stops.
pub const GOLDEN_TOL: f64 = 1e-10;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub arg: f64,
    pub value: f64,
}

/// Minimizes `f` over `[lo, hi]`.
///
/// For convex `f` the returned value is within rounding of the true minimum;
/// the endpoints are always evaluated, so boundary minima are found exactly.
/// Ties keep the earliest evaluated point.
pub fn golden_section_min<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<Minimum>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let mut best = Minimum {
        arg: a,
        value: f(a)?,
    };
    let consider = |x: f64, v: f64, best: &mut Minimum| {
        if v < best.value {
            *best = Minimum { arg: x, value: v };
        }
    };
    let fb = f(b)?;
    consider(b, fb, &mut best);

    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    consider(x1, f1, &mut best);
    consider(x2, f2, &mut best);

    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
            consider(x1, f1, &mut best);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
            consider(x2, f2, &mut best);
        }
    }
    Ok(best)
}
