//! Closed-form reproductions of the worked examples on the 2×2 Jordan block
//! `[[1,0],[1,1]]` and the weighted shift `[[0,1,0],[0,0,2],[0,0,0]]`.

use std::fmt::Write as _;

use numrad_core::ab_normal::ab_certify;
use numrad_core::bounds::{BoundContext, DEFAULT_RADIUS_TOL};
use numrad_core::linalg::DEFAULT_RANK_TOL;
use numrad_core::ComplexMatrix;
use serde::Serialize;

use crate::ensembles::weighted_shift;
use crate::error::Result;
use crate::render::Format;

/// Agreement required between computed values and closed forms.
pub const CLOSED_FORM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `|computed − expected| ≤ 1e-9`.
    Equal,
    /// `computed < expected` strictly.
    Less,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseRow {
    pub matrix: &'static str,
    pub quantity: &'static str,
    pub computed: f64,
    pub relation: Relation,
    pub expected: f64,
    pub expected_form: &'static str,
    pub pass: bool,
}

impl CaseRow {
    fn new(
        matrix: &'static str,
        quantity: &'static str,
        computed: f64,
        relation: Relation,
        expected: f64,
        expected_form: &'static str,
    ) -> Self {
        let pass = match relation {
            Relation::Equal => (computed - expected).abs() <= CLOSED_FORM_TOL,
            Relation::Less => computed < expected,
        };
        Self {
            matrix,
            quantity,
            computed,
            relation,
            expected,
            expected_form,
            pass,
        }
    }
}

pub fn jordan_block() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 1.0, 1.0]).expect("fixed 2x2")
}

pub fn shift_one_two() -> ComplexMatrix {
    weighted_shift(&[1.0, 2.0])
}

pub fn reference_rows() -> Result<Vec<CaseRow>> {
    use Relation::*;
    let s5 = 5f64.sqrt();
    let mut rows = Vec::new();

    let t3 = BoundContext::new(&shift_one_two(), DEFAULT_RADIUS_TOL)?;
    let gd = t3.gamma_delta()?;
    let gamma_sq = gd.gamma * gd.gamma;
    let min_sq = gamma_sq.min(gd.delta * gd.delta);
    let middle = t3.th1(1.0, 0.5)?;
    rows.push(CaseRow::new("T3", "gamma_sq", gamma_sq, Equal, 28.0 / 13.0, "28/13"));
    rows.push(CaseRow::new("T3", "delta", gd.delta, Equal, 1.5, "3/2"));
    rows.push(CaseRow::new("T3", "th1(1, 1/2)", middle, Equal, 2.25, "9/4"));
    rows.push(CaseRow::new("T3", "min{gamma_sq, delta_sq}", min_sq, Less, middle, "th1(1, 1/2)"));
    rows.push(CaseRow::new("T3", "min{gamma_sq, delta_sq}", min_sq, Less, 2.25, "9/4"));

    let i = t3.impr1()?;
    rows.push(CaseRow::new("T3", "inner_min", i.inner_min, Equal, 4.0 / 3.0, "4/3"));
    rows.push(CaseRow::new("T3", "impr1", i.impr1, Equal, (8.0f64 / 3.0).sqrt(), "sqrt(8/3)"));
    rows.push(CaseRow::new("T3", "norm", t3.norm(), Equal, 2.0, "2"));
    rows.push(CaseRow::new("T3", "impr1", i.impr1, Less, t3.norm(), "norm"));

    let c = ab_certify(&jordan_block(), DEFAULT_RANK_TOL)?;
    rows.push(CaseRow::new("T2", "alpha_sq", c.alpha_best.powi(2), Equal, (3.0 - s5) / 2.0, "(3-sqrt5)/2"));
    rows.push(CaseRow::new("T2", "beta_sq", c.beta_best.powi(2), Equal, (3.0 + s5) / 2.0, "(3+sqrt5)/2"));
    Ok(rows)
}

#[derive(Serialize)]
struct RowsJson<'a> {
    all_pass: bool,
    rows: &'a [CaseRow],
}

pub fn render_rows(rows: &[CaseRow], format: Format) -> String {
    let all_pass = rows.iter().all(|r| r.pass);
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&RowsJson { all_pass, rows }).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Table | Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:<4} {:<26} {:>18}  {:<2} {:>18} {:<14} result",
                "", "quantity", "computed", "", "expected", "closed form"
            );
            for r in rows {
                let rel = match r.relation {
                    Relation::Equal => "=",
                    Relation::Less => "<",
                };
                let _ = writeln!(
                    s,
                    "{:<4} {:<26} {:>18.13}  {:<2} {:>18.13} {:<14} {}",
                    r.matrix,
                    r.quantity,
                    r.computed,
                    rel,
                    r.expected,
                    r.expected_form,
                    if r.pass { "PASS" } else { "FAIL" }
                );
            }
            let _ = writeln!(s, "{}", if all_pass { "all rows pass" } else { "MISMATCH" });
            s
        }
    }
}
