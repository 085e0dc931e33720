//! Matrix files.
//!
//! JSON: `{"n": rows, "m": cols, "entries": [[re, im], ...]}`, row-major.
//! Text: a header line `n m`, then `n` lines of `2m` reals (re/im interleaved).
//! Both renderers print floats in shortest round-trip form, so
//! `parse_matrix(render_*(M)) == M` bit for bit.

use numrad_core::{ComplexMatrix, C64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub m: usize,
    pub entries: Vec<[f64; 2]>,
}

impl From<&ComplexMatrix> for MatrixFile {
    fn from(m: &ComplexMatrix) -> Self {
        Self {
            n: m.rows(),
            m: m.cols(),
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl MatrixFile {
    pub fn into_matrix(self) -> Result<ComplexMatrix> {
        let expected = self.n * self.m;
        if self.entries.len() != expected {
            return Err(CliError::DimensionMismatch {
                expected,
                found: self.entries.len(),
            });
        }
        let data = self.entries.into_iter().map(|[re, im]| C64::new(re, im)).collect();
        Ok(ComplexMatrix::new(self.n, self.m, data)?)
    }
}

/// Parses either format; a leading `{` selects JSON.
pub fn parse_matrix(source: &str) -> Result<ComplexMatrix> {
    if source.trim_start().starts_with('{') {
        parse_json(source)
    } else {
        parse_text(source)
    }
}

fn parse_json(source: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile = serde_json::from_str(source).map_err(|e| CliError::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    file.into_matrix()
}

/// Whitespace-separated tokens of one line with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, tok)
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, col: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| CliError::Parse {
        line,
        col,
        msg: format!("expected {what}, found {tok:?}"),
    })
}

fn parse_text(source: &str) -> Result<ComplexMatrix> {
    let mut lines = source
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines.next().ok_or(CliError::Parse {
        line: 1,
        col: 1,
        msg: "empty input".into(),
    })?;
    let head: Vec<(usize, &str)> = tokens(header).collect();
    if head.len() != 2 {
        return Err(CliError::Parse {
            line: hline,
            col: head.get(2).map_or(header.len() + 1, |t| t.0),
            msg: format!("header must be \"n m\", found {} fields", head.len()),
        });
    }
    let n: usize = parse_num(head[0].1, hline, head[0].0, "row count")?;
    let m: usize = parse_num(head[1].1, hline, head[1].0, "column count")?;

    let mut data = Vec::with_capacity(n * m);
    let mut rows = 0;
    for (lineno, line) in lines {
        if rows == n {
            return Err(CliError::DimensionMismatch {
                expected: n,
                found: rows + 1,
            });
        }
        let toks: Vec<(usize, &str)> = tokens(line).collect();
        if toks.len() != 2 * m {
            return Err(CliError::DimensionMismatch {
                expected: 2 * m,
                found: toks.len(),
            });
        }
        for pair in toks.chunks(2) {
            let re: f64 = parse_num(pair[0].1, lineno, pair[0].0, "a real number")?;
            let im: f64 = parse_num(pair[1].1, lineno, pair[1].0, "a real number")?;
            data.push(C64::new(re, im));
        }
        rows += 1;
    }
    if rows != n {
        return Err(CliError::DimensionMismatch {
            expected: n,
            found: rows,
        });
    }
    Ok(ComplexMatrix::new(n, m, data)?)
}

pub fn render_json(m: &ComplexMatrix) -> String {
    serde_json::to_string(&MatrixFile::from(m)).expect("matrix file serializes")
}

pub fn render_text(m: &ComplexMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols())
            .map(|j| format!("{} {}", m[(i, j)].re, m[(i, j)].im))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
