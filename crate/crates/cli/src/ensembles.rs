//! Random matrix ensembles for fuzzing.
//!
//! Every draw consumes a caller-supplied ChaCha stream, so a trial is fully
//! determined by `(seed, stream)` regardless of execution order.

use std::fmt;
use std::str::FromStr;

use numrad_core::linalg::{inner, vec_norm};
use numrad_core::{ComplexMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ensemble {
    Ginibre,
    Normal,
    NilpotentShift,
    HyponormalDiag,
}

impl Ensemble {
    pub const ALL: [Ensemble; 4] = [
        Ensemble::Ginibre,
        Ensemble::Normal,
        Ensemble::NilpotentShift,
        Ensemble::HyponormalDiag,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Ensemble::Ginibre => "ginibre",
            Ensemble::Normal => "normal",
            Ensemble::NilpotentShift => "nilpotent-shift",
            Ensemble::HyponormalDiag => "hyponormal-diag",
        }
    }

    /// Stable index used to derive per-trial streams.
    pub fn id(self) -> u64 {
        self as u64
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Ensemble {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Ensemble::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| CliError::BadEnsemble(s.to_string()))
    }
}

/// ChaCha8 seeded with `seed`, positioned on `stream`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex Gaussian: real and imaginary parts N(0, ½).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn ginibre<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| complex_gaussian(rng))
}

/// Unitary Q of a Ginibre draw (modified Gram–Schmidt, positive diagonal R).
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<C64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        for q in &cols {
            let p = inner(&v, q);
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi -= p * qi;
            }
        }
        let norm = vec_norm(&v);
        // Redraw on (probability-zero) rank deficiency.
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    ComplexMatrix::from_columns(n, &cols)
}

fn conjugate(u: &ComplexMatrix, d: &ComplexMatrix) -> ComplexMatrix {
    &(u * d) * &u.adjoint()
}

pub fn normal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let u = haar_unitary(n, rng);
    let d: Vec<C64> = (0..n).map(|_| complex_gaussian(rng)).collect();
    conjugate(&u, &ComplexMatrix::diag(&d))
}

/// Matrix with `weights` on the first superdiagonal and zeros elsewhere.
pub fn weighted_shift(weights: &[f64]) -> ComplexMatrix {
    let n = weights.len() + 1;
    ComplexMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            C64::new(weights[i], 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

pub fn nilpotent_shift<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let w: Vec<f64> = (1..n)
        .map(|_| rng.sample::<f64, _>(StandardNormal).abs())
        .collect();
    weighted_shift(&w)
}

/// `T*T − TT* ⪰ 0` by construction: unitarily conjugated block diagonal of
/// 2×2 rotation-scalings `[[a, −b], [b, a]]` (plus a 1×1 block for odd `n`).
///
/// In finite dimension the trace of `T*T − TT*` vanishes, so a PSD
/// self-commutator is zero and every such matrix is normal; the blocks keep
/// the draw structurally different from [`normal`].
pub fn hyponormal_diag<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut d = ComplexMatrix::zeros(n, n);
    let mut k = 0;
    while k + 1 < n {
        let a: f64 = rng.sample(StandardNormal);
        let b: f64 = rng.sample(StandardNormal);
        d[(k, k)] = C64::new(a, 0.0);
        d[(k, k + 1)] = C64::new(-b, 0.0);
        d[(k + 1, k)] = C64::new(b, 0.0);
        d[(k + 1, k + 1)] = C64::new(a, 0.0);
        k += 2;
    }
    if k < n {
        d[(k, k)] = complex_gaussian(rng);
    }
    let u = haar_unitary(n, rng);
    conjugate(&u, &d)
}

pub fn random_matrix<R: Rng + ?Sized>(ensemble: Ensemble, n: usize, rng: &mut R) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(CliError::Usage("dimension must be at least 1".into()));
    }
    Ok(match ensemble {
        Ensemble::Ginibre => ginibre(n, rng),
        Ensemble::Normal => normal(n, rng),
        Ensemble::NilpotentShift => nilpotent_shift(n, rng),
        Ensemble::HyponormalDiag => hyponormal_diag(n, rng),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn self_commutator(t: &ComplexMatrix) -> ComplexMatrix {
        &(&t.adjoint() * t) - &(t * &t.adjoint())
    }

    #[test]
    fn normal_draws_commute_with_adjoint() {
        for n in 1..=6 {
            let t = normal(n, &mut stream_rng(1, n as u64));
            let f = t.frobenius_norm();
            assert!(self_commutator(&t).frobenius_norm() <= 1e-10 * f * f);
        }
    }

    #[test]
    fn hyponormal_draws_have_psd_self_commutator() {
        for n in 1..=6 {
            let t = hyponormal_diag(n, &mut stream_rng(2, n as u64));
            let c = self_commutator(&t);
            let eig = numrad_core::linalg::herm_eig(&c, 1e-9).unwrap();
            assert!(eig.min() >= -1e-10 * t.frobenius_norm().powi(2));
        }
    }

    #[test]
    fn haar_columns_are_orthonormal() {
        let u = haar_unitary(5, &mut stream_rng(3, 0));
        let d = (&(&u.adjoint() * &u) - &ComplexMatrix::identity(5)).frobenius_norm();
        assert!(d < 1e-12);
    }

    #[test]
    fn shift_with_weights_one_two_is_the_reference_matrix() {
        let t3 = ComplexMatrix::from_real(3, 3, &[0.0, 1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(weighted_shift(&[1.0, 2.0]), t3);
        let s = nilpotent_shift(4, &mut stream_rng(4, 0));
        for i in 0..4 {
            for j in 0..4 {
                let z = s[(i, j)];
                if j == i + 1 {
                    assert!(z.re >= 0.0 && z.im == 0.0);
                } else {
                    assert_eq!(z, C64::new(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn draws_are_deterministic_per_stream() {
        for e in Ensemble::ALL {
            let a = random_matrix(e, 4, &mut stream_rng(42, 7)).unwrap();
            let b = random_matrix(e, 4, &mut stream_rng(42, 7)).unwrap();
            let c = random_matrix(e, 4, &mut stream_rng(42, 8)).unwrap();
            assert_eq!(a, b);
            assert_ne!(a, c);
        }
    }

    #[test]
    fn ensemble_names_round_trip() {
        for e in Ensemble::ALL {
            assert_eq!(e.as_str().parse::<Ensemble>().unwrap(), e);
        }
        assert!(matches!("wishart".parse::<Ensemble>(), Err(CliError::BadEnsemble(_))));
        assert!(random_matrix(Ensemble::Ginibre, 0, &mut stream_rng(0, 0)).is_err());
    }
}
