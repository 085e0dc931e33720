#![allow(dead_code)]

use numrad_core::linalg::herm_eig;
use numrad_core::{ComplexMatrix, C64};
use proptest::prelude::*;

pub fn t2() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 1.0, 1.0]).unwrap()
}

pub fn t3() -> ComplexMatrix {
    ComplexMatrix::from_real(3, 3, &[0.0, 1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0]).unwrap()
}

fn entries(n: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n * n)
        .prop_map(|v| v.into_iter().map(|(a, b)| C64::new(a, b)).collect())
}

/// Square matrix with entries uniform in the unit box.
pub fn square(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = ComplexMatrix> {
    dims.prop_flat_map(|n| entries(n).prop_map(move |d| ComplexMatrix::new(n, n, d).unwrap()))
}

pub fn unit(n: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n).prop_filter_map("zero vector", |v| {
        let v: Vec<C64> = v.into_iter().map(|(a, b)| C64::new(a, b)).collect();
        numrad_core::linalg::normalized(&v)
    })
}

/// Unitary from the eigenbasis of the Hermitian part of `m`.
pub fn unitary_from(m: &ComplexMatrix) -> ComplexMatrix {
    herm_eig(&m.hermitian_part(), 1e-10).unwrap().basis
}

/// `U diag(d) U*` with the unitary taken from `seed_matrix`.
pub fn normal_with(seed_matrix: &ComplexMatrix, d: &[C64]) -> ComplexMatrix {
    let u = unitary_from(seed_matrix);
    &(&u * &ComplexMatrix::diag(d)) * &u.adjoint()
}

/// Normal matrix together with its eigenvalues.
pub fn normal(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (ComplexMatrix, Vec<C64>)> {
    dims.prop_flat_map(|n| (entries(n), prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), n)))
        .prop_map(|(e, d)| {
            let n = d.len();
            let seed = ComplexMatrix::new(n, n, e).unwrap();
            let d: Vec<C64> = d.into_iter().map(|(a, b)| C64::new(a, b)).collect();
            (normal_with(&seed, &d), d)
        })
}

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
