mod common;

use common::square;
use numrad_core::linalg::{
    cartesian_parts, herm_eig, hermitian_norm, polar_moduli, psd_power, singular_values,
    spectral_norm,
};
use numrad_core::{ComplexMatrix, C64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn eig_reconstruction_and_unitarity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=8 {
        for _ in 0..100 {
            let m = ComplexMatrix::from_fn(n, n, |_, _| {
                C64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))
            });
            let h = m.hermitian_part();
            let eig = herm_eig(&h, 1e-10).unwrap();
            assert!(eig.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
            let rebuilt = eig.reconstruct_with(|l| l);
            let err = (&h - &rebuilt).frobenius_norm();
            assert!(err <= 1e-10 * h.frobenius_norm().max(1.0), "n={n} err={err:e}");
            let u = &eig.basis;
            let defect = (&(&u.adjoint() * u) - &ComplexMatrix::identity(n)).frobenius_norm();
            assert!(defect <= 1e-10, "n={n} unitarity {defect:e}");
            // Trace is the eigenvalue sum.
            let tr: f64 = eig.eigenvalues.iter().sum();
            assert!((tr - h.trace().re).abs() <= 1e-10 * h.frobenius_norm().max(1.0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn norm_is_adjoint_invariant(m in square(1..=8)) {
        let a = spectral_norm(&m).unwrap();
        let b = spectral_norm(&m.adjoint()).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a.max(1e-300));
    }

    #[test]
    fn norm_matches_frobenius_sandwich(m in square(1..=8)) {
        // ‖M‖ ≤ ‖M‖_F ≤ √n‖M‖
        let s = spectral_norm(&m).unwrap();
        let f = m.frobenius_norm();
        prop_assert!(s <= f * (1.0 + 1e-12));
        prop_assert!(f <= (m.rows() as f64).sqrt() * s * (1.0 + 1e-12));
    }

    #[test]
    fn moduli_share_singular_values(m in square(2..=7)) {
        let (abs, abs_adj) = polar_moduli(&m).unwrap();
        let e1 = herm_eig(&abs, 1e-10).unwrap().eigenvalues;
        let e2 = herm_eig(&abs_adj, 1e-10).unwrap().eigenvalues;
        let sv = singular_values(&m).unwrap();
        for ((a, b), s) in e1.iter().zip(&e2).zip(&sv) {
            prop_assert!(*a >= 0.0 && *b >= 0.0);
            prop_assert!((a - b).abs() <= 1e-8);
            prop_assert!((a - s).abs() <= 1e-8);
        }
        // |M|² = M*M
        let sq = &abs * &abs;
        let gram = &m.adjoint() * &m;
        prop_assert!((&sq - &gram).frobenius_norm() <= 1e-10 * gram.frobenius_norm().max(1.0));
    }

    #[test]
    fn cartesian_parts_are_dominated(m in square(1..=8)) {
        let (re, im) = cartesian_parts(&m).unwrap();
        let n = spectral_norm(&m).unwrap();
        prop_assert!(hermitian_norm(&re).unwrap() <= n + 1e-12);
        prop_assert!(hermitian_norm(&im).unwrap() <= n + 1e-12);
        let back = &re + &im.scale(C64::new(0.0, 1.0));
        prop_assert!((&back - &m).frobenius_norm() <= 1e-13 * m.frobenius_norm().max(1.0));
    }

    #[test]
    fn psd_powers_compose(m in square(2..=6), r in 0.05..0.95f64) {
        let p = &m.adjoint() * &m;
        let a = psd_power(&p, r).unwrap();
        let b = psd_power(&p, 1.0 - r).unwrap();
        let prod = (&a * &b).hermitian_part();
        prop_assert!((&prod - &p).frobenius_norm() <= 1e-8 * p.frobenius_norm().max(1.0));
    }
}
