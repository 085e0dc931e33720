use numrad::ensembles::{random_matrix, stream_rng, Ensemble};
use numrad::io::{parse_matrix, render_json, render_text};
use numrad_core::{ComplexMatrix, C64};
use proptest::prelude::*;

fn bit_identical(a: &ComplexMatrix, b: &ComplexMatrix) -> bool {
    a.rows() == b.rows()
        && a.cols() == b.cols()
        && a.entries().iter().zip(b.entries()).all(|(x, y)| {
            x.re.to_bits() == y.re.to_bits() && x.im.to_bits() == y.im.to_bits()
        })
}

fn finite() -> impl Strategy<Value = f64> {
    prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO
}

fn matrix() -> impl Strategy<Value = ComplexMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(n, m)| {
        prop::collection::vec((finite(), finite()), n * m).prop_map(move |v| {
            ComplexMatrix::new(n, m, v.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn arbitrary_finite_matrices_round_trip(m in matrix()) {
        prop_assert!(bit_identical(&parse_matrix(&render_json(&m)).unwrap(), &m));
        prop_assert!(bit_identical(&parse_matrix(&render_text(&m)).unwrap(), &m));
    }
}

#[test]
fn fuzz_ensembles_round_trip() {
    for e in Ensemble::ALL {
        for n in 1..=6 {
            for k in 0..10 {
                let m = random_matrix(e, n, &mut stream_rng(42, k)).unwrap();
                assert!(bit_identical(&parse_matrix(&render_json(&m)).unwrap(), &m));
                assert!(bit_identical(&parse_matrix(&render_text(&m)).unwrap(), &m));
            }
        }
    }
}
