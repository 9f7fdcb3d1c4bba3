//! Exact pipeline properties over the public API.

mod common;

use gegentropy::{
    assembly_weights, beta_vector, entropy_exact, integrals, EntropyJson, GegenbauerSpec,
    Precision, Route,
};
use proptest::prelude::*;

#[test]
fn reference_tables_render_exactly() {
    for (lambda, rows) in [(4, &common::LAMBDA4), (5, &common::LAMBDA5)] {
        for &(n, text, _) in rows.iter() {
            let e = entropy_exact(GegenbauerSpec::new(lambda, n)).unwrap();
            assert_eq!(e.to_string(), text, "lambda={lambda} n={n}");
        }
    }
}

#[test]
fn lambda_zero_requires_normalization() {
    assert!(entropy_exact(GegenbauerSpec::new(0, 3)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routes_agree(lambda in 1u32..8, n in 0u32..25) {
        let spec = GegenbauerSpec::new(lambda, n);
        let base = integrals(spec, Route::SeriesLog).unwrap();
        prop_assert_eq!(base.values.len(), (n + lambda + 1) as usize);
        for route in [Route::FaaDiBruno, Route::StandardRep] {
            prop_assert_eq!(base.first_mismatch(&integrals(spec, route).unwrap()), None);
        }
    }

    #[test]
    fn beta_matches_collected_weights(lambda in 1u32..8, n in 0u32..25) {
        let spec = GegenbauerSpec::new(lambda, n);
        let beta = beta_vector(spec).unwrap();
        let w = assembly_weights(spec).unwrap();
        for (m, wm) in w.iter().enumerate().skip(1) {
            prop_assert_eq!(&beta.get(m), wm);
        }
    }

    #[test]
    fn json_round_trip(lambda in 1u32..7, n in 0u32..20, places in 0u32..40) {
        let e = entropy_exact(GegenbauerSpec::new(lambda, n)).unwrap();
        let text = e.to_json(Precision::DEFAULT, places);
        let parsed: EntropyJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(parsed.to_exact().unwrap(), e);
        prop_assert_eq!(serde_json::to_string(&parsed).unwrap(), text);
    }
}
