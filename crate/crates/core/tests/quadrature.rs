//! Quadrature oracle behavior against exact values.

use gegentropy::{
    entropy_exact, entropy_quadrature, norm_quadrature, normalized_entropy_exact, BigFloat,
    GegenbauerSpec, Precision, QuadratureConfig,
};
use proptest::prelude::*;

fn abs_diff(a: &BigFloat, b: &BigFloat) -> f64 {
    (a - b).abs().to_f64()
}

#[test]
fn orthonormal_family_has_unit_norm() {
    let cfg = QuadratureConfig::with_tolerance(1e-20);
    let one = BigFloat::from_i64_with(1, Precision::MIN_ORACLE);
    for lambda in 0..=4 {
        for n in [0, 1, 2, 5, 9] {
            let spec = GegenbauerSpec::new(lambda, n);
            let norm = norm_quadrature(spec, &cfg).unwrap();
            assert!(abs_diff(&norm, &one) < 1e-18, "{spec}: {norm}");
        }
    }
}

#[test]
fn chebyshev_t_normalized_entropy() {
    let cfg = QuadratureConfig::default();
    let prec = Precision::digits(cfg.working_precision);
    for n in 1..=6 {
        let spec = GegenbauerSpec::new(0, n);
        let q = gegentropy::normalized_entropy_quadrature(spec, &cfg).unwrap();
        let exact = normalized_entropy_exact(spec).unwrap().eval(prec);
        assert!(abs_diff(&q, &exact) < 1e-10, "{spec}");
    }
}

#[test]
fn working_precision_below_minimum_is_rejected() {
    let cfg = QuadratureConfig {
        working_precision: 30,
        ..QuadratureConfig::default()
    };
    assert!(entropy_quadrature(GegenbauerSpec::new(2, 2), &cfg).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Tightening the tolerance moves the estimate by less than the looser
    /// tolerance, and both stay within it of the exact value.
    #[test]
    fn halving_tolerance_is_stable(lambda in 1u32..6, n in 0u32..12, exp in 8i32..14) {
        let tol = 10f64.powi(-exp);
        let spec = GegenbauerSpec::new(lambda, n);
        let loose = entropy_quadrature(spec, &QuadratureConfig::with_tolerance(tol)).unwrap();
        let tight = entropy_quadrature(spec, &QuadratureConfig::with_tolerance(tol / 2.0)).unwrap();
        let exact = entropy_exact(spec).unwrap().eval(Precision::MIN_ORACLE);
        prop_assert!(abs_diff(&loose, &tight) < tol);
        prop_assert!(abs_diff(&tight, &exact) < tol);
    }

    /// The orthonormal entropy under a probability weight is never positive.
    #[test]
    fn normalized_entropy_is_nonpositive(lambda in 0u32..7, n in 0u32..30) {
        let spec = GegenbauerSpec::new(lambda, n);
        let v = normalized_entropy_exact(spec).unwrap().eval(Precision::DEFAULT);
        prop_assert!(v.to_f64() <= 0.0);
    }
}
