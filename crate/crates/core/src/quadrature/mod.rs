//! Numerical oracle for the entropy integrals.
//!
//! Integrals are taken in `θ ∈ [0, π]` with `x = cos θ`. The interval is split
//! at the zero angles of `C_n^(λ)` so every panel sees at most endpoint
//! singularities of the type `t² log t²` or `log t`, which tanh-sinh absorbs.
//! A panel that does not converge at the finest level is bisected.

mod tanh_sinh;

pub use tanh_sinh::{Estimate, TanhSinh, MAX_LEVEL, MIN_LEVEL};

use rayon::prelude::*;

use crate::exact::rational::{factorial, int};
use crate::gegenbauer::{pochhammer, zero_angles, TrigEvaluator};
use crate::{BigFloat, Error, GegenbauerSpec, Precision, Rational, Result, TrigRepresentation};

#[derive(Clone, Debug)]
pub struct QuadratureConfig {
    pub target_abs_tol: BigFloat,
    /// Decimal digits; at least 50.
    pub working_precision: u32,
    pub max_subdivision_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            target_abs_tol: BigFloat::from_f64_with(1e-10, Precision::MIN_ORACLE),
            working_precision: Precision::MIN_ORACLE.decimal_digits(),
            max_subdivision_depth: 8,
        }
    }
}

impl QuadratureConfig {
    pub fn with_tolerance(tol: f64) -> Self {
        QuadratureConfig {
            target_abs_tol: BigFloat::from_f64_with(tol, Precision::MIN_ORACLE),
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<Precision> {
        if self.working_precision < Precision::MIN_ORACLE.decimal_digits() {
            return Err(Error::invalid(format!(
                "working precision {} is below {}",
                self.working_precision,
                Precision::MIN_ORACLE.decimal_digits()
            )));
        }
        if self.target_abs_tol <= BigFloat::zero_with(Precision::MIN_ORACLE)
            || !self.target_abs_tol.is_finite()
        {
            return Err(Error::invalid("tolerance must be positive"));
        }
        Ok(Precision::digits(self.working_precision))
    }
}

/// Precomputed pieces shared by all integrands of one polynomial.
struct Integrand {
    lambda: u32,
    eval: TrigEvaluator<BigFloat>,
    one: BigFloat,
    zero: BigFloat,
}

impl Integrand {
    fn new(spec: GegenbauerSpec, prec: Precision) -> Self {
        Integrand {
            lambda: spec.lambda,
            eval: TrigRepresentation::standard(spec).evaluator(prec),
            one: BigFloat::from_i64_with(1, prec),
            zero: BigFloat::zero_with(prec),
        }
    }

    /// `(cos θ, C(cos θ)², sin^{2λ}θ)`.
    fn parts(&self, theta: &BigFloat) -> (BigFloat, BigFloat, BigFloat) {
        let c = theta.cos();
        let v = self.eval.eval_standard(&c);
        let s2 = &self.one - &c * &c;
        (c, &v * &v, s2.powi(self.lambda))
    }

    /// `y·log(y/scale)`, continuous at `y = 0`.
    fn xlogx(&self, y: &BigFloat, scale: &BigFloat) -> BigFloat {
        if *y == self.zero {
            return self.zero.clone();
        }
        y * (y / scale).ln()
    }
}

/// `T_k(c)` by the three-term recurrence.
fn chebyshev_t(k: u32, c: &BigFloat, one: &BigFloat) -> BigFloat {
    let mut prev = one.clone();
    if k == 0 {
        return prev;
    }
    let two_c = c + c;
    let mut cur = c.clone();
    for _ in 1..k {
        let next = &two_c * &cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Integrates over `[0, π]` split at the zero angles, with `tol` shared
/// equally among panels.
fn integrate_panels(
    spec: GegenbauerSpec,
    cfg: &QuadratureConfig,
    f: impl Fn(&BigFloat) -> BigFloat + Sync,
) -> Result<BigFloat> {
    let prec = cfg.validate()?;
    let rule = TanhSinh::<BigFloat>::cached(prec);
    let mut cuts = vec![BigFloat::zero_with(prec)];
    cuts.extend(zero_angles::<BigFloat>(spec, prec));
    cuts.push(BigFloat::pi(prec));
    let panels = cuts.len() - 1;
    let tol =
        cfg.target_abs_tol.with_precision(prec) / BigFloat::from_i64_with(panels as i64, prec);
    let results: Vec<Estimate<BigFloat>> = (0..panels)
        .into_par_iter()
        .map(|i| {
            adaptive(
                &rule,
                &cuts[i],
                &cuts[i + 1],
                &tol,
                cfg.max_subdivision_depth,
                &f,
            )
        })
        .collect();
    let mut total = BigFloat::zero_with(prec);
    let mut error = BigFloat::zero_with(prec);
    let mut converged = true;
    for r in results {
        total = total + r.value;
        error = error + r.error;
        converged &= r.converged;
    }
    if converged {
        Ok(total)
    } else {
        Err(Error::ToleranceNotMet {
            best: Box::new(total),
            error_estimate: error.to_f64(),
        })
    }
}

fn adaptive(
    rule: &TanhSinh<BigFloat>,
    a: &BigFloat,
    b: &BigFloat,
    tol: &BigFloat,
    depth: u32,
    f: &(impl Fn(&BigFloat) -> BigFloat + Sync),
) -> Estimate<BigFloat> {
    let est = rule.integrate(a, b, tol, f);
    if est.converged || depth == 0 {
        return est;
    }
    let prec = rule.precision();
    let two = BigFloat::from_i64_with(2, prec);
    let mid = (a + b) / &two;
    let half_tol = tol / &two;
    let (l, r) = rayon::join(
        || adaptive(rule, a, &mid, &half_tol, depth - 1, f),
        || adaptive(rule, &mid, b, &half_tol, depth - 1, f),
    );
    Estimate {
        value: l.value + r.value,
        error: l.error + r.error,
        converged: l.converged && r.converged,
    }
}

/// `E(C_n^(λ)) = −∫_0^π C² log C² sin^{2λ}θ dθ`. For `λ = 0` the weight is
/// `dθ`, i.e. `(1−x²)^{−1/2} dx`.
pub fn entropy_quadrature(spec: GegenbauerSpec, cfg: &QuadratureConfig) -> Result<BigFloat> {
    let prec = cfg.validate()?;
    let g = Integrand::new(spec, prec);
    integrate_panels(spec, cfg, |theta| {
        let (_, c2, w) = g.parts(theta);
        -(g.xlogx(&c2, &g.one) * w)
    })
}

/// `I_m = ∫_0^π cos(2mθ) log C(cos θ)² dθ`.
pub fn integral_i_quadrature(
    spec: GegenbauerSpec,
    m: u32,
    cfg: &QuadratureConfig,
) -> Result<BigFloat> {
    if m > spec.n + spec.lambda {
        return Err(Error::invalid(format!(
            "m = {m} exceeds n + lambda for {spec}"
        )));
    }
    let prec = cfg.validate()?;
    let g = Integrand::new(spec, prec);
    integrate_panels(spec, cfg, |theta| {
        let (c, c2, _) = g.parts(theta);
        if c2 == g.zero {
            return g.zero.clone();
        }
        chebyshev_t(2 * m, &c, &g.one) * c2.ln()
    })
}

/// `(K, N̂²)`: `K` normalizes the weight in `θ` to a probability measure and
/// `N̂²` is the squared norm of `C_n^(λ)` under it.
fn normalization(spec: GegenbauerSpec, prec: Precision) -> (BigFloat, BigFloat) {
    let pi = BigFloat::pi(prec);
    if spec.lambda == 0 {
        let norm2 = if spec.n == 0 {
            int(1)
        } else {
            Rational::new(1.into(), 2.into())
        };
        return (
            BigFloat::from_i64_with(1, prec) / pi,
            BigFloat::from_rational(&norm2, prec),
        );
    }
    let (l, n) = (spec.lambda as u64, spec.n as u64);
    let k = Rational::from_integer(
        num_bigint::BigInt::from(4u32).pow(l as u32) * factorial(l) * factorial(l),
    ) / Rational::from_integer(factorial(2 * l));
    let norm2 = int(l as i64) * pochhammer(&int(2 * l as i64), spec.n)
        / Rational::from_integer(factorial(n) * (n + l));
    (
        BigFloat::from_rational(&k, prec) / pi,
        BigFloat::from_rational(&norm2, prec),
    )
}

/// `E(Ĉ_n^(λ)) = −∫ Ĉ² log Ĉ² ŵ_λ dx` with `Ĉ` orthonormal and `ŵ_λ` a
/// probability weight.
pub fn normalized_entropy_quadrature(
    spec: GegenbauerSpec,
    cfg: &QuadratureConfig,
) -> Result<BigFloat> {
    let prec = cfg.validate()?;
    let g = Integrand::new(spec, prec);
    let (k, norm2) = normalization(spec, prec);
    let scale = &k / &norm2;
    integrate_panels(spec, cfg, |theta| {
        let (_, c2, w) = g.parts(theta);
        -(&scale * g.xlogx(&c2, &norm2) * w)
    })
}

/// `∫ Ĉ² ŵ_λ dx`, which is 1 for an orthonormal family.
pub fn norm_quadrature(spec: GegenbauerSpec, cfg: &QuadratureConfig) -> Result<BigFloat> {
    let prec = cfg.validate()?;
    let g = Integrand::new(spec, prec);
    let (k, norm2) = normalization(spec, prec);
    let scale = &k / &norm2;
    integrate_panels(spec, cfg, |theta| {
        let (_, c2, w) = g.parts(theta);
        &scale * c2 * w
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(v: &BigFloat, want: f64, tol: f64) -> bool {
        (v.to_f64() - want).abs() < tol
    }

    #[test]
    fn chebyshev_u_entropy() {
        let cfg = QuadratureConfig::default();
        let v = entropy_quadrature(GegenbauerSpec::new(1, 3), &cfg).unwrap();
        assert!(close(&v, -3.0 * std::f64::consts::PI / 8.0, 1e-10), "{v}");
    }

    #[test]
    fn chebyshev_t_normalized() {
        let cfg = QuadratureConfig::default();
        let v = normalized_entropy_quadrature(GegenbauerSpec::new(0, 5), &cfg).unwrap();
        assert!(close(&v, std::f64::consts::LN_2 - 1.0, 1e-10), "{v}");
        let v = normalized_entropy_quadrature(GegenbauerSpec::new(0, 0), &cfg).unwrap();
        assert!(close(&v, 0.0, 1e-10));
    }

    #[test]
    fn integrals() {
        let cfg = QuadratureConfig::default();
        let pi = std::f64::consts::PI;
        let v = integral_i_quadrature(GegenbauerSpec::new(1, 2), 1, &cfg).unwrap();
        assert!(close(&v, pi, 1e-10), "{v}");
        let v = integral_i_quadrature(GegenbauerSpec::new(3, 0), 0, &cfg).unwrap();
        assert!(close(&v, 0.0, 1e-10), "{v}");
        let v = integral_i_quadrature(GegenbauerSpec::new(2, 1), 3, &cfg).unwrap();
        assert!(close(&v, pi / 3.0, 1e-10), "{v}");
        assert!(integral_i_quadrature(GegenbauerSpec::new(2, 1), 4, &cfg).is_err());
    }

    #[test]
    fn normalized_values() {
        let cfg = QuadratureConfig::default();
        let v = normalized_entropy_quadrature(GegenbauerSpec::new(1, 4), &cfg).unwrap();
        assert!(close(&v, -0.8, 1e-10), "{v}");
        let v = normalized_entropy_quadrature(GegenbauerSpec::new(2, 0), &cfg).unwrap();
        assert!(close(&v, 0.0, 1e-10), "{v}");
    }

    #[test]
    fn table_value_lambda_four() {
        let v =
            entropy_quadrature(GegenbauerSpec::new(4, 2), &QuadratureConfig::default()).unwrap();
        assert!(close(&v, -88.862, 5e-4), "{v}");
    }

    #[test]
    fn rejects_bad_config() {
        let cfg = QuadratureConfig {
            working_precision: 30,
            ..QuadratureConfig::default()
        };
        assert!(entropy_quadrature(GegenbauerSpec::new(1, 1), &cfg).is_err());
        let cfg = QuadratureConfig::with_tolerance(0.0);
        assert!(entropy_quadrature(GegenbauerSpec::new(1, 1), &cfg).is_err());
    }

    #[test]
    fn unreachable_tolerance_reports_best_estimate() {
        let cfg = QuadratureConfig {
            target_abs_tol: BigFloat::from_f64_with(1e-300, Precision::MIN_ORACLE),
            working_precision: 50,
            max_subdivision_depth: 0,
        };
        match entropy_quadrature(GegenbauerSpec::new(1, 2), &cfg) {
            Err(Error::ToleranceNotMet { best, .. }) => {
                assert!(close(&best, -std::f64::consts::PI / 3.0, 1e-10));
            }
            other => panic!("expected tolerance failure, got {other:?}"),
        }
    }
}
