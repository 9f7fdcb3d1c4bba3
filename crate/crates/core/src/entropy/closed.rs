//! Known closed forms for small `λ`, used as independent checks.

use super::assembly::chebyshev_t_normalized;
use crate::exact::rational::{int, pow_int, ratio};
use crate::{BigFloat, Error, ExactEntropy, GegenbauerSpec, LogLinear, Precision, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum ClosedForm {
    Exact(ExactEntropy),
    /// Closed forms containing surds, evaluated numerically.
    Numeric(BigFloat),
}

impl ClosedForm {
    pub fn eval(&self, prec: Precision) -> BigFloat {
        match self {
            ClosedForm::Exact(e) => e.eval(prec),
            ClosedForm::Numeric(v) => v.clone(),
        }
    }
}

/// Closed-form entropy for `λ ∈ {0, 1, 2, 3}`.
///
/// `λ = 0` gives the normalized Chebyshev-T entropy; `λ ≥ 1` gives the
/// unnormalized `E(C_n^(λ))`. `λ = 3` is evaluated at `prec`.
pub fn entropy_closed_form(spec: GegenbauerSpec, prec: Precision) -> Result<ClosedForm> {
    let n = spec.n as i64;
    match spec.lambda {
        0 => Ok(ClosedForm::Exact(chebyshev_t_normalized(spec.n))),
        1 => Ok(ClosedForm::Exact(ExactEntropy::from_pi_part(
            LogLinear::from((ratio(1, n + 1) - int(1)) / int(2)),
        ))),
        2 => {
            // −(1/8)(2(n+1)(n+3)log(n+1) + (n³−5n²−29n−27)/(n+2)
            //        + (n+3)^{n+3}/((n+2)(n+1)^{n+1}))
            let log_part = LogLinear::log_of(&int(2 * (n + 1) * (n + 3)), &int(n + 1))?;
            let cubic = ratio(n * n * n - 5 * n * n - 29 * n - 27, n + 2);
            let power = pow_int(&int(n + 3), n + 3)? / (int(n + 2) * pow_int(&int(n + 1), n + 1)?);
            let inner = log_part + LogLinear::from(cubic + power);
            Ok(ClosedForm::Exact(ExactEntropy::from_pi_part(
                inner.scale(&ratio(-1, 8)),
            )))
        }
        3 => Ok(ClosedForm::Numeric(lambda_three(spec.n, prec))),
        l => Err(Error::Unsupported(format!(
            "no closed form for lambda = {l}"
        ))),
    }
}

/// Closed-form normalized entropy `E(Ĉ_n^(λ))` for `λ ∈ {0, 1, 2}`.
pub fn normalized_closed_form(spec: GegenbauerSpec) -> Result<ExactEntropy> {
    let n = spec.n as i64;
    match spec.lambda {
        0 => Ok(chebyshev_t_normalized(spec.n)),
        1 => Ok(ExactEntropy::from_plain_part(LogLinear::from(ratio(
            -n,
            n + 1,
        )))),
        2 => {
            // −log(3(n+1)/(n+3)) − (n³−5n²−29n−27)/((n+1)(n+2)(n+3))
            //   − (1/(n+2))·((n+3)/(n+1))^{n+2}
            let log_part = LogLinear::log_of(&int(-1), &ratio(3 * (n + 1), n + 3))?;
            let cubic = ratio(
                n * n * n - 5 * n * n - 29 * n - 27,
                (n + 1) * (n + 2) * (n + 3),
            );
            let power = pow_int(&ratio(n + 3, n + 1), n + 2)? / int(n + 2);
            Ok(ExactEntropy::from_plain_part(
                log_part - LogLinear::from(cubic + power),
            ))
        }
        l => Err(Error::Unsupported(format!(
            "no normalized closed form for lambda = {l}"
        ))),
    }
}

/// Complex number as a pair of big floats.
#[derive(Clone)]
struct Pair {
    re: BigFloat,
    im: BigFloat,
}

impl Pair {
    fn mul(&self, o: &Pair) -> Pair {
        Pair {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn pow(&self, mut e: u64, prec: Precision) -> Pair {
        let mut base = self.clone();
        let mut acc = Pair {
            re: BigFloat::from_i64_with(1, prec),
            im: BigFloat::zero_with(prec),
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `E(C_n^(3)) = −(π/128)·{2(n+1)(n+2)(n+4)(n+5)·log((n+1)(n+2)/2)
///   + (n⁵−16n⁴−269n³−1200n²−2102n−1250)/(n+3)
///   + 2(n+5)²/((n+2)(n+3))·Re[f^{n+1}·g]}` with
/// `f = ((n+1)(n+5) + i√(3(n+1)(n+5)))/((n+1)(n+2))` and
/// `g = 2n²+13n+14 − i(n+1)(n+6)√((n+1)(n+5)/3)`.
fn lambda_three(n: u32, prec: Precision) -> BigFloat {
    let work = Precision::digits(prec.decimal_digits() + 20);
    let n = n as i64;
    let b = |v: i64| BigFloat::from_i64_with(v, work);
    let r = (n + 1) * (n + 5);
    let sqrt_3r = b(3 * r).sqrt();
    let den = b((n + 1) * (n + 2));
    let f = Pair {
        re: b(r) / &den,
        im: sqrt_3r.clone() / &den,
    };
    let g = Pair {
        re: b(2 * n * n + 13 * n + 14),
        im: -(b((n + 1) * (n + 6)) * (sqrt_3r / b(3))),
    };
    let re = f.pow(n as u64 + 1, work).mul(&g).re;
    let log_term = b(2 * (n + 1) * (n + 2) * (n + 4) * (n + 5))
        * BigFloat::from_rational(&ratio((n + 1) * (n + 2), 2), work).ln();
    let quintic =
        b(n.pow(5) - 16 * n.pow(4) - 269 * n.pow(3) - 1200 * n * n - 2102 * n - 1250) / b(n + 3);
    let surd = b(2 * (n + 5) * (n + 5)) / b((n + 2) * (n + 3)) * re;
    let total = -(BigFloat::pi(work) / b(128)) * (log_term + quintic + surd);
    total.with_precision(prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{entropy_exact, normalized_entropy_exact};

    #[test]
    fn chebyshev_u_closed_form() {
        let ClosedForm::Exact(e) =
            entropy_closed_form(GegenbauerSpec::new(1, 1), Precision::DEFAULT).unwrap()
        else {
            panic!("expected exact");
        };
        assert_eq!(e.to_string(), "-(1/4)*pi");
    }

    #[test]
    fn lambda_two_at_one() {
        let ClosedForm::Exact(e) =
            entropy_closed_form(GegenbauerSpec::new(2, 1), Precision::DEFAULT).unwrap()
        else {
            panic!("expected exact");
        };
        let want = LogLinear::log_of(&int(16), &int(2)).unwrap()
            + LogLinear::from(ratio(-20, 1) + ratio(64, 3));
        assert_eq!(e.pi_part, want.scale(&ratio(-1, 8)));
        assert_eq!(e, entropy_exact(GegenbauerSpec::new(2, 1)).unwrap());
    }

    #[test]
    fn lambda_three_matches_exact_route() {
        let p = Precision::DEFAULT;
        for n in [1u32, 2, 7] {
            let spec = GegenbauerSpec::new(3, n);
            let closed = entropy_closed_form(spec, p).unwrap().eval(p);
            let exact = entropy_exact(spec).unwrap().eval(p);
            let rel = ((closed - &exact) / exact).abs();
            assert!(rel < BigFloat::epsilon(Precision::digits(54)), "n={n}");
        }
    }

    #[test]
    fn normalized_forms_match_exact_route() {
        for lambda in 0..=2 {
            for n in 0..=12 {
                let spec = GegenbauerSpec::new(lambda, n);
                assert_eq!(
                    normalized_closed_form(spec).unwrap(),
                    normalized_entropy_exact(spec).unwrap(),
                    "{spec}"
                );
            }
        }
    }

    #[test]
    fn unsupported_lambdas() {
        assert!(entropy_closed_form(GegenbauerSpec::new(4, 1), Precision::DEFAULT).is_err());
        assert!(normalized_closed_form(GegenbauerSpec::new(3, 1)).is_err());
    }
}
