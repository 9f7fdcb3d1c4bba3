//! From integral tables to entropies.
//!
//! `E = −(c/2)·[α_0 d_0 I_0 + Σ_{m=1}^{n+λ} β_m I_m]` where `c`, `α` are the
//! Szegő constants and `d` the standard coefficients.

use num_traits::Zero;

use super::{integrals_series_log, IntegralTable};
use crate::exact::rational::{factorial, int, pow_int};
use crate::gegenbauer::{pochhammer, standard_coeff, standard_coeffs, szego_coeffs};
use crate::{Error, ExactEntropy, GegenbauerSpec, LogLinear, Rational, Result};

/// `β_1..=β_{n+λ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaVector {
    pub spec: GegenbauerSpec,
    /// `beta[m − 1] = β_m`.
    pub beta: Vec<Rational>,
}

impl BetaVector {
    /// `β_m` for `1 ≤ m ≤ n+λ`, zero elsewhere.
    pub fn get(&self, m: usize) -> Rational {
        m.checked_sub(1)
            .and_then(|i| self.beta.get(i))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, m: usize, value: Rational) {
        self.beta[m - 1] = value;
    }
}

/// `β_m = Σ_ν α_ν (d_{m−ν} − d_{m−ν−1})` for `m < n+λ`, and
/// `β_{n+λ} = −α_{λ−1}·d_n`.
pub fn beta_vector(spec: GegenbauerSpec) -> Result<BetaVector> {
    let (_, alpha) = szego_coeffs(spec)?;
    let top = (spec.n + spec.lambda) as i64;
    let d = standard_coeffs(spec);
    let mut beta = Vec::with_capacity(top as usize);
    for m in 1..top {
        let mut acc = Rational::zero();
        for (nu, a) in alpha.iter().enumerate() {
            let nu = nu as i64;
            let diff = standard_coeff(spec, m - nu)? - standard_coeff(spec, m - nu - 1)?;
            acc += a * diff;
        }
        beta.push(acc);
    }
    beta.push(-(&alpha[spec.lambda as usize - 1] * &d[spec.n as usize]));
    Ok(BetaVector { spec, beta })
}

/// Weight `W_j` of `I_j` in `Σ_ν α_ν Σ_{m=0}^{n} d_m (I_{ν+m} − I_{ν+m+1})`,
/// for `j = 0..=n+λ`, collected term by term.
///
/// This is an independent expansion of the same sum whose regrouping gives
/// `β`: `W_0 = α_0 d_0` and `W_m = β_m` for `m ≥ 1`.
pub fn assembly_weights(spec: GegenbauerSpec) -> Result<Vec<Rational>> {
    let (_, alpha) = szego_coeffs(spec)?;
    let d = standard_coeffs(spec);
    let mut w = vec![Rational::zero(); (spec.n + spec.lambda + 1) as usize];
    for (nu, a) in alpha.iter().enumerate() {
        for (m, dm) in d.iter().enumerate() {
            let t = a * dm;
            w[nu + m] += &t;
            w[nu + m + 1] -= t;
        }
    }
    Ok(w)
}

/// Combines an integral table with `β` into `E(C_n^(λ))`.
pub fn assemble_entropy(table: &IntegralTable, beta: &BetaVector) -> Result<ExactEntropy> {
    let spec = table.spec;
    if beta.spec != spec {
        return Err(Error::invalid(
            "beta vector and integral table disagree on spec",
        ));
    }
    let (c, alpha) = szego_coeffs(spec)?;
    let d0 = standard_coeff(spec, 0)?;
    let mut sum = table.values[0].scale(&(&alpha[0] * d0));
    for m in 1..table.values.len() {
        sum += &table.values[m].scale(&beta.get(m));
    }
    Ok(ExactEntropy::from_pi_part(sum.scale(&-(c / int(2)))))
}

/// `E(C_n^(λ))` via the series-log route; `λ ≥ 1`.
pub fn entropy_exact(spec: GegenbauerSpec) -> Result<ExactEntropy> {
    spec.require_positive_lambda()?;
    assemble_entropy(&integrals_series_log(spec)?, &beta_vector(spec)?)
}

/// `κ = (λ−1)!(n+λ)·n!·4^λ·λ! / ((2λ)!·(2λ)_n)`, the factor multiplying the
/// `π` coefficient of `E(C)` in `E(Ĉ)`.
pub fn normalization_factor(spec: GegenbauerSpec) -> Result<Rational> {
    spec.require_positive_lambda()?;
    let (l, n) = (spec.lambda as u64, spec.n as u64);
    let num = Rational::from_integer(factorial(l - 1) * (n + l) * factorial(n) * factorial(l))
        * pow_int(&int(4), l as i64)?;
    let den = Rational::from_integer(factorial(2 * l)) * pochhammer(&int(2 * l as i64), spec.n);
    Ok(num / den)
}

/// `E(Ĉ) = log(λ(2λ)_n / ((n+λ)·n!)) + κ·[π-part of E(C)]`; the result has no
/// `π` part.
pub fn normalize_entropy(spec: GegenbauerSpec, e: &ExactEntropy) -> Result<ExactEntropy> {
    if !e.plain_part.is_zero() {
        return Err(Error::invalid("expected an unnormalized entropy"));
    }
    let (l, n) = (spec.lambda as i64, spec.n as i64);
    let arg = int(l) * pochhammer(&int(2 * l), spec.n)
        / (int(n + l) * Rational::from_integer(factorial(n as u64)));
    let mut plain = LogLinear::log_of(&int(1), &arg)?;
    plain += &e.pi_part.scale(&normalization_factor(spec)?);
    Ok(ExactEntropy::from_plain_part(plain))
}

/// `E(Ĉ_n^(λ))` for any `λ ≥ 0`; `λ = 0` uses the Chebyshev-T values.
pub fn normalized_entropy_exact(spec: GegenbauerSpec) -> Result<ExactEntropy> {
    if spec.lambda == 0 {
        return Ok(chebyshev_t_normalized(spec.n));
    }
    normalize_entropy(spec, &entropy_exact(spec)?)
}

/// `0` for `n = 0`, `log 2 − 1` otherwise.
pub(crate) fn chebyshev_t_normalized(n: u32) -> ExactEntropy {
    if n == 0 {
        return ExactEntropy::zero();
    }
    let plain = LogLinear::log_of(&int(1), &int(2)).expect("positive") + LogLinear::from(int(-1));
    ExactEntropy::from_plain_part(plain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::routes::i0_over_pi;
    use crate::exact::rational::ratio;

    #[test]
    fn beta_for_lambda_one() {
        // E = −(1/2)(I_0 − I_{n+1}): every β_m vanishes except β_{n+1} = −1.
        for n in 0..6u32 {
            let b = beta_vector(GegenbauerSpec::new(1, n)).unwrap();
            for m in 1..=n as usize {
                assert!(b.get(m).is_zero());
            }
            assert_eq!(b.get(n as usize + 1), int(-1));
        }
    }

    #[test]
    fn beta_for_lambda_two() {
        // −(c/2)·β_m is the weight of I_m in
        // E = −(1/8)[(n+1)(n+3)I_0 + (n+1)²I_{n+2} − 4Σ_{m=1}^{n+1} m·I_m].
        for n in 0..8i64 {
            let spec = GegenbauerSpec::new(2, n as u32);
            let (c, alpha) = szego_coeffs(spec).unwrap();
            let b = beta_vector(spec).unwrap();
            let half_c = &c / int(2);
            let d0 = standard_coeff(spec, 0).unwrap();
            assert_eq!(&half_c * &alpha[0] * d0, ratio((n + 1) * (n + 3), 8));
            for m in 1..=n + 1 {
                assert_eq!(&half_c * b.get(m as usize), ratio(-4 * m, 8), "n={n} m={m}");
            }
            assert_eq!(&half_c * b.get(n as usize + 2), ratio((n + 1) * (n + 1), 8));
        }
    }

    #[test]
    fn beta_matches_double_sum_weights() {
        for lambda in 1..=6 {
            for n in 0..=10 {
                let spec = GegenbauerSpec::new(lambda, n);
                let (_, alpha) = szego_coeffs(spec).unwrap();
                let w = assembly_weights(spec).unwrap();
                let b = beta_vector(spec).unwrap();
                assert_eq!(w[0], &alpha[0] * standard_coeff(spec, 0).unwrap());
                for (m, wm) in w.iter().enumerate().skip(1) {
                    assert_eq!(*wm, b.get(m), "{spec} m={m}");
                }
            }
        }
    }

    #[test]
    fn table_entries() {
        let e = entropy_exact(GegenbauerSpec::new(4, 1)).unwrap();
        assert_eq!(e.to_string(), "-7*pi*log(2) + (119/240)*pi");
        let e = entropy_exact(GegenbauerSpec::new(5, 2)).unwrap();
        assert_eq!(
            e.to_string(),
            "-(2475/128)*pi*log(15) + (27685925/5225472)*pi"
        );
    }

    #[test]
    fn degree_zero_entropy_vanishes() {
        for lambda in 1..=8 {
            assert!(entropy_exact(GegenbauerSpec::new(lambda, 0))
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn normalized_chebyshev_u() {
        for n in 0..20i64 {
            let spec = GegenbauerSpec::new(1, n as u32);
            assert_eq!(normalization_factor(spec).unwrap(), int(2));
            let e = normalized_entropy_exact(spec).unwrap();
            assert_eq!(
                e,
                ExactEntropy::from_plain_part(LogLinear::from(ratio(-n, n + 1)))
            );
        }
    }

    #[test]
    fn normalized_lambda_two_at_one() {
        let e = normalized_entropy_exact(GegenbauerSpec::new(2, 1)).unwrap();
        let want =
            LogLinear::log_of(&int(-1), &ratio(3, 2)).unwrap() + LogLinear::from(ratio(-1, 6));
        assert_eq!(e, ExactEntropy::from_plain_part(want));
    }

    #[test]
    fn normalize_rejects_normalized_input() {
        let spec = GegenbauerSpec::new(2, 1);
        let e = normalized_entropy_exact(spec).unwrap();
        assert!(normalize_entropy(spec, &e).is_err());
    }

    #[test]
    fn i0_used_in_assembly() {
        let spec = GegenbauerSpec::new(3, 4);
        let t = integrals_series_log(spec).unwrap();
        assert_eq!(t.values[0], i0_over_pi(spec).unwrap());
    }
}
