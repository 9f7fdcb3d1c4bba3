//! The three exact routes to `I_m / π`.
//!
//! All routes share `I_0 / π = 2·log((λ)_n / n!)`. For `m ≥ 1` the values are
//! rational and come from Taylor coefficients of a logarithm in `w = z²`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntegralTable, Route};
use crate::exact::rational::{factorial, int, pow_int, ratio};
use crate::gegenbauer::{pochhammer, standard_coeffs, szego_coeffs};
use crate::series::log_series;
use crate::{GegenbauerSpec, LogLinear, Rational, Result};

/// `2·log((λ)_n / n!)` in canonical form.
pub(crate) fn i0_over_pi(spec: GegenbauerSpec) -> Result<LogLinear> {
    let ratio_arg = pochhammer(&int(spec.lambda as i64), spec.n)
        / Rational::from_integer(factorial(spec.n as u64));
    LogLinear::log_of(&int(2), &ratio_arg)
}

fn table(
    spec: GegenbauerSpec,
    route: Route,
    tail: impl Iterator<Item = Rational>,
) -> Result<IntegralTable> {
    let mut values = vec![i0_over_pi(spec)?];
    values.extend(tail.map(LogLinear::from));
    Ok(IntegralTable {
        spec,
        values,
        route,
    })
}

/// Taylor coefficients of `log Q̃(w)` with
/// `Q̃(w) = Σ_ν α_ν (w^{n+λ+ν} − w^{λ−ν−1})`, shifted by `(2λ−1)/m`.
pub fn integrals_series_log(spec: GegenbauerSpec) -> Result<IntegralTable> {
    spec.require_positive_lambda()?;
    let (_, alpha) = szego_coeffs(spec)?;
    let (l, n) = (spec.lambda as usize, spec.n as usize);
    let top = n + l;
    let mut q = vec![Rational::zero(); n + 2 * l];
    for (nu, a) in alpha.iter().enumerate() {
        q[n + l + nu] += a;
        q[l - nu - 1] -= a;
    }
    let b = log_series(&q, top)?;
    let shift = int(2 * l as i64 - 1);
    table(
        spec,
        Route::SeriesLog,
        (1..=top).map(|m| &shift / int(m as i64) + &b[m]),
    )
}

/// Taylor coefficients of `log R̃(w)` with `R̃(w) = Σ_j d_j w^{n−j}`.
pub fn integrals_standard_rep(spec: GegenbauerSpec) -> Result<IntegralTable> {
    spec.require_positive_lambda()?;
    let d = standard_coeffs(spec);
    let top = (spec.n + spec.lambda) as usize;
    let r: Vec<Rational> = d.into_iter().rev().collect();
    let b = log_series(&r, top)?;
    table(spec, Route::StandardRep, b.into_iter().skip(1))
}

/// Closed forms for `λ = 1, 2` and explicit partition sums for `λ ≥ 3`.
pub fn integrals_faa_di_bruno(spec: GegenbauerSpec) -> Result<IntegralTable> {
    spec.require_positive_lambda()?;
    let n = spec.n as i64;
    let top = (spec.n + spec.lambda) as i64;
    match spec.lambda {
        1 => table(
            spec,
            Route::FaaDiBruno,
            (1..=top).map(|m| {
                let v = ratio(1, m);
                if m == n + 1 {
                    v - int(1)
                } else {
                    v
                }
            }),
        ),
        2 => {
            let q = ratio(n + 3, n + 1);
            table(
                spec,
                Route::FaaDiBruno,
                (1..=top).map(|m| {
                    let v = (int(3) - pow_int(&q, m).expect("nonzero base")) / int(m);
                    if m == n + 2 {
                        v + &q
                    } else {
                        v
                    }
                }),
            )
        }
        _ => {
            let sums = PartitionSums::new(spec)?;
            let tail: Vec<Rational> = (1..=top as usize).map(|m| sums.value(m)).collect();
            table(spec, Route::FaaDiBruno, tail.into_iter())
        }
    }
}

/// `I_m/π = (2λ−1)/m − r1^m·S_m − (α_0/α_{λ−1})·δ_{m,n+λ}` with
///
/// `S_m = Σ_k Σ_{k_6..k_{2λ−2}} r2^k (k−1)!/(A!·B!) · Π_j g_j^{k_{2j}}/k_{2j}!`,
/// `A = 2k−m+Σ(j−2)k_{2j}`, `B = m−k−Σ(j−1)k_{2j}`, and terms with negative
/// `A` or `B` dropped.
struct PartitionSums {
    lambda: usize,
    top: usize,
    r1: Rational,
    r2: Rational,
    /// `g_j` for `j = 3..λ−1`, stored at index `j − 3`.
    g: Vec<Rational>,
    delta: Rational,
    factorials: Vec<BigInt>,
}

impl PartitionSums {
    fn new(spec: GegenbauerSpec) -> Result<Self> {
        let (_, a) = szego_coeffs(spec)?;
        let l = spec.lambda as usize;
        let top = (spec.n + spec.lambda) as usize;
        let r1 = &a[l - 3] / &a[l - 2];
        let r2 = -(&a[l - 2] * &a[l - 2]) / (&a[l - 1] * &a[l - 3]);
        let g = (3..l)
            .map(|j| {
                &a[l - 1 - j] * pow_int(&a[l - 2], j as i64 - 2).expect("nonzero")
                    / pow_int(&a[l - 3], j as i64 - 1).expect("nonzero")
            })
            .collect();
        let delta = &a[0] / &a[l - 1];
        let factorials = (0..=2 * top as u64 + 1).map(factorial).collect();
        Ok(PartitionSums {
            lambda: l,
            top,
            r1,
            r2,
            g,
            delta,
            factorials,
        })
    }

    fn fact(&self, k: usize) -> Rational {
        Rational::from_integer(self.factorials[k].clone())
    }

    fn value(&self, m: usize) -> Rational {
        let mut s = Rational::zero();
        let mut r2k = Rational::one();
        for k in 1..=m {
            r2k *= &self.r2;
            let lead = &r2k * self.fact(k - 1);
            let mut ks = vec![0usize; self.g.len()];
            let mut inner = Rational::zero();
            self.enumerate(m, k, 0, m - k, &mut ks, Rational::one(), &mut inner);
            s += lead * inner;
        }
        let mut v = ratio(2 * self.lambda as i64 - 1, m as i64)
            - pow_int(&self.r1, m as i64).expect("nonzero") * s;
        if m == self.top {
            v -= &self.delta;
        }
        v
    }

    /// Walks `k_{2j}` for `j = 3 + idx ..` keeping `B ≥ 0` via `budget`.
    #[allow(clippy::too_many_arguments)]
    fn enumerate(
        &self,
        m: usize,
        k: usize,
        idx: usize,
        budget: usize,
        ks: &mut Vec<usize>,
        weight: Rational,
        acc: &mut Rational,
    ) {
        if idx == self.g.len() {
            let shift: i64 = ks
                .iter()
                .enumerate()
                .map(|(i, &kj)| (i as i64 + 1) * kj as i64)
                .sum();
            let a = 2 * k as i64 - m as i64 + shift;
            if a < 0 {
                return;
            }
            let b = budget;
            *acc += weight / (self.fact(a as usize) * self.fact(b));
            return;
        }
        let j = idx + 3;
        let step = j - 1;
        let mut w = weight;
        let mut kj = 0;
        loop {
            ks[idx] = kj;
            self.enumerate(m, k, idx + 1, budget - kj * step, ks, w.clone(), acc);
            if budget < (kj + 1) * step {
                break;
            }
            kj += 1;
            w = w * &self.g[idx] / int(kj as i64);
        }
        ks[idx] = 0;
    }
}
