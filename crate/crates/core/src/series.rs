//! Formal power series logarithm over the rationals.

use num_traits::Zero;

use crate::{Error, Rational, Result};

/// Taylor coefficients `b_1..=b_order` of `log(P(w)/P(0))`, returned with a
/// leading `b_0 = 0`.
///
/// With `P(w)/P(0) = 1 + Σ a_k w^k` the coefficients satisfy
/// `b_k = a_k − (1/k)·Σ_{j=1}^{k−1} j·b_j·a_{k−j}`.
pub fn log_series(poly: &[Rational], order: usize) -> Result<Vec<Rational>> {
    let p0 = poly
        .first()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::invalid("log of a series with zero constant term"))?;
    let a: Vec<Rational> = (0..=order)
        .map(|k| poly.get(k).map_or_else(Rational::zero, |c| c / p0))
        .collect();
    let mut b = vec![Rational::zero(); order + 1];
    for k in 1..=order {
        let mut acc = Rational::zero();
        for j in 1..k {
            if !b[j].is_zero() && !a[k - j].is_zero() {
                acc += &b[j] * &a[k - j] * Rational::from_integer(j.into());
            }
        }
        b[k] = &a[k] - acc / Rational::from_integer(k.into());
    }
    Ok(b)
}
