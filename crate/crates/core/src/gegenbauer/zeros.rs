//! Zeros by sign bracketing on a uniform angle grid followed by bisection.

use super::{GegenbauerSpec, TrigRepresentation};
use crate::{Precision, Real};

/// Angles `θ_j ∈ (0, π)` with `C_n^(λ)(cos θ_j) = 0`, ascending.
///
/// Each angle is bisected until its bracket is narrower than `10^(2−P)` or no
/// longer shrinks at the available precision.
pub fn zero_angles<T: Real>(spec: GegenbauerSpec, prec: Precision) -> Vec<T> {
    let n = spec.n as usize;
    if n == 0 {
        return Vec::new();
    }
    let eval = TrigRepresentation::standard(spec).evaluator::<T>(prec);
    let f = |theta: &T| eval.eval_standard(&theta.cos());
    let pi = T::pi(prec);
    let ten = T::from_i64_at(10, prec);
    let mut width_tol = T::one();
    for _ in 0..prec.decimal_digits().saturating_sub(2) {
        width_tol = width_tol / ten.clone();
    }
    let sign_change = |a: &T, b: &T| (*a < T::zero()) != (*b < T::zero());

    let mut points = 8 * (n + 1);
    let brackets = loop {
        let step = pi.clone() / T::from_i64_at(points as i64, prec);
        let half = T::from_rational(&crate::exact::rational::ratio(1, 2), prec);
        let grid: Vec<T> = (0..points)
            .map(|i| step.clone() * (T::from_i64_at(i as i64, prec) + half.clone()))
            .collect();
        let values: Vec<T> = grid.iter().map(&f).collect();
        let found: Vec<(T, T, T)> = (1..points)
            .filter(|&i| sign_change(&values[i - 1], &values[i]))
            .map(|i| (grid[i - 1].clone(), grid[i].clone(), values[i - 1].clone()))
            .collect();
        if found.len() == n || points > 1 << 20 {
            break found;
        }
        points *= 2;
    };

    brackets
        .into_iter()
        .map(|(mut lo, mut hi, mut f_lo)| {
            let two = T::from_i64_at(2, prec);
            while hi.clone() - lo.clone() > width_tol {
                let mid = (lo.clone() + hi.clone()) / two.clone();
                if mid <= lo || mid >= hi {
                    break;
                }
                let f_mid = f(&mid);
                if f_mid == T::zero() {
                    return mid;
                }
                if sign_change(&f_lo, &f_mid) {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = f_mid;
                }
            }
            (lo + hi) / two
        })
        .collect()
}

/// Zeros `x_j = cos θ_j ∈ (−1, 1)`, ascending.
pub fn zeros<T: Real>(spec: GegenbauerSpec, prec: Precision) -> Vec<T> {
    let mut xs: Vec<T> = zero_angles::<T>(spec, prec)
        .iter()
        .map(|t| t.cos())
        .collect();
    xs.reverse();
    xs
}
