//! Gegenbauer polynomials `C_n^(λ)` with integer `λ ≥ 0`.
//!
//! `λ = 0` stands for the Chebyshev polynomial of the first kind `T_n`, the
//! usual normalized limit, and is handled by explicit special cases.

mod trig;
mod zeros;

pub use trig::{RepKind, TrigEvaluator, TrigRepresentation};
pub use zeros::{zero_angles, zeros};

use num_traits::{One, Zero};

use crate::exact::rational::{factorial, int, pow_int};
use crate::{Error, Rational, Result, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GegenbauerSpec {
    pub lambda: u32,
    pub n: u32,
}

impl GegenbauerSpec {
    pub const fn new(lambda: u32, n: u32) -> Self {
        GegenbauerSpec { lambda, n }
    }

    pub(crate) fn require_positive_lambda(&self) -> Result<()> {
        if self.lambda == 0 {
            return Err(Error::Unsupported(
                "lambda = 0 is only available in normalized form".into(),
            ));
        }
        Ok(())
    }
}

impl std::fmt::Display for GegenbauerSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(lambda={}, n={})", self.lambda, self.n)
    }
}

/// Rising factorial `a(a+1)…(a+k−1)`.
pub fn pochhammer<T: Scalar>(a: &T, k: u32) -> T {
    let mut acc = T::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        term = term + T::one();
    }
    acc
}

/// `(λ)_k / k!` for `k = 0..=len-1`.
fn pochhammer_over_factorial(lambda: u32, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut p = Rational::one();
    for k in 0..len {
        if k > 0 {
            p = p * int(lambda as i64 + k as i64 - 1) / int(k as i64);
        }
        out.push(p.clone());
    }
    out
}

/// Coefficient `d_m` of `cos((n−2m)θ)` in `C_n^(λ)(cos θ)`.
///
/// Zero inside the windows `−λ < m < 0` and `n < m < n+λ`; any other `m`
/// outside `0..=n` is rejected.
pub fn standard_coeff(spec: GegenbauerSpec, m: i64) -> Result<Rational> {
    let (lambda, n) = (spec.lambda as i64, spec.n as i64);
    if (0..=n).contains(&m) {
        return Ok(standard_coeffs(spec).swap_remove(m as usize));
    }
    if (-lambda < m && m < 0) || (n < m && m < n + lambda) {
        return Ok(Rational::zero());
    }
    Err(Error::invalid(format!(
        "standard coefficient index {m} out of range for {spec}"
    )))
}

/// All `d_0..=d_n`.
pub fn standard_coeffs(spec: GegenbauerSpec) -> Vec<Rational> {
    let n = spec.n as usize;
    if spec.lambda == 0 {
        if n == 0 {
            return vec![Rational::one()];
        }
        let mut d = vec![Rational::zero(); n + 1];
        d[0] = Rational::new(1.into(), 2.into());
        d[n] = d[0].clone();
        return d;
    }
    let p = pochhammer_over_factorial(spec.lambda, n + 1);
    (0..=n).map(|m| &p[m] * &p[n - m]).collect()
}

/// Szegő prefactor `c` and the `λ` coefficients `α_0..α_{λ−1}` of the finite
/// sine representation.
pub fn szego_coeffs(spec: GegenbauerSpec) -> Result<(Rational, Vec<Rational>)> {
    spec.require_positive_lambda()?;
    let (lambda, n) = (spec.lambda as i64, spec.n as i64);
    let rising: Rational = pochhammer(&int(n + lambda + 1), spec.lambda - 1);
    let two_pow = pow_int(&int(2), 2 - 2 * lambda)?;
    let c = two_pow * rising / Rational::from_integer(factorial(lambda as u64 - 1));
    let mut alpha = Vec::with_capacity(spec.lambda as usize);
    let mut a = Rational::one();
    for nu in 0..lambda {
        if nu > 0 {
            let k = nu - 1;
            a = a * int(1 - lambda + k) * int(n + 1 + k) / (int(k + 1) * int(n + lambda + 1 + k));
        }
        alpha.push(a.clone());
    }
    Ok((c, alpha))
}

/// `C_n^(λ)(x)` (or `T_n(x)` for `λ = 0`) by the three-term recurrence.
pub fn eval<T: Scalar>(spec: GegenbauerSpec, x: &T) -> T {
    let from = |v: u64| T::from_u64(v).expect("small integer");
    let two_x = from(2) * x.clone();
    let mut prev = T::one();
    if spec.n == 0 {
        return prev;
    }
    let mut cur = if spec.lambda == 0 {
        x.clone()
    } else {
        from(spec.lambda as u64) * two_x.clone()
    };
    let lambda = spec.lambda as u64;
    for k in 2..=spec.n as u64 {
        let next = if lambda == 0 {
            two_x.clone() * cur.clone() - prev
        } else {
            (two_x.clone() * from(k + lambda - 1) * cur.clone() - from(k + 2 * lambda - 2) * prev)
                / from(k)
        };
        prev = cur;
        cur = next;
    }
    cur
}
