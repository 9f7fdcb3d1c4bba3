//! Helpers around [`BigRational`](num_rational::BigRational).
//!
//! The rational type itself comes from `num-rational`, which keeps values in
//! lowest terms with a positive denominator after every operation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Binary rational arithmetic with division by zero reported as an error.
pub fn arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => checked_div(a, b)?,
    })
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// `a^e` for any integer `e`; `0^e` with `e < 0` is an error.
pub fn pow_int(a: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut base = if e < 0 { a.recip() } else { a.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = Rational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    Ok(acc)
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Parses `"p"` or `"p/q"` with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::invalid(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `"p/q"` wrapped in parentheses when it is not an integer; used in front of
/// a `*` in product terms.
pub(crate) fn format_factor(r: &Rational) -> String {
    debug_assert!(!r.is_negative());
    if r.is_integer() {
        r.to_string()
    } else {
        format!("({r})")
    }
}
