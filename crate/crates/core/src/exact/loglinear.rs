//! Exact values of the form `q + Σ c_p·log p` over primes `p`.
//!
//! Since the logarithms of distinct primes are linearly independent over the
//! rationals, the prime map together with the constant is a canonical form:
//! structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::format_factor;
use crate::{BigFloat, Error, Precision, Rational, Result};

/// Trial division bound that still guarantees a complete factorization of any
/// cofactor that fits in a `u64`.
const TRIAL_LIMIT: u64 = 1 << 32;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LogLinear {
    constant: Rational,
    logs: BTreeMap<u64, Rational>,
}

/// Prime factorization of a positive integer by trial division.
pub fn factorize(n: &BigUint) -> Result<BTreeMap<u64, u32>> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return Err(Error::invalid("cannot factor zero"));
    }
    let mut rem = n.clone();
    let mut divide_out = |rem: &mut BigUint, p: u64| {
        let bp = BigUint::from(p);
        let mut e = 0u32;
        loop {
            let (q, r) = rem.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            *rem = q;
            e += 1;
        }
        if e > 0 {
            out.insert(p, e);
        }
    };
    divide_out(&mut rem, 2);
    let mut d = 3u64;
    while !rem.is_one() {
        if let Some(small) = rem.to_u64() {
            // Finish in machine arithmetic.
            let mut r = small;
            while d.saturating_mul(d) <= r {
                if r % d == 0 {
                    let mut e = 0;
                    while r % d == 0 {
                        r /= d;
                        e += 1;
                    }
                    out.insert(d, e);
                }
                d += 2;
            }
            if r > 1 {
                *out.entry(r).or_insert(0) += 1;
            }
            return Ok(out);
        }
        if d >= TRIAL_LIMIT {
            return Err(Error::Unsupported(format!(
                "{n} has a prime factor too large for trial division"
            )));
        }
        divide_out(&mut rem, d);
        d += 2;
    }
    Ok(out)
}

impl LogLinear {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(constant: Rational) -> Self {
        LogLinear {
            constant,
            logs: BTreeMap::new(),
        }
    }

    /// Canonical form of `coeff·log(arg)`.
    pub fn log_of(coeff: &Rational, arg: &Rational) -> Result<Self> {
        if !arg.is_positive() {
            return Err(Error::invalid(format!(
                "logarithm of non-positive value {arg}"
            )));
        }
        let mut out = LogLinear::zero();
        if coeff.is_zero() {
            return Ok(out);
        }
        for (p, e) in factorize(arg.numer().magnitude())? {
            out.add_log(p, coeff * Rational::from_integer(e.into()));
        }
        for (p, e) in factorize(arg.denom().magnitude())? {
            out.add_log(p, -(coeff * Rational::from_integer(e.into())));
        }
        Ok(out)
    }

    fn add_log(&mut self, p: u64, c: Rational) {
        let entry = self.logs.entry(p).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.logs.remove(&p);
        }
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// Prime → coefficient, in ascending prime order.
    pub fn logs(&self) -> &BTreeMap<u64, Rational> {
        &self.logs
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.logs.is_empty()
    }

    /// True when there are no logarithm terms.
    pub fn is_rational(&self) -> bool {
        self.logs.is_empty()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.constant)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return LogLinear::zero();
        }
        LogLinear {
            constant: &self.constant * k,
            logs: self.logs.iter().map(|(p, c)| (*p, c * k)).collect(),
        }
    }

    /// The log part alone, as `c·log(k)` with the smallest integer base `k ≥ 2`,
    /// when every prime coefficient is a positive integer multiple of a single
    /// rational `c`.
    pub fn grouped_log(&self) -> Option<(Rational, BigUint)> {
        let mut iter = self.logs.values();
        let first = iter.next()?;
        let positive = first.is_positive();
        if self.logs.values().any(|c| c.is_positive() != positive) {
            return None;
        }
        let mut num = first.numer().magnitude().clone();
        let mut den = first.denom().magnitude().clone();
        for c in iter {
            num = num.gcd(c.numer().magnitude());
            den = den.lcm(c.denom().magnitude());
        }
        let mut g = Rational::new(BigInt::from(num), BigInt::from(den));
        if !positive {
            g = -g;
        }
        let mut base = BigUint::one();
        for (p, c) in &self.logs {
            let e = (c / &g).to_integer().to_u32()?;
            base *= BigUint::from(*p).pow(e);
        }
        Some((g, base))
    }

    pub fn eval(&self, prec: Precision) -> BigFloat {
        let mut acc = BigFloat::from_rational(&self.constant, prec);
        for (p, c) in &self.logs {
            let lp = BigFloat::from_i64_with(*p as i64, prec).ln();
            acc = acc + BigFloat::from_rational(c, prec) * lp;
        }
        acc
    }

    /// Appends the terms of `self` to `out` in canonical order: log terms by
    /// prime (or one grouped term), then the constant. Each term is multiplied
    /// by `unit` (for example `"pi"`), or bare when `unit` is empty.
    pub(crate) fn write_terms(&self, unit: &str, out: &mut String) {
        let mut push = |coeff: &Rational, body: String| {
            let negative = coeff.is_negative();
            let mag = coeff.abs();
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if body.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&body);
            } else {
                let _ = write!(out, "{}*{}", format_factor(&mag), body);
            }
        };
        let with_unit = |log: Option<String>| -> String {
            match (unit.is_empty(), log) {
                (true, None) => String::new(),
                (true, Some(l)) => l,
                (false, None) => unit.to_string(),
                (false, Some(l)) => format!("{unit}*{l}"),
            }
        };
        if let Some((g, base)) = self.grouped_log() {
            push(&g, with_unit(Some(format!("log({base})"))));
        } else {
            for (p, c) in &self.logs {
                push(c, with_unit(Some(format!("log({p})"))));
            }
        }
        if !self.constant.is_zero() {
            push(&self.constant, with_unit(None));
        }
    }
}

impl std::fmt::Display for LogLinear {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        self.write_terms("", &mut s);
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

impl AddAssign<&LogLinear> for LogLinear {
    fn add_assign(&mut self, rhs: &LogLinear) {
        self.constant += &rhs.constant;
        for (p, c) in &rhs.logs {
            self.add_log(*p, c.clone());
        }
    }
}

impl SubAssign<&LogLinear> for LogLinear {
    fn sub_assign(&mut self, rhs: &LogLinear) {
        self.constant -= &rhs.constant;
        for (p, c) in &rhs.logs {
            self.add_log(*p, -c);
        }
    }
}

impl Add<&LogLinear> for &LogLinear {
    type Output = LogLinear;
    fn add(self, rhs: &LogLinear) -> LogLinear {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LogLinear> for &LogLinear {
    type Output = LogLinear;
    fn sub(self, rhs: &LogLinear) -> LogLinear {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LogLinear {
    type Output = LogLinear;
    fn add(mut self, rhs: LogLinear) -> LogLinear {
        self += &rhs;
        self
    }
}

impl Sub for LogLinear {
    type Output = LogLinear;
    fn sub(mut self, rhs: LogLinear) -> LogLinear {
        self -= &rhs;
        self
    }
}

impl Neg for LogLinear {
    type Output = LogLinear;
    fn neg(self) -> LogLinear {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Rational> for &LogLinear {
    type Output = LogLinear;
    fn mul(self, k: &Rational) -> LogLinear {
        self.scale(k)
    }
}

impl From<Rational> for LogLinear {
    fn from(q: Rational) -> Self {
        LogLinear::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};
    use proptest::prelude::*;

    fn map(entries: &[(u64, Rational)]) -> BTreeMap<u64, Rational> {
        entries.iter().cloned().collect()
    }

    #[test]
    fn factorize_small_and_large() {
        let f = factorize(&BigUint::from(3876u32)).unwrap();
        assert_eq!(f, [(2, 2), (3, 1), (17, 1), (19, 1)].into_iter().collect());
        assert!(factorize(&BigUint::one()).unwrap().is_empty());
        let big = BigUint::from(2u32).pow(80) * BigUint::from(1_000_003u64);
        let f = factorize(&big).unwrap();
        assert_eq!(f, [(2, 80), (1_000_003, 1)].into_iter().collect());
        assert!(factorize(&BigUint::zero()).is_err());
    }

    #[test]
    fn log_of_canonicalizes() {
        let v = LogLinear::log_of(&ratio(-7, 2), &int(4)).unwrap();
        assert_eq!(v.logs(), &map(&[(2, int(-7))]));
        assert_eq!(v, LogLinear::log_of(&int(-7), &int(2)).unwrap());
        assert!(LogLinear::log_of(&ratio(3, 5), &int(1)).unwrap().is_zero());
        let v = LogLinear::log_of(&ratio(-105, 8), &int(10)).unwrap();
        assert_eq!(v.logs(), &map(&[(2, ratio(-105, 8)), (5, ratio(-105, 8))]));
        assert!(LogLinear::log_of(&int(1), &int(0)).is_err());
        assert!(LogLinear::log_of(&int(1), &int(-3)).is_err());
    }

    #[test]
    fn evaluates_table_entries() {
        let p = Precision::DEFAULT;
        let pi = BigFloat::pi(p);
        let v = LogLinear::log_of(&int(-7), &int(2)).unwrap() + LogLinear::from(ratio(119, 240));
        assert_eq!((v.eval(p) * &pi).to_fixed(3), "-13.685");
        let v = LogLinear::log_of(&ratio(-105, 8), &int(10)).unwrap()
            + LogLinear::from(ratio(580771, 300000));
        assert_eq!((v.eval(p) * &pi).to_fixed(3), "-88.862");
        assert_eq!(LogLinear::zero().eval(p).to_fixed(5), "0.00000");
    }

    #[test]
    fn grouping_and_display() {
        let v = LogLinear::log_of(&ratio(-75, 2), &int(20)).unwrap();
        assert_eq!(v.grouped_log(), Some((ratio(-75, 2), BigUint::from(20u32))));
        let mixed = LogLinear::log_of(&int(1), &ratio(2, 3)).unwrap();
        assert_eq!(mixed.grouped_log(), None);
        assert_eq!(mixed.to_string(), "log(2) - log(3)");
        let v = LogLinear::log_of(&int(-1), &ratio(3, 2)).unwrap() + LogLinear::from(ratio(-1, 6));
        assert_eq!(v.to_string(), "log(2) - log(3) - 1/6");
        assert_eq!(LogLinear::zero().to_string(), "0");
        assert_eq!(LogLinear::from(int(-2)).to_string(), "-2");
    }

    proptest! {
        #[test]
        fn eval_matches_direct_logarithm(cn in -50i64..50, cd in 1i64..50, an in 1i64..100_000, ad in 1i64..100_000) {
            let p = Precision::digits(50);
            let c = ratio(cn, cd);
            let a = ratio(an, ad);
            let canonical = LogLinear::log_of(&c, &a).unwrap().eval(p);
            let direct = BigFloat::from_rational(&c, p) * BigFloat::from_rational(&a, p).ln();
            let tol = BigFloat::epsilon(Precision::digits(45));
            prop_assert!((canonical - direct).abs() < tol);
        }

        #[test]
        fn additivity(cn in -50i64..50, cd in 1i64..50, r1 in 1i64..10_000, r2 in 1i64..10_000, s1 in 1i64..1000) {
            let c = ratio(cn, cd);
            let a = ratio(r1, s1);
            let b = int(r2);
            let lhs = LogLinear::log_of(&c, &(&a * &b)).unwrap();
            let rhs = LogLinear::log_of(&c, &a).unwrap() + LogLinear::log_of(&c, &b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn power_equivalence(k in 1i64..20, base in 2i64..50, e in 1u32..5) {
            let lhs = LogLinear::log_of(&int(k), &int(base.pow(e))).unwrap();
            let rhs = LogLinear::log_of(&int(k * e as i64), &int(base)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
