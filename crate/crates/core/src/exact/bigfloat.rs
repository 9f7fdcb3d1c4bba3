//! Extended-precision binary floating point.
//!
//! A thin value type over `astro-float-num`. Every value carries its own
//! mantissa length; binary operations run at the larger of the two operand
//! precisions, so integer constants built at 64 bits mix freely with
//! high-precision values without degrading them.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use astro_float_num as af;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

use crate::Rational;

const RM: af::RoundingMode = af::RoundingMode::ToEven;
const WORD_BITS: usize = 64;
const GUARD_BITS: usize = 32;
const LOG2_10: f64 = std::f64::consts::LOG2_10;

thread_local! {
    static CONSTS: RefCell<af::Consts> =
        RefCell::new(af::Consts::new().expect("allocate astro-float constant cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut af::Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Working precision expressed in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    /// Default rendering precision.
    pub const DEFAULT: Precision = Precision(64);
    /// Smallest precision accepted by the quadrature oracle and the CLI.
    pub const MIN_ORACLE: Precision = Precision(50);

    pub const fn digits(digits: u32) -> Self {
        Precision(digits)
    }

    pub const fn decimal_digits(self) -> u32 {
        self.0
    }

    /// Mantissa length in bits: enough for the requested digits plus guard
    /// bits, rounded up to whole machine words.
    pub fn bits(self) -> usize {
        let needed = (self.0 as f64 * LOG2_10).ceil() as usize + GUARD_BITS;
        needed.div_ceil(WORD_BITS) * WORD_BITS
    }

    fn from_bits(bits: usize) -> Self {
        let useful = bits.saturating_sub(GUARD_BITS) as f64 / LOG2_10;
        Precision(useful.floor() as u32)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DEFAULT
    }
}

#[derive(Clone)]
pub struct BigFloat(af::BigFloat);

impl BigFloat {
    fn bits(&self) -> usize {
        self.0
            .mantissa_max_bit_len()
            .unwrap_or(WORD_BITS)
            .max(WORD_BITS)
    }

    fn joint_bits(&self, other: &Self) -> usize {
        self.bits().max(other.bits())
    }

    pub fn zero_with(prec: Precision) -> Self {
        BigFloat(af::BigFloat::from_u64(0, prec.bits()))
    }

    pub fn from_i64_with(v: i64, prec: Precision) -> Self {
        BigFloat(af::BigFloat::from_i64(v, prec.bits()))
    }

    pub fn from_f64_with(v: f64, prec: Precision) -> Self {
        BigFloat(af::BigFloat::from_f64(v, prec.bits().max(WORD_BITS)))
    }

    pub fn from_bigint(v: &BigInt, prec: Precision) -> Self {
        Self::from_bigint_bits(v, prec.bits())
    }

    fn from_bigint_bits(v: &BigInt, bits: usize) -> Self {
        if v.is_zero() {
            return BigFloat(af::BigFloat::from_u64(0, bits));
        }
        let mag = v.magnitude();
        let top_zeros = mag.to_u64_digits().last().map_or(0, |w| w.leading_zeros());
        let normalized: BigUint = mag << top_zeros;
        let words = normalized.to_u64_digits();
        let exponent = (words.len() * WORD_BITS) as i64 - top_zeros as i64;
        let sign = if v.is_negative() {
            af::Sign::Neg
        } else {
            af::Sign::Pos
        };
        let exponent = af::Exponent::try_from(exponent).expect("integer exponent in range");
        let mut out = af::BigFloat::from_words(&words, sign, exponent);
        out.set_precision(bits, RM).expect("set precision");
        BigFloat(out)
    }

    pub fn from_rational(r: &Rational, prec: Precision) -> Self {
        let bits = prec.bits();
        let num = Self::from_bigint_bits(r.numer(), bits + WORD_BITS);
        if r.denom().is_one() {
            let mut out = num.0;
            out.set_precision(bits, RM).expect("set precision");
            return BigFloat(out);
        }
        let den = Self::from_bigint_bits(r.denom(), bits + WORD_BITS);
        BigFloat(num.0.div(&den.0, bits, RM))
    }

    pub fn pi(prec: Precision) -> Self {
        BigFloat(with_consts(|cc| cc.pi(prec.bits(), RM)))
    }

    pub fn precision(&self) -> Precision {
        Precision::from_bits(self.bits())
    }

    /// Copy of `self` rounded or extended to `prec`.
    pub fn with_precision(&self, prec: Precision) -> Self {
        let mut out = self.0.clone();
        out.set_precision(prec.bits(), RM).expect("set precision");
        BigFloat(out)
    }

    pub fn ln(&self) -> Self {
        let p = self.bits();
        BigFloat(with_consts(|cc| self.0.ln(p, RM, cc)))
    }

    pub fn exp(&self) -> Self {
        let p = self.bits();
        BigFloat(with_consts(|cc| self.0.exp(p, RM, cc)))
    }

    pub fn sin(&self) -> Self {
        let p = self.bits();
        BigFloat(with_consts(|cc| self.0.sin(p, RM, cc)))
    }

    pub fn cos(&self) -> Self {
        let p = self.bits();
        BigFloat(with_consts(|cc| self.0.cos(p, RM, cc)))
    }

    pub fn sqrt(&self) -> Self {
        BigFloat(self.0.sqrt(self.bits(), RM))
    }

    pub fn abs(&self) -> Self {
        BigFloat(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.0.is_nan() || self.0.is_inf())
    }

    /// Unit in the last place of a value of magnitude one at this precision.
    pub fn epsilon(prec: Precision) -> Self {
        let one = af::BigFloat::from_u64(1, prec.bits());
        let mut out = one.clone();
        out.set_exponent(1 - (prec.bits() as af::Exponent - GUARD_BITS as af::Exponent));
        BigFloat(out)
    }

    /// Approximate conversion; exact for values representable in an `f64`
    /// mantissa and otherwise truncated.
    pub fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf() {
            return if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        let Some((words, bits, sign, exponent, _)) = self.0.as_raw_parts() else {
            return f64::NAN;
        };
        if bits == 0 || words.is_empty() {
            return 0.0;
        }
        let top = *words.last().expect("nonempty mantissa") as f64;
        let magnitude = top * 2f64.powi(exponent - WORD_BITS as i32);
        match sign {
            af::Sign::Neg => -magnitude,
            af::Sign::Pos => magnitude,
        }
    }

    /// Round to the nearest integer, ties to even.
    pub fn round_to_bigint(&self) -> BigInt {
        let rounded = self.0.round(0, af::RoundingMode::ToEven);
        let Some((words, bits, sign, exponent, _)) = rounded.as_raw_parts() else {
            panic!("rounding a non-finite value");
        };
        if bits == 0 || words.iter().all(|w| *w == 0) {
            return BigInt::zero();
        }
        let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
        let mantissa = BigUint::from_bytes_le(&bytes);
        let shift = exponent as i64 - (words.len() * WORD_BITS) as i64;
        let mag = if shift >= 0 {
            mantissa << shift as usize
        } else {
            mantissa >> (-shift) as usize
        };
        let sign = match sign {
            af::Sign::Neg => Sign::Minus,
            af::Sign::Pos => Sign::Plus,
        };
        BigInt::from_biguint(sign, mag)
    }

    /// Fixed-point decimal rendering with `places` fractional digits,
    /// rounding half to even.
    pub fn to_fixed(&self, places: u32) -> String {
        let scale = BigInt::from(10u32).pow(places);
        let scale_bits = (places as f64 * LOG2_10).ceil() as usize + 2 * WORD_BITS;
        let scaled = BigFloat(self.0.mul(
            &Self::from_bigint_bits(&scale, scale_bits).0,
            self.bits() + scale_bits,
            RM,
        ));
        let int = scaled.round_to_bigint();
        let negative = int.is_negative();
        let mut digits = int.magnitude().to_str_radix(10);
        let places = places as usize;
        if digits.len() <= places {
            digits = "0".repeat(places + 1 - digits.len()) + &digits;
        }
        let split = digits.len() - places;
        let mut out = String::with_capacity(digits.len() + 2);
        if negative {
            out.push('-');
        }
        out.push_str(&digits[..split]);
        if places > 0 {
            out.push('.');
            out.push_str(&digits[split..]);
        }
        out
    }

    pub fn powi(&self, n: u32) -> Self {
        BigFloat(self.0.powi(n as usize, self.bits(), RM))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({})", self.0)
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:ident) => {
        impl $trait<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                BigFloat(self.0.$op(&rhs.0, self.joint_bits(rhs), RM))
            }
        }
        impl $trait<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Rem<BigFloat> for BigFloat {
    type Output = BigFloat;
    fn rem(self, rhs: BigFloat) -> BigFloat {
        BigFloat(self.0.rem(&rhs.0))
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(af::BigFloat::neg(&self.0))
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(af::BigFloat::neg(&self.0))
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        BigFloat(af::BigFloat::from_u64(0, WORD_BITS))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for BigFloat {
    fn one() -> Self {
        BigFloat(af::BigFloat::from_u64(1, WORD_BITS))
    }
}

impl Num for BigFloat {
    type FromStrRadixErr = crate::Error;

    /// Decimal only; parsed at the default precision.
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(crate::Error::invalid(format!("unsupported radix {radix}")));
        }
        let bits = Precision::DEFAULT.bits();
        let v = with_consts(|cc| af::BigFloat::parse(s, af::Radix::Dec, bits, RM, cc));
        if v.is_nan() {
            return Err(crate::Error::invalid(format!("not a number: {s:?}")));
        }
        Ok(BigFloat(v))
    }
}

impl FromPrimitive for BigFloat {
    fn from_i64(n: i64) -> Option<Self> {
        Some(BigFloat(af::BigFloat::from_i64(n, WORD_BITS)))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(BigFloat(af::BigFloat::from_u64(n, WORD_BITS)))
    }
    fn from_f64(n: f64) -> Option<Self> {
        n.is_finite()
            .then(|| BigFloat(af::BigFloat::from_f64(n, WORD_BITS)))
    }
}
