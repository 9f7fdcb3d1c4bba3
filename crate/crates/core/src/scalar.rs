//! Numeric traits shared by the generic evaluators.
//!
//! [`Scalar`] is enough for polynomial recurrences and covers exact rationals.
//! [`Real`] adds the transcendental functions needed for trigonometric
//! evaluation, zero finding and quadrature, and is implemented for `f32`,
//! `f64` and [`BigFloat`].

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num, ToPrimitive};

use crate::{BigFloat, Precision, Rational};

pub trait Scalar: Num + Clone + FromPrimitive + Debug {}

impl<T: Num + Clone + FromPrimitive + Debug> Scalar for T {}

pub trait Real: Scalar + Neg<Output = Self> + PartialOrd {
    /// Nearest value to `r`; `prec` is ignored by fixed-width types.
    fn from_rational(r: &Rational, prec: Precision) -> Self;
    fn from_i64_at(v: i64, prec: Precision) -> Self;
    fn pi(prec: Precision) -> Self;
    /// Unit roundoff for values of magnitude one.
    fn epsilon(prec: Precision) -> Self;
    /// Decimal digits carried by this value.
    fn precision(&self) -> Precision;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;
}

macro_rules! impl_real_prim {
    ($t:ty, $eps:expr, $digits:expr) => {
        impl Real for $t {
            fn from_rational(r: &Rational, _: Precision) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }
            fn from_i64_at(v: i64, _: Precision) -> Self {
                v as $t
            }
            fn pi(_: Precision) -> Self {
                std::f64::consts::PI as $t
            }
            fn epsilon(_: Precision) -> Self {
                $eps
            }
            fn precision(&self) -> Precision {
                Precision::digits($digits)
            }
            fn sin(&self) -> Self {
                <$t>::sin(*self)
            }
            fn cos(&self) -> Self {
                <$t>::cos(*self)
            }
            fn ln(&self) -> Self {
                <$t>::ln(*self)
            }
            fn exp(&self) -> Self {
                <$t>::exp(*self)
            }
            fn sqrt(&self) -> Self {
                <$t>::sqrt(*self)
            }
            fn abs(&self) -> Self {
                <$t>::abs(*self)
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

impl_real_prim!(f32, f32::EPSILON, 7);
impl_real_prim!(f64, f64::EPSILON, 15);

impl Real for BigFloat {
    fn from_rational(r: &Rational, prec: Precision) -> Self {
        BigFloat::from_rational(r, prec)
    }
    fn from_i64_at(v: i64, prec: Precision) -> Self {
        BigFloat::from_i64_with(v, prec)
    }
    fn pi(prec: Precision) -> Self {
        BigFloat::pi(prec)
    }
    fn epsilon(prec: Precision) -> Self {
        BigFloat::epsilon(prec)
    }
    fn precision(&self) -> Precision {
        BigFloat::precision(self)
    }
    fn sin(&self) -> Self {
        BigFloat::sin(self)
    }
    fn cos(&self) -> Self {
        BigFloat::cos(self)
    }
    fn ln(&self) -> Self {
        BigFloat::ln(self)
    }
    fn exp(&self) -> Self {
        BigFloat::exp(self)
    }
    fn sqrt(&self) -> Self {
        BigFloat::sqrt(self)
    }
    fn abs(&self) -> Self {
        BigFloat::abs(self)
    }
    fn to_f64(&self) -> f64 {
        BigFloat::to_f64(self)
    }
}
