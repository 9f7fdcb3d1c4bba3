//! Exact and extended-precision numbers.

pub mod bigfloat;
pub mod entropy;
pub mod loglinear;
pub mod rational;
