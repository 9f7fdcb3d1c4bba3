//! Exact Shannon entropies of Gegenbauer polynomials with integer parameter.
//!
//! Entropies come out as `π·(Σ cᵢ·log pᵢ + q)` with rational `cᵢ`, `q`.
//! Three independent exact routes compute the underlying Fourier-log integrals
//! and a tanh-sinh quadrature oracle checks the results numerically.

pub mod entropy;
pub mod error;
pub mod exact;
pub mod gegenbauer;
pub mod quadrature;
pub mod scalar;
pub mod series;
pub mod verify;

pub use entropy::{
    assemble_entropy, assembly_weights, beta_vector, entropy_closed_form, entropy_exact, integrals,
    integrals_faa_di_bruno, integrals_series_log, integrals_standard_rep, normalize_entropy,
    normalized_closed_form, normalized_entropy_exact, BetaVector, ClosedForm, IntegralTable, Route,
};
pub use error::{Error, Result};
pub use exact::bigfloat::{BigFloat, Precision};
pub use exact::entropy::{EntropyJson, ExactEntropy, LogTerm};
pub use exact::loglinear::LogLinear;
pub use gegenbauer::{GegenbauerSpec, RepKind, TrigRepresentation};
pub use quadrature::{
    entropy_quadrature, integral_i_quadrature, norm_quadrature, normalized_entropy_quadrature,
    QuadratureConfig,
};
pub use scalar::{Real, Scalar};

/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
