//! Exact entropies `E(C_n^(λ)) = −∫ C² log C² (1−x²)^{λ−1/2} dx`.
//!
//! The entropy reduces to a rational combination of the integrals
//! `I_m = ∫_0^π cos(2mθ) log C_n^(λ)(cos θ)² dθ`, `0 ≤ m ≤ n+λ`. Each `I_m` is
//! `π` times a log-linear value; [`IntegralTable`] stores those coefficients.
//! Three routes compute the table independently:
//!
//! * [`Route::SeriesLog`]: logarithm of the Szegő sine polynomial as a power
//!   series (production route).
//! * [`Route::FaaDiBruno`]: explicit partition sums for the same Taylor
//!   coefficients.
//! * [`Route::StandardRep`]: logarithm of the cosine-coefficient polynomial.

mod assembly;
mod closed;
mod routes;

pub use assembly::{
    assemble_entropy, assembly_weights, beta_vector, entropy_exact, normalization_factor,
    normalize_entropy, normalized_entropy_exact, BetaVector,
};
pub use closed::{entropy_closed_form, normalized_closed_form, ClosedForm};
pub use routes::{integrals_faa_di_bruno, integrals_series_log, integrals_standard_rep};

use crate::{GegenbauerSpec, LogLinear, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    SeriesLog,
    FaaDiBruno,
    StandardRep,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::SeriesLog, Route::FaaDiBruno, Route::StandardRep];

    pub fn name(self) -> &'static str {
        match self {
            Route::SeriesLog => "series-log",
            Route::FaaDiBruno => "faa-di-bruno",
            Route::StandardRep => "standard-rep",
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Route {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| crate::Error::invalid(format!("unknown route {s:?}")))
    }
}

/// `values[m]` is `I_m / π` for `m = 0..=n+λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralTable {
    pub spec: GegenbauerSpec,
    pub values: Vec<LogLinear>,
    pub route: Route,
}

impl IntegralTable {
    pub fn get(&self, m: usize) -> Option<&LogLinear> {
        self.values.get(m)
    }

    /// First index at which two tables differ, if any.
    pub fn first_mismatch(&self, other: &IntegralTable) -> Option<usize> {
        let len = self.values.len().max(other.values.len());
        (0..len).find(|&m| self.values.get(m) != other.values.get(m))
    }
}

/// Dispatches to the requested route.
pub fn integrals(spec: GegenbauerSpec, route: Route) -> Result<IntegralTable> {
    match route {
        Route::SeriesLog => integrals_series_log(spec),
        Route::FaaDiBruno => integrals_faa_di_bruno(spec),
        Route::StandardRep => integrals_standard_rep(spec),
    }
}
