//! Per-polynomial consistency checks used by verification sweeps.

use num_traits::{One, Zero};

use crate::entropy::{assemble_entropy, assembly_weights, beta_vector, integrals, Route};
use crate::{
    entropy_quadrature, normalize_entropy, BigFloat, ExactEntropy, GegenbauerSpec,
    QuadratureConfig, Rational, Result,
};

/// Deliberate corruption of one `β_m`, for exercising failure reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fault {
    pub lambda: u32,
    pub n: u32,
    pub m: usize,
}

impl Fault {
    fn applies(&self, spec: GegenbauerSpec) -> bool {
        self.lambda == spec.lambda && self.n == spec.n
    }
}

#[derive(Clone, Debug)]
pub struct CellReport {
    pub spec: GegenbauerSpec,
    /// First route whose table differs from series-log, with the index.
    pub route_mismatch: Option<(Route, usize)>,
    /// First `m` where `β_m` differs from the directly collected weight.
    pub beta_mismatch: Option<usize>,
    pub exact: BigFloat,
    pub quadrature: BigFloat,
    pub abs_diff: f64,
    pub oracle_ok: bool,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.route_mismatch.is_none() && self.beta_mismatch.is_none() && self.oracle_ok
    }

    /// Index most likely responsible for a failure.
    pub fn offending_m(&self) -> Option<usize> {
        self.route_mismatch.map(|(_, m)| m).or(self.beta_mismatch)
    }
}

/// First mismatch between the series-log table and the other routes.
pub fn check_routes(spec: GegenbauerSpec) -> Result<Option<(Route, usize)>> {
    let base = integrals(spec, Route::SeriesLog)?;
    for route in [Route::FaaDiBruno, Route::StandardRep] {
        if let Some(m) = base.first_mismatch(&integrals(spec, route)?) {
            return Ok(Some((route, m)));
        }
    }
    Ok(None)
}

/// Exact entropy assembled from a possibly faulted `β`, and the first `m`
/// where that `β` disagrees with the collected weights.
pub fn exact_with_fault(
    spec: GegenbauerSpec,
    fault: Option<Fault>,
) -> Result<(ExactEntropy, Option<usize>)> {
    let mut beta = beta_vector(spec)?;
    if let Some(f) = fault.filter(|f| f.applies(spec)) {
        if (1..=beta.beta.len()).contains(&f.m) {
            let old = beta.get(f.m);
            let new = if old.is_zero() { Rational::one() } else { -old };
            beta.set(f.m, new);
        }
    }
    let weights = assembly_weights(spec)?;
    let mismatch = (1..weights.len()).find(|&m| weights[m] != beta.get(m));
    let table = integrals(spec, Route::SeriesLog)?;
    Ok((assemble_entropy(&table, &beta)?, mismatch))
}

/// Runs every check for one polynomial.
pub fn verify_cell(
    spec: GegenbauerSpec,
    normalized: bool,
    tol: f64,
    cfg: &QuadratureConfig,
    fault: Option<Fault>,
) -> Result<CellReport> {
    let prec = crate::Precision::digits(cfg.working_precision);
    let route_mismatch = check_routes(spec)?;
    let (mut exact, beta_mismatch) = exact_with_fault(spec, fault)?;
    let quadrature = if normalized {
        exact = normalize_entropy(spec, &exact)?;
        crate::normalized_entropy_quadrature(spec, cfg)?
    } else {
        entropy_quadrature(spec, cfg)?
    };
    let exact = exact.eval(prec);
    let abs_diff = (&exact - &quadrature).abs().to_f64();
    Ok(CellReport {
        spec,
        route_mismatch,
        beta_mismatch,
        exact,
        quadrature,
        abs_diff,
        oracle_ok: abs_diff < tol,
    })
}

/// First `m` whose exact `I_m` disagrees with quadrature by at least `tol`.
/// Used to pin down an oracle failure that no exact check explains.
pub fn locate_integral_mismatch(
    spec: GegenbauerSpec,
    tol: f64,
    cfg: &QuadratureConfig,
) -> Result<Option<usize>> {
    let prec = crate::Precision::digits(cfg.working_precision);
    let table = integrals(spec, Route::SeriesLog)?;
    let pi = BigFloat::pi(prec);
    for (m, value) in table.values.iter().enumerate() {
        let exact = value.eval(prec) * &pi;
        let numeric = crate::integral_i_quadrature(spec, m as u32, cfg)?;
        if (exact - numeric).abs().to_f64() >= tol {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
