//! Trigonometric representations of `C_n^(λ)(cos θ)`.
//!
//! * standard: `Σ_{m=0}^{n} d_m cos((n−2m)θ)`
//! * Szegő: `c / sin^{2λ−1}θ · Σ_{ν<λ} α_ν sin((n+2ν+1)θ)`, finite for integer `λ ≥ 1`

use num_traits::One;

use super::{standard_coeffs, szego_coeffs, GegenbauerSpec};
use crate::{Error, Precision, Rational, Real, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Standard,
    Szego,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrigRepresentation {
    pub spec: GegenbauerSpec,
    pub kind: RepKind,
    pub coefficients: Vec<Rational>,
    pub prefactor: Rational,
}

impl TrigRepresentation {
    pub fn standard(spec: GegenbauerSpec) -> Self {
        TrigRepresentation {
            spec,
            kind: RepKind::Standard,
            coefficients: standard_coeffs(spec),
            prefactor: Rational::one(),
        }
    }

    pub fn szego(spec: GegenbauerSpec) -> Result<Self> {
        let (c, alpha) = szego_coeffs(spec)?;
        Ok(TrigRepresentation {
            spec,
            kind: RepKind::Szego,
            coefficients: alpha,
            prefactor: c,
        })
    }

    /// Coefficients converted once to `T` for repeated evaluation.
    pub fn evaluator<T: Real>(&self, prec: Precision) -> TrigEvaluator<T> {
        TrigEvaluator {
            n: self.spec.n as usize,
            lambda: self.spec.lambda as usize,
            kind: self.kind,
            coefficients: self
                .coefficients
                .iter()
                .map(|c| T::from_rational(c, prec))
                .collect(),
            prefactor: T::from_rational(&self.prefactor, prec),
            tiny: T::epsilon(prec) * T::from_i64_at(16, prec),
        }
    }

    /// `C_n^(λ)(cos θ)`; the Szegő form fails with
    /// [`Error::SingularPoint`] where `sin θ` vanishes.
    pub fn eval<T: Real>(&self, theta: &T) -> Result<T> {
        self.evaluator(theta.precision()).eval(theta)
    }
}

#[derive(Clone, Debug)]
pub struct TrigEvaluator<T> {
    n: usize,
    lambda: usize,
    kind: RepKind,
    coefficients: Vec<T>,
    prefactor: T,
    tiny: T,
}

impl<T: Real> TrigEvaluator<T> {
    pub fn eval(&self, theta: &T) -> Result<T> {
        match self.kind {
            RepKind::Standard => Ok(self.eval_standard(&theta.cos())),
            RepKind::Szego => self.eval_szego(&theta.cos(), &theta.sin()),
        }
    }

    /// Evaluation from precomputed `cos θ` and `sin θ`.
    pub fn eval_cos_sin(&self, cos: &T, sin: &T) -> Result<T> {
        match self.kind {
            RepKind::Standard => Ok(self.eval_standard(cos)),
            RepKind::Szego => self.eval_szego(cos, sin),
        }
    }

    /// `Σ d_m cos((n−2m)θ)` with `cos(jθ)` from the Chebyshev recurrence.
    /// Symmetric pairs `m`, `n−m` share one cosine.
    pub fn eval_standard(&self, cos: &T) -> T {
        let n = self.n;
        let two_c = cos.clone() + cos.clone();
        let mut t_prev = T::one();
        let mut t_cur = cos.clone();
        let mut cosines = Vec::with_capacity(n + 1);
        cosines.push(t_prev.clone());
        for _ in 1..=n {
            cosines.push(t_cur.clone());
            let next = two_c.clone() * t_cur.clone() - t_prev;
            t_prev = t_cur;
            t_cur = next;
        }
        let mut acc = T::zero();
        for m in 0..=n / 2 {
            let j = n - 2 * m;
            let term = self.coefficients[m].clone() * cosines[j].clone();
            acc = acc + term.clone();
            if j != 0 {
                acc = acc + term;
            }
        }
        acc
    }

    /// `c/sin^{2λ−1}θ · Σ α_ν sin((n+2ν+1)θ)` with `sin(kθ)` from the
    /// recurrence `sin((k+1)θ) = 2cos θ·sin(kθ) − sin((k−1)θ)`.
    pub fn eval_szego(&self, cos: &T, sin: &T) -> Result<T> {
        if sin.abs() <= self.tiny {
            return Err(Error::SingularPoint(
                "Szego representation at sin(theta) = 0".into(),
            ));
        }
        let two_c = cos.clone() + cos.clone();
        let top = self.n + 2 * self.lambda - 1;
        let mut s_prev = T::zero();
        let mut s_cur = sin.clone();
        let mut acc = T::zero();
        for k in 1..=top {
            if k > self.n && (k - self.n - 1) % 2 == 0 {
                let nu = (k - self.n - 1) / 2;
                acc = acc + self.coefficients[nu].clone() * s_cur.clone();
            }
            let next = two_c.clone() * s_cur.clone() - s_prev;
            s_prev = s_cur;
            s_cur = next;
        }
        let mut denom = T::one();
        for _ in 0..2 * self.lambda - 1 {
            denom = denom * sin.clone();
        }
        Ok(self.prefactor.clone() * acc / denom)
    }
}
