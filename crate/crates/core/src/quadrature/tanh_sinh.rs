//! Tanh-sinh (double exponential) quadrature on finite intervals.
//!
//! `∫_a^b f = (b−a)/2 · h Σ_k w_k f(x_k)` with `x = tanh((π/2) sinh t)`. Nodes
//! store the distance `1 − |x| = 2/(1 + e^{2v})` to the nearer endpoint so that
//! points close to an endpoint are placed without cancellation.

use std::any::Any;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::{Precision, Real};

/// Finest level: step `h = 2^-MAX_LEVEL`.
pub const MAX_LEVEL: usize = 8;
/// Levels below this are never accepted as converged.
pub const MIN_LEVEL: usize = 3;

#[derive(Clone, Debug)]
struct Node<T> {
    /// Distance to the endpoint, as a fraction of the half-width.
    offset: T,
    weight: T,
}

#[derive(Debug)]
pub struct TanhSinh<T> {
    prec: Precision,
    center_weight: T,
    /// `levels[0]` holds `t = 1, 2, …`; `levels[k]` the odd multiples of `2^-k`.
    levels: Vec<Vec<Node<T>>>,
}

#[derive(Clone, Debug)]
pub struct Estimate<T> {
    pub value: T,
    pub error: T,
    pub converged: bool,
}

impl<T: Real> TanhSinh<T> {
    pub fn new(prec: Precision) -> Self {
        let pi = T::pi(prec);
        let one = T::one();
        let two = T::from_i64_at(2, prec);
        let half_pi = pi / two.clone();
        let mut cutoff = one.clone();
        let ten = T::from_i64_at(10, prec);
        for _ in 0..prec.decimal_digits() + 10 {
            cutoff = cutoff / ten.clone();
        }
        let node = |t: T| -> Option<Node<T>> {
            let et = t.exp();
            let inv_et = one.clone() / et.clone();
            let sinh_t = (et.clone() - inv_et.clone()) / two.clone();
            let cosh_t = (et + inv_et) / two.clone();
            let v = half_pi.clone() * sinh_t;
            let ev = v.exp();
            let cosh_v = (ev.clone() + one.clone() / ev.clone()) / two.clone();
            let weight = half_pi.clone() * cosh_t / (cosh_v.clone() * cosh_v);
            let offset = two.clone() / (one.clone() + ev.clone() * ev);
            (weight > cutoff && offset > T::zero()).then_some(Node { offset, weight })
        };
        let mut levels = Vec::with_capacity(MAX_LEVEL + 1);
        for level in 0..=MAX_LEVEL {
            let mut h = one.clone();
            for _ in 0..level {
                h = h / two.clone();
            }
            let mut nodes = Vec::new();
            let mut k: i64 = if level == 0 { 1 } else { 0 };
            loop {
                let mult = if level == 0 { k } else { 2 * k + 1 };
                match node(h.clone() * T::from_i64_at(mult, prec)) {
                    Some(nd) => nodes.push(nd),
                    None => break,
                }
                k += 1;
            }
            levels.push(nodes);
        }
        TanhSinh {
            prec,
            center_weight: half_pi,
            levels,
        }
    }

    /// Shared node table for `T` at `prec`.
    pub fn cached(prec: Precision) -> Arc<Self>
    where
        T: Send + Sync + 'static,
    {
        type Cache = Mutex<HashMap<(std::any::TypeId, u32), Arc<dyn Any + Send + Sync>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let key = (std::any::TypeId::of::<T>(), prec.decimal_digits());
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().expect("cache lock").get(&key) {
            return Arc::clone(hit).downcast::<Self>().expect("type keyed");
        }
        let built = Arc::new(Self::new(prec));
        cache
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert_with(|| built.clone() as Arc<dyn Any + Send + Sync>);
        built
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    /// Integrates `f` over `[a, b]`, refining until two successive levels
    /// differ by at most `tol`.
    pub fn integrate(&self, a: &T, b: &T, tol: &T, f: impl Fn(&T) -> T) -> Estimate<T> {
        let two = T::from_i64_at(2, self.prec);
        let half = (b.clone() - a.clone()) / two.clone();
        let mid = (a.clone() + b.clone()) / two.clone();
        let mut raw = self.center_weight.clone() * f(&mid);
        let mut h = T::one();
        let mut prev: Option<T> = None;
        let mut last_err = T::zero();
        for (level, nodes) in self.levels.iter().enumerate() {
            if level > 0 {
                h = h / two.clone();
            }
            for nd in nodes {
                let d = half.clone() * nd.offset.clone();
                let left = a.clone() + d.clone();
                let right = b.clone() - d;
                raw = raw + nd.weight.clone() * (f(&left) + f(&right));
            }
            let estimate = half.clone() * h.clone() * raw.clone();
            if let Some(p) = prev.replace(estimate.clone()) {
                last_err = (estimate.clone() - p).abs();
                if level >= MIN_LEVEL && last_err <= *tol {
                    return Estimate {
                        value: estimate,
                        error: last_err,
                        converged: true,
                    };
                }
            }
        }
        Estimate {
            value: prev.expect("at least one level"),
            error: last_err,
            converged: false,
        }
    }
}
