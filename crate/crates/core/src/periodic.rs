//! Periodic extension of a base-interval function.
//!
//! [`fold_time`] maps any `t >= t0` into the base interval `(t0, t0 + T]`
//! (with `t0` itself mapping to `t0`), and [`PeriodicExtension`] evaluates
//! a base function at the folded time. The extension is exactly periodic;
//! it is generally discontinuous at period seams unless the base function
//! takes equal values at both ends of its interval, and no smoothing is
//! applied there.

use std::fmt;
use std::sync::Arc;

use crate::interpolation::Interpolant;
use crate::real::{to_f64, Real};

/// Errors from time folding and periodic evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum PeriodicError {
    /// Evaluation time before the base interval start.
    BeforeBase { t: f64, t0: f64 },
    /// Period must be positive and finite.
    InvalidPeriod { period: f64 },
}

impl fmt::Display for PeriodicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodicError::BeforeBase { t, t0 } => {
                write!(f, "t={t} is before the base interval start t0={t0}")
            }
            PeriodicError::InvalidPeriod { period } => {
                write!(f, "period must be positive, got {period}")
            }
        }
    }
}

impl std::error::Error for PeriodicError {}

/// Folds `t >= t0` into the base interval.
///
/// Returns the unique `tau` in `(t0, t0 + period]` with `t - tau` a
/// non-negative integer multiple of `period`; as the one exception,
/// `fold_time(t0) = t0` so the full domain `[t0, inf)` is covered.
///
/// `k = ceil((t - t0)/period) - 1` selects the period; if the remainder
/// then computes to exactly zero (possible when the ratio rounds up to an
/// integer), `k` is decremented so the half-open-left convention survives
/// rounding.
pub fn fold_time<R: Real>(t: R, t0: R, period: R) -> Result<R, PeriodicError> {
    if !(period > R::zero()) || !period.is_finite() {
        return Err(PeriodicError::InvalidPeriod {
            period: to_f64(period),
        });
    }
    if t < t0 {
        return Err(PeriodicError::BeforeBase {
            t: to_f64(t),
            t0: to_f64(t0),
        });
    }
    if t == t0 {
        return Ok(t0);
    }
    let d = t - t0;
    let mut k = (d / period).ceil() - R::one();
    if k < R::zero() {
        k = R::zero();
    }
    let mut rel = d - k * period;
    if rel <= R::zero() {
        // Ratio rounded up to an integer: step one period back.
        k = k - R::one();
        rel = d - k * period;
    } else if rel > period {
        // Ratio rounded down past an integer: step one period forward.
        k = k + R::one();
        rel = d - k * period;
        if rel <= R::zero() {
            rel = period;
        }
    }
    Ok(t0 + rel.min(period))
}

enum Base<R: Real> {
    Interp(Interpolant<R>),
    Func(Arc<dyn Fn(R) -> R + Send + Sync>),
}

impl<R: Real> Clone for Base<R> {
    fn clone(&self) -> Self {
        match self {
            Base::Interp(ip) => Base::Interp(ip.clone()),
            Base::Func(f) => Base::Func(Arc::clone(f)),
        }
    }
}

impl<R: Real> fmt::Debug for Base<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Interp(ip) => write!(f, "Interp({:?})", ip.kind()),
            Base::Func(_) => write!(f, "Func(<closure>)"),
        }
    }
}

/// A base-interval function extended periodically to `[t0, inf)`.
#[derive(Debug, Clone)]
pub struct PeriodicExtension<R: Real> {
    base: Base<R>,
    t0: R,
    period: R,
}

impl<R: Real> PeriodicExtension<R> {
    /// Wraps an interpolant; the base interval is the interpolant's node
    /// span, so the invariant "base domain equals `[t0, t0 + T]`" holds by
    /// construction.
    pub fn from_interpolant(base: Interpolant<R>) -> Result<Self, PeriodicError> {
        let (lo, hi) = base.domain();
        let period = hi - lo;
        if !(period > R::zero()) || !period.is_finite() {
            return Err(PeriodicError::InvalidPeriod {
                period: to_f64(period),
            });
        }
        Ok(PeriodicExtension {
            base: Base::Interp(base),
            t0: lo,
            period,
        })
    }

    /// Wraps an arbitrary function assumed defined on `[t0, t0 + period]`.
    pub fn from_fn<F>(base: F, t0: R, period: R) -> Result<Self, PeriodicError>
    where
        F: Fn(R) -> R + Send + Sync + 'static,
    {
        if !(period > R::zero()) || !period.is_finite() {
            return Err(PeriodicError::InvalidPeriod {
                period: to_f64(period),
            });
        }
        Ok(PeriodicExtension {
            base: Base::Func(Arc::new(base)),
            t0,
            period,
        })
    }

    pub fn t0(&self) -> R {
        self.t0
    }

    pub fn period(&self) -> R {
        self.period
    }

    /// The base function evaluated at [`fold_time`] of `t`.
    pub fn eval(&self, t: R) -> Result<R, PeriodicError> {
        let tau = fold_time(t, self.t0, self.period)?;
        Ok(match &self.base {
            Base::Interp(ip) => {
                // fold_time keeps tau within one ulp of the node span;
                // clamp so interpolant domain checks cannot trip on it.
                let (lo, hi) = ip.domain();
                let tau = tau.max(lo).min(hi);
                ip.eval(tau).expect("folded time lies in the base domain")
            }
            Base::Func(f) => f(tau),
        })
    }
}
