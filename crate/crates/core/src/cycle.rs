//! Long-cycle curves: a logistic model composed with a periodic time warp.
//!
//! The periodic extension G takes index values, not times, so the
//! composition needs a unit adapter: the effective (warped) time fed to
//! the logistic is `scale * G(t) + offset - calendar_origin`. Scale and
//! offset are explicit configuration ([`TimeWarp`]); `calendar_origin` is
//! the calendar year mapped to logistic time zero and defaults to the
//! warp's base start.
//!
//! Unlike the plain logistic, whose curve has a single inflection, the
//! composed curve inherits G's periodicity exactly and picks up
//! additional inflection points wherever the warp bends; the analysis
//! helpers on [`SampledCurve`] locate those and segment the curve into
//! increasing/decreasing/flat phases.

use std::fmt;

use crate::logistic::LogisticModel;
use crate::numerics::{second_differences, sign_change_indices};
use crate::periodic::{PeriodicError, PeriodicExtension};
use crate::real::{lit, to_f64, Real};

/// Errors from cycle composition, sampling and shape analysis.
#[derive(Debug, Clone, PartialEq)]
pub enum CycleError {
    /// Evaluation time before the warp's base interval.
    BeforeBase { t: f64, t0: f64 },
    /// Bad sampling or deviation-grid request.
    BadRange { reason: &'static str },
    /// Too few samples for the requested analysis.
    TooFewSamples { got: usize, need: usize },
    /// The affine warp scale must be nonzero and finite.
    InvalidScale { scale: f64 },
    /// Auto-windowing needs a non-constant warp.
    DegenerateWarpRange,
    /// Sample times must be strictly increasing.
    NonMonotoneSamples { index: usize },
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::BeforeBase { t, t0 } => {
                write!(f, "t={t} is before the warp base start t0={t0}")
            }
            CycleError::BadRange { reason } => write!(f, "bad range: {reason}"),
            CycleError::TooFewSamples { got, need } => {
                write!(f, "too few samples: got {got}, need at least {need}")
            }
            CycleError::InvalidScale { scale } => {
                write!(f, "warp scale must be nonzero and finite, got {scale}")
            }
            CycleError::DegenerateWarpRange => {
                write!(f, "warp values span an empty range; cannot auto-window")
            }
            CycleError::NonMonotoneSamples { index } => {
                write!(f, "sample times not strictly increasing at index {index}")
            }
        }
    }
}

impl std::error::Error for CycleError {}

impl From<PeriodicError> for CycleError {
    fn from(e: PeriodicError) -> Self {
        match e {
            PeriodicError::BeforeBase { t, t0 } => CycleError::BeforeBase { t, t0 },
            PeriodicError::InvalidPeriod { .. } => CycleError::BadRange {
                reason: "invalid warp period",
            },
        }
    }
}

/// A periodic extension reinterpreted as effective time:
/// `warped_time(t) = scale * G(t) + offset`.
#[derive(Debug, Clone)]
pub struct TimeWarp<R: Real> {
    warp: PeriodicExtension<R>,
    scale: R,
    offset: R,
}

impl<R: Real> TimeWarp<R> {
    pub fn new(warp: PeriodicExtension<R>, scale: R, offset: R) -> Result<Self, CycleError> {
        if scale == R::zero() || !scale.is_finite() || !offset.is_finite() {
            return Err(CycleError::InvalidScale {
                scale: to_f64(scale),
            });
        }
        Ok(TimeWarp { warp, scale, offset })
    }

    /// Scale 1, offset 0: G's values are used as effective time directly.
    pub fn identity(warp: PeriodicExtension<R>) -> Self {
        TimeWarp {
            warp,
            scale: R::one(),
            offset: R::zero(),
        }
    }

    /// Chooses scale and offset so the observed range of G over one period
    /// maps onto `[window_start, window_end]`. The range is probed on a
    /// uniform grid (512 points plus both endpoints).
    pub fn auto_window(
        warp: PeriodicExtension<R>,
        window_start: R,
        window_end: R,
    ) -> Result<Self, CycleError> {
        if !(window_start < window_end) {
            return Err(CycleError::BadRange {
                reason: "window start must be below window end",
            });
        }
        let probes = 512usize;
        let t0 = warp.t0();
        let period = warp.period();
        let mut g_min = R::infinity();
        let mut g_max = -R::infinity();
        for i in 0..=probes {
            let frac = lit::<R>(i as f64 / probes as f64);
            let t = t0 + frac * period;
            let g = warp.eval(t)?;
            g_min = g_min.min(g);
            g_max = g_max.max(g);
        }
        if !(g_max > g_min) {
            return Err(CycleError::DegenerateWarpRange);
        }
        let scale = (window_end - window_start) / (g_max - g_min);
        let offset = window_start - scale * g_min;
        Ok(TimeWarp { warp, scale, offset })
    }

    pub fn scale(&self) -> R {
        self.scale
    }

    pub fn offset(&self) -> R {
        self.offset
    }

    pub fn t0(&self) -> R {
        self.warp.t0()
    }

    pub fn period(&self) -> R {
        self.warp.period()
    }

    pub fn periodic(&self) -> &PeriodicExtension<R> {
        &self.warp
    }

    /// `scale * G(t) + offset`.
    pub fn warped_time(&self, t: R) -> Result<R, CycleError> {
        Ok(self.scale * self.warp.eval(t)? + self.offset)
    }
}

/// A logistic model composed with a periodic time warp.
#[derive(Debug, Clone)]
pub struct CycleModel<R: Real> {
    logistic: LogisticModel<R>,
    warp: TimeWarp<R>,
    calendar_origin: R,
}

impl<R: Real> CycleModel<R> {
    /// Composes the logistic with the warp; evaluation is
    /// `logistic(scale * G(t) + offset - calendar_origin)`.
    pub fn compose(logistic: LogisticModel<R>, warp: TimeWarp<R>, calendar_origin: R) -> Self {
        CycleModel {
            logistic,
            warp,
            calendar_origin,
        }
    }

    /// [`CycleModel::compose`] with the default origin: the warp's base
    /// start, so logistic time zero coincides with the base year.
    pub fn with_origin_at_base(logistic: LogisticModel<R>, warp: TimeWarp<R>) -> Self {
        let origin = warp.t0();
        Self::compose(logistic, warp, origin)
    }

    pub fn logistic(&self) -> &LogisticModel<R> {
        &self.logistic
    }

    pub fn warp(&self) -> &TimeWarp<R> {
        &self.warp
    }

    pub fn calendar_origin(&self) -> R {
        self.calendar_origin
    }

    pub fn eval(&self, t: R) -> Result<R, CycleError> {
        let warped = self.warp.warped_time(t)?;
        Ok(self.logistic.eval(warped - self.calendar_origin))
    }

    /// `n` uniformly spaced samples over `[t_start, t_end]`, both
    /// endpoints included.
    pub fn sample(&self, t_start: R, t_end: R, n: usize) -> Result<SampledCurve<R>, CycleError> {
        if !(t_start < t_end) {
            return Err(CycleError::BadRange {
                reason: "t_start must be below t_end",
            });
        }
        if n < 2 {
            return Err(CycleError::BadRange {
                reason: "need at least 2 samples",
            });
        }
        let mut ts = Vec::with_capacity(n);
        let mut ys = Vec::with_capacity(n);
        let steps = lit::<R>((n - 1) as f64);
        for i in 0..n {
            let t = if i == n - 1 {
                t_end
            } else {
                t_start + (t_end - t_start) * lit::<R>(i as f64) / steps
            };
            ts.push(t);
            ys.push(self.eval(t)?);
        }
        let meta = CurveMeta {
            model: format!(
                "logistic(capacity={}, rate={}, y_init={}) o warp(scale={}, offset={}, t0={}, period={}), origin={}",
                self.logistic.capacity(),
                self.logistic.rate(),
                self.logistic.y_init(),
                self.warp.scale(),
                self.warp.offset(),
                self.warp.t0(),
                self.warp.period(),
                self.calendar_origin,
            ),
            grid: format!("uniform[{t_start}, {t_end}] n={n}"),
        };
        SampledCurve::new(ts, ys, meta)
    }

    /// Maximum of `|y(t + period) - y(t)|` over a uniform grid of `grid`
    /// points covering one period strictly beyond the warp base start
    /// (the base point itself is excluded: it maps to the base function's
    /// left end, which matches the period end only for seam-continuous
    /// bases).
    pub fn periodicity_deviation(&self, period: R, grid: usize) -> Result<R, CycleError> {
        if grid < 2 {
            return Err(CycleError::BadRange {
                reason: "deviation grid needs at least 2 points",
            });
        }
        if !(period > R::zero()) || !period.is_finite() {
            return Err(CycleError::BadRange {
                reason: "deviation period must be positive",
            });
        }
        let t0 = self.warp.t0();
        let steps = lit::<R>(grid as f64);
        let mut max_dev = R::zero();
        for i in 0..grid {
            let t = t0 + period * lit::<R>((i + 1) as f64) / steps;
            let dev = (self.eval(t + period)? - self.eval(t)?).abs();
            max_dev = max_dev.max(dev);
        }
        Ok(max_dev)
    }
}

/// Provenance carried along with sampled curves.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveMeta {
    /// Human-readable description of the generating model.
    pub model: String,
    /// Description of the sampling grid.
    pub grid: String,
}

impl CurveMeta {
    pub fn unspecified() -> Self {
        CurveMeta {
            model: String::new(),
            grid: String::new(),
        }
    }
}

/// Classification of a curve segment by its first differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Increasing,
    Decreasing,
    Flat,
}

impl Trend {
    pub fn name(&self) -> &'static str {
        match self {
            Trend::Increasing => "increasing",
            Trend::Decreasing => "decreasing",
            Trend::Flat => "flat",
        }
    }
}

impl fmt::Display for Trend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A maximal run of consecutive same-trend intervals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSegment<R: Real> {
    pub start: R,
    pub end: R,
    pub trend: Trend,
}

/// A discretized curve: strictly increasing sample times with values.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve<R: Real> {
    ts: Vec<R>,
    ys: Vec<R>,
    meta: CurveMeta,
}

impl<R: Real> SampledCurve<R> {
    pub fn new(ts: Vec<R>, ys: Vec<R>, meta: CurveMeta) -> Result<Self, CycleError> {
        if ts.len() < 2 || ts.len() != ys.len() {
            return Err(CycleError::TooFewSamples {
                got: ts.len().min(ys.len()),
                need: 2,
            });
        }
        for i in 1..ts.len() {
            if !(ts[i] > ts[i - 1]) {
                return Err(CycleError::NonMonotoneSamples { index: i });
            }
        }
        Ok(SampledCurve { ts, ys, meta })
    }

    pub fn ts(&self) -> &[R] {
        &self.ts
    }

    pub fn ys(&self) -> &[R] {
        &self.ys
    }

    pub fn meta(&self) -> &CurveMeta {
        &self.meta
    }

    pub fn len(&self) -> usize {
        self.ts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ts.is_empty()
    }

    /// Inflection points: sign changes of the second differences, with
    /// values within `eps` of zero suppressed. Each crossing is localized
    /// by linear interpolation between the bracketing interior samples;
    /// accuracy is limited by the grid spacing.
    pub fn inflection_points(&self, eps: R) -> Result<Vec<(R, R)>, CycleError> {
        if self.ts.len() < 5 {
            return Err(CycleError::TooFewSamples {
                got: self.ts.len(),
                need: 5,
            });
        }
        let d2 = second_differences(&self.ts, &self.ys).expect("validated at construction");
        let changes = sign_change_indices(&d2, eps);
        let mut out = Vec::with_capacity(changes.len());
        for i in changes {
            // The partner is the next significant entry; suppressed
            // near-zeros may sit in between.
            let j = (i + 1..d2.len())
                .find(|&j| d2[j].abs() > eps)
                .expect("a sign change has a significant successor");
            let (tau1, v1) = (self.ts[i + 1], d2[i]);
            let (tau2, v2) = (self.ts[j + 1], d2[j]);
            let tau = tau1 + (tau2 - tau1) * v1 / (v1 - v2);
            out.push((tau, self.value_at(tau)));
        }
        Ok(out)
    }

    /// Linear interpolation of the sampled values at `tau`, which must lie
    /// within the sampled span.
    fn value_at(&self, tau: R) -> R {
        let mut lo = 0usize;
        let mut hi = self.ts.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.ts[mid] <= tau {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let theta = (tau - self.ts[lo]) / (self.ts[hi] - self.ts[lo]);
        self.ys[lo] + theta * (self.ys[hi] - self.ys[lo])
    }

    /// Partitions the sampled span into maximal increasing / decreasing /
    /// flat segments. First differences with `|diff| <= eps` count as
    /// flat; adjacent same-trend runs are merged.
    pub fn phase_segments(&self, eps: R) -> Result<Vec<PhaseSegment<R>>, CycleError> {
        if self.ts.len() < 2 {
            return Err(CycleError::TooFewSamples {
                got: self.ts.len(),
                need: 2,
            });
        }
        let classify = |diff: R| {
            if diff.abs() <= eps {
                Trend::Flat
            } else if diff > R::zero() {
                Trend::Increasing
            } else {
                Trend::Decreasing
            }
        };
        let mut segments: Vec<PhaseSegment<R>> = Vec::new();
        for i in 0..self.ts.len() - 1 {
            let trend = classify(self.ys[i + 1] - self.ys[i]);
            match segments.last_mut() {
                Some(last) if last.trend == trend => last.end = self.ts[i + 1],
                _ => segments.push(PhaseSegment {
                    start: self.ts[i],
                    end: self.ts[i + 1],
                    trend,
                }),
            }
        }
        Ok(segments)
    }
}
