//! The logistic (Verhulst) growth model.
//!
//! Canonical form: `y(t) = capacity / (1 + c * exp(-rate * t))` with
//! `c = (capacity - y_init) / y_init`, the solution of
//! `dy/dt = rate * y * (1 - y / capacity)` with `y(0) = y_init`.
//!
//! Besides evaluation and the derivative, the module provides the
//! closed-form timing formulas (doubling time and time to a fraction of
//! capacity) and a damped least-squares fitter. The timing formulas are
//! cross-checked against bisection root finding in the test suites; the
//! closed forms and the root finder are independent code paths.

use std::fmt;

use crate::real::{lit, to_f64, Real};

/// Largest magnitude fed to `exp`; IEEE doubles overflow near 709.
const EXP_ARG_LIMIT: f64 = 700.0;

/// Errors from logistic model construction, timing formulas and fitting.
#[derive(Debug, Clone, PartialEq)]
pub enum LogisticError {
    /// Parameters must satisfy `capacity > 0`, `rate > 0`,
    /// `0 < y_init < capacity`, all finite.
    InvalidParameters { reason: &'static str },
    /// Doubling is unreachable because `2 * y_init >= capacity`.
    Unreachable,
    /// Fraction outside the open interval (0, 1).
    FracOutOfRange { frac: f64 },
    /// The fraction of capacity is below the initial value, so the
    /// crossing time would be negative.
    NotAfterStart { frac: f64 },
    /// Fit data must be strictly positive.
    NonPositiveData { index: usize },
    /// Fit needs at least four samples.
    TooFewSamples { got: usize },
    /// Fit abscissas must be strictly increasing.
    NonMonotoneAbscissas { index: usize },
    /// The fitter could not produce any valid parameter set.
    NoConvergence,
}

impl fmt::Display for LogisticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogisticError::InvalidParameters { reason } => {
                write!(f, "invalid logistic parameters: {reason}")
            }
            LogisticError::Unreachable => {
                write!(f, "doubling unreachable: 2 * y_init >= capacity")
            }
            LogisticError::FracOutOfRange { frac } => {
                write!(f, "fraction must be in (0, 1), got {frac}")
            }
            LogisticError::NotAfterStart { frac } => write!(
                f,
                "fraction {frac} of capacity is below the initial value; \
                 the crossing lies before t = 0"
            ),
            LogisticError::NonPositiveData { index } => {
                write!(f, "fit data must be positive; offending sample {index}")
            }
            LogisticError::TooFewSamples { got } => {
                write!(f, "fit needs at least 4 samples, got {got}")
            }
            LogisticError::NonMonotoneAbscissas { index } => {
                write!(f, "fit abscissas not strictly increasing at index {index}")
            }
            LogisticError::NoConvergence => write!(f, "fit did not converge"),
        }
    }
}

impl std::error::Error for LogisticError {}

/// A logistic growth curve, immutable after construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticModel<R: Real> {
    capacity: R,
    rate: R,
    y_init: R,
}

impl<R: Real> LogisticModel<R> {
    pub fn new(capacity: R, rate: R, y_init: R) -> Result<Self, LogisticError> {
        if !capacity.is_finite() || !rate.is_finite() || !y_init.is_finite() {
            return Err(LogisticError::InvalidParameters {
                reason: "parameters must be finite",
            });
        }
        if !(capacity > R::zero()) {
            return Err(LogisticError::InvalidParameters {
                reason: "capacity must be positive",
            });
        }
        if !(rate > R::zero()) {
            return Err(LogisticError::InvalidParameters {
                reason: "rate must be positive",
            });
        }
        if !(y_init > R::zero() && y_init < capacity) {
            return Err(LogisticError::InvalidParameters {
                reason: "y_init must satisfy 0 < y_init < capacity",
            });
        }
        Ok(LogisticModel {
            capacity,
            rate,
            y_init,
        })
    }

    pub fn capacity(&self) -> R {
        self.capacity
    }

    pub fn rate(&self) -> R {
        self.rate
    }

    pub fn y_init(&self) -> R {
        self.y_init
    }

    /// The offset ratio `c = (capacity - y_init) / y_init`, so that
    /// `y(0) = capacity / (1 + c) = y_init`.
    pub fn offset_ratio(&self) -> R {
        (self.capacity - self.y_init) / self.y_init
    }

    /// `y(t) = capacity / (1 + c * exp(-rate * t))`.
    ///
    /// Overflow-safe: the exponent is clamped to the IEEE range, deep
    /// saturation returns `capacity`, and far-negative times return a tiny
    /// positive value rather than zero.
    pub fn eval(&self, t: R) -> R {
        let c = self.offset_ratio();
        let limit = lit::<R>(EXP_ARG_LIMIT);
        let a = (self.rate * t).max(-limit).min(limit);
        if a >= R::zero() {
            self.capacity / (R::one() + c * (-a).exp())
        } else {
            // exp(-a) would overflow; multiply through by exp(a) instead.
            let e = a.exp();
            self.capacity * e / (e + c)
        }
    }

    /// `dy/dt = rate * y * (1 - y / capacity)`.
    pub fn deriv(&self, t: R) -> R {
        let y = self.eval(t);
        self.rate * y * (R::one() - y / self.capacity)
    }

    /// The normalized curve `F(t) = y(t) / capacity` in (0, 1), which
    /// satisfies `dF/dt = rate * F * (1 - F)`.
    pub fn normalized(&self, t: R) -> R {
        let c = self.offset_ratio();
        let limit = lit::<R>(EXP_ARG_LIMIT);
        let a = (self.rate * t).max(-limit).min(limit);
        if a >= R::zero() {
            (R::one() + c * (-a).exp()).recip()
        } else {
            let e = a.exp();
            e / (e + c)
        }
    }

    /// Time of the inflection point `ln(c) / rate`, where `y` crosses
    /// `capacity / 2` and the growth rate peaks at `rate * capacity / 4`.
    pub fn inflection_time(&self) -> R {
        self.offset_ratio().ln() / self.rate
    }

    /// Time at which output reaches twice the initial value:
    /// `t_2 = -ln[(capacity - 2 y_init) / (2 (capacity - y_init))] / rate`.
    pub fn doubling_time(&self) -> Result<R, LogisticError> {
        let two = lit::<R>(2.0);
        if two * self.y_init >= self.capacity {
            return Err(LogisticError::Unreachable);
        }
        let num = self.capacity - two * self.y_init;
        let den = two * (self.capacity - self.y_init);
        Ok(-(num / den).ln() / self.rate)
    }

    /// Time at which output reaches `frac * capacity`:
    /// `t = ln[frac * (capacity - y_init) / (y_init * (1 - frac))] / rate`.
    ///
    /// `frac * capacity` equal to `y_init` is accepted and yields exactly
    /// zero; anything below it lies before `t = 0` and is rejected.
    pub fn time_to_fraction(&self, frac: R) -> Result<R, LogisticError> {
        if !(frac > R::zero() && frac < R::one()) {
            return Err(LogisticError::FracOutOfRange {
                frac: to_f64(frac),
            });
        }
        if frac * self.capacity < self.y_init {
            return Err(LogisticError::NotAfterStart {
                frac: to_f64(frac),
            });
        }
        let num = frac * (self.capacity - self.y_init);
        let den = self.y_init * (R::one() - frac);
        Ok((num / den).ln() / self.rate)
    }
}

/// Outcome details of [`fit_logistic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitDiagnostics<R: Real> {
    /// Euclidean norm of the residual vector at the returned parameters.
    pub residual_norm: R,
    /// Levenberg-Marquardt iterations performed.
    pub iterations: usize,
    /// Whether the relative parameter change dropped below 1e-10 before
    /// the iteration cap.
    pub converged: bool,
    /// Set when the data cannot identify all three parameters (for
    /// example constant data, where capacity is arbitrary).
    pub degenerate: bool,
}

/// Least-squares fit of a logistic model to samples `(ts[i], ys[i])`.
///
/// Parameters are optimized in log space `(ln capacity, ln rate, ln c)`,
/// which keeps every iterate a valid model. Without an initial guess,
/// `capacity_0 = 1.05 * max(ys)` and the remaining parameters come from
/// ordinary least squares on the logit transform `ln(capacity_0 / y - 1)`.
///
/// Convergence is declared when the relative parameter change drops below
/// 1e-10, with a 200-iteration cap; the best parameters seen are returned
/// either way, with the outcome described in [`FitDiagnostics`].
pub fn fit_logistic<R: Real>(
    ts: &[R],
    ys: &[R],
    init: Option<LogisticModel<R>>,
) -> Result<(LogisticModel<R>, FitDiagnostics<R>), LogisticError> {
    let n = ts.len();
    if n < 4 || ys.len() < 4 {
        return Err(LogisticError::TooFewSamples { got: n.min(ys.len()) });
    }
    if ys.len() != n {
        return Err(LogisticError::TooFewSamples { got: n.min(ys.len()) });
    }
    if let Some(i) = ys.iter().position(|y| !(*y > R::zero()) || !y.is_finite()) {
        return Err(LogisticError::NonPositiveData { index: i });
    }
    for i in 1..n {
        if !(ts[i] > ts[i - 1]) {
            return Err(LogisticError::NonMonotoneAbscissas { index: i });
        }
    }

    let mut theta = match init {
        Some(m) => [
            m.capacity().ln(),
            m.rate().ln(),
            m.offset_ratio().ln(),
        ],
        None => initial_theta(ts, ys),
    };

    let mut cost = residual_cost(ts, ys, &theta);
    if !cost.is_finite() {
        return Err(LogisticError::NoConvergence);
    }
    let mut best_theta = theta;
    let mut best_cost = cost;

    let mut lambda = lit::<R>(1e-3);
    let lambda_cap = lit::<R>(1e14);
    let tol = lit::<R>(1e-10);
    let ten = lit::<R>(10.0);
    let mut converged = false;
    let mut singular = false;
    let mut iterations = 0usize;

    'outer: for _ in 0..200 {
        iterations += 1;
        let (jtj, jtr) = normal_equations(ts, ys, &theta);

        // Damped normal equations; grow lambda until a step reduces cost.
        loop {
            let mut a = jtj;
            for d in 0..3 {
                a[d][d] = a[d][d] * (R::one() + lambda);
            }
            let step = match solve3(a, [-jtr[0], -jtr[1], -jtr[2]]) {
                Some(s) => s,
                None => {
                    singular = true;
                    lambda = lambda * ten;
                    if lambda > lambda_cap {
                        break 'outer;
                    }
                    continue;
                }
            };
            let trial = [theta[0] + step[0], theta[1] + step[1], theta[2] + step[2]];
            let trial_cost = residual_cost(ts, ys, &trial);
            if trial_cost.is_finite() && trial_cost <= cost {
                let rel_change = (0..3).fold(R::zero(), |acc, i| {
                    acc.max(step[i].abs() / (R::one() + theta[i].abs()))
                });
                theta = trial;
                cost = trial_cost;
                if cost < best_cost {
                    best_cost = cost;
                    best_theta = theta;
                }
                lambda = (lambda / ten).max(lit::<R>(1e-12));
                if rel_change < tol {
                    converged = true;
                    break 'outer;
                }
                break;
            }
            lambda = lambda * ten;
            if lambda > lambda_cap {
                break 'outer;
            }
        }
    }

    let model = model_from_theta(best_theta)?;
    let rate_floor = lit::<R>(1e-7);
    let c = model.offset_ratio();
    let degenerate =
        singular || model.rate() < rate_floor || c < lit::<R>(1e-10) || c > lit::<R>(1e10);
    Ok((
        model,
        FitDiagnostics {
            residual_norm: best_cost.sqrt(),
            iterations,
            converged,
            degenerate,
        },
    ))
}

fn initial_theta<R: Real>(ts: &[R], ys: &[R]) -> [R; 3] {
    let max_y = ys.iter().fold(R::zero(), |acc, &y| acc.max(y));
    let capacity0 = lit::<R>(1.05) * max_y;
    // Logit transform: ln(K0/y - 1) = ln(c) - rate * t, fit by OLS.
    let mut sum_t = R::zero();
    let mut sum_z = R::zero();
    let mut count = R::zero();
    let mut zs = Vec::with_capacity(ts.len());
    for (&t, &y) in ts.iter().zip(ys) {
        let ratio = capacity0 / y - R::one();
        let z = ratio.max(lit::<R>(1e-12)).ln();
        zs.push(z);
        sum_t = sum_t + t;
        sum_z = sum_z + z;
        count = count + R::one();
    }
    let mean_t = sum_t / count;
    let mean_z = sum_z / count;
    let mut num = R::zero();
    let mut den = R::zero();
    for (&t, &z) in ts.iter().zip(&zs) {
        num = num + (t - mean_t) * (z - mean_z);
        den = den + (t - mean_t) * (t - mean_t);
    }
    let slope = if den > R::zero() { num / den } else { R::zero() };
    let rate0 = (-slope).max(lit::<R>(1e-8));
    let ln_c0 = mean_z + rate0 * mean_t;
    [
        capacity0.ln(),
        rate0.ln(),
        ln_c0.max(lit::<R>(-27.0)).min(lit::<R>(27.0)),
    ]
}

fn model_from_theta<R: Real>(theta: [R; 3]) -> Result<LogisticModel<R>, LogisticError> {
    let limit = lit::<R>(EXP_ARG_LIMIT);
    let capacity = theta[0].max(-limit).min(limit).exp();
    let rate = theta[1].max(-limit).min(limit).exp();
    let c = theta[2].max(-limit).min(limit).exp();
    let y_init = capacity / (R::one() + c);
    LogisticModel::new(capacity, rate, y_init)
}

/// Model value and partial derivatives with respect to
/// `(ln capacity, ln rate, ln c)` at one abscissa.
fn value_and_gradient<R: Real>(theta: &[R; 3], t: R) -> (R, [R; 3]) {
    let limit = lit::<R>(EXP_ARG_LIMIT);
    let capacity = theta[0].max(-limit).min(limit).exp();
    let rate = theta[1].max(-limit).min(limit).exp();
    let c = theta[2].max(-limit).min(limit).exp();

    let a = (rate * t).max(-limit).min(limit);
    // s = c*exp(-a) / (1 + c*exp(-a)) = 1 - y/capacity, computed on the
    // stable side of the exponent.
    let (y, s) = if a >= R::zero() {
        let e = (-a).exp();
        let d = R::one() + c * e;
        (capacity / d, c * e / d)
    } else {
        let e = a.exp();
        let d = e + c;
        (capacity * e / d, c / d)
    };
    let d_ln_capacity = y;
    let d_ln_rate = y * s * rate * t;
    let d_ln_c = -(y * s);
    (y, [d_ln_capacity, d_ln_rate, d_ln_c])
}

fn residual_cost<R: Real>(ts: &[R], ys: &[R], theta: &[R; 3]) -> R {
    let mut cost = R::zero();
    for (&t, &y) in ts.iter().zip(ys) {
        let (v, _) = value_and_gradient(theta, t);
        let r = v - y;
        cost = cost + r * r;
    }
    cost
}

fn normal_equations<R: Real>(ts: &[R], ys: &[R], theta: &[R; 3]) -> ([[R; 3]; 3], [R; 3]) {
    let mut jtj = [[R::zero(); 3]; 3];
    let mut jtr = [R::zero(); 3];
    for (&t, &y) in ts.iter().zip(ys) {
        let (v, g) = value_and_gradient(theta, t);
        let r = v - y;
        for i in 0..3 {
            jtr[i] = jtr[i] + g[i] * r;
            for j in i..3 {
                jtj[i][j] = jtj[i][j] + g[i] * g[j];
            }
        }
    }
    for i in 0..3 {
        for j in 0..i {
            jtj[i][j] = jtj[j][i];
        }
    }
    (jtj, jtr)
}

/// 3x3 linear solve by Gaussian elimination with partial pivoting.
/// Returns `None` for a (numerically) singular system.
fn solve3<R: Real>(mut a: [[R; 3]; 3], mut b: [R; 3]) -> Option<[R; 3]> {
    for col in 0..3 {
        let mut pivot = col;
        for row in col + 1..3 {
            if a[row][col].abs() > a[pivot][col].abs() {
                pivot = row;
            }
        }
        if a[pivot][col].abs() < lit::<R>(1e-300) {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..3 {
            let factor = a[row][col] / a[col][col];
            for k in col..3 {
                a[row][k] = a[row][k] - factor * a[col][k];
            }
            b[row] = b[row] - factor * b[col];
        }
    }
    let mut x = [R::zero(); 3];
    for col in (0..3).rev() {
        let mut sum = b[col];
        for k in col + 1..3 {
            sum = sum - a[col][k] * x[k];
        }
        x[col] = sum / a[col][col];
        if !x[col].is_finite() {
            return None;
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{find_root, Bracket};

    fn model(capacity: f64, rate: f64, y_init: f64) -> LogisticModel<f64> {
        LogisticModel::new(capacity, rate, y_init).unwrap()
    }

    #[test]
    fn eval_examples() {
        let m = model(1.0, 1.0, 0.5);
        assert_eq!(m.eval(0.0), 0.5);

        let m = model(100.0, 0.37, 10.0);
        assert!((m.eval(0.0) - 10.0).abs() <= 1e-12);

        let m = model(100.0, 0.5, 10.0);
        // The inflection time ln(9)/0.5 crosses half capacity.
        assert!((m.eval(4.394449154672439) - 50.0).abs() <= 1e-6);
        assert!((m.inflection_time() - 4.394449154672439).abs() <= 1e-12);
    }

    #[test]
    fn deriv_examples() {
        let m = model(100.0, 0.5, 10.0);
        assert!((m.deriv(m.inflection_time()) - 12.5).abs() <= 1e-9);
        assert!(m.deriv(1e6) <= 1e-9);

        let m = model(1.0, 1.0, 0.5);
        assert!((m.deriv(0.0) - 0.25).abs() <= 1e-15);
    }

    #[test]
    fn normalized_examples() {
        let m = model(1.0, 1.0, 0.5);
        assert_eq!(m.normalized(0.0), 0.5);
        assert!((m.normalized(1e6) - 1.0).abs() <= 1e-12);

        let m = model(100.0, 0.5, 10.0);
        assert!((m.normalized(0.0) - 0.1).abs() <= 1e-15);
    }

    #[test]
    fn eval_is_overflow_safe() {
        let m = model(100.0, 0.5, 10.0);
        let far_neg = m.eval(-1e9);
        assert!(far_neg > 0.0, "deep past must stay positive, got {far_neg}");
        assert_eq!(m.eval(1e9), 100.0);
    }

    #[test]
    fn doubling_time_examples() {
        let m = model(100.0, 0.5, 10.0);
        let t2 = m.doubling_time().unwrap();
        assert!((t2 - 1.6218604324326578).abs() <= 1e-12);
        assert!((m.eval(t2) - 20.0).abs() <= 20.0 * 1e-9);

        let m = model(4.0, 1.0, 1.0);
        assert!((m.doubling_time().unwrap() - 3.0f64.ln()).abs() <= 1e-12);

        assert_eq!(
            model(100.0, 0.5, 50.0).doubling_time(),
            Err(LogisticError::Unreachable)
        );
    }

    #[test]
    fn time_to_fraction_examples() {
        let m = model(100.0, 0.5, 10.0);
        let t90 = m.time_to_fraction(0.9).unwrap();
        assert!((t90 - 8.788898309344878).abs() <= 1e-12);
        assert!((m.eval(t90) - 90.0).abs() <= 90.0 * 1e-9);

        // frac * capacity == y_init is the boundary; accepted, time 0.
        let m = model(1.0, 1.0, 0.5);
        assert_eq!(m.time_to_fraction(0.5).unwrap(), 0.0);

        // Just above the boundary the time tends to zero from above.
        let m = model(100.0, 0.5, 10.0);
        let t = m.time_to_fraction(0.1 + 1e-9).unwrap();
        assert!(t > 0.0 && t < 1e-6);

        assert_eq!(
            m.time_to_fraction(0.05),
            Err(LogisticError::NotAfterStart { frac: 0.05 })
        );
        assert_eq!(
            m.time_to_fraction(1.0),
            Err(LogisticError::FracOutOfRange { frac: 1.0 })
        );
        assert_eq!(
            m.time_to_fraction(0.0),
            Err(LogisticError::FracOutOfRange { frac: 0.0 })
        );
    }

    #[test]
    fn timing_formulas_match_bisection() {
        let m = model(100.0, 0.5, 10.0);
        let t2 = m.doubling_time().unwrap();
        let oracle = find_root(
            |t| m.eval(t) - 20.0,
            Bracket::new(0.0, 50.0).unwrap(),
            1e-12,
        )
        .unwrap();
        assert!((t2 - oracle).abs() <= 1e-9);

        let t90 = m.time_to_fraction(0.9).unwrap();
        let oracle = find_root(
            |t| m.eval(t) - 90.0,
            Bracket::new(0.0, 50.0).unwrap(),
            1e-12,
        )
        .unwrap();
        assert!((t90 - oracle).abs() <= 1e-9);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(LogisticModel::new(0.0, 1.0, 0.5).is_err());
        assert!(LogisticModel::new(1.0, 0.0, 0.5).is_err());
        assert!(LogisticModel::new(1.0, 1.0, 0.0).is_err());
        assert!(LogisticModel::new(1.0, 1.0, 1.0).is_err());
        assert!(LogisticModel::new(f64::NAN, 1.0, 0.5).is_err());
    }

    #[test]
    fn fit_recovers_noiseless_parameters() {
        let truth = model(100.0, 0.5, 10.0);
        let ts: Vec<f64> = (0..50).map(|i| i as f64 * 20.0 / 49.0).collect();
        let ys: Vec<f64> = ts.iter().map(|&t| truth.eval(t)).collect();
        let (fitted, diag) = fit_logistic(&ts, &ys, None).unwrap();
        assert!(diag.converged, "diagnostics: {diag:?}");
        assert!((fitted.capacity() - 100.0).abs() / 100.0 <= 1e-6);
        assert!((fitted.rate() - 0.5).abs() / 0.5 <= 1e-6);
        assert!((fitted.y_init() - 10.0).abs() / 10.0 <= 1e-6);
    }

    #[test]
    fn fit_flags_constant_data() {
        let ts: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let ys = vec![5.0; 10];
        let (_, diag) = fit_logistic(&ts, &ys, None).unwrap();
        assert!(
            !diag.converged || diag.degenerate,
            "constant data must be flagged: {diag:?}"
        );
    }

    #[test]
    fn fit_rejects_bad_input() {
        assert!(matches!(
            fit_logistic::<f64>(&[0.0, 1.0, 2.0], &[1.0, 2.0, 3.0], None),
            Err(LogisticError::TooFewSamples { got: 3 })
        ));
        assert!(matches!(
            fit_logistic::<f64>(&[0.0, 1.0, 2.0, 3.0], &[1.0, -2.0, 3.0, 4.0], None),
            Err(LogisticError::NonPositiveData { index: 1 })
        ));
        assert!(matches!(
            fit_logistic::<f64>(&[0.0, 2.0, 1.0, 3.0], &[1.0, 2.0, 3.0, 4.0], None),
            Err(LogisticError::NonMonotoneAbscissas { index: 2 })
        ));
    }

    #[test]
    fn fit_is_idempotent() {
        let truth = model(80.0, 0.7, 6.0);
        let ts: Vec<f64> = (0..40).map(|i| i as f64 * 0.5).collect();
        let ys: Vec<f64> = ts.iter().map(|&t| truth.eval(t)).collect();
        let (first, _) = fit_logistic(&ts, &ys, None).unwrap();
        let regenerated: Vec<f64> = ts.iter().map(|&t| first.eval(t)).collect();
        let (second, _) = fit_logistic(&ts, &regenerated, None).unwrap();
        assert!((first.capacity() - second.capacity()).abs() / first.capacity() <= 1e-8);
        assert!((first.rate() - second.rate()).abs() / first.rate() <= 1e-8);
        assert!((first.y_init() - second.y_init()).abs() / first.y_init() <= 1e-8);
    }

    #[test]
    fn variant_fraction_numerator_fails_the_oracle() {
        // Regression guard: a plausible-looking variant of the
        // time-to-fraction formula with numerator (k - y0*(1 - p)) does
        // not satisfy y(t) = p * k; the implemented form does.
        let m = model(100.0, 0.5, 10.0);
        let (k, y0, p) = (100.0f64, 10.0f64, 0.9f64);
        let variant = -((k - y0 * (1.0 - p)) / (p * (k - y0))).ln() / m.rate();
        let oracle = find_root(
            |t| m.eval(t) - p * k,
            Bracket::new(0.0, 50.0).unwrap(),
            1e-12,
        )
        .unwrap();
        assert!((variant - oracle).abs() > 1e-3);
        assert!((m.time_to_fraction(p).unwrap() - oracle).abs() <= 1e-9);
    }
}
