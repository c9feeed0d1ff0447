//! Shared scalar numerics: bracketed root finding, finite differences and
//! sign-change detection.
//!
//! These are the analysis primitives the rest of the crate builds on, and
//! they double as independent oracles for the closed-form timing formulas
//! of the logistic module.

use std::fmt;

use crate::real::{lit, to_f64, Real};

/// Errors from the scalar numerics routines.
#[derive(Debug, Clone, PartialEq)]
pub enum NumericsError {
    /// Bracket endpoints are not ordered `lo < hi`.
    InvalidBracket { lo: f64, hi: f64 },
    /// The function has the same sign at both bracket endpoints.
    NoSignChange { f_lo: f64, f_hi: f64 },
    /// Too few samples for the requested stencil.
    TooFewSamples { got: usize, need: usize },
    /// Abscissas are not strictly increasing.
    NonMonotoneGrid { index: usize },
    /// Tolerance must be positive.
    InvalidTolerance,
}

impl fmt::Display for NumericsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericsError::InvalidBracket { lo, hi } => {
                write!(f, "invalid bracket: lo={lo} must be < hi={hi}")
            }
            NumericsError::NoSignChange { f_lo, f_hi } => {
                write!(f, "no sign change over bracket: f(lo)={f_lo}, f(hi)={f_hi}")
            }
            NumericsError::TooFewSamples { got, need } => {
                write!(f, "too few samples: got {got}, need at least {need}")
            }
            NumericsError::NonMonotoneGrid { index } => {
                write!(f, "abscissas not strictly increasing at index {index}")
            }
            NumericsError::InvalidTolerance => write!(f, "tolerance must be positive"),
        }
    }
}

impl std::error::Error for NumericsError {}

/// An interval `[lo, hi]` expected to bracket a root.
///
/// Ordering is checked at construction; the sign condition is checked when
/// the bracket is used, because it depends on the target function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket<R: Real> {
    lo: R,
    hi: R,
}

impl<R: Real> Bracket<R> {
    pub fn new(lo: R, hi: R) -> Result<Self, NumericsError> {
        if !(lo < hi) {
            return Err(NumericsError::InvalidBracket {
                lo: to_f64(lo),
                hi: to_f64(hi),
            });
        }
        Ok(Bracket { lo, hi })
    }

    pub fn lo(&self) -> R {
        self.lo
    }

    pub fn hi(&self) -> R {
        self.hi
    }
}

/// Bisection root finder. The tolerance is on the bracket width, so the
/// returned abscissa is within `tol` of a true root of a continuous `f`.
///
/// Requires `f(lo)` and `f(hi)` to have opposite signs. An endpoint that is
/// exactly zero is returned as the root immediately.
pub fn find_root<R, F>(f: F, bracket: Bracket<R>, tol: R) -> Result<R, NumericsError>
where
    R: Real,
    F: Fn(R) -> R,
{
    if !(tol > R::zero()) {
        return Err(NumericsError::InvalidTolerance);
    }
    let mut lo = bracket.lo();
    let mut hi = bracket.hi();
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == R::zero() {
        return Ok(lo);
    }
    if f_hi == R::zero() {
        return Ok(hi);
    }
    if f_lo * f_hi > R::zero() {
        return Err(NumericsError::NoSignChange {
            f_lo: to_f64(f_lo),
            f_hi: to_f64(f_hi),
        });
    }

    let half = lit::<R>(0.5);
    // 64 halvings take any desk-scale bracket below any meaningful f64
    // tolerance; the width check is what actually terminates.
    for _ in 0..200 {
        let mid = half * (lo + hi);
        if mid <= lo || mid >= hi {
            // Bracket narrower than one ulp: cannot improve.
            return Ok(mid.max(lo).min(hi));
        }
        let f_mid = f(mid);
        if f_mid == R::zero() {
            return Ok(mid);
        }
        if f_mid * f_lo < R::zero() {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
        if hi - lo <= tol {
            return Ok(half * (lo + hi));
        }
    }
    Ok(half * (lo + hi))
}

/// Central second-difference estimates of the second derivative at the
/// interior samples of a (possibly nonuniform) grid.
///
/// Uses the three-point formula
/// `2/(h0+h1) * ((y[i+1]-y[i])/h1 - (y[i]-y[i-1])/h0)`,
/// which is exact for polynomials of degree <= 2 on any grid. The output
/// has `ts.len() - 2` entries, one per interior sample.
pub fn second_differences<R: Real>(ts: &[R], ys: &[R]) -> Result<Vec<R>, NumericsError> {
    if ts.len() < 3 || ys.len() < 3 {
        return Err(NumericsError::TooFewSamples {
            got: ts.len().min(ys.len()),
            need: 3,
        });
    }
    if ts.len() != ys.len() {
        return Err(NumericsError::TooFewSamples {
            got: ts.len().min(ys.len()),
            need: ts.len().max(ys.len()),
        });
    }
    for i in 1..ts.len() {
        if !(ts[i] > ts[i - 1]) {
            return Err(NumericsError::NonMonotoneGrid { index: i });
        }
    }
    let two = lit::<R>(2.0);
    let mut out = Vec::with_capacity(ts.len() - 2);
    for i in 1..ts.len() - 1 {
        let h0 = ts[i] - ts[i - 1];
        let h1 = ts[i + 1] - ts[i];
        let left = (ys[i] - ys[i - 1]) / h0;
        let right = (ys[i + 1] - ys[i]) / h1;
        out.push(two * (right - left) / (h0 + h1));
    }
    Ok(out)
}

/// Indices where the sequence changes sign, with values in `[-eps, eps]`
/// treated as zero.
///
/// A change between two significant values (possibly separated by a run of
/// suppressed near-zeros) is reported at the index of the earlier
/// significant value.
pub fn sign_change_indices<R: Real>(vals: &[R], eps: R) -> Vec<usize> {
    let mut out = Vec::new();
    let mut last: Option<(usize, bool)> = None;
    for (i, &v) in vals.iter().enumerate() {
        if v.abs() <= eps {
            continue;
        }
        let positive = v > R::zero();
        if let Some((j, prev_positive)) = last {
            if prev_positive != positive {
                out.push(j);
            }
        }
        last = Some((i, positive));
    }
    out
}

/// Scale-aware default tolerance for [`sign_change_indices`]:
/// `1e-9 * max |vals|`.
pub fn default_sign_eps<R: Real>(vals: &[R]) -> R {
    let max_abs = vals
        .iter()
        .fold(R::zero(), |acc, &v| acc.max(v.abs()));
    lit::<R>(1e-9) * max_abs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bracket(lo: f64, hi: f64) -> Bracket<f64> {
        Bracket::new(lo, hi).unwrap()
    }

    #[test]
    fn find_root_linear() {
        let root = find_root(|x| x - 1.0, bracket(0.0, 2.0), 1e-12).unwrap();
        assert_eq!(root, 1.0);
    }

    #[test]
    fn find_root_sqrt_two() {
        let root = find_root(|x| x * x - 2.0, bracket(1.0, 2.0), 1e-12).unwrap();
        assert!((root - std::f64::consts::SQRT_2).abs() <= 1e-12);
    }

    #[test]
    fn find_root_logistic_doubling() {
        // y(t) = 100 / (1 + 9 exp(-t/2)); root of y(t) - 20 is 2 ln(2.25).
        let y = |t: f64| 100.0 / (1.0 + 9.0 * (-0.5 * t).exp());
        let root = find_root(|t| y(t) - 20.0, bracket(0.0, 10.0), 1e-12).unwrap();
        assert!((root - 1.621_860_432_432_657_8f64).abs() <= 1e-9);
    }

    #[test]
    fn find_root_rejects_bad_bracket() {
        assert_eq!(
            Bracket::<f64>::new(2.0, 1.0),
            Err(NumericsError::InvalidBracket { lo: 2.0, hi: 1.0 })
        );
        let err = find_root(|x: f64| x * x + 1.0, bracket(0.0, 1.0), 1e-9).unwrap_err();
        assert!(matches!(err, NumericsError::NoSignChange { .. }));
    }

    #[test]
    fn find_root_accepts_zero_endpoint() {
        let root = find_root(|x| x, bracket(0.0, 1.0), 1e-12).unwrap();
        assert_eq!(root, 0.0);
    }

    #[test]
    fn second_differences_quadratic() {
        let d2 = second_differences(&[0.0, 1.0, 2.0], &[0.0, 1.0, 4.0]).unwrap();
        assert_eq!(d2, vec![2.0]);
    }

    #[test]
    fn second_differences_linear() {
        let d2 = second_differences(&[0.0, 1.0, 2.0, 3.0], &[0.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(d2, vec![0.0, 0.0]);
    }

    #[test]
    fn second_differences_cubic_at_center() {
        let d2 = second_differences(&[0.0, 1.0, 2.0], &[0.0, 1.0, 8.0]).unwrap();
        assert_eq!(d2, vec![6.0]);
    }

    #[test]
    fn second_differences_nonuniform_quadratic_exact() {
        // y = 3t^2 - t + 2 on an irregular grid; second derivative is 6.
        let ts = [0.0, 0.7, 1.1, 2.9, 3.0];
        let ys: Vec<f64> = ts.iter().map(|t| 3.0 * t * t - t + 2.0).collect();
        let d2 = second_differences(&ts, &ys).unwrap();
        for v in d2 {
            assert!((v - 6.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn second_differences_errors() {
        assert!(matches!(
            second_differences(&[0.0, 1.0], &[0.0, 1.0]),
            Err(NumericsError::TooFewSamples { .. })
        ));
        assert!(matches!(
            second_differences(&[0.0, 1.0, 1.0], &[0.0, 1.0, 2.0]),
            Err(NumericsError::NonMonotoneGrid { index: 2 })
        ));
    }

    #[test]
    fn sign_changes_basic() {
        assert_eq!(sign_change_indices(&[1.0, -1.0], 0.0), vec![0]);
        assert_eq!(sign_change_indices(&[1.0, 1.0, 1.0], 0.0), Vec::<usize>::new());
        assert_eq!(sign_change_indices::<f64>(&[], 0.0), Vec::<usize>::new());
    }

    #[test]
    fn sign_changes_suppress_near_zero() {
        assert_eq!(sign_change_indices(&[2.0, 1e-12, -2.0], 1e-9), vec![0]);
        // A suppressed value alone does not create a change.
        assert_eq!(
            sign_change_indices(&[2.0, 1e-12, 2.0], 1e-9),
            Vec::<usize>::new()
        );
    }
}
