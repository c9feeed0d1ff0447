//! Scalar abstraction for the numeric core.
//!
//! Everything in this crate is generic over [`Real`], a floating-point
//! scalar (`f32` or `f64` in practice). Concrete `f64` aliases live at the
//! crate root.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar used throughout the numeric core.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` literal into `R`. Panics only if `R` cannot represent
/// ordinary finite literals, which no `Real` type of interest does.
#[inline]
pub(crate) fn lit<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("finite literal must convert")
}

/// Converts a scalar to `f64` for error messages and reports.
#[inline]
pub(crate) fn to_f64<R: Real>(x: R) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
