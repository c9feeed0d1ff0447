//! Numeric core for sustainable-development long-cycle analysis.
//!
//! The crate models an economy's long cycles as a logistic (Verhulst)
//! growth curve composed with a periodic time warp derived from a
//! composite sustainability index:
//!
//! * [`sdf`] aggregates weighted, decimal-scaled indicator panels into
//!   three pillar scores (economic / social / environmental) and their
//!   mean;
//! * [`interpolation`] turns the yearly aggregate into an evaluable
//!   function (barycentric Lagrange polynomial or piecewise-linear);
//! * [`periodic`] extends that base-interval function periodically;
//! * [`logistic`] provides the growth model, closed-form timing formulas
//!   and a least-squares fitter;
//! * [`cycle`] composes logistic and warp into the cycle curve and
//!   analyzes its shape (inflections, phases, periodicity);
//! * [`numerics`] supplies the shared primitives (bisection, finite
//!   differences, sign-change detection) that double as oracles.
//!
//! All modules are generic over the scalar type via [`Real`]; the `*64`
//! aliases below fix `f64`, which is what the companion CLI uses.

// Negated comparisons like `!(x > 0)` are deliberate: they reject NaN
// operands, which `x <= 0` would let through. Range loops index small
// fixed-size matrices where iterator chains obscure the arithmetic.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

pub mod cycle;
pub mod interpolation;
pub mod logistic;
pub mod numerics;
pub mod periodic;
pub mod sdf;

mod real;

pub use real::Real;

/// `f64` aliases for the main domain types.
pub type Bracket64 = numerics::Bracket<f64>;
pub type NodeSet64 = interpolation::NodeSet<f64>;
pub type Interpolant64 = interpolation::Interpolant<f64>;
pub type PeriodicExtension64 = periodic::PeriodicExtension<f64>;
pub type LogisticModel64 = logistic::LogisticModel<f64>;
pub type FitDiagnostics64 = logistic::FitDiagnostics<f64>;
pub type IndicatorPanel64 = sdf::IndicatorPanel<f64>;
pub type SdfSeries64 = sdf::SdfSeries<f64>;
pub type TimeWarp64 = cycle::TimeWarp<f64>;
pub type CycleModel64 = cycle::CycleModel<f64>;
pub type SampledCurve64 = cycle::SampledCurve<f64>;
pub type PhaseSegment64 = cycle::PhaseSegment<f64>;
