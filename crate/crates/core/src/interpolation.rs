//! Polynomial and piecewise-linear interpolation of sampled values.
//!
//! The polynomial interpolant is represented in barycentric form (second
//! kind), which is numerically stable and reproduces node values exactly.
//! A piecewise-linear interpolant is available as an alternative for data
//! where a high-degree polynomial through equispaced nodes would
//! oscillate (Runge phenomenon); [`Interpolant::lagrange`] refuses more
//! than [`DEFAULT_NODE_CAP`] nodes for that reason.

use std::fmt;

use crate::real::{lit, to_f64, Real};

/// Default maximum node count for the polynomial interpolant (degree 12).
pub const DEFAULT_NODE_CAP: usize = 13;

/// Errors from interpolant construction and evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum InterpolationError {
    /// Fewer than two nodes.
    TooFewNodes { got: usize },
    /// Node and value slices differ in length.
    LengthMismatch { nodes: usize, values: usize },
    /// Two nodes share an abscissa.
    DuplicateNodes { at: f64 },
    /// A node or value is NaN or infinite.
    NonFinite,
    /// Node count above the polynomial cap.
    DegreeCapExceeded { nodes: usize, cap: usize },
    /// Evaluation point outside the interpolation domain.
    OutOfDomain { t: f64, lo: f64, hi: f64 },
    /// Extrapolation is only defined for the polynomial kind.
    ExtrapolationUnsupported,
}

impl fmt::Display for InterpolationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterpolationError::TooFewNodes { got } => {
                write!(f, "need at least 2 nodes, got {got}")
            }
            InterpolationError::LengthMismatch { nodes, values } => {
                write!(f, "{nodes} nodes but {values} values")
            }
            InterpolationError::DuplicateNodes { at } => {
                write!(f, "duplicate node abscissa at t={at}")
            }
            InterpolationError::NonFinite => write!(f, "nodes and values must be finite"),
            InterpolationError::DegreeCapExceeded { nodes, cap } => write!(
                f,
                "{nodes} nodes exceed the polynomial cap of {cap}; \
                 use the piecewise-linear interpolant for denser data"
            ),
            InterpolationError::OutOfDomain { t, lo, hi } => {
                write!(f, "t={t} outside interpolation domain [{lo}, {hi}]")
            }
            InterpolationError::ExtrapolationUnsupported => {
                write!(f, "extrapolation is only supported for the polynomial kind")
            }
        }
    }
}

impl std::error::Error for InterpolationError {}

/// Interpolation nodes `(t_i, h(t_i))`, stored sorted by abscissa.
///
/// Input order does not matter; pairs are sorted on construction, so two
/// orderings of the same data build identical interpolants.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet<R: Real> {
    nodes: Vec<R>,
    values: Vec<R>,
}

impl<R: Real> NodeSet<R> {
    pub fn new(nodes: Vec<R>, values: Vec<R>) -> Result<Self, InterpolationError> {
        if nodes.len() != values.len() {
            return Err(InterpolationError::LengthMismatch {
                nodes: nodes.len(),
                values: values.len(),
            });
        }
        if nodes.len() < 2 {
            return Err(InterpolationError::TooFewNodes { got: nodes.len() });
        }
        if nodes.iter().chain(values.iter()).any(|v| !v.is_finite()) {
            return Err(InterpolationError::NonFinite);
        }
        let mut pairs: Vec<(R, R)> = nodes.into_iter().zip(values).collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite nodes are ordered"));
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(InterpolationError::DuplicateNodes { at: to_f64(w[0].0) });
            }
        }
        let (nodes, values) = pairs.into_iter().unzip();
        Ok(NodeSet { nodes, values })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[R] {
        &self.nodes
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// `[first node, last node]`.
    pub fn domain(&self) -> (R, R) {
        (self.nodes[0], self.nodes[self.nodes.len() - 1])
    }
}

/// Which interpolant family an [`Interpolant`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterpolantKind {
    LagrangeBarycentric,
    PiecewiseLinear,
}

/// An evaluable interpolant through a [`NodeSet`].
#[derive(Debug, Clone, PartialEq)]
pub struct Interpolant<R: Real> {
    kind: InterpolantKind,
    nodes: NodeSet<R>,
    /// Barycentric weights `w_i = 1 / prod_{j != i} (t_i - t_j)`;
    /// empty for the piecewise-linear kind.
    weights: Vec<R>,
    extrapolate: bool,
}

impl<R: Real> Interpolant<R> {
    /// The unique interpolating polynomial of degree `<= n` through the
    /// `n + 1` nodes, in barycentric form. At most [`DEFAULT_NODE_CAP`]
    /// nodes are accepted.
    pub fn lagrange(nodes: NodeSet<R>) -> Result<Self, InterpolationError> {
        Self::lagrange_with_cap(nodes, DEFAULT_NODE_CAP)
    }

    /// [`Interpolant::lagrange`] with an explicit node cap.
    pub fn lagrange_with_cap(
        nodes: NodeSet<R>,
        cap: usize,
    ) -> Result<Self, InterpolationError> {
        if nodes.len() > cap {
            return Err(InterpolationError::DegreeCapExceeded {
                nodes: nodes.len(),
                cap,
            });
        }
        let ts = nodes.nodes();
        let mut weights = Vec::with_capacity(ts.len());
        for i in 0..ts.len() {
            let mut prod = R::one();
            for j in 0..ts.len() {
                if j != i {
                    prod = prod * (ts[i] - ts[j]);
                }
            }
            weights.push(prod.recip());
        }
        Ok(Interpolant {
            kind: InterpolantKind::LagrangeBarycentric,
            nodes,
            weights,
            extrapolate: false,
        })
    }

    /// Continuous piecewise-linear interpolant through all nodes.
    pub fn piecewise_linear(nodes: NodeSet<R>) -> Self {
        Interpolant {
            kind: InterpolantKind::PiecewiseLinear,
            nodes,
            weights: Vec::new(),
            extrapolate: false,
        }
    }

    /// Enables or disables evaluation outside the node span. Only the
    /// polynomial kind extends past its nodes.
    pub fn with_extrapolation(mut self, enabled: bool) -> Result<Self, InterpolationError> {
        if enabled && self.kind == InterpolantKind::PiecewiseLinear {
            return Err(InterpolationError::ExtrapolationUnsupported);
        }
        self.extrapolate = enabled;
        Ok(self)
    }

    pub fn kind(&self) -> InterpolantKind {
        self.kind
    }

    pub fn node_set(&self) -> &NodeSet<R> {
        &self.nodes
    }

    pub fn domain(&self) -> (R, R) {
        self.nodes.domain()
    }

    /// Evaluates the interpolant. Node hits reproduce node values exactly.
    pub fn eval(&self, t: R) -> Result<R, InterpolationError> {
        let (lo, hi) = self.domain();
        if !self.extrapolate && (t < lo || t > hi) {
            return Err(InterpolationError::OutOfDomain {
                t: to_f64(t),
                lo: to_f64(lo),
                hi: to_f64(hi),
            });
        }
        let ts = self.nodes.nodes();
        let vs = self.nodes.values();
        // Exact node hit short-circuits both kinds.
        for i in 0..ts.len() {
            if t == ts[i] {
                return Ok(vs[i]);
            }
        }
        match self.kind {
            InterpolantKind::LagrangeBarycentric => {
                let mut num = R::zero();
                let mut den = R::zero();
                for i in 0..ts.len() {
                    let q = self.weights[i] / (t - ts[i]);
                    num = num + q * vs[i];
                    den = den + q;
                }
                Ok(num / den)
            }
            InterpolantKind::PiecewiseLinear => {
                // Binary search for the segment containing t.
                let mut lo_i = 0usize;
                let mut hi_i = ts.len() - 1;
                while hi_i - lo_i > 1 {
                    let mid = (lo_i + hi_i) / 2;
                    if ts[mid] <= t {
                        lo_i = mid;
                    } else {
                        hi_i = mid;
                    }
                }
                let theta = (t - ts[lo_i]) / (ts[hi_i] - ts[lo_i]);
                Ok(vs[lo_i] + theta * (vs[hi_i] - vs[lo_i]))
            }
        }
    }
}

/// Worst-case interpolation error bound
/// `deriv_bound / (n+1)! * |prod_i (t - t_i)|`
/// for an `(n+1)`-times differentiable function whose `(n+1)`-th
/// derivative is bounded in magnitude by `deriv_bound` on the node span.
pub fn lagrange_error_bound<R: Real>(deriv_bound: R, nodes: &NodeSet<R>, t: R) -> R {
    let ts = nodes.nodes();
    let mut product = R::one();
    for &ti in ts {
        product = product * (t - ti);
    }
    let mut factorial = R::one();
    for k in 2..=ts.len() {
        factorial = factorial * lit::<R>(k as f64);
    }
    deriv_bound / factorial * product.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn node_set(ts: &[f64], vs: &[f64]) -> NodeSet<f64> {
        NodeSet::new(ts.to_vec(), vs.to_vec()).unwrap()
    }

    #[test]
    fn lagrange_reproduces_quadratic() {
        let ip = Interpolant::lagrange(node_set(&[0.0, 1.0, 2.0], &[0.0, 1.0, 4.0])).unwrap();
        assert!((ip.eval(1.5).unwrap() - 2.25).abs() <= 1e-12);
    }

    #[test]
    fn lagrange_constant_data() {
        let ip = Interpolant::lagrange(node_set(&[0.0, 1.0], &[5.0, 5.0])).unwrap();
        for t in [0.0, 0.25, 0.5, 0.99, 1.0] {
            assert!((ip.eval(t).unwrap() - 5.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn lagrange_reproduces_cubic() {
        let ip =
            Interpolant::lagrange(node_set(&[0.0, 1.0, 2.0, 3.0], &[0.0, 1.0, 8.0, 27.0]))
                .unwrap();
        assert!((ip.eval(2.5).unwrap() - 15.625).abs() <= 1e-12);
    }

    #[test]
    fn node_hits_are_exact() {
        let ts = [0.0, 0.3, 1.7, 2.0];
        let vs = [1.0, -2.5, 0.125, 9.0];
        let ip = Interpolant::lagrange(node_set(&ts, &vs)).unwrap();
        let pl = Interpolant::piecewise_linear(node_set(&ts, &vs));
        for (t, v) in ts.iter().zip(vs.iter()) {
            assert_eq!(ip.eval(*t).unwrap(), *v);
            assert_eq!(pl.eval(*t).unwrap(), *v);
        }
    }

    #[test]
    fn piecewise_linear_midpoints() {
        let pl = Interpolant::piecewise_linear(node_set(&[0.0, 2.0], &[0.0, 4.0]));
        assert_eq!(pl.eval(1.0).unwrap(), 2.0);
        let pl = Interpolant::piecewise_linear(node_set(&[0.0, 1.0], &[0.0, 1.0]));
        assert_eq!(pl.eval(0.5).unwrap(), 0.5);
        let pl = Interpolant::piecewise_linear(node_set(&[0.0, 1.0, 2.0], &[0.0, 1.0, 0.0]));
        assert_eq!(pl.eval(1.5).unwrap(), 0.5);
    }

    #[test]
    fn error_bound_examples() {
        // h(t) = t^3 on nodes {0, 1, 2}: bound with M = 6 at t = 0.5 is
        // 6/3! * |0.5 * (-0.5) * (-1.5)| = 0.375, and the actual error of
        // the degree-2 interpolant equals it because h''' is constant.
        let ns = node_set(&[0.0, 1.0, 2.0], &[0.0, 1.0, 8.0]);
        let bound = lagrange_error_bound(6.0, &ns, 0.5);
        assert!((bound - 0.375).abs() <= 1e-12);

        let ip = Interpolant::lagrange(ns.clone()).unwrap();
        let actual = (0.5f64.powi(3) - ip.eval(0.5).unwrap()).abs();
        assert!((actual - 0.375).abs() <= 1e-12);

        // Bound vanishes at the nodes.
        for t in [0.0, 1.0, 2.0] {
            assert_eq!(lagrange_error_bound(6.0, &ns, t), 0.0);
        }
    }

    #[test]
    fn degree_cap() {
        let ts: Vec<f64> = (0..14).map(|i| i as f64).collect();
        let vs = vec![1.0; 14];
        let err = Interpolant::lagrange(NodeSet::new(ts, vs).unwrap()).unwrap_err();
        assert_eq!(err, InterpolationError::DegreeCapExceeded { nodes: 14, cap: 13 });
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let err = NodeSet::new(vec![0.0, 1.0, 1.0], vec![0.0, 1.0, 2.0]).unwrap_err();
        assert_eq!(err, InterpolationError::DuplicateNodes { at: 1.0 });
    }

    #[test]
    fn out_of_domain_and_extrapolation() {
        let ns = node_set(&[0.0, 1.0, 2.0], &[0.0, 1.0, 4.0]);
        let ip = Interpolant::lagrange(ns.clone()).unwrap();
        assert!(matches!(
            ip.eval(2.5),
            Err(InterpolationError::OutOfDomain { .. })
        ));
        let ip = ip.with_extrapolation(true).unwrap();
        // t^2 data extends exactly.
        assert!((ip.eval(3.0).unwrap() - 9.0).abs() <= 1e-10);

        let pl = Interpolant::piecewise_linear(ns);
        assert_eq!(
            pl.with_extrapolation(true).unwrap_err(),
            InterpolationError::ExtrapolationUnsupported
        );
    }

    #[test]
    fn input_order_does_not_matter() {
        let a = Interpolant::lagrange(node_set(&[0.0, 1.0, 2.0, 3.0], &[1.0, 3.0, 2.0, 5.0]))
            .unwrap();
        let b = Interpolant::lagrange(node_set(&[3.0, 0.0, 2.0, 1.0], &[5.0, 1.0, 2.0, 3.0]))
            .unwrap();
        for i in 0..=30 {
            let t = i as f64 * 0.1;
            assert_eq!(a.eval(t).unwrap(), b.eval(t).unwrap());
        }
    }

    #[test]
    fn monotone_data_stays_monotone_piecewise() {
        let pl = Interpolant::piecewise_linear(node_set(
            &[0.0, 1.0, 2.0, 3.0],
            &[0.0, 0.5, 2.0, 2.25],
        ));
        let mut prev = pl.eval(0.0).unwrap();
        for i in 1..=300 {
            let t = i as f64 * 0.01;
            let v = pl.eval(t).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }
}
