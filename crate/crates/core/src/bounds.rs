//! Upper bound on the algebraic connectivity of a connected δ-regular graph.
//!
//! For a vertex `u`, partitioning the adjacency matrix into `{u}`, the
//! neighbours of `u` and the remaining vertices gives a 3×3 quotient matrix
//! whose second eigenvalue is `F(d)`, where `d` is the average degree of the
//! neighbourhood graph and
//!
//! ```text
//! F(x) = [x(v-1) - δ(δ-1) + sqrt(R(x))] / (2(v-δ-1))
//! R(x) = (x(v-1) - δ(δ-1))² + 4(v-δ-1)δ(v-2δ+x)
//! ```
//!
//! When the neighbourhood splits into components, a 4×4 quotient per
//! component `C` additionally has `d_C` as an eigenvalue. By interlacing,
//! each such value is a lower bound on ν₂, the second largest adjacency
//! eigenvalue; `ρ(G)` is the largest of them and `δ - ρ(G)` bounds the
//! algebraic connectivity `δ - ν₂` from above.

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::{Graph, GraphError, Rational};
use crate::linalg::{self, LinalgError, QuotientMatrix, SPECTRAL_TOL};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("invalid parameters v={v}, delta={degree}: {reason}")]
    InvalidParams {
        v: usize,
        degree: usize,
        reason: &'static str,
    },
    #[error("argument x={0} must be a finite non-negative number")]
    InvalidArgument(f64),
    #[error("graph is not regular")]
    NotRegular,
    #[error("bound not applicable to v={v}, delta={degree}: {reason}")]
    BoundNotApplicable {
        v: usize,
        degree: usize,
        reason: &'static str,
    },
    #[error("graph is disconnected")]
    GraphDisconnected,
    #[error("exact algebraic connectivity {exact} exceeds the {bound} bound {value}")]
    SoundnessViolation {
        bound: &'static str,
        value: f64,
        exact: f64,
    },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Vertex count and degree satisfying `v ≥ 3` and `1 < δ < v - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundParams {
    v: usize,
    degree: usize,
}

impl BoundParams {
    pub fn new(v: usize, degree: usize) -> Result<Self, BoundError> {
        let reason = if v < 3 {
            Some("requires v >= 3")
        } else if degree <= 1 {
            Some("requires delta > 1")
        } else if degree >= v - 1 {
            Some("requires delta < v - 1 (complete graphs excluded)")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(BoundError::InvalidParams { v, degree, reason }),
            None => Ok(Self { v, degree }),
        }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn floats(&self) -> (f64, f64) {
        (self.v as f64, self.degree as f64)
    }
}

fn check_argument(x: f64) -> Result<(), BoundError> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(BoundError::InvalidArgument(x))
    }
}

/// `(x(v-1) - δ(δ-1))² + 4(v-δ-1)δ(v-2δ+x)`; strictly positive for `x ≥ 0`.
pub fn radicand(x: f64, p: &BoundParams) -> Result<f64, BoundError> {
    check_argument(x)?;
    Ok(radicand_unchecked(x, p))
}

fn radicand_unchecked(x: f64, p: &BoundParams) -> f64 {
    let (v, d) = p.floats();
    let lin = x * (v - 1.0) - d * (d - 1.0);
    lin * lin + 4.0 * (v - d - 1.0) * d * (v - 2.0 * d + x)
}

/// Vertex of the radicand parabola.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadicandMinimum {
    /// `δ(δ(v+1) - 3(v-1)) / (v-1)²`
    pub x: f64,
    /// `4vδ(v-δ-1)³ / (v-1)²`
    pub value: f64,
}

pub fn radicand_minimum(p: &BoundParams) -> RadicandMinimum {
    let (v, d) = p.floats();
    let denom = (v - 1.0) * (v - 1.0);
    RadicandMinimum {
        x: d * (d * (v + 1.0) - 3.0 * (v - 1.0)) / denom,
        value: 4.0 * v * d * (v - d - 1.0).powi(3) / denom,
    }
}

/// The bound function `F(x)`.
pub fn eval_f(x: f64, p: &BoundParams) -> Result<f64, BoundError> {
    check_argument(x)?;
    Ok(f_unchecked(x, p))
}

fn f_unchecked(x: f64, p: &BoundParams) -> f64 {
    let (v, d) = p.floats();
    let lin = x * (v - 1.0) - d * (d - 1.0);
    let root = radicand_unchecked(x, p).sqrt();
    if lin < 0.0 {
        // lin + root = (root² - lin²) / (root - lin), free of cancellation.
        2.0 * d * (v - 2.0 * d + x) / (root - lin)
    } else {
        (lin + root) / (2.0 * (v - d - 1.0))
    }
}

/// The other root of the quadratic factor, taken with the negative square root.
pub fn conjugate_root(x: f64, p: &BoundParams) -> Result<f64, BoundError> {
    check_argument(x)?;
    let (v, d) = p.floats();
    let lin = x * (v - 1.0) - d * (d - 1.0);
    let root = radicand_unchecked(x, p).sqrt();
    Ok(if lin > 0.0 {
        -2.0 * d * (v - 2.0 * d + x) / (root + lin)
    } else {
        (lin - root) / (2.0 * (v - d - 1.0))
    })
}

/// Which regime of `F(x) = x` a parameter pair falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedPointCase {
    /// δ = 2, v = 4: only `x = 0`.
    DegreeTwoSquare,
    /// δ = 2, v > 4: no fixed points.
    DegreeTwoSparse,
    /// δ > 2, v ≤ 2δ: `F(x) ≤ x` on `[0, x₂]`.
    Dense,
    /// δ > 2, 2δ < v < (δ+2)²/4: `F(x) ≤ x` on `[x₁, x₂]`.
    Intermediate,
    /// δ > 2, v = (δ+2)²/4: a single touching point `(δ-2)/2`.
    Touching,
    /// δ > 2, v > (δ+2)²/4: `F(x) > x` everywhere.
    Sparse,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixedPoints {
    pub case: FixedPointCase,
    /// Non-negative solutions of `F(x) = x`, ascending.
    pub roots: Vec<f64>,
    /// Closed interval of `[0, ∞)` on which `F(x) ≤ x`; `F(x) > x` outside it.
    pub interval: Option<(f64, f64)>,
}

impl FixedPoints {
    pub fn f_at_most_x(&self, x: f64) -> bool {
        self.interval.is_some_and(|(lo, hi)| lo <= x && x <= hi)
    }
}

/// Solutions of `F(x) = x` on `[0, ∞)`, i.e. `½(δ-2 ± sqrt((δ+2)² - 4v))`
/// where they are real and non-negative.
pub fn f_fixed_points(p: &BoundParams) -> FixedPoints {
    let (v, d) = (p.v as i64, p.degree as i64);
    let disc = (d + 2) * (d + 2) - 4 * v;
    let centre = (d - 2) as f64 / 2.0;
    let half_width = (disc.max(0) as f64).sqrt() / 2.0;
    let (lo, hi) = (centre - half_width, centre + half_width);

    let (case, roots, interval) = if d == 2 {
        if v == 4 {
            (FixedPointCase::DegreeTwoSquare, vec![0.0], Some((0.0, 0.0)))
        } else {
            (FixedPointCase::DegreeTwoSparse, vec![], None)
        }
    } else if v <= 2 * d {
        // Smaller root is ≤ 0 and only counts when it is exactly 0 (v = 2δ).
        let roots = if v == 2 * d { vec![0.0, hi] } else { vec![hi] };
        (FixedPointCase::Dense, roots, Some((0.0, hi)))
    } else if disc > 0 {
        (FixedPointCase::Intermediate, vec![lo, hi], Some((lo, hi)))
    } else if disc == 0 {
        (
            FixedPointCase::Touching,
            vec![centre],
            Some((centre, centre)),
        )
    } else {
        (FixedPointCase::Sparse, vec![], None)
    };
    FixedPoints {
        case,
        roots,
        interval,
    }
}

/// Which quantity attained the maximum in `max{d_C, F(d_C)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    AverageDegree,
    BoundFunction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentDegree {
    pub size: usize,
    pub average_degree: Rational,
}

/// Per-vertex lower bound on ν₂: `ξ_u` if the neighbourhood is connected,
/// `η_u` otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexBound {
    pub vertex: usize,
    pub neighbourhood_connected: bool,
    pub components: Vec<ComponentDegree>,
    pub value: f64,
    pub branch: Branch,
    /// Index into `components` of the maximising component.
    pub component: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactConnectivity {
    /// Second largest adjacency eigenvalue.
    pub nu2: f64,
    /// Second smallest Laplacian eigenvalue.
    pub algebraic_connectivity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub graph_id: Option<String>,
    pub v: usize,
    pub degree: usize,
    pub rho: f64,
    pub upper_bound: f64,
    pub vertices: Vec<VertexBound>,
    pub exact: Option<ExactConnectivity>,
}

impl BoundReport {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.graph_id = Some(id.into());
        self
    }

    pub fn with_exact(mut self, exact: ExactConnectivity) -> Self {
        self.exact = Some(exact);
        self
    }

    /// The vertex bound attaining `ρ(G)`.
    pub fn argmax(&self) -> &VertexBound {
        self.vertices
            .iter()
            .find(|b| b.value == self.rho)
            .expect("rho is attained")
    }
}

/// Checks the hypotheses shared by [`vertex_bound`] and [`rho`].
pub fn bound_params_for(g: &Graph) -> Result<BoundParams, BoundError> {
    let degree = g.regularity().ok_or(BoundError::NotRegular)?;
    let params = BoundParams::new(g.order(), degree).map_err(|e| match e {
        BoundError::InvalidParams { v, degree, reason } => {
            BoundError::BoundNotApplicable { v, degree, reason }
        }
        other => other,
    })?;
    if !g.is_connected() {
        return Err(BoundError::GraphDisconnected);
    }
    Ok(params)
}

pub fn vertex_bound(g: &Graph, u: usize) -> Result<VertexBound, BoundError> {
    let params = bound_params_for(g)?;
    g.degree(u)?;
    vertex_bound_with(g, u, &params)
}

fn to_f64(r: Rational) -> f64 {
    r.to_f64().expect("small rational")
}

fn vertex_bound_with(g: &Graph, u: usize, p: &BoundParams) -> Result<VertexBound, BoundError> {
    let (gu, _) = g.neighbourhood_graph(u)?;
    let blocks = gu.connected_components();
    let components = blocks
        .iter()
        .map(|c| {
            Ok(ComponentDegree {
                size: c.len(),
                average_degree: gu.average_degree(c)?,
            })
        })
        .collect::<Result<Vec<_>, GraphError>>()?;

    if let [only] = components.as_slice() {
        let value = f_unchecked(to_f64(only.average_degree), p);
        return Ok(VertexBound {
            vertex: u,
            neighbourhood_connected: true,
            components,
            value,
            branch: Branch::BoundFunction,
            component: 0,
        });
    }

    let mut best: Option<(f64, Branch, usize)> = None;
    for (i, c) in components.iter().enumerate() {
        let avg = to_f64(c.average_degree);
        let f = f_unchecked(avg, p);
        // Ties go to the rational average degree.
        let (value, branch) = if f > avg {
            (f, Branch::BoundFunction)
        } else {
            (avg, Branch::AverageDegree)
        };
        if best.is_none_or(|(b, _, _)| value > b) {
            best = Some((value, branch, i));
        }
    }
    let (value, branch, component) = best.expect("neighbourhood has components");
    Ok(VertexBound {
        vertex: u,
        neighbourhood_connected: false,
        components,
        value,
        branch,
        component,
    })
}

/// `ρ(G)`, the maximum vertex bound, and the resulting upper bound `δ - ρ(G)`.
pub fn rho(g: &Graph) -> Result<BoundReport, BoundError> {
    let params = bound_params_for(g)?;
    let vertices = (0..g.order())
        .map(|u| vertex_bound_with(g, u, &params))
        .collect::<Result<Vec<_>, _>>()?;
    let rho = vertices
        .iter()
        .map(|b| b.value)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(BoundReport {
        graph_id: None,
        v: params.v,
        degree: params.degree,
        rho,
        upper_bound: params.degree as f64 - rho,
        vertices,
        exact: None,
    })
}

/// ν₂ of the adjacency matrix and the second smallest Laplacian eigenvalue.
pub fn exact_connectivity(g: &Graph) -> Result<ExactConnectivity, BoundError> {
    if g.order() < 2 {
        return Err(BoundError::BoundNotApplicable {
            v: g.order(),
            degree: 0,
            reason: "algebraic connectivity needs at least two vertices",
        });
    }
    let adjacency = linalg::eigenvalues(&linalg::adjacency_matrix(g))?;
    let laplacian = linalg::eigenvalues(&linalg::laplacian_matrix(g))?;
    let exact = ExactConnectivity {
        nu2: adjacency.nu(2),
        algebraic_connectivity: laplacian.nu(g.order() - 1),
    };
    if let Some(d) = g.regularity() {
        debug_assert!(
            (exact.algebraic_connectivity - (d as f64 - exact.nu2)).abs() < 1e-8,
            "a(G) = δ - ν₂ for regular graphs"
        );
    }
    Ok(exact)
}

/// Minimum number of vertices whose removal disconnects `g`, or `v - 1` for
/// complete graphs. Computed as the minimum over non-adjacent pairs of the
/// number of internally vertex-disjoint paths.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, BoundError> {
    if !g.is_connected() {
        return Err(BoundError::GraphDisconnected);
    }
    let n = g.order();
    let mut best = n - 1;
    for s in 0..n {
        for t in (s + 1)..n {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(local_vertex_connectivity(g, s, t, best));
        }
    }
    Ok(best)
}

/// Vertex-disjoint `s`–`t` paths via the split network `x_in -> x_out`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    let big = n as u32;
    let (vin, vout) = (|x: usize| 2 * x, |x: usize| 2 * x + 1);
    let mut net = FlowNetwork::new(2 * n);
    for x in 0..n {
        let cap = if x == s || x == t { big } else { 1 };
        net.add_edge(vin(x), vout(x), cap);
    }
    for (a, b) in g.edges() {
        net.add_edge(vout(a), vin(b), big);
        net.add_edge(vout(b), vin(a), big);
    }
    net.max_flow(vout(s), vin(t), limit as u32) as usize
}

/// The new bound, the vertex-connectivity bound and the exact value.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub v: usize,
    pub degree: usize,
    pub paper_bound: f64,
    pub fiedler_bound: usize,
    pub exact: f64,
    pub gap_paper: f64,
    pub gap_fiedler: f64,
    pub report: BoundReport,
}

pub fn compare_bounds(g: &Graph) -> Result<Comparison, BoundError> {
    compare_bounds_with_tol(g, SPECTRAL_TOL)
}

/// Fails with [`BoundError::SoundnessViolation`] if the exact algebraic
/// connectivity exceeds either bound by more than `tol`.
pub fn compare_bounds_with_tol(g: &Graph, tol: f64) -> Result<Comparison, BoundError> {
    let cmp = comparison(g)?;
    cmp.check(tol)?;
    Ok(cmp)
}

/// All three quantities, without checking them against each other.
pub fn comparison(g: &Graph) -> Result<Comparison, BoundError> {
    let exact = exact_connectivity(g)?;
    let report = rho(g)?.with_exact(exact.clone());
    let fiedler = vertex_connectivity(g)?;
    let a = exact.algebraic_connectivity;
    Ok(Comparison {
        v: report.v,
        degree: report.degree,
        paper_bound: report.upper_bound,
        fiedler_bound: fiedler,
        exact: a,
        gap_paper: report.upper_bound - a,
        gap_fiedler: fiedler as f64 - a,
        report,
    })
}

impl Comparison {
    pub fn check(&self, tol: f64) -> Result<(), BoundError> {
        if self.gap_paper < -tol {
            return Err(BoundError::SoundnessViolation {
                bound: "interlacing",
                value: self.paper_bound,
                exact: self.exact,
            });
        }
        if self.gap_fiedler < -tol {
            return Err(BoundError::SoundnessViolation {
                bound: "vertex-connectivity",
                value: self.fiedler_bound as f64,
                exact: self.exact,
            });
        }
        Ok(())
    }
}

/// The 3×3 average-row-sum matrix for `{u}`, `G_u`, rest, when `G_u` is
/// connected with average degree `avg`.
pub fn connected_case_quotient(avg: f64, p: &BoundParams) -> Result<QuotientMatrix, BoundError> {
    let (v, d) = p.floats();
    let rest = v - d - 1.0;
    let out = d - avg - 1.0;
    let back = d * out / rest;
    let rows = [
        vec![0.0, d, 0.0],
        vec![1.0, avg, out],
        vec![0.0, back, d - back],
    ];
    Ok(QuotientMatrix::from_rows(
        &rows,
        vec![1, p.degree, p.v - p.degree - 1],
    )?)
}

/// The 4×4 average-row-sum matrix for `{u}`, a component `C` of size
/// `size` with average degree `avg`, the rest of `G_u`, and the rest of `G`.
pub fn disconnected_case_quotient(
    avg: f64,
    size: usize,
    p: &BoundParams,
) -> Result<QuotientMatrix, BoundError> {
    let (v, d) = p.floats();
    let gamma = size as f64;
    let rest = v - d - 1.0;
    let out = d - avg - 1.0;
    let rows = [
        vec![0.0, gamma, d - gamma, 0.0],
        vec![1.0, avg, 0.0, out],
        vec![1.0, 0.0, avg, out],
        vec![
            0.0,
            gamma * out / rest,
            (d - gamma) * out / rest,
            d - d * out / rest,
        ],
    ];
    Ok(QuotientMatrix::from_rows(
        &rows,
        vec![1, size, p.degree - size, p.v - p.degree - 1],
    )?)
}
