//! Adjacency and signless Laplacian spectral radii.
//!
//! Both matrices are nonnegative and symmetric, so the Perron root of every
//! connected component is found by power iteration. The adjacency matrix is
//! shifted by +I so that bipartite components (spectrum symmetric about 0)
//! do not oscillate. Each iterate `x > 0` brackets the Perron root:
//!
//! ```text
//! xᵀMx / xᵀx  ≤  λ_max  ≤  max_i (Mx)_i / x_i
//! ```
//!
//! (Rayleigh quotient below, Collatz–Wielandt above); iteration stops once
//! the bracket is narrower than the requested tolerance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Threshold comparisons closer than this are reported as ties.
pub const DECISION_MARGIN: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub rho: f64,
    pub q: f64,
    pub tolerance: f64,
    pub iterations_used: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Matrix {
    Adjacency,
    SignlessLaplacian,
}

fn iteration_budget(n: usize, tol: f64) -> usize {
    let digits = (1.0 / tol).ln().ceil().max(1.0) as usize;
    100 * n.max(1) * digits
}

/// Perron root of one connected component given as an induced subgraph.
fn component_root(g: &Graph, kind: Matrix, tol: f64) -> Result<(f64, usize)> {
    let n = g.order();
    if n == 1 {
        return Ok((0.0, 0));
    }
    let (diag, shift): (Vec<f64>, f64) = match kind {
        Matrix::Adjacency => (vec![1.0; n], 1.0),
        Matrix::SignlessLaplacian => (g.degrees().iter().map(|&d| d as f64).collect(), 0.0),
    };
    let rows = g.rows();
    let mut x: Vec<f64> = (0..n)
        .map(|i| 1.0 + 1e-3 * ((i * 37 % 17) as f64 / 17.0))
        .collect();
    let mut y = vec![0.0; n];
    let budget = iteration_budget(n, tol);
    let mut estimate = 0.0;
    let mut width = f64::INFINITY;
    for it in 1..=budget {
        let mut xx = 0.0;
        let mut xy = 0.0;
        let mut upper = f64::NEG_INFINITY;
        for i in 0..n {
            let mut s = diag[i] * x[i];
            for j in bits(rows[i]) {
                s += x[j];
            }
            y[i] = s;
            xx += x[i] * x[i];
            xy += x[i] * s;
            upper = upper.max(s / x[i]);
        }
        let rq = xy / xx;
        estimate = rq - shift;
        // Pad for rounding so the bracket stays a certificate.
        width = upper - rq + 4.0 * f64::EPSILON * upper.abs();
        if width <= tol {
            return Ok((estimate.max(0.0), it));
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::NoConvergence {
        estimate,
        residual: width,
        iterations: budget,
    })
}

fn spectral_radius(g: &Graph, kind: Matrix, tol: f64) -> Result<(f64, usize)> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if g.order() == 0 {
        return Err(Error::Domain("spectral radius of the null graph".into()));
    }
    let mut best = 0.0f64;
    let mut iters = 0;
    for comp in g.components() {
        let size = comp.count_ones() as usize;
        if size == 1 {
            continue;
        }
        // A component with fewer vertices than the current best plus one
        // cannot beat it: ρ ≤ size − 1 and q ≤ 2(size − 1).
        let cap = match kind {
            Matrix::Adjacency => (size - 1) as f64,
            Matrix::SignlessLaplacian => 2.0 * (size - 1) as f64,
        };
        if cap <= best {
            continue;
        }
        let sub = if size == g.order() {
            g.clone()
        } else {
            g.induced_subgraph(comp).0
        };
        let (r, it) = component_root(&sub, kind, tol)?;
        iters += it;
        best = best.max(r);
    }
    Ok((best, iters))
}

/// Largest adjacency eigenvalue ρ(G), within `tol`.
pub fn adjacency_spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    spectral_radius(g, Matrix::Adjacency, tol).map(|r| r.0)
}

/// Largest eigenvalue q(G) of the signless Laplacian D + A, within `tol`.
pub fn signless_laplacian_spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    spectral_radius(g, Matrix::SignlessLaplacian, tol).map(|r| r.0)
}

pub fn spectral_summary(g: &Graph, tol: f64) -> Result<SpectralSummary> {
    let (rho, i1) = spectral_radius(g, Matrix::Adjacency, tol)?;
    let (q, i2) = spectral_radius(g, Matrix::SignlessLaplacian, tol)?;
    Ok(SpectralSummary {
        rho,
        q,
        tolerance: tol,
        iterations_used: i1 + i2,
    })
}

/// Direction of a bound relative to the spectral quantity it constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSide {
    /// `measured ≤ bound`
    Upper,
    /// `measured ≥ bound`
    Lower,
}

/// One evaluated bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub side: BoundSide,
    pub bound: f64,
    pub measured: f64,
    /// `|bound − measured| ≤ tol`.
    pub equality: bool,
}

impl BoundCheck {
    fn new(side: BoundSide, bound: f64, measured: f64, tol: f64) -> Self {
        BoundCheck {
            side,
            bound,
            measured,
            equality: (bound - measured).abs() <= tol,
        }
    }

    /// Signed slack: nonnegative when the bound holds exactly.
    pub fn slack(&self) -> f64 {
        match self.side {
            BoundSide::Upper => self.bound - self.measured,
            BoundSide::Lower => self.measured - self.bound,
        }
    }

    pub fn holds_within(&self, eps: f64) -> bool {
        self.slack() >= -eps
    }
}

/// The classical bounds on ρ and q, each `None` where its hypothesis fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub rho: f64,
    pub q: f64,
    pub t: usize,
    /// ρ ≤ (t − 1 + √((t + 1)² + 4(2e − nt))) / 2, needs δ ≥ t.
    pub hong_upper: Option<BoundCheck>,
    /// Σ d(v)² ≤ nρ²: `bound` is nρ², `measured` is Σ d(v)².
    pub degree_square_upper: BoundCheck,
    /// ρ ≥ min over edges of √(d(u)d(v)), needs an edge.
    pub edge_geom_lower: Option<BoundCheck>,
    /// q ≤ 2e/(n − 1) + n − 2, needs G connected.
    pub q_upper: Option<BoundCheck>,
    /// q ≥ Σ d(v)² / e, needs an edge.
    pub q_lower: Option<BoundCheck>,
    pub connected: bool,
    /// Regular or semi-regular; recorded for connected graphs only.
    pub regular_or_semi_regular: Option<bool>,
}

pub fn hong_bound(n: usize, e: usize, t: usize) -> f64 {
    let t = t as f64;
    let disc = (t + 1.0).powi(2) + 4.0 * (2.0 * e as f64 - n as f64 * t);
    (t - 1.0 + disc.sqrt()) / 2.0
}

pub fn min_edge_geometric_mean(g: &Graph) -> Option<f64> {
    g.edges()
        .map(|(u, v)| ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .min_by(|a, b| a.total_cmp(b))
}

pub fn classical_bounds(g: &Graph, t: usize, tol: f64) -> Result<BoundReport> {
    let summary = spectral_summary(g, tol)?;
    let (rho, q) = (summary.rho, summary.q);
    let stats = g.degree_stats();
    let n = g.order();
    let e = stats.edge_count;
    let z = stats.degree_square_sum as f64;
    let connected = g.is_connected();

    let hong_upper = (stats.min_degree >= t)
        .then(|| BoundCheck::new(BoundSide::Upper, hong_bound(n, e, t), rho, tol));
    let degree_square_upper = BoundCheck::new(BoundSide::Upper, n as f64 * rho * rho, z, tol);
    let edge_geom_lower =
        min_edge_geometric_mean(g).map(|b| BoundCheck::new(BoundSide::Lower, b, rho, tol));
    let q_upper = (connected && n >= 2).then(|| {
        let b = 2.0 * e as f64 / (n as f64 - 1.0) + n as f64 - 2.0;
        BoundCheck::new(BoundSide::Upper, b, q, tol)
    });
    let q_lower = (e > 0).then(|| BoundCheck::new(BoundSide::Lower, z / e as f64, q, tol));
    let regular_or_semi_regular = connected.then(|| g.is_regular() || g.is_semi_regular());

    Ok(BoundReport {
        rho,
        q,
        t,
        hong_upper,
        degree_square_upper,
        edge_geom_lower,
        q_upper,
        q_lower,
        connected,
        regular_or_semi_regular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = DEFAULT_TOLERANCE;

    fn rho(g: &Graph) -> f64 {
        adjacency_spectral_radius(g, TOL).unwrap()
    }
    fn q(g: &Graph) -> f64 {
        signless_laplacian_spectral_radius(g, TOL).unwrap()
    }

    #[test]
    fn closed_forms() {
        let k5 = Graph::complete(5).unwrap();
        assert!((rho(&k5) - 4.0).abs() < 1e-9);
        assert!((q(&k5) - 8.0).abs() < 1e-9);
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert!((rho(&k23) - 6f64.sqrt()).abs() < 1e-9);
        let c6 = Graph::cycle(6).unwrap();
        assert!((q(&c6) - 4.0).abs() < 1e-9);
        assert!((rho(&c6) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn disconnected_takes_component_max() {
        let g = Graph::complete(9)
            .unwrap()
            .disjoint_union(&Graph::empty(3).unwrap())
            .unwrap();
        assert!((rho(&g) - 8.0).abs() < 1e-9);
        assert!((q(&g) - 16.0).abs() < 1e-9);
        assert_eq!(rho(&Graph::empty(4).unwrap()), 0.0);
    }

    #[test]
    fn bipartite_paths_converge() {
        // ρ(P_n) = 2cos(π/(n+1))
        for n in [2usize, 5, 20, 50] {
            let p = Graph::path(n).unwrap();
            let exact = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((rho(&p) - exact).abs() < 1e-9, "n={n}");
        }
    }

    #[test]
    fn tiny_tolerance_reports_non_convergence() {
        let p = Graph::path(40).unwrap();
        match adjacency_spectral_radius(&p, 1e-300) {
            Err(Error::NoConvergence { iterations, .. }) => assert!(iterations > 0),
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn bound_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let r = classical_bounds(&c6, 2, TOL).unwrap();
        let hong = r.hong_upper.unwrap();
        assert!((hong.bound - 2.0).abs() < 1e-12);
        assert!(hong.equality);
        let ql = r.q_lower.unwrap();
        assert!((ql.bound - 4.0).abs() < 1e-12 && ql.equality);
        assert_eq!(r.regular_or_semi_regular, Some(true));

        let star = Graph::star(4).unwrap();
        let r = classical_bounds(&star, 1, TOL).unwrap();
        let eg = r.edge_geom_lower.unwrap();
        assert!((eg.bound - 2.0).abs() < 1e-12 && eg.equality);
        assert_eq!(r.regular_or_semi_regular, Some(true));
    }

    #[test]
    fn inapplicable_bounds_are_flagged() {
        let g = Graph::star(3).unwrap();
        let r = classical_bounds(&g, 2, TOL).unwrap();
        assert!(r.hong_upper.is_none());
        let empty = Graph::empty(3).unwrap();
        let r = classical_bounds(&empty, 0, TOL).unwrap();
        assert!(r.edge_geom_lower.is_none() && r.q_lower.is_none() && r.q_upper.is_none());
    }
}
