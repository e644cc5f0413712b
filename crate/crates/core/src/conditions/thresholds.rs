//! Exact threshold formulas. Everything combinatorial is evaluated in
//! `Ratio<i64>`; only the spectral entries of [`ThresholdTable`] are
//! floating point.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::TheoremId;
use crate::families::{gstar, hstar};
use crate::spectral::{adjacency_spectral_radius, signless_laplacian_spectral_radius};

pub type Q = Ratio<i64>;

fn q(v: i64) -> Q {
    Q::from_integer(v)
}

fn half(v: i64) -> Q {
    Q::new(v, 2)
}

/// C(m, 2) for m ≥ 0.
fn choose2(m: i64) -> Option<i64> {
    (m >= 0).then(|| m * (m - 1) / 2)
}

/// Edge count forcing a spanning k-tree in a t-connected graph:
/// C(n−(k−1)t−2, 2) + (k−1)t² + (k+1)t + 3.
pub fn edge_threshold_ktree(n: usize, k: usize, t: usize) -> Option<i64> {
    let (n, k, t) = (n as i64, k as i64, t as i64);
    Some(choose2(n - (k - 1) * t - 2)? + (k - 1) * t * t + (k + 1) * t + 3)
}

/// Edge count forcing a spanning k-ended-tree: C(n−k−t, 2) + (k+t−1)² + k + t.
pub fn edge_threshold_kended(n: usize, k: usize, t: usize) -> Option<i64> {
    let (n, k, t) = (n as i64, k as i64, t as i64);
    Some(choose2(n - k - t)? + (k + t - 1).pow(2) + k + t)
}

/// f(n,k,t) = (1 + (k−2)t/n)((n−1−t)(kt−t+1) + n − ½(k−1)²t² − (5/2)kt + (3/2)t − 5).
pub fn f_value(n: usize, k: usize, t: usize) -> Q {
    let (n, k, t) = (n as i64, k as i64, t as i64);
    let scale = q(1) + Q::new((k - 2) * t, n);
    let inner = q((n - 1 - t) * (k * t - t + 1) + n) - half((k - 1).pow(2) * t * t) - half(5 * k * t)
        + half(3 * t)
        - q(5);
    scale * inner
}

/// (n−1−t)(kt−t+1), the square of the small-order complement bound.
pub fn td_bound_sq(n: usize, k: usize, t: usize) -> i64 {
    let (n, k, t) = (n as i64, k as i64, t as i64);
    (n - 1 - t) * (k * t - t + 1)
}

/// n + (k−2)t.
pub fn te_bound(n: usize, k: usize, t: usize) -> i64 {
    n as i64 + ((k - 2) * t) as i64
}

/// (k+t)(n−2t) − (3/2)k² + k/2 − kt + ½t² + ½t − 1.
pub fn tg_bound_sq(n: usize, k: usize, t: usize) -> Q {
    let (n, k, t) = (n as i64, k as i64, t as i64);
    q((k + t) * (n - 2 * t) - k * t - 1) - half(3 * k * k) + half(k) + half(t * t) + half(t)
}

/// The t = 1 form as written in its own statement: k(n−2) + n − 2 − (3/2)k² − ½k.
pub fn tg_bound_sq_t1(n: usize, k: usize) -> Q {
    let (n, k) = (n as i64, k as i64);
    q(k * (n - 2) + n - 2) - half(3 * k * k) - half(k)
}

/// Lower end of the order range of the earlier degree-bounded theorem:
/// max{(7k−2)t + 4, (k−1)t² + ½(3k+1)t + 9/2}.
pub fn prior_ktree_n_min(k: usize, t: usize) -> Q {
    let (k, t) = (k as i64, t as i64);
    q((7 * k - 2) * t + 4).max(q((k - 1) * t * t) + half((3 * k + 1) * t) + half(9))
}

/// Second terms of the two order ranges differ by exactly this amount.
pub fn improvement_gap(k: usize, t: usize) -> Q {
    let (k, t) = (k as i64, t as i64);
    half(t * (k - 1) * (t - 1)) + half(t - 1)
}

/// Smallest admissible order (as a rational lower bound) for a theorem.
pub fn n_min(id: TheoremId, k: usize, t: usize) -> Q {
    let (k, t) = (k as i64, t as i64);
    let base = q((7 * k - 2) * t + 4);
    let kended = q(6 * k + 6 * t - 1);
    match id {
        TheoremId::KtreeRho => base.max(half((k - 1) * t * t) + q(2 * k * t) - half(t) + q(5)),
        TheoremId::KtreeQ => base.max(half((k * k - 1) * t * t) + half((5 * k - 1) * t) + q(5)),
        TheoremId::KtreeCompRho => base,
        TheoremId::CorHampathComp => q(16),
        TheoremId::KtreeCompRhoSmall | TheoremId::KtreeCompQ => q((k - 2) * t + 4),
        TheoremId::CorHampathSuite => q(4),
        TheoremId::KendedQ => kended.max(half(3 * (k + t - 1).pow(2)) + half(3 * k) + half(3 * t) + half(1)),
        TheoremId::KendedCompRho => kended.max(q(k * k + k * t + t + 1)),
        TheoremId::CorKendedCompRhoT1 => q(6 * k + 5).max(q(k * k + k + 2)),
        TheoremId::BgFiedlerNikiforov | TheoremId::BgZhou | TheoremId::BgAoKendedComp => q(1),
        TheoremId::BgFan => q(2 * k + 16),
        TheoremId::BgAoKtree => prior_ktree_n_min(k as usize, t as usize),
        TheoremId::BgAoKendedQ => q(6 * k + 5).max(half(3 * k * k) + half(3 * k) + q(2)),
    }
}

/// Least integer order satisfying [`n_min`].
pub fn n_min_integer(id: TheoremId, k: usize, t: usize) -> usize {
    n_min(id, k, t).ceil().to_integer().max(1) as usize
}

pub(crate) fn ratio_string<S: Serializer>(r: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn opt_ratio_string<S: Serializer>(r: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NMinEntry {
    pub theorem: String,
    #[serde(serialize_with = "ratio_string")]
    pub bound: Q,
    pub least_order: usize,
    pub satisfied: bool,
}

/// All thresholds at one (n, k, t). Square-root bounds are `None` when
/// the radicand is negative; the radicand itself is always reported.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdTable {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub edge_threshold_ktree: Option<i64>,
    pub edge_threshold_kended: Option<i64>,
    pub n_min: Vec<NMinEntry>,
    #[serde(serialize_with = "ratio_string")]
    pub f: Q,
    pub f_applicable: bool,
    pub td_bound_sq: i64,
    pub td_bound: Option<f64>,
    pub te_bound: i64,
    #[serde(serialize_with = "ratio_string")]
    pub tg_bound_sq: Q,
    pub tg_bound: Option<f64>,
    #[serde(serialize_with = "opt_ratio_string")]
    pub prior_gap: Option<Q>,
    pub rho_hstar: Option<f64>,
    pub q_hstar: Option<f64>,
    pub q_gstar: Option<f64>,
    pub tolerance: f64,
}

fn root(r: Q) -> Option<f64> {
    (r >= q(0)).then(|| (*r.numer() as f64 / *r.denom() as f64).sqrt())
}

pub fn thresholds(n: usize, k: usize, t: usize, tol: f64) -> ThresholdTable {
    let f = f_value(n, k, t);
    let tg = tg_bound_sq(n, k, t);
    let td = td_bound_sq(n, k, t);
    let h = hstar(n, k, t).ok();
    let g = gstar(n, k, t).ok();
    ThresholdTable {
        n,
        k,
        t,
        edge_threshold_ktree: edge_threshold_ktree(n, k, t),
        edge_threshold_kended: edge_threshold_kended(n, k, t),
        n_min: TheoremId::ALL
            .iter()
            .map(|&id| NMinEntry {
                theorem: id.name().to_string(),
                bound: n_min(id, k, t),
                least_order: n_min_integer(id, k, t),
                satisfied: q(n as i64) >= n_min(id, k, t),
            })
            .collect(),
        f,
        f_applicable: f >= q(0),
        td_bound_sq: td,
        td_bound: root(q(td)),
        te_bound: te_bound(n, k, t),
        tg_bound_sq: tg,
        tg_bound: root(tg),
        prior_gap: Some(improvement_gap(k, t)),
        rho_hstar: h.as_ref().and_then(|h| adjacency_spectral_radius(h, tol).ok()),
        q_hstar: h.as_ref().and_then(|h| signless_laplacian_spectral_radius(h, tol).ok()),
        q_gstar: g.as_ref().and_then(|g| signless_laplacian_spectral_radius(g, tol).ok()),
        tolerance: tol,
    }
}
