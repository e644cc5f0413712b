//! The l-closure: repeatedly join nonadjacent pairs whose degree sum is at
//! least `l` until none remain. The fixpoint does not depend on the order in
//! which pairs are processed; the trace records one valid insertion order.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureTrace {
    pub l: usize,
    #[serde(with = "crate::serde_graph6")]
    pub result: Graph,
    pub added_edges: Vec<(usize, usize)>,
}

impl ClosureTrace {
    /// Re-apply the recorded edges to `g`.
    pub fn replay(&self, g: &Graph) -> Result<Graph> {
        self.added_edges
            .iter()
            .try_fold(g.clone(), |acc, &(u, v)| acc.with_edge(u, v))
    }
}

/// Closure with the canonical initial scan order (lexicographic pairs).
pub fn l_closure(g: &Graph, l: usize) -> ClosureTrace {
    let n = g.order();
    let order: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    l_closure_in_order(g, l, &order)
}

/// Closure whose worklist is seeded with `initial` (pairs outside the
/// graph or already adjacent are ignored). Every nonadjacent pair is
/// examined at least once, so any permutation of all pairs is valid.
pub fn l_closure_in_order(g: &Graph, l: usize, initial: &[(usize, usize)]) -> ClosureTrace {
    let n = g.order();
    let mut h = g.clone();
    let mut deg: Vec<usize> = h.degrees();
    let mut queued = vec![0u64; n];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let push = |queue: &mut VecDeque<(usize, usize)>, queued: &mut [u64], u: usize, v: usize| {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        if queued[u] >> v & 1 == 0 {
            queued[u] |= 1u64 << v;
            queue.push_back((u, v));
        }
    };
    for &(u, v) in initial {
        if u < n && v < n && u != v && !h.has_edge(u, v) {
            push(&mut queue, &mut queued, u, v);
        }
    }
    // Pairs missing from `initial` still have to be looked at once.
    for u in 0..n {
        for v in bits(h.vertex_mask() & !h.neighbors(u) & !((1u64 << u) | ((1u64 << u) - 1))) {
            push(&mut queue, &mut queued, u, v);
        }
    }
    let mut added = Vec::new();
    while let Some((u, v)) = queue.pop_front() {
        queued[u] &= !(1u64 << v);
        if h.has_edge(u, v) || deg[u] + deg[v] < l {
            continue;
        }
        h.insert_edge(u, v);
        deg[u] += 1;
        deg[v] += 1;
        added.push((u, v));
        for w in [u, v] {
            let non = h.vertex_mask() & !h.neighbors(w) & !(1u64 << w);
            for x in bits(non) {
                push(&mut queue, &mut queued, w, x);
            }
        }
    }
    ClosureTrace {
        l,
        result: h,
        added_edges: added,
    }
}

/// The closure parameter for spanning k-trees in t-connected graphs,
/// `n − kt + 2t − 1`, also written `n − (k − 2)t − 1`.
pub fn ktree_closure_parameter(n: usize, k: usize, t: usize) -> Result<usize> {
    if k < 2 || t < 1 {
        return Err(Error::Domain(format!("need k ≥ 2 and t ≥ 1, got k={k}, t={t}")));
    }
    let l = n as i64 - (k * t) as i64 + 2 * t as i64 - 1;
    let alt = n as i64 - ((k - 2) * t) as i64 - 1;
    debug_assert_eq!(l, alt);
    if l <= 0 {
        return Err(Error::Domain(format!(
            "closure parameter n − kt + 2t − 1 = {l} is not positive (n={n}, k={k}, t={t})"
        )));
    }
    Ok(l as usize)
}

pub fn ktree_closure(g: &Graph, k: usize, t: usize) -> Result<ClosureTrace> {
    let l = ktree_closure_parameter(g.order(), k, t)?;
    Ok(l_closure(g, l))
}

/// The (n − 1)-closure used for spanning k-ended-trees.
pub fn kended_closure(g: &Graph) -> Result<ClosureTrace> {
    let n = g.order();
    if n < 2 {
        return Err(Error::Domain(format!("(n − 1)-closure needs n ≥ 2, got {n}")));
    }
    Ok(l_closure(g, n - 1))
}

/// Every nonadjacent pair has degree sum at most `l − 1`.
pub fn is_l_closed(g: &Graph, l: usize) -> bool {
    let n = g.order();
    (0..n).all(|u| {
        bits(g.vertex_mask() & !g.neighbors(u) & !(1u64 << u))
            .all(|v| g.degree(u) + g.degree(v) < l)
    })
}
