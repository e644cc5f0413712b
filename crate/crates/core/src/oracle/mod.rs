//! Exact deciders for spanning trees with bounded maximum degree
//! (k-trees) and with a bounded number of leaves (k-ended-trees).
//!
//! Both problems are NP-hard; the deciders here are exponential searches
//! meant for desk-scale graphs. A search that runs out of budget reports
//! [`Error::BudgetExhausted`] and never guesses.

mod bounds;
mod certificate;
mod hamilton;
mod search;

pub use bounds::{cut_lower_bounds, CutBounds};
pub use certificate::TreeCertificate;
pub use hamilton::hamilton_path;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use search::{Objective, TreeSearch};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Per-query cap on search nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Nodes spent so far by one query.
#[derive(Debug)]
pub(crate) struct NodeCounter {
    pub used: u64,
    pub max: u64,
}

impl NodeCounter {
    pub fn new(budget: SearchBudget) -> Self {
        NodeCounter {
            used: 0,
            max: budget.max_nodes,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            Err(Error::BudgetExhausted { nodes: self.used })
        } else {
            Ok(())
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::Domain(format!(
            "spanning-tree queries need at least 2 vertices, got {}",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Domain("graph is disconnected; no spanning tree exists".into()));
    }
    Ok(())
}

/// Any spanning tree, grown breadth-first from vertex 0.
fn bfs_tree(g: &Graph) -> TreeCertificate {
    let mut seen = 1u64;
    let mut frontier = vec![0usize];
    let mut edges = Vec::with_capacity(g.order() - 1);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &u in &frontier {
            for v in bits(g.neighbors(u) & !seen) {
                seen |= 1u64 << v;
                edges.push((u, v));
                next.push(v);
            }
        }
        frontier = next;
    }
    TreeCertificate::from_edges(g.order(), edges)
}

fn path_certificate(n: usize, path: &[usize]) -> TreeCertificate {
    TreeCertificate::from_edges(n, path.windows(2).map(|w| (w[0], w[1])).collect())
}

/// A Hamilton path exists iff the minimum leaf count and the minimum
/// maximum degree over spanning trees are both 2 (for n ≥ 3).
pub fn has_hamilton_path(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    Ok(hamilton_path(g, SearchBudget::default())?.is_some())
}

/// Spanning tree with maximum degree at most `k`, if one exists.
pub fn spanning_k_tree(g: &Graph, k: usize, budget: SearchBudget) -> Result<Option<TreeCertificate>> {
    require_connected(g)?;
    let mut counter = NodeCounter::new(budget);
    k_tree_with(g, k, &cut_lower_bounds(g), &mut counter)
}

fn k_tree_with(
    g: &Graph,
    k: usize,
    lb: &CutBounds,
    counter: &mut NodeCounter,
) -> Result<Option<TreeCertificate>> {
    let n = g.order();
    if k == 0 {
        return Ok(None);
    }
    if n == 2 {
        return Ok(Some(bfs_tree(g)));
    }
    if k == 1 || lb.max_degree > k {
        return Ok(None);
    }
    if k >= g.max_degree() {
        return Ok(Some(bfs_tree(g)));
    }
    if k == 2 {
        return Ok(hamilton_path(g, SearchBudget { max_nodes: counter.max - counter.used })?
            .map(|p| path_certificate(n, &p)));
    }
    TreeSearch::new(g, Objective::MaxDegree(k), counter).run()
}

/// Spanning tree with at most `k` leaves, if one exists.
pub fn spanning_k_ended_tree(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<TreeCertificate>> {
    require_connected(g)?;
    let mut counter = NodeCounter::new(budget);
    k_ended_with(g, k, &cut_lower_bounds(g), &mut counter)
}

fn k_ended_with(
    g: &Graph,
    k: usize,
    lb: &CutBounds,
    counter: &mut NodeCounter,
) -> Result<Option<TreeCertificate>> {
    let n = g.order();
    if k < 2 || lb.leaves > k {
        return Ok(None);
    }
    if n == 2 || k >= n - 1 {
        return Ok(Some(bfs_tree(g)));
    }
    if k == 2 {
        return Ok(hamilton_path(g, SearchBudget { max_nodes: counter.max - counter.used })?
            .map(|p| path_certificate(n, &p)));
    }
    TreeSearch::new(g, Objective::MaxLeaves(k), counter).run()
}

pub fn has_spanning_k_tree(g: &Graph, k: usize) -> Result<bool> {
    Ok(spanning_k_tree(g, k, SearchBudget::default())?.is_some())
}

pub fn has_spanning_k_ended_tree(g: &Graph, k: usize) -> Result<bool> {
    Ok(spanning_k_ended_tree(g, k, SearchBudget::default())?.is_some())
}

/// Δ*: the least maximum degree over all spanning trees, with a witness.
pub fn min_max_degree_spanning_tree(g: &Graph) -> Result<(usize, TreeCertificate)> {
    min_max_degree_spanning_tree_with(g, SearchBudget::default())
}

pub fn min_max_degree_spanning_tree_with(
    g: &Graph,
    budget: SearchBudget,
) -> Result<(usize, TreeCertificate)> {
    require_connected(g)?;
    let mut counter = NodeCounter::new(budget);
    let lb = cut_lower_bounds(g);
    let start = lb.max_degree.max(if g.order() == 2 { 1 } else { 2 });
    for k in start..g.order() {
        if let Some(cert) = k_tree_with(g, k, &lb, &mut counter)? {
            debug_assert!(cert.max_degree <= k);
            return Ok((cert.max_degree, cert));
        }
    }
    unreachable!("a connected graph has a spanning tree of maximum degree at most n − 1")
}

/// L*: the least number of leaves over all spanning trees, with a witness.
pub fn min_leaf_spanning_tree(g: &Graph) -> Result<(usize, TreeCertificate)> {
    min_leaf_spanning_tree_with(g, SearchBudget::default())
}

pub fn min_leaf_spanning_tree_with(
    g: &Graph,
    budget: SearchBudget,
) -> Result<(usize, TreeCertificate)> {
    require_connected(g)?;
    let mut counter = NodeCounter::new(budget);
    let lb = cut_lower_bounds(g);
    for k in lb.leaves.max(2)..=g.order().max(2) {
        if let Some(cert) = k_ended_with(g, k, &lb, &mut counter)? {
            debug_assert!(cert.leaf_count <= k);
            return Ok((cert.leaf_count, cert));
        }
    }
    unreachable!("every spanning tree has at most n − 1 leaves")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hstar_8_2_2() -> Graph {
        // K_2 ∨ (K_3 ∪ 3K_1)
        Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::empty(3).unwrap())
            .unwrap()
            .join(&Graph::complete(2).unwrap())
            .unwrap()
    }

    #[test]
    fn paths_and_stars() {
        let p5 = Graph::path(5).unwrap();
        let (d, cert) = min_max_degree_spanning_tree(&p5).unwrap();
        assert_eq!(d, 2);
        assert_eq!(cert.edges.len(), 4);
        assert_eq!(min_leaf_spanning_tree(&p5).unwrap().0, 2);

        let star = Graph::star(4).unwrap();
        assert_eq!(min_max_degree_spanning_tree(&star).unwrap().0, 4);
        assert_eq!(min_leaf_spanning_tree(&star).unwrap().0, 4);
    }

    #[test]
    fn hstar_small() {
        let h = hstar_8_2_2();
        let (d, cert) = min_max_degree_spanning_tree(&h).unwrap();
        assert_eq!(d, 3);
        cert.validate(&h).unwrap();
        let (l, cert) = min_leaf_spanning_tree(&h).unwrap();
        assert_eq!(l, 3);
        cert.validate(&h).unwrap();
    }

    #[test]
    fn hamilton_examples() {
        assert!(has_hamilton_path(&Graph::cycle(6).unwrap()).unwrap());
        assert!(has_hamilton_path(&Graph::complete_bipartite(2, 3).unwrap()).unwrap());
        assert!(!has_hamilton_path(&Graph::complete_bipartite(2, 4).unwrap()).unwrap());
        let g = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::empty(2).unwrap())
            .unwrap()
            .join(&Graph::complete(1).unwrap())
            .unwrap();
        assert!(!has_hamilton_path(&g).unwrap());
    }

    #[test]
    fn disconnected_is_a_domain_error() {
        let g = Graph::empty(3).unwrap();
        assert!(matches!(min_max_degree_spanning_tree(&g), Err(Error::Domain(_))));
        assert!(matches!(min_leaf_spanning_tree(&g), Err(Error::Domain(_))));
        assert!(matches!(has_hamilton_path(&g), Err(Error::Domain(_))));
        assert!(min_leaf_spanning_tree(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn two_vertices() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(min_max_degree_spanning_tree(&k2).unwrap().0, 1);
        assert_eq!(min_leaf_spanning_tree(&k2).unwrap().0, 2);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // Refuting a 3-tree in a graph whose cut bound is not tight needs a search.
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let r = spanning_k_ended_tree(&petersen, 3, SearchBudget { max_nodes: 1 });
        assert!(matches!(r, Err(Error::BudgetExhausted { .. }) | Ok(Some(_))));
        // The Petersen graph has a Hamilton path.
        assert!(has_hamilton_path(&petersen).unwrap());
    }
}
