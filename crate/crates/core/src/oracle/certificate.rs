use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A spanning tree given as an edge list, with its maximum degree and
/// number of leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCertificate {
    pub edges: Vec<(usize, usize)>,
    pub max_degree: usize,
    pub leaf_count: usize,
}

impl TreeCertificate {
    pub fn from_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        let mut deg = vec![0usize; n];
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            deg[e.0] += 1;
            deg[e.1] += 1;
        }
        edges.sort_unstable();
        TreeCertificate {
            max_degree: deg.iter().copied().max().unwrap_or(0),
            leaf_count: deg.iter().filter(|&&d| d == 1).count(),
            edges,
        }
    }

    /// Check that this is a spanning tree of `g` and that the recorded
    /// statistics are right.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        let bad = |m: String| Err(Error::Domain(format!("invalid certificate: {m}")));
        if self.edges.len() + 1 != n {
            return bad(format!("{} edges for {n} vertices", self.edges.len()));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            if u >= n || v >= n || !g.has_edge(u, v) {
                return bad(format!("({u}, {v}) is not an edge of the graph"));
            }
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return bad(format!("({u}, {v}) closes a cycle"));
            }
            parent[a] = b;
        }
        let fresh = TreeCertificate::from_edges(n, self.edges.clone());
        if fresh.max_degree != self.max_degree || fresh.leaf_count != self.leaf_count {
            return bad("recorded degree or leaf count is wrong".into());
        }
        Ok(())
    }
}
