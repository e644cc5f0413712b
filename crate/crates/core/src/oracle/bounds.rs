//! Lower bounds from small vertex cuts.
//!
//! If deleting `S` leaves `c` components, every spanning tree spends at
//! least `|S| + c − 1` edge ends inside `S`. Hence some vertex of `S` has
//! tree degree at least `1 + ⌈(c − 1)/|S|⌉`, and the tree has at least
//! `c − |S| + 1` leaves.

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutBounds {
    pub max_degree: usize,
    pub leaves: usize,
}

fn max_cut_size(n: usize) -> usize {
    match n {
        0..=16 => 4,
        17..=32 => 3,
        _ => 2,
    }
}

/// Bounds valid for every spanning tree of a connected graph on n ≥ 2
/// vertices.
pub fn cut_lower_bounds(g: &Graph) -> CutBounds {
    let n = g.order();
    let mut out = CutBounds {
        max_degree: if n >= 3 { 2 } else { 1 },
        leaves: 2,
    };
    if n < 3 {
        return out;
    }
    out.leaves = out.leaves.max((0..n).filter(|&v| g.degree(v) == 1).count());
    let limit = max_cut_size(n).min(n - 1);
    subsets(g, 0, 0, 1, limit, &mut out);
    out
}

fn subsets(g: &Graph, from: usize, mask: u64, s: usize, limit: usize, out: &mut CutBounds) {
    for v in from..g.order() {
        let m = mask | 1u64 << v;
        let c = g.count_components_without(m);
        if c >= 2 {
            out.max_degree = out.max_degree.max(1 + (c - 1).div_ceil(s));
            out.leaves = out.leaves.max((c + 1).saturating_sub(s));
        }
        if s < limit {
            subsets(g, v + 1, m, s + 1, limit, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_bounds_are_tight() {
        let s = Graph::star(5).unwrap();
        let b = cut_lower_bounds(&s);
        assert_eq!(b.max_degree, 5);
        assert_eq!(b.leaves, 5);
    }

    #[test]
    fn cycle_has_no_useful_cut() {
        let b = cut_lower_bounds(&Graph::cycle(7).unwrap());
        assert_eq!(b, CutBounds { max_degree: 2, leaves: 2 });
    }

    #[test]
    fn complete_bipartite() {
        // K_{2,5}: deleting the small side leaves 5 components.
        let b = cut_lower_bounds(&Graph::complete_bipartite(2, 5).unwrap());
        assert_eq!(b.max_degree, 3);
        assert_eq!(b.leaves, 4);
    }
}
