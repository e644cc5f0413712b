//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency rows are stored as `u64` bitmasks, so every set operation on
//! neighbourhoods is a handful of word instructions.

mod connectivity;
mod graph6;
mod iso;

pub use connectivity::{is_t_connected, local_connectivity, vertex_connectivity};
pub use graph6::{decode_graph6, encode_graph6, parse_graph6_lines};
pub use iso::{are_isomorphic, canonical_form, DegreeProfile};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Iterate the indices of the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Index of the unordered pair `{i, j}` in graph6 column order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

/// An immutable simple undirected graph.
///
/// Rows beyond `order` are always zero, so derived equality and hashing
/// coincide with labeled-graph equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u64; MAX_ORDER],
}

/// Degree statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub degree_sequence: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub edge_count: usize,
    /// Sum of squared degrees.
    pub degree_square_sum: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Order zero is accepted as the
    /// identity for [`Graph::join`] and [`Graph::disjoint_union`].
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            n,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let full = full_mask(n);
        for v in 0..n {
            g.rows[v] = full & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Domain(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,m}` with centre 0.
    pub fn star(m: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
        Graph::from_edges(m + 1, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        Graph::empty(a)?.join(&Graph::empty(b)?)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Build a graph from a bitmask over pairs in [`pair_index`] order.
    /// Only orders with at most 64 pairs (n ≤ 11) are representable.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Graph> {
        if n * n.saturating_sub(1) / 2 > 64 {
            return Err(Error::Capacity { order: n, max: 11 });
        }
        let mut g = Graph::empty(n)?;
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> idx & 1 == 1 {
                    g.insert_edge(i, j);
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_pair_mask`].
    pub fn pair_mask(&self) -> Option<u64> {
        if self.n * self.n.saturating_sub(1) / 2 > 64 {
            return None;
        }
        let mut mask = 0u64;
        for (u, v) in self.edges() {
            mask |= 1u64 << pair_index(u, v);
        }
        Some(mask)
    }

    /// Adjacency rows as bitmasks, one per vertex.
    pub fn from_rows(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let full = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !full).leading_zeros() as usize,
                    order: n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            g.rows[v] = row;
        }
        for u in 0..n {
            for v in bits(g.rows[u]) {
                if g.rows[v] >> u & 1 == 0 {
                    return Err(Error::Domain(format!("adjacency is not symmetric at ({u}, {v})")));
                }
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    #[inline]
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    #[inline]
    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
    }

    /// Copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Copy of this graph with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.delete_edge(u, v);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// All vertices as a bitmask.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degree_sequence = self.degrees();
        let sum: usize = degree_sequence.iter().sum();
        DegreeStats {
            min_degree: degree_sequence.iter().copied().min().unwrap_or(0),
            max_degree: degree_sequence.iter().copied().max().unwrap_or(0),
            edge_count: sum / 2,
            degree_square_sum: degree_sequence.iter().map(|d| d * d).sum(),
            degree_sequence,
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let full = full_mask(self.n);
        for v in 0..self.n {
            g.rows[v] = !self.rows[v] & full & !(1u64 << v);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.rows[..self.n].copy_from_slice(&self.rows[..self.n]);
        for v in 0..other.n {
            g.rows[self.n + v] = other.rows[v] << self.n;
        }
        Ok(g)
    }

    /// Join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(self.n);
        let right = full_mask(g.n) & !left;
        for v in 0..self.n {
            g.rows[v] |= right;
        }
        for v in self.n..g.n {
            g.rows[v] |= left;
        }
        Ok(g)
    }

    /// Subgraph induced by `mask`, relabelled in increasing vertex order.
    /// Returns the subgraph and the original index of each new vertex.
    pub fn induced_subgraph(&self, mask: u64) -> (Graph, Vec<usize>) {
        let mask = mask & self.vertex_mask();
        let map: Vec<usize> = bits(mask).collect();
        let mut g = Graph {
            n: map.len(),
            rows: [0; MAX_ORDER],
        };
        for (new_u, &old_u) in map.iter().enumerate() {
            let row = self.rows[old_u] & mask;
            let mut packed = 0u64;
            for (new_v, &old_v) in map.iter().enumerate() {
                if row >> old_v & 1 == 1 {
                    packed |= 1u64 << new_v;
                }
            }
            g.rows[new_u] = packed;
        }
        (g, map)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Domain(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1u64 << p;
        }
        if seen != self.vertex_mask() {
            return Err(Error::Domain("relabelling is not a permutation".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Vertex set of the component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        self.reach_within(1u64 << v, self.vertex_mask())
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reach_within(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertex_mask())
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within & self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach_within(1u64 << v, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Number of components of `G - removed`.
    pub fn count_components_without(&self, removed: u64) -> usize {
        let mut rest = self.vertex_mask() & !removed;
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !self.reach_within(1u64 << v, rest);
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertex_mask()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    /// A proper 2-colouring as the bitmask of one colour class, if bipartite.
    pub fn bipartition(&self) -> Option<u64> {
        let mut side = 0u64;
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            let mut colored = 1u64 << root;
            let mut layer = 1u64 << root;
            let mut parity = true;
            while layer != 0 {
                if parity {
                    side |= layer;
                }
                let mut next = 0u64;
                for v in bits(layer) {
                    next |= self.rows[v];
                }
                next &= !colored;
                colored |= next;
                layer = next;
                parity = !parity;
            }
            for v in bits(comp) {
                let same = if side >> v & 1 == 1 { side } else { comp & !side };
                if self.rows[v] & same != 0 {
                    return None;
                }
            }
        }
        Some(side)
    }

    /// Bipartite with a constant degree on each side of every non-trivial
    /// component, the side-degree pair being shared by all components.
    /// Isolated vertices are not allowed when edges exist.
    pub fn is_semi_regular(&self) -> bool {
        if self.size() == 0 {
            return self.n > 0;
        }
        let Some(side) = self.bipartition() else {
            return false;
        };
        let mut pair: Option<(usize, usize)> = None;
        for comp in self.components() {
            if comp.count_ones() == 1 {
                return false;
            }
            let a = comp & side;
            let b = comp & !side;
            let da = self.degree(a.trailing_zeros() as usize);
            let db = self.degree(b.trailing_zeros() as usize);
            if bits(a).any(|v| self.degree(v) != da) || bits(b).any(|v| self.degree(v) != db) {
                return false;
            }
            let key = (da.min(db), da.max(db));
            match pair {
                None => pair = Some(key),
                Some(p) if p != key => return false,
                _ => {}
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }
    fn e(n: usize) -> Graph {
        Graph::empty(n).unwrap()
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(k(5).complement(), e(5));
        assert_eq!(k(5).complement().complement(), k(5));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        let comp = c5.complement();
        assert_eq!(comp.size(), 5);
        assert!(comp.is_connected());
        assert_eq!(comp.regular_degree(), Some(2));
        assert!(are_isomorphic(&c5, &comp));
    }

    #[test]
    fn complement_distributes_over_join() {
        let a = k(1);
        let b = k(3).disjoint_union(&e(2)).unwrap();
        let lhs = a.join(&b).unwrap().complement();
        let rhs = a.complement().disjoint_union(&b.complement()).unwrap();
        assert_eq!(lhs, rhs);
        // K_1 ∪ (independent 3-set joined to a 2-clique)
        let expected = e(1).disjoint_union(&e(3).join(&k(2)).unwrap()).unwrap();
        assert_eq!(lhs, expected);
    }

    #[test]
    fn join_and_union_counts() {
        let star = k(1).join(&e(4)).unwrap();
        assert_eq!(star, Graph::star(4).unwrap());
        assert_eq!(star.size(), 4);

        let h = k(2).join(&k(3).disjoint_union(&e(3)).unwrap()).unwrap();
        assert_eq!(h.order(), 8);
        assert_eq!(h.size(), 16);

        let u = k(9).disjoint_union(&e(3)).unwrap();
        assert_eq!((u.order(), u.size()), (12, 36));
    }

    #[test]
    fn capacity_overflow() {
        let big = e(40);
        assert!(matches!(
            big.join(&big),
            Err(Error::Capacity { order: 80, .. })
        ));
        assert!(Graph::empty(65).is_err());
        assert!(Graph::complete(64).is_ok());
    }

    #[test]
    fn degree_stats_examples() {
        let s = Graph::cycle(6).unwrap().degree_stats();
        assert_eq!(s.degree_sequence, vec![2; 6]);
        assert_eq!((s.min_degree, s.edge_count, s.degree_square_sum), (2, 6, 24));

        let s = Graph::star(4).unwrap().degree_stats();
        assert_eq!((s.min_degree, s.edge_count, s.degree_square_sum), (1, 4, 20));

        // K_2 ∨ (K_3 ∪ 3K_1), labelled join block first here.
        let h = k(2).join(&k(3).disjoint_union(&e(3)).unwrap()).unwrap();
        let s = h.degree_stats();
        assert_eq!(s.degree_sequence, vec![7, 7, 4, 4, 4, 2, 2, 2]);
        assert_eq!((s.edge_count, s.degree_square_sum), (16, 158));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
    }

    #[test]
    fn pair_mask_round_trip() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let m = c4.pair_mask().unwrap();
        assert_eq!(m, 0b101101);
        assert_eq!(Graph::from_pair_mask(4, m).unwrap(), c4);
    }

    #[test]
    fn semi_regular_and_regular() {
        assert!(Graph::star(4).unwrap().is_semi_regular());
        assert!(Graph::complete_bipartite(2, 3).unwrap().is_semi_regular());
        assert!(Graph::cycle(6).unwrap().is_semi_regular());
        assert!(!Graph::cycle(5).unwrap().is_semi_regular());
        assert!(!Graph::path(4).unwrap().is_semi_regular());
        assert!(Graph::cycle(5).unwrap().is_regular());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p = Graph::path(5).unwrap();
        let (sub, map) = p.induced_subgraph(0b11010);
        assert_eq!(map, vec![1, 3, 4]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn components_and_cut_counts() {
        let g = k(3).disjoint_union(&e(2)).unwrap();
        assert_eq!(g.components(), vec![0b111, 0b1000, 0b10000]);
        let star = Graph::star(4).unwrap();
        assert_eq!(star.count_components_without(1), 4);
    }
}
