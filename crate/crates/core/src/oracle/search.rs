//! Branch and bound over spanning trees grown from a fixed root.
//!
//! A node holds a partial tree `T` and a set of forbidden edges. We pick an
//! unspanned vertex `x` with the fewest ways to hang off `T` and branch on
//! each possible parent, plus one branch in which `x` is never attached to
//! the current `T` at all (it will hang off a vertex spanned later). Every
//! spanning tree satisfying the objective lies under exactly one branch.

use super::{NodeCounter, TreeCertificate};
use crate::error::Result;
use crate::graph::{bits, full_mask, Graph};

#[derive(Debug, Clone, Copy)]
pub(super) enum Objective {
    MaxDegree(usize),
    MaxLeaves(usize),
}

pub(super) struct TreeSearch<'a> {
    g: &'a Graph,
    full: u64,
    objective: Objective,
    counter: &'a mut NodeCounter,
    tree: u64,
    deg: [usize; 64],
    allowed: [u64; 64],
    edges: Vec<(usize, usize)>,
}

impl<'a> TreeSearch<'a> {
    pub fn new(g: &'a Graph, objective: Objective, counter: &'a mut NodeCounter) -> Self {
        let n = g.order();
        let root = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n ≥ 2");
        let mut allowed = [0u64; 64];
        allowed[..n].copy_from_slice(g.rows());
        TreeSearch {
            g,
            full: full_mask(n),
            objective,
            counter,
            tree: 1u64 << root,
            deg: [0; 64],
            allowed,
            edges: Vec::with_capacity(n),
        }
    }

    pub fn run(mut self) -> Result<Option<TreeCertificate>> {
        Ok(if self.node()? {
            Some(TreeCertificate::from_edges(self.g.order(), self.edges))
        } else {
            None
        })
    }

    fn open_tree(&self) -> u64 {
        match self.objective {
            Objective::MaxDegree(k) => bits(self.tree)
                .filter(|&u| self.deg[u] < k)
                .fold(0, |m, u| m | 1u64 << u),
            Objective::MaxLeaves(_) => self.tree,
        }
    }

    fn accept(&self) -> bool {
        let n = self.g.order();
        match self.objective {
            Objective::MaxDegree(k) => self.deg[..n].iter().all(|&d| d <= k),
            Objective::MaxLeaves(k) => self.deg[..n].iter().filter(|&&d| d == 1).count() <= k,
        }
    }

    fn viable(&self, open: u64, unspanned: u64) -> bool {
        // Reachability of every unspanned vertex through allowed edges.
        let mut reach = open;
        let mut frontier = open;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.allowed[v] & unspanned;
            }
            frontier = next & !reach;
            reach |= frontier;
        }
        if reach & unspanned != unspanned {
            return false;
        }
        let live = open | unspanned;
        match self.objective {
            Objective::MaxDegree(k) => {
                // A vertex with a single candidate neighbour forces that edge.
                let mut load = [0usize; 64];
                for x in bits(unspanned) {
                    let cand = self.allowed[x] & live;
                    if cand.count_ones() == 1 {
                        load[cand.trailing_zeros() as usize] += 1;
                    }
                }
                bits(self.tree).all(|y| self.deg[y] + load[y] <= k)
                    && bits(unspanned).all(|y| load[y] < k)
            }
            Objective::MaxLeaves(k) => {
                let mut sure = 0usize;
                for u in bits(self.tree) {
                    if self.deg[u] == 1 && self.allowed[u] & unspanned == 0 {
                        sure += 1;
                    }
                }
                for x in bits(unspanned) {
                    if (self.allowed[x] & live).count_ones() == 1 || self.allowed[x] & unspanned == 0 {
                        sure += 1;
                    }
                }
                // leaves = 2 + Σ max(deg − 2, 0), and degrees never shrink.
                let branching: usize = bits(self.tree).map(|u| self.deg[u].saturating_sub(2)).sum();
                sure.max(2 + branching) <= k
            }
        }
    }

    fn node(&mut self) -> Result<bool> {
        self.counter.tick()?;
        let unspanned = self.full & !self.tree;
        if unspanned == 0 {
            return Ok(self.accept());
        }
        let open = self.open_tree();
        if !self.viable(open, unspanned) {
            return Ok(false);
        }
        let Some(x) = bits(unspanned)
            .filter(|&x| self.allowed[x] & open != 0)
            .min_by_key(|&x| ((self.allowed[x] & open).count_ones(), x))
        else {
            return Ok(false);
        };
        let mut parents: Vec<usize> = bits(self.allowed[x] & open).collect();
        parents.sort_by_key(|&u| (self.deg[u], u));
        for u in parents {
            self.tree |= 1u64 << x;
            self.deg[u] += 1;
            self.deg[x] = 1;
            self.edges.push((u, x));
            let found = self.node()?;
            if found {
                return Ok(true);
            }
            self.edges.pop();
            self.deg[x] = 0;
            self.deg[u] -= 1;
            self.tree &= !(1u64 << x);
        }
        // x hangs off a vertex that is not yet spanned.
        let saved = self.allowed;
        for u in bits(self.allowed[x] & self.tree) {
            self.allowed[x] &= !(1u64 << u);
            self.allowed[u] &= !(1u64 << x);
        }
        let found = self.node()?;
        if !found {
            self.allowed = saved;
        }
        Ok(found)
    }
}
