//! Hamilton paths by depth-first extension with a shared table of dead
//! states. A state is (visited set, current end); whether it can be
//! completed does not depend on where the path started, so one table
//! serves every start vertex.

use std::collections::HashSet;

use super::{NodeCounter, SearchBudget};
use crate::error::Result;
use crate::graph::{bits, full_mask, Graph};

/// Orders up to this use a flat bit table; larger ones a hash set.
const DENSE_LIMIT: usize = 20;

enum DeadSet {
    Dense { n: usize, words: Vec<u64> },
    Sparse(HashSet<(u64, u8)>),
}

impl DeadSet {
    fn new(n: usize) -> Self {
        if n <= DENSE_LIMIT {
            DeadSet::Dense {
                n,
                words: vec![0; (n << n).div_ceil(64)],
            }
        } else {
            DeadSet::Sparse(HashSet::new())
        }
    }

    fn contains(&self, mask: u64, end: usize) -> bool {
        match self {
            DeadSet::Dense { n, words } => {
                let i = mask as usize * n + end;
                words[i / 64] >> (i % 64) & 1 == 1
            }
            DeadSet::Sparse(set) => set.contains(&(mask, end as u8)),
        }
    }

    fn insert(&mut self, mask: u64, end: usize) {
        match self {
            DeadSet::Dense { n, words } => {
                let i = mask as usize * *n + end;
                words[i / 64] |= 1u64 << (i % 64);
            }
            DeadSet::Sparse(set) => {
                set.insert((mask, end as u8));
            }
        }
    }
}

struct Walker<'a> {
    g: &'a Graph,
    full: u64,
    dead: DeadSet,
    counter: NodeCounter,
    path: Vec<usize>,
}

impl Walker<'_> {
    fn feasible(&self, end: usize, rem: u64) -> bool {
        let g = self.g;
        let live = rem | 1u64 << end;
        if g.reach_within(1u64 << end, live) != live {
            return false;
        }
        // Only the final vertex may have fewer than two usable neighbours.
        if rem.count_ones() >= 2 {
            let thin = bits(rem)
                .filter(|&v| (g.neighbors(v) & live).count_ones() < 2)
                .take(2)
                .count();
            if thin > 1 {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, mask: u64, end: usize) -> Result<bool> {
        if mask == self.full {
            return Ok(true);
        }
        if self.dead.contains(mask, end) {
            return Ok(false);
        }
        self.counter.tick()?;
        let rem = self.full & !mask;
        if self.feasible(end, rem) {
            let g = self.g;
            let mut next: Vec<(u32, usize)> = bits(g.neighbors(end) & rem)
                .map(|c| ((g.neighbors(c) & rem).count_ones(), c))
                .collect();
            next.sort_unstable();
            for (_, c) in next {
                self.path.push(c);
                if self.extend(mask | 1u64 << c, c)? {
                    return Ok(true);
                }
                self.path.pop();
            }
        }
        self.dead.insert(mask, end);
        Ok(false)
    }
}

/// A Hamilton path as a vertex sequence, or `None` when there is none
/// (in particular when the graph is disconnected).
pub fn hamilton_path(g: &Graph, budget: SearchBudget) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n == 0 {
        return Ok(None);
    }
    if n == 1 {
        return Ok(Some(vec![0]));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let pendants: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if pendants.len() > 2 {
        return Ok(None);
    }
    let mut starts: Vec<usize> = if pendants.is_empty() {
        (0..n).collect()
    } else {
        // A pendant vertex must be an end of the path.
        vec![pendants[0]]
    };
    starts.sort_by_key(|&v| (g.degree(v), v));
    let mut w = Walker {
        g,
        full: full_mask(n),
        dead: DeadSet::new(n),
        counter: NodeCounter::new(budget),
        path: Vec::with_capacity(n),
    };
    for s in starts {
        w.path.clear();
        w.path.push(s);
        if w.extend(1u64 << s, s)? {
            return Ok(Some(w.path));
        }
    }
    Ok(None)
}
