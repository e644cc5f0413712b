use super::{bits, Graph};
use crate::error::{Error, Result};

/// Residual network of the vertex-split construction: vertex `v` becomes
/// `v_in = v` and `v_out = v + n`, with a unit arc `v_in -> v_out` and unit
/// arcs `u_out -> v_in` for every edge. Rows are `u128` bitmasks.
struct SplitNetwork {
    n: usize,
    res: Vec<u128>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut res = vec![0u128; 2 * n];
        for v in 0..n {
            res[v] |= 1u128 << (v + n);
            for u in bits(g.neighbors(v)) {
                res[v + n] |= 1u128 << u;
            }
        }
        SplitNetwork { n, res }
    }

    /// One BFS augmentation from `source` to `sink`; returns false when no
    /// augmenting path exists.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let m = 2 * self.n;
        let mut parent = [usize::MAX; 128];
        let mut seen: u128 = 1u128 << source;
        let mut queue = [0usize; 128];
        let (mut head, mut tail) = (0, 0);
        queue[tail] = source;
        tail += 1;
        while head < tail {
            let x = queue[head];
            head += 1;
            let mut out = self.res[x] & !seen;
            while out != 0 {
                let y = out.trailing_zeros() as usize;
                out &= out - 1;
                debug_assert!(y < m);
                seen |= 1u128 << y;
                parent[y] = x;
                if y == sink {
                    let mut cur = sink;
                    while cur != source {
                        let p = parent[cur];
                        self.res[p] &= !(1u128 << cur);
                        self.res[cur] |= 1u128 << p;
                        cur = p;
                    }
                    return true;
                }
                queue[tail] = y;
                tail += 1;
            }
        }
        false
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths between two
/// distinct non-adjacent vertices, stopping early once `limit` is reached.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g);
    let source = s + g.order();
    let mut flow = 0;
    while flow < limit && net.augment(source, t) {
        flow += 1;
    }
    flow
}

/// Vertex connectivity κ(G): the size of a minimum vertex cut, with
/// κ(K_n) = n − 1.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::Domain(format!(
            "vertex connectivity needs at least 2 vertices, got {n}"
        )));
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = g.min_degree().min(n - 1);
    // Some vertex among the first best+1 lies outside any minimum cut.
    let mut i = 0;
    while i <= best && i < n {
        let non_nbrs = g.vertex_mask() & !g.neighbors(i) & !(1u64 << i);
        for j in bits(non_nbrs) {
            let c = local_connectivity(g, i, j, best);
            best = best.min(c);
        }
        i += 1;
    }
    Ok(best)
}

/// `n > t` and κ(G) ≥ t.
pub fn is_t_connected(g: &Graph, t: usize) -> bool {
    let n = g.order();
    if n <= t {
        return false;
    }
    match t {
        0 => true,
        1 => g.is_connected(),
        _ => {
            if g.min_degree() < t || !g.is_connected() {
                return false;
            }
            for i in 0..t.min(n) {
                let non_nbrs = g.vertex_mask() & !g.neighbors(i) & !(1u64 << i);
                for j in bits(non_nbrs) {
                    if local_connectivity(g, i, j, t) < t {
                        return false;
                    }
                }
            }
            true
        }
    }
}
