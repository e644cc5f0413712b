//! Reference implementations used only by tests. Nothing here calls into
//! the library's spectral, closure or oracle code.
#![allow(dead_code)]

use kspectra::graph::Graph;

/// Decode a Prüfer sequence into the edges of a labelled tree on n vertices.
fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// (Δ*, L*) over all labelled spanning trees, or None when there are none.
/// Needs n ≥ 3.
pub fn brute(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut best: Option<(usize, usize)> = None;
    loop {
        let edges = prufer_edges(n, &seq);
        if edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            let mut deg = vec![0usize; n];
            for &(u, v) in &edges {
                deg[u] += 1;
                deg[v] += 1;
            }
            let d = *deg.iter().max().unwrap();
            let l = deg.iter().filter(|&&x| x == 1).count();
            best = Some(match best {
                None => (d, l),
                Some((bd, bl)) => (bd.min(d), bl.min(l)),
            });
        }
        // next sequence in base n
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            return best;
        }
    }
}

/// Hamilton path by subset dynamic programming.
pub fn hamilton_dp(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let full = (1usize << n) - 1;
    // ends[S] = set of vertices v such that some path covers S and ends at v
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for s in 1..=full {
        let e = ends[s];
        if e == 0 {
            continue;
        }
        for v in 0..n {
            if e >> v & 1 == 0 {
                continue;
            }
            for w in 0..n {
                if s >> w & 1 == 0 && g.has_edge(v, w) {
                    ends[s | 1 << w] |= 1 << w;
                }
            }
        }
    }
    ends[full] != 0
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| if g.has_edge(i, j) { 1.0 } else { 0.0 }).collect())
        .collect()
}

pub fn signless_laplacian(g: &Graph) -> Vec<Vec<f64>> {
    let mut m = adjacency(g);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = g.neighbors(i).count_ones() as f64;
    }
    m
}

fn largest(v: Vec<f64>) -> f64 {
    v.into_iter().fold(f64::NEG_INFINITY, f64::max)
}

/// (ρ, q) from dense eigenvalues.
pub fn radii(g: &Graph) -> (f64, f64) {
    if g.order() == 0 {
        return (0.0, 0.0);
    }
    (largest(jacobi_eigenvalues(adjacency(g))), largest(jacobi_eigenvalues(signless_laplacian(g))))
}

/// Degree of every vertex, counted from `has_edge`.
pub fn degree_list(g: &Graph) -> Vec<usize> {
    let n = g.order();
    (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).count()).collect()
}

/// Bipartite with constant degree on each side (both sides non-empty).
pub fn semi_regular(g: &Graph) -> bool {
    let n = g.order();
    let deg = degree_list(g);
    let mut colour = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(0u8);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if g.has_edge(u, v) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(1 - colour[u].unwrap());
                            stack.push(v);
                        }
                        Some(c) if c == colour[u].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    let side = |c: u8| -> Vec<usize> { (0..n).filter(|&v| colour[v] == Some(c)).map(|v| deg[v]).collect() };
    let (a, b) = (side(0), side(1));
    !a.is_empty() && !b.is_empty() && a.iter().all(|&d| d == a[0]) && b.iter().all(|&d| d == b[0])
}

pub fn connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// Connected labelled graphs on n vertices, by the standard recurrence.
pub fn connected_labelled_count(n: usize) -> u64 {
    let binom = |a: u64, b: u64| -> u64 { (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1)) };
    let all = |m: u64| -> u64 { 1u64 << (m * m.saturating_sub(1) / 2) };
    let mut c = vec![0u64; n + 1];
    for m in 1..=n as u64 {
        let mut v = all(m);
        for j in 1..m {
            v -= binom(m - 1, j - 1) * c[j as usize] * all(m - j);
        }
        c[m as usize] = v;
    }
    c[n]
}

/// Repeatedly join non-adjacent u, v with deg(u) + deg(v) ≥ l.
pub fn naive_closure(g: &Graph, l: usize) -> Graph {
    let n = g.order();
    let mut h = g.clone();
    loop {
        let deg = degree_list(&h);
        let pick = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| !h.has_edge(u, v) && deg[u] + deg[v] >= l);
        match pick {
            Some((u, v)) => h = h.with_edge(u, v).unwrap(),
            None => return h,
        }
    }
}
