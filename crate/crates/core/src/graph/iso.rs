//! Cheap invariants and exact isomorphism tests.
//!
//! [`DegreeProfile`] is a fast necessary condition. [`are_isomorphic`]
//! runs colour refinement on both graphs jointly and then searches for an
//! explicit bijection by individualisation. [`canonical_form`] explores the
//! whole individualisation tree and is meant for small orders only.

use std::collections::HashMap;

use super::{bits, Graph};

/// Sorted degree sequence together with the sorted multiset of neighbour
/// degrees of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeProfile(Vec<(usize, Vec<usize>)>);

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let deg = g.degrees();
        let mut rows: Vec<(usize, Vec<usize>)> = (0..g.order())
            .map(|v| {
                let mut nd: Vec<usize> = bits(g.neighbors(v)).map(|u| deg[u]).collect();
                nd.sort_unstable();
                (deg[v], nd)
            })
            .collect();
        rows.sort();
        DegreeProfile(rows)
    }
}

/// Refine a joint colouring of several graphs until stable. Colours are
/// renumbered from the sorted signatures, so the result does not depend on
/// vertex labels.
fn refine(graphs: &[&Graph], colors: &mut [Vec<u32>]) {
    loop {
        let mut sigs: Vec<Vec<(u32, Vec<u32>)>> = Vec::with_capacity(graphs.len());
        for (g, col) in graphs.iter().zip(colors.iter()) {
            sigs.push(
                (0..g.order())
                    .map(|v| {
                        let mut nc: Vec<u32> = bits(g.neighbors(v)).map(|u| col[u]).collect();
                        nc.sort_unstable();
                        (col[v], nc)
                    })
                    .collect(),
            );
        }
        let mut all: Vec<&(u32, Vec<u32>)> = sigs.iter().flatten().collect();
        all.sort();
        all.dedup();
        let index: HashMap<&(u32, Vec<u32>), u32> =
            all.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
        let mut distinct: Vec<u32> = colors.iter().flatten().copied().collect();
        distinct.sort_unstable();
        distinct.dedup();
        for (col, sig) in colors.iter_mut().zip(sigs.iter()) {
            for (c, s) in col.iter_mut().zip(sig.iter()) {
                *c = index[s];
            }
        }
        // Refinement only splits cells; an unchanged cell count means stable.
        if all.len() == distinct.len() {
            return;
        }
    }
}

fn histogram(col: &[u32]) -> Vec<usize> {
    let m = col.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut h = vec![0; m];
    for &c in col {
        h[c as usize] += 1;
    }
    h
}

/// Exact isomorphism test.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    if DegreeProfile::of(a) != DegreeProfile::of(b) {
        return false;
    }
    let mut colors = vec![vec![0u32; a.order()], vec![0u32; b.order()]];
    refine(&[a, b], &mut colors);
    search_iso(a, b, colors)
}

fn search_iso(a: &Graph, b: &Graph, colors: Vec<Vec<u32>>) -> bool {
    let (ca, cb) = (&colors[0], &colors[1]);
    if histogram(ca) != histogram(cb) {
        return false;
    }
    let hist = histogram(ca);
    // Smallest non-singleton cell.
    let cell = (0..hist.len())
        .filter(|&c| hist[c] > 1)
        .min_by_key(|&c| (hist[c], c));
    let Some(cell) = cell else {
        let n = a.order();
        let mut map = vec![0usize; n];
        for u in 0..n {
            map[u] = cb.iter().position(|&c| c == ca[u]).expect("histograms match");
        }
        return a.edges().all(|(u, v)| b.has_edge(map[u], map[v]));
    };
    let fresh = hist.len() as u32;
    let v = ca.iter().position(|&c| c == cell as u32).expect("cell is non-empty");
    for w in (0..b.order()).filter(|&w| cb[w] == cell as u32) {
        let mut next = colors.clone();
        next[0][v] = fresh;
        next[1][w] = fresh;
        refine(&[a, b], &mut next);
        if search_iso(a, b, next) {
            return true;
        }
    }
    false
}

/// Canonical relabelling: isomorphic graphs map to identical graphs.
/// Cost grows with the automorphism group, so keep this to small orders
/// (the enumeration harness uses it for n ≤ 8).
pub fn canonical_form(g: &Graph) -> Graph {
    let mut colors = vec![vec![0u32; g.order()]];
    refine(&[g], &mut colors);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    canon_search(g, colors.pop().unwrap(), &mut best);
    let (_, perm) = best.expect("search visits at least one leaf");
    g.relabel(&perm).expect("search yields a permutation")
}

fn canon_search(g: &Graph, col: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let hist = histogram(&col);
    let cell = (0..hist.len()).find(|&c| hist[c] > 1);
    match cell {
        None => {
            // Colours are a permutation of 0..n.
            let perm: Vec<usize> = col.iter().map(|&c| c as usize).collect();
            let h = g.relabel(&perm).expect("discrete colouring is a permutation");
            let key = h.rows().to_vec();
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                *best = Some((key, perm));
            }
        }
        Some(cell) => {
            for v in (0..g.order()).filter(|&v| col[v] == cell as u32) {
                let mut next = vec![col.clone()];
                // Split v off ahead of the rest of its cell.
                for c in next[0].iter_mut() {
                    *c *= 2;
                    if *c > 2 * cell as u32 {
                        *c += 1;
                    }
                }
                for (u, c) in next[0].iter_mut().enumerate() {
                    if u != v && *c == 2 * cell as u32 {
                        *c += 1;
                    }
                }
                refine(&[g], &mut next);
                canon_search(g, next.pop().unwrap(), best);
            }
        }
    }
}
