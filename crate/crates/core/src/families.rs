//! Named graph families: the extremal graphs H* and G*, the join families
//! 𝔾₁–𝔾₅, the exceptional family 𝔼ℙₙ, and circulant regular graphs.
//!
//! Constructed graphs use a fixed block labelling: clique (or regular)
//! block first, then the independent block, then the join block.
//!
//! Every join family here has the shape `G_r ∨ R(m, d)` with `m = n − r`.
//! Vertices of the regular side have degree exactly `d + r`, while join-side
//! vertices have degree at least `m`, and `m > d + r` throughout the
//! parameter ranges. So the regular side is the set of vertices of degree
//! `d + r`, and membership is decided without search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    HStar,
    GStar,
    G1,
    G2,
    G3,
    G4,
    G5,
    EpA,
    EpB,
    EpC,
    Regular,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::HStar,
        FamilyId::GStar,
        FamilyId::G1,
        FamilyId::G2,
        FamilyId::G3,
        FamilyId::G4,
        FamilyId::G5,
        FamilyId::EpA,
        FamilyId::EpB,
        FamilyId::EpC,
        FamilyId::Regular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::HStar => "hstar",
            FamilyId::GStar => "gstar",
            FamilyId::G1 => "g1",
            FamilyId::G2 => "g2",
            FamilyId::G3 => "g3",
            FamilyId::G4 => "g4",
            FamilyId::G5 => "g5",
            FamilyId::EpA => "ep-a",
            FamilyId::EpB => "ep-b",
            FamilyId::EpC => "ep-c",
            FamilyId::Regular => "regular",
        }
    }

    pub fn from_name(s: &str) -> Option<FamilyId> {
        let s = s.to_ascii_lowercase().replace('_', "-");
        FamilyId::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// Family parameters. Which ones are needed depends on the family:
///
/// | family  | params        | shape                                        |
/// |---------|---------------|----------------------------------------------|
/// | HStar   | n, k, t       | K_t ∨ (K_{n−kt−1} ∪ (kt−t+1)K_1)             |
/// | GStar   | n, k, t       | K_t ∨ (K_{n−k−2t+1} ∪ (k+t−1)K_1)            |
/// | G1      | k, t          | G_t ∨ (kt−t+2)K_1                            |
/// | G2      | k, t, r       | G_r ∨ R(kt+2−r, t−r), r ≤ t−3                |
/// | G3      | n, k, t, r    | G_r ∨ R(n−r, D−r), D = (n−(k−2)t−2)/2        |
/// | G4      | n, r          | G_r ∨ R(n−r, (n−2)/2−r), r ≤ (n−8)/2         |
/// | G5      | n, r          | same shape, (n−6)/2 ≤ r ≤ (n−2)/2            |
/// | EpA     | n             | (n/2−1)-regular                              |
/// | EpB     | n, r          | K_r ∪ K_{n−r}                                |
/// | EpC     | n, r          | R(n−r, n/2−1−r) ∨ G_r, 1 ≤ r ≤ n/2−1         |
/// | Regular | n, d          | R(n, d)                                      |
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub t: Option<usize>,
    pub r: Option<usize>,
    pub d: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub params: FamilyParams,
    /// The arbitrary graph G_r (or G_t); the complete graph when absent.
    pub seed: Option<Graph>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constructed {
    pub graph: Graph,
    pub seed_defaulted: bool,
}

/// How a graph decomposes into the family's blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Vertex blocks. Join families: `[regular side, join side]`;
    /// two-clique graphs: the two components; H*/G*: vertices grouped by
    /// degree, highest first; regular graphs: a single block.
    pub blocks: Vec<Vec<usize>>,
    pub r: Option<usize>,
}

fn need(p: Option<usize>, id: FamilyId, name: &str) -> Result<usize> {
    p.ok_or_else(|| Error::Parameter(format!("family {} needs parameter {name}", id.name())))
}

fn range_err(id: FamilyId, what: String) -> Error {
    Error::Parameter(format!("family {}: {what}", id.name()))
}

/// The circulant R(n, d): offsets ±1..±⌊d/2⌋, plus n/2 when d is odd.
pub fn circulant_regular(n: usize, d: usize) -> Result<Graph> {
    if n * d % 2 == 1 {
        return Err(Error::HandshakeParity { order: n, degree: d });
    }
    if n > 0 && d >= n {
        return Err(Error::Parameter(format!("regular degree {d} must be below the order {n}")));
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        for off in 1..=d / 2 {
            g.insert_edge(v, (v + off) % n);
        }
        if d % 2 == 1 {
            g.insert_edge(v, (v + n / 2) % n);
        }
    }
    Ok(g)
}

fn seed_or_complete(seed: &Option<Graph>, order: usize, id: FamilyId) -> Result<(Graph, bool)> {
    match seed {
        Some(s) if s.order() == order => Ok((s.clone(), false)),
        Some(s) => Err(range_err(id, format!("seed graph has order {}, expected {order}", s.order()))),
        None => Ok((Graph::complete(order)?, true)),
    }
}

/// D = (n − (k−2)t − 2)/2 when it is a non-negative integer.
fn g3_degree(n: usize, k: usize, t: usize) -> Option<usize> {
    let top = n as i64 - ((k - 2) * t) as i64 - 2;
    (top >= 0 && top % 2 == 0).then_some(top as usize / 2)
}

fn check_kt(id: FamilyId, k: usize, t: usize) -> Result<()> {
    if k < 2 || t < 1 {
        return Err(range_err(id, format!("needs k ≥ 2 and t ≥ 1, got k={k}, t={t}")));
    }
    Ok(())
}

pub fn construct(spec: &FamilySpec) -> Result<Constructed> {
    let id = spec.id;
    let p = &spec.params;
    let plain = |graph: Graph| Constructed { graph, seed_defaulted: false };
    // Regular block first, join block last.
    let joined = |m: usize, d: usize, r: usize| -> Result<Constructed> {
        let (seed, seed_defaulted) = seed_or_complete(&spec.seed, r, id)?;
        let graph = circulant_regular(m, d)?.join(&seed)?;
        Ok(Constructed { graph, seed_defaulted })
    };
    match id {
        FamilyId::HStar => {
            let (n, k, t) = (need(p.n, id, "n")?, need(p.k, id, "k")?, need(p.t, id, "t")?);
            check_kt(id, k, t)?;
            if n < k * t + 2 {
                return Err(range_err(id, format!("needs n ≥ kt + 2 = {}, got n={n}", k * t + 2)));
            }
            let g = Graph::complete(n - k * t - 1)?
                .disjoint_union(&Graph::empty(k * t - t + 1)?)?
                .join(&Graph::complete(t)?)?;
            Ok(plain(g))
        }
        FamilyId::GStar => {
            let (n, k, t) = (need(p.n, id, "n")?, need(p.k, id, "k")?, need(p.t, id, "t")?);
            check_kt(id, k, t)?;
            if n < k + 2 * t - 1 {
                return Err(range_err(id, format!("needs n ≥ k + 2t − 1 = {}, got n={n}", k + 2 * t - 1)));
            }
            let g = Graph::complete(n + 1 - k - 2 * t)?
                .disjoint_union(&Graph::empty(k + t - 1)?)?
                .join(&Graph::complete(t)?)?;
            Ok(plain(g))
        }
        FamilyId::G1 => {
            let (k, t) = (need(p.k, id, "k")?, need(p.t, id, "t")?);
            check_kt(id, k, t)?;
            joined(k * t - t + 2, 0, t)
        }
        FamilyId::G2 => {
            let (k, t, r) = (need(p.k, id, "k")?, need(p.t, id, "t")?, need(p.r, id, "r")?);
            check_kt(id, k, t)?;
            if t < 3 || r > t - 3 {
                return Err(range_err(id, format!("needs 0 ≤ r ≤ t − 3, got r={r}, t={t}")));
            }
            joined(k * t + 2 - r, t - r, r)
        }
        FamilyId::G3 => {
            let (n, k, t, r) = (
                need(p.n, id, "n")?,
                need(p.k, id, "k")?,
                need(p.t, id, "t")?,
                need(p.r, id, "r")?,
            );
            check_kt(id, k, t)?;
            let d = g3_degree(n, k, t).ok_or_else(|| {
                range_err(id, format!("n − (k−2)t − 2 must be even and non-negative (n={n}, k={k}, t={t})"))
            })?;
            if r > d {
                return Err(range_err(id, format!("needs 0 ≤ r ≤ {d}, got r={r}")));
            }
            joined(n - r, d - r, r)
        }
        FamilyId::G4 | FamilyId::G5 => {
            let (n, r) = (need(p.n, id, "n")?, need(p.r, id, "r")?);
            if n % 2 == 1 || n < 2 {
                return Err(range_err(id, format!("needs even n, got n={n}")));
            }
            let ok = if id == FamilyId::G4 {
                n >= 8 && r <= (n - 8) / 2
            } else {
                n >= 6 && (n - 6) / 2 <= r && r <= (n - 2) / 2
            };
            if !ok {
                let range = if id == FamilyId::G4 { "0 ≤ r ≤ (n−8)/2" } else { "(n−6)/2 ≤ r ≤ (n−2)/2" };
                return Err(range_err(id, format!("needs {range}, got n={n}, r={r}")));
            }
            joined(n - r, (n - 2) / 2 - r, r)
        }
        FamilyId::EpA => {
            let n = need(p.n, id, "n")?;
            if n % 2 == 1 || n < 2 {
                return Err(range_err(id, format!("needs even n ≥ 2, got n={n}")));
            }
            Ok(plain(circulant_regular(n, n / 2 - 1)?))
        }
        FamilyId::EpB => {
            let n = need(p.n, id, "n")?;
            let r = p.r.unwrap_or(n / 2);
            if r == 0 || r >= n {
                return Err(range_err(id, format!("needs 1 ≤ r ≤ n − 1, got n={n}, r={r}")));
            }
            Ok(plain(Graph::complete(r)?.disjoint_union(&Graph::complete(n - r)?)?))
        }
        FamilyId::EpC => {
            let (n, r) = (need(p.n, id, "n")?, need(p.r, id, "r")?);
            if n % 2 == 1 || n < 4 || r == 0 || r > n / 2 - 1 {
                return Err(range_err(id, format!("needs even n and 1 ≤ r ≤ n/2 − 1, got n={n}, r={r}")));
            }
            joined(n - r, n / 2 - 1 - r, r)
        }
        FamilyId::Regular => {
            let (n, d) = (need(p.n, id, "n")?, need(p.d, id, "d")?);
            Ok(plain(circulant_regular(n, d)?))
        }
    }
}

/// Regular side = vertices of degree `target`; accept when its size gives
/// an admissible `r`, the side induces a `(target − r)`-regular graph, and
/// (implied by the degrees) it is completely joined to the rest.
fn join_regular_split(g: &Graph, target: usize, admissible: impl Fn(usize) -> bool) -> Option<Witness> {
    let n = g.order();
    let side: u64 = (0..n).filter(|&v| g.degree(v) == target).fold(0, |m, v| m | 1u64 << v);
    let r = n - side.count_ones() as usize;
    if side == 0 || !admissible(r) || target < r {
        return None;
    }
    let inner = target - r;
    if !bits(side).all(|v| (g.neighbors(v) & side).count_ones() as usize == inner) {
        return None;
    }
    let rest = g.vertex_mask() & !side;
    Some(Witness {
        blocks: vec![bits(side).collect(), bits(rest).collect()],
        r: Some(r),
    })
}

fn degree_blocks(g: &Graph) -> Witness {
    let mut degs: Vec<usize> = g.degrees();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    degs.dedup();
    Witness {
        blocks: degs
            .into_iter()
            .map(|d| (0..g.order()).filter(|&v| g.degree(v) == d).collect())
            .collect(),
        r: None,
    }
}

/// Decide whether `g` lies in the family. Parameters that pin the family
/// down (k, t, and r where the family allows a range) are optional for
/// r, where `None` means "any admissible r"; `n` defaults to the order of
/// `g` and must agree with it when given.
pub fn classify_membership(g: &Graph, id: FamilyId, p: &FamilyParams) -> Option<Witness> {
    let n = g.order();
    if p.n.is_some_and(|pn| pn != n) {
        return None;
    }
    let r_ok = |r: usize| p.r.is_none_or(|want| want == r);
    match id {
        FamilyId::HStar | FamilyId::GStar => {
            let spec = FamilySpec {
                id,
                params: FamilyParams { n: Some(n), ..*p },
                seed: None,
            };
            let h = construct(&spec).ok()?.graph;
            are_isomorphic(g, &h).then(|| degree_blocks(g))
        }
        FamilyId::G1 | FamilyId::G2 => {
            let (k, t) = (p.k?, p.t?);
            if k < 2 || t < 1 || n != k * t + 2 {
                return None;
            }
            if id == FamilyId::G1 {
                join_regular_split(g, t, |r| r == t)
            } else {
                join_regular_split(g, t, |r| t >= 3 && r <= t - 3 && r_ok(r))
            }
        }
        FamilyId::G3 => {
            let (k, t) = (p.k?, p.t?);
            if k < 2 || t < 1 {
                return None;
            }
            let d = g3_degree(n, k, t)?;
            join_regular_split(g, d, |r| r <= d && r_ok(r))
        }
        FamilyId::G4 | FamilyId::G5 => {
            if n % 2 == 1 || n < 6 {
                return None;
            }
            let admissible = |r: usize| {
                r_ok(r)
                    && if id == FamilyId::G4 {
                        n >= 8 && r <= (n - 8) / 2
                    } else {
                        (n - 6) / 2 <= r && r <= (n - 2) / 2
                    }
            };
            join_regular_split(g, (n - 2) / 2, admissible)
        }
        FamilyId::EpA => {
            (n % 2 == 0 && n >= 2 && g.regular_degree() == Some(n / 2 - 1)).then(|| Witness {
                blocks: vec![(0..n).collect()],
                r: None,
            })
        }
        FamilyId::EpB => {
            let comps = g.components();
            if comps.len() != 2 {
                return None;
            }
            let complete = |c: u64| bits(c).all(|v| g.neighbors(v) | 1u64 << v == c);
            (comps.iter().all(|&c| complete(c)) && r_ok(comps[0].count_ones() as usize)).then(|| Witness {
                blocks: comps.iter().map(|&c| bits(c).collect()).collect(),
                r: Some(comps[0].count_ones() as usize),
            })
        }
        FamilyId::EpC => {
            if n % 2 == 1 || n < 4 {
                return None;
            }
            join_regular_split(g, n / 2 - 1, |r| r >= 1 && r < n / 2 && r_ok(r))
        }
        FamilyId::Regular => {
            let d = g.regular_degree()?;
            (p.d.is_none_or(|want| want == d)).then(|| Witness {
                blocks: vec![(0..n).collect()],
                r: None,
            })
        }
    }
}

/// Membership in 𝔼ℙₙ of any type.
pub fn in_ep(g: &Graph) -> Option<(FamilyId, Witness)> {
    [FamilyId::EpA, FamilyId::EpB, FamilyId::EpC]
        .into_iter()
        .find_map(|id| classify_membership(g, id, &FamilyParams::default()).map(|w| (id, w)))
}

pub fn hstar(n: usize, k: usize, t: usize) -> Result<Graph> {
    let params = FamilyParams { n: Some(n), k: Some(k), t: Some(t), ..Default::default() };
    Ok(construct(&FamilySpec { id: FamilyId::HStar, params, seed: None })?.graph)
}

pub fn gstar(n: usize, k: usize, t: usize) -> Result<Graph> {
    let params = FamilyParams { n: Some(n), k: Some(k), t: Some(t), ..Default::default() };
    Ok(construct(&FamilySpec { id: FamilyId::GStar, params, seed: None })?.graph)
}
