use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::enumerate::{gnp_with, pair_count, MAX_EXHAUSTIVE_ORDER};
use super::{Domain, SuiteParams, Tally};
use crate::closure::{kended_closure, ktree_closure, ktree_closure_parameter};
use crate::conditions::{
    evaluate_with, f_value, find_promised_tree, n_min_integer, soundness_check_with, tg_bound_sq, Conclusion, Q,
    EvalOptions, TheoremId,
};
use crate::error::{Error, Result};
use crate::families::{construct, gstar, hstar, FamilyId, FamilyParams, FamilySpec};
use crate::graph::{encode_graph6, is_t_connected, pair_index, Graph};
use crate::oracle::{
    hamilton_path, min_leaf_spanning_tree_with, min_max_degree_spanning_tree_with, spanning_k_ended_tree,
    spanning_k_tree, SearchBudget,
};
use crate::spectral::{
    adjacency_spectral_radius, hong_bound, min_edge_geometric_mean, spectral_summary, DECISION_MARGIN,
    DEFAULT_TOLERANCE,
};

/// Bounds must hold to within this.
const BOUND_EPS: f64 = 1e-9;
/// Equality cases are decided at this resolution.
const EQUALITY_EPS: f64 = 1e-7;
const MASK_CHUNK: u64 = 1 << 14;
const SAMPLE_CHUNK: u64 = 250;

/// Per-query oracle budget inside the soundness hunt.
pub const SOUNDNESS_BUDGET: SearchBudget = SearchBudget { max_nodes: 5_000_000 };

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn merge(parts: Vec<Result<Tally>>) -> Result<Tally> {
    let mut out = Tally::default();
    for p in parts {
        out.absorb(p?);
    }
    Ok(out)
}

fn check_exhaustive(n: usize) -> Result<()> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Capacity {
            order: n,
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    Ok(())
}

/// Apply `work` to every labelled graph on `n` vertices accepted by `keep`.
fn exhaustive<K, W>(n: usize, keep: K, work: W) -> Result<Tally>
where
    K: Fn(&Graph) -> bool + Sync,
    W: Fn(u64, &Graph, &mut Tally) -> Result<()> + Sync,
{
    check_exhaustive(n)?;
    let total = 1u64 << pair_count(n);
    let chunks = total.div_ceil(MASK_CHUNK);
    let parts: Vec<Result<Tally>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut tally = Tally::default();
            for m in c * MASK_CHUNK..((c + 1) * MASK_CHUNK).min(total) {
                let g = Graph::from_pair_mask(n, m)?;
                if keep(&g) {
                    tally.checked += 1;
                    work(m, &g, &mut tally)?;
                }
            }
            Ok(tally)
        })
        .collect();
    merge(parts)
}

/// Every classical bound that fails on `g`, described in words.
pub fn lemma_failures(g: &Graph) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let n = g.order();
    let s = spectral_summary(g, DEFAULT_TOLERANCE)?;
    let (rho, q) = (s.rho, s.q);
    let stats = g.degree_stats();
    let e = stats.edge_count;
    let z = stats.degree_square_sum as f64;
    let connected = g.is_connected();
    let special = g.is_regular() || g.is_semi_regular();

    for t in 0..=stats.min_degree {
        let b = hong_bound(n, e, t);
        if rho > b + BOUND_EPS {
            out.push(format!("ρ = {rho} exceeds the minimum-degree bound {b} at t = {t}"));
        }
    }
    let lower = (z / n as f64).sqrt();
    if lower > rho + BOUND_EPS {
        out.push(format!("Σd² = {z} exceeds nρ² (ρ = {rho})"));
    }
    if let Some(b) = min_edge_geometric_mean(g) {
        if b > rho + BOUND_EPS {
            out.push(format!("ρ = {rho} below the edge geometric-mean bound {b}"));
        }
        if connected && ((rho - b).abs() < EQUALITY_EPS) != special {
            out.push(format!("edge geometric-mean equality {rho} vs {b} disagrees with regularity {special}"));
        }
    }
    if connected && n >= 2 {
        let b = 2.0 * e as f64 / (n - 1) as f64 + n as f64 - 2.0;
        if q > b + BOUND_EPS {
            out.push(format!("q = {q} exceeds 2e/(n−1) + n − 2 = {b}"));
        }
    }
    if e > 0 {
        let b = z / e as f64;
        if b > q + BOUND_EPS {
            out.push(format!("q = {q} below z/e = {b}"));
        }
        if connected && ((q - b).abs() < EQUALITY_EPS) != special {
            out.push(format!("z/e equality {q} vs {b} disagrees with regularity {special}"));
        }
    }
    Ok(out)
}

pub(super) fn lemma_bounds(p: &SuiteParams) -> Result<(Domain, Tally)> {
    let n_max = p.n_max.unwrap_or(7);
    check_exhaustive(n_max)?;
    let pairs = p.samples.unwrap_or(1000);
    let mut tally = Tally::default();
    for n in 1..=n_max {
        let all = n <= 6;
        tally.absorb(exhaustive(
            n,
            |g| all || g.is_connected(),
            |_, g, t| {
                let f = lemma_failures(g)?;
                if !f.is_empty() {
                    t.flag(encode_graph6(g), json!({ "failures": f }));
                }
                Ok(())
            },
        )?);
    }
    let chunks = pairs.div_ceil(SAMPLE_CHUNK);
    let parts: Vec<Result<Tally>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = rng_for(p.seed, c);
            let mut tally = Tally::default();
            for _ in c * SAMPLE_CHUNK..((c + 1) * SAMPLE_CHUNK).min(pairs) {
                let n = rng.gen_range(2..=n_max.max(2));
                let prob = rng.gen_range(0.2..0.9);
                let g = gnp_with(n, prob, &mut rng)?;
                tally.checked += 1;
                monotonicity_pair(&g, &mut rng, &mut tally)?;
            }
            Ok(tally)
        })
        .collect();
    tally.absorb(merge(parts)?);
    let domain = Domain {
        description: format!(
            "all labelled graphs with n ≤ {}, connected labelled graphs with 7 ≤ n ≤ {n_max}, \
             plus {pairs} random spanning-subgraph pairs",
            n_max.min(6)
        ),
        orders: (1..=n_max).collect(),
        k: vec![],
        t: vec![],
        filters: if n_max >= 7 { vec!["connected for n ≥ 7".into()] } else { vec![] },
        samples: Some(pairs),
        seed: Some(p.seed),
    };
    Ok((domain, tally))
}

fn monotonicity_pair(g: &Graph, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut f = g.clone();
    for &(u, v) in &edges {
        if rng.gen_bool(0.3) {
            f.delete_edge(u, v);
        }
    }
    if f == *g {
        if let Some(&(u, v)) = edges.choose(rng) {
            f.delete_edge(u, v);
        }
    }
    let (sg, sf) = (spectral_summary(g, DEFAULT_TOLERANCE)?, spectral_summary(&f, DEFAULT_TOLERANCE)?);
    let mut bad = Vec::new();
    if sf.rho > sg.rho + BOUND_EPS || sf.q > sg.q + BOUND_EPS {
        bad.push("spanning subgraph has a larger radius");
    }
    if g.is_connected() && f != *g && (sg.rho - sf.rho <= BOUND_EPS || sg.q - sf.q <= BOUND_EPS) {
        bad.push("proper spanning subgraph of a connected graph is not strictly smaller");
    }
    if !bad.is_empty() {
        tally.flag(
            encode_graph6(g),
            json!({ "subgraph": encode_graph6(&f), "failures": bad, "rho": [sg.rho, sf.rho], "q": [sg.q, sf.q] }),
        );
    }
    Ok(())
}

/// Oracle answers per pair mask: bit 2i = spanning ks[i]-tree exists,
/// bit 2i+1 = spanning ks[i]-ended-tree exists.
fn oracle_table(n: usize, t: usize, ks: &[usize]) -> Result<(Vec<u16>, u64)> {
    let total = 1u64 << pair_count(n);
    let chunks = total.div_ceil(MASK_CHUNK);
    let budget = SearchBudget::default();
    let parts: Vec<Result<(Vec<u16>, u64)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * MASK_CHUNK;
            let hi = ((c + 1) * MASK_CHUNK).min(total);
            let mut out = Vec::with_capacity((hi - lo) as usize);
            let mut exhausted = 0;
            for m in lo..hi {
                let g = Graph::from_pair_mask(n, m)?;
                let mut bitsv = 0u16;
                if is_t_connected(&g, t) && n >= 2 {
                    let ham = hamilton_path(&g, budget)?.is_some();
                    for (i, &k) in ks.iter().enumerate() {
                        let (tree, ended) = if k == 2 {
                            (ham, ham)
                        } else {
                            let a = spanning_k_tree(&g, k, budget);
                            let b = spanning_k_ended_tree(&g, k, budget);
                            match (a, b) {
                                (Ok(a), Ok(b)) => (a.is_some(), b.is_some()),
                                (Err(Error::BudgetExhausted { .. }), _) | (_, Err(Error::BudgetExhausted { .. })) => {
                                    exhausted += 1;
                                    (false, false)
                                }
                                (Err(e), _) | (_, Err(e)) => return Err(e),
                            }
                        };
                        bitsv |= (tree as u16) << (2 * i) | (ended as u16) << (2 * i + 1);
                    }
                }
                out.push(bitsv);
            }
            Ok((out, exhausted))
        })
        .collect();
    let mut table = Vec::with_capacity(total as usize);
    let mut exhausted = 0;
    for part in parts {
        let (v, e) = part?;
        table.extend(v);
        exhausted += e;
    }
    Ok((table, exhausted))
}

fn mask_of(g: &Graph) -> u64 {
    g.edges().fold(0u64, |m, (u, v)| m | 1u64 << pair_index(u, v))
}

pub(super) fn closure_invariance(p: &SuiteParams) -> Result<(Domain, Tally)> {
    let n_max = p.n_max.unwrap_or(7);
    if n_max > 7 {
        return Err(Error::Capacity { order: n_max, max: 7 });
    }
    let ks: Vec<usize> = p.k.map(|k| vec![k]).unwrap_or_else(|| vec![2, 3]);
    if ks.iter().any(|&k| k < 2) || ks.len() > 8 {
        return Err(Error::Parameter("closure invariance needs 2 ≤ k".into()));
    }
    let t = p.t.unwrap_or(1);
    let mut tally = Tally::default();
    for n in 2..=n_max {
        let (table, exhausted) = oracle_table(n, t, &ks)?;
        tally.budget_exhausted += exhausted;
        let table = &table;
        let ks = &ks;
        tally.absorb(exhaustive(
            n,
            |g| is_t_connected(g, t),
            move |m, g, tally| {
                let here = table[m as usize];
                let ended = kended_closure(g)?;
                let ended_there = table[mask_of(&ended.result) as usize];
                for (i, &k) in ks.iter().enumerate() {
                    if ktree_closure_parameter(n, k, t).is_err() {
                        tally.bump(format!("k={k}: closure parameter not positive"));
                    } else {
                        let c = ktree_closure(g, k, t)?;
                        let there = table[mask_of(&c.result) as usize];
                        let bit = 1u16 << (2 * i);
                        if here & bit != there & bit {
                            tally.flag(
                                encode_graph6(g),
                                json!({
                                    "kind": "k-tree", "k": k, "closure": encode_graph6(&c.result),
                                    "graph_has_tree": here & bit != 0, "closure_has_tree": there & bit != 0,
                                }),
                            );
                        }
                    }
                    let bit = 1u16 << (2 * i + 1);
                    if here & bit != ended_there & bit {
                        tally.flag(
                            encode_graph6(g),
                            json!({
                                "kind": "k-ended-tree", "k": k, "closure": encode_graph6(&ended.result),
                                "graph_has_tree": here & bit != 0, "closure_has_tree": ended_there & bit != 0,
                            }),
                        );
                    }
                }
                if !ended.added_edges.is_empty() {
                    tally.bump("closure added edges");
                }
                Ok(())
            },
        )?);
    }
    let domain = Domain {
        description: format!("all {t}-connected labelled graphs with 2 ≤ n ≤ {n_max}"),
        orders: (2..=n_max).collect(),
        k: ks,
        t: vec![t],
        filters: vec![format!("{t}-connected")],
        samples: None,
        seed: None,
    };
    Ok((domain, tally))
}

#[derive(Debug, Clone)]
enum ExtremalItem {
    HStar(usize, usize, usize),
    GStar(usize, usize, usize),
    Remark(usize, usize, usize),
    G1(usize, usize),
}

pub(super) fn extremal_no_tree(p: &SuiteParams) -> Result<(Domain, Tally)> {
    let n_max = p.n_max.unwrap_or(14);
    let ts: Vec<usize> = p.t.map(|t| vec![t]).unwrap_or_else(|| vec![1, 2, 3]);
    let ks: Vec<usize> = p.k.map(|k| vec![k]).unwrap_or_else(|| vec![2, 3, 4]);
    let mut items = Vec::new();
    for &t in &ts {
        for &k in &ks {
            for n in k * t + 2..=n_max {
                items.push(ExtremalItem::HStar(n, k, t));
            }
            for n in k + 2 * t..=n_max {
                items.push(ExtremalItem::GStar(n, k, t));
            }
            if k + 2 * t - 1 <= n_max {
                items.push(ExtremalItem::Remark(k + 2 * t - 1, k, t));
            }
            if k * t + 2 <= n_max {
                items.push(ExtremalItem::G1(k, t));
            }
        }
    }
    let budget = SearchBudget::default();
    let parts: Vec<Result<Tally>> = items
        .par_iter()
        .map(|item| {
            let mut tally = Tally {
                checked: 1,
                ..Default::default()
            };
            let outcome = match *item {
                ExtremalItem::HStar(n, k, t) => {
                    let g = hstar(n, k, t)?;
                    min_max_degree_spanning_tree_with(&g, budget)
                        .map(|(d, _)| (g, "H*", "min max degree", d, d > k, k, t))
                }
                ExtremalItem::GStar(n, k, t) => {
                    let g = gstar(n, k, t)?;
                    min_leaf_spanning_tree_with(&g, budget).map(|(l, _)| (g, "G*", "min leaves", l, l > k, k, t))
                }
                ExtremalItem::Remark(n, k, t) => {
                    let g = gstar(n, k, t)?;
                    min_leaf_spanning_tree_with(&g, budget)
                        .map(|(l, _)| (g, "K_t ∨ (k+t−1)K_1", "min leaves", l, l <= k, k, t))
                }
                ExtremalItem::G1(k, t) => {
                    let params = FamilyParams {
                        k: Some(k),
                        t: Some(t),
                        ..Default::default()
                    };
                    let g = construct(&FamilySpec {
                        id: FamilyId::G1,
                        params,
                        seed: None,
                    })?
                    .graph;
                    min_max_degree_spanning_tree_with(&g, budget)
                        .map(|(d, _)| (g, "𝔾₁ member", "min max degree", d, d > k, k, t))
                }
            };
            match outcome {
                Ok((g, what, stat, value, ok, k, t)) => {
                    tally.bump(format!("{what}: checked"));
                    if !ok {
                        tally.flag(
                            encode_graph6(&g),
                            json!({ "graph": what, "n": g.order(), "k": k, "t": t, "statistic": stat, "value": value }),
                        );
                    }
                }
                Err(Error::BudgetExhausted { .. }) => tally.budget_exhausted += 1,
                Err(e) => return Err(e),
            }
            Ok(tally)
        })
        .collect();
    let tally = merge(parts)?;
    let domain = Domain {
        description: format!(
            "H* for kt+2 ≤ n ≤ {n_max}; G* for k+2t ≤ n ≤ {n_max}; K_t ∨ (k+t−1)K_1; default 𝔾₁ member"
        ),
        orders: (1..=n_max).collect(),
        k: ks,
        t: ts,
        filters: vec![],
        samples: None,
        seed: None,
    };
    Ok((domain, tally))
}

/// Random relabelling.
fn shuffle(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("a permutation")
}

fn family_member(id: FamilyId, params: FamilyParams, order: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let seed = if rng.gen_bool(0.5) {
        None
    } else {
        Some(gnp_with(order, rng.gen_range(0.0..1.0), rng).ok()?)
    };
    construct(&FamilySpec { id, params, seed }).ok().map(|c| c.graph)
}

/// A graph from the theorem's extremal neighbourhood: its exceptional
/// graph or a random member of the families the theorem names.
fn extremal_base(id: TheoremId, n: usize, k: usize, t: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let kt = |r: Option<usize>| FamilyParams {
        n: Some(n),
        k: Some(k),
        t: Some(t),
        r,
        d: None,
    };
    match id {
        TheoremId::KendedQ
        | TheoremId::KendedCompRho
        | TheoremId::CorKendedCompRhoT1
        | TheoremId::BgAoKendedQ => gstar(n, k, t).ok(),
        TheoremId::KtreeCompRhoSmall => {
            if t >= 3 && rng.gen_bool(0.5) {
                let r = rng.gen_range(0..=t - 3);
                family_member(FamilyId::G2, kt(Some(r)), r, rng)
            } else {
                family_member(FamilyId::G1, kt(None), t, rng)
            }
        }
        TheoremId::KtreeCompQ => {
            let d = (n as i64 - ((k - 2) * t) as i64 - 2) / 2;
            if d < 0 {
                return None;
            }
            let r = rng.gen_range(0..=d as usize);
            family_member(FamilyId::G3, kt(Some(r)), r, rng)
        }
        TheoremId::CorHampathSuite => {
            if n >= 6 && n % 2 == 0 && rng.gen_bool(0.5) {
                let r = rng.gen_range(0..=(n - 2) / 2);
                let id = if n >= 8 && r <= (n - 8) / 2 { FamilyId::G4 } else { FamilyId::G5 };
                family_member(id, kt(Some(r)), r, rng)
            } else {
                family_member(FamilyId::G1, FamilyParams { k: Some(2), ..kt(None) }, t, rng)
            }
        }
        TheoremId::BgZhou => {
            if n % 2 == 0 && n >= 4 {
                let r = rng.gen_range(1..n / 2);
                family_member(FamilyId::EpC, kt(Some(r)), r, rng)
            } else {
                let r = rng.gen_range(1..n.max(2));
                construct(&FamilySpec { id: FamilyId::EpB, params: kt(Some(r)), seed: None }).ok().map(|c| c.graph)
            }
        }
        _ => hstar(n, k, t).ok(),
    }
}

fn flip_random_pairs(g: &mut Graph, count: usize, add_only: bool, rng: &mut ChaCha8Rng) {
    let n = g.order();
    if n < 2 {
        return;
    }
    for _ in 0..count {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        if g.has_edge(u, v) {
            if !add_only {
                g.delete_edge(u, v);
            }
        } else {
            g.insert_edge(u, v);
        }
    }
}

/// One complement-sparse sample for the soundness hunt.
fn soundness_sample(id: TheoremId, n: usize, k: usize, t: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let style = rng.gen_range(0..4);
    let g = match style {
        0 => {
            let p_max = (4.0 / n as f64).min(1.0);
            gnp_with(n, rng.gen_range(0.0..=p_max), rng)?.complement()
        }
        1 => {
            let mut sparse = Graph::empty(n)?;
            let m = rng.gen_range(0..=2 * n);
            flip_random_pairs(&mut sparse, m, true, rng);
            sparse.complement()
        }
        _ => match extremal_base(id, n, k, t, rng) {
            Some(mut base) if base.order() == n => {
                let flips = rng.gen_range(0..=3);
                flip_random_pairs(&mut base, flips, style == 3, rng);
                base
            }
            _ => gnp_with(n, rng.gen_range(0.7..=1.0), rng)?,
        },
    };
    Ok(shuffle(&g, rng))
}

pub(super) fn theorem_soundness(p: &SuiteParams) -> Result<(Domain, Tally)> {
    let samples = p.samples.unwrap_or(10_000);
    let (k0, t0) = (p.k.unwrap_or(2), p.t.unwrap_or(1));
    let theorems = p.theorems.clone().unwrap_or_else(|| TheoremId::MAIN.to_vec());
    let opts = EvalOptions::default();
    let mut tally = Tally::default();
    let mut orders = Vec::new();
    for id in &theorems {
        let id = *id;
        let (k, t) = id.effective_params(k0, t0);
        let n = p.n.unwrap_or_else(|| n_min_integer(id, k, t).max(2));
        if n > 64 {
            return Err(Error::Capacity { order: n, max: 64 });
        }
        orders.push(n);
        let stream_base = (TheoremId::ALL.iter().position(|&x| x == id).unwrap() as u64) << 32;
        let chunks = samples.div_ceil(SAMPLE_CHUNK);
        let parts: Vec<Result<Tally>> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut rng = rng_for(p.seed, stream_base | c);
                let mut tally = Tally::default();
                for _ in c * SAMPLE_CHUNK..((c + 1) * SAMPLE_CHUNK).min(samples) {
                    let g = soundness_sample(id, n, k, t, &mut rng)?;
                    tally.checked += 1;
                    hunt_one(id, &g, k, t, &opts, &mut tally)?;
                }
                Ok(tally)
            })
            .collect();
        tally.absorb(merge(parts)?);
    }
    orders.sort_unstable();
    orders.dedup();
    let names: Vec<&str> = theorems.iter().map(|id| id.name()).collect();
    let domain = Domain {
        description: format!(
            "{samples} complement-sparse samples per theorem at its least admissible order; theorems: {}",
            names.join(", ")
        ),
        orders,
        k: vec![k0],
        t: vec![t0],
        filters: vec![],
        samples: Some(samples),
        seed: Some(p.seed),
    };
    Ok((domain, tally))
}

fn hunt_one(id: TheoremId, g: &Graph, k: usize, t: usize, opts: &EvalOptions, tally: &mut Tally) -> Result<()> {
    let verdict = evaluate_with(id, g, k, t, opts)?;
    let label = format!("{id}: {:?}", verdict.conclusion);
    tally.bump(label);
    match verdict.conclusion {
        Conclusion::Guaranteed | Conclusion::ExtremalException => {
            match soundness_check_with(&verdict, g, SOUNDNESS_BUDGET) {
                Ok(out) if !out.sound => {
                    if verdict.comparison_only {
                        tally.bump(format!("{id}: comparison refuted"));
                    } else {
                        tally.flag(
                            encode_graph6(g),
                            json!({ "verdict": verdict, "oracle": out }),
                        );
                    }
                }
                Ok(_) => {}
                Err(Error::BudgetExhausted { .. }) => tally.budget_exhausted += 1,
                Err(e) => return Err(e),
            }
        }
        Conclusion::TolTie => match find_promised_tree(verdict.promise, g, SOUNDNESS_BUDGET) {
            Ok(Some(_)) => tally.bump(format!("{id}: tie, tree present")),
            Ok(None) => tally.bump(format!("{id}: tie, tree absent")),
            Err(Error::BudgetExhausted { .. }) => tally.budget_exhausted += 1,
            Err(e) => return Err(e),
        },
        _ => {}
    }
    Ok(())
}

/// ρ(K̄_a ∨ K_b) = ((b − 1) + √((b − 1)² + 4ab)) / 2.
fn join_empty_clique_radius(a: usize, b: usize) -> f64 {
    let (a, b) = (a as f64, b as f64);
    ((b - 1.0) + ((b - 1.0).powi(2) + 4.0 * a * b).sqrt()) / 2.0
}

pub(super) fn tightness(p: &SuiteParams) -> Result<(Domain, Tally)> {
    let (k, t) = (p.k.unwrap_or(2), p.t.unwrap_or(1));
    let opts = EvalOptions::default();
    // (theorem, graph, closed form of ρ(Ḡ), bound)
    let mut items: Vec<(TheoremId, Graph, f64, f64)> = Vec::new();
    let n1 = p.n.unwrap_or_else(|| n_min_integer(TheoremId::KtreeCompRho, k, t));
    if let Some(b) = sqrt_q(f_value(n1, k, t)) {
        items.push((TheoremId::KtreeCompRho, hstar(n1, k, t)?, join_empty_clique_radius(n1 - k * t - 1, k * t - t + 1), b));
    }
    let n2 = p.n.unwrap_or_else(|| n_min_integer(TheoremId::KendedCompRho, k, t));
    if let Some(b) = sqrt_q(tg_bound_sq(n2, k, t)) {
        items.push((TheoremId::KendedCompRho, gstar(n2, k, t)?, join_empty_clique_radius(n2 + 1 - k - 2 * t, k + t - 1), b));
    }
    items.push((TheoremId::CorHampathComp, hstar(16, 2, 1)?, join_empty_clique_radius(13, 2), 35f64.sqrt()));

    let mut tally = Tally::default();
    for (id, g, closed, bound) in items {
        tally.checked += 1;
        let measured = adjacency_spectral_radius(&g.complement(), opts.tolerance)?;
        let verdict = evaluate_with(id, &g, k, t, &opts)?;
        let tree = match find_promised_tree(verdict.promise, &g, SearchBudget::default()) {
            Ok(c) => Some(c.is_some()),
            Err(Error::BudgetExhausted { .. }) => {
                tally.budget_exhausted += 1;
                None
            }
            Err(e) => return Err(e),
        };
        let record = json!({
            "theorem": id,
            "n": g.order(),
            "k": verdict.k,
            "t": verdict.t,
            "rho_complement": measured,
            "closed_form": closed,
            "bound": bound,
            "conclusion": verdict.conclusion,
            "tree_exists": tree,
        });
        let mut bad = Vec::new();
        if (measured - closed).abs() > 1e-6 {
            bad.push("ρ(Ḡ) differs from the closed form");
        }
        if measured > bound + DECISION_MARGIN {
            bad.push("extremal graph does not satisfy the spectral hypothesis");
        }
        if tree != Some(false) {
            bad.push("extremal graph is not confirmed treeless");
        }
        if verdict.conclusion != Conclusion::ExtremalException {
            bad.push("evaluator did not report the exception");
        }
        if !bad.is_empty() {
            tally.flag(encode_graph6(&g), json!({ "record": record, "failures": bad }));
        }
        tally.records.push(record);
    }
    let domain = Domain {
        description: format!("extremal graphs at the least admissible orders for k = {k}, t = {t}, and at n = 16 for k = 2, t = 1"),
        orders: vec![n1, n2, 16],
        k: vec![k],
        t: vec![t],
        filters: vec![],
        samples: None,
        seed: None,
    };
    Ok((domain, tally))
}

/// √r, or `None` when r < 0.
fn sqrt_q(r: Q) -> Option<f64> {
    (*r.numer() >= 0).then(|| (*r.numer() as f64 / *r.denom() as f64).sqrt())
}
