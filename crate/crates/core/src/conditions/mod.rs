//! Hypothesis evaluators for the spectral spanning-tree theorems.
//!
//! Each evaluator checks the theorem's preconditions (order range,
//! connectivity, excluded families), makes the spectral comparison, and
//! tests the exceptional graph. Equalities in the hypotheses are exactly
//! where the extremal graphs live, so a comparison whose gap is below the
//! decision margin is never silently rounded either way: it is either
//! explained by the exceptional graph or reported as a tie.

mod thresholds;

pub use thresholds::{
    edge_threshold_kended, edge_threshold_ktree, f_value, improvement_gap, n_min, n_min_integer,
    prior_ktree_n_min, td_bound_sq, te_bound, tg_bound_sq, tg_bound_sq_t1, thresholds, NMinEntry,
    ThresholdTable, Q,
};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::closure::{kended_closure, ktree_closure};
use crate::error::{Error, Result};
use crate::families::{classify_membership, gstar, hstar, in_ep, FamilyId, FamilyParams};
use crate::graph::{are_isomorphic, is_t_connected, vertex_connectivity, Graph};
use crate::oracle::{spanning_k_ended_tree, spanning_k_tree, SearchBudget, TreeCertificate};
use crate::spectral::{
    adjacency_spectral_radius, signless_laplacian_spectral_radius, DECISION_MARGIN, DEFAULT_TOLERANCE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "THM-KTREE-RHO")]
    KtreeRho,
    #[serde(rename = "THM-KTREE-Q")]
    KtreeQ,
    #[serde(rename = "THM-KTREE-COMP-RHO")]
    KtreeCompRho,
    #[serde(rename = "COR-HAMPATH-COMP")]
    CorHampathComp,
    #[serde(rename = "THM-KTREE-COMP-RHO-SMALL")]
    KtreeCompRhoSmall,
    #[serde(rename = "THM-KTREE-COMP-Q")]
    KtreeCompQ,
    #[serde(rename = "COR-HAMPATH-SUITE")]
    CorHampathSuite,
    #[serde(rename = "THM-KENDED-Q")]
    KendedQ,
    #[serde(rename = "THM-KENDED-COMP-RHO")]
    KendedCompRho,
    #[serde(rename = "COR-KENDED-COMP-RHO-T1")]
    CorKendedCompRhoT1,
    #[serde(rename = "THM-BG-FN")]
    BgFiedlerNikiforov,
    #[serde(rename = "THM-BG-ZHOU")]
    BgZhou,
    #[serde(rename = "THM-BG-FAN")]
    BgFan,
    #[serde(rename = "THM-BG-AO-KTREE")]
    BgAoKtree,
    #[serde(rename = "THM-BG-AO-KENDED-Q")]
    BgAoKendedQ,
    #[serde(rename = "THM-BG-AO-KENDED-COMP")]
    BgAoKendedComp,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::KtreeRho,
        TheoremId::KtreeQ,
        TheoremId::KtreeCompRho,
        TheoremId::CorHampathComp,
        TheoremId::KtreeCompRhoSmall,
        TheoremId::KtreeCompQ,
        TheoremId::CorHampathSuite,
        TheoremId::KendedQ,
        TheoremId::KendedCompRho,
        TheoremId::CorKendedCompRhoT1,
        TheoremId::BgFiedlerNikiforov,
        TheoremId::BgZhou,
        TheoremId::BgFan,
        TheoremId::BgAoKtree,
        TheoremId::BgAoKendedQ,
        TheoremId::BgAoKendedComp,
    ];

    /// The results this crate is responsible for; the rest are evaluated
    /// for comparison only.
    pub const MAIN: [TheoremId; 10] = [
        TheoremId::KtreeRho,
        TheoremId::KtreeQ,
        TheoremId::KtreeCompRho,
        TheoremId::CorHampathComp,
        TheoremId::KtreeCompRhoSmall,
        TheoremId::KtreeCompQ,
        TheoremId::CorHampathSuite,
        TheoremId::KendedQ,
        TheoremId::KendedCompRho,
        TheoremId::CorKendedCompRhoT1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::KtreeRho => "THM-KTREE-RHO",
            TheoremId::KtreeQ => "THM-KTREE-Q",
            TheoremId::KtreeCompRho => "THM-KTREE-COMP-RHO",
            TheoremId::CorHampathComp => "COR-HAMPATH-COMP",
            TheoremId::KtreeCompRhoSmall => "THM-KTREE-COMP-RHO-SMALL",
            TheoremId::KtreeCompQ => "THM-KTREE-COMP-Q",
            TheoremId::CorHampathSuite => "COR-HAMPATH-SUITE",
            TheoremId::KendedQ => "THM-KENDED-Q",
            TheoremId::KendedCompRho => "THM-KENDED-COMP-RHO",
            TheoremId::CorKendedCompRhoT1 => "COR-KENDED-COMP-RHO-T1",
            TheoremId::BgFiedlerNikiforov => "THM-BG-FN",
            TheoremId::BgZhou => "THM-BG-ZHOU",
            TheoremId::BgFan => "THM-BG-FAN",
            TheoremId::BgAoKtree => "THM-BG-AO-KTREE",
            TheoremId::BgAoKendedQ => "THM-BG-AO-KENDED-Q",
            TheoremId::BgAoKendedComp => "THM-BG-AO-KENDED-COMP",
        }
    }

    pub fn comparison_only(self) -> bool {
        !TheoremId::MAIN.contains(&self)
    }

    /// Corollaries fix some of k and t; returns the effective pair.
    pub fn effective_params(self, k: usize, t: usize) -> (usize, usize) {
        match self {
            TheoremId::CorHampathComp | TheoremId::BgFiedlerNikiforov | TheoremId::BgZhou => (2, 1),
            TheoremId::CorHampathSuite => (2, t),
            TheoremId::CorKendedCompRhoT1
            | TheoremId::BgFan
            | TheoremId::BgAoKendedQ
            | TheoremId::BgAoKendedComp => (k, 1),
            _ => (k, t),
        }
    }

    /// Which spanning tree the theorem promises.
    pub fn promise(self, k: usize) -> Promise {
        let kind = match self {
            TheoremId::KendedQ
            | TheoremId::KendedCompRho
            | TheoremId::CorKendedCompRhoT1
            | TheoremId::BgAoKendedQ
            | TheoremId::BgAoKendedComp => TreeKind::KEnded,
            _ => TreeKind::KTree,
        };
        Promise { kind, k }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_uppercase().replace('_', "-");
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == want)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeKind {
    /// maximum degree at most k
    KTree,
    /// at most k leaves
    KEnded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Promise {
    pub kind: TreeKind,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    Guaranteed,
    ExtremalException,
    PreconditionFailed,
    Inconclusive,
    TolTie,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Precondition {
    pub name: String,
    pub required: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<=")]
    AtMost,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralComparison {
    pub quantity: String,
    pub relation: Relation,
    pub measured: f64,
    pub threshold: f64,
    /// Signed slack in favour of the hypothesis.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub preconditions: Vec<Precondition>,
    pub spectral: Option<SpectralComparison>,
    pub conclusion: Conclusion,
    pub case: Option<String>,
    pub exception: Option<String>,
    pub promise: Promise,
    pub comparison_only: bool,
    pub tolerance: f64,
    pub decision_margin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub tolerance: f64,
    pub decision_margin: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tolerance: DEFAULT_TOLERANCE,
            decision_margin: DECISION_MARGIN,
        }
    }
}

fn pre(name: &str, required: String, actual: String, pass: bool) -> Precondition {
    Precondition {
        name: name.to_string(),
        required,
        actual,
        pass,
    }
}

fn order_at_least(n: usize, bound: Q) -> Precondition {
    pre(
        "order",
        format!("n ≥ {bound}"),
        format!("n = {n}"),
        Q::from_integer(n as i64) >= bound,
    )
}

fn t_connected(g: &Graph, t: usize) -> Precondition {
    let kappa = if g.order() >= 2 {
        vertex_connectivity(g).unwrap_or(0)
    } else {
        0
    };
    pre(
        "connectivity",
        format!("{t}-connected"),
        format!("κ = {kappa}, n = {}", g.order()),
        is_t_connected(g, t),
    )
}

fn not_member(name: &str, family: &str, member: bool) -> Precondition {
    pre(
        name,
        format!("G ∉ {family}"),
        if member { format!("G ∈ {family}") } else { format!("G ∉ {family}") },
        !member,
    )
}

fn compare(quantity: &str, relation: Relation, measured: f64, threshold: f64) -> SpectralComparison {
    let margin = match relation {
        Relation::AtLeast => measured - threshold,
        Relation::AtMost => threshold - measured,
    };
    SpectralComparison {
        quantity: quantity.to_string(),
        relation,
        measured,
        threshold,
        margin,
    }
}

fn sqrt_q(r: Q) -> Option<f64> {
    (r >= Q::from_integer(0)).then(|| (*r.numer() as f64 / *r.denom() as f64).sqrt())
}

type ExceptionTest<'a> = Box<dyn Fn() -> Result<Option<String>> + 'a>;

/// Everything one theorem case needs before the decision is taken.
struct Plan<'a> {
    preconditions: Vec<Precondition>,
    spectral: Option<SpectralComparison>,
    exception: Option<ExceptionTest<'a>>,
    case: Option<String>,
}

fn isomorphic_to(g: &Graph, h: Result<Graph>, label: String) -> Result<Option<String>> {
    let h = h?;
    Ok(are_isomorphic(g, &h).then_some(label))
}

fn ktree_closure_is(g: &Graph, k: usize, t: usize, h: Result<Graph>, label: &str) -> Result<Option<String>> {
    let c = ktree_closure(g, k, t)?;
    isomorphic_to(&c.result, h, format!("C_{}(G) ≅ {label}", c.l))
}

fn kended_closure_is(g: &Graph, h: Result<Graph>, label: &str) -> Result<Option<String>> {
    let c = kended_closure(g)?;
    isomorphic_to(&c.result, h, format!("C_{}(G) ≅ {label}", c.l))
}

fn member_of(g: &Graph, id: FamilyId, p: FamilyParams, label: String) -> Option<String> {
    classify_membership(g, id, &p).map(|w| match w.r {
        Some(r) => format!("G ∈ {label} (r = {r})"),
        None => format!("G ∈ {label}"),
    })
}

fn kt(k: usize, t: usize) -> FamilyParams {
    FamilyParams {
        k: Some(k),
        t: Some(t),
        ..Default::default()
    }
}

fn complement_rho(g: &Graph, tol: f64) -> Result<f64> {
    adjacency_spectral_radius(&g.complement(), tol)
}

fn complement_q(g: &Graph, tol: f64) -> Result<f64> {
    signless_laplacian_spectral_radius(&g.complement(), tol)
}

fn plans<'a>(id: TheoremId, g: &'a Graph, k: usize, t: usize, tol: f64) -> Result<Vec<Plan<'a>>> {
    let n = g.order();
    let nmin = order_at_least(n, n_min(id, k, t));
    let plan = |preconditions, spectral, exception: Option<ExceptionTest<'a>>| Plan {
        preconditions,
        spectral,
        exception,
        case: None,
    };
    let extremal_ge = |quantity: &str, q_of: fn(&Graph, f64) -> Result<f64>, h: Result<Graph>| -> Result<Option<SpectralComparison>> {
        Ok(match h {
            Ok(h) => Some(compare(quantity, Relation::AtLeast, q_of(g, tol)?, q_of(&h, tol)?)),
            Err(_) => None,
        })
    };
    Ok(match id {
        TheoremId::KtreeRho | TheoremId::KtreeQ | TheoremId::BgAoKtree | TheoremId::BgFan => {
            let (q_of, quantity): (fn(&Graph, f64) -> Result<f64>, &str) = if id == TheoremId::KtreeQ {
                (signless_laplacian_spectral_radius, "q(G)")
            } else {
                (adjacency_spectral_radius, "ρ(G)")
            };
            let mut pres = vec![nmin, t_connected(g, t)];
            if id == TheoremId::BgFan {
                pres.push(pre("degree bound", "k ≥ 3".into(), format!("k = {k}"), k >= 3));
            }
            let spectral = extremal_ge(quantity, q_of, hstar(n, k, t))?;
            let mut out = vec![plan(
                pres.clone(),
                spectral,
                Some(Box::new(move || isomorphic_to(g, hstar(n, k, t), "H*".into()))),
            )];
            if id == TheoremId::BgFan {
                // Either spectral hypothesis suffices; the q form is a second case.
                out[0].case = Some("rho".into());
                let spectral = extremal_ge("q(G)", signless_laplacian_spectral_radius, hstar(n, k, t))?;
                let mut p = plan(
                    pres,
                    spectral,
                    Some(Box::new(move || isomorphic_to(g, hstar(n, k, t), "H*".into()))),
                );
                p.case = Some("q".into());
                out.push(p);
            }
            out
        }
        TheoremId::KtreeCompRho | TheoremId::CorHampathComp => {
            let (bound_sq, connect) = if id == TheoremId::KtreeCompRho {
                (f_value(n, k, t), t_connected(g, t))
            } else {
                (Q::from_integer(3 * n as i64 - 13), t_connected(g, 1))
            };
            let mut pres = vec![nmin, connect];
            let root = sqrt_q(bound_sq);
            pres.push(pre(
                "bound defined",
                "radicand ≥ 0".into(),
                format!("radicand = {bound_sq}"),
                root.is_some(),
            ));
            let spectral = match root {
                Some(b) => Some(compare("ρ(Ḡ)", Relation::AtMost, complement_rho(g, tol)?, b)),
                None => None,
            };
            vec![plan(
                pres,
                spectral,
                Some(Box::new(move || ktree_closure_is(g, k, t, hstar(n, k, t), "H*"))),
            )]
        }
        TheoremId::KtreeCompRhoSmall => vec![small_rho_plan(g, k, t, nmin, tol)?],
        TheoremId::KtreeCompQ => {
            let in_g3 = classify_membership(g, FamilyId::G3, &kt(k, t)).is_some();
            let pres = vec![nmin, t_connected(g, t), not_member("excluded family", "𝔾₃(n,k,t)", in_g3)];
            let spectral = compare("q(Ḡ)", Relation::AtMost, complement_q(g, tol)?, te_bound(n, k, t) as f64);
            vec![plan(pres, Some(spectral), None)]
        }
        TheoremId::CorHampathSuite => {
            let mut first = small_rho_plan(g, 2, t, order_at_least(n, Q::from_integer(4)), tol)?;
            first.case = Some(if t <= 2 { "i" } else { "ii" }.into());
            let in_g4 = classify_membership(g, FamilyId::G4, &FamilyParams::default()).is_some();
            let pres = vec![
                order_at_least(n, Q::from_integer(9)),
                t_connected(g, t),
                not_member("excluded family", "𝔾₄(n)", in_g4),
            ];
            let spectral = compare("q(Ḡ)", Relation::AtMost, complement_q(g, tol)?, n as f64);
            let mut third = plan(
                pres,
                Some(spectral),
                Some(Box::new(move || {
                    let p = FamilyParams {
                        r: Some(n.saturating_sub(2) / 2),
                        ..Default::default()
                    };
                    Ok(if n % 2 == 0 {
                        member_of(g, FamilyId::G5, p, "𝔾₅(n,(n−2)/2)".into())
                    } else {
                        None
                    })
                })),
            );
            third.case = Some("iii".into());
            vec![first, third]
        }
        TheoremId::KendedQ | TheoremId::BgAoKendedQ => {
            let connect = if id == TheoremId::KendedQ { t_connected(g, t) } else { t_connected(g, 1) };
            let spectral = extremal_ge("q(G)", signless_laplacian_spectral_radius, gstar(n, k, t))?;
            vec![plan(
                vec![nmin, connect],
                spectral,
                Some(Box::new(move || isomorphic_to(g, gstar(n, k, t), "G*".into()))),
            )]
        }
        TheoremId::KendedCompRho | TheoremId::CorKendedCompRhoT1 => {
            let bound_sq = if id == TheoremId::KendedCompRho {
                tg_bound_sq(n, k, t)
            } else {
                tg_bound_sq_t1(n, k)
            };
            let root = sqrt_q(bound_sq);
            let pres = vec![
                nmin,
                t_connected(g, t),
                pre(
                    "bound defined",
                    "radicand ≥ 0".into(),
                    format!("radicand = {bound_sq}"),
                    root.is_some(),
                ),
            ];
            let spectral = match root {
                Some(b) => Some(compare("ρ(Ḡ)", Relation::AtMost, complement_rho(g, tol)?, b)),
                None => None,
            };
            vec![plan(
                pres,
                spectral,
                Some(Box::new(move || kended_closure_is(g, gstar(n, k, t), "G*"))),
            )]
        }
        TheoremId::BgFiedlerNikiforov => {
            let spectral = compare("ρ(Ḡ)", Relation::AtMost, complement_rho(g, tol)?, ((n as f64) - 1.0).sqrt());
            vec![plan(vec![nmin, t_connected(g, 1)], Some(spectral), None)]
        }
        TheoremId::BgZhou => {
            let ep = in_ep(g);
            let pres = vec![nmin, not_member("excluded family", "𝔼ℙₙ", ep.is_some())];
            let spectral = compare("q(Ḡ)", Relation::AtMost, complement_q(g, tol)?, n as f64);
            vec![plan(pres, Some(spectral), None)]
        }
        TheoremId::BgAoKendedComp => {
            let spectral = compare(
                "ρ(Ḡ)",
                Relation::AtMost,
                complement_rho(g, tol)?,
                ((k * n.saturating_sub(2)) as f64).sqrt(),
            );
            vec![plan(
                vec![nmin, t_connected(g, 1)],
                Some(spectral),
                Some(Box::new(move || isomorphic_to(g, Graph::star(k + 1), "K_{1,k+1}".into()))),
            )]
        }
    })
}

/// The small-order complement bound with its t-dependent case split.
fn small_rho_plan<'a>(g: &'a Graph, k: usize, t: usize, nmin: Precondition, tol: f64) -> Result<Plan<'a>> {
    let n = g.order();
    let mut pres = vec![nmin, t_connected(g, t)];
    let case = if t <= 2 {
        "i"
    } else {
        pres.push(pre(
            "connectivity range",
            "3 ≤ t ≤ n − 1".into(),
            format!("t = {t}, n = {n}"),
            t < n,
        ));
        let in_g2 = classify_membership(g, FamilyId::G2, &kt(k, t)).is_some();
        pres.push(not_member("excluded family", "𝔾₂(k,t)", in_g2));
        "ii"
    };
    let bound = (td_bound_sq(n, k, t).max(0) as f64).sqrt();
    pres.push(pre(
        "bound defined",
        "(n−1−t)(kt−t+1) ≥ 0".into(),
        format!("{}", td_bound_sq(n, k, t)),
        td_bound_sq(n, k, t) >= 0,
    ));
    let spectral = compare("ρ(Ḡ)", Relation::AtMost, complement_rho(g, tol)?, bound);
    Ok(Plan {
        preconditions: pres,
        spectral: Some(spectral),
        exception: Some(Box::new(move || Ok(member_of(g, FamilyId::G1, kt(k, t), "𝔾₁(k,t)".into())))),
        case: Some(case.into()),
    })
}

fn decide(plan: &Plan<'_>, margin: f64) -> Result<(Conclusion, Option<String>)> {
    if plan.preconditions.iter().any(|p| !p.pass) {
        return Ok((Conclusion::PreconditionFailed, None));
    }
    let Some(cmp) = &plan.spectral else {
        return Ok((Conclusion::PreconditionFailed, None));
    };
    let tie = cmp.margin.abs() < margin;
    if cmp.margin >= margin || tie {
        if let Some(test) = &plan.exception {
            if let Some(what) = test()? {
                return Ok((Conclusion::ExtremalException, Some(what)));
            }
        }
    }
    Ok(if tie {
        (Conclusion::TolTie, None)
    } else if cmp.margin >= margin {
        (Conclusion::Guaranteed, None)
    } else {
        (Conclusion::Inconclusive, None)
    })
}

fn rank(c: Conclusion) -> u8 {
    match c {
        Conclusion::Guaranteed => 4,
        Conclusion::ExtremalException => 3,
        Conclusion::TolTie => 2,
        Conclusion::Inconclusive => 1,
        Conclusion::PreconditionFailed => 0,
    }
}

pub fn evaluate(id: TheoremId, g: &Graph, k: usize, t: usize) -> Result<TheoremVerdict> {
    evaluate_with(id, g, k, t, &EvalOptions::default())
}

pub fn evaluate_with(id: TheoremId, g: &Graph, k: usize, t: usize, opts: &EvalOptions) -> Result<TheoremVerdict> {
    let (k, t) = id.effective_params(k, t);
    if k < 2 || t < 1 {
        return Err(Error::Domain(format!("need k ≥ 2 and t ≥ 1, got k={k}, t={t}")));
    }
    if g.order() == 0 {
        return Err(Error::Domain("empty graph".into()));
    }
    let mut best: Option<(Plan<'_>, Conclusion, Option<String>)> = None;
    for plan in plans(id, g, k, t, opts.tolerance)? {
        let (c, why) = decide(&plan, opts.decision_margin)?;
        if best.as_ref().is_none_or(|(_, b, _)| rank(c) > rank(*b)) {
            best = Some((plan, c, why));
        }
    }
    let (plan, conclusion, exception) = best.expect("every theorem has a case");
    Ok(TheoremVerdict {
        theorem_id: id,
        n: g.order(),
        k,
        t,
        preconditions: plan.preconditions,
        spectral: plan.spectral,
        conclusion,
        case: plan.case,
        exception,
        promise: id.promise(k),
        comparison_only: id.comparison_only(),
        tolerance: opts.tolerance,
        decision_margin: opts.decision_margin,
    })
}

/// Outcome of checking a verdict against the oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SoundnessOutcome {
    pub sound: bool,
    /// Whether the oracle was consulted at all.
    pub checked: bool,
    pub tree_exists: Option<bool>,
    pub certificate: Option<TreeCertificate>,
}

/// Run the oracle the verdict speaks about: a Guaranteed verdict must be
/// backed by an actual spanning tree, an ExtremalException by its absence.
/// Other conclusions make no claim and pass trivially.
pub fn soundness_check(verdict: &TheoremVerdict, g: &Graph) -> Result<bool> {
    Ok(soundness_check_with(verdict, g, SearchBudget::default())?.sound)
}

pub fn soundness_check_with(verdict: &TheoremVerdict, g: &Graph, budget: SearchBudget) -> Result<SoundnessOutcome> {
    let expect = match verdict.conclusion {
        Conclusion::Guaranteed => true,
        Conclusion::ExtremalException => false,
        _ => {
            return Ok(SoundnessOutcome {
                sound: true,
                checked: false,
                tree_exists: None,
                certificate: None,
            })
        }
    };
    let cert = find_promised_tree(verdict.promise, g, budget)?;
    let exists = cert.is_some();
    Ok(SoundnessOutcome {
        sound: exists == expect,
        checked: true,
        tree_exists: Some(exists),
        certificate: cert,
    })
}

/// The promised tree, or `None`; disconnected graphs have none.
pub fn find_promised_tree(promise: Promise, g: &Graph, budget: SearchBudget) -> Result<Option<TreeCertificate>> {
    if g.order() < 2 || !g.is_connected() {
        return Ok(None);
    }
    match promise.kind {
        TreeKind::KTree => spanning_k_tree(g, promise.k, budget),
        TreeKind::KEnded => spanning_k_ended_tree(g, promise.k, budget),
    }
}
