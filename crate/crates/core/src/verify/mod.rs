//! Counterexample hunting: exhaustive enumeration of small labelled graphs,
//! seeded random sampling, and the suites built on them.
//!
//! Suites split their domain into fixed chunks. Each chunk is processed
//! independently (random chunks draw from their own ChaCha stream keyed by
//! the chunk index) and results are merged in chunk order, so a report is
//! the same whatever the number of workers.

mod enumerate;
mod suites;

pub use enumerate::{enumerate_graphs, gnp_with, labeled_graphs, pair_count, sample_gnp, MAX_EXHAUSTIVE_ORDER};
pub use suites::{lemma_failures, SOUNDNESS_BUDGET};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::conditions::TheoremId;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SuiteId {
    #[serde(rename = "LEMMA-BOUNDS")]
    LemmaBounds,
    #[serde(rename = "CLOSURE-INVARIANCE")]
    ClosureInvariance,
    #[serde(rename = "EXTREMAL-NO-TREE")]
    ExtremalNoTree,
    #[serde(rename = "THEOREM-SOUNDNESS")]
    TheoremSoundness,
    #[serde(rename = "TIGHTNESS")]
    Tightness,
}

impl SuiteId {
    pub const ALL: [SuiteId; 5] = [
        SuiteId::LemmaBounds,
        SuiteId::ClosureInvariance,
        SuiteId::ExtremalNoTree,
        SuiteId::TheoremSoundness,
        SuiteId::Tightness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::LemmaBounds => "LEMMA-BOUNDS",
            SuiteId::ClosureInvariance => "CLOSURE-INVARIANCE",
            SuiteId::ExtremalNoTree => "EXTREMAL-NO-TREE",
            SuiteId::TheoremSoundness => "THEOREM-SOUNDNESS",
            SuiteId::Tightness => "TIGHTNESS",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_uppercase().replace('_', "-");
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == want)
            .ok_or_else(|| Error::Parameter(format!("unknown suite {s:?}")))
    }
}

/// Suite parameters; `None` picks the suite's desk-scale default.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteParams {
    pub n_max: Option<usize>,
    pub k: Option<usize>,
    pub t: Option<usize>,
    pub seed: u64,
    pub samples: Option<u64>,
    pub jobs: Option<usize>,
    /// THEOREM-SOUNDNESS only: which theorems to hunt on.
    pub theorems: Option<Vec<TheoremId>>,
    /// THEOREM-SOUNDNESS only: order override (default: least admissible).
    pub n: Option<usize>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n_max: None,
            k: None,
            t: None,
            seed: 1,
            samples: None,
            jobs: None,
            theorems: None,
            n: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Domain {
    pub description: String,
    pub orders: Vec<usize>,
    pub k: Vec<usize>,
    pub t: Vec<usize>,
    pub filters: Vec<String>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite_id: SuiteId,
    pub domain: Domain,
    pub graphs_checked: u64,
    /// Sorted by graph6 string.
    pub counterexamples: Vec<Counterexample>,
    /// Oracle queries that ran out of budget; never counted as counterexamples.
    pub budget_exhausted: u64,
    /// Suite-specific counters and records.
    pub summary: Value,
    #[serde(skip)]
    pub wall_time_secs: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// JSON rendering. Wall time varies run to run, so it is left out
    /// unless asked for; everything else is reproducible.
    pub fn to_json(&self, include_timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("report serialises");
        if include_timing {
            v["wall_time_secs"] = serde_json::json!(self.wall_time_secs);
        }
        v
    }
}

/// Per-chunk partial results, merged in chunk order.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub budget_exhausted: u64,
    pub counterexamples: Vec<Counterexample>,
    pub counters: BTreeMap<String, u64>,
    pub records: Vec<Value>,
}

impl Tally {
    pub fn bump(&mut self, key: impl Into<String>) {
        *self.counters.entry(key.into()).or_default() += 1;
    }

    pub fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.budget_exhausted += other.budget_exhausted;
        self.counterexamples.extend(other.counterexamples);
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
        self.records.extend(other.records);
    }

    pub fn flag(&mut self, graph6: String, detail: Value) {
        self.counterexamples.push(Counterexample { graph6, detail });
    }
}

pub fn run_suite(id: SuiteId, params: &SuiteParams) -> Result<VerificationReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = params.jobs {
        if j == 0 {
            return Err(Error::Parameter("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Parameter(format!("cannot start worker pool: {e}")))?;
    let start = Instant::now();
    let (domain, tally) = pool.install(|| match id {
        SuiteId::LemmaBounds => suites::lemma_bounds(params),
        SuiteId::ClosureInvariance => suites::closure_invariance(params),
        SuiteId::ExtremalNoTree => suites::extremal_no_tree(params),
        SuiteId::TheoremSoundness => suites::theorem_soundness(params),
        SuiteId::Tightness => suites::tightness(params),
    })?;
    let mut counterexamples = tally.counterexamples;
    counterexamples.sort_by(|a, b| {
        a.graph6
            .cmp(&b.graph6)
            .then_with(|| a.detail.to_string().cmp(&b.detail.to_string()))
    });
    let mut summary = serde_json::Map::new();
    summary.insert("counters".into(), serde_json::to_value(&tally.counters).expect("map"));
    if !tally.records.is_empty() {
        summary.insert("records".into(), Value::Array(tally.records));
    }
    Ok(VerificationReport {
        suite_id: id,
        domain,
        graphs_checked: tally.checked,
        counterexamples,
        budget_exhausted: tally.budget_exhausted,
        summary: Value::Object(summary),
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}
