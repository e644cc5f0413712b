use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kspectra::closure::{kended_closure, ktree_closure, l_closure, ClosureTrace};
use kspectra::conditions::{evaluate_with, soundness_check_with, thresholds, EvalOptions, TheoremId, TheoremVerdict};
use kspectra::families::{construct, FamilyId, FamilyParams, FamilySpec};
use kspectra::graph::{decode_graph6, encode_graph6, parse_graph6_lines, Graph};
use kspectra::oracle::{hamilton_path, min_leaf_spanning_tree_with, min_max_degree_spanning_tree_with, SearchBudget};
use kspectra::spectral::{classical_bounds, spectral_summary, DECISION_MARGIN, DEFAULT_TOLERANCE};
use kspectra::verify::{run_suite, SuiteId, SuiteParams, VerificationReport};
use kspectra::Error;

#[derive(Parser)]
#[command(name = "kspectra", version, about = "Spectral conditions for spanning k-trees and k-ended-trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius ρ and signless Laplacian radius q of each input graph.
    Spectra {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Also report the classical bounds, evaluated at this minimum-degree parameter.
        #[arg(long)]
        bounds_t: Option<usize>,
    },
    /// l-closure of each input graph.
    Closure {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Explicit closure parameter.
        #[arg(long, conflicts_with_all = ["k", "kended"])]
        l: Option<usize>,
        /// k-tree closure (l = n − (k−2)t − 1); needs --t.
        #[arg(long, requires = "t")]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// k-ended closure (l = n − 1).
        #[arg(long)]
        kended: bool,
    },
    /// Exact Δ*, L* and witnessing spanning trees.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
        budget: u64,
    },
    /// Build a member of an extremal family.
    Construct {
        /// hstar, gstar, g1 … g5, ep-a, ep-b, ep-c, regular
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// The arbitrary join block, as graph6; complete when omitted.
        #[arg(long)]
        seed_graph6: Option<String>,
        /// human prints the bare graph6 line.
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Evaluate theorems on each input graph.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Theorem id, `main` or `all`; repeatable.
        #[arg(long, required = true)]
        theorem: Vec<String>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = DECISION_MARGIN)]
        margin: f64,
        /// Confirm the verdict with the exact oracle; exit 1 if refuted.
        #[arg(long)]
        sound: bool,
        #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
        budget: u64,
    },
    /// Threshold table rows over a range of orders.
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        /// LEMMA-BOUNDS, CLOSURE-INVARIANCE, EXTREMAL-NO-TREE, THEOREM-SOUNDNESS, TIGHTNESS
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// THEOREM-SOUNDNESS: order to sample at instead of the least admissible one.
        #[arg(long)]
        n: Option<usize>,
        /// THEOREM-SOUNDNESS: restrict to these theorems.
        #[arg(long)]
        theorem: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, env = "KSPECTRA_JOBS")]
        jobs: Option<usize>,
        /// Print a key,value CSV summary instead of the JSON report.
        #[arg(long)]
        csv: bool,
        /// Include wall-clock time in the JSON report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args)]
struct Input {
    /// File of graph6 lines; standard input when neither source is given.
    #[arg(long, conflicts_with = "graph6")]
    input: Option<String>,
    /// A single inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

/// Exit status 1: a claim was refuted.
struct Refuted;

enum Failure {
    Usage(String),
    Refuted,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<Refuted> for Failure {
    fn from(_: Refuted) -> Self {
        Failure::Refuted
    }
}

type Run = Result<(), Failure>;

fn read_graphs(input: &Input) -> Result<Vec<Graph>, Failure> {
    if let Some(g6) = &input.graph6 {
        return Ok(vec![decode_graph6(g6.trim())?]);
    }
    let text = match &input.input {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    parse_graph6_lines(&text)
        .map(|(line, g)| g.map_err(|e| Failure::Usage(format!("line {line}: {e}"))))
        .collect()
}

fn emit(out: &mut impl Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("JSON value"))
}

fn spectra(input: &Input, out: &Output, bounds_t: Option<usize>, w: &mut impl Write) -> Run {
    if out.format == Format::Csv {
        writeln!(w, "graph6,n,e,rho,q,tolerance")?;
    }
    for g in read_graphs(input)? {
        let s = spectral_summary(&g, out.tol)?;
        let g6 = encode_graph6(&g);
        match out.format {
            Format::Human => writeln!(w, "{g6}\tn={} e={} ρ={:.10} q={:.10}", g.order(), g.size(), s.rho, s.q)?,
            Format::Csv => writeln!(w, "{g6},{},{},{},{},{}", g.order(), g.size(), s.rho, s.q, s.tolerance)?,
            Format::Json => {
                let mut v = json!({
                    "graph6": g6, "n": g.order(), "e": g.size(), "rho": s.rho, "q": s.q,
                    "tolerance": s.tolerance, "iterations_used": s.iterations_used,
                });
                if let Some(t) = bounds_t {
                    v["bounds"] = serde_json::to_value(classical_bounds(&g, t, out.tol)?).expect("report");
                }
                emit(w, &v)?;
            }
        }
    }
    Ok(())
}

fn closure(
    input: &Input,
    out: &Output,
    l: Option<usize>,
    kt: Option<(usize, usize)>,
    kended: bool,
    w: &mut impl Write,
) -> Run {
    if l.is_none() && kt.is_none() && !kended {
        return Err(Failure::Usage("closure needs one of --l, --k/--t or --kended".into()));
    }
    if out.format == Format::Csv {
        writeln!(w, "graph6,l,closure,added")?;
    }
    for g in read_graphs(input)? {
        let trace: ClosureTrace = match (l, kt) {
            (Some(l), _) => l_closure(&g, l),
            (None, Some((k, t))) => ktree_closure(&g, k, t)?,
            (None, None) => kended_closure(&g)?,
        };
        let (g6, c6) = (encode_graph6(&g), encode_graph6(&trace.result));
        match out.format {
            Format::Human => {
                writeln!(w, "{c6}")?;
                for (u, v) in &trace.added_edges {
                    writeln!(w, "+ {u} {v}")?;
                }
            }
            Format::Csv => writeln!(w, "{g6},{},{c6},{}", trace.l, trace.added_edges.len())?,
            Format::Json => emit(
                w,
                &json!({ "graph6": g6, "l": trace.l, "closure": c6, "added_edges": trace.added_edges }),
            )?,
        }
    }
    Ok(())
}

fn oracle(input: &Input, out: &Output, budget: u64, w: &mut impl Write) -> Run {
    let budget = SearchBudget { max_nodes: budget };
    if out.format == Format::Csv {
        writeln!(w, "graph6,n,connected,min_max_degree,min_leaves,hamilton_path")?;
    }
    for g in read_graphs(input)? {
        let g6 = encode_graph6(&g);
        let connected = g.order() >= 2 && g.is_connected();
        let (deg, leaves, ham) = if connected {
            (
                Some(min_max_degree_spanning_tree_with(&g, budget)?),
                Some(min_leaf_spanning_tree_with(&g, budget)?),
                Some(hamilton_path(&g, budget)?.is_some()),
            )
        } else {
            (None, None, None)
        };
        let d = deg.as_ref().map(|x| x.0);
        let l = leaves.as_ref().map(|x| x.0);
        let show = |x: Option<usize>| x.map_or("-".to_string(), |x| x.to_string());
        match out.format {
            Format::Human => writeln!(w, "{g6}\tΔ*={} L*={}", show(d), show(l))?,
            Format::Csv => writeln!(
                w,
                "{g6},{},{connected},{},{},{}",
                g.order(),
                show(d),
                show(l),
                ham.map_or("-".to_string(), |h| h.to_string())
            )?,
            Format::Json => emit(
                w,
                &json!({
                    "graph6": g6, "n": g.order(), "connected": connected,
                    "min_max_degree": d, "min_leaves": l, "hamilton_path": ham,
                    "degree_certificate": deg.map(|x| x.1), "leaf_certificate": leaves.map(|x| x.1),
                    "budget": budget.max_nodes,
                }),
            )?,
        }
    }
    Ok(())
}

fn construct_cmd(
    family: &str,
    params: FamilyParams,
    seed: Option<&str>,
    format: Format,
    w: &mut impl Write,
) -> Run {
    let id = FamilyId::from_name(family).ok_or_else(|| Failure::Usage(format!("unknown family {family:?}")))?;
    let seed = seed.map(decode_graph6).transpose()?;
    let c = construct(&FamilySpec { id, params, seed })?;
    let g6 = encode_graph6(&c.graph);
    match format {
        Format::Human => writeln!(w, "{g6}")?,
        Format::Csv => writeln!(w, "family,graph6,n,e\n{},{g6},{},{}", id.name(), c.graph.order(), c.graph.size())?,
        Format::Json => emit(
            w,
            &json!({
                "family": id.name(), "params": params, "graph6": g6, "n": c.graph.order(),
                "e": c.graph.size(), "seed_defaulted": c.seed_defaulted,
            }),
        )?,
    }
    Ok(())
}

fn theorem_list(names: &[String]) -> Result<Vec<TheoremId>, Failure> {
    let mut ids = Vec::new();
    for name in names {
        match name.to_ascii_lowercase().as_str() {
            "all" => ids.extend(TheoremId::ALL),
            "main" => ids.extend(TheoremId::MAIN),
            _ => ids.push(name.parse::<TheoremId>()?),
        }
    }
    Ok(ids)
}

fn human_verdict(v: &TheoremVerdict) -> String {
    let mut s = format!("{}\tn={} k={} t={}\t{:?}", v.theorem_id.name(), v.n, v.k, v.t, v.conclusion);
    for p in v.preconditions.iter().filter(|p| !p.pass) {
        s += &format!("\tfailed {}: {} ({})", p.name, p.required, p.actual);
    }
    if let Some(c) = &v.spectral {
        s += &format!("\t{} = {:.10} vs {:.10}", c.quantity, c.measured, c.threshold);
    }
    if let Some(e) = &v.exception {
        s += &format!("\texception: {e}");
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn check(
    input: &Input,
    out: &Output,
    theorems: &[String],
    k: usize,
    t: usize,
    margin: f64,
    sound: bool,
    budget: u64,
    w: &mut impl Write,
) -> Run {
    let ids = theorem_list(theorems)?;
    let opts = EvalOptions {
        tolerance: out.tol,
        decision_margin: margin,
    };
    let budget = SearchBudget { max_nodes: budget };
    let mut refuted = false;
    if out.format == Format::Csv {
        writeln!(w, "graph6,theorem,n,k,t,conclusion,sound")?;
    }
    for g in read_graphs(input)? {
        let g6 = encode_graph6(&g);
        for &id in &ids {
            let v = evaluate_with(id, &g, k, t, &opts)?;
            let outcome = if sound {
                Some(match soundness_check_with(&v, &g, budget) {
                    Ok(o) => serde_json::to_value(o).expect("outcome"),
                    Err(Error::BudgetExhausted { nodes }) => json!({ "budget_exhausted": nodes }),
                    Err(e) => return Err(e.into()),
                })
            } else {
                None
            };
            let is_sound = outcome.as_ref().and_then(|o| o["sound"].as_bool());
            if is_sound == Some(false) && !v.comparison_only {
                refuted = true;
            }
            match out.format {
                Format::Human => {
                    let tail = match is_sound {
                        Some(true) => "\toracle agrees",
                        Some(false) => "\tREFUTED by oracle",
                        None => "",
                    };
                    writeln!(w, "{g6}\t{}{tail}", human_verdict(&v))?;
                }
                Format::Csv => writeln!(
                    w,
                    "{g6},{},{},{},{},{:?},{}",
                    id.name(),
                    v.n,
                    v.k,
                    v.t,
                    v.conclusion,
                    is_sound.map_or("-".to_string(), |s| s.to_string())
                )?,
                Format::Json => {
                    let mut rec = serde_json::to_value(&v).expect("verdict");
                    rec["graph6"] = json!(g6);
                    if let Some(o) = outcome {
                        rec["soundness"] = o;
                    }
                    emit(w, &rec)?;
                }
            }
        }
    }
    if refuted {
        Err(Refuted.into())
    } else {
        Ok(())
    }
}

fn sweep(k: usize, t: usize, from: usize, to: usize, tol: f64, format: Format, w: &mut impl Write) -> Run {
    if from > to {
        return Err(Failure::Usage(format!("empty range {from}..={to}")));
    }
    let opt = |x: Option<f64>| x.map_or(String::new(), |x| x.to_string());
    if format == Format::Csv {
        writeln!(
            w,
            "n,k,t,edge_threshold_ktree,edge_threshold_kended,f,f_applicable,td_bound_sq,te_bound,\
             tg_bound_sq,prior_gap,rho_hstar,q_hstar,q_gstar,admissible"
        )?;
    }
    for n in from..=to {
        let row = thresholds(n, k, t, tol);
        match format {
            Format::Csv | Format::Human => {
                let admissible: Vec<&str> = row.n_min.iter().filter(|e| e.satisfied).map(|e| e.theorem.as_str()).collect();
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    row.n,
                    row.k,
                    row.t,
                    row.edge_threshold_ktree.map_or(String::new(), |x| x.to_string()),
                    row.edge_threshold_kended.map_or(String::new(), |x| x.to_string()),
                    row.f,
                    row.f_applicable,
                    row.td_bound_sq,
                    row.te_bound,
                    row.tg_bound_sq,
                    row.prior_gap.map_or(String::new(), |x| x.to_string()),
                    opt(row.rho_hstar),
                    opt(row.q_hstar),
                    opt(row.q_gstar),
                    admissible.join(" "),
                )?;
            }
            Format::Json => emit(w, &serde_json::to_value(&row).expect("row"))?,
        }
    }
    Ok(())
}

fn report_csv(r: &VerificationReport, w: &mut impl Write) -> io::Result<()> {
    writeln!(w, "key,value")?;
    writeln!(w, "suite,{}", r.suite_id)?;
    writeln!(w, "graphs_checked,{}", r.graphs_checked)?;
    writeln!(w, "counterexamples,{}", r.counterexamples.len())?;
    writeln!(w, "budget_exhausted,{}", r.budget_exhausted)?;
    if let Some(counters) = r.summary["counters"].as_object() {
        for (k, v) in counters {
            writeln!(w, "\"{}\",{v}", k.replace('"', "\"\""))?;
        }
    }
    Ok(())
}

fn run(cli: Cli, w: &mut impl Write) -> Run {
    match cli.command {
        Command::Spectra { input, out, bounds_t } => spectra(&input, &out, bounds_t, w),
        Command::Closure {
            input,
            out,
            l,
            k,
            t,
            kended,
        } => closure(&input, &out, l, k.zip(t), kended, w),
        Command::Oracle { input, out, budget } => oracle(&input, &out, budget, w),
        Command::Construct {
            family,
            n,
            k,
            t,
            r,
            d,
            seed_graph6,
            format,
        } => construct_cmd(&family, FamilyParams { n, k, t, r, d }, seed_graph6.as_deref(), format, w),
        Command::Check {
            input,
            out,
            theorem,
            k,
            t,
            margin,
            sound,
            budget,
        } => check(&input, &out, &theorem, k, t, margin, sound, budget, w),
        Command::Sweep {
            k,
            t,
            n_from,
            n_to,
            tol,
            format,
        } => sweep(k, t, n_from, n_to, tol, format, w),
        Command::Verify {
            suite,
            n_max,
            k,
            t,
            n,
            theorem,
            seed,
            samples,
            jobs,
            csv,
            timing,
        } => {
            let id: SuiteId = suite.parse()?;
            let params = SuiteParams {
                n_max,
                k,
                t,
                seed,
                samples,
                jobs,
                theorems: (!theorem.is_empty()).then(|| theorem_list(&theorem)).transpose()?,
                n,
            };
            let report = run_suite(id, &params)?;
            if csv {
                report_csv(&report, w)?;
            } else {
                emit(w, &report.to_json(timing))?;
            }
            eprintln!(
                "{}: {} checked, {} counterexamples, {} budget-exhausted, {:.1}s",
                report.suite_id,
                report.graphs_checked,
                report.counterexamples.len(),
                report.budget_exhausted,
                report.wall_time_secs
            );
            if report.passed() {
                Ok(())
            } else {
                Err(Refuted.into())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut w = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut w);
    let flushed = w.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Refuted), _) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("kspectra: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("kspectra: {e}");
            ExitCode::from(2)
        }
    }
}
