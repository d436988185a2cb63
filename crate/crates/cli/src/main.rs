//! `isolab`: command-line front end.
//!
//! Every command builds one JSON document; `--json` prints it as is and
//! the text mode renders the same document, so both modes carry the same
//! values. Exit codes: 0 success, 1 input error, 2 partial result (a time
//! limit was hit).

use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use isolab::drg::{
    detect_drg, drg_iso_lower, drg_sparsity_bound, intersection_numbers, lemma_identity_check,
    lp_linial_direct, primal_value, restricted_dual_certificate, singleton_certificate,
    IntersectionArray, LINIAL_MAX_N,
};
use isolab::exact::{cheeger_exact, cut_at_size, isoperimetric_exact, sparsity_exact, ExactCut, SearchBudget};
use isolab::families::{exact_value, nds_demo, registry, verify_family, FamilyTag, VerifyStatus};
use isolab::graph::{graph_power, named, parse_graph6, to_graph6, Graph};
use isolab::power::{
    closed_lower_t2, closed_upper_t2, fit_power_polynomial, lp_lower_sweep, lp_upper_sweep, PowerBound,
    SweepOptions, SweepResult,
};
use isolab::rational::{format as fmt_rational, to_f64};
use isolab::spectra::{grone_merris_upper, mohar_bounds, qkm_upper};
use isolab::split::{experiment_i_equals_delta, LemmaOutcome, SplitMode};
use isolab::tables::{reproduce, CellStatus, Table, TableOptions};
use isolab::{Error, Rational};

const SCHEMA: &str = "isolab/1";

#[derive(Parser, Debug)]
#[command(name = "isolab", version, about = "Isoperimetric numbers of graphs: exact values and spectral bounds")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Input graph as a graph6 string.
    #[arg(short = 'g', long = "graph6", global = true, env = "ISOLAB_GRAPH6")]
    graph6: Option<String>,
    /// Input graph by corpus name ("Petersen", "Heawood graph", ...).
    #[arg(long, global = true, env = "ISOLAB_CORPUS")]
    corpus: Option<String>,
    /// Print the JSON document instead of text.
    #[arg(long, global = true, env = "ISOLAB_JSON")]
    json: bool,
    /// Time limit in seconds for each exact search or LP sweep.
    #[arg(long, global = true, env = "ISOLAB_BUDGET")]
    budget: Option<f64>,
    /// Tolerance for tightness markers.
    #[arg(long, global = true, env = "ISOLAB_TOL", default_value_t = 1e-6)]
    tol: f64,
    /// Seed for randomized commands.
    #[arg(long, global = true, env = "ISOLAB_SEED", default_value_t = 42)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "ISOLAB_JOBS")]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectral bounds on i(G), and i(G) itself when small enough.
    Bounds,
    /// Reproduce an appendix table (A1..A4) against its printed values.
    Tables {
        table: String,
        /// Only rows whose name contains this (repeatable).
        #[arg(long = "only")]
        only: Vec<String>,
    },
    /// Polynomial bounds on i(G^t).
    Power {
        #[arg(short, long, default_value_t = 2)]
        t: usize,
        /// Also compute i(G^t) exactly.
        #[arg(long)]
        exact: bool,
    },
    /// Distance-regular graph bounds and LP certificates.
    Drg {
        /// Intersection array "b0,b1,..;c1,c2,.." instead of a graph.
        #[arg(long)]
        array: Option<String>,
        /// Expected number of vertices for --array.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Exhaustive isoperimetric number, Cheeger constant or sparsity.
    Exact {
        /// i (isoperimetric), h (Cheeger), sigma (sparsity) or all.
        #[arg(long, default_value = "i", value_parser = ["i", "h", "sigma", "all", "iso", "cheeger", "sparsity"])]
        param: String,
        /// Restrict i to sets of exactly this size.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Closed-form values for graph families.
    Family {
        /// List the registry.
        #[arg(long)]
        list: bool,
        /// Evaluate: TAG PARAMS...
        #[arg(long, num_args = 1.., value_name = "TAG PARAMS")]
        eval: Option<Vec<String>>,
        /// Build the graph and compare with exhaustive search: TAG PARAMS...
        #[arg(long, num_args = 1.., value_name = "TAG PARAMS")]
        verify: Option<Vec<String>>,
        /// The cospectral hypercube pair with different values.
        #[arg(long)]
        nds: bool,
    },
    /// Random split graph experiment: i(G) against the minimum degree.
    Split {
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        #[arg(long)]
        heuristic: bool,
    },
}

/// Failure of a command, carrying its exit code.
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let kind = match &e {
            Error::Input(_) | Error::Parse { .. } => "input",
            Error::Domain(_) => "domain",
            Error::TooLarge { .. } => "too_large",
            Error::Irregular | Error::Disconnected | Error::NotDistanceRegular => "precondition",
            Error::Inapplicable(_) => "inapplicable",
            _ => "failed",
        };
        Failure {
            kind,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        kind: "input",
        message: message.into(),
    }
}

/// A command result: the document and whether a limit cut it short.
struct Output {
    result: Value,
    partial: bool,
    /// Preformatted text, used instead of the generic rendering.
    text: Option<String>,
}

impl Output {
    fn done(result: Value) -> Output {
        Output {
            result,
            partial: false,
            text: None,
        }
    }
}

fn exact(r: &Rational) -> Value {
    json!({ "exact": fmt_rational(r) })
}

fn approx(x: f64) -> Value {
    json!({ "approx": x })
}

struct Ctx<'a> {
    g: &'a Global,
}

impl Ctx<'_> {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(s) = self.g.budget {
            b = b.with_time_limit(Duration::from_secs_f64(s));
        }
        b
    }

    fn sweep(&self) -> SweepOptions {
        match self.g.budget {
            Some(s) => SweepOptions {
                time_limit: Duration::from_secs_f64(s),
            },
            None => SweepOptions::default(),
        }
    }

    fn graph(&self) -> Result<Graph, Failure> {
        match (&self.g.graph6, &self.g.corpus) {
            (Some(_), Some(_)) => Err(input_failure("give either --graph6 or --corpus, not both")),
            (None, None) => Err(input_failure("no input graph: use -g <graph6> or --corpus <name>")),
            (Some(s), None) => Ok(parse_graph6(s)?),
            (None, Some(name)) => named(name).ok_or_else(|| input_failure(format!("no corpus graph named '{name}'"))),
        }
    }
}

fn graph_summary(g: &Graph) -> Value {
    json!({
        "name": g.name(),
        "n": g.n(),
        "edges": g.edge_count(),
        "regular_degree": g.regular_degree(),
        "connected": g.is_connected(),
        "graph6": to_graph6(g),
    })
}

fn cut_json(c: &ExactCut) -> Value {
    json!({
        "value": exact(&c.value),
        "approx": approx(to_f64(&c.value)),
        "certified": c.certified,
        "set": c.cut.set,
        "boundary": c.cut.boundary,
    })
}

fn cmd_bounds(ctx: &Ctx) -> Result<Output, Failure> {
    let g = ctx.graph()?;
    let tol = ctx.g.tol;
    let mohar = mohar_bounds(&g)?;
    let qkm = qkm_upper(&g).ok();
    let gm = grone_merris_upper(&g)?;
    let mut partial = false;
    let mut res = json!({
        "graph": graph_summary(&g),
        "mohar_lower": approx(mohar.lower),
        "mohar_upper": approx(mohar.upper),
        "qkm_upper": qkm.map(approx),
        "grone_merris_upper": approx(gm),
    });
    match isoperimetric_exact(&g, &ctx.budget()) {
        Ok(c) => {
            partial = !c.certified;
            let i = to_f64(&c.value);
            res["i"] = cut_json(&c);
            if c.certified {
                res["tight"] = json!({
                    "mohar_lower": (mohar.lower - i).abs() <= tol,
                    "mohar_upper": (mohar.upper - i).abs() <= tol,
                    "qkm_upper": qkm.map(|q| (q - i).abs() <= tol),
                    "grone_merris_upper": (gm - i).abs() <= tol,
                });
            }
        }
        Err(e @ Error::TooLarge { .. }) => res["i"] = json!({ "skipped": e.to_string() }),
        Err(e) => return Err(e.into()),
    }
    Ok(Output {
        result: res,
        partial,
        text: None,
    })
}

fn cmd_exact(ctx: &Ctx, param: &str, size: Option<usize>) -> Result<Output, Failure> {
    let g = ctx.graph()?;
    let b = ctx.budget();
    let mut res = Map::new();
    res.insert("graph".into(), graph_summary(&g));
    let mut partial = false;
    let param = match param {
        "iso" => "i",
        "cheeger" => "h",
        "sparsity" => "sigma",
        p => p,
    };
    if let Some(m) = size {
        if param != "i" {
            return Err(input_failure("--size applies to --param i only"));
        }
        let c = cut_at_size(&g, m, &b)?;
        res.insert("size".into(), json!(m));
        res.insert("i_m".into(), cut_json(&c));
        return Ok(Output {
            result: Value::Object(res),
            partial: !c.certified,
            text: None,
        });
    }
    let which: &[&str] = if param == "all" { &["i", "h", "sigma"] } else { &[param] };
    for &p in which {
        let c = match p {
            "i" => isoperimetric_exact(&g, &b)?,
            "h" => cheeger_exact(&g, &b)?,
            _ => sparsity_exact(&g, &b)?,
        };
        partial |= !c.certified;
        res.insert(p.into(), cut_json(&c));
    }
    Ok(Output {
        result: Value::Object(res),
        partial,
        text: None,
    })
}

fn bound_json(b: &PowerBound) -> Value {
    json!({
        "value": approx(b.value),
        "witness": format!("{:.4}", b.witness),
        "coefficients": b.witness.coeffs,
        "p_lambda1": approx(b.p_lambda1),
        "spectral": approx(b.spectral),
        "entry": approx(b.entry),
    })
}

fn sweep_json(r: &SweepResult) -> Value {
    json!({
        "bound": r.best.as_ref().map(bound_json),
        "candidate": r.best_candidate.map(|((u, v), ell)| json!({ "pair": [u, v], "eigenvalue_index": ell })),
        "candidates": r.candidates,
        "solved": r.solved,
        "infeasible": r.infeasible,
        "failed": r.failed,
        "complete": r.complete,
        "seconds": r.elapsed.as_secs_f64(),
    })
}

fn cmd_power(ctx: &Ctx, t: usize, want_exact: bool) -> Result<Output, Failure> {
    let g = ctx.graph()?;
    let mut res = json!({ "graph": graph_summary(&g), "t": t });
    res["fit"] = match fit_power_polynomial(&g, t)? {
        Some(p) => json!(format!("{p:.4}")),
        None => Value::Null,
    };
    if t == 2 {
        res["closed_lower"] = match closed_lower_t2(&g) {
            Ok(c) => {
                let mut v = bound_json(&c.bound);
                v["cases"] = json!(c.cases.iter().map(|c| c.to_string()).collect::<Vec<_>>());
                v
            }
            Err(e) => json!({ "inapplicable": e.to_string() }),
        };
        res["closed_upper"] = match closed_upper_t2(&g) {
            Ok(b) => bound_json(&b),
            Err(e) => json!({ "inapplicable": e.to_string() }),
        };
    }
    let opts = ctx.sweep();
    let lo = lp_lower_sweep(&g, t, &opts)?;
    let up = lp_upper_sweep(&g, t, &opts)?;
    let mut partial = !lo.complete || !up.complete;
    res["lp_lower"] = sweep_json(&lo);
    res["lp_upper"] = sweep_json(&up);
    if want_exact {
        let p = graph_power(&g, t)?;
        match isoperimetric_exact(&p, &ctx.budget()) {
            Ok(c) => {
                partial |= !c.certified;
                res["i_power"] = cut_json(&c);
            }
            Err(e @ Error::TooLarge { .. }) => res["i_power"] = json!({ "skipped": e.to_string() }),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Output {
        result: res,
        partial,
        text: None,
    })
}

fn array_json(a: &IntersectionArray) -> Value {
    json!({
        "array": a.to_string(),
        "n": a.n(),
        "valency": a.valency(),
        "diameter": a.diameter(),
        "k": a.k_seq(),
        "sparsity_lower": exact(&drg_sparsity_bound(a)),
        "iso_lower": exact(&drg_iso_lower(a, a.n()).expect("n taken from the array")),
    })
}

fn cmd_drg(ctx: &Ctx, array: Option<&str>, n: Option<u64>) -> Result<Output, Failure> {
    if let Some(s) = array {
        if ctx.g.graph6.is_some() || ctx.g.corpus.is_some() {
            return Err(input_failure("give either --array or an input graph, not both"));
        }
        let a: IntersectionArray = s.parse()?;
        if let Some(n) = n {
            drg_iso_lower(&a, n)?;
        }
        return Ok(Output::done(array_json(&a)));
    }
    let g = ctx.graph()?;
    let a = detect_drg(&g).ok_or(Error::NotDistanceRegular)?;
    let p = intersection_numbers(&g, &a)?;
    let lemma = lemma_identity_check(&a, &p);
    let cert = restricted_dual_certificate(&g)?;
    let primal = primal_value(&g)?;
    let single = singleton_certificate(&g)?;
    let mut res = array_json(&a);
    res["graph"] = graph_summary(&g);
    res["lemma_holds"] = json!(lemma.holds);
    res["dual"] = json!({
        "psi": exact(&cert.psi),
        "y": cert.y.iter().map(|&y| approx(y)).collect::<Vec<_>>(),
        "y_exact": cert.y_exact.iter().map(|y| y.to_string()).collect::<Vec<_>>(),
        "max_residual": approx(cert.max_residual),
    });
    res["primal"] = json!({
        "value": exact(&primal.value),
        "wiener": primal.wiener,
        "triangles_hold": primal.triangles_hold,
    });
    res["lp_direct"] = if g.n() <= LINIAL_MAX_N {
        let s = lp_linial_direct(&g)?;
        json!({ "value": approx(s.objective) })
    } else {
        json!({ "skipped": format!("{} vertices > {LINIAL_MAX_N}", g.n()) })
    };
    res["singleton"] = json!({
        "sigma_upper": exact(&single.sigma_upper),
        "sigma_lower": exact(&single.sigma_lower),
        "iso_lower": exact(&single.iso_lower),
        "claim_holds": single.claim_holds,
    });
    Ok(Output::done(res))
}

fn tag_and_params(words: &[String]) -> Result<(FamilyTag, Vec<u64>), Failure> {
    let (tag, rest) = words.split_first().ok_or_else(|| input_failure("missing family tag"))?;
    let tag: FamilyTag = tag.parse()?;
    let params = rest
        .iter()
        .map(|w| w.parse::<u64>().map_err(|_| input_failure(format!("bad parameter '{w}'"))))
        .collect::<Result<_, _>>()?;
    Ok((tag, params))
}

fn cmd_family(
    ctx: &Ctx,
    list: bool,
    eval: Option<&[String]>,
    verify: Option<&[String]>,
    nds: bool,
) -> Result<Output, Failure> {
    let chosen = [list, eval.is_some(), verify.is_some(), nds].iter().filter(|b| **b).count();
    if chosen != 1 {
        return Err(input_failure("choose exactly one of --list, --eval, --verify, --nds"));
    }
    if list {
        let rows: Vec<Value> = registry()
            .iter()
            .map(|f| {
                json!({
                    "tag": f.name,
                    "params": f.params,
                    "formula": f.formula,
                    "conditions": f.conditions,
                    "source": f.source,
                    "verifiable": f.verifiable_at_desk,
                })
            })
            .collect();
        return Ok(Output::done(json!({ "families": rows })));
    }
    if let Some(words) = eval {
        let (tag, params) = tag_and_params(words)?;
        let v = exact_value(tag, &params)?;
        return Ok(Output::done(json!({ "family": tag.to_string(), "params": params, "value": exact(&v) })));
    }
    if let Some(words) = verify {
        let (tag, params) = tag_and_params(words)?;
        let r = verify_family(tag, &params, &ctx.budget())?;
        let (status, reason) = match &r.status {
            VerifyStatus::Agrees => ("agrees", None),
            VerifyStatus::Disagrees => ("disagrees", None),
            VerifyStatus::Skipped(why) => ("skipped", Some(why.clone())),
        };
        return Ok(Output {
            partial: reason.as_deref().is_some_and(|w| w.contains("time limit")),
            result: json!({
                "family": tag.to_string(),
                "params": params,
                "formula": exact(&r.formula),
                "n": r.n,
                "exhaustive": r.exhaustive.as_ref().map(exact),
                "status": status,
                "reason": reason,
            }),
            text: None,
        });
    }
    let d = nds_demo()?;
    Ok(Output::done(json!({
        "g": graph_summary(&d.g),
        "h": graph_summary(&d.h),
        "cospectral": d.cospectral,
        "i_g": exact(&d.i_g),
        "i_h": exact(&d.i_h),
        "mu2_half": approx(d.mu2_half),
        "tight_set_g": d.tight_g,
        "tight_set_h_exists": d.tight_h,
        "product_g_with_k4": { "n": d.product_g.n, "lower": approx(d.product_g.lower), "upper": exact(&d.product_g.upper) },
        "product_h_with_k4": { "n": d.product_h.n, "lower": approx(d.product_h.lower), "upper": exact(&d.product_h.upper) },
    })))
}

fn lemma_json(l: &LemmaOutcome) -> Value {
    match l {
        LemmaOutcome::Holds { checked, exhaustive } => {
            json!({ "outcome": "holds", "checked": checked, "exhaustive": exhaustive })
        }
        LemmaOutcome::Violated { set, boundary } => {
            json!({ "outcome": "violated", "set": set, "boundary": boundary })
        }
        LemmaOutcome::PreconditionUnmet { delta, k } => {
            json!({ "outcome": "precondition_unmet", "delta": delta, "k": k })
        }
    }
}

fn cmd_split(ctx: &Ctx, k: usize, trials: usize, exact_mode: bool, heuristic: bool) -> Result<Output, Failure> {
    let mode = if exact_mode {
        SplitMode::Exact
    } else if heuristic {
        SplitMode::Heuristic
    } else {
        SplitMode::Auto
    };
    let e = experiment_i_equals_delta(k, trials, ctx.g.seed, mode, &ctx.budget())?;
    let records: Vec<Value> = e
        .trials
        .iter()
        .map(|t| {
            json!({
                "trial": t.stream,
                "delta": t.delta,
                "i": exact(&t.i),
                "i_equals_delta": t.i == Rational::from_integer(t.delta as i64),
                "gm_bound": approx(t.gm.gm_bound),
                "gm_equal": t.gm.equal,
                "lemma": lemma_json(&t.lemma),
            })
        })
        .collect();
    Ok(Output::done(json!({
        "k": e.k,
        "seed": e.seed,
        "mode": if e.exact { "exact" } else { "heuristic" },
        "trials": e.trials.len(),
        "fraction_equal": approx(e.fraction_equal),
        "mean_delta": approx(e.mean_delta),
        "envelope": approx(e.envelope),
        "records": records,
    })))
}

fn status_name(s: CellStatus) -> &'static str {
    match s {
        CellStatus::Match => "match",
        CellStatus::Mismatch => "mismatch",
        CellStatus::BothTime => "both_time",
        CellStatus::Time => "time",
        CellStatus::Extra => "computed_where_time_printed",
        CellStatus::NotComputed => "not_computed",
    }
}

fn cmd_tables(ctx: &Ctx, table: &str, only: &[String]) -> Result<Output, Failure> {
    let table: Table = table.parse()?;
    let opts = TableOptions {
        exact: ctx.budget(),
        sweep: ctx.sweep(),
    };
    let r = reproduce(table, only, &opts);
    if r.rows.is_empty() {
        return Err(input_failure(format!("no row of {table} matches the filter")));
    }
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            let cells: Vec<Value> = row
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "column": c.column,
                        "printed": c.printed,
                        "computed": match (&c.exact, c.value) {
                            (Some(q), _) => exact(q),
                            (None, Some(v)) => approx(v),
                            (None, None) => json!(c.computed),
                        },
                        "status": status_name(c.status),
                        "note": c.note,
                    })
                })
                .collect();
            json!({ "name": row.name, "n": row.n, "cells": cells, "seconds": row.elapsed.as_secs_f64() })
        })
        .collect();
    let partial = r
        .rows
        .iter()
        .flat_map(|row| &row.cells)
        .any(|c| c.status == CellStatus::Time);
    Ok(Output {
        result: json!({ "table": table.to_string(), "rows": rows }),
        partial,
        text: Some(r.render()),
    })
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(m) if m.len() == 1 && m.contains_key("exact") => {
            let s = m["exact"].as_str().unwrap_or_default();
            Some(s.strip_suffix("/1").unwrap_or(s).to_string())
        }
        Value::Object(m) if m.len() == 1 && m.contains_key("approx") => Some(match m["approx"].as_f64() {
            Some(x) => short_float(x),
            None => "nan".into(),
        }),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar_text).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

/// Six decimals with trailing zeros dropped; the JSON keeps full precision.
fn short_float(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// Writes to stdout, ignoring a closed pipe (`isolab ... | head`).
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                match scalar_text(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(m) if m.values().all(|x| scalar_text(x).is_some()) => {
                        let parts: Vec<String> = m
                            .iter()
                            .map(|(k, x)| format!("{k}={}", scalar_text(x).unwrap_or_default()))
                            .collect();
                        out.push_str(&format!("{pad}- {}\n", parts.join(" ")));
                    }
                    _ => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 2, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other).unwrap_or_default())),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Bounds => "bounds",
        Command::Tables { .. } => "tables",
        Command::Power { .. } => "power",
        Command::Drg { .. } => "drg",
        Command::Exact { .. } => "exact",
        Command::Family { .. } => "family",
        Command::Split { .. } => "split",
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let ctx = Ctx { g: &cli.global };
    if let Some(b) = cli.global.budget {
        if !(b.is_finite() && b >= 0.0) {
            return Err(input_failure(format!("--budget must be a non-negative number of seconds, got {b}")));
        }
    }
    match &cli.command {
        Command::Bounds => cmd_bounds(&ctx),
        Command::Tables { table, only } => cmd_tables(&ctx, table, only),
        Command::Power { t, exact } => cmd_power(&ctx, *t, *exact),
        Command::Drg { array, n } => cmd_drg(&ctx, array.as_deref(), *n),
        Command::Exact { param, size } => cmd_exact(&ctx, param, *size),
        Command::Family {
            list,
            eval,
            verify,
            nds,
        } => cmd_family(&ctx, *list, eval.as_deref(), verify.as_deref(), *nds),
        Command::Split {
            k,
            trials,
            exact,
            heuristic,
        } => cmd_split(&ctx, *k, *trials, *exact, *heuristic),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.global.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        // Fails only if the pool was already built.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let command = command_name(&cli.command);
    match run(&cli) {
        Ok(out) => {
            let status = if out.partial { "partial" } else { "ok" };
            if cli.global.json {
                let doc = json!({ "schema": SCHEMA, "command": command, "status": status, "result": out.result });
                emit(&(serde_json::to_string_pretty(&doc).expect("serializable") + "\n"));
            } else {
                let mut text = out.text.unwrap_or_default();
                if text.is_empty() {
                    render_text(&out.result, 0, &mut text);
                }
                if out.partial {
                    text.push_str("status: partial (time limit reached)\n");
                }
                emit(&text);
            }
            ExitCode::from(if out.partial { 2 } else { 0 })
        }
        Err(f) => {
            if cli.global.json {
                let doc = json!({
                    "schema": SCHEMA,
                    "command": command,
                    "status": "error",
                    "error": { "kind": f.kind, "message": f.message },
                });
                emit(&(serde_json::to_string_pretty(&doc).expect("serializable") + "\n"));
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(1)
        }
    }
}
