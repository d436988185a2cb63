//! LP sweeps for the best polynomial of degree at most `t`.
//!
//! A lower-bound candidate pins `W(p) = 1/2` at one vertex pair and
//! `Λ(p) = 0` at one non-principal eigenvalue; the LP then maximizes
//! `p(θ₀)`, which equals the bound. Upper-bound candidates pin `w(p) = 1` and
//! `λ(p) = 0` and minimize. Pairs with the same walk-count tuple give the
//! same LP, so one representative per tuple is enough.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{half_up, BoundKind, PairClass, PowerBound, PowerContext, Poly};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linprog::{check_feasible, solve_via_dual, LpProblem, Relation, Sense, Status};

/// Feasibility slack accepted on a returned LP point.
const ACCEPT_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Candidates not started before this much time has passed are skipped.
    pub time_limit: Duration,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            time_limit: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Best bound over the solved candidates; `None` when none was feasible.
    pub best: Option<PowerBound>,
    /// `(pair, ℓ)` of the winning candidate.
    pub best_candidate: Option<((usize, usize), usize)>,
    pub candidates: usize,
    pub solved: usize,
    pub infeasible: usize,
    pub failed: usize,
    /// False when the time limit cut the sweep short.
    pub complete: bool,
    pub elapsed: Duration,
}

/// Best lower bound on `i(G^t)` over all polynomials of degree at most `t`.
pub fn lp_lower_sweep(g: &Graph, t: usize, opts: &SweepOptions) -> Result<SweepResult> {
    sweep(g, t, opts, BoundKind::Lower)
}

/// Best upper bound on `i(G^t)` over all polynomials of degree at most `t`.
pub fn lp_upper_sweep(g: &Graph, t: usize, opts: &SweepOptions) -> Result<SweepResult> {
    sweep(g, t, opts, BoundKind::Upper)
}

enum Outcome {
    Optimal(f64, Vec<f64>),
    Infeasible,
    Failed,
    Skipped,
}

/// Rows shared by every candidate, over the scaled variables
/// `b_i = a_i s^i` with `s = max(λ₁, 1)`.
struct Template {
    kind: BoundKind,
    scale: f64,
    classes: Vec<PairClass>,
    class_rows: Vec<Vec<f64>>,
    /// Scaled powers of each distinct eigenvalue `θ₀ > θ₁ > … > θ_d`.
    theta_rows: Vec<Vec<f64>>,
}

impl Template {
    fn new(ctx: &PowerContext, kind: BoundKind) -> Template {
        let t = ctx.t();
        let scale = ctx.spectrum().values[0].max(1.0);
        let classes = ctx.pair_classes();
        let class_rows = classes
            .iter()
            .map(|c| (0..=t).map(|i| c.walks[i] as f64 / scale.powi(i as i32)).collect())
            .collect();
        let theta_rows = ctx
            .spectrum()
            .distinct
            .iter()
            .map(|&(th, _)| (0..=t).map(|i| (th / scale).powi(i as i32)).collect())
            .collect();
        Template {
            kind,
            scale,
            classes,
            class_rows,
            theta_rows,
        }
    }

    fn d(&self) -> usize {
        self.theta_rows.len() - 1
    }

    fn problem(&self, class: usize, ell: usize) -> LpProblem {
        let lower = self.kind == BoundKind::Lower;
        let (sense, pin, rel, spec_rel) = if lower {
            (Sense::Maximize, 0.5, Relation::Le, Relation::Le)
        } else {
            (Sense::Minimize, 1.0, Relation::Ge, Relation::Ge)
        };
        let mut p = LpProblem::new(sense, self.theta_rows[0].clone()).all_free();
        for row in &self.class_rows {
            p.add(row.clone(), rel, pin);
        }
        p.add(self.class_rows[class].clone(), Relation::Eq, pin);
        p.add(self.theta_rows[ell].clone(), Relation::Eq, 0.0);
        if lower {
            p.add(self.theta_rows[0].clone(), Relation::Ge, 0.0);
        }
        for j in 1..self.theta_rows.len() {
            p.add(self.theta_rows[j].clone(), spec_rel, 0.0);
        }
        p
    }

    fn unscale(&self, b: &[f64]) -> Poly {
        Poly::new(b.iter().enumerate().map(|(i, x)| x / self.scale.powi(i as i32)).collect())
    }
}

fn solve_candidate(tpl: &Template, class: usize, ell: usize) -> Outcome {
    let p = tpl.problem(class, ell);
    let sol = solve_via_dual(&p);
    match sol.status {
        Status::Optimal if check_feasible(&p, &sol.x, ACCEPT_TOL).feasible => {
            Outcome::Optimal(sol.objective, sol.x)
        }
        Status::Infeasible => Outcome::Infeasible,
        _ => Outcome::Failed,
    }
}

fn sweep(g: &Graph, t: usize, opts: &SweepOptions, kind: BoundKind) -> Result<SweepResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = Instant::now();
    let deadline = start + opts.time_limit;
    let ctx = PowerContext::new(g, t)?;
    let tpl = Template::new(&ctx, kind);
    let d = tpl.d();
    let jobs: Vec<(usize, usize)> = (0..tpl.classes.len())
        .flat_map(|c| (1..=d).map(move |ell| (c, ell)))
        .collect();
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(c, ell)| {
            if Instant::now() >= deadline {
                Outcome::Skipped
            } else {
                solve_candidate(&tpl, c, ell)
            }
        })
        .collect();

    let mut res = SweepResult {
        best: None,
        best_candidate: None,
        candidates: jobs.len(),
        solved: 0,
        infeasible: 0,
        failed: 0,
        complete: true,
        elapsed: Duration::ZERO,
    };
    // Earliest candidate wins ties.
    let mut best: Option<(f64, usize)> = None;
    for (k, o) in outcomes.iter().enumerate() {
        match o {
            Outcome::Optimal(obj, _) => {
                res.solved += 1;
                let better = match best {
                    None => true,
                    Some((b, _)) if kind == BoundKind::Lower => *obj > b,
                    Some((b, _)) => *obj < b,
                };
                if better {
                    best = Some((*obj, k));
                }
            }
            Outcome::Infeasible => res.infeasible += 1,
            Outcome::Failed => res.failed += 1,
            Outcome::Skipped => res.complete = false,
        }
    }
    if let Some((obj, k)) = best {
        let Outcome::Optimal(_, x) = &outcomes[k] else { unreachable!() };
        let witness = tpl.unscale(x);
        let bound = match kind {
            BoundKind::Lower => ctx.lower_bound(&witness),
            BoundKind::Upper => ctx.upper_bound(&witness),
        };
        let mut bound = bound.map_err(|e| {
            Error::Inapplicable(format!("LP optimum failed the bound preconditions: {e}"))
        })?;
        // The LP objective is the bound itself; the recomputed components
        // agree with it up to solver accuracy.
        bound.value = match kind {
            BoundKind::Lower => obj,
            BoundKind::Upper => half_up(ctx.n()) * obj,
        };
        let (c, ell) = jobs[k];
        res.best = Some(bound);
        res.best_candidate = Some((tpl.classes[c].pair, ell));
    }
    res.elapsed = start.elapsed();
    Ok(res)
}
