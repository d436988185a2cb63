//! Two-phase tableau simplex.
//!
//! Pricing is Dantzig's rule (most negative reduced cost, lowest index on
//! ties) until a run of degenerate pivots, after which the phase finishes
//! under Bland's rule so it cannot cycle. The ratio test breaks ties by the
//! lowest basic column index. Everything is deterministic.

use super::{LpProblem, LpSolution, Relation, Sense, Status, VarBound, FEAS_TOL, PIVOT_TOL};

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const DEGENERATE_RUN: usize = 25;
const COST_TOL: f64 = 1e-9;

struct Tableau {
    rows: usize,
    cols: usize,
    /// `(rows + 1) x (cols + 1)`; the last row holds reduced costs, the last
    /// column the right-hand side. The cost row's rhs is minus the objective.
    t: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> f64 {
        self.t[r * (self.cols + 1) + c]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.cols)
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let w = self.cols + 1;
        let p = self.t[pr * w + pc];
        for c in 0..w {
            self.t[pr * w + c] /= p;
        }
        self.t[pr * w + pc] = 1.0;
        let (before, rest) = self.t.split_at_mut(pr * w);
        let (prow, after) = rest.split_at_mut(w);
        let eliminate = |row: &mut [f64]| {
            let f = row[pc];
            if f != 0.0 {
                for (x, y) in row.iter_mut().zip(prow.iter()) {
                    *x -= f * y;
                }
                row[pc] = 0.0;
            }
        };
        before.chunks_mut(w).for_each(eliminate);
        after.chunks_mut(w).for_each(eliminate);
        self.basis[pr] = pc;
    }

    fn set_costs(&mut self, costs: &[f64]) {
        let w = self.cols + 1;
        let obj = self.rows * w;
        self.t[obj..obj + w].fill(0.0);
        self.t[obj..obj + self.cols].copy_from_slice(costs);
        for r in 0..self.rows {
            let cb = costs[self.basis[r]];
            if cb != 0.0 {
                for c in 0..w {
                    self.t[obj + c] -= cb * self.t[r * w + c];
                }
            }
        }
    }

    /// Runs one phase. Returns `Ok(true)` at optimality, `Ok(false)` when
    /// unbounded, `Err` on reaching the iteration cap.
    fn run(&mut self, allowed: &[bool], iterations: &mut usize, cap: usize) -> Result<bool, String> {
        let mut bland = false;
        let mut degenerate = 0;
        loop {
            let obj = self.rows;
            let entering = if bland {
                (0..self.cols).find(|&c| allowed[c] && self.at(obj, c) < -COST_TOL)
            } else {
                let mut best: Option<(usize, f64)> = None;
                for c in 0..self.cols {
                    let d = self.at(obj, c);
                    if allowed[c] && d < -COST_TOL && best.is_none_or(|(_, b)| d < b) {
                        best = Some((c, d));
                    }
                }
                best.map(|b| b.0)
            };
            let Some(pc) = entering else {
                return Ok(true);
            };
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.rows {
                let a = self.at(r, pc);
                if a > PIVOT_TOL {
                    let ratio = self.rhs(r).max(0.0) / a;
                    let better = match leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < lratio - 1e-12 * (1.0 + lratio.abs())
                                || (ratio <= lratio + 1e-12 * (1.0 + lratio.abs())
                                    && self.basis[r] < self.basis[lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let Some((pr, ratio)) = leave else {
                return Ok(false);
            };
            if *iterations >= cap {
                return Err(format!("iteration cap of {cap} reached"));
            }
            *iterations += 1;
            if ratio <= 1e-12 {
                degenerate += 1;
                if degenerate > DEGENERATE_RUN {
                    bland = true;
                }
            } else {
                degenerate = 0;
            }
            self.pivot(pr, pc);
        }
    }
}

/// How an original variable maps onto tableau columns.
enum VarMap {
    Shifted { col: usize, lower: f64 },
    Split { pos: usize, neg: usize },
}

/// Solves `p` with the two-phase simplex method.
pub fn solve(p: &LpProblem) -> LpSolution {
    if let Err(e) = p.validate() {
        return LpSolution::failed(Status::Failure, 0, e.to_string());
    }
    let n = p.vars();
    let m = p.constraints.len();
    let sense = if p.sense == Sense::Minimize { 1.0 } else { -1.0 };

    // Structural columns.
    let mut maps = Vec::with_capacity(n);
    let mut ncols = 0;
    for b in &p.bounds {
        match b {
            VarBound::Free => {
                maps.push(VarMap::Split { pos: ncols, neg: ncols + 1 });
                ncols += 2;
            }
            VarBound::NonNegative => {
                maps.push(VarMap::Shifted { col: ncols, lower: 0.0 });
                ncols += 1;
            }
            VarBound::Lower(l) => {
                maps.push(VarMap::Shifted { col: ncols, lower: *l });
                ncols += 1;
            }
        }
    }

    // Rows normalized to a non-negative rhs; `flip[i]` records the sign used.
    let mut flip = vec![1.0; m];
    let mut rels = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, row) in p.constraints.iter().enumerate() {
        let shift: f64 = maps
            .iter()
            .zip(&row.coeffs)
            .map(|(mp, a)| match mp {
                VarMap::Shifted { lower, .. } => a * lower,
                VarMap::Split { .. } => 0.0,
            })
            .sum();
        let mut b = row.rhs - shift;
        let mut rel = row.relation;
        if b < 0.0 {
            flip[i] = -1.0;
            b = -b;
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rels.push(rel);
        rhs.push(b);
    }

    // Slack, surplus and artificial columns. `init[i]` is the column that
    // starts basic in row i; its tableau column tracks row i of B^-1.
    let mut init = vec![0; m];
    let mut surplus = vec![None; m];
    for i in 0..m {
        match rels[i] {
            Relation::Le => {
                init[i] = ncols;
                ncols += 1;
            }
            Relation::Ge => {
                surplus[i] = Some(ncols);
                init[i] = ncols + 1;
                ncols += 2;
            }
            Relation::Eq => {
                init[i] = ncols;
                ncols += 1;
            }
        }
    }
    let artificial: Vec<bool> = {
        let mut a = vec![false; ncols];
        for i in 0..m {
            if rels[i] != Relation::Le {
                a[init[i]] = true;
            }
        }
        a
    };

    let w = ncols + 1;
    let mut tab = Tableau {
        rows: m,
        cols: ncols,
        t: vec![0.0; (m + 1) * w],
        basis: init.clone(),
    };
    for (i, row) in p.constraints.iter().enumerate() {
        let r = &mut tab.t[i * w..(i + 1) * w];
        for (mp, &a) in maps.iter().zip(&row.coeffs) {
            match *mp {
                VarMap::Shifted { col, .. } => r[col] = flip[i] * a,
                VarMap::Split { pos, neg } => {
                    r[pos] = flip[i] * a;
                    r[neg] = -flip[i] * a;
                }
            }
        }
        if let Some(s) = surplus[i] {
            r[s] = -1.0;
        }
        r[init[i]] = 1.0;
        r[ncols] = rhs[i];
    }

    let cap = 10 * (m + ncols);
    let mut iterations = 0;

    // Phase 1: minimize the sum of artificials.
    if artificial.iter().any(|&a| a) {
        let costs: Vec<f64> = artificial.iter().map(|&a| if a { 1.0 } else { 0.0 }).collect();
        tab.set_costs(&costs);
        let allowed = vec![true; ncols];
        if let Err(msg) = tab.run(&allowed, &mut iterations, cap) {
            return LpSolution::failed(Status::Failure, iterations, msg);
        }
        let infeasibility = -tab.at(m, ncols);
        let scale = 1.0 + rhs.iter().fold(0.0f64, |a, b| a.max(b.abs()));
        if infeasibility > FEAS_TOL * scale {
            return LpSolution::failed(
                Status::Infeasible,
                iterations,
                format!("phase one ended with infeasibility {infeasibility:.3e}"),
            );
        }
        // Drive zero-level artificials out of the basis where possible.
        for r in 0..m {
            if artificial[tab.basis[r]] {
                let col = (0..ncols)
                    .filter(|&c| !artificial[c])
                    .max_by(|&a, &b| tab.at(r, a).abs().total_cmp(&tab.at(r, b).abs()))
                    .filter(|&c| tab.at(r, c).abs() > 1e-9);
                if let Some(c) = col {
                    tab.pivot(r, c);
                }
            }
        }
    }

    // Phase 2.
    let mut costs = vec![0.0; ncols];
    for (mp, &c) in maps.iter().zip(&p.objective) {
        match *mp {
            VarMap::Shifted { col, .. } => costs[col] = sense * c,
            VarMap::Split { pos, neg } => {
                costs[pos] = sense * c;
                costs[neg] = -sense * c;
            }
        }
    }
    tab.set_costs(&costs);
    let allowed: Vec<bool> = artificial.iter().map(|a| !a).collect();
    match tab.run(&allowed, &mut iterations, cap) {
        Err(msg) => return LpSolution::failed(Status::Failure, iterations, msg),
        Ok(false) => {
            return LpSolution::failed(Status::Unbounded, iterations, "objective is unbounded")
        }
        Ok(true) => {}
    }

    let mut value = vec![0.0; ncols];
    for r in 0..m {
        value[tab.basis[r]] = tab.rhs(r);
    }
    let x: Vec<f64> = maps
        .iter()
        .map(|mp| match *mp {
            VarMap::Shifted { col, lower } => lower + value[col],
            VarMap::Split { pos, neg } => value[pos] - value[neg],
        })
        .collect();
    let duals = (0..m)
        .map(|i| -tab.at(m, init[i]) * flip[i] * sense)
        .collect();
    let objective = p.objective_value(&x);
    if !objective.is_finite() {
        return LpSolution::failed(Status::Failure, iterations, "non-finite objective");
    }
    LpSolution {
        status: Status::Optimal,
        x,
        objective,
        iterations,
        duals,
        diagnostics: None,
    }
}
