//! Dense linear programs and a two-phase tableau simplex solver.

mod simplex;

pub use simplex::solve;

use crate::error::{input, Result};

/// Pivot elements smaller than this are treated as zero.
pub const PIVOT_TOL: f64 = 1e-10;
/// Constraint satisfaction tolerance, scaled by `1 + |rhs|`.
pub const FEAS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VarBound {
    /// `x >= 0`.
    NonNegative,
    /// No bound.
    Free,
    /// `x >= l`.
    Lower(f64),
}

impl VarBound {
    fn lower(self) -> Option<f64> {
        match self {
            VarBound::NonNegative => Some(0.0),
            VarBound::Free => None,
            VarBound::Lower(l) => Some(l),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// `optimize c·x` subject to rows `a·x (<=|=|>=) b` and per-variable lower bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<VarBound>,
}

impl LpProblem {
    /// A problem with non-negative variables and no constraints.
    pub fn new(sense: Sense, objective: Vec<f64>) -> LpProblem {
        let bounds = vec![VarBound::NonNegative; objective.len()];
        LpProblem {
            sense,
            objective,
            constraints: Vec::new(),
            bounds,
        }
    }

    pub fn vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn set_bound(&mut self, var: usize, bound: VarBound) {
        self.bounds[var] = bound;
    }

    pub fn all_free(mut self) -> LpProblem {
        self.bounds.iter_mut().for_each(|b| *b = VarBound::Free);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vars();
        if self.bounds.len() != n {
            return input("bound count differs from variable count");
        }
        if self.objective.iter().any(|c| !c.is_finite()) {
            return input("objective has a non-finite coefficient");
        }
        for (i, row) in self.constraints.iter().enumerate() {
            if row.coeffs.len() != n {
                return input(format!("row {i} has {} coefficients, expected {n}", row.coeffs.len()));
            }
            if !row.rhs.is_finite() || row.coeffs.iter().any(|c| !c.is_finite()) {
                return input(format!("row {i} has a non-finite entry"));
            }
        }
        for (j, b) in self.bounds.iter().enumerate() {
            if let VarBound::Lower(l) = b {
                if !l.is_finite() {
                    return input(format!("variable {j} has a non-finite bound"));
                }
            }
        }
        Ok(())
    }

    pub fn objective_value(&self, x: &[f64]) -> f64 {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
    /// Iteration cap, malformed input or numerical breakdown.
    Failure,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: Status,
    pub x: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
    /// One multiplier per constraint, signed so that at an optimum the
    /// objective equals `Σ_i y_i (rhs_i − a_i·l) + c·l`, where `l` holds the
    /// finite lower bounds (so simply `Σ rhs_i y_i` when they are all zero).
    pub duals: Vec<f64>,
    pub diagnostics: Option<String>,
}

impl LpSolution {
    pub(crate) fn failed(status: Status, iterations: usize, msg: impl Into<String>) -> LpSolution {
        LpSolution {
            status,
            x: Vec::new(),
            objective: f64::NAN,
            iterations,
            duals: Vec::new(),
            diagnostics: Some(msg.into()),
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}

/// Outcome of [`check_feasible`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Feasibility {
    pub feasible: bool,
    /// Largest absolute violation over rows and bounds (0 when none).
    pub worst: f64,
    /// Index of the worst row, or `rows + j` for the bound of variable `j`.
    pub worst_index: Option<usize>,
}

/// Checks `x` against every row and bound. A row counts as satisfied when its
/// violation is at most `tol * (1 + |rhs|)`.
pub fn check_feasible(p: &LpProblem, x: &[f64], tol: f64) -> Feasibility {
    let mut worst = 0.0;
    let mut worst_index = None;
    let mut feasible = x.len() == p.vars();
    for (i, row) in p.constraints.iter().enumerate() {
        let lhs: f64 = row.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
        let v = match row.relation {
            Relation::Le => lhs - row.rhs,
            Relation::Ge => row.rhs - lhs,
            Relation::Eq => (lhs - row.rhs).abs(),
        }
        .max(0.0);
        if v > tol * (1.0 + row.rhs.abs()) {
            feasible = false;
        }
        if v > worst {
            worst = v;
            worst_index = Some(i);
        }
    }
    for (j, b) in p.bounds.iter().enumerate() {
        if let (Some(l), Some(&xj)) = (b.lower(), x.get(j)) {
            let v = (l - xj).max(0.0);
            if v > tol * (1.0 + l.abs()) {
                feasible = false;
            }
            if v > worst {
                worst = v;
                worst_index = Some(p.constraints.len() + j);
            }
        }
    }
    Feasibility {
        feasible,
        worst,
        worst_index,
    }
}

/// The LP dual of a problem whose variables are all non-negative or free.
///
/// For `min c·x` the dual is `max b·y` with `y_i >= 0` on `>=` rows, free on
/// equality rows and `y_i <= 0` on `<=` rows; the last kind are represented
/// as `-y_i >= 0`, so dual variable `i` is `y_i` or `-y_i` accordingly. A
/// maximization primal is first negated into a minimization.
pub fn dual_of(p: &LpProblem) -> Result<LpProblem> {
    p.validate()?;
    if p.bounds.iter().any(|b| matches!(b, VarBound::Lower(l) if *l != 0.0)) {
        return input("dual construction needs zero or absent lower bounds");
    }
    let sign = if p.sense == Sense::Minimize { 1.0 } else { -1.0 };
    let m = p.constraints.len();
    let flip: Vec<f64> = p
        .constraints
        .iter()
        .map(|r| if r.relation == Relation::Le { -1.0 } else { 1.0 })
        .collect();
    let objective = p
        .constraints
        .iter()
        .zip(&flip)
        .map(|(r, f)| r.rhs * f)
        .collect();
    let mut d = LpProblem::new(Sense::Maximize, objective);
    for (i, r) in p.constraints.iter().enumerate() {
        if r.relation == Relation::Eq {
            d.bounds[i] = VarBound::Free;
        }
    }
    for j in 0..p.vars() {
        let coeffs = (0..m).map(|i| p.constraints[i].coeffs[j] * flip[i]).collect();
        let rel = match p.bounds[j] {
            VarBound::Free => Relation::Eq,
            _ => Relation::Le,
        };
        d.add(coeffs, rel, sign * p.objective[j]);
    }
    Ok(d)
}

/// Solves `p` by solving its dual and reading the primal solution off the
/// dual multipliers. Worth it when `p` has many more rows than columns.
pub fn solve_via_dual(p: &LpProblem) -> LpSolution {
    let d = match dual_of(p) {
        Ok(d) => d,
        Err(e) => return LpSolution::failed(Status::Failure, 0, e.to_string()),
    };
    let ds = solve(&d);
    match ds.status {
        Status::Optimal => {}
        Status::Unbounded => {
            return LpSolution::failed(Status::Infeasible, ds.iterations, "dual is unbounded")
        }
        Status::Infeasible => {
            return LpSolution::failed(
                Status::Unbounded,
                ds.iterations,
                "dual is infeasible, so the primal is unbounded or infeasible",
            )
        }
        Status::Failure => return ds,
    }
    let x: Vec<f64> = ds.duals.clone();
    let duals = p
        .constraints
        .iter()
        .zip(&ds.x)
        .map(|(r, y)| if r.relation == Relation::Le { -y } else { *y })
        .collect();
    LpSolution {
        status: Status::Optimal,
        objective: p.objective_value(&x),
        x,
        iterations: ds.iterations,
        duals,
        diagnostics: Some("solved through the dual".into()),
    }
}
