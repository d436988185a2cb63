//! Tight sets: subsets meeting an interlacing bound with equality.

use std::time::{Duration, Instant};

use crate::error::{input, Error, Result};
use crate::graph::{complement, cut_metrics, Graph};
use crate::rational::to_f64;
use crate::spectra::{laplacian_spectrum, TIGHT_TOL};

/// Which interlacing bound is met.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TightKind {
    /// `i_G(S) = (1 − |S|/n) μₙ`.
    I,
    /// `i_G(S) = (1 − |S|/n) μ₂`.
    II,
}

impl TightKind {
    fn other(self) -> TightKind {
        match self {
            TightKind::I => TightKind::II,
            TightKind::II => TightKind::I,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TightReport {
    pub value: f64,
    pub bound: f64,
    pub tight: bool,
    /// Whether `S` is tight of the other type in the complement graph.
    pub complement_tight: bool,
}

fn tight_value(g: &Graph, set: &[usize], kind: TightKind) -> Result<(f64, f64)> {
    g.regular_degree().ok_or(Error::Irregular)?;
    let cut = cut_metrics(g, set)?;
    let lap = laplacian_spectrum(g);
    let mu = match kind {
        TightKind::I => lap.max(),
        TightKind::II => lap.at(2),
    };
    let bound = (1.0 - set.len() as f64 / g.n() as f64) * mu;
    Ok((to_f64(&cut.i), bound))
}

/// Checks whether `set` is tight of the given type, and whether it is tight
/// of the other type in the complement graph.
pub fn verify_tight(g: &Graph, set: &[usize], kind: TightKind) -> Result<TightReport> {
    let (value, bound) = tight_value(g, set, kind)?;
    let (cv, cb) = tight_value(&complement(g), set, kind.other())?;
    Ok(TightReport {
        value,
        bound,
        tight: (value - bound).abs() <= TIGHT_TOL,
        complement_tight: (cv - cb).abs() <= TIGHT_TOL,
    })
}

fn as_integer(x: f64) -> Option<usize> {
    let r = x.round();
    ((x - r).abs() <= 1e-8 && r >= 0.0).then_some(r as usize)
}

/// Searches for a Type II tight set of size `m` in a regular graph.
///
/// Equality forces `{S, V∖S}` to be equitable: every vertex of `S` has
/// exactly `(1 − m/n) μ₂` neighbours outside and every other vertex exactly
/// `m μ₂ / n` inside. Non-integral counts rule out a tight set at once;
/// otherwise a backtracking search assigns vertices under these counts.
/// Returns `Ok(None)` when no such set exists, and an error if the time
/// limit is hit first.
pub fn find_tight_set(g: &Graph, m: usize, time_limit: Duration) -> Result<Option<Vec<usize>>> {
    let k = g.regular_degree().ok_or(Error::Irregular)?;
    let n = g.n();
    if m == 0 || 2 * m > n {
        return input(format!("size {m} outside 1..={}", n / 2));
    }
    let mu2 = laplacian_spectrum(g).at(2);
    let out_deg = as_integer((1.0 - m as f64 / n as f64) * mu2);
    let in_deg = as_integer(m as f64 * mu2 / n as f64);
    let (Some(a), Some(c)) = (out_deg, in_deg) else {
        return Ok(None);
    };
    if a > k || c > k {
        return Ok(None);
    }
    let mut search = Backtrack {
        g,
        k,
        m,
        a,
        c,
        state: vec![State::Free; n],
        inside: vec![0; n],
        outside: vec![0; n],
        placed_in: 0,
        placed: 0,
        deadline: Instant::now() + time_limit,
        timed_out: false,
        order: bfs_order(g),
    };
    let found = search.go(0);
    if search.timed_out {
        return Err(Error::Inapplicable("tight-set search ran out of time".into()));
    }
    if !found {
        return Ok(None);
    }
    let set: Vec<usize> = (0..n).filter(|&v| search.state[v] == State::In).collect();
    debug_assert_eq!(g.boundary(&set), m * a);
    Ok(Some(set))
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i];
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
            i += 1;
        }
    }
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Free,
    In,
    Out,
}

struct Backtrack<'a> {
    g: &'a Graph,
    k: usize,
    m: usize,
    /// Required outside-neighbours of an inside vertex.
    a: usize,
    /// Required inside-neighbours of an outside vertex.
    c: usize,
    state: Vec<State>,
    /// Assigned neighbours inside / outside, per vertex.
    inside: Vec<usize>,
    outside: Vec<usize>,
    placed_in: usize,
    placed: usize,
    deadline: Instant,
    timed_out: bool,
    order: Vec<usize>,
}

impl Backtrack<'_> {
    fn consistent(&self, v: usize) -> bool {
        let free = self.k - self.inside[v] - self.outside[v];
        match self.state[v] {
            State::Free => true,
            State::In => self.outside[v] <= self.a && self.outside[v] + free >= self.a,
            State::Out => self.inside[v] <= self.c && self.inside[v] + free >= self.c,
        }
    }

    fn assign(&mut self, v: usize, s: State) {
        self.state[v] = s;
        for u in self.g.neighbors(v).collect::<Vec<_>>() {
            match s {
                State::In => self.inside[u] += 1,
                _ => self.outside[u] += 1,
            }
        }
        self.placed += 1;
        if s == State::In {
            self.placed_in += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let s = self.state[v];
        for u in self.g.neighbors(v).collect::<Vec<_>>() {
            match s {
                State::In => self.inside[u] -= 1,
                _ => self.outside[u] -= 1,
            }
        }
        self.placed -= 1;
        if s == State::In {
            self.placed_in -= 1;
        }
        self.state[v] = State::Free;
    }

    fn go(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return self.placed_in == self.m;
        }
        if idx % 64 == 0 && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        let v = self.order[idx];
        let remaining = self.order.len() - idx;
        for s in [State::In, State::Out] {
            if s == State::In && self.placed_in == self.m {
                continue;
            }
            if s == State::Out && self.placed_in + remaining - 1 < self.m {
                continue;
            }
            self.assign(v, s);
            let ok = self.consistent(v) && self.g.neighbors(v).all(|u| self.consistent(u));
            if ok && self.go(idx + 1) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}
