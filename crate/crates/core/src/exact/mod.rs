//! Exact isoperimetric number, Cheeger constant and sparsity by exhaustive
//! search, plus tight-set search.
//!
//! Subsets are enumerated one size class at a time in revolving-door order,
//! so each step moves one vertex and the boundary is updated with two
//! popcounts. Size classes that the bound `|∂S| ≥ μ₂|S|(n−|S|)/n` shows
//! cannot beat the current best are skipped.

mod combinations;
mod search;
mod tight;

pub use combinations::{revolving_door, Move};
pub use tight::{find_tight_set, verify_tight, TightKind, TightReport};

use std::sync::atomic::AtomicBool;
use std::time::{Duration, Instant};

use num_traits::Zero;

use search::{lex_less, Engine, MinBoundary, Visitor};

use crate::error::{input, Error, Result};
use crate::graph::{CutResult, Graph};
use crate::spectra::algebraic_connectivity;
use crate::Rational;

/// Limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    /// Largest graph searched (at most 64).
    pub max_n: usize,
    pub time_limit: Duration,
    /// Worker threads; 0 uses the global pool.
    pub parallel: usize,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            max_n: 40,
            time_limit: Duration::from_secs(300),
            parallel: 0,
        }
    }
}

impl SearchBudget {
    pub fn with_max_n(mut self, max_n: usize) -> SearchBudget {
        self.max_n = max_n;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> SearchBudget {
        self.time_limit = limit;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Isoperimetric,
    Cheeger,
    Sparsity,
}

/// Result of an exact search. When `certified` is false the time limit was
/// hit and `value` is only the best value found.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactCut {
    pub param: Param,
    pub value: Rational,
    pub cut: CutResult,
    pub certified: bool,
}

/// Minimum boundary of each size class `1..=n/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeProfile {
    /// Entry `m` holds `(boundary, set)` for size `m`; entry 0 is unused,
    /// `None` marks a skipped or unfinished class.
    pub classes: Vec<Option<(usize, Vec<usize>)>>,
    pub certified: bool,
}

fn check_size(g: &Graph, budget: &SearchBudget) -> Result<()> {
    if g.n() < 2 {
        return input("exact search needs at least two vertices");
    }
    let cap = budget.max_n.min(64);
    if g.n() > cap {
        return Err(Error::TooLarge {
            what: g.name().unwrap_or("graph").to_string(),
            n: g.n(),
            cap,
        });
    }
    Ok(())
}

fn in_pool<T: Send>(budget: &SearchBudget, f: impl FnOnce() -> T + Send) -> T {
    if budget.parallel == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(budget.parallel).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn mask_to_set(mask: u64) -> Vec<usize> {
    crate::graph::bits(&[mask]).collect()
}

/// Runs the size classes in `order`, skipping those for which `skip`
/// (given the class and the best value so far) says so.
fn best_over_classes(
    g: &Graph,
    budget: &SearchBudget,
    order: &[usize],
    value: impl Fn(usize, u32) -> Rational + Sync,
    skip: impl Fn(usize, Option<Rational>) -> bool + Sync,
) -> (Option<(Rational, usize, u64)>, bool) {
    let aborted = AtomicBool::new(false);
    let deadline = Instant::now() + budget.time_limit;
    let engine = Engine::new(g, Some(deadline), &aborted);
    in_pool(budget, || {
        let mut best: Option<(Rational, usize, u64)> = None;
        for (k, &m) in order.iter().enumerate() {
            // The first class always completes so that a value exists.
            if k > 0 && (engine.aborted() || skip(m, best.map(|b| b.0))) {
                continue;
            }
            let r = if k == 0 {
                let flag = AtomicBool::new(false);
                Engine::new(g, None, &flag).run_class(m, MinBoundary::new())
            } else {
                engine.run_class(m, MinBoundary::new())
            };
            if !r.found() {
                continue;
            }
            let cand = (value(m, r.boundary), m, r.mask);
            let better = match best {
                None => true,
                Some((v, size, mask)) => {
                    cand.0 < v || (cand.0 == v && (m < size || (m == size && lex_less(cand.2, mask))))
                }
            };
            if better {
                best = Some(cand);
            }
        }
        (best, !engine.aborted())
    })
}

fn finish(g: &Graph, param: Param, found: Option<(Rational, usize, u64)>, certified: bool) -> Result<ExactCut> {
    let (value, _, mask) = found.ok_or_else(|| Error::Input("no subset was examined".into()))?;
    let set = mask_to_set(mask);
    let boundary = g.boundary(&set);
    Ok(ExactCut {
        param,
        value,
        cut: CutResult::from_parts(g, set, boundary),
        certified,
    })
}

/// Classes visited by the isoperimetric search: singletons first, then from
/// `n/2` down, so good cuts are found early and small classes get pruned.
fn iso_order(n: usize) -> Vec<usize> {
    let mut order = vec![1];
    order.extend((2..=n / 2).rev());
    order
}

/// `i(G)`, the minimum of `|∂S|/|S|` over `1 ≤ |S| ≤ n/2`.
pub fn isoperimetric_exact(g: &Graph, budget: &SearchBudget) -> Result<ExactCut> {
    isoperimetric_exact_with(g, budget, true)
}

/// As [`isoperimetric_exact`], optionally without spectral pruning.
pub fn isoperimetric_exact_with(g: &Graph, budget: &SearchBudget, prune: bool) -> Result<ExactCut> {
    check_size(g, budget)?;
    let n = g.n();
    let mu2 = if prune { algebraic_connectivity(g) } else { 0.0 };
    let (best, certified) = best_over_classes(
        g,
        budget,
        &iso_order(n),
        |m, b| Rational::new(b as i64, m as i64),
        |m, best| {
            let lower = mu2 * (1.0 - m as f64 / n as f64) - 1e-9;
            prune && best.is_some_and(|b| lower >= crate::rational::to_f64(&b))
        },
    );
    finish(g, Param::Isoperimetric, best, certified)
}

/// The minimum of `|∂S|/|S|` over sets of size exactly `m`, `1 ≤ m ≤ n/2`.
pub fn cut_at_size(g: &Graph, m: usize, budget: &SearchBudget) -> Result<ExactCut> {
    check_size(g, budget)?;
    if m == 0 || m > g.n() / 2 {
        return input(format!("size {m} outside 1..={}", g.n() / 2));
    }
    let aborted = AtomicBool::new(false);
    let engine = Engine::new(g, Some(Instant::now() + budget.time_limit), &aborted);
    let r = in_pool(budget, || engine.run_class(m, MinBoundary::new()));
    let found = r
        .found()
        .then(|| (Rational::new(r.boundary as i64, m as i64), m, r.mask));
    finish(g, Param::Isoperimetric, found, !engine.aborted())
}

/// Minimum boundary for every size class up to `n/2`, without pruning.
pub fn size_profile(g: &Graph, budget: &SearchBudget) -> Result<SizeProfile> {
    check_size(g, budget)?;
    let aborted = AtomicBool::new(false);
    let engine = Engine::new(g, Some(Instant::now() + budget.time_limit), &aborted);
    let classes = in_pool(budget, || {
        let mut classes = vec![None];
        for m in 1..=g.n() / 2 {
            let r = engine.run_class(m, MinBoundary::new());
            classes.push(
                (r.found() && !engine.aborted()).then(|| (r.boundary as usize, mask_to_set(r.mask))),
            );
        }
        classes
    });
    Ok(SizeProfile {
        classes,
        certified: !engine.aborted(),
    })
}

/// `σ(G)`, the minimum of `|∂S|/(|S||V∖S|)` over nontrivial `S`.
pub fn sparsity_exact(g: &Graph, budget: &SearchBudget) -> Result<ExactCut> {
    check_size(g, budget)?;
    let n = g.n();
    // σ(S) ≥ μ₂/n for every S, so nothing can beat a value at that level.
    let floor = algebraic_connectivity(g) / n as f64 - 1e-9;
    let (best, certified) = best_over_classes(
        g,
        budget,
        &iso_order(n),
        |m, b| Rational::new(b as i64, (m * (n - m)) as i64),
        |_, best| best.is_some_and(|b| floor >= crate::rational::to_f64(&b)),
    );
    finish(g, Param::Sparsity, best, certified)
}

/// Best `|∂S|/vol(S)` over sets with `vol(S) ≤ vol(V)/2`, tracking each
/// enumerated set and its complement.
#[derive(Clone, Copy)]
struct CheegerVisitor {
    full: u64,
    total: u32,
    best: Option<(u32, u32, u64)>,
}

impl CheegerVisitor {
    #[inline(always)]
    fn offer(&mut self, b: u32, vol: u32, mask: u64) {
        if vol == 0 || 2 * vol > self.total {
            return;
        }
        let better = match self.best {
            None => true,
            Some((bb, bv, bm)) => {
                let lhs = b as u64 * bv as u64;
                let rhs = bb as u64 * vol as u64;
                lhs < rhs
                    || (lhs == rhs
                        && (mask.count_ones() < bm.count_ones()
                            || (mask.count_ones() == bm.count_ones() && lex_less(mask, bm))))
            }
        };
        if better {
            self.best = Some((b, vol, mask));
        }
    }
}

impl Visitor for CheegerVisitor {
    #[inline(always)]
    fn visit(&mut self, mask: u64, boundary: u32, volume: u32) {
        self.offer(boundary, volume, mask);
        self.offer(boundary, self.total - volume, self.full ^ mask);
    }

    fn merge(mut self, other: Self) -> Self {
        if let Some((b, v, m)) = other.best {
            self.offer(b, v, m);
        }
        self
    }
}

/// `h(G)`, the minimum of `|∂S|/vol(S)` over `S` with `vol(S) ≤ vol(V)/2`.
pub fn cheeger_exact(g: &Graph, budget: &SearchBudget) -> Result<ExactCut> {
    check_size(g, budget)?;
    if g.edge_count() == 0 {
        return input("Cheeger constant of an edgeless graph");
    }
    if let Some(k) = g.regular_degree() {
        // vol(S) = k|S|, so h = i/k with the same optimal sets.
        let iso = isoperimetric_exact(g, budget)?;
        return Ok(ExactCut {
            param: Param::Cheeger,
            value: iso.value / Rational::from_integer(k as i64),
            ..iso
        });
    }
    let n = g.n();
    let aborted = AtomicBool::new(false);
    let engine = Engine::new(g, Some(Instant::now() + budget.time_limit), &aborted);
    let proto = CheegerVisitor {
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        total: (2 * g.edge_count()) as u32,
        best: None,
    };
    let best = in_pool(budget, || {
        (1..=n / 2).fold(proto, |acc, m| acc.merge(engine.run_class(m, proto)))
    });
    let (b, vol, mask) = best
        .best
        .ok_or_else(|| Error::Input("no set with positive volume".into()))?;
    let value = Rational::new(b as i64, vol as i64);
    debug_assert!(!value.is_zero() || !g.is_connected());
    let set = mask_to_set(mask);
    Ok(ExactCut {
        param: Param::Cheeger,
        value,
        cut: CutResult::from_parts(g, set, b as usize),
        certified: !engine.aborted(),
    })
}
