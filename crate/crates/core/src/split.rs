//! Random split graphs `G_{k,ℓ}`: a clique on `k` vertices, an independent
//! set on `ℓ` vertices, and each of the `kℓ` cross pairs an edge with
//! probability 1/2.
//!
//! Cross edge `e = i·ℓ + j` (clique vertex `i`, independent vertex `k + j`)
//! is bit `e mod 32` of word `e / 32` of a ChaCha8 stream keyed by the seed,
//! so a sample depends only on `(seed, stream)` and never on scheduling.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{isoperimetric_exact, revolving_door, Move, SearchBudget};
use crate::graph::Graph;
use crate::rational::to_f64;
use crate::spectra::grone_merris_upper;
use crate::Rational;

/// Largest `2k` for which the small-set lemma is checked exhaustively.
pub const LEMMA_EXHAUSTIVE_MAX_N: usize = 24;
/// Random sets drawn per graph above that size.
pub const LEMMA_SAMPLES: usize = 100_000;
/// Largest `2k` searched exactly by [`experiment_i_equals_delta`] in
/// [`SplitMode::Auto`].
pub const EXPERIMENT_EXACT_MAX_N: usize = 28;

#[derive(Debug, Clone, PartialEq)]
pub struct SplitSample {
    pub graph: Graph,
    pub k: usize,
    pub l: usize,
    pub seed: u64,
    pub stream: u64,
    /// `0..k`.
    pub clique_part: Vec<usize>,
    /// `k..k+ℓ`.
    pub independent_part: Vec<usize>,
}

/// Samples `G_{k,ℓ}` from stream 0 of `seed`.
pub fn sample_split(k: usize, l: usize, seed: u64) -> Result<SplitSample> {
    sample_split_stream(k, l, seed, 0)
}

/// Samples `G_{k,ℓ}` from the given stream; trials use one stream each.
pub fn sample_split_stream(k: usize, l: usize, seed: u64, stream: u64) -> Result<SplitSample> {
    if k == 0 || l == 0 {
        return Err(Error::Input(format!("split graph needs k, l >= 1, got ({k}, {l})")));
    }
    if k + l > 1 << 12 {
        return Err(Error::Input("split graph too large".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(0);
    let mut g = Graph::empty(k + l);
    for u in 0..k {
        for v in u + 1..k {
            g.set_edge(u, v);
        }
    }
    let mut word = 0u32;
    for e in 0..k * l {
        if e % 32 == 0 {
            word = rng.next_u32();
        }
        if word >> (e % 32) & 1 == 1 {
            g.set_edge(e / l, k + e % l);
        }
    }
    Ok(SplitSample {
        graph: g.with_name(format!("G({k},{l}) seed {seed}/{stream}")),
        k,
        l,
        seed,
        stream,
        clique_part: (0..k).collect(),
        independent_part: (k..k + l).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaOutcome {
    /// `|∂S| ≥ δ|S|` for every set examined.
    Holds { checked: u64, exhaustive: bool },
    /// A set breaking the inequality.
    Violated { set: Vec<usize>, boundary: usize },
    /// `δ > k/2` or unequal parts, so the lemma says nothing.
    PreconditionUnmet { delta: usize, k: usize },
}

impl LemmaOutcome {
    /// True unless a violating set was found.
    pub fn consistent(&self) -> bool {
        !matches!(self, LemmaOutcome::Violated { .. })
    }
}

/// Checks `|∂S|/|S| ≥ δ(G)` for all `S` with `|S| ≤ k/2` on a split graph
/// with equal parts and `δ ≤ k/2`: exhaustively when `2k ≤ 24`, otherwise on
/// 10⁵ random sets.
pub fn lemma_small_set_check(s: &SplitSample) -> LemmaOutcome {
    let g = &s.graph;
    let delta = g.min_degree();
    if s.k != s.l || 2 * delta > s.k {
        return LemmaOutcome::PreconditionUnmet { delta, k: s.k };
    }
    let n = g.n();
    let max_size = s.k / 2;
    if n <= LEMMA_EXHAUSTIVE_MAX_N {
        let adj: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
        let deg: Vec<i64> = (0..n).map(|v| g.degree(v) as i64).collect();
        let mut checked = 0u64;
        for m in 1..=max_size {
            let mut set = 0u64;
            let mut boundary = 0i64;
            let mut bad = None;
            revolving_door(n, m, |mv| {
                match mv {
                    Move::Start(first) => {
                        for x in 0..n {
                            if first >> x & 1 == 1 {
                                boundary += deg[x] - 2 * (adj[x] & set).count_ones() as i64;
                                set |= 1 << x;
                            }
                        }
                    }
                    Move::Swap { out, inn } => {
                        set &= !(1 << out);
                        boundary -= deg[out] - 2 * (adj[out] & set).count_ones() as i64;
                        boundary += deg[inn] - 2 * (adj[inn] & set).count_ones() as i64;
                        set |= 1 << inn;
                    }
                }
                checked += 1;
                if boundary < delta as i64 * m as i64 {
                    bad = Some((set, boundary as usize));
                    return false;
                }
                true
            });
            if let Some((mask, boundary)) = bad {
                let set = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                return LemmaOutcome::Violated { set, boundary };
            }
        }
        return LemmaOutcome::Holds {
            checked,
            exhaustive: true,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed ^ 0x5eed_1e44a);
    rng.set_stream(s.stream);
    let mut verts: Vec<usize> = (0..n).collect();
    for _ in 0..LEMMA_SAMPLES {
        let m = rng.random_range(1..=max_size.max(1));
        // Partial Fisher–Yates for the first m positions.
        for i in 0..m {
            let j = rng.random_range(i..n);
            verts.swap(i, j);
        }
        let set = &verts[..m];
        let boundary = g.boundary(set);
        if boundary < delta * m {
            let mut set = set.to_vec();
            set.sort_unstable();
            return LemmaOutcome::Violated { set, boundary };
        }
    }
    LemmaOutcome::Holds {
        checked: LEMMA_SAMPLES as u64,
        exhaustive: false,
    }
}

/// `exp(−t²/(2np))`, bounding `P[X < np − t]` for `X ~ Bin(n, p)` and
/// `0 ≤ t ≤ np/2`.
pub fn chernoff_tail(n: u64, p: f64, t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("p = {p} outside [0, 1]")));
    }
    let mu = n as f64 * p;
    if !(0.0..=mu / 2.0).contains(&t) {
        return Err(Error::Domain(format!("t = {t} outside [0, np/2] = [0, {}]", mu / 2.0)));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    Ok((-t * t / (2.0 * mu)).exp())
}

/// Exact `P[X < x]` for `X ~ Bin(n, p)`, summed in log space.
pub fn binomial_lower_tail(n: u64, p: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if p <= 0.0 {
        return 1.0;
    }
    if p >= 1.0 {
        return if (n as f64) < x { 1.0 } else { 0.0 };
    }
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    let mut log_binom = 0.0f64;
    let mut total = 0.0;
    let mut j = 0u64;
    while j <= n && (j as f64) < x {
        total += (log_binom + j as f64 * lp + (n - j) as f64 * lq).exp();
        log_binom += ((n - j) as f64).ln() - ((j + 1) as f64).ln();
        j += 1;
    }
    total.min(1.0)
}

/// `k/2 − ½√(k ln k)`, below which the minimum degree falls w.h.p.
pub fn delta_envelope(k: usize) -> f64 {
    let k = k as f64;
    k / 2.0 - 0.5 * (k * k.ln()).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GmCheck {
    pub gm_bound: f64,
    pub i: Rational,
    /// `gm_bound ≥ i − 1e-6`.
    pub bound_holds: bool,
    /// `|gm_bound − i| ≤ 1e-6`.
    pub equal: bool,
}

/// Compares the Grone–Merris upper bound with `i(G)`, the latter by
/// exhaustive search.
pub fn gm_equality_check(g: &Graph, budget: &SearchBudget) -> Result<GmCheck> {
    let cut = isoperimetric_exact(g, budget)?;
    if !cut.certified {
        return Err(Error::Unsupported("exact search hit the time limit".into()));
    }
    Ok(gm_from(g, cut.value)?)
}

fn gm_from(g: &Graph, i: Rational) -> Result<GmCheck> {
    let gm = grone_merris_upper(g)?;
    let iv = to_f64(&i);
    Ok(GmCheck {
        gm_bound: gm,
        i,
        bound_holds: gm >= iv - 1e-6,
        equal: (gm - iv).abs() <= 1e-6,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitMode {
    /// Exact search when `2k` is at most [`EXPERIMENT_EXACT_MAX_N`].
    Auto,
    Exact,
    /// Local search over sets of size `k/2..=k`; only an upper bound on `i`.
    Heuristic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitTrial {
    pub stream: u64,
    pub delta: usize,
    /// Exact `i(G)` in exact mode, the best value found otherwise.
    pub i: Rational,
    pub exact: bool,
    pub gm: GmCheck,
    pub lemma: LemmaOutcome,
    pub below_envelope: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitExperiment {
    pub k: usize,
    pub seed: u64,
    pub exact: bool,
    pub trials: Vec<SplitTrial>,
    /// Fraction of trials with `i = δ`.
    pub fraction_equal: f64,
    pub mean_delta: f64,
    pub envelope: f64,
}

/// Samples `trials` graphs `G_{k,k}` (stream `t` of `seed` for trial `t`)
/// and records `i`, `δ`, the Grone–Merris bound and the small-set lemma
/// for each.
pub fn experiment_i_equals_delta(
    k: usize,
    trials: usize,
    seed: u64,
    mode: SplitMode,
    budget: &SearchBudget,
) -> Result<SplitExperiment> {
    if trials == 0 {
        return Err(Error::Input("need at least one trial".into()));
    }
    let exact = match mode {
        SplitMode::Auto => 2 * k <= EXPERIMENT_EXACT_MAX_N,
        SplitMode::Exact => true,
        SplitMode::Heuristic => false,
    };
    let envelope = delta_envelope(k);
    let run = |t: u64| -> Result<SplitTrial> {
        let s = sample_split_stream(k, k, seed, t)?;
        let g = &s.graph;
        let delta = g.min_degree();
        let i = if exact {
            let cut = isoperimetric_exact(g, budget)?;
            if !cut.certified {
                return Err(Error::Unsupported(format!("trial {t}: exact search hit the time limit")));
            }
            cut.value
        } else {
            heuristic_upper(&s)
        };
        Ok(SplitTrial {
            stream: t,
            delta,
            gm: gm_from(g, i)?,
            lemma: lemma_small_set_check(&s),
            below_envelope: (delta as f64) <= envelope,
            i,
            exact,
        })
    };
    let trials: Vec<SplitTrial> = (0..trials as u64)
        .into_par_iter()
        .map(run)
        .collect::<Result<_>>()?;
    let equal = trials
        .iter()
        .filter(|t| t.i == Rational::from_integer(t.delta as i64))
        .count();
    let count = trials.len() as f64;
    Ok(SplitExperiment {
        k,
        seed,
        exact,
        fraction_equal: equal as f64 / count,
        mean_delta: trials.iter().map(|t| t.delta as f64).sum::<f64>() / count,
        envelope,
        trials,
    })
}

/// Best ratio from singletons and swap-descent over sets of size
/// `k/2..=k`, started from the clique part truncated to that size.
fn heuristic_upper(s: &SplitSample) -> Rational {
    let g = &s.graph;
    let n = g.n();
    let mut best = Rational::from_integer(g.min_degree() as i64);
    for m in (s.k / 2).max(1)..=s.k.min(n / 2) {
        let mut inside = vec![false; n];
        for v in 0..m {
            inside[v] = true;
        }
        let set_of = |inside: &[bool]| -> Vec<usize> { (0..n).filter(|&v| inside[v]).collect() };
        let mut boundary = g.boundary(&set_of(&inside)) as i64;
        loop {
            let mut improved = false;
            'scan: for a in 0..n {
                if !inside[a] {
                    continue;
                }
                for b in 0..n {
                    if inside[b] {
                        continue;
                    }
                    inside[a] = false;
                    inside[b] = true;
                    let nb = g.boundary(&set_of(&inside)) as i64;
                    if nb < boundary {
                        boundary = nb;
                        improved = true;
                        break 'scan;
                    }
                    inside[a] = true;
                    inside[b] = false;
                }
            }
            if !improved {
                break;
            }
        }
        best = best.min(Rational::new(boundary, m as i64));
    }
    best
}
