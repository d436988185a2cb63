//! Spectral bounds on the isoperimetric number of graph powers `G^t`.
//!
//! Every bound here starts from a polynomial `p` of degree at most `t`: the
//! matrix `p(A)` vanishes on pairs at distance more than `t`, so interlacing
//! on `p(A)` bounds `i(G^t)` through the spectrum of `G` alone.

mod sweep;

pub use sweep::{lp_lower_sweep, lp_upper_sweep, SweepOptions, SweepResult};

use std::collections::HashMap;
use std::fmt;

use crate::error::{input, Error, Result};
use crate::graph::{common_neighbor_stats, distances, graph_power, DistanceMatrix, Graph};
use crate::spectra::{adjacency_spectrum, Spectrum};

/// Relative slack used when checking bound preconditions.
const COND_TOL: f64 = 1e-9;

/// A real polynomial `a₀ + a₁x + … + a_t x^t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Poly {
        Poly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Poly {
        Poly::new(vec![0.0, 1.0])
    }

    /// Index of the highest non-zero coefficient (0 for constants).
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// `alpha * p + beta`.
    pub fn affine(&self, alpha: f64, beta: f64) -> Poly {
        let mut c: Vec<f64> = self.coeffs.iter().map(|a| a * alpha).collect();
        if c.is_empty() {
            c.push(0.0);
        }
        c[0] += beta;
        Poly::new(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            // `{:.4}` trims coefficients to 4 decimals.
            let c = match f.precision() {
                Some(p) => {
                    let s = format!("{c:.p$}");
                    let s = s.trim_end_matches('0').trim_end_matches('.');
                    if s == "-0" || s == "0" {
                        continue;
                    }
                    s.to_string()
                }
                None => c.to_string(),
            };
            terms.push(match i {
                0 => c,
                1 => format!("{c}x"),
                _ => format!("{c}x^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// Matrix powers, spectrum and distances of a regular graph, shared by all
/// bounds computed for one `(G, t)`.
#[derive(Debug, Clone)]
pub struct PowerContext {
    n: usize,
    t: usize,
    powers: Vec<Vec<f64>>,
    spectrum: Spectrum,
    dist: DistanceMatrix,
}

impl PowerContext {
    pub fn new(g: &Graph, t: usize) -> Result<PowerContext> {
        if t == 0 {
            return input("the power t must be at least 1");
        }
        if g.n() == 0 {
            return input("graph has no vertices");
        }
        if g.regular_degree().is_none() {
            return Err(Error::Irregular);
        }
        let n = g.n();
        let mut powers = Vec::with_capacity(t + 1);
        let mut id = vec![0.0; n * n];
        for v in 0..n {
            id[v * n + v] = 1.0;
        }
        powers.push(id);
        for i in 1..=t {
            let prev = &powers[i - 1];
            let mut next = vec![0.0; n * n];
            for r in 0..n {
                for k in g.neighbors(r) {
                    let src = &prev[k * n..(k + 1) * n];
                    let dst = &mut next[r * n..(r + 1) * n];
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d += s;
                    }
                }
            }
            powers.push(next);
        }
        // Walk counts must stay exactly representable.
        if powers[t].iter().any(|&x| x > 9.0e15) {
            return Err(Error::Unsupported(format!(
                "walk counts of A^{t} are too large for exact floating-point arithmetic"
            )));
        }
        Ok(PowerContext {
            n,
            t,
            powers,
            spectrum: adjacency_spectrum(g),
            dist: distances(g),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// `(A^i)_{uv}`.
    pub fn power_entry(&self, i: usize, u: usize, v: usize) -> f64 {
        self.powers[i][u * self.n + v]
    }

    /// The dense matrix `p(A)`, row-major.
    pub fn eval_matrix(&self, p: &Poly) -> Result<Vec<f64>> {
        self.check_degree(p)?;
        let mut m = vec![0.0; self.n * self.n];
        for (i, &c) in p.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            for (x, a) in m.iter_mut().zip(&self.powers[i]) {
                *x += c * a;
            }
        }
        Ok(m)
    }

    /// Vertex pairs `u < v` grouped by their walk-count tuple
    /// `((A⁰)_{uv}, …, (A^t)_{uv})`, in order of first appearance. Pairs at
    /// distance more than `t` (all-zero tuple) are left out.
    pub fn pair_classes(&self) -> Vec<PairClass> {
        let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut out: Vec<PairClass> = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let key: Vec<u64> = (0..=self.t).map(|i| self.power_entry(i, u, v) as u64).collect();
                if key.iter().all(|&x| x == 0) {
                    continue;
                }
                match index.get(&key) {
                    Some(&k) => out[k].count += 1,
                    None => {
                        index.insert(key.clone(), out.len());
                        out.push(PairClass {
                            pair: (u, v),
                            walks: key,
                            count: 1,
                        });
                    }
                }
            }
        }
        out
    }

    fn check_degree(&self, p: &Poly) -> Result<()> {
        if p.degree() > self.t {
            return input(format!("polynomial degree {} exceeds t = {}", p.degree(), self.t));
        }
        if p.coeffs.iter().any(|c| !c.is_finite()) {
            return input("polynomial has a non-finite coefficient");
        }
        Ok(())
    }

    pub fn stats(&self, p: &Poly) -> Result<PolyStats> {
        self.check_degree(p)?;
        let m = self.eval_matrix(p)?;
        let n = self.n;
        let rest = &self.spectrum.values[1..];
        let mut big_w = f64::NEG_INFINITY;
        let mut small_w = f64::INFINITY;
        for u in 0..n {
            for v in u + 1..n {
                let x = m[u * n + v];
                big_w = big_w.max(x);
                let d = self.dist.raw(u, v);
                if d >= 1 && d as usize <= self.t {
                    small_w = small_w.min(x);
                }
            }
        }
        Ok(PolyStats {
            p_lambda1: p.eval(self.spectrum.values[0]),
            big_lambda: rest.iter().map(|&x| p.eval(x)).fold(f64::NEG_INFINITY, f64::max),
            small_lambda: rest.iter().map(|&x| p.eval(x)).fold(f64::INFINITY, f64::min),
            big_w,
            small_w,
        })
    }

    pub fn lower_bound(&self, p: &Poly) -> Result<PowerBound> {
        let s = self.stats(p)?;
        if s.big_w.is_nan() || s.big_w <= 0.0 || !s.big_w.is_finite() {
            return Err(Error::Inapplicable(format!("W(p) = {} is not positive", s.big_w)));
        }
        let scale = 1.0 + s.p_lambda1.abs().max(s.big_lambda.abs());
        if s.p_lambda1 < s.big_lambda - COND_TOL * scale {
            return Err(Error::Inapplicable(format!(
                "p(λ₁) = {} is below Λ(p) = {}",
                s.p_lambda1, s.big_lambda
            )));
        }
        let b = PowerBound {
            kind: BoundKind::Lower,
            t: self.t,
            n: self.n,
            value: 0.0,
            witness: p.clone(),
            p_lambda1: s.p_lambda1,
            spectral: s.big_lambda,
            entry: s.big_w,
        };
        Ok(b.with_recomputed_value())
    }

    pub fn upper_bound(&self, p: &Poly) -> Result<PowerBound> {
        let s = self.stats(p)?;
        if !(s.small_w > 0.0) || !s.small_w.is_finite() {
            return Err(Error::Inapplicable(format!("w(p) = {} is not positive", s.small_w)));
        }
        let b = PowerBound {
            kind: BoundKind::Upper,
            t: self.t,
            n: self.n,
            value: 0.0,
            witness: p.clone(),
            p_lambda1: s.p_lambda1,
            spectral: s.small_lambda,
            entry: s.small_w,
        };
        Ok(b.with_recomputed_value())
    }
}

/// Vertex pairs sharing one walk-count tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    /// First pair with this tuple.
    pub pair: (usize, usize),
    pub walks: Vec<u64>,
    pub count: usize,
}

/// The quantities entering the power bounds for one polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyStats {
    pub p_lambda1: f64,
    /// `Λ(p)`: max of `p(λ_i)` for `i ≥ 2` (one copy of `λ₁` removed).
    pub big_lambda: f64,
    /// `λ(p)`: min of `p(λ_i)` for `i ≥ 2`.
    pub small_lambda: f64,
    /// `W(p)`: largest off-diagonal entry of `p(A)`.
    pub big_w: f64,
    /// `w(p)`: smallest entry over pairs with `1 ≤ d(u,v) ≤ t`.
    pub small_w: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerBound {
    pub kind: BoundKind,
    pub t: usize,
    pub n: usize,
    pub value: f64,
    pub witness: Poly,
    pub p_lambda1: f64,
    /// `Λ(p)` for lower bounds, `λ(p)` for upper bounds.
    pub spectral: f64,
    /// `W(p)` for lower bounds, `w(p)` for upper bounds.
    pub entry: f64,
}

impl PowerBound {
    /// The bound value from the stored components.
    pub fn recompute(&self) -> f64 {
        match self.kind {
            BoundKind::Lower => (self.p_lambda1 - self.spectral) / (2.0 * self.entry),
            BoundKind::Upper => {
                half_up(self.n) * (self.p_lambda1 - self.spectral) / self.entry
            }
        }
    }

    fn with_recomputed_value(mut self) -> PowerBound {
        self.value = self.recompute();
        self
    }
}

/// `⌈n/2⌉ / n`.
pub(crate) fn half_up(n: usize) -> f64 {
    n.div_ceil(2) as f64 / n as f64
}

/// `Λ(p)`, `λ(p)`, `W(p)`, `w(p)` and `p(λ₁)` for `p` of degree at most `t`.
pub fn poly_matrix_stats(g: &Graph, t: usize, p: &Poly) -> Result<PolyStats> {
    PowerContext::new(g, t)?.stats(p)
}

/// `i(G^t) ≥ (p(λ₁) − Λ(p)) / (2 W(p))`.
pub fn poly_lower_bound(g: &Graph, t: usize, p: &Poly) -> Result<PowerBound> {
    PowerContext::new(g, t)?.lower_bound(p)
}

/// `i(G^t) ≤ (⌈n/2⌉/n) (p(λ₁) − λ(p)) / w(p)`.
pub fn poly_upper_bound(g: &Graph, t: usize, p: &Poly) -> Result<PowerBound> {
    PowerContext::new(g, t)?.upper_bound(p)
}

/// The cases of the optimal lower bound at `t = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LowerCase {
    I,
    II,
    III,
}

impl fmt::Display for LowerCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerCase::I => "i",
            LowerCase::II => "ii",
            LowerCase::III => "iii",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedLower {
    pub bound: PowerBound,
    /// Every case whose condition holds, up to a tolerance of 1e-9.
    pub cases: Vec<LowerCase>,
}

fn regular_connected(g: &Graph) -> Result<()> {
    if g.regular_degree().is_none() {
        return Err(Error::Irregular);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// The best lower bound on `i(G²)` obtainable from a quadratic polynomial.
pub fn closed_lower_t2(g: &Graph) -> Result<ClosedLower> {
    regular_connected(g)?;
    if g.is_complete() {
        return Err(Error::Inapplicable("graph is complete".into()));
    }
    let ctx = PowerContext::new(g, 2)?;
    let ns = common_neighbor_stats(g)?;
    let big_l = ns.lambda as f64;
    let m = ns.m.expect("connected non-complete graphs have pairs at distance 2") as f64;
    let sp = ctx.spectrum();
    let (l1, l2, ln) = (sp.values[0], sp.values[1], sp.min());

    let tol = |x: f64, y: f64| COND_TOL * (1.0 + x.abs().max(y.abs()));
    let le = |x: f64, y: f64| x <= y + tol(x, y);
    let mut cases = Vec::new();
    if le(big_l - ln, m + l2) {
        cases.push(LowerCase::I);
    }
    if le(m + l2, big_l - ln) && le(big_l - ln, l1) {
        cases.push(LowerCase::II);
    }
    if le(l1.max(m + l2), big_l - ln) {
        cases.push(LowerCase::III);
    }
    let (value, witness) = match cases[0] {
        LowerCase::I => (
            (l1 - l2) * (l1 + l2 + m - big_l) / (2.0 * m),
            Poly::new(vec![0.0, m - big_l, 1.0]),
        ),
        LowerCase::II => (
            (l1 - ln) * (l1 + ln + m - big_l) / (2.0 * m),
            Poly::new(vec![0.0, m - big_l, 1.0]),
        ),
        LowerCase::III => (
            (l1 - l2) * (l1 - ln) / (2.0 * (big_l - l2 - ln)),
            Poly::new(vec![0.0, -(l2 + ln), 1.0]),
        ),
    };
    let mut bound = ctx.lower_bound(&witness)?;
    bound.value = value;
    Ok(ClosedLower { bound, cases })
}

/// The best upper bound on `i(G²)` obtainable from a quadratic polynomial.
pub fn closed_upper_t2(g: &Graph) -> Result<PowerBound> {
    if g.regular_degree().is_none() {
        return Err(Error::Irregular);
    }
    let ns = common_neighbor_stats(g)?;
    let xi = match ns.xi {
        Some(x) => x as f64,
        None => return Err(Error::Inapplicable("graph is a disjoint union of complete graphs".into())),
    };
    let eta = ns.eta as f64;
    let ctx = PowerContext::new(g, 2)?;
    let sp = ctx.spectrum();
    let l1 = sp.values[0];
    let centre = (eta - xi) / 2.0;
    let li = sp.values[1..]
        .iter()
        .copied()
        .min_by(|a, b| (a - centre).abs().total_cmp(&(b - centre).abs()))
        .expect("a graph with an edge has at least two vertices");
    let value = half_up(g.n()) * (l1 - li) * (l1 + li + xi - eta) / xi;
    let mut bound = ctx.upper_bound(&Poly::new(vec![0.0, xi - eta, 1.0]))?;
    bound.value = value;
    Ok(bound)
}

/// A polynomial `p` of degree at most `t` with `p(A) = A(G^t)`, if one
/// reproduces every entry to within 1e-8.
pub fn fit_power_polynomial(g: &Graph, t: usize) -> Result<Option<Poly>> {
    let ctx = PowerContext::new(g, t)?;
    let target = graph_power(g, t)?.adjacency_matrix();
    let n = g.n();
    // Columns vec(A^i), scaled to unit norm for conditioning.
    let k = t + 1;
    let norms: Vec<f64> = (0..k)
        .map(|i| ctx.powers[i].iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0))
        .collect();
    let mut gram = vec![0.0; k * (k + 1)];
    for i in 0..k {
        for j in 0..k {
            let dot: f64 = ctx.powers[i].iter().zip(&ctx.powers[j]).map(|(a, b)| a * b).sum();
            gram[i * (k + 1) + j] = dot / (norms[i] * norms[j]);
        }
        let rhs: f64 = ctx.powers[i].iter().zip(&target).map(|(a, b)| a * b).sum();
        gram[i * (k + 1) + k] = rhs / norms[i];
    }
    let y = solve_rank_deficient(&mut gram, k);
    let coeffs: Vec<f64> = y.iter().zip(&norms).map(|(c, s)| c / s).collect();
    let p = Poly::new(coeffs);
    let m = ctx.eval_matrix(&p)?;
    let residual = m.iter().zip(&target).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    debug_assert_eq!(m.len(), n * n);
    Ok((residual < 1e-8).then_some(p))
}

/// Gauss-Jordan with complete pivoting on the `k × (k+1)` augmented system;
/// variables without a usable pivot are set to zero.
fn solve_rank_deficient(a: &mut [f64], k: usize) -> Vec<f64> {
    let w = k + 1;
    let mut cols: Vec<usize> = (0..k).collect();
    let mut rank = 0;
    let scale = a.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    for r in 0..k {
        let mut best = (0.0, r, r);
        for i in r..k {
            for j in r..k {
                let v = a[i * w + cols[j]].abs();
                if v > best.0 {
                    best = (v, i, j);
                }
            }
        }
        if best.0 <= 1e-12 * scale {
            break;
        }
        let (_, pi, pj) = best;
        for c in 0..w {
            a.swap(r * w + c, pi * w + c);
        }
        cols.swap(r, pj);
        let piv = a[r * w + cols[r]];
        for c in 0..w {
            a[r * w + c] /= piv;
        }
        for i in 0..k {
            if i != r {
                let f = a[i * w + cols[r]];
                if f != 0.0 {
                    for c in 0..w {
                        a[i * w + c] -= f * a[r * w + c];
                    }
                }
            }
        }
        rank += 1;
    }
    let mut x = vec![0.0; k];
    for r in 0..rank {
        x[cols[r]] = a[r * w + k];
    }
    x
}

/// The three bounds available when `A(G^t)` is a polynomial in `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct RelatedSpectra {
    pub poly: Poly,
    /// `(p(λ₁) − Λ(p)) / 2`.
    pub lower: f64,
    /// `sqrt(p(λ₁)² − Λ(p)²)`.
    pub mohar_upper: f64,
    /// `(⌈n/2⌉/n) (p(λ₁) − λ(p))`.
    pub qkm_upper: f64,
}

pub fn related_spectra_bounds(g: &Graph, t: usize) -> Result<RelatedSpectra> {
    let poly = fit_power_polynomial(g, t)?.ok_or_else(|| {
        Error::Inapplicable(format!("A(G^{t}) is not a polynomial in A of degree at most {t}"))
    })?;
    let ctx = PowerContext::new(g, t)?;
    let s = ctx.stats(&poly)?;
    Ok(RelatedSpectra {
        lower: (s.p_lambda1 - s.big_lambda) / 2.0,
        mohar_upper: (s.p_lambda1.powi(2) - s.big_lambda.powi(2)).max(0.0).sqrt(),
        qkm_upper: half_up(g.n()) * (s.p_lambda1 - s.small_lambda),
        poly,
    })
}
