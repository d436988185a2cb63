//! Spectra of graphs and the classical spectral bounds on `i(G)`.

mod eigen;

pub use eigen::{eig_sym, eig_sym_vectors};

use crate::error::{input, Error, Result};
use crate::graph::{common_neighbor_stats, cut_metrics, Graph};
use crate::rational::to_f64;

/// Default tolerance for grouping eigenvalues into distinct values.
pub const GROUP_TOL: f64 = 1e-6;
/// Tolerance for equality in bound/tightness comparisons.
pub const TIGHT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    /// Adjacency eigenvalues, descending.
    Adjacency,
    /// Laplacian eigenvalues, ascending.
    Laplacian,
}

/// Eigenvalues with multiplicity grouping.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub kind: SpectrumKind,
    pub values: Vec<f64>,
    /// Distinct values (group means) with multiplicities, in the order of `values`.
    pub distinct: Vec<(f64, usize)>,
    pub tol: f64,
}

impl Spectrum {
    pub fn new(kind: SpectrumKind, mut values: Vec<f64>, tol: f64) -> Spectrum {
        match kind {
            SpectrumKind::Adjacency => values.sort_by(|a, b| b.total_cmp(a)),
            SpectrumKind::Laplacian => values.sort_by(|a, b| a.total_cmp(b)),
        }
        let mut groups: Vec<Vec<f64>> = Vec::new();
        for &x in &values {
            match groups.last_mut() {
                Some(g) if (g[g.len() - 1] - x).abs() <= tol => g.push(x),
                _ => groups.push(vec![x]),
            }
        }
        let distinct = groups
            .iter()
            .map(|g| (g.iter().sum::<f64>() / g.len() as f64, g.len()))
            .collect();
        Spectrum {
            kind,
            values,
            distinct,
            tol,
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `d`: the number of distinct values besides the first.
    pub fn d(&self) -> usize {
        self.distinct.len().saturating_sub(1)
    }

    /// Largest value.
    pub fn max(&self) -> f64 {
        match self.kind {
            SpectrumKind::Adjacency => self.values[0],
            SpectrumKind::Laplacian => self.values[self.n() - 1],
        }
    }

    /// Smallest value.
    pub fn min(&self) -> f64 {
        match self.kind {
            SpectrumKind::Adjacency => self.values[self.n() - 1],
            SpectrumKind::Laplacian => self.values[0],
        }
    }

    /// The value at 1-based position `i` in the stored order.
    pub fn at(&self, i: usize) -> f64 {
        self.values[i - 1]
    }
}

pub fn adjacency_spectrum(g: &Graph) -> Spectrum {
    adjacency_spectrum_tol(g, GROUP_TOL)
}

pub fn adjacency_spectrum_tol(g: &Graph, tol: f64) -> Spectrum {
    let vals = eig_sym(&g.adjacency_matrix(), g.n()).expect("adjacency matrices are symmetric");
    Spectrum::new(SpectrumKind::Adjacency, vals, tol)
}

pub fn laplacian_matrix(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut l: Vec<f64> = g.adjacency_matrix().iter().map(|x| -x).collect();
    for v in 0..n {
        l[v * n + v] = g.degree(v) as f64;
    }
    l
}

pub fn laplacian_spectrum(g: &Graph) -> Spectrum {
    laplacian_spectrum_tol(g, GROUP_TOL)
}

pub fn laplacian_spectrum_tol(g: &Graph, tol: f64) -> Spectrum {
    let vals = eig_sym(&laplacian_matrix(g), g.n()).expect("Laplacians are symmetric");
    Spectrum::new(SpectrumKind::Laplacian, vals, tol)
}

/// `μ₂`, the second smallest Laplacian eigenvalue.
pub fn algebraic_connectivity(g: &Graph) -> f64 {
    let s = laplacian_spectrum(g);
    if s.n() < 2 {
        0.0
    } else {
        s.at(2)
    }
}

/// The lower bound `μ₂/2` and the upper bound `sqrt(μ₂(2d₁ − μ₂))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoharBounds {
    pub lower: f64,
    pub upper: f64,
    pub disconnected: bool,
    /// Set when the upper bound falls below the lower one (`2d₁ = μ₂`, as for K₂).
    pub degenerate: bool,
}

pub fn mohar_bounds(g: &Graph) -> Result<MoharBounds> {
    if g.n() < 2 {
        return input("bounds need at least two vertices");
    }
    let mu2 = algebraic_connectivity(g);
    let disconnected = !g.is_connected();
    let lower = if disconnected { 0.0 } else { mu2 / 2.0 };
    let d1 = g.max_degree() as f64;
    let slack = 2.0 * d1 - mu2;
    let upper = if slack <= TIGHT_TOL { 0.0 } else { (mu2 * slack).sqrt() };
    Ok(MoharBounds {
        lower,
        upper,
        disconnected,
        degenerate: upper + TIGHT_TOL < lower,
    })
}

/// `⌈n/2⌉ μₙ / n`, for regular graphs.
pub fn qkm_upper(g: &Graph) -> Result<f64> {
    g.regular_degree().ok_or(Error::Irregular)?;
    if g.n() < 2 {
        return input("bounds need at least two vertices");
    }
    let n = g.n();
    Ok(n.div_ceil(2) as f64 * laplacian_spectrum(g).max() / n as f64)
}

/// The minimum over `⌈n/2⌉ ≤ m < n` of `Σ_{i ≤ m} (μ_{n+1−i} − d_i)`, with
/// Laplacian eigenvalues and degrees both taken in decreasing order.
pub fn grone_merris_upper(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n < 2 {
        return input("bounds need at least two vertices");
    }
    let mut mu = laplacian_spectrum(g).values;
    mu.reverse();
    let mut deg = g.degrees();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    let mut best = f64::INFINITY;
    let mut partial = 0.0;
    for m in 1..n {
        partial += mu[m - 1] - deg[m - 1] as f64;
        if m >= n.div_ceil(2) {
            best = best.min(partial);
        }
    }
    Ok(best)
}

/// Block-averaged matrix of a symmetric matrix under a vertex partition.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    /// Row-major `m x m` matrix.
    pub b: Vec<f64>,
    pub m: usize,
    pub partition: Vec<Vec<usize>>,
    /// Every row of every block pair has the same sum.
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.b[i * self.m + j]
    }

    /// Eigenvalues of `B`, which is similar to a symmetric matrix.
    pub fn eigenvalues(&self) -> Vec<f64> {
        // D^{1/2} B D^{-1/2} with D = diag(|P_i|) is symmetric.
        let m = self.m;
        let sizes: Vec<f64> = self.partition.iter().map(|p| p.len() as f64).collect();
        let sym: Vec<f64> = (0..m * m)
            .map(|k| {
                let (i, j) = (k / m, k % m);
                self.b[k] * (sizes[i] / sizes[j]).sqrt()
            })
            .collect();
        // Symmetrize away rounding noise.
        let sym: Vec<f64> = (0..m * m)
            .map(|k| {
                let (i, j) = (k / m, k % m);
                0.5 * (sym[i * m + j] + sym[j * m + i])
            })
            .collect();
        eig_sym(&sym, m).expect("symmetrized quotient")
    }
}

/// Quotient of the `n x n` symmetric matrix `a` by `partition`.
pub fn quotient_matrix(a: &[f64], n: usize, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    if a.len() != n * n {
        return input("matrix size does not match n");
    }
    let mut block = vec![usize::MAX; n];
    for (i, p) in partition.iter().enumerate() {
        if p.is_empty() {
            return input(format!("block {i} is empty"));
        }
        for &v in p {
            if v >= n {
                return input(format!("vertex {v} outside 0..{n}"));
            }
            if block[v] != usize::MAX {
                return input(format!("vertex {v} appears in two blocks"));
            }
            block[v] = i;
        }
    }
    if let Some(v) = block.iter().position(|&b| b == usize::MAX) {
        return input(format!("vertex {v} is in no block"));
    }
    let m = partition.len();
    let mut b = vec![0.0; m * m];
    let mut equitable = true;
    for (i, p) in partition.iter().enumerate() {
        let mut sums = vec![vec![0.0; m]; p.len()];
        for (r, &u) in p.iter().enumerate() {
            for v in 0..n {
                sums[r][block[v]] += a[u * n + v];
            }
        }
        for j in 0..m {
            let total: f64 = sums.iter().map(|s| s[j]).sum();
            b[i * m + j] = total / p.len() as f64;
            if sums.iter().any(|s| (s[j] - sums[0][j]).abs() > 1e-12) {
                equitable = false;
            }
        }
    }
    Ok(QuotientMatrix {
        b,
        m,
        partition: partition.to_vec(),
        equitable,
    })
}

/// Interlacing sandwich `(1−|S|/n)μ₂ ≤ i_G(S) ≤ (1−|S|/n)μₙ` for a regular graph.
#[derive(Debug, Clone, PartialEq)]
pub struct InterlaceReport {
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    pub tight_lower: bool,
    pub tight_upper: bool,
    /// Whether `{S, V∖S}` is equitable; checked when a bound is tight.
    pub intriguing: Option<bool>,
}

pub fn interlace_bounds(g: &Graph, set: &[usize]) -> Result<InterlaceReport> {
    g.regular_degree().ok_or(Error::Irregular)?;
    let cut = cut_metrics(g, set)?;
    let n = g.n();
    let lap = laplacian_spectrum(g);
    let f = 1.0 - set.len() as f64 / n as f64;
    let lower = f * lap.at(2);
    let upper = f * lap.max();
    let value = to_f64(&cut.i);
    let tight_lower = (value - lower).abs() <= TIGHT_TOL;
    let tight_upper = (value - upper).abs() <= TIGHT_TOL;
    let intriguing = (tight_lower || tight_upper).then(|| is_equitable_cut(g, set));
    Ok(InterlaceReport {
        lower,
        value,
        upper,
        tight_lower,
        tight_upper,
        intriguing,
    })
}

pub(crate) fn is_equitable_cut(g: &Graph, set: &[usize]) -> bool {
    let rest: Vec<usize> = (0..g.n()).filter(|v| !set.contains(v)).collect();
    let a = g.adjacency_matrix();
    quotient_matrix(&a, g.n(), &[set.to_vec(), rest]).is_ok_and(|q| q.equitable)
}

/// `η ≤ λ₁ + λₙ`, where `η` is the least number of common neighbours of
/// adjacent vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaLambda {
    pub eta: usize,
    pub lambda_sum: f64,
    pub holds: bool,
}

pub fn eta_lambda_check(g: &Graph) -> Result<EtaLambda> {
    let stats = common_neighbor_stats(g)?;
    let s = adjacency_spectrum(g);
    let lambda_sum = s.max() + s.min();
    Ok(EtaLambda {
        eta: stats.eta,
        lambda_sum,
        holds: stats.eta as f64 <= lambda_sum + TIGHT_TOL,
    })
}

/// Same adjacency and Laplacian spectra, entrywise within `1e-7`.
pub fn cospectral(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() {
        return input(format!("graphs have {} and {} vertices", g.n(), h.n()));
    }
    let same = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-7);
    Ok(same(&adjacency_spectrum(g).values, &adjacency_spectrum(h).values)
        && same(&laplacian_spectrum(g).values, &laplacian_spectrum(h).values))
}
