//! Parametric families and graph operations.

use std::str::FromStr;

use super::{distances, Graph};
use crate::error::{input, Error, Result};

/// Parametric families accepted by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    Hypercube,
    Hamming,
    Johnson,
    Grassmann,
    CompleteSplit,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "complete" => Family::Complete,
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete_bipartite" => Family::CompleteBipartite,
            "hypercube" => Family::Hypercube,
            "hamming" => Family::Hamming,
            "johnson" => Family::Johnson,
            "grassmann" => Family::Grassmann,
            "complete_split" => Family::CompleteSplit,
            _ => return input(format!("unknown graph family '{s}'")),
        })
    }
}

/// Builds a member of `family` from its integer parameters.
///
/// Parameters: `complete(n)`, `path(n)`, `cycle(n)`, `complete_bipartite(a, b)`,
/// `hypercube(d)`, `hamming(n, q)`, `johnson(n, k)`, `grassmann(q, n, k)`,
/// `complete_split(p, q)`.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    let want = match family {
        Family::Complete | Family::Path | Family::Cycle | Family::Hypercube => 1,
        Family::Grassmann => 3,
        _ => 2,
    };
    if params.len() != want {
        return input(format!(
            "{family:?} takes {want} parameter(s), got {}",
            params.len()
        ));
    }
    let p = params;
    match family {
        Family::Complete => complete(p[0]),
        Family::Path => path(p[0]),
        Family::Cycle => cycle(p[0]),
        Family::CompleteBipartite => complete_bipartite(p[0], p[1]),
        Family::Hypercube => hypercube(p[0]),
        Family::Hamming => hamming(p[0], p[1]),
        Family::Johnson => johnson(p[0], p[1]),
        Family::Grassmann => grassmann(p[0], p[1], p[2]),
        Family::CompleteSplit => complete_split(p[0], p[1]),
    }
}

fn positive(name: &str, values: &[usize]) -> Result<()> {
    if values.iter().any(|&v| v == 0) {
        return input(format!("{name}: parameters must be positive"));
    }
    Ok(())
}

pub fn complete(n: usize) -> Result<Graph> {
    positive("complete", &[n])?;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    Ok(g.with_name(format!("K{n}")))
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    positive("path", &[n])?;
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.set_edge(v - 1, v);
    }
    Ok(g.with_name(format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return input("cycle needs at least 3 vertices");
    }
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.set_edge(v, (v + 1) % n);
    }
    Ok(g.with_name(format!("C{n}")))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    positive("complete_bipartite", &[a, b])?;
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.set_edge(u, v);
        }
    }
    Ok(g.with_name(format!("K{a},{b}")))
}

/// The `d`-cube; vertices are bit strings, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    positive("hypercube", &[d])?;
    if d > 20 {
        return input("hypercube dimension above 20");
    }
    let n = 1usize << d;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for b in 0..d {
            let v = u ^ (1 << b);
            if v > u {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g.with_name(format!("Q{d}")))
}

/// The Hamming graph `H(n, q)`: words of length `n` over `q` symbols,
/// adjacent when they differ in one position.
pub fn hamming(n: usize, q: usize) -> Result<Graph> {
    positive("hamming", &[n, q])?;
    let size = q
        .checked_pow(n as u32)
        .filter(|&s| s <= 1 << 16)
        .ok_or_else(|| Error::Input("hamming graph too large".into()))?;
    let mut g = Graph::empty(size);
    for u in 0..size {
        let mut place = 1;
        for _ in 0..n {
            let digit = (u / place) % q;
            for d in digit + 1..q {
                g.set_edge(u, u + (d - digit) * place);
            }
            place *= q;
        }
    }
    Ok(g.with_name(format!("H({n},{q})")))
}

/// The Johnson graph `J(n, k)`: `k`-subsets of an `n`-set, adjacent when
/// they share `k - 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    positive("johnson", &[n, k])?;
    if k > n || n > 24 {
        return input("johnson needs 1 <= k <= n <= 24");
    }
    let sets: Vec<u64> = (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .collect();
    let mut g = Graph::empty(sets.len());
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate().skip(i + 1) {
            if (a & b).count_ones() as usize == k - 1 {
                g.set_edge(i, j);
            }
        }
    }
    Ok(g.with_name(format!("J({n},{k})")))
}

pub(crate) fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// The Grassmann graph `J_q(n, k)` over the prime field `F_q`: `k`-dimensional
/// subspaces of `F_q^n`, adjacent when they meet in dimension `k - 1`.
pub fn grassmann(q: usize, n: usize, k: usize) -> Result<Graph> {
    positive("grassmann", &[q, n, k])?;
    if !is_prime(q) {
        return Err(Error::Unsupported(format!(
            "grassmann needs a prime field size, got q = {q}"
        )));
    }
    if k > n || n > 8 {
        return input("grassmann needs 1 <= k <= n <= 8");
    }
    let spaces = rref_bases(q, n, k);
    if spaces.len() > 5000 {
        return input("grassmann graph too large");
    }
    let mut g = Graph::empty(spaces.len());
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            let mut stacked = spaces[i].clone();
            stacked.extend(spaces[j].iter().cloned());
            if rank_mod(stacked, q) == k + 1 {
                g.set_edge(i, j);
            }
        }
    }
    Ok(g.with_name(format!("J_{q}({n},{k})")))
}

/// All `k x n` matrices over `F_q` in reduced row echelon form with rank `k`.
fn rref_bases(q: usize, n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for pivots in (0u32..1 << n).filter(|m| m.count_ones() as usize == k) {
        let pivot_cols: Vec<usize> = (0..n).filter(|&c| pivots >> c & 1 == 1).collect();
        // Free positions: right of the row's pivot, not in a pivot column.
        let free: Vec<(usize, usize)> = pivot_cols
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                (pc + 1..n)
                    .filter(move |&c| pivots >> c & 1 == 0)
                    .map(move |c| (r, c))
            })
            .collect();
        let total = q.pow(free.len() as u32);
        for code in 0..total {
            let mut m = vec![vec![0; n]; k];
            for (r, &pc) in pivot_cols.iter().enumerate() {
                m[r][pc] = 1;
            }
            let mut c = code;
            for &(r, col) in &free {
                m[r][col] = c % q;
                c /= q;
            }
            out.push(m);
        }
    }
    out
}

fn inv_mod(a: usize, q: usize) -> usize {
    (1..q).find(|&x| a * x % q == 1).expect("nonzero element of a prime field")
}

fn rank_mod(mut m: Vec<Vec<usize>>, q: usize) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = inv_mod(m[rank][c], q);
        for x in m[rank].iter_mut() {
            *x = *x * inv % q;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..cols {
                    m[r][j] = (m[r][j] + q * q - f * m[rank][j] % q) % q;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The complete split graph: a clique on `0..p` joined to every vertex of an
/// independent set `p..p+q`.
pub fn complete_split(p: usize, q: usize) -> Result<Graph> {
    if p + q == 0 {
        return input("complete_split needs at least one vertex");
    }
    let mut g = Graph::empty(p + q);
    for u in 0..p {
        for v in u + 1..p + q {
            g.set_edge(u, v);
        }
    }
    Ok(g.with_name(format!("S{p},{q}")))
}

/// Cartesian product; vertex `(v, w)` gets index `v * |H| + w`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return input("cartesian product of an empty graph");
    }
    let m = h.n();
    let mut p = Graph::empty(g.n() * m);
    for (a, b) in g.edges() {
        for w in 0..m {
            p.set_edge(a * m + w, b * m + w);
        }
    }
    for v in 0..g.n() {
        for (a, b) in h.edges() {
            p.set_edge(v * m + a, v * m + b);
        }
    }
    let name = match (g.name(), h.name()) {
        (Some(a), Some(b)) => format!("{a} x {b}"),
        _ => "product".into(),
    };
    Ok(p.with_name(name))
}

/// `G^t`: vertices adjacent when their distance in `G` is between 1 and `t`.
pub fn graph_power(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return input("graph power needs t >= 1");
    }
    let d = distances(g);
    let mut p = Graph::empty(g.n());
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if d.get(u, v).is_some_and(|x| x as usize <= t) {
                p.set_edge(u, v);
            }
        }
    }
    let name = g.name().map_or_else(|| format!("G^{t}"), |s| format!("{s}^{t}"));
    Ok(p.with_name(name))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut c = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                c.set_edge(u, v);
            }
        }
    }
    match g.name() {
        Some(s) => c.with_name(format!("complement of {s}")),
        None => c,
    }
}

/// Disjoint union, with the vertices of `h` shifted by `|G|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut u = Graph::empty(g.n() + h.n());
    for (a, b) in g.edges() {
        u.set_edge(a, b);
    }
    for (a, b) in h.edges() {
        u.set_edge(g.n() + a, g.n() + b);
    }
    u
}

/// Godsil–McKay switching with respect to `u`.
///
/// Every vertex outside `u` must see 0, |U|/2 or |U| neighbours in `u`;
/// those seeing exactly half have their adjacencies to `u` complemented.
/// The result is cospectral with `g` when `u` also induces a regular
/// subgraph; that part is left to the caller.
pub fn gm_switch(g: &Graph, u: &[usize]) -> Result<Graph> {
    g.check_set(u)?;
    if u.is_empty() || u.len() % 2 == 1 {
        return input(format!("switching set must have even positive size, got {}", u.len()));
    }
    let inside = g.mask(u);
    let mut h = g.clone();
    for v in 0..g.n() {
        if inside[v / super::WORD] >> (v % super::WORD) & 1 == 1 {
            continue;
        }
        let count = u.iter().filter(|&&x| g.has_edge(v, x)).count();
        if count == u.len() / 2 {
            for &x in u {
                if g.has_edge(v, x) {
                    h.clear_edge(v, x);
                } else {
                    h.set_edge(v, x);
                }
            }
        } else if count != 0 && count != u.len() {
            return Err(Error::SwitchingInvalid {
                vertex: v,
                count,
                size: u.len(),
            });
        }
    }
    let name = g.name().map_or_else(|| "switched".into(), |s| format!("{s} switched"));
    Ok(h.with_name(name))
}
