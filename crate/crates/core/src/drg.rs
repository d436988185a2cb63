//! Distance-regular graphs: detection, intersection numbers, and the LP
//! relaxation of the sparsity.
//!
//! For a distance-regular graph the sparsity LP relaxation has optimum
//! `k₁ / Σ j·k_j`, attained by the metric `x_uv = d(u,v)/W_G`; the matching
//! dual solution is built here by back-substitution and checked row by row.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input, Error, Result};
use crate::graph::{distances, DistanceMatrix, Graph};
use crate::linprog::{check_feasible, solve_via_dual, LpProblem, LpSolution, Relation, Sense, VarBound};
use crate::rational::{ratio, Rational};

/// Largest order accepted by [`lp_linial_direct`].
pub const LINIAL_MAX_N: usize = 30;

/// `{b₀, …, b_{D−1}; c₁, …, c_D}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
    k: Vec<u64>,
}

impl IntersectionArray {
    /// Validates the array: `c₁ = 1`, `b` non-increasing and `c`
    /// non-decreasing (as for any distance-regular graph), `a_i ≥ 0`, and
    /// integral `k_j`.
    pub fn from_parameters(b: &[u64], c: &[u64]) -> Result<IntersectionArray> {
        if b.is_empty() || b.len() != c.len() {
            return input("need b₀..b_{D−1} and c₁..c_D of equal, positive length");
        }
        if c[0] != 1 {
            return input("c₁ must be 1");
        }
        let d = b.len();
        let kk = b[0];
        if b.iter().any(|&x| x == 0) || c.iter().any(|&x| x == 0) {
            return input("b_i (i < D) and c_i (i ≥ 1) must be positive");
        }
        if b.windows(2).any(|w| w[1] > w[0]) || c.windows(2).any(|w| w[1] < w[0]) {
            return input("b must be non-increasing and c non-decreasing");
        }
        for i in 1..=d {
            let bi = if i < d { b[i] } else { 0 };
            if bi + c[i - 1] > kk {
                return input(format!("a_{i} = k − b_{i} − c_{i} is negative"));
            }
        }
        let mut k = vec![1u64];
        for j in 1..=d {
            let num = k[j - 1]
                .checked_mul(b[j - 1])
                .ok_or_else(|| Error::Input("k_j overflows".into()))?;
            if num % c[j - 1] != 0 {
                return input(format!("k_{j} = {num}/{} is not an integer", c[j - 1]));
            }
            k.push(num / c[j - 1]);
        }
        Ok(IntersectionArray {
            b: b.to_vec(),
            c: c.to_vec(),
            k,
        })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    /// `b_i`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, with `c₀ = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k − b_i − c_i`.
    pub fn a(&self, i: usize) -> u64 {
        self.valency() - self.b(i) - self.c(i)
    }

    /// `k₀ = 1, …, k_D`.
    pub fn k_seq(&self) -> &[u64] {
        &self.k
    }

    pub fn n(&self) -> u64 {
        self.k.iter().sum()
    }

    /// `Σ_{j=1..D} j·k_j`, the sum of distances from one vertex.
    pub fn distance_sum(&self) -> u64 {
        self.k.iter().enumerate().map(|(j, &kj)| j as u64 * kj).sum()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    /// Parses `"b0,b1,…;c1,c2,…"`, optionally inside braces.
    fn from_str(s: &str) -> Result<IntersectionArray> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let (bs, cs) = s
            .split_once(';')
            .ok_or_else(|| Error::Input(format!("expected \"b0,..;c1,..\", got {s:?}")))?;
        let nums = |part: &str| -> Result<Vec<u64>> {
            part.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Input(format!("bad array entry {x:?}")))
                })
                .collect()
        };
        IntersectionArray::from_parameters(&nums(bs)?, &nums(cs)?)
    }
}

/// The intersection array of `g` if it is distance-regular.
///
/// Reads `c_i, a_i, b_i` off vertex 0, then checks them for every ordered
/// pair of vertices.
pub fn detect_drg(g: &Graph) -> Option<IntersectionArray> {
    let dist = distances(g);
    if g.n() == 0 || !dist.is_connected() {
        return None;
    }
    let d = dist.diameter()? as usize;
    if d == 0 {
        return None;
    }
    let profile = |u: usize, w: usize| -> (u64, u64, u64) {
        let i = dist.raw(u, w);
        let (mut c, mut a, mut b) = (0, 0, 0);
        for x in g.neighbors(w) {
            match dist.raw(u, x) {
                e if e + 1 == i => c += 1,
                e if e == i => a += 1,
                _ => b += 1,
            }
        }
        (c, a, b)
    };
    let mut table = vec![None; d + 1];
    for w in 0..g.n() {
        let i = dist.raw(0, w) as usize;
        table[i].get_or_insert(profile(0, w));
    }
    let table: Vec<(u64, u64, u64)> = table.into_iter().collect::<Option<_>>()?;
    for u in 0..g.n() {
        for w in 0..g.n() {
            if profile(u, w) != table[dist.raw(u, w) as usize] {
                return None;
            }
        }
    }
    let b: Vec<u64> = (0..d).map(|i| table[i].2).collect();
    let c: Vec<u64> = (1..=d).map(|i| table[i].0).collect();
    IntersectionArray::from_parameters(&b, &c).ok()
}

/// The tensor `p^h_{ij}` for `0 ≤ h, i, j ≤ D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionNumbers {
    d: usize,
    p: Vec<u64>,
}

impl IntersectionNumbers {
    pub fn diameter(&self) -> usize {
        self.d
    }

    /// `p^h_{ij}`; zero when an index exceeds the diameter.
    pub fn get(&self, h: usize, i: usize, j: usize) -> u64 {
        let w = self.d + 1;
        if h > self.d || i > self.d || j > self.d {
            return 0;
        }
        self.p[(h * w + i) * w + j]
    }
}

fn count_profile(dist: &DistanceMatrix, d: usize, u: usize, v: usize) -> Vec<u64> {
    let w = d + 1;
    let mut out = vec![0u64; w * w];
    for x in 0..dist.n() {
        out[dist.raw(u, x) as usize * w + dist.raw(v, x) as usize] += 1;
    }
    out
}

/// Counts `p^h_{ij}` on the graph from one pair at each distance `h` and
/// checks the counts on a second pair.
pub fn intersection_numbers(g: &Graph, array: &IntersectionArray) -> Result<IntersectionNumbers> {
    let dist = distances(g);
    let d = array.diameter();
    if dist.diameter() != Some(d as u32) || g.n() as u64 != array.n() {
        return Err(Error::NotDistanceRegular);
    }
    let w = d + 1;
    let mut p = vec![0u64; w * w * w];
    for h in 0..=d {
        let mut pairs = (0..g.n())
            .flat_map(|u| (0..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| dist.raw(u, v) as usize == h);
        let first = pairs.next().ok_or(Error::NotDistanceRegular)?;
        let last = pairs.last().unwrap_or(first);
        let a = count_profile(&dist, d, first.0, first.1);
        if count_profile(&dist, d, last.0, last.1) != a {
            return Err(Error::NotDistanceRegular);
        }
        p[h * w * w..(h + 1) * w * w].copy_from_slice(&a);
    }
    Ok(IntersectionNumbers { d, p })
}

/// One row of [`lemma_identity_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaRow {
    pub h: usize,
    /// `Σ_{i=1..h−1} 2i·k_i·p^i_{h,h−i}`.
    pub lhs: u128,
    /// `h·k_h·Σ_{i=1..h−1} p^h_{i,h−i}`.
    pub rhs: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub rows: Vec<LemmaRow>,
    pub holds: bool,
}

/// The counting identity behind the dual solution, for every `h` in `2..=D`:
/// `Σ_{i=1..h−1} 2i·k_i·p^i_{h,h−i} = h·k_h·Σ_{i=1..h−1} p^h_{i,h−i}`.
pub fn lemma_identity_check(array: &IntersectionArray, p: &IntersectionNumbers) -> LemmaCheck {
    let k = array.k_seq();
    let rows: Vec<LemmaRow> = (2..=array.diameter())
        .map(|h| {
            let lhs = (1..h)
                .map(|i| 2 * i as u128 * k[i] as u128 * p.get(i, h, h - i) as u128)
                .sum();
            let s: u128 = (1..h).map(|i| p.get(h, i, h - i) as u128).sum();
            LemmaRow {
                h,
                lhs,
                rhs: h as u128 * k[h] as u128 * s,
            }
        })
        .collect();
    LemmaCheck {
        holds: rows.iter().all(|r| r.lhs == r.rhs),
        rows,
    }
}

/// `k_i·p^i_{h−i,h} = k_{h−i}·p^{h−i}_{i,h}` for all `1 ≤ i < h ≤ D`.
pub fn double_counting_check(array: &IntersectionArray, p: &IntersectionNumbers) -> bool {
    let k = array.k_seq();
    (2..=array.diameter()).all(|h| {
        (1..h).all(|i| {
            k[i] as u128 * p.get(i, h - i, h) as u128 == k[h - i] as u128 * p.get(h - i, i, h) as u128
        })
    })
}

/// `k₁ / Σ_{j=1..D} j·k_j`, a lower bound on the sparsity.
pub fn drg_sparsity_bound(array: &IntersectionArray) -> Rational {
    ratio(array.valency() as i64, array.distance_sum() as i64)
}

/// `n·k₁ / (2·Σ_{j=1..D} j·k_j)`, a lower bound on `i(G)`.
pub fn drg_iso_lower(array: &IntersectionArray, n: u64) -> Result<Rational> {
    if n != array.n() {
        return input(format!("the array describes {} vertices, not {n}", array.n()));
    }
    Ok(ratio((n * array.valency()) as i64, (2 * array.distance_sum()) as i64))
}

/// A feasible solution of the restricted dual LP with `ψ = k₁/Σ j·k_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualCertificate {
    pub psi: Rational,
    /// `y₂, …, y_D`.
    pub y: Vec<f64>,
    pub y_exact: Vec<BigRational>,
    /// Largest violation over the rows of the restricted LP.
    pub max_residual: f64,
}

/// The restricted dual over `(ψ, y₂, …, y_D)`: maximize `ψ` subject to
/// `ψ = 1 − 2Σ_{i≥2} p¹_{i,i−1} y_i` and, for `h ≥ 2`,
/// `ψ = (Σ_{i=1..h−1} p^h_{i,h−i}) y_h − 2Σ_{i>h} p^h_{i,i−h} y_i`.
pub fn restricted_lp(p: &IntersectionNumbers) -> LpProblem {
    let d = p.diameter();
    let vars = d;
    let mut obj = vec![0.0; vars];
    obj[0] = 1.0;
    let mut lp = LpProblem::new(Sense::Maximize, obj);
    lp.set_bound(0, VarBound::Free);
    for h in 1..=d {
        let mut row = vec![0.0; vars];
        row[0] = 1.0;
        if h >= 2 {
            row[h - 1] -= (1..h).map(|i| p.get(h, i, h - i)).sum::<u64>() as f64;
        }
        for i in h + 1..=d {
            row[i - 1] += 2.0 * p.get(h, i, i - h) as f64;
        }
        lp.add(row, Relation::Eq, if h == 1 { 1.0 } else { 0.0 });
    }
    lp
}

fn big(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Builds `y_D, …, y₂` by back-substitution from `ψ = k₁/Σ j·k_j` and checks
/// positivity, the first row, and every row through the LP feasibility check.
pub fn restricted_dual_certificate(g: &Graph) -> Result<DualCertificate> {
    let array = detect_drg(g).ok_or(Error::NotDistanceRegular)?;
    let p = intersection_numbers(g, &array)?;
    let d = array.diameter();
    let psi_q = drg_sparsity_bound(&array);
    let psi = BigRational::new(BigInt::from(*psi_q.numer()), BigInt::from(*psi_q.denom()));
    // y[h] for h in 2..=d; slots 0 and 1 unused.
    let mut y = vec![BigRational::zero(); d + 1];
    for h in (2..=d).rev() {
        let s: u64 = (1..h).map(|i| p.get(h, i, h - i)).sum();
        if s == 0 {
            return Err(Error::Certificate(format!("no vertices between pairs at distance {h}")));
        }
        let mut rhs = psi.clone();
        for i in h + 1..=d {
            rhs += big(2 * p.get(h, i, i - h)) * &y[i];
        }
        y[h] = rhs / big(s);
        if !y[h].is_positive() {
            return Err(Error::Certificate(format!("y_{h} is not positive")));
        }
    }
    let mut first = BigRational::one();
    for i in 2..=d {
        first -= big(2 * p.get(1, i, i - 1)) * &y[i];
    }
    if first != psi {
        return Err(Error::Certificate(format!(
            "the adjacent-pair row gives ψ = {first}, expected {psi}"
        )));
    }
    let y_exact: Vec<BigRational> = y.into_iter().skip(2).collect();
    let y_f: Vec<f64> = y_exact.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
    let lp = restricted_lp(&p);
    let mut point = vec![crate::rational::to_f64(&psi_q)];
    point.extend(&y_f);
    let feas = check_feasible(&lp, &point, 1e-9);
    if !feas.feasible {
        return Err(Error::Certificate(format!(
            "restricted LP row {:?} violated by {}",
            feas.worst_index, feas.worst
        )));
    }
    Ok(DualCertificate {
        psi: psi_q,
        y: y_f,
        y_exact,
        max_residual: feas.worst,
    })
}

/// The metric assignment `x_uv = d(u,v)/W_G` for the sparsity LP.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimalReport {
    /// `|E| / W_G`.
    pub value: Rational,
    pub edges: u64,
    pub wiener: u64,
    /// All triangle rows hold (checked on the integer distances).
    pub triangles_hold: bool,
}

pub fn primal_value(g: &Graph) -> Result<PrimalReport> {
    let dist = distances(g);
    let wiener = dist.wiener_index().ok_or(Error::Disconnected)?;
    if wiener == 0 {
        return input("graph needs at least two vertices");
    }
    let n = g.n();
    let mut triangles_hold = true;
    'outer: for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if dist.raw(u, v) + dist.raw(v, w) < dist.raw(u, w) {
                    triangles_hold = false;
                    break 'outer;
                }
            }
        }
    }
    let edges = g.edge_count() as u64;
    Ok(PrimalReport {
        value: ratio(edges as i64, wiener as i64),
        edges,
        wiener,
        triangles_hold,
    })
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// The sparsity LP relaxation: minimize `Σ_{uv ∈ E} x_uv` subject to
/// `Σ_{u<v} x_uv ≥ 1`, every triangle inequality, and `x ≥ 0`.
pub fn linial_lp(g: &Graph) -> LpProblem {
    let n = g.n();
    let m = n * n.saturating_sub(1) / 2;
    let mut obj = vec![0.0; m];
    for (u, v) in g.edges() {
        obj[pair_index(n, u, v)] = 1.0;
    }
    let mut lp = LpProblem::new(Sense::Minimize, obj);
    lp.add(vec![1.0; m], Relation::Ge, 1.0);
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let (uv, vw, uw) = (pair_index(n, u, v), pair_index(n, v, w), pair_index(n, u, w));
                for (a, b, c) in [(uv, vw, uw), (uv, uw, vw), (uw, vw, uv)] {
                    let mut row = vec![0.0; m];
                    row[a] = 1.0;
                    row[b] = 1.0;
                    row[c] = -1.0;
                    lp.add(row, Relation::Ge, 0.0);
                }
            }
        }
    }
    lp
}

/// Solves the sparsity LP relaxation directly (through its dual, which has
/// far fewer rows).
pub fn lp_linial_direct(g: &Graph) -> Result<LpSolution> {
    if g.n() > LINIAL_MAX_N {
        return Err(Error::TooLarge {
            what: "direct sparsity LP (use the restricted dual certificate)".into(),
            n: g.n(),
            cap: LINIAL_MAX_N,
        });
    }
    if g.n() < 2 {
        return input("graph needs at least two vertices");
    }
    let sol = solve_via_dual(&linial_lp(g));
    if !sol.is_optimal() {
        return Err(Error::Certificate(format!(
            "sparsity LP ended with {:?}: {}",
            sol.status,
            sol.diagnostics.clone().unwrap_or_default()
        )));
    }
    Ok(sol)
}

/// The single-vertex approximation certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct SingletonCertificate {
    pub diameter: usize,
    /// `k/(n−1)`, the sparsity of a singleton.
    pub sigma_upper: Rational,
    /// `k/(D(n−1))`.
    pub sigma_lower: Rational,
    /// `sigma_upper / sigma_lower`.
    pub ratio: Rational,
    /// The singleton's `i` value, `k`.
    pub iso_upper: Rational,
    /// `n·σ_lower / 2`, a lower bound on `i(G)`.
    pub iso_lower: Rational,
    /// `ratio ≤ D` and `iso_upper / iso_lower ≤ 2D`.
    pub claim_holds: bool,
}

pub fn singleton_certificate(g: &Graph) -> Result<SingletonCertificate> {
    let array = detect_drg(g).ok_or(Error::NotDistanceRegular)?;
    let n = g.n() as i64;
    let k = array.valency() as i64;
    let d = array.diameter() as i64;
    let sigma_upper = ratio(k, n - 1);
    let sigma_lower = ratio(k, d * (n - 1));
    let r = sigma_upper / sigma_lower;
    let iso_upper = Rational::from_integer(k);
    let iso_lower = sigma_lower * Rational::from_integer(n) / Rational::from_integer(2);
    Ok(SingletonCertificate {
        diameter: d as usize,
        sigma_upper,
        sigma_lower,
        ratio: r,
        iso_upper,
        iso_lower,
        claim_holds: r <= Rational::from_integer(d)
            && iso_upper / iso_lower <= Rational::from_integer(2 * d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, hypercube, named, path};
    use crate::linprog::FEAS_TOL;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn array_parameters() {
        let a = arr("3,2;1,1");
        assert_eq!(a.k_seq(), &[1, 3, 6]);
        assert_eq!((a.n(), a.diameter(), a.a(1), a.a(2)), (10, 2, 0, 2));
        assert_eq!(a.to_string(), "{3,2;1,1}");
        assert_eq!(arr("{3,2,1,1,1;1,1,1,2,3}").k_seq(), &[1, 3, 6, 6, 3, 1]);
        assert!("3,2;2,1".parse::<IntersectionArray>().is_err());
        assert!("3,3;1,1".parse::<IntersectionArray>().is_err());
        assert_eq!(arr("3,2;1,3").n(), 6);
        assert!("3,2".parse::<IntersectionArray>().is_err());
        // k₂ = 3·2/4 is not integral.
        assert!("3,2;1,4".parse::<IntersectionArray>().is_err());
    }

    #[test]
    fn detection() {
        assert_eq!(detect_drg(&named("Petersen").unwrap()), Some(arr("3,2;1,1")));
        assert_eq!(detect_drg(&named("Dodecahedron").unwrap()), Some(arr("3,2,1,1,1;1,1,1,2,3")));
        assert_eq!(detect_drg(&named("Heawood").unwrap()), Some(arr("3,2,2;1,1,3")));
        assert_eq!(detect_drg(&complete(5).unwrap()), Some(arr("4;1")));
        assert_eq!(detect_drg(&named("Frucht").unwrap()), None);
        assert_eq!(detect_drg(&path(4).unwrap()), None);
        for g in [cycle(7).unwrap(), hypercube(4).unwrap()] {
            let a = detect_drg(&g).unwrap();
            assert_eq!(a.n(), g.n() as u64);
        }
    }

    #[test]
    fn intersection_counts() {
        let g = named("Petersen").unwrap();
        let p = intersection_numbers(&g, &detect_drg(&g).unwrap()).unwrap();
        assert_eq!(p.get(1, 1, 1), 0);
        assert_eq!(p.get(2, 1, 1), 1);
        assert_eq!(p.get(1, 2, 1), 2);
        assert_eq!(p.get(2, 2, 2), 3);
        let c6 = cycle(6).unwrap();
        let p = intersection_numbers(&c6, &detect_drg(&c6).unwrap()).unwrap();
        assert_eq!(p.get(2, 1, 1), 1);
        // Rows sum to k_i.
        let g = named("Dodecahedron").unwrap();
        let a = detect_drg(&g).unwrap();
        let p = intersection_numbers(&g, &a).unwrap();
        for h in 0..=5 {
            for i in 0..=5 {
                assert_eq!((0..=5).map(|j| p.get(h, i, j)).sum::<u64>(), a.k_seq()[i]);
                for j in 0..=5 {
                    assert_eq!(p.get(h, i, j), p.get(h, j, i));
                }
            }
        }
        assert!(intersection_numbers(&named("Frucht").unwrap(), &a).is_err());
    }

    #[test]
    fn lemma_identity() {
        let g = named("Petersen").unwrap();
        let a = detect_drg(&g).unwrap();
        let c = lemma_identity_check(&a, &intersection_numbers(&g, &a).unwrap());
        assert!(c.holds);
        // 2·1·k₁·p¹_{21} = 2·3·2 and 2·k₂·p²_{11} = 2·6·1.
        assert_eq!(c.rows, vec![LemmaRow { h: 2, lhs: 12, rhs: 12 }]);
        for g in [cycle(6).unwrap(), named("Dodecahedron").unwrap(), named("Desargues").unwrap()] {
            let a = detect_drg(&g).unwrap();
            let p = intersection_numbers(&g, &a).unwrap();
            assert!(lemma_identity_check(&a, &p).holds);
            assert!(double_counting_check(&a, &p));
        }
    }

    #[test]
    fn closed_bounds() {
        assert_eq!(drg_sparsity_bound(&detect_drg(&cycle(6).unwrap()).unwrap()), ratio(2, 9));
        assert_eq!(drg_sparsity_bound(&arr("3,2;1,1")), ratio(1, 5));
        assert_eq!(drg_sparsity_bound(&arr("3,2,1,1,1;1,1,1,2,3")), ratio(3, 50));
        assert_eq!(drg_iso_lower(&arr("3,2;1,1"), 10).unwrap(), ratio(1, 1));
        assert_eq!(drg_iso_lower(&arr("3,2,1,1,1;1,1,1,2,3"), 20).unwrap(), ratio(3, 5));
        let pappus = detect_drg(&named("Pappus").unwrap()).unwrap();
        let v = crate::rational::to_f64(&drg_iso_lower(&pappus, 18).unwrap());
        assert!((v - 0.66).abs() < 0.01);
        assert!(drg_iso_lower(&arr("3,2;1,1"), 11).is_err());
    }

    #[test]
    fn petersen_certificate() {
        let c = restricted_dual_certificate(&named("Petersen").unwrap()).unwrap();
        assert_eq!(c.psi, ratio(1, 5));
        // C₂: ψ = p²_{11} y₂ with p²_{11} = 1.
        assert_eq!(c.y_exact, vec![BigRational::new(1.into(), 5.into())]);
        assert!(c.max_residual < 1e-12);
    }

    #[test]
    fn certificates_match_restricted_lp_optimum() {
        for g in [cycle(6).unwrap(), named("Heawood").unwrap(), named("Dodecahedron").unwrap()] {
            let c = restricted_dual_certificate(&g).unwrap();
            assert!(c.y.iter().all(|&y| y > 0.0));
            let a = detect_drg(&g).unwrap();
            let lp = restricted_lp(&intersection_numbers(&g, &a).unwrap());
            let sol = crate::linprog::solve(&lp);
            assert!((sol.objective - crate::rational::to_f64(&c.psi)).abs() < 1e-9);
        }
        let h = restricted_dual_certificate(&named("Heawood").unwrap()).unwrap();
        assert_eq!(h.psi, ratio(1, 9));
        assert!(matches!(restricted_dual_certificate(&named("Frucht").unwrap()), Err(Error::NotDistanceRegular)));
    }

    #[test]
    fn primal_assignment() {
        let p = primal_value(&named("Petersen").unwrap()).unwrap();
        assert_eq!((p.value, p.wiener), (ratio(1, 5), 75));
        assert!(p.triangles_hold);
        assert_eq!(primal_value(&cycle(6).unwrap()).unwrap().value, ratio(2, 9));
        assert_eq!(primal_value(&complete(4).unwrap()).unwrap().value, ratio(1, 1));
    }

    #[test]
    fn direct_lp() {
        for (g, want) in [(named("Petersen").unwrap(), 0.2), (cycle(6).unwrap(), 2.0 / 9.0)] {
            let sol = lp_linial_direct(&g).unwrap();
            assert!((sol.objective - want).abs() < 1e-8, "{}", sol.objective);
            assert!(check_feasible(&linial_lp(&g), &sol.x, FEAS_TOL).feasible);
        }
        // P₃ is not distance-regular; its LP value stays below σ(P₃) = 1/2.
        let sol = lp_linial_direct(&path(3).unwrap()).unwrap();
        assert!(sol.objective <= 0.5 + 1e-9);
        assert!(matches!(lp_linial_direct(&cycle(31).unwrap()), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn singleton() {
        let s = singleton_certificate(&named("Petersen").unwrap()).unwrap();
        assert_eq!(s.ratio, ratio(2, 1));
        assert!(s.claim_holds);
        let s = singleton_certificate(&named("Dodecahedron").unwrap()).unwrap();
        assert!(s.ratio <= ratio(5, 1) && s.claim_holds);
        assert_eq!(singleton_certificate(&complete(4).unwrap()).unwrap().ratio, ratio(1, 1));
        assert!(singleton_certificate(&named("Frucht").unwrap()).is_err());
    }
}
