//! Helpers shared by the integration tests: random regular graphs and a
//! brute-force oracle that knows nothing about the library's search.

#![allow(dead_code)]

use isolab::{Graph, Rational};
use rand::Rng;

/// Connected `d`-regular graph on `n` vertices: a circulant scrambled by
/// random double-edge swaps, retried until connected.
pub fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Graph {
    assert!(d < n && n * d % 2 == 0, "no {d}-regular graph on {n} vertices");
    loop {
        let g = switch_chain(n, d, rng);
        if g.is_connected() {
            return g;
        }
    }
}

fn switch_chain<R: Rng>(n: usize, d: usize, rng: &mut R) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    let mut link = |u: usize, v: usize| {
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push((u, v));
    };
    for u in 0..n {
        for s in 1..=d / 2 {
            link(u, (u + s) % n);
        }
    }
    if d % 2 == 1 {
        for u in 0..n / 2 {
            link(u, u + n / 2);
        }
    }
    // {a,b},{c,e} -> {a,c},{b,e} whenever the result stays simple.
    for _ in 0..20 * edges.len() {
        let i = rng.random_range(0..edges.len());
        let j = rng.random_range(0..edges.len());
        let (a, b) = edges[i];
        let (mut c, mut e) = edges[j];
        if rng.random_bool(0.5) {
            std::mem::swap(&mut c, &mut e);
        }
        if i == j || a == c || a == e || b == c || b == e || adj[a][c] || adj[b][e] {
            continue;
        }
        for (x, y, on) in [(a, b, false), (c, e, false), (a, c, true), (b, e, true)] {
            adj[x][y] = on;
            adj[y][x] = on;
        }
        edges[i] = (a, c);
        edges[j] = (b, e);
    }
    Graph::new(n, &edges).unwrap()
}

/// A random `(n, d)` with `4 ≤ n ≤ max_n`, `2 ≤ d ≤ n − 1`, `nd` even.
pub fn random_params<R: Rng>(max_n: usize, rng: &mut R) -> (usize, usize) {
    loop {
        let n = rng.random_range(4..=max_n);
        let d = rng.random_range(2..n);
        if n * d % 2 == 0 {
            return (n, d);
        }
    }
}

/// `(i, σ)` by enumerating every subset, boundaries counted from neighbour
/// masks.
pub fn brute_force(g: &Graph) -> (Rational, Rational) {
    let n = g.n();
    assert!(n <= 20);
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let full = (1u32 << n) - 1;
    let mut i: Option<Rational> = None;
    let mut sigma: Option<Rational> = None;
    for mask in 1..full {
        let s = mask.count_ones() as i64;
        let b: i64 = (0..n)
            .filter(|v| mask >> v & 1 == 1)
            .map(|v| (nbr[v] & !mask).count_ones() as i64)
            .sum();
        if 2 * s <= n as i64 {
            let r = Rational::new(b, s);
            i = Some(i.map_or(r, |x| x.min(r)));
        }
        let r = Rational::new(b, s * (n as i64 - s));
        sigma = Some(sigma.map_or(r, |x| x.min(r)));
    }
    (i.unwrap(), sigma.unwrap())
}

pub fn mask_to_set(mask: u32) -> Vec<usize> {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}
