//! Property tests over random regular graphs, random cuts and random LPs.

mod common;

use common::{brute_force, mask_to_set, random_params, random_regular};
use isolab::exact::{isoperimetric_exact, isoperimetric_exact_with, sparsity_exact, SearchBudget};
use isolab::graph::{complement, cut_metrics, distances, graph_power, parse_graph6, to_graph6};
use isolab::linprog::{check_feasible, solve, solve_via_dual, LpProblem, Relation, Sense};
use isolab::rational::{format, parse, to_f64};
use isolab::spectra::{eta_lambda_check, interlace_bounds, laplacian_spectrum, mohar_bounds, qkm_upper};
use isolab::split::{binomial_lower_tail, chernoff_tail, lemma_small_set_check, sample_split};
use isolab::{Graph, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn regular(max_n: usize) -> impl Strategy<Value = Graph> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, d) = random_params(max_n, &mut rng);
        random_regular(n, d, &mut rng)
    })
}

/// A graph and a nonempty proper subset of its vertices.
fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (regular(max_n), any::<u32>()).prop_map(|(g, bits)| {
        let full = (1u32 << g.n()) - 1;
        let mut mask = bits & full;
        if mask == 0 || mask == full {
            mask = 1;
        }
        (g, mask_to_set(mask))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generator_is_regular_and_connected(g in regular(16)) {
        prop_assert!(g.regular_degree().is_some());
        prop_assert!(g.is_connected());
    }

    #[test]
    fn graph6_round_trip(g in regular(16)) {
        let back = parse_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn cut_identities((g, s) in graph_and_set(16)) {
        let c = cut_metrics(&g, &s).unwrap();
        prop_assert_eq!(c.i * Rational::from_integer(c.size as i64), Rational::from_integer(c.boundary as i64));
        let h = complement(&g);
        let ch = cut_metrics(&h, &s).unwrap();
        prop_assert_eq!(c.boundary + ch.boundary, s.len() * (g.n() - s.len()));
    }

    #[test]
    fn spectral_sandwich(g in regular(14)) {
        let i = to_f64(&isoperimetric_exact(&g, &SearchBudget::default()).unwrap().value);
        let m = mohar_bounds(&g).unwrap();
        prop_assert!(m.lower <= i + 1e-8, "{} > {}", m.lower, i);
        prop_assert!(i <= m.upper.max(0.0) + 1e-8 || m.degenerate);
        prop_assert!(i <= qkm_upper(&g).unwrap() + 1e-8);
    }

    #[test]
    fn interlacing_for_any_set((g, s) in graph_and_set(16)) {
        let r = interlace_bounds(&g, &s).unwrap();
        prop_assert!(r.lower <= r.value + 1e-8 && r.value <= r.upper + 1e-8, "{:?}", r);
    }

    #[test]
    fn eta_lambda(g in regular(16)) {
        prop_assert!(eta_lambda_check(&g).unwrap().holds);
    }

    #[test]
    fn search_agrees_with_brute_force(g in regular(14)) {
        let b = SearchBudget::default();
        let (i, sigma) = brute_force(&g);
        let pruned = isoperimetric_exact(&g, &b).unwrap();
        let plain = isoperimetric_exact_with(&g, &b, false).unwrap();
        prop_assert!(pruned.certified && plain.certified);
        prop_assert_eq!(pruned.value, i);
        prop_assert_eq!(plain.value, i);
        prop_assert_eq!(cut_metrics(&g, &pruned.cut.set).unwrap().i, i);
        prop_assert_eq!(sparsity_exact(&g, &b).unwrap().value, sigma);
    }

    #[test]
    fn sparsity_sandwich(g in regular(14)) {
        let (i, sigma) = brute_force(&g);
        let per_vertex = i / Rational::from_integer(g.n() as i64);
        prop_assert!(sigma / 2 <= per_vertex && per_vertex <= sigma);
    }

    #[test]
    fn power_edges_are_distance_balls(g in regular(16), t in 1usize..4) {
        let p = graph_power(&g, t).unwrap();
        let d = distances(&g);
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                prop_assert_eq!(p.has_edge(u, v), d.raw(u, v) as usize <= t);
            }
        }
    }

    #[test]
    fn laplacian_spectrum_sums_to_twice_edges(g in regular(16)) {
        let s = laplacian_spectrum(&g);
        let sum: f64 = s.values.iter().sum();
        prop_assert!((sum - 2.0 * g.edge_count() as f64).abs() < 1e-8);
        prop_assert!(s.values.iter().all(|&x| x > -1e-9));
    }

    #[test]
    fn rational_text_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = Rational::new(p, q);
        prop_assert_eq!(parse(&format(&r)), Some(r));
    }

    #[test]
    fn split_samples_are_split(k in 1usize..10, l in 1usize..10, seed in any::<u64>()) {
        let s = sample_split(k, l, seed).unwrap();
        let g = &s.graph;
        for (a, &u) in s.clique_part.iter().enumerate() {
            for &v in &s.clique_part[a + 1..] {
                prop_assert!(g.has_edge(u, v));
            }
        }
        for (a, &u) in s.independent_part.iter().enumerate() {
            for &v in &s.independent_part[a + 1..] {
                prop_assert!(!g.has_edge(u, v));
            }
        }
        prop_assert_eq!(sample_split(k, l, seed).unwrap().graph.edges(), g.edges());
        prop_assert!(lemma_small_set_check(&s).consistent());
    }

    #[test]
    fn chernoff_dominates_binomial(n in 1u64..200, p in 0.01f64..1.0, frac in 0.0f64..=1.0) {
        let mu = n as f64 * p;
        let t = frac * mu / 2.0;
        let bound = chernoff_tail(n, p, t).unwrap();
        prop_assert!(binomial_lower_tail(n, p, mu - t) <= bound + 1e-12);
    }
}

/// `min c·x` over `Ax ≥ b, x ≥ 0` with nonnegative data: always feasible and
/// bounded.
fn covering_lp() -> impl Strategy<Value = LpProblem> {
    (1usize..6, 1usize..6).prop_flat_map(|(vars, rows)| {
        (
            prop::collection::vec(0.1f64..5.0, vars),
            prop::collection::vec(prop::collection::vec(0.0f64..5.0, vars), rows),
            prop::collection::vec(0.0f64..10.0, rows),
        )
            .prop_map(|(c, a, b)| {
                let mut p = LpProblem::new(Sense::Minimize, c);
                for (mut row, rhs) in a.into_iter().zip(b) {
                    if row.iter().all(|&x| x < 1e-3) {
                        row[0] = 1.0;
                    }
                    p.add(row, Relation::Ge, rhs);
                }
                p
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    // The returned duals certify optimality: y ≥ 0, Aᵀy ≤ c, b·y = c·x.
    #[test]
    fn lp_optimum_is_certified(p in covering_lp()) {
        let s = solve(&p);
        prop_assert!(s.is_optimal(), "{:?}", s.status);
        prop_assert!(check_feasible(&p, &s.x, 1e-7).feasible);
        prop_assert!((p.objective_value(&s.x) - s.objective).abs() < 1e-7);
        let y = &s.duals;
        prop_assert!(y.iter().all(|&v| v > -1e-9));
        for j in 0..p.vars() {
            let col: f64 = p.constraints.iter().zip(y).map(|(c, yi)| c.coeffs[j] * yi).sum();
            prop_assert!(col <= p.objective[j] + 1e-7);
        }
        let dual: f64 = p.constraints.iter().zip(y).map(|(c, yi)| c.rhs * yi).sum();
        prop_assert!((dual - s.objective).abs() < 1e-6 * (1.0 + s.objective.abs()));
        let via = solve_via_dual(&p);
        prop_assert!((via.objective - s.objective).abs() < 1e-6 * (1.0 + s.objective.abs()));
    }
}
