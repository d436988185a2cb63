//! End-to-end use of the public API on corpus graphs and families.

use std::time::Duration;

use isolab::drg::{detect_drg, intersection_numbers, lemma_identity_check, IntersectionArray};
use isolab::exact::{cheeger_exact, isoperimetric_exact, SearchBudget};
use isolab::families::{nds_demo, registry, verify_family, FamilyTag, VerifyStatus};
use isolab::graph::{corpus, graph_power, named, parse_graph6, to_graph6};
use isolab::power::{closed_lower_t2, lp_lower_sweep, SweepOptions};
use isolab::rational::ratio;
use isolab::spectra::mohar_bounds;
use isolab::tables::{reproduce, CellStatus, Table, TableOptions};

#[test]
fn corpus_graphs_round_trip_and_are_regular() {
    let all = corpus();
    assert_eq!(all.len(), 67);
    for e in all {
        let g = &e.graph;
        assert_eq!(parse_graph6(&to_graph6(g)).unwrap().edges(), g.edges(), "{}", e.name);
        assert!(g.regular_degree().is_some(), "{} is not regular", e.name);
        assert!(g.is_connected(), "{}", e.name);
    }
}

#[test]
fn petersen_end_to_end() {
    let g = named("petersen").unwrap();
    let b = SearchBudget::default();
    assert_eq!(isoperimetric_exact(&g, &b).unwrap().value, ratio(1, 1));
    // Five vertices of degree 3 with 5 boundary edges: 5/15.
    assert_eq!(cheeger_exact(&g, &b).unwrap().value, ratio(1, 3));
    let m = mohar_bounds(&g).unwrap();
    assert!((m.lower - 1.0).abs() < 1e-9);

    let arr = detect_drg(&g).unwrap();
    assert_eq!(arr, "3,2;1,1".parse::<IntersectionArray>().unwrap());
    let p = intersection_numbers(&g, &arr).unwrap();
    assert!(lemma_identity_check(&arr, &p).holds);

    // G² = K10, i = 5.
    let sq = graph_power(&g, 2).unwrap();
    assert_eq!(isoperimetric_exact(&sq, &b).unwrap().value, ratio(5, 1));
    let closed = closed_lower_t2(&g).unwrap().bound.value;
    let lp = lp_lower_sweep(&g, 2, &SweepOptions::default()).unwrap();
    assert!((closed - 5.0).abs() < 1e-9);
    assert!((lp.best.unwrap().value - closed).abs() < 1e-6);
}

#[test]
fn every_desk_family_verifies_on_a_small_member() {
    let budget = SearchBudget::default().with_time_limit(Duration::from_secs(60));
    let cases: &[(FamilyTag, &[u64])] = &[
        (FamilyTag::Complete, &[6]),
        (FamilyTag::Path, &[7]),
        (FamilyTag::Cycle, &[9]),
        (FamilyTag::CompleteBipartite, &[2, 5]),
        (FamilyTag::Hypercube, &[3]),
        (FamilyTag::Hamming, &[2, 4]),
        (FamilyTag::HyperbolicQ3, &[3]),
        (FamilyTag::CoHyperbolicQ3, &[3]),
    ];
    for (tag, params) in cases {
        let r = verify_family(*tag, params, &budget).unwrap();
        assert_eq!(r.status, VerifyStatus::Agrees, "{tag} {params:?}: {r:?}");
    }
    assert!(registry().iter().any(|f| !f.verifiable_at_desk));
}

#[test]
fn cospectral_mates_differ() {
    let d = nds_demo().unwrap();
    assert!(d.cospectral);
    assert_eq!(d.i_g, ratio(1, 1));
    assert_eq!(d.i_h, ratio(5, 4));
    assert!(d.tight_g.is_some() && !d.tight_h);
}

#[test]
fn table_rows_reproduce() {
    let opts = TableOptions::default();
    let r = reproduce(Table::A2, &["McGee".into(), "Pappus".into()], &opts);
    assert_eq!(r.rows.len(), 2);
    assert!(r.rows.iter().all(|row| row.ok()), "{}", r.render());
    let r = reproduce(Table::A4, &["Shrikhande".into(), "Clebsch".into()], &opts);
    assert!(r.rows.iter().all(|row| row.ok()), "{}", r.render());
    let r = reproduce(Table::A4, &["Hoffman-Singleton".into()], &opts);
    assert_eq!(r.rows[0].cell("i(G)").unwrap().status, CellStatus::BothTime);
}
