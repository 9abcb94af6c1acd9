mod common;

use std::path::Path;

use recolour::construction::{build_base, build_family, cycle_power, verify, CheckStatus, PaperInstance};
use recolour::graph::{chromatic_number, clique_number, find_induced};
use recolour::io::{parse_edge_list, read_graph_file, GraphInput};
use recolour::reconfig::{component_of, find_frozen, ComponentExploration};
use recolour::{is_frozen, is_proper, Colouring, Graph, Limits, PatternKind};

fn data(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Independently recorded edge list of the base graph, cycle edges included.
fn reference_graph() -> Graph {
    parse_edge_list(&std::fs::read_to_string(data("base_reference.el")).unwrap()).unwrap()
}

#[test]
fn base_graph_matches_the_reference_edge_list() {
    let base = build_base();
    assert_eq!(base.graph, reference_graph());
    assert_eq!(base.graph.m(), 100);
    assert_eq!(base.alpha.to_string(), "1234572345123467");
    assert_eq!(base.beta.to_string(), "1234567812345678");
}

#[test]
fn edge_rule_is_exact() {
    let base = build_base();
    let h = cycle_power();
    assert!(h.is_subgraph_of(&base.graph));
    for u in 0..16 {
        for v in u + 1..16 {
            let both = base.alpha.colour(u) != base.alpha.colour(v) && base.beta.colour(u) != base.beta.colour(v);
            assert_eq!(base.graph.has_edge(u, v), h.has_edge(u, v) || both, "{u} {v}");
        }
    }
}

#[test]
fn base_graph_facts() {
    let base = build_base();
    let g = &base.graph;
    assert!(is_proper(g, &base.alpha).unwrap());
    assert!(is_proper(g, &base.beta).unwrap());
    assert!(common::frozen(g, base.beta.assignment(), 8));
    assert!(!common::has_induced_brute(g, &common::two_k2()));
    assert!(!common::has_induced_brute(g, &Graph::path(5)));
    assert_eq!(chromatic_number(g, 64).unwrap(), 7);
    assert!(!common::colourable_brute(g, 6));
    assert_eq!(clique_number(g, 64).unwrap(), 7);
    assert_eq!(common::clique_brute(g), 7);
    assert_eq!(
        component_of(g, &base.beta, 10).unwrap(),
        ComponentExploration::ExploredFully { size: 1, frozen: true }
    );
    assert!(!is_frozen(g, &base.alpha.with_palette(8).unwrap()).unwrap());
}

#[test]
fn frozen_eight_colourings_are_the_relabellings_of_beta() {
    let base = build_base();
    let search = find_frozen(&base.graph, 8, usize::MAX, 10_000_000).unwrap();
    assert!(search.exhaustive);
    assert_eq!(search.frozen.len(), 40_320);
    assert!(search.frozen.binary_search(&base.beta).is_ok());
    let relabel = |c: &Colouring| {
        // canonical form: colours renumbered by first appearance
        let mut map = [0u32; 9];
        let mut next = 0;
        c.assignment()
            .iter()
            .map(|&x| {
                if map[x as usize] == 0 {
                    next += 1;
                    map[x as usize] = next;
                }
                map[x as usize]
            })
            .collect::<Vec<_>>()
    };
    assert!(search.frozen.iter().all(|c| relabel(c) == base.beta.assignment()));
}

#[test]
fn no_frozen_seven_colouring() {
    let search = find_frozen(&build_base().graph, 7, 1, 10_000_000).unwrap();
    assert!(search.exhaustive);
    assert!(search.frozen.is_empty());
}

#[test]
fn joined_copies() {
    for p in 1..=3 {
        let inst = build_family(p).unwrap();
        let g = &inst.graph;
        assert_eq!(g.n(), 16 * p);
        assert_eq!(g.m(), 100 * p + 256 * p * (p - 1) / 2);
        assert_eq!(inst.alpha.k(), 7 * p as u32);
        assert_eq!(inst.beta.k(), 8 * p as u32);
        assert!(is_proper(g, &inst.alpha).unwrap());
        assert!(is_frozen(g, &inst.beta).unwrap());
        assert!(common::frozen(g, inst.beta.assignment(), 8 * p as u32));
        assert_eq!(find_induced(g, &PatternKind::TwoK2).unwrap(), None);
        assert_eq!(clique_number(g, 64).unwrap(), 7 * p);
    }
    assert!(build_family(0).is_err());
    assert!(build_family(65).is_err());
}

#[test]
fn verification_reports() {
    let limits = Limits::default();
    let r1 = verify(&build_base(), &limits);
    assert!(r1.passed);
    assert_eq!(r1.check("chromatic_number").unwrap().observed, "7");

    let r2 = verify(&build_family(2).unwrap(), &limits);
    assert!(r2.passed);
    assert_eq!(r2.check("beta_frozen").unwrap().status, CheckStatus::Pass);
    assert_eq!(r2.check("two_k2_free").unwrap().status, CheckStatus::Pass);
    assert_eq!(r2.check("chromatic_number").unwrap().status, CheckStatus::Skipped);
    assert_eq!(r2.check("chromatic_upper").unwrap().status, CheckStatus::Pass);
    let lower = r2.check("chromatic_lower").unwrap();
    assert_eq!(lower.status, CheckStatus::Derived);
    assert!(lower.observed.contains("14"), "{}", lower.observed);
}

#[test]
fn a_broken_instance_fails_verification() {
    let mut inst = build_base();
    inst.graph = inst.graph.without_edge(0, 5).unwrap();
    let report = verify(&inst, &Limits::default());
    assert!(!report.passed);
    assert_eq!(report.check("two_k2_free").unwrap().status, CheckStatus::Fail);
    assert_eq!(report.check("p5_free").unwrap().status, CheckStatus::Fail);
}

#[test]
fn bundle_round_trip_and_golden_file() {
    let inst = build_base();
    let json = inst.to_json().unwrap();
    let golden = std::fs::read_to_string(data("bundle_p1.json")).unwrap();
    assert_eq!(json + "\n", golden);
    match read_graph_file(&data("bundle_p1.json"), None).unwrap() {
        GraphInput::Instance(back) => assert_eq!(back, inst),
        GraphInput::Graph(_) => panic!("bundle read back as a bare graph"),
    }
    let bad = golden.replacen("\"p\": 1", "\"p\": 2", 1);
    assert!(serde_json::from_str::<PaperInstance>(&bad).is_err());
}

#[test]
fn golden_reports() {
    let limits = Limits::default();
    for (p, file) in [(1, "report_p1.json"), (2, "report_p2.json")] {
        let report = verify(&build_family(p).unwrap(), &limits);
        let golden = std::fs::read_to_string(data(file)).unwrap();
        assert_eq!(report.to_json().unwrap() + "\n", golden, "{file}");
    }
}
