mod common;

use common::*;
use wogsym_core::classify::{self, Reason};
use wogsym_core::covers::{self, CoverError};
use wogsym_core::digraph::natural_path;
use wogsym_core::ideals::{Monomial, MonomialIdeal};
use wogsym_core::symbolic::{self, OracleScope};
use wogsym_core::{Limits, VertexSet, WeightedOrientedGraph};

const LIM: Limits = Limits::DESK;

fn strong(g: &WeightedOrientedGraph) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = covers::strong_covers(g, &LIM).unwrap().iter().map(|p| p.cover).collect();
    v.sort();
    v
}

fn maximal(g: &WeightedOrientedGraph) -> Vec<VertexSet> {
    covers::maximal_strong_covers(g, &LIM).unwrap().iter().map(|p| p.cover).collect()
}

fn mono(g: &WeightedOrientedGraph, factors: &[(&str, u32)]) -> Monomial {
    let mut e = vec![0; g.vertex_count()];
    for &(name, k) in factors {
        e[g.vertex(name).unwrap()] += k;
    }
    Monomial::new(e)
}

fn ideal(g: &WeightedOrientedGraph, gens: &[&[(&str, u32)]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(g.vertex_count(), gens.iter().map(|f| mono(g, f))).unwrap()
}

#[test]
fn meeting_paths_covers_and_ideal() {
    let g = meeting_paths();
    let expect = ideal(&g, &[&[("x1", 1), ("x2", 3)], &[("x2", 1), ("x3", 1)], &[("x3", 1), ("x4", 1)], &[("x4", 3), ("x5", 1)]]);
    assert_eq!(symbolic::edge_ideal(&g), expect);
    assert_eq!(expect.len(), 4);
    assert_eq!(
        strong(&g),
        sets(&g, &[&["x2", "x4"], &["x1", "x3", "x4"], &["x1", "x3", "x5"], &["x2", "x3", "x4"], &["x2", "x3", "x5"]])
    );
    assert_eq!(symbolic::decomposition(&g, &LIM).unwrap().len(), 5);
    let restricted = symbolic::edge_ideal(&g).restrict(set(&g, &["x2", "x4"]));
    assert_eq!(restricted, ideal(&g, &[&[("x2", 1)], &[("x4", 1)]]));
}

#[test]
fn meeting_paths_powers() {
    let g = meeting_paths();
    assert!(symbolic::compare_powers_full(&g, 2, &LIM).unwrap().equal);
    let sub = g.induced_subgraph(set(&g, &["x1", "x2", "x3", "x4"])).unwrap();
    assert_eq!(sub.weights(), [1, 3, 1, 1]);
    assert_eq!(strong(&sub), sets(&sub, &[&["x1", "x3"], &["x2", "x3"], &["x2", "x4"]]));
    let cmp = symbolic::compare_powers_full(&sub, 2, &LIM).unwrap();
    assert!(!cmp.equal);
    let w = cmp.witness.unwrap();
    let i = symbolic::edge_ideal(&sub);
    assert!(symbolic::symbolic_power(&sub, 2, &LIM).unwrap().contains_monomial(&w).unwrap());
    assert!(!i.member_of_power(&w, 2).unwrap());
    // regression value, derived by this implementation
    assert_eq!(w.display_with(sub.names()).to_string(), "x1*x2^3*x3");
}

#[test]
fn meeting_paths_violate_induced_hypothesis() {
    let g = meeting_paths();
    let t = set(&g, &["x1", "x2", "x3", "x4"]);
    assert_eq!(classify::induced_hypothesis_check(&g, t, &LIM), Ok(false));
    assert_eq!(classify::induced_hypothesis_check(&g, g.vertices(), &LIM), Ok(true));
}

#[test]
fn local_components_agree_on_meeting_paths() {
    let g = meeting_paths();
    let i = symbolic::edge_ideal(&g);
    for c in maximal(&g) {
        let f = symbolic::i_sub_c_formula(&g, c, &LIM).unwrap();
        assert_eq!(f, symbolic::i_sub_c_bruteforce(&g, c, &LIM).unwrap());
        assert_eq!(f, i.restrict(c));
    }
}

#[test]
fn long_path_covers() {
    let g = long_path();
    let expect = sets(
        &g,
        &[
            &["x1", "x3", "x5"],
            &["x2", "x3", "x5"],
            &["x2", "x4", "x5"],
            &["x2", "x4", "x6"],
            &["x1", "x3", "x4", "x6"],
            &["x2", "x3", "x4", "x6"],
        ],
    );
    assert_eq!(strong(&g), expect);
    assert!(maximal(&g).contains(&set(&g, &["x2", "x4", "x5"])));
    assert_eq!(symbolic::associated_primes(&g, &LIM).unwrap().len(), 6);

    let sub = natural_path(&[1, 7, 1]).unwrap();
    assert_eq!(strong(&sub), sets(&sub, &[&["x2"], &["x1", "x3"], &["x2", "x3"]]));
    assert_eq!(symbolic::associated_primes(&sub, &LIM).unwrap().len(), 3);
}

#[test]
fn heavy_sink_paths_powers() {
    let g = heavy_sink_paths();
    let expect = ideal(
        &g,
        &[&[("x1", 1), ("x2", 2)], &[("x2", 1), ("x3", 1)], &[("x3", 1), ("x4", 2)], &[("x5", 1), ("x4", 2)], &[("x6", 1), ("x5", 2)]],
    );
    assert_eq!(symbolic::edge_ideal(&g), expect);
    assert!(symbolic::compare_powers(&g, 2, &LIM).unwrap().equal);
    let sub = natural_path(&[1, 2, 1, 2]).unwrap();
    assert!(!symbolic::compare_powers(&sub, 2, &LIM).unwrap().equal);
    assert_eq!(
        symbolic::symbolic_power(&g, 2, &LIM).unwrap(),
        symbolic::symbolic_power_oracle(&g, 2, OracleScope::Maximal, &LIM).unwrap()
    );
}

#[test]
fn heavy_light_pattern_forces_inequality_at_three() {
    for w2 in [2, 5] {
        let g = natural_path(&[1, w2, 1, 1, 1]).unwrap();
        assert_eq!(classify::atmost_pattern_scan(&g), Ok(Some([0, 1, 2, 3])));
        assert!(!symbolic::compare_powers(&g, 3, &LIM).unwrap().equal);
    }
    assert!(!symbolic::compare_powers(&natural_path(&[1, 2, 1, 1]).unwrap(), 3, &LIM).unwrap().equal);
}

#[test]
fn heavy_second_vertex_path() {
    let g = natural_path(&[1, 7, 1, 1]).unwrap();
    assert_eq!(strong(&g), sets(&g, &[&["x1", "x3"], &["x2", "x3"], &["x2", "x4"]]));
    let c = set(&g, &["x2", "x4"]);
    assert!(maximal(&g).contains(&c));
    assert!(matches!(covers::containment_cover_check(&g, c), Err(CoverError::HypothesisViolated(_))));
    assert!(!covers::is_least_weight_containment(&g, c));
    let x2x3 = mono(&g, &[("x2", 1), ("x3", 1)]);
    assert!(symbolic::edge_ideal(&g).contains_monomial(&x2x3).unwrap());
    assert!(!ideal(&g, &[&[("x2", 7)], &[("x4", 1)]]).contains_monomial(&x2x3).unwrap());
    assert_eq!(symbolic::decomposition(&g, &LIM).unwrap().len(), 3);
    let cmp = symbolic::compare_powers(&g, 2, &LIM).unwrap();
    assert!(!cmp.equal);
    assert_eq!(
        symbolic::symbolic_power(&g, 2, &LIM).unwrap(),
        symbolic::symbolic_power_oracle(&g, 2, OracleScope::Maximal, &LIM).unwrap()
    );
}

#[test]
fn binary_tree_partition_and_component() {
    let g = binary_tree();
    let all = g.vertices();
    let c = all.without(1);
    let p = covers::partition(&g, c).unwrap();
    assert_eq!(p.l1, set(&g, &["x0"]));
    assert_eq!(p.l2, set(&g, &["x2", "x3"]));
    assert_eq!(p.l3, c.difference(set(&g, &["x0", "x2", "x3"])));
    assert!(p.is_strong());

    let full = covers::partition(&g, all).unwrap();
    assert!(!full.is_strong());
    assert_eq!(covers::satisfies_svc(&g, 0, all), Ok(false));

    let rest = g.remove_vertices(set(&g, &["x0", "x1"])).unwrap();
    let mut gens = vec![mono(&g, &[("x0", 1)]), mono(&g, &[("x2", 2)]), mono(&g, &[("x3", 2)])];
    for &(a, b) in rest.edges() {
        let (a, b) = (rest.name(a), rest.name(b));
        gens.push(mono(&g, &[(a, 1), (b, g.weight(g.vertex(b).unwrap()))]));
    }
    let expect = MonomialIdeal::minimalize(g.vertex_count(), gens).unwrap();
    let formula = symbolic::i_sub_c_formula(&g, c, &LIM).unwrap();
    assert_eq!(formula, expect);
    assert_eq!(formula, symbolic::i_sub_c_bruteforce(&g, c, &LIM).unwrap());
    assert_eq!(formula, symbolic::edge_ideal(&g).restrict(c));

    assert_eq!(covers::containment_cover_check(&g, all.without(0)), Ok(true));
    let shrunk = covers::shrink_to_strong(&g, all).unwrap();
    assert!(covers::partition(&g, shrunk).unwrap().is_strong());
    assert!(strong(&g).iter().all(|&s| !(shrunk.is_subset(s) && s != shrunk)));
}

#[test]
fn binary_tree_classifies_equal() {
    let g = binary_tree();
    let v = classify::tree_condition(&g);
    assert!(v.applicable && v.predicted_equal_all_s);
    assert_eq!(v.reason, Reason::RootedTree);
    assert!(symbolic::compare_powers(&g, 2, &LIM).unwrap().equal);
}

#[test]
fn sink_weight_reset() {
    let heavy_sink = WeightedOrientedGraph::new(["a", "b"], vec![1, 4], &[(0, 1)]).unwrap();
    assert_eq!(classify::sink_trivialize(&heavy_sink).weights(), [1, 1]);
    let g = meeting_paths();
    assert_eq!(classify::sink_trivialize(&g), g);
}
