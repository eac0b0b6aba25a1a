//! The worked examples, replayed as checkable facts.
//!
//! Each fact belongs to one figure. The tree example that opens the section
//! on localized components is filed under figure 1, where its tree is drawn.

use wogsym_core::classify;
use wogsym_core::covers::{self, CoverError};
use wogsym_core::digraph::{natural_path, rooted_tree};
use wogsym_core::symbolic;
use wogsym_core::{Limits, Monomial, MonomialIdeal, VertexSet, WeightedOrientedGraph};

pub struct Fact {
    pub id: &'static str,
    pub figure: u8,
    pub statement: &'static str,
    check: fn(&Limits) -> Result<(), String>,
}

impl Fact {
    /// `Err` carries what was observed instead.
    pub fn check(&self, limits: &Limits) -> Result<(), String> {
        (self.check)(limits)
    }
}

/// `x1 -> x2 -> x3 <- x4 <- x5`, weights 1,3,1,3,1.
pub fn meeting_paths() -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(
        ["x1", "x2", "x3", "x4", "x5"],
        vec![1, 3, 1, 3, 1],
        &[(0, 1), (1, 2), (3, 2), (4, 3)],
    )
    .expect("valid example")
}

/// Natural path with weights 1,7,1,1,1,1.
pub fn long_path() -> WeightedOrientedGraph {
    natural_path(&[1, 7, 1, 1, 1, 1]).expect("valid example")
}

/// `x1 -> x2 -> x3 -> x4 <- x5 <- x6`, weights 1,2,1,2,2,1.
pub fn heavy_sink_paths() -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(
        ["x1", "x2", "x3", "x4", "x5", "x6"],
        vec![1, 2, 1, 2, 2, 1],
        &[(0, 1), (1, 2), (2, 3), (4, 3), (5, 4)],
    )
    .expect("valid example")
}

/// Natural path with weights 1,2,1,1,1.
pub fn pattern_path() -> WeightedOrientedGraph {
    natural_path(&[1, 2, 1, 1, 1]).expect("valid example")
}

/// Natural path with weights 1,7,1,1.
pub fn heavy_second_path() -> WeightedOrientedGraph {
    natural_path(&[1, 7, 1, 1]).expect("valid example")
}

/// Root `x0 -> x1 -> {x2, x3}`; `x2` and `x3` have two children each, and
/// each of those has two leaves. Non-root internal vertices weigh 2.
pub fn binary_tree() -> WeightedOrientedGraph {
    let mut parents = vec![None, Some(0), Some(1), Some(1), Some(2), Some(2), Some(3), Some(3)];
    for p in 4..8 {
        parents.push(Some(p));
        parents.push(Some(p));
    }
    let weights: Vec<u32> = (0..16).map(|v| if (1..8).contains(&v) { 2 } else { 1 }).collect();
    rooted_tree(&parents, &weights).expect("valid example")
}

pub fn names(g: &WeightedOrientedGraph, list: &[&str]) -> VertexSet {
    g.vertex_set(list.iter().copied()).expect("example vertex")
}

fn mono(g: &WeightedOrientedGraph, factors: &[(&str, u32)]) -> Monomial {
    let mut e = vec![0; g.vertex_count()];
    for &(name, k) in factors {
        e[g.vertex(name).expect("example vertex")] += k;
    }
    Monomial::new(e)
}

fn ideal(g: &WeightedOrientedGraph, gens: &[&[(&str, u32)]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(g.vertex_count(), gens.iter().map(|f| mono(g, f))).expect("same dimension")
}

fn show_sets(g: &WeightedOrientedGraph, sets: &[VertexSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|&s| format!("{{{}}}", g.set_names(s).join(","))).collect();
    parts.join(" ")
}

fn expect_sets(g: &WeightedOrientedGraph, mut got: Vec<VertexSet>, want: &[&[&str]]) -> Result<(), String> {
    let mut want: Vec<VertexSet> = want.iter().map(|l| names(g, l)).collect();
    got.sort();
    want.sort();
    if got == want {
        Ok(())
    } else {
        Err(format!("got {}", show_sets(g, &got)))
    }
}

fn strong(g: &WeightedOrientedGraph, limits: &Limits) -> Result<Vec<VertexSet>, String> {
    Ok(covers::strong_covers(g, limits).map_err(|e| e.to_string())?.iter().map(|p| p.cover).collect())
}

fn maximal(g: &WeightedOrientedGraph, limits: &Limits) -> Result<Vec<VertexSet>, String> {
    Ok(covers::maximal_strong_covers(g, limits).map_err(|e| e.to_string())?.iter().map(|p| p.cover).collect())
}

fn equal_at(g: &WeightedOrientedGraph, s: u32, limits: &Limits) -> Result<bool, String> {
    Ok(symbolic::compare_powers(g, s, limits).map_err(|e| e.to_string())?.equal)
}

fn expect(cond: bool, otherwise: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(otherwise.to_string())
    }
}

fn tree_partition(_: &Limits) -> Result<(), String> {
    let g = binary_tree();
    let c = g.vertices().without(1);
    let p = covers::partition(&g, c).map_err(|e| e.to_string())?;
    expect(p.l1 == names(&g, &["x0"]), "L1 differs")?;
    expect(p.l2 == names(&g, &["x2", "x3"]), "L2 differs")?;
    expect(p.l3 == c.difference(names(&g, &["x0", "x2", "x3"])), "L3 differs")?;
    expect(p.is_strong(), "not strong")
}

fn tree_full_set(_: &Limits) -> Result<(), String> {
    let g = binary_tree();
    let all = g.vertices();
    expect(!covers::partition(&g, all).map_err(|e| e.to_string())?.is_strong(), "V is strong")?;
    expect(covers::satisfies_svc(&g, 0, all) == Ok(false), "x0 satisfies SVC")
}

fn tree_component(limits: &Limits) -> Result<(), String> {
    let g = binary_tree();
    let c = g.vertices().without(1);
    let rest = g.remove_vertices(names(&g, &["x0", "x1"])).map_err(|e| e.to_string())?;
    let mut gens = vec![mono(&g, &[("x0", 1)]), mono(&g, &[("x2", 2)]), mono(&g, &[("x3", 2)])];
    for &(a, b) in rest.edges() {
        let head = rest.name(b);
        gens.push(mono(&g, &[(rest.name(a), 1), (head, rest.weight(b))]));
    }
    let want = MonomialIdeal::minimalize(g.vertex_count(), gens).map_err(|e| e.to_string())?;
    let formula = symbolic::i_sub_c_formula(&g, c, limits).map_err(|e| e.to_string())?;
    let brute = symbolic::i_sub_c_bruteforce(&g, c, limits).map_err(|e| e.to_string())?;
    expect(formula == want, "formula differs from the stated ideal")?;
    expect(brute == want, "intersection of components differs")?;
    expect(symbolic::edge_ideal(&g).restrict(c) == want, "restriction differs")
}

fn tree_equal(limits: &Limits) -> Result<(), String> {
    let g = binary_tree();
    let v = classify::tree_condition(&g);
    expect(v.applicable && v.predicted_equal_all_s, "tree criterion does not apply")?;
    expect(equal_at(&g, 2, limits)?, "unequal at s = 2")
}

fn meeting_ideal(_: &Limits) -> Result<(), String> {
    let g = meeting_paths();
    let want = ideal(&g, &[&[("x1", 1), ("x2", 3)], &[("x2", 1), ("x3", 1)], &[("x3", 1), ("x4", 1)], &[("x4", 3), ("x5", 1)]]);
    expect(symbolic::edge_ideal(&g) == want, "edge ideal differs")
}

fn meeting_equal(limits: &Limits) -> Result<(), String> {
    expect(equal_at(&meeting_paths(), 2, limits)?, "unequal at s = 2")
}

fn meeting_sub_unequal(limits: &Limits) -> Result<(), String> {
    let g = meeting_paths();
    let sub = g.induced_subgraph(names(&g, &["x1", "x2", "x3", "x4"])).map_err(|e| e.to_string())?;
    expect(!equal_at(&sub, 2, limits)?, "equal at s = 2")
}

fn meeting_hypothesis(limits: &Limits) -> Result<(), String> {
    let g = meeting_paths();
    let t = names(&g, &["x1", "x2", "x3", "x4"]);
    let holds = classify::induced_hypothesis_check(&g, t, limits).map_err(|e| e.to_string())?;
    expect(!holds, "hypothesis holds")
}

fn long_path_covers(limits: &Limits) -> Result<(), String> {
    let g = long_path();
    expect_sets(
        &g,
        strong(&g, limits)?,
        &[
            &["x1", "x3", "x5"],
            &["x2", "x3", "x5"],
            &["x2", "x4", "x5"],
            &["x2", "x4", "x6"],
            &["x1", "x3", "x4", "x6"],
            &["x2", "x3", "x4", "x6"],
        ],
    )?;
    expect(maximal(&g, limits)?.contains(&names(&g, &["x2", "x4", "x5"])), "{x2,x4,x5} is not maximal")
}

fn short_path_covers(limits: &Limits) -> Result<(), String> {
    let g = natural_path(&[1, 7, 1]).map_err(|e| e.to_string())?;
    expect_sets(&g, strong(&g, limits)?, &[&["x2"], &["x1", "x3"], &["x2", "x3"]])
}

fn heavy_sink_ideal(_: &Limits) -> Result<(), String> {
    let g = heavy_sink_paths();
    let want = ideal(
        &g,
        &[&[("x1", 1), ("x2", 2)], &[("x2", 1), ("x3", 1)], &[("x3", 1), ("x4", 2)], &[("x5", 1), ("x4", 2)], &[("x6", 1), ("x5", 2)]],
    );
    expect(symbolic::edge_ideal(&g) == want, "edge ideal differs")
}

fn heavy_sink_equal(limits: &Limits) -> Result<(), String> {
    expect(equal_at(&heavy_sink_paths(), 2, limits)?, "unequal at s = 2")
}

fn heavy_sink_sub_unequal(limits: &Limits) -> Result<(), String> {
    let g = natural_path(&[1, 2, 1, 2]).map_err(|e| e.to_string())?;
    expect(!equal_at(&g, 2, limits)?, "equal at s = 2")
}

fn pattern_found(_: &Limits) -> Result<(), String> {
    let g = pattern_path();
    let found = classify::atmost_pattern_scan(&g).map_err(|e| e.to_string())?;
    expect(found == Some([0, 1, 2, 3]), "pattern not found on x1..x4")
}

fn pattern_unequal(limits: &Limits) -> Result<(), String> {
    expect(!equal_at(&pattern_path(), 3, limits)?, "equal at s = 3")
}

fn heavy_second_covers(limits: &Limits) -> Result<(), String> {
    let g = heavy_second_path();
    expect_sets(&g, strong(&g, limits)?, &[&["x1", "x3"], &["x2", "x3"], &["x2", "x4"]])?;
    expect(maximal(&g, limits)?.contains(&names(&g, &["x2", "x4"])), "{x2,x4} is not maximal")
}

fn heavy_second_containment(_: &Limits) -> Result<(), String> {
    let g = heavy_second_path();
    let x2x3 = mono(&g, &[("x2", 1), ("x3", 1)]);
    let weighted = ideal(&g, &[&[("x2", 7)], &[("x4", 1)]]);
    expect(symbolic::edge_ideal(&g).contains_monomial(&x2x3) == Ok(true), "x2*x3 is not a generator")?;
    expect(weighted.contains_monomial(&x2x3) == Ok(false), "x2*x3 lies in (x2^7, x4)")?;
    let c = names(&g, &["x2", "x4"]);
    expect(!covers::is_least_weight_containment(&g, c), "containment characterizes {x2,x4}")?;
    expect(
        matches!(covers::containment_cover_check(&g, c), Err(CoverError::HypothesisViolated(_))),
        "containment check accepted a graph outside its class",
    )
}

pub static FACTS: &[Fact] = &[
    Fact { id: "tree-partition", figure: 1, statement: "V\\{x1} has L1 = {x0}, L2 = {x2,x3}, the rest in L3, and is strong", check: tree_partition },
    Fact { id: "tree-full-set", figure: 1, statement: "V is a cover but not strong: x0 fails SVC", check: tree_full_set },
    Fact { id: "tree-component", figure: 1, statement: "I_{⊆C} for C = V\\{x1} is (x0, x2^2, x3^2) + I(D\\{x0,x1})", check: tree_component },
    Fact { id: "tree-equal", figure: 1, statement: "tree criterion applies and I^(2) = I^2", check: tree_equal },
    Fact { id: "meeting-ideal", figure: 2, statement: "I(D) = (x1*x2^3, x2*x3, x3*x4, x4^3*x5)", check: meeting_ideal },
    Fact { id: "meeting-equal", figure: 2, statement: "I(D)^(2) = I(D)^2", check: meeting_equal },
    Fact { id: "meeting-sub-unequal", figure: 2, statement: "D' = D[x1..x4] has I(D')^(2) != I(D')^2", check: meeting_sub_unequal },
    Fact { id: "meeting-hypothesis", figure: 2, statement: "D' = D[x1..x4] fails the induced-subgraph hypothesis", check: meeting_hypothesis },
    Fact { id: "long-path-covers", figure: 3, statement: "D has six strong covers and {x2,x4,x5} is maximal", check: long_path_covers },
    Fact { id: "short-path-covers", figure: 3, statement: "D' has strong covers {x2}, {x1,x3}, {x2,x3}", check: short_path_covers },
    Fact { id: "heavy-sink-ideal", figure: 4, statement: "I(D) = (x1*x2^2, x2*x3, x3*x4^2, x5*x4^2, x6*x5^2)", check: heavy_sink_ideal },
    Fact { id: "heavy-sink-equal", figure: 4, statement: "I(D)^(2) = I(D)^2", check: heavy_sink_equal },
    Fact { id: "heavy-sink-sub-unequal", figure: 4, statement: "D' = path 1,2,1,2 has I(D')^(2) != I(D')^2", check: heavy_sink_sub_unequal },
    Fact { id: "pattern-found", figure: 5, statement: "x1 -> x2 -> x3 -> x4 with w(x2) >= 2, w(x3) = 1 is found", check: pattern_found },
    Fact { id: "pattern-unequal", figure: 5, statement: "I^(3) != I^3", check: pattern_unequal },
    Fact { id: "heavy-second-covers", figure: 6, statement: "strong covers {x1,x3}, {x2,x3}, {x2,x4}; {x2,x4} maximal", check: heavy_second_covers },
    Fact { id: "heavy-second-containment", figure: 6, statement: "x2*x3 is not in (x2^7, x4), so containment misses {x2,x4}", check: heavy_second_containment },
];

/// Facts for one figure, or all of them. `None` if the figure has no facts.
pub fn select(figure: Option<u8>) -> Option<Vec<&'static Fact>> {
    let chosen: Vec<&Fact> = FACTS.iter().filter(|f| figure.is_none_or(|n| f.figure == n)).collect();
    (!chosen.is_empty()).then_some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fact_holds() {
        for f in FACTS {
            assert_eq!(f.check(&Limits::DESK), Ok(()), "{}", f.id);
        }
    }

    #[test]
    fn filters() {
        assert_eq!(select(Some(3)).unwrap().len(), 2);
        assert!(select(Some(9)).is_none());
        assert_eq!(select(None).unwrap().len(), FACTS.len());
    }
}
