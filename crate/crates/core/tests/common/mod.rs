#![allow(dead_code)]

use proptest::prelude::*;
use wogsym_core::digraph::{natural_path, rooted_tree};
use wogsym_core::{VertexSet, WeightedOrientedGraph};

/// Graph from an orientation code per unordered pair `(i, j)`, `i < j` in
/// lexicographic order: 0 = no edge, 1 = `i -> j`, 2 = `j -> i`.
pub fn from_codes(weights: &[u32], codes: &[u8]) -> WeightedOrientedGraph {
    let n = weights.len();
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            match codes[k] {
                1 => edges.push((i, j)),
                2 => edges.push((j, i)),
                _ => {}
            }
            k += 1;
        }
    }
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    WeightedOrientedGraph::new(names, weights.to_vec(), &edges).unwrap()
}

/// Random graphs on `1..=max_n` vertices with weights in `1..=max_w`.
pub fn graphs(max_n: usize, max_w: u32) -> impl Strategy<Value = WeightedOrientedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec(1..=max_w, n),
            proptest::collection::vec(0u8..3, n * (n - 1) / 2),
        )
            .prop_map(|(w, c)| from_codes(&w, &c))
    })
}

/// Random oriented forests (every vertex has at most one in-edge) in which
/// every vertex of degree at least 2 is heavy.
pub fn heavy_forests(max_n: usize) -> impl Strategy<Value = WeightedOrientedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n),
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(2u32..=3, n),
        )
            .prop_map(move |(parent, keep, heavy)| {
                // Sources weigh 1, so a root may have at most one child.
                let mut is_root = vec![true; n];
                let mut root_used = vec![false; n];
                let mut edges = Vec::new();
                for v in 1..n {
                    let p = parent[v].index(v);
                    if !keep[v] || (is_root[p] && root_used[p]) {
                        continue;
                    }
                    root_used[p] = true;
                    is_root[v] = false;
                    edges.push((p, v));
                }
                let mut deg = vec![0; n];
                for &(a, b) in &edges {
                    deg[a] += 1;
                    deg[b] += 1;
                }
                let w: Vec<u32> = (0..n).map(|v| if deg[v] >= 2 { heavy[v] } else { 1 + (heavy[v] - 2) }).collect();
                let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
                WeightedOrientedGraph::new(names, w, &edges).unwrap()
            })
    })
}

pub fn set(g: &WeightedOrientedGraph, names: &[&str]) -> VertexSet {
    g.vertex_set(names.iter().copied()).unwrap()
}

pub fn sets(g: &WeightedOrientedGraph, list: &[&[&str]]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = list.iter().map(|names| set(g, names)).collect();
    out.sort();
    out
}

/// `x1 -> x2 -> x3 <- x4 <- x5` with weights 1,3,1,3,1.
pub fn meeting_paths() -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(
        ["x1", "x2", "x3", "x4", "x5"],
        vec![1, 3, 1, 3, 1],
        &[(0, 1), (1, 2), (3, 2), (4, 3)],
    )
    .unwrap()
}

/// `x1 -> x2 -> x3 -> x4 <- x5 <- x6` with weights 1,2,1,2,2,1.
pub fn heavy_sink_paths() -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(
        ["x1", "x2", "x3", "x4", "x5", "x6"],
        vec![1, 2, 1, 2, 2, 1],
        &[(0, 1), (1, 2), (2, 3), (4, 3), (5, 4)],
    )
    .unwrap()
}

pub fn long_path() -> WeightedOrientedGraph {
    natural_path(&[1, 7, 1, 1, 1, 1]).unwrap()
}

/// Root `x0 -> x1 -> {x2, x3}`, each of `x2, x3` with two children, each of
/// those with two leaves. Internal vertices other than the root weigh 2,
/// leaves 1.
pub fn binary_tree() -> WeightedOrientedGraph {
    let mut parents = vec![None, Some(0), Some(1), Some(1), Some(2), Some(2), Some(3), Some(3)];
    for p in 4..8 {
        parents.push(Some(p));
        parents.push(Some(p));
    }
    let weights: Vec<u32> = (0..16).map(|v| if (1..8).contains(&v) { 2 } else { 1 }).collect();
    rooted_tree(&parents, &weights).unwrap()
}

/// Every weight vector of length `n` over `alphabet`, first coordinate
/// fixed to 1.
pub fn source_first_weights(n: usize, alphabet: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![1]];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|w| alphabet.iter().map(move |&a| [w.as_slice(), &[a]].concat()))
            .collect();
    }
    out
}

fn canonical(children: &[Vec<usize>], v: usize) -> String {
    let mut parts: Vec<String> = children[v].iter().map(|&c| canonical(children, c)).collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// Parent arrays of all rooted trees on `n` vertices up to isomorphism,
/// vertex 0 being the root and every parent preceding its child.
pub fn rooted_trees(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut parents = vec![0usize; n];
    loop {
        let mut children = vec![Vec::new(); n];
        for v in 1..n {
            children[parents[v]].push(v);
        }
        if seen.insert(canonical(&children, 0)) {
            out.push((0..n).map(|v| if v == 0 { None } else { Some(parents[v]) }).collect());
        }
        // odometer over parents[v] in 0..v
        let mut v = n;
        loop {
            if v <= 1 {
                return out;
            }
            v -= 1;
            if parents[v] + 1 < v {
                parents[v] += 1;
                break;
            }
            parents[v] = 0;
        }
    }
}
