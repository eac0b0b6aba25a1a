#![allow(dead_code)]

//! Corpora and independent monomial arithmetic for the acceptance suite.

use std::collections::BTreeSet;

use wogsym_core::WeightedOrientedGraph;

/// Exponent vectors; an ideal is a list of them.
pub type Mono = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn in_ideal(gens: &[Mono], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// Drops every generator divisible by another one (keeping one copy of
/// repeats), then sorts.
pub fn minimal(gens: Vec<Mono>) -> Vec<Mono> {
    let mut uniq: Vec<Mono> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let keep: Vec<bool> =
        (0..uniq.len()).map(|i| !(0..uniq.len()).any(|j| j != i && divides(&uniq[j], &uniq[i]))).collect();
    let mut i = 0;
    uniq.retain(|_| {
        i += 1;
        keep[i - 1]
    });
    uniq
}

pub fn intersect(a: &[Mono], b: &[Mono]) -> Vec<Mono> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(x.iter().zip(y).map(|(p, q)| *p.max(q)).collect());
        }
    }
    minimal(out)
}

pub fn edge_ideal(g: &WeightedOrientedGraph) -> Vec<Mono> {
    let n = g.vertex_count();
    minimal(
        g.edges()
            .iter()
            .map(|&(a, b)| {
                let mut m = vec![0; n];
                m[a] += 1;
                m[b] += g.weight(b);
                m
            })
            .collect(),
    )
}

/// Connected simple graphs on `n` vertices up to isomorphism, as edge lists.
pub fn connected_shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        if !connected(n, &edges) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> =
                    edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reached = vec![false; n];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    reached.into_iter().all(|r| r)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..n {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every weight vector of length `n` over `alphabet`.
pub fn weight_vectors(n: usize, alphabet: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u32>| alphabet.iter().map(move |&a| [w.as_slice(), &[a]].concat()))
            .collect();
    }
    out
}

fn ahu(children: &[Vec<usize>], v: usize) -> String {
    let mut parts: Vec<String> = children[v].iter().map(|&c| ahu(children, c)).collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// Parent arrays of all rooted trees on `n` vertices up to isomorphism,
/// root 0, every parent before its child.
pub fn rooted_trees(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut parents = vec![0usize; n];
    loop {
        let mut children = vec![Vec::new(); n];
        for v in 1..n {
            children[parents[v]].push(v);
        }
        if seen.insert(ahu(&children, 0)) {
            out.push((0..n).map(|v| if v == 0 { None } else { Some(parents[v]) }).collect());
        }
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
