//! Weighted oriented graphs, induced digraphs and the standard graph families.
//!
//! A weighted oriented graph is an orientation of a simple graph together with
//! a positive integer weight on every vertex. Vertices are addressed by dense
//! indices `0..n` in the order they were declared; names are kept only for
//! display and file round-trips.
//!
//! Every vertex without incoming edges (a source, including isolated vertices)
//! carries weight 1. The family constructors and [`WeightedOrientedGraph::new`]
//! enforce this silently; [`WeightedOrientedGraph::new_strict`] rejects a
//! weighted source instead.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    UnknownVertexIndex(usize),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(String, String),
    #[error("edges {0} -> {1} and {1} -> {0} both present")]
    AntiparallelEdge(String, String),
    #[error("vertex `{0}` has weight 0; weights must be at least 1")]
    ZeroWeight(String),
    #[error("source vertex `{vertex}` has weight {weight}; sources must have weight 1")]
    WeightedSource { vertex: String, weight: u32 },
    #[error("{0} vertices exceeds the hard limit of 64")]
    TooManyVertices(usize),
    #[error("names and weights have different lengths ({names} vs {weights})")]
    LengthMismatch { names: usize, weights: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

/// How a constructor treats a source vertex declared with weight > 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceWeights {
    /// Reset the weight to 1.
    Normalize,
    /// Fail with [`GraphError::WeightedSource`].
    Reject,
}

/// A vertex-weighted orientation of a simple graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedOrientedGraph {
    names: Vec<String>,
    weights: Vec<u32>,
    /// Sorted by `(tail, head)`.
    edges: Vec<(usize, usize)>,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

impl WeightedOrientedGraph {
    /// Builds a graph, silently resetting source weights to 1.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        weights: Vec<u32>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        Self::build(names, weights, edges, SourceWeights::Normalize)
    }

    /// Builds a graph, rejecting sources whose declared weight exceeds 1.
    pub fn new_strict<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        weights: Vec<u32>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        Self::build(names, weights, edges, SourceWeights::Reject)
    }

    pub fn build<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        mut weights: Vec<u32>,
        edges: &[(usize, usize)],
        sources: SourceWeights,
    ) -> Result<Self, GraphError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        if weights.len() != n {
            return Err(GraphError::LengthMismatch { names: n, weights: weights.len() });
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut out_adj = vec![VertexSet::EMPTY; n];
        let mut in_adj = vec![VertexSet::EMPTY; n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::UnknownVertexIndex(a));
            }
            if b >= n {
                return Err(GraphError::UnknownVertexIndex(b));
            }
            if a == b {
                return Err(GraphError::SelfLoop(names[a].clone()));
            }
            if out_adj[a].contains(b) {
                return Err(GraphError::DuplicateEdge(names[a].clone(), names[b].clone()));
            }
            if out_adj[b].contains(a) {
                return Err(GraphError::AntiparallelEdge(names[a].clone(), names[b].clone()));
            }
            out_adj[a].insert(b);
            in_adj[b].insert(a);
        }
        for v in 0..n {
            if weights[v] == 0 {
                return Err(GraphError::ZeroWeight(names[v].clone()));
            }
            if in_adj[v].is_empty() && weights[v] != 1 {
                match sources {
                    SourceWeights::Normalize => weights[v] = 1,
                    SourceWeights::Reject => {
                        return Err(GraphError::WeightedSource {
                            vertex: names[v].clone(),
                            weight: weights[v],
                        })
                    }
                }
            }
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        Ok(WeightedOrientedGraph { names, weights, edges, out_adj, in_adj })
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        WeightedOrientedGraph {
            names: Vec::new(),
            weights: Vec::new(),
            edges: Vec::new(),
            out_adj: Vec::new(),
            in_adj: Vec::new(),
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Directed edges `(tail, head)` sorted lexicographically by index.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    #[inline]
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    #[inline]
    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    /// Resolves a vertex name to its index.
    pub fn vertex(&self, name: &str) -> Result<usize, GraphError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GraphError::UnknownVertex(name.into()))
    }

    /// Resolves a list of names to a vertex set.
    pub fn vertex_set<'a>(
        &self,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<VertexSet, GraphError> {
        names.into_iter().map(|n| self.vertex(n)).collect()
    }

    /// Sorted names of the members of `set`.
    pub fn set_names(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.name(v)).collect()
    }

    /// Heads of the edges leaving `x`.
    #[inline]
    pub fn out_neighbors(&self, x: usize) -> VertexSet {
        self.out_adj[x]
    }

    /// Tails of the edges entering `x`.
    #[inline]
    pub fn in_neighbors(&self, x: usize) -> VertexSet {
        self.in_adj[x]
    }

    #[inline]
    pub fn neighbors(&self, x: usize) -> VertexSet {
        self.out_adj[x].union(self.in_adj[x])
    }

    #[inline]
    pub fn degree(&self, x: usize) -> usize {
        self.neighbors(x).len()
    }

    #[inline]
    pub fn is_source(&self, x: usize) -> bool {
        self.in_adj[x].is_empty()
    }

    #[inline]
    pub fn is_sink(&self, x: usize) -> bool {
        self.out_adj[x].is_empty()
    }

    /// Vertices whose weight is at least 2.
    pub fn heavy_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.weights[v] >= 2).collect()
    }

    pub fn has_edge(&self, tail: usize, head: usize) -> bool {
        self.out_adj[tail].contains(head)
    }

    /// Whether every edge has an endpoint in `c`.
    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        self.edges.iter().all(|&(a, b)| c.contains(a) || c.contains(b))
    }

    /// Whether the underlying undirected graph is connected. The empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen == self.vertices()
    }

    /// Whether every vertex has at most one incoming edge.
    pub fn at_most_one_in_edge(&self) -> bool {
        self.in_adj.iter().all(|s| s.len() <= 1)
    }

    /// The induced digraph on `t`. Orientation is inherited; any vertex that
    /// is a source of the result gets weight 1, every other vertex keeps its
    /// weight. Vertex order follows the order in `self`.
    pub fn induced_subgraph(&self, t: VertexSet) -> Result<Self, GraphError> {
        if !t.is_subset(self.vertices()) {
            let bad = t.difference(self.vertices()).first().unwrap_or(0);
            return Err(GraphError::UnknownVertexIndex(bad));
        }
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, v) in t.iter().enumerate() {
            new_index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| t.contains(a) && t.contains(b))
            .map(|&(a, b)| (new_index[a], new_index[b]))
            .collect();
        let names = t.iter().map(|v| self.names[v].clone());
        let weights = t.iter().map(|v| self.weights[v]).collect();
        Self::new(names, weights, &edges)
    }

    /// The induced digraph on the complement of `w`.
    pub fn remove_vertices(&self, w: VertexSet) -> Result<Self, GraphError> {
        if !w.is_subset(self.vertices()) {
            let bad = w.difference(self.vertices()).first().unwrap_or(0);
            return Err(GraphError::UnknownVertexIndex(bad));
        }
        self.induced_subgraph(self.vertices().difference(w))
    }

    /// Same graph with different weights (sources still normalized).
    pub fn with_weights(&self, weights: Vec<u32>) -> Result<Self, GraphError> {
        Self::new(self.names.iter().cloned(), weights, &self.edges)
    }

    /// Every sink gets weight 1; everything else is unchanged.
    pub fn trivialize_sinks(&self) -> Self {
        let mut g = self.clone();
        for v in 0..g.vertex_count() {
            if g.is_sink(v) {
                g.weights[v] = 1;
            }
        }
        g
    }
}

fn check_source_weight(weights: &[u32], what: &str) -> Result<(), GraphError> {
    match weights.first() {
        Some(1) => Ok(()),
        Some(w) => Err(GraphError::InvalidFamily(format!(
            "{what} starts at a source, so its first weight must be 1 (got {w})"
        ))),
        None => Err(GraphError::InvalidFamily(format!("{what} needs at least one vertex"))),
    }
}

/// The naturally oriented path `x1 -> x2 -> ... -> xn` with the given weights.
pub fn natural_path(weights: &[u32]) -> Result<WeightedOrientedGraph, GraphError> {
    check_source_weight(weights, "natural path")?;
    let n = weights.len();
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    WeightedOrientedGraph::new((1..=n).map(|i| format!("x{i}")), weights.to_vec(), &edges)
}

/// Two naturally oriented paths `y1 -> ... -> ym` and `x1 -> ... -> xn`
/// joined at a common sink.
///
/// * `middle == 0` or `1`: both paths end in `z1`, which is the unique sink.
///   With `middle == 1` the junction must have weight 1; with `middle == 0`
///   `sink_weight` is used as its weight.
/// * `middle == 2`: `ym -> z1 -> z2 <- xn`, with `w(z1) = w(z2) = 1`.
///
/// Vertices are ordered `y1..ym, z1[, z2], xn..x1`.
pub fn two_path_sink(
    y_weights: &[u32],
    x_weights: &[u32],
    middle: u8,
    sink_weight: u32,
) -> Result<WeightedOrientedGraph, GraphError> {
    check_source_weight(y_weights, "y path")?;
    check_source_weight(x_weights, "x path")?;
    let junction_weights: Vec<u32> = match middle {
        0 => vec![sink_weight],
        1 | 2 if sink_weight != 1 => {
            return Err(GraphError::InvalidFamily(format!(
                "junction vertices have weight 1 when middle = {middle}"
            )))
        }
        1 => vec![1],
        2 => vec![1, 1],
        _ => return Err(GraphError::InvalidFamily(format!("middle must be 0, 1 or 2, got {middle}"))),
    };
    let m = y_weights.len();
    let n = x_weights.len();
    let mut names: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
    names.extend((1..=junction_weights.len()).map(|i| format!("z{i}")));
    names.extend((1..=n).rev().map(|i| format!("x{i}")));
    let mut weights = y_weights.to_vec();
    weights.extend_from_slice(&junction_weights);
    weights.extend(x_weights.iter().rev());

    let z1 = m;
    let sink = m + junction_weights.len() - 1;
    // x_i sits at position m + |z| + (n - i).
    let x_at = |i: usize| m + junction_weights.len() + (n - i);
    let mut edges: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    edges.push((m - 1, z1));
    if junction_weights.len() == 2 {
        edges.push((z1, sink));
    }
    edges.push((x_at(n), sink));
    edges.extend((1..n).map(|i| (x_at(i), x_at(i + 1))));
    WeightedOrientedGraph::new(names, weights, &edges)
}

/// A rooted tree with every edge pointing away from the root.
///
/// `parents[v]` is the parent of vertex `v`, `None` for the root. Vertices are
/// named `x0, x1, ...`. The root's weight is forced to 1.
pub fn rooted_tree(
    parents: &[Option<usize>],
    weights: &[u32],
) -> Result<WeightedOrientedGraph, GraphError> {
    let n = parents.len();
    if weights.len() != n {
        return Err(GraphError::LengthMismatch { names: n, weights: weights.len() });
    }
    let roots: Vec<usize> = (0..n).filter(|&v| parents[v].is_none()).collect();
    if roots.len() != 1 {
        return Err(GraphError::InvalidFamily(format!(
            "a rooted tree needs exactly one root, found {}",
            roots.len()
        )));
    }
    for start in 0..n {
        let mut v = start;
        let mut steps = 0;
        while let Some(p) = parents[v] {
            if p >= n {
                return Err(GraphError::UnknownVertexIndex(p));
            }
            v = p;
            steps += 1;
            if steps > n {
                return Err(GraphError::InvalidFamily(format!("parent map has a cycle through x{start}")));
            }
        }
    }
    let edges: Vec<(usize, usize)> =
        (0..n).filter_map(|v| parents[v].map(|p| (p, v))).collect();
    WeightedOrientedGraph::new((0..n).map(|i| format!("x{i}")), weights.to_vec(), &edges)
}
