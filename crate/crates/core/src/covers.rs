//! Vertex covers: the L1/L2/L3 partition, the SVC condition, strong and
//! maximal strong covers.
//!
//! For a vertex cover `C` of `D` with complement `C^c`:
//!
//! * `L1(C)`: members with an out-neighbor in `C^c`;
//! * `L2(C)`: remaining members with an in-neighbor in `C^c`;
//! * `L3(C)`: the rest, equivalently the members whose whole neighborhood
//!   lies in `C`.
//!
//! A member `x` of `L3(C)` satisfies the SVC condition when some in-neighbor
//! of `x` has weight at least 2 and lies in `C \ L1(C)`. A cover is *strong*
//! when every `L3` member satisfies it; the strong covers are exactly the
//! supports of the associated primes of the edge ideal.

use alloc::vec::Vec;

use crate::digraph::WeightedOrientedGraph;
use crate::vertex_set::VertexSet;
use crate::{GuardExceeded, Limits};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("{0:?} is not a vertex cover")]
    NotACover(VertexSet),
    #[error("{0:?} is not a subset of the vertex set")]
    OutOfRange(VertexSet),
    #[error("vertex {vertex} is not in L3 of {cover:?}")]
    NotInL3 { vertex: usize, cover: VertexSet },
    #[error("{0:?} is not a strong vertex cover")]
    NotStrong(VertexSet),
    #[error("{0:?} is not a maximal strong vertex cover")]
    NotMaximalStrong(VertexSet),
    #[error("graph violates the hypothesis: {0}")]
    HypothesisViolated(&'static str),
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
}

/// A vertex cover with its L1/L2/L3 partition and strong-cover verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverPartition {
    pub cover: VertexSet,
    pub l1: VertexSet,
    pub l2: VertexSet,
    pub l3: VertexSet,
    /// Members of `l3` violating the SVC condition.
    pub failing: VertexSet,
}

impl CoverPartition {
    #[inline]
    pub fn is_strong(&self) -> bool {
        self.failing.is_empty()
    }
}

fn check_cover(g: &WeightedOrientedGraph, c: VertexSet) -> Result<(), CoverError> {
    if !c.is_subset(g.vertices()) {
        return Err(CoverError::OutOfRange(c));
    }
    if !g.is_vertex_cover(c) {
        return Err(CoverError::NotACover(c));
    }
    Ok(())
}

/// Partition without the cover check; `c` must already be a cover.
pub(crate) fn partition_unchecked(g: &WeightedOrientedGraph, c: VertexSet) -> CoverPartition {
    let outside = c.complement(g.vertex_count());
    let mut l1 = VertexSet::EMPTY;
    let mut l2 = VertexSet::EMPTY;
    let mut l3 = VertexSet::EMPTY;
    for x in c {
        if !g.out_neighbors(x).is_disjoint(outside) {
            l1.insert(x);
        } else if !g.in_neighbors(x).is_disjoint(outside) {
            l2.insert(x);
        } else {
            l3.insert(x);
        }
    }
    let support = c.difference(l1).intersection(g.heavy_vertices());
    let failing = l3.iter().filter(|&x| g.in_neighbors(x).is_disjoint(support)).collect();
    CoverPartition { cover: c, l1, l2, l3, failing }
}

/// The L1/L2/L3 partition of the vertex cover `c`.
pub fn partition(g: &WeightedOrientedGraph, c: VertexSet) -> Result<CoverPartition, CoverError> {
    check_cover(g, c)?;
    Ok(partition_unchecked(g, c))
}

/// Alias of [`partition`]; the returned record carries the strong verdict.
pub fn is_strong(g: &WeightedOrientedGraph, c: VertexSet) -> Result<CoverPartition, CoverError> {
    partition(g, c)
}

/// Whether `x ∈ L3(c)` has an in-neighbor of weight ≥ 2 in `c \ L1(c)`.
pub fn satisfies_svc(g: &WeightedOrientedGraph, x: usize, c: VertexSet) -> Result<bool, CoverError> {
    let p = partition(g, c)?;
    if !p.l3.contains(x) {
        return Err(CoverError::NotInL3 { vertex: x, cover: c });
    }
    Ok(!p.failing.contains(x))
}

/// Iterator over all vertex covers of a graph, in ascending bitmask order.
///
/// Covers are produced as complements of independent sets: vertices are
/// decided from the highest index down, and a vertex may be left out of the
/// cover only if none of its already-excluded neighbors forbids it. Every
/// leaf of the search is therefore a cover and no subtree is dead.
#[derive(Debug, Clone)]
pub struct VertexCovers<'g> {
    graph: &'g WeightedOrientedGraph,
    /// `(undecided prefix length, cover so far, excluded so far)`
    stack: Vec<(usize, VertexSet, VertexSet)>,
}

impl Iterator for VertexCovers<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((undecided, cover, excluded)) = self.stack.pop() {
            if undecided == 0 {
                return Some(cover);
            }
            let v = undecided - 1;
            // Pushed first, popped last: `v` in the cover sets the higher bit.
            self.stack.push((v, cover.with(v), excluded));
            if self.graph.neighbors(v).is_disjoint(excluded) {
                self.stack.push((v, cover, excluded.with(v)));
            }
        }
        None
    }
}

/// All vertex covers of `g`, each exactly once, in ascending bitmask order.
pub fn vertex_covers<'g>(
    g: &'g WeightedOrientedGraph,
    limits: &Limits,
) -> Result<VertexCovers<'g>, GuardExceeded> {
    limits.check_vertices(g.vertex_count())?;
    let stack = alloc::vec![(g.vertex_count(), VertexSet::EMPTY, VertexSet::EMPTY)];
    Ok(VertexCovers { graph: g, stack })
}

/// All strong vertex covers, in ascending bitmask order.
pub fn strong_covers(
    g: &WeightedOrientedGraph,
    limits: &Limits,
) -> Result<Vec<CoverPartition>, GuardExceeded> {
    Ok(vertex_covers(g, limits)?
        .map(|c| partition_unchecked(g, c))
        .filter(CoverPartition::is_strong)
        .collect())
}

/// Inclusion-maximal members of `covers`, preserving their order.
pub fn maximal_elements(covers: &[CoverPartition]) -> Vec<CoverPartition> {
    let mut by_size: Vec<usize> = (0..covers.len()).collect();
    by_size.sort_by_key(|&i| core::cmp::Reverse(covers[i].cover.len()));
    let mut dominated = alloc::vec![false; covers.len()];
    for (pos, &i) in by_size.iter().enumerate() {
        if dominated[i] {
            continue;
        }
        for &j in &by_size[pos + 1..] {
            if !dominated[j] && covers[j].cover.is_subset(covers[i].cover) {
                dominated[j] = true;
            }
        }
    }
    covers.iter().zip(dominated).filter(|(_, d)| !d).map(|(c, _)| *c).collect()
}

/// Strong covers not contained in any other strong cover.
pub fn maximal_strong_covers(
    g: &WeightedOrientedGraph,
    limits: &Limits,
) -> Result<Vec<CoverPartition>, GuardExceeded> {
    Ok(maximal_elements(&strong_covers(g, limits)?))
}

/// Shrinks a cover to a strong cover `C' ⊆ c` that is maximal among the
/// strong covers inside `c`.
///
/// Let `J` be the SVC-failing members of `L3(c)`. Members of `J` that are
/// still in `L3` of the current cover are deleted one at a time, always the
/// lowest index first, until none remain. A different deletion order can
/// reach a different, equally valid, result.
pub fn shrink_to_strong(g: &WeightedOrientedGraph, c: VertexSet) -> Result<VertexSet, CoverError> {
    let failing = partition(g, c)?.failing;
    let mut current = c;
    loop {
        let l3 = partition_unchecked(g, current).l3;
        match l3.intersection(failing).first() {
            Some(x) => current.remove(x),
            None => return Ok(current),
        }
    }
}

/// Whether `I(D) ⊆ (x^{w(x)} : x ∈ c)` holds for `c` but for no proper subset
/// of `c`. No hypothesis on `g` is required; see [`containment_cover_check`].
pub fn is_least_weight_containment(g: &WeightedOrientedGraph, c: VertexSet) -> bool {
    // `x_a x_b^{w_b}` lies in the ideal iff `x_b ∈ c`, or `x_a ∈ c` with `w_a = 1`.
    let contains = |c: VertexSet| {
        g.edges().iter().all(|&(a, b)| c.contains(b) || (c.contains(a) && g.weight(a) == 1))
    };
    // The property is monotone in `c`, so single deletions suffice.
    contains(c) && c.iter().all(|v| !contains(c.without(v)))
}

/// Maximal-strong-cover test through weighted containment: true iff
/// `I(D) ⊆ (x^{w(x)} : x ∈ c)` with `c` inclusion-minimal for that property.
///
/// The equivalence with maximal strong covers holds only when every vertex has
/// at most one incoming edge and every vertex of degree ≥ 2 has weight ≥ 2, so
/// graphs outside that class are rejected.
pub fn containment_cover_check(g: &WeightedOrientedGraph, c: VertexSet) -> Result<bool, CoverError> {
    if !g.at_most_one_in_edge() {
        return Err(CoverError::HypothesisViolated("some vertex has two or more incoming edges"));
    }
    if (0..g.vertex_count()).any(|v| g.degree(v) >= 2 && g.weight(v) < 2) {
        return Err(CoverError::HypothesisViolated("some vertex of degree >= 2 has weight 1"));
    }
    check_cover(g, c)?;
    Ok(is_least_weight_containment(g, c))
}
