//! Closed-form criteria for `I^(s) = I^s` on special graph families, with a
//! harness that checks each prediction by computation.
//!
//! Every predicate returns a [`ClassificationVerdict`] whose `verified_s` is
//! empty; [`verify`] fills it in.

use alloc::vec::Vec;

use crate::covers::{self, CoverError};
use crate::digraph::{self, GraphError, WeightedOrientedGraph};
use crate::symbolic::{self, SymbolicError};
use crate::vertex_set::VertexSet;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

/// Which arm of the single-junction criterion is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SinkCase {
    /// `w(x_n) = 1`.
    XnTrivial,
    /// `w(y_m) = 1` and `w(x_n) ≥ 2`.
    YmTrivial,
    /// Both vertices next to the junction are heavy.
    BothHeavy,
}

/// The clause that decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    NotApplicable(&'static str),
    /// `first_heavy` is the smallest interior `j` (1-based) with `w(x_j) ≥ 2`;
    /// `gap` the first `i` in `j..n-1` with `w(x_i) = 1`, if any.
    Path { first_heavy: Option<usize>, gap: Option<usize> },
    /// `interval = Some((l, k))` when the weight pattern matches.
    TwoPathSink { case: SinkCase, interval: Option<(usize, usize)> },
    TwoPathTwoSink { interval: Option<(usize, usize)> },
    RootedTree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub applicable: bool,
    pub predicted_equal_all_s: bool,
    pub reason: Reason,
    /// `(s, I^(s) = I^s)` as computed.
    pub verified_s: Vec<(u32, bool)>,
    /// Inequality was predicted but not found for any tested `s`.
    pub inconclusive: bool,
}

impl ClassificationVerdict {
    fn not_applicable(why: &'static str) -> Self {
        Self::decided(false, false, Reason::NotApplicable(why))
    }

    fn decided(applicable: bool, equal: bool, reason: Reason) -> Self {
        ClassificationVerdict {
            applicable,
            predicted_equal_all_s: equal,
            reason,
            verified_s: Vec::new(),
            inconclusive: false,
        }
    }

    /// Some computed result contradicts a prediction of equality.
    pub fn contradicted(&self) -> bool {
        self.applicable && self.predicted_equal_all_s && self.verified_s.iter().any(|&(_, eq)| !eq)
    }
}

/// Exponents tried when equality is predicted.
pub const EQUAL_CHECK_POWERS: [u32; 2] = [2, 3];
/// Exponents searched for a witness when inequality is predicted.
pub const UNEQUAL_SEARCH_POWERS: [u32; 3] = [2, 3, 4];

/// Runs [`symbolic::compare_powers`] for the exponents relevant to the
/// prediction and records the outcomes. Inapplicable verdicts are returned
/// untouched.
pub fn verify(
    g: &WeightedOrientedGraph,
    mut verdict: ClassificationVerdict,
    limits: &Limits,
) -> Result<ClassificationVerdict, SymbolicError> {
    if !verdict.applicable {
        return Ok(verdict);
    }
    if verdict.predicted_equal_all_s {
        for s in EQUAL_CHECK_POWERS {
            verdict.verified_s.push((s, symbolic::compare_powers(g, s, limits)?.equal));
        }
    } else {
        for s in UNEQUAL_SEARCH_POWERS {
            let equal = symbolic::compare_powers(g, s, limits)?.equal;
            verdict.verified_s.push((s, equal));
            if !equal {
                break;
            }
        }
        verdict.inconclusive = verdict.verified_s.iter().all(|&(_, eq)| eq);
    }
    Ok(verdict)
}

/// Criterion for the naturally oriented path `x1 -> ... -> xn`: equality for
/// all `s` iff, whenever some interior `x_j` is heavy, every `x_i` with
/// `j ≤ i ≤ n-1` is heavy too.
pub fn path_condition(weights: &[u32]) -> Result<ClassificationVerdict, GraphError> {
    let g = digraph::natural_path(weights)?;
    let w = g.weights();
    let n = w.len();
    // 1-based j with 1 < j < n
    let first_heavy = (2..n).find(|&j| w[j - 1] >= 2);
    let gap = first_heavy.and_then(|j| (j..n).find(|&i| w[i - 1] == 1));
    Ok(ClassificationVerdict::decided(true, gap.is_none(), Reason::Path { first_heavy, gap }))
}

/// A graph recognized as two naturally oriented arms ending at one sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoArms {
    /// `y1..ym` in path order (leaf first).
    pub y: Vec<usize>,
    /// `x1..xn` in path order (leaf first).
    pub x: Vec<usize>,
    pub sink: usize,
}

/// Recognizes `y1 -> ... -> ym -> z <- xn <- ... <- x1` up to relabeling. The
/// arm whose leaf has the smaller vertex index is reported as `y`.
pub fn recognize_two_arms(g: &WeightedOrientedGraph) -> Option<TwoArms> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != n - 1 || !g.is_connected() {
        return None;
    }
    let sink = (0..n).find(|&v| g.in_neighbors(v).len() == 2)?;
    if !g.is_sink(sink) {
        return None;
    }
    let mut arms = Vec::with_capacity(2);
    for start in g.in_neighbors(sink) {
        let mut arm = alloc::vec![start];
        let mut v = start;
        loop {
            if g.out_neighbors(v).len() != 1 {
                return None;
            }
            let ins = g.in_neighbors(v);
            match ins.len() {
                0 => break,
                1 => {
                    v = ins.first()?;
                    arm.push(v);
                }
                _ => return None,
            }
        }
        arm.reverse();
        arms.push(arm);
    }
    if arms[0].len() + arms[1].len() + 1 != n {
        return None;
    }
    let (a, b) = (arms.swap_remove(0), arms.swap_remove(0));
    let (y, x) = if a[0] < b[0] { (a, b) } else { (b, a) };
    Some(TwoArms { y, x, sink })
}

/// Heavy vertices among `arm`, which must form exactly `arm[lo-1..hi]`
/// (1-based `lo..=hi`) for some `lo` with `lo_min ≤ lo ≤ hi`. Returns that
/// `lo`. An empty heavy set never matches.
fn heavy_suffix(g: &WeightedOrientedGraph, arm: &[usize], hi: usize, lo_min: usize) -> Option<usize> {
    let heavy: Vec<usize> = (1..=arm.len()).filter(|&i| g.weight(arm[i - 1]) >= 2).collect();
    let lo = *heavy.first()?;
    let contiguous = heavy.iter().copied().eq(lo..=hi);
    (contiguous && lo >= lo_min).then_some(lo)
}

/// Criterion for two naturally oriented paths `y1..ym` and `x1..xn` joined at
/// a common sink `z1` of any weight. Applies when both arms carry a heavy
/// vertex.
///
/// * `w(x_n) = 1`: the heavy vertices other than `z1` are exactly
///   `y_l..y_m` and `x_k..x_{n-1}` with `1 < l ≤ m`, `1 < k < n`;
/// * `w(y_m) = 1`: exactly `y_l..y_{m-1}` and `x_k..x_n` with `1 < l < m`,
///   `1 < k ≤ n`;
/// * otherwise: exactly `y_l..y_m` and `x_k..x_n` with `1 < l < m`,
///   `1 < k < n`.
pub fn two_path_sink_condition(g: &WeightedOrientedGraph) -> ClassificationVerdict {
    let Some(arms) = recognize_two_arms(g) else {
        return ClassificationVerdict::not_applicable("not two naturally oriented paths meeting at a sink");
    };
    let heavy = |arm: &[usize]| arm.iter().any(|&v| g.weight(v) >= 2);
    if !heavy(&arms.y) || !heavy(&arms.x) {
        return ClassificationVerdict::not_applicable("one of the two paths has only trivial weights");
    }
    let (m, n) = (arms.y.len(), arms.x.len());
    let light = |v: usize| g.weight(v) == 1;
    let (case, interval) = if light(arms.x[n - 1]) {
        let l = heavy_suffix(g, &arms.y, m, 2);
        let k = heavy_suffix(g, &arms.x, n - 1, 2);
        (SinkCase::XnTrivial, l.zip(k))
    } else if light(arms.y[m - 1]) {
        let l = heavy_suffix(g, &arms.y, m - 1, 2);
        let k = heavy_suffix(g, &arms.x, n, 2);
        (SinkCase::YmTrivial, l.zip(k))
    } else {
        // 1 < l < m forces y_{m-1} heavy as well; likewise for x.
        let l = heavy_suffix(g, &arms.y, m, 2).filter(|&l| l < m);
        let k = heavy_suffix(g, &arms.x, n, 2).filter(|&k| k < n);
        (SinkCase::BothHeavy, l.zip(k))
    };
    ClassificationVerdict::decided(true, interval.is_some(), Reason::TwoPathSink { case, interval })
}

/// Criterion for `y1 -> ... -> ym -> z1 -> z2 <- xn <- ... <- x1` with
/// `w(z1) = w(z2) = 1`, applicable when both the `x` and the `y` path carry a
/// heavy vertex: equality for all `s` iff the heavy vertices are exactly
/// `y_l..y_m` and `x_k..x_n` with `1 < l ≤ m`, `1 < k ≤ n`.
pub fn two_path_two_sink_condition(g: &WeightedOrientedGraph) -> ClassificationVerdict {
    let Some(arms) = recognize_two_arms(g) else {
        return ClassificationVerdict::not_applicable("not two naturally oriented paths meeting at a sink");
    };
    if g.weight(arms.sink) != 1 {
        return ClassificationVerdict::not_applicable("the sink z2 must have weight 1");
    }
    // z1 is the last vertex of an arm; it needs weight 1 and a non-empty rest.
    let splits = |arm: &Vec<usize>| arm.len() >= 2 && g.weight(arm[arm.len() - 1]) == 1;
    let (mut y, x) = if splits(&arms.y) {
        (arms.y, arms.x)
    } else if splits(&arms.x) {
        (arms.x, arms.y)
    } else {
        return ClassificationVerdict::not_applicable("no weight-1 vertex z1 in front of the sink");
    };
    y.pop();
    let heavy = |arm: &[usize]| arm.iter().any(|&v| g.weight(v) >= 2);
    if !heavy(&y) || !heavy(&x) {
        return ClassificationVerdict::not_applicable("one of the two paths has only trivial weights");
    }
    let l = heavy_suffix(g, &y, y.len(), 2);
    let k = heavy_suffix(g, &x, x.len(), 2);
    let interval = l.zip(k);
    ClassificationVerdict::decided(true, interval.is_some(), Reason::TwoPathTwoSink { interval })
}

/// The root of `g` if every edge points away from it along a spanning tree.
pub fn tree_root(g: &WeightedOrientedGraph) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() != n - 1 || !g.is_connected() {
        return None;
    }
    let mut root = None;
    for v in 0..n {
        match g.in_neighbors(v).len() {
            0 if root.is_none() => root = Some(v),
            1 => {}
            _ => return None,
        }
    }
    root
}

/// Criterion for rooted trees: if the root has degree 1 and every vertex of
/// degree at least 2 is heavy, equality holds for all `s`.
pub fn tree_condition(g: &WeightedOrientedGraph) -> ClassificationVerdict {
    let Some(root) = tree_root(g) else {
        return ClassificationVerdict::not_applicable("not a rooted tree");
    };
    if g.degree(root) != 1 {
        return ClassificationVerdict::not_applicable("root degree is not 1");
    }
    if (0..g.vertex_count()).any(|v| g.degree(v) >= 2 && g.weight(v) < 2) {
        return ClassificationVerdict::not_applicable("a vertex of degree >= 2 has weight 1");
    }
    ClassificationVerdict::decided(true, true, Reason::RootedTree)
}

/// Every sink gets weight 1. Equality of ordinary and symbolic powers is
/// unaffected.
pub fn sink_trivialize(g: &WeightedOrientedGraph) -> WeightedOrientedGraph {
    g.trivialize_sinks()
}

/// Whether the induced digraph `D' = D[t]` is compatible with `D`: for every
/// maximal strong cover `C` of `D`, the strong covers of `D'` inside `C` have
/// at most one maximal element. When this holds, `I(D')^(s) ≠ I(D')^s`
/// forces `I(D)^(s) ≠ I(D)^s`.
pub fn induced_hypothesis_check(
    g: &WeightedOrientedGraph,
    t: VertexSet,
    limits: &Limits,
) -> Result<bool, ClassifyError> {
    let sub = g.induced_subgraph(t)?;
    let index: Vec<usize> = t.iter().collect();
    let lift = |c: VertexSet| -> VertexSet { c.iter().map(|i| index[i]).collect() };
    let mut sub_strong = covers::strong_covers(&sub, limits).map_err(CoverError::from)?;
    for p in &mut sub_strong {
        p.cover = lift(p.cover);
    }
    for c in covers::maximal_strong_covers(g, limits).map_err(CoverError::from)? {
        let inside: Vec<_> = sub_strong.iter().filter(|p| p.cover.is_subset(c.cover)).copied().collect();
        if covers::maximal_elements(&inside).len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Looks for an induced `a -> b -> c -> d` with `w(b) ≥ 2` and `w(c) = 1`,
/// which forces `I^(3) ≠ I^3` when every vertex has at most one incoming
/// edge. Returns the first match in vertex order.
pub fn atmost_pattern_scan(g: &WeightedOrientedGraph) -> Result<Option<[usize; 4]>, ClassifyError> {
    if !g.at_most_one_in_edge() {
        return Err(CoverError::HypothesisViolated("some vertex has two or more incoming edges").into());
    }
    for b in 0..g.vertex_count() {
        if g.weight(b) < 2 {
            continue;
        }
        for a in g.in_neighbors(b) {
            for c in g.out_neighbors(b) {
                if g.weight(c) != 1 || c == a {
                    continue;
                }
                for d in g.out_neighbors(c) {
                    if d == a || d == b {
                        continue;
                    }
                    let four: VertexSet = [a, b, c, d].into_iter().collect();
                    let inside = g.edges().iter().filter(|&&(u, v)| four.contains(u) && four.contains(v)).count();
                    if inside == 3 {
                        return Ok(Some([a, b, c, d]));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{natural_path, rooted_tree, two_path_sink};

    #[test]
    fn path_examples() {
        let v = path_condition(&[1, 2, 1, 1]).unwrap();
        assert!(!v.predicted_equal_all_s);
        assert_eq!(v.reason, Reason::Path { first_heavy: Some(2), gap: Some(3) });
        assert!(path_condition(&[1, 2, 2, 1]).unwrap().predicted_equal_all_s);
        assert!(path_condition(&[1, 1, 1, 1]).unwrap().predicted_equal_all_s);
        assert!(path_condition(&[2, 1]).is_err());
    }

    #[test]
    fn recognizer_ignores_labels() {
        let g = two_path_sink(&[1, 2], &[1, 1, 2], 1, 1).unwrap();
        let arms = recognize_two_arms(&g).unwrap();
        assert_eq!((arms.y.len(), arms.x.len()), (2, 3));
        assert!(recognize_two_arms(&natural_path(&[1, 2, 1]).unwrap()).is_none());
    }

    #[test]
    fn two_path_sink_examples() {
        let g = two_path_sink(&[1, 1, 2, 2], &[1, 1, 2, 2], 1, 1).unwrap();
        let v = two_path_sink_condition(&g);
        assert!(v.applicable && v.predicted_equal_all_s);
        assert_eq!(v.reason, Reason::TwoPathSink { case: SinkCase::BothHeavy, interval: Some((3, 3)) });

        let g = two_path_sink(&[1, 2, 1, 2], &[1, 1, 2, 2], 1, 1).unwrap();
        assert!(!two_path_sink_condition(&g).predicted_equal_all_s);

        assert!(!two_path_sink_condition(&natural_path(&[1, 2]).unwrap()).applicable);
    }

    #[test]
    fn two_path_two_sink_examples() {
        let g = two_path_sink(&[1, 2], &[1, 2], 2, 1).unwrap();
        let v = two_path_two_sink_condition(&g);
        assert!(v.applicable && v.predicted_equal_all_s);
        assert_eq!(v.reason, Reason::TwoPathTwoSink { interval: Some((2, 2)) });

        let g = two_path_sink(&[1, 2, 1], &[1, 2], 2, 1).unwrap();
        let v = two_path_two_sink_condition(&g);
        assert!(v.applicable && !v.predicted_equal_all_s);
    }

    #[test]
    fn tree_examples() {
        let chain = natural_path(&[1, 2, 2]).unwrap();
        assert!(tree_condition(&chain).predicted_equal_all_s);
        assert!(path_condition(&[1, 2, 2]).unwrap().predicted_equal_all_s);
        let star = rooted_tree(&[None, Some(0), Some(0)], &[1, 2, 2]).unwrap();
        assert!(!tree_condition(&star).applicable);
    }

    #[test]
    fn pattern_on_light_path_is_absent() {
        assert_eq!(atmost_pattern_scan(&natural_path(&[1, 1, 1, 1]).unwrap()), Ok(None));
        assert_eq!(atmost_pattern_scan(&natural_path(&[1, 2, 1, 1, 1]).unwrap()), Ok(Some([0, 1, 2, 3])));
    }

    #[test]
    fn verify_records_outcomes() {
        let g = natural_path(&[1, 2, 1, 1]).unwrap();
        let v = verify(&g, path_condition(&[1, 2, 1, 1]).unwrap(), &Limits::default()).unwrap();
        assert_eq!(v.verified_s.last().map(|&(_, eq)| eq), Some(false));
        assert!(!v.inconclusive && !v.contradicted());
    }

    #[test]
    fn full_vertex_set_satisfies_hypothesis() {
        let g = natural_path(&[1, 2, 1, 2]).unwrap();
        assert_eq!(induced_hypothesis_check(&g, g.vertices(), &Limits::default()), Ok(true));
    }
}
