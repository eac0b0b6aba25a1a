//! JSON forms of graphs, covers, ideals, comparisons and verdicts.
//!
//! A graph file looks like
//!
//! ```json
//! {"vertices":[{"name":"x1","weight":1},{"name":"x2","weight":3}],"edges":[["x1","x2"]]}
//! ```
//!
//! where `[a, b]` is the directed edge `a -> b`. The canonical form keeps
//! vertices in file order and sorts edges by `(tail index, head index)`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use wogsym_core::classify::{ClassificationVerdict, Reason, SinkCase};
use wogsym_core::digraph::{GraphError, SourceWeights};
use wogsym_core::{CoverPartition, Monomial, MonomialIdeal, PowerComparison, VertexSet, WeightedOrientedGraph};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed graph document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    name: String,
    weight: u32,
}

/// Parses a graph document. A source declared with weight above 1 is an
/// error unless `normalize` is set, in which case its weight becomes 1.
pub fn parse_graph(text: &str, normalize: bool) -> Result<WeightedOrientedGraph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let names: Vec<String> = doc.vertices.iter().map(|v| v.name.clone()).collect();
    let index = |name: &str| {
        names.iter().position(|n| n == name).ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    };
    let edges = doc
        .edges
        .iter()
        .map(|(a, b)| Ok((index(a)?, index(b)?)))
        .collect::<Result<Vec<_>, GraphError>>()?;
    let weights = doc.vertices.iter().map(|v| v.weight).collect();
    let policy = if normalize { SourceWeights::Normalize } else { SourceWeights::Reject };
    Ok(WeightedOrientedGraph::build(names, weights, &edges, policy)?)
}

/// Canonical pretty-printed document, newline-terminated.
pub fn serialize_graph(g: &WeightedOrientedGraph) -> String {
    let doc = GraphDoc {
        vertices: g
            .names()
            .iter()
            .zip(g.weights())
            .map(|(name, &weight)| VertexDoc { name: name.clone(), weight })
            .collect(),
        edges: g.edges().iter().map(|&(a, b)| (g.name(a).to_string(), g.name(b).to_string())).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("graph documents always serialize");
    out.push('\n');
    out
}

pub fn names_json(g: &WeightedOrientedGraph, set: VertexSet) -> Value {
    json!(g.set_names(set))
}

pub fn cover_json(g: &WeightedOrientedGraph, p: &CoverPartition) -> Value {
    json!({
        "cover": names_json(g, p.cover),
        "l1": names_json(g, p.l1),
        "l2": names_json(g, p.l2),
        "l3": names_json(g, p.l3),
        "strong": p.is_strong(),
    })
}

pub fn monomial_string(g: &WeightedOrientedGraph, m: &Monomial) -> String {
    m.display_with(g.names()).to_string()
}

/// A monomial as `{"name": exponent}` over its support.
pub fn monomial_json(g: &WeightedOrientedGraph, m: &Monomial) -> Value {
    let map: Map<String, Value> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (g.name(i).to_string(), json!(e)))
        .collect();
    Value::Object(map)
}

pub fn ideal_json(g: &WeightedOrientedGraph, i: &MonomialIdeal) -> Value {
    Value::Array(i.generators().iter().map(|m| monomial_json(g, m)).collect())
}

pub fn ideal_strings(g: &WeightedOrientedGraph, i: &MonomialIdeal) -> Vec<String> {
    i.generators().iter().map(|m| monomial_string(g, m)).collect()
}

pub fn comparison_json(g: &WeightedOrientedGraph, c: &PowerComparison) -> Value {
    json!({
        "s": c.s,
        "equal": c.equal,
        "witness": c.witness.as_ref().map(|m| monomial_string(g, m)),
        "gens_ordinary": c.gen_count_ordinary,
        "gens_symbolic": c.gen_count_symbolic,
        "ms": crate::report::millis(c.elapsed),
    })
}

pub fn case_name(reason: &Reason) -> &'static str {
    match reason {
        Reason::NotApplicable(_) => "not-applicable",
        Reason::Path { .. } => "path",
        Reason::TwoPathSink { case: SinkCase::XnTrivial, .. } => "two-path-sink/xn-trivial",
        Reason::TwoPathSink { case: SinkCase::YmTrivial, .. } => "two-path-sink/ym-trivial",
        Reason::TwoPathSink { case: SinkCase::BothHeavy, .. } => "two-path-sink/both-heavy",
        Reason::TwoPathTwoSink { .. } => "two-path-two-sink",
        Reason::RootedTree => "rooted-tree",
    }
}

pub fn verdict_json(v: &ClassificationVerdict) -> Value {
    let mut out = json!({
        "applicable": v.applicable,
        "predicted_equal_all_s": v.predicted_equal_all_s,
        "case": case_name(&v.reason),
        "verified": v.verified_s.iter().map(|&(s, equal)| json!({"s": s, "equal": equal})).collect::<Vec<_>>(),
        "inconclusive": v.inconclusive,
        "contradicted": v.contradicted(),
    });
    let extra = out.as_object_mut().expect("object literal");
    match v.reason {
        Reason::NotApplicable(why) => {
            extra.insert("reason".into(), json!(why));
        }
        Reason::Path { first_heavy, gap } => {
            extra.insert("first_heavy".into(), json!(first_heavy));
            extra.insert("gap".into(), json!(gap));
        }
        Reason::TwoPathSink { interval, .. } | Reason::TwoPathTwoSink { interval } => {
            extra.insert("l".into(), json!(interval.map(|(l, _)| l)));
            extra.insert("k".into(), json!(interval.map(|(_, k)| k)));
        }
        Reason::RootedTree => {}
    }
    out
}
