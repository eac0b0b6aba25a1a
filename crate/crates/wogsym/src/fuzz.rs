//! Seeded random graphs, the property checks run on them, and a greedy
//! shrinker for failures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use wogsym_core::covers::{self, CoverError};
use wogsym_core::ideals::IdealError;
use wogsym_core::symbolic::{self, OracleScope, SymbolicError};
use wogsym_core::{GuardExceeded, Limits, VertexSet, WeightedOrientedGraph};

use crate::format;

/// A graph on `1..=max_vertices` vertices. Each unordered pair is left
/// unjoined or oriented either way with equal odds; weights are uniform in
/// `1..=max_weight`, and sources are then reset to 1.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_weight: u32) -> WeightedOrientedGraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let weights: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max_weight.max(1))).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match rng.gen_range(0..3) {
                1 => edges.push((i, j)),
                2 => edges.push((j, i)),
                _ => {}
            }
        }
    }
    WeightedOrientedGraph::new((1..=n).map(|i| format!("x{i}")), weights, &edges)
        .expect("generated graphs are simple and antiparallel-free")
}

/// `count` graphs from one seed, the same sequence on every platform.
pub fn corpus(seed: u64, count: usize, max_vertices: usize, max_weight: u32) -> Vec<WeightedOrientedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng, max_vertices, max_weight)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

/// Exponents used by the power checks.
pub const POWERS: [u32; 2] = [2, 3];

pub const CHECKS: [&str; 7] = [
    "decomposition",
    "dual-path",
    "containment",
    "sink-weights",
    "svc-monotone",
    "shrink-keeps-heavy",
    "strong-subcover-exists",
];

type Outcome = Result<Option<Violation>, GuardExceeded>;

fn violation(check: &'static str, detail: impl Into<String>) -> Outcome {
    Ok(Some(Violation { check, detail: detail.into() }))
}

/// Guard refusals propagate; every other error is itself a violation.
fn lift<T>(check: &'static str, r: Result<T, SymbolicError>) -> Result<Result<T, Violation>, GuardExceeded> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) => match e.guard() {
            Some(g) => Err(*g),
            None => Ok(Err(Violation { check, detail: e.to_string() })),
        },
    }
}

macro_rules! attempt {
    ($check:expr, $e:expr) => {
        match lift($check, $e)? {
            Ok(v) => v,
            Err(v) => return Ok(Some(v)),
        }
    };
}

fn cover_err(e: CoverError) -> SymbolicError {
    SymbolicError::Cover(e)
}

fn ideal_err(e: IdealError) -> SymbolicError {
    SymbolicError::Ideal(e)
}

/// Runs one check by name. Unknown names panic.
pub fn run_check(check: &'static str, g: &WeightedOrientedGraph, limits: &Limits) -> Outcome {
    match check {
        "decomposition" => {
            attempt!(check, symbolic::decomposition(g, limits));
        }
        "dual-path" => {
            for s in POWERS {
                let main = attempt!(check, symbolic::symbolic_power(g, s, limits));
                let oracle = attempt!(check, symbolic::symbolic_power_oracle(g, s, OracleScope::Maximal, limits));
                if main != oracle {
                    return violation(check, format!("routes differ at s = {s}"));
                }
            }
        }
        "containment" => {
            for s in POWERS {
                let ordinary = attempt!(check, symbolic::edge_ideal(g).power_within(s, limits).map_err(ideal_err));
                let sym = attempt!(check, symbolic::symbolic_power(g, s, limits));
                for m in ordinary.generators() {
                    if !attempt!(check, sym.contains_monomial(m).map_err(ideal_err)) {
                        return violation(check, format!("{} in I^{s} but not in I^({s})", format::monomial_string(g, m)));
                    }
                }
            }
        }
        "sink-weights" => {
            let t = g.trivialize_sinks();
            for s in POWERS {
                let a = attempt!(check, symbolic::compare_powers(g, s, limits)).equal;
                let b = attempt!(check, symbolic::compare_powers(&t, s, limits)).equal;
                if a != b {
                    return violation(check, format!("equality at s = {s} changes from {a} to {b}"));
                }
            }
        }
        "svc-monotone" => {
            let all = attempt!(check, covers::vertex_covers(g, limits).map_err(SymbolicError::from));
            for c in all {
                let p = attempt!(check, covers::partition(g, c).map_err(cover_err));
                let good = p.l3.difference(p.failing);
                for v in c.complement(g.vertex_count()) {
                    let bigger = attempt!(check, covers::partition(g, c.with(v)).map_err(cover_err));
                    for x in good {
                        if !bigger.l3.contains(x) || bigger.failing.contains(x) {
                            return violation(check, format!("{} loses SVC when {} joins", g.name(x), g.name(v)));
                        }
                    }
                }
            }
        }
        "shrink-keeps-heavy" => {
            let all = attempt!(check, covers::vertex_covers(g, limits).map_err(SymbolicError::from));
            for c in all {
                let p = attempt!(check, covers::partition(g, c).map_err(cover_err));
                let shrunk = attempt!(check, covers::shrink_to_strong(g, c).map_err(cover_err));
                let q = attempt!(check, covers::partition(g, shrunk).map_err(cover_err));
                if !q.is_strong() || !shrunk.is_subset(c) {
                    return violation(check, "shrinking did not give a strong subcover");
                }
                for x in c.difference(p.l1) {
                    if g.weight(x) >= 2 && q.l1.contains(x) {
                        return violation(check, format!("{} moved into L1", g.name(x)));
                    }
                }
            }
        }
        "strong-subcover-exists" => {
            let strong: Vec<VertexSet> =
                attempt!(check, covers::strong_covers(g, limits).map_err(SymbolicError::from)).iter().map(|p| p.cover).collect();
            let all = attempt!(check, covers::vertex_covers(g, limits).map_err(SymbolicError::from));
            for c in all {
                let p = attempt!(check, covers::partition(g, c).map_err(cover_err));
                for x in c.difference(p.l3) {
                    if !strong.iter().any(|&s| s.is_subset(c) && s.contains(x)) {
                        return violation(check, format!("no strong subcover keeps {}", g.name(x)));
                    }
                }
            }
        }
        other => panic!("unknown check {other}"),
    }
    Ok(None)
}

pub fn run_all(g: &WeightedOrientedGraph, limits: &Limits) -> Outcome {
    for check in CHECKS {
        if let Some(v) = run_check(check, g, limits)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Greedily deletes vertices, then lowers weights, keeping each step only
/// while `check` still fails. Returns the smallest graph reached.
pub fn shrink(g: &WeightedOrientedGraph, check: &'static str, limits: &Limits) -> WeightedOrientedGraph {
    let fails = |h: &WeightedOrientedGraph| matches!(run_check(check, h, limits), Ok(Some(_)));
    let mut cur = g.clone();
    'outer: loop {
        if cur.vertex_count() > 1 {
            for v in 0..cur.vertex_count() {
                if let Ok(h) = cur.remove_vertices(VertexSet::EMPTY.with(v)) {
                    if fails(&h) {
                        cur = h;
                        continue 'outer;
                    }
                }
            }
        }
        for v in 0..cur.vertex_count() {
            if cur.weight(v) > 1 {
                let mut w = cur.weights().to_vec();
                w[v] -= 1;
                if let Ok(h) = cur.with_weights(w) {
                    if fails(&h) {
                        cur = h;
                        continue 'outer;
                    }
                }
            }
        }
        return cur;
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FuzzConfig {
    pub count: usize,
    pub max_vertices: usize,
    pub max_weight: u32,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct FuzzOutcome {
    pub checked: usize,
    /// Index of the failing graph, the violation, and the shrunk graph.
    pub failure: Option<(usize, Violation, WeightedOrientedGraph)>,
    pub unequal: [usize; POWERS.len()],
}

/// Stops at the first violation.
pub fn fuzz(cfg: &FuzzConfig, limits: &Limits) -> Result<FuzzOutcome, GuardExceeded> {
    if cfg.max_vertices > limits.max_vertices {
        return Err(GuardExceeded { what: "vertex", limit: limits.max_vertices, actual: cfg.max_vertices });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = FuzzOutcome { checked: 0, failure: None, unequal: [0; POWERS.len()] };
    for i in 0..cfg.count {
        let g = random_graph(&mut rng, cfg.max_vertices, cfg.max_weight);
        out.checked += 1;
        if let Some(v) = run_all(&g, limits)? {
            let small = shrink(&g, v.check, limits);
            out.failure = Some((i, v, small));
            return Ok(out);
        }
        for (k, s) in POWERS.into_iter().enumerate() {
            if !symbolic::compare_powers(&g, s, limits).map_err(|e| *e.guard().expect("checked above"))?.equal {
                out.unequal[k] += 1;
            }
        }
    }
    Ok(out)
}

pub fn outcome_json(cfg: &FuzzConfig, o: &FuzzOutcome) -> Value {
    let failure = o.failure.as_ref().map(|(i, v, g)| {
        let doc: Value = serde_json::from_str(&format::serialize_graph(g)).expect("canonical graph JSON");
        json!({"index": i, "check": v.check, "detail": v.detail, "graph": doc})
    });
    json!({
        "seed": cfg.seed,
        "n": cfg.count,
        "vertices": cfg.max_vertices,
        "max_weight": cfg.max_weight,
        "checks": CHECKS,
        "checked": o.checked,
        "unequal": POWERS.iter().zip(o.unequal).map(|(s, k)| json!({"s": s, "graphs": k})).collect::<Vec<_>>(),
        "failure": failure,
    })
}
