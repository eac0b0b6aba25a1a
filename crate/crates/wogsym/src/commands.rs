//! The work behind each subcommand. Every command yields a [`RunReport`] and
//! a plain-text rendering of it.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use wogsym_core::classify::{self, ClassificationVerdict, ClassifyError};
use wogsym_core::covers::{self, CoverError};
use wogsym_core::ideals::IdealError;
use wogsym_core::symbolic::{self, OracleScope, SymbolicError};
use wogsym_core::{GuardExceeded, Limits, WeightedOrientedGraph};

use crate::catalog;
use crate::format::{self, FormatError};
use crate::fuzz::{self, FuzzConfig};
use crate::report::{self, RunReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Format(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<SymbolicError> for CliError {
    fn from(e: SymbolicError) -> Self {
        match e.guard() {
            Some(g) => CliError::Guard(*g),
            None => CliError::Internal(e.to_string()),
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        SymbolicError::Cover(e).into()
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        SymbolicError::Ideal(e).into()
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Symbolic(e) => e.into(),
            ClassifyError::Cover(e) => e.into(),
            ClassifyError::Graph(e) => CliError::Format(e.into()),
        }
    }
}

pub struct Output {
    pub report: RunReport,
    pub text: String,
}

pub struct Input {
    pub graph: WeightedOrientedGraph,
    pub digest: String,
}

/// Reads a graph file, `-` meaning standard input.
pub fn load(path: &Path, normalize: bool) -> Result<Input, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    let bytes = if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf).map_err(io)?;
        buf
    } else {
        std::fs::read(path).map_err(io)?
    };
    let text = String::from_utf8_lossy(&bytes);
    Ok(Input { graph: format::parse_graph(&text, normalize)?, digest: report::digest(&bytes) })
}

fn analysis_report(command: &str, input: &Input, results: Value, started: Instant) -> RunReport {
    let mut r = RunReport::new(command, results);
    r.input_digest = Some(input.digest.clone());
    if !input.graph.is_connected() {
        r.warnings.push("underlying graph is disconnected".to_string());
    }
    r.elapsed_ms = Some(report::millis(started.elapsed()));
    r
}

fn warnings_text(r: &RunReport, text: &mut String) {
    for w in &r.warnings {
        let _ = writeln!(text, "warning: {w}");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverFilter {
    All,
    Strong,
    Maximal,
}

pub fn covers(input: &Input, filter: CoverFilter, limits: &Limits) -> Result<Output, CliError> {
    let started = Instant::now();
    let g = &input.graph;
    let parts = match filter {
        CoverFilter::All => covers::vertex_covers(g, limits)?
            .map(|c| covers::partition(g, c))
            .collect::<Result<Vec<_>, _>>()?,
        CoverFilter::Strong => covers::strong_covers(g, limits)?,
        CoverFilter::Maximal => covers::maximal_strong_covers(g, limits)?,
    };
    let label = match filter {
        CoverFilter::All => "all",
        CoverFilter::Strong => "strong",
        CoverFilter::Maximal => "maximal-strong",
    };
    let results = json!({
        "filter": label,
        "count": parts.len(),
        "covers": parts.iter().map(|p| format::cover_json(g, p)).collect::<Vec<_>>(),
    });
    let report = analysis_report("covers", input, results, started);

    let mut text = String::new();
    warnings_text(&report, &mut text);
    let _ = writeln!(text, "{} {label} cover(s)", parts.len());
    let _ = writeln!(text, "{:<24} {:<16} {:<16} {:<16} strong", "cover", "L1", "L2", "L3");
    let brace = |s| format!("{{{}}}", g.set_names(s).join(","));
    for p in &parts {
        let _ = writeln!(
            text,
            "{:<24} {:<16} {:<16} {:<16} {}",
            brace(p.cover),
            brace(p.l1),
            brace(p.l2),
            brace(p.l3),
            if p.is_strong() { "yes" } else { "no" }
        );
    }
    Ok(Output { report, text })
}

pub fn symbolic(input: &Input, s: u32, oracle: Option<OracleScope>, limits: &Limits) -> Result<Output, CliError> {
    let started = Instant::now();
    let g = &input.graph;
    let main = symbolic::symbolic_power(g, s, limits)?;
    let mut results = json!({
        "s": s,
        "count": main.len(),
        "generators": format::ideal_strings(g, &main),
        "ideal": format::ideal_json(g, &main),
    });
    let mut agree = true;
    if let Some(scope) = oracle {
        let other = symbolic::symbolic_power_oracle(g, s, scope, limits)?;
        agree = other == main;
        let obj = results.as_object_mut().expect("object literal");
        obj.insert("oracle_scope".into(), json!(if scope == OracleScope::All { "all" } else { "maximal" }));
        obj.insert("oracle_generators".into(), json!(format::ideal_strings(g, &other)));
        obj.insert("agree".into(), json!(agree));
    }
    let mut report = analysis_report("symbolic", input, results, started);
    report.ok = agree;

    let mut text = String::new();
    warnings_text(&report, &mut text);
    let _ = writeln!(text, "I^({s}) has {} minimal generator(s):", main.len());
    for m in format::ideal_strings(g, &main) {
        let _ = writeln!(text, "  {m}");
    }
    if oracle.is_some() {
        let _ = writeln!(text, "oracle {}", if agree { "agrees" } else { "DISAGREES" });
    }
    Ok(Output { report, text })
}

pub fn compare(input: &Input, max_s: u32, full: bool, limits: &Limits) -> Result<Output, CliError> {
    if max_s < 2 {
        return Err(CliError::Usage(format!("--max-s must be at least 2, got {max_s}")));
    }
    let started = Instant::now();
    let g = &input.graph;
    let mut rows = Vec::new();
    for s in 2..=max_s {
        let t = Instant::now();
        let mut c =
            if full { symbolic::compare_powers_full(g, s, limits)? } else { symbolic::compare_powers(g, s, limits)? };
        c.elapsed = t.elapsed();
        rows.push(c);
    }
    let results = json!({
        "max_s": max_s,
        "comparisons": rows.iter().map(|c| format::comparison_json(g, c)).collect::<Vec<_>>(),
    });
    let report = analysis_report("compare", input, results, started);

    let mut text = String::new();
    warnings_text(&report, &mut text);
    let _ = writeln!(text, "{:<4} {:<6} {:>10} {:>10}  witness", "s", "equal", "|I^s|", "|I^(s)|");
    for c in &rows {
        let ord = c.gen_count_ordinary.map_or("-".to_string(), |k| k.to_string());
        let w = c.witness.as_ref().map_or("-".to_string(), |m| format::monomial_string(g, m));
        let _ = writeln!(text, "{:<4} {:<6} {:>10} {:>10}  {w}", c.s, c.equal, ord, c.gen_count_symbolic);
    }
    Ok(Output { report, text })
}

/// Vertex order `x1..xn` if `g` is a naturally oriented path.
pub fn natural_path_order(g: &WeightedOrientedGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() != n - 1 {
        return None;
    }
    let start = (0..n).find(|&v| g.in_neighbors(v).is_empty())?;
    let mut order = vec![start];
    while order.len() < n {
        let next = g.out_neighbors(*order.last()?);
        if next.len() != 1 {
            return None;
        }
        order.push(next.first()?);
    }
    let mut seen = order.clone();
    seen.sort_unstable();
    seen.dedup();
    (seen.len() == n).then_some(order)
}

pub fn classify(input: &Input, limits: &Limits) -> Result<Output, CliError> {
    let started = Instant::now();
    let g = &input.graph;
    let mut tried: Vec<ClassificationVerdict> = Vec::new();
    if let Some(order) = natural_path_order(g) {
        let weights: Vec<u32> = order.iter().map(|&v| g.weight(v)).collect();
        tried.push(classify::path_condition(&weights).map_err(FormatError::from)?);
    }
    // a two-sink graph also reads as a single junction; the narrower shape wins
    tried.push(classify::two_path_two_sink_condition(g));
    tried.push(classify::two_path_sink_condition(g));
    tried.push(classify::tree_condition(g));
    let chosen = match tried.iter().position(|v| v.applicable) {
        Some(i) => Some(classify::verify(g, tried.swap_remove(i), limits)?),
        None => None,
    };
    let pattern = if g.at_most_one_in_edge() {
        classify::atmost_pattern_scan(g)?.map(|p| p.iter().map(|&v| g.name(v).to_string()).collect::<Vec<_>>())
    } else {
        None
    };
    let results = json!({
        "verdict": chosen.as_ref().map(format::verdict_json),
        "not_applicable": tried.iter().filter(|v| !v.applicable).map(format::verdict_json).collect::<Vec<_>>(),
        "pattern": pattern,
    });
    let mut report = analysis_report("classify", input, results, started);
    report.ok = !chosen.as_ref().is_some_and(ClassificationVerdict::contradicted);

    let mut text = String::new();
    warnings_text(&report, &mut text);
    match &chosen {
        Some(v) => {
            let _ = writeln!(
                text,
                "{}: predicts {} for every s",
                format::case_name(&v.reason),
                if v.predicted_equal_all_s { "I^(s) = I^s" } else { "I^(s) != I^s" }
            );
            for &(s, eq) in &v.verified_s {
                let _ = writeln!(text, "  s = {s}: {}", if eq { "equal" } else { "unequal" });
            }
            if v.inconclusive {
                let _ = writeln!(text, "  inconclusive: no inequality found in the search window");
            }
            if v.contradicted() {
                let _ = writeln!(text, "  CONTRADICTED by computation");
            }
        }
        None => {
            let _ = writeln!(text, "no criterion applies");
        }
    }
    if let Some(p) = &pattern {
        let _ = writeln!(text, "induced pattern {} forces I^(3) != I^3", p.join(" -> "));
    }
    Ok(Output { report, text })
}

pub fn paper_examples(figure: Option<u8>, limits: &Limits) -> Result<Output, CliError> {
    let started = Instant::now();
    let facts = catalog::select(figure)
        .ok_or_else(|| CliError::Usage(format!("no facts for figure {}", figure.unwrap_or_default())))?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut failed = 0;
    for f in facts {
        let outcome = f.check(limits);
        failed += usize::from(outcome.is_err());
        let _ = writeln!(
            text,
            "{} fig {} {:<26} {}{}",
            if outcome.is_ok() { "PASS" } else { "FAIL" },
            f.figure,
            f.id,
            f.statement,
            outcome.as_ref().err().map_or(String::new(), |d| format!(" ({d})"))
        );
        rows.push(json!({
            "id": f.id,
            "figure": f.figure,
            "statement": f.statement,
            "pass": outcome.is_ok(),
            "detail": outcome.err(),
        }));
    }
    let _ = writeln!(text, "{} passed, {failed} failed", rows.len() - failed);
    let results = json!({"passed": rows.len() - failed, "failed": failed, "facts": rows});
    let mut report = RunReport::new("paper-examples", results);
    report.ok = failed == 0;
    report.elapsed_ms = Some(report::millis(started.elapsed()));
    Ok(Output { report, text })
}

pub fn fuzz(cfg: &FuzzConfig, limits: &Limits) -> Result<Output, CliError> {
    let outcome = fuzz::fuzz(cfg, limits)?;
    let mut report = RunReport::new("fuzz", fuzz::outcome_json(cfg, &outcome));
    report.ok = outcome.failure.is_none();

    let mut text = String::new();
    let _ = writeln!(text, "seed {}: {} graph(s) checked", cfg.seed, outcome.checked);
    for (s, k) in fuzz::POWERS.iter().zip(outcome.unequal) {
        let _ = writeln!(text, "  I^({s}) != I^{s} on {k}");
    }
    match &outcome.failure {
        None => {
            let _ = writeln!(text, "all checks passed");
        }
        Some((i, v, g)) => {
            let _ = writeln!(text, "graph #{i} violates {}: {}", v.check, v.detail);
            let _ = writeln!(text, "shrunk counterexample:");
            text.push_str(&format::serialize_graph(g));
        }
    }
    Ok(Output { report, text })
}
