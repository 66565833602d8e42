//! The five subcommands as library functions returning rendered output.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use indpoly::bounds::{alekseev_weighted_bound, BoundParams};
use indpoly::cover::{build_cover, cover_count_bound, lemma3_bound, phi_default, verify_cover};
use indpoly::graph::max_independent_set;
use indpoly::poly::independence_polynomial;
use indpoly::scalar::format_rational;
use indpoly::{BoundReport, CoverCertificate, CoverDefect, Graph, GraphStats, IndependencePolynomial, VertexSet};
use num_traits::One;
use serde::Serialize;

use crate::config::{PhiPolicy, RunConfig};
use crate::error::{HarnessError, Result};
use crate::input::{load_inputs, load_single, GraphItem};
use crate::record::VerifyOutput;
use crate::report;
use crate::verify::verify_all;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Rendered command output and the process exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub exit_code: i32,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        CommandOutput { text, exit_code: 0 }
    }

    /// Writes to `out`, or returns the text for stdout when `out` is `None`.
    pub fn emit(&self, out: Option<&Path>) -> Result<()> {
        match out {
            Some(path) => fs::write(path, &self.text).map_err(|e| HarnessError::io(path, e)),
            None => {
                print!("{}", self.text);
                Ok(())
            }
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn within_cap(g: &Graph, cfg: &RunConfig) -> Result<()> {
    if g.n() > cfg.cap {
        return Err(HarnessError::OverCap { n: g.n(), cap: cfg.cap });
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct Evaluation {
    lambda: String,
    value: String,
}

#[derive(Debug, Serialize)]
struct PolyOutput {
    graph_id: String,
    #[serde(flatten)]
    polynomial: IndependencePolynomial,
    alpha: usize,
    count: String,
    values: Vec<Evaluation>,
}

pub fn cmd_poly(input: &str, cfg: &RunConfig) -> Result<CommandOutput> {
    let GraphItem { id, graph } = load_single(input, cfg.seed)?;
    within_cap(&graph, cfg)?;
    let poly = independence_polynomial(&graph);
    let values = cfg
        .lambdas
        .iter()
        .map(|l| Evaluation { lambda: format_rational(l), value: format_rational(&poly.evaluate(l)) })
        .collect();
    let out =
        PolyOutput { graph_id: id, alpha: poly.degree(), count: poly.total().to_string(), polynomial: poly, values };
    Ok(CommandOutput::ok(json(&out)?))
}

#[derive(Debug, Serialize)]
struct SkippedBound {
    name: String,
    reason: String,
}

#[derive(Debug, Serialize)]
struct BoundsOutput {
    graph_id: String,
    stats: GraphStats,
    reports: Vec<BoundReport>,
    skipped: Vec<SkippedBound>,
}

const REGULAR_ONLY: [&str; 10] = [
    "alon",
    "sapozhenko_simple",
    "kahn",
    "conjecture1",
    "theorem2",
    "kdd_weighted",
    "weighted_kahn",
    "independent_first",
    "theorem4",
    "lemma3",
];

fn bounds_csv(out: &BoundsOutput) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "name",
        "lambda",
        "log2_value",
        "exact_power",
        "exact_value",
        "holds_exact",
        "equality",
        "margin_log2",
    ])?;
    let show = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
    for r in &out.reports {
        writer.write_record([
            r.name.clone(),
            r.lambda.as_ref().map(format_rational).unwrap_or_default(),
            r.log2_value.to_string(),
            r.exact_power.to_string(),
            r.exact_value.as_ref().map(format_rational).unwrap_or_default(),
            show(r.holds_exact),
            show(r.equality),
            r.margin_log2.map(|m| m.to_string()).unwrap_or_default(),
        ])?;
    }
    let bytes = writer.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Evaluates every applicable bound at every activity and compares it with
/// the exact polynomial value.
pub fn cmd_bounds(input: &str, cfg: &RunConfig, format: Format) -> Result<CommandOutput> {
    let GraphItem { id, graph } = load_single(input, cfg.seed)?;
    within_cap(&graph, cfg)?;
    let poly = independence_polynomial(&graph);
    let stats = graph.stats();
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let mut missing = BTreeSet::new();
    for lambda in &cfg.lambdas {
        let value = poly.evaluate(lambda);
        match stats.d.filter(|&d| d >= 1) {
            Some(d) => {
                let params =
                    BoundParams { n: stats.n, d, alpha: stats.alpha, lambda: lambda.clone(), constants: cfg.constants };
                let produced = params.regular_reports();
                for name in REGULAR_ONLY {
                    let unit_only = matches!(name, "alon" | "sapozhenko_simple" | "kahn" | "conjecture1" | "theorem2");
                    if (lambda.is_one() || !unit_only) && !produced.iter().any(|r| r.name == name) {
                        missing.insert(name);
                    }
                }
                reports.extend(produced.into_iter().map(|r| r.compared_with(&value)));
            }
            None => reports.push(alekseev_weighted_bound(stats.n, stats.alpha, lambda)?.compared_with(&value)),
        }
    }
    if stats.d.filter(|&d| d >= 1).is_none() {
        skipped.extend(REGULAR_ONLY.iter().map(|name| SkippedBound {
            name: name.to_string(),
            reason: "graph is not regular with degree at least 1".into(),
        }));
    } else {
        skipped.extend(missing.into_iter().map(|name| SkippedBound {
            name: name.to_string(),
            reason: format!("preconditions not met at d = {}", stats.d.unwrap_or(0)),
        }));
    }
    let out = BoundsOutput { graph_id: id, stats, reports, skipped };
    let text = match format {
        Format::Json => json(&out)?,
        Format::Csv => bounds_csv(&out)?,
    };
    Ok(CommandOutput::ok(text))
}

/// Runs the verification pipeline over every input.
pub fn run_verify(inputs: &[String], cfg: &RunConfig) -> Result<VerifyOutput> {
    let items = load_inputs(inputs, cfg.seed)?;
    verify_all(&items, cfg)
}

pub fn cmd_verify(inputs: &[String], cfg: &RunConfig, format: Format) -> Result<CommandOutput> {
    let output = run_verify(inputs, cfg)?;
    let text = match format {
        Format::Json => report::to_json(&output, false)?,
        Format::Csv => report::to_csv(&output, false)?,
    };
    Ok(CommandOutput { text, exit_code: output.summary.exit_code() })
}

#[derive(Debug, Serialize)]
struct CoverOutput {
    graph_id: String,
    certificate: CoverCertificate,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    defect: Option<CoverDefect>,
    bounds: Vec<BoundReport>,
}

/// Parses `max`, an empty string, or a comma-separated vertex list.
pub fn parse_vertex_set(spec: &str, g: &Graph) -> Result<VertexSet> {
    let spec = spec.trim();
    if spec == "max" {
        return Ok(max_independent_set(g));
    }
    let mut set = VertexSet::EMPTY;
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| HarnessError::Input {
            input: spec.to_string(),
            message: format!("{part:?} is not a vertex index"),
        })?;
        if v >= g.n() {
            return Err(HarnessError::Input {
                input: spec.to_string(),
                message: format!("vertex {v} is outside 0..{}", g.n()),
            });
        }
        set.insert(v);
    }
    Ok(set)
}

/// Builds and checks the seed/cover certificate for one independent set.
pub fn cmd_cover(input: &str, set: &str, cfg: &RunConfig) -> Result<CommandOutput> {
    let GraphItem { id, graph } = load_single(input, cfg.seed)?;
    within_cap(&graph, cfg)?;
    let source = parse_vertex_set(set, &graph)?;
    if !graph.is_independent(source) {
        return Err(indpoly::CoverError::NotIndependent(source.to_vec()).into());
    }
    let d = graph.regular_degree().ok_or(indpoly::CoverError::NotRegular)?;
    let phi = match cfg.phi {
        PhiPolicy::Default => phi_default(d)?,
        PhiPolicy::Explicit(phi) => phi,
    };
    let certificate = build_cover(&graph, source, phi)?;
    let defect = verify_cover(&graph, &certificate).err();

    let poly = independence_polynomial(&graph);
    let alpha = poly.degree();
    let mut bounds = Vec::new();
    for lambda in &cfg.lambdas {
        let value = poly.evaluate(lambda);
        let count = cover_count_bound(graph.n(), d, alpha, lambda, phi)?;
        bounds.push(count.exact.compared_with(&value));
        bounds.push(count.relaxed.compared_with(&value));
        bounds.push(lemma3_bound(graph.n(), d, alpha, lambda, cfg.constants.c)?.compared_with(&value));
    }
    let verified = defect.is_none();
    let out = CoverOutput { graph_id: id, certificate, verified, defect, bounds };
    Ok(CommandOutput { text: json(&out)?, exit_code: if verified { 0 } else { 1 } })
}

/// Re-renders a saved `verify` JSON file, flagged graphs first.
pub fn cmd_report(records: &Path, format: Format) -> Result<CommandOutput> {
    let text = fs::read_to_string(records).map_err(|e| HarnessError::io(records, e))?;
    let output: VerifyOutput = serde_json::from_str(&text)?;
    let text = match format {
        Format::Json => report::to_json(&output, true)?,
        Format::Csv => report::to_csv(&output, true)?,
    };
    Ok(CommandOutput { text, exit_code: output.summary.exit_code() })
}
