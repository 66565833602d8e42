//! The per-graph verification pipeline.

use std::time::Instant;

use indpoly::bounds::{
    alekseev_weighted_bound, conjecture_bound, fixed_size_bound, independent_first_bound, kdd_union_fixed_size,
    kdd_weighted_bound, order_bound, weighted_kahn_bound,
};
use indpoly::cover::{build_cover, cover_count_bound, phi_default, verify_cover};
use indpoly::graph::{max_independent_set, write_graph6};
use indpoly::poly::independence_polynomial;
use indpoly::{BoundReport, Graph, IndependencePolynomial, Rational, VertexSet};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::{CheckKind, PhiPolicy, RunConfig};
use crate::error::{HarnessError, Result};
use crate::input::GraphItem;
use crate::record::{CheckRecord, Outcome, RecordStats, Status, Summary, VerificationRecord, VerifyOutput};

fn record(kind: CheckKind, lambda: Option<&Rational>, outcome: Outcome, exact: bool) -> CheckRecord {
    CheckRecord {
        name: kind.column(lambda),
        class: kind.class(),
        outcome,
        exact,
        equality: None,
        margin_log2: None,
        witness: None,
        note: None,
    }
}

fn skipped(kind: CheckKind, lambda: Option<&Rational>, note: &str) -> CheckRecord {
    CheckRecord { note: Some(note.to_string()), ..record(kind, lambda, Outcome::Skipped, false) }
}

fn outcome(holds: bool) -> Outcome {
    if holds {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn from_report(kind: CheckKind, lambda: Option<&Rational>, report: &BoundReport) -> CheckRecord {
    let holds = report.holds().unwrap_or(false);
    CheckRecord {
        equality: report.equality,
        margin_log2: report.margin_log2,
        ..record(kind, lambda, outcome(holds), report.holds_exact.is_some())
    }
}

fn error_record(kind: CheckKind, lambda: Option<&Rational>, message: String) -> CheckRecord {
    CheckRecord { note: Some(message), ..record(kind, lambda, Outcome::Fail, false) }
}

/// Folds per-item results into one record: fails on the first failing item,
/// otherwise keeps the smallest margin.
struct Aggregate {
    holds: bool,
    equality: bool,
    margin: Option<f64>,
    witness: Option<String>,
}

impl Aggregate {
    fn new() -> Self {
        Aggregate { holds: true, equality: false, margin: None, witness: None }
    }

    fn add(&mut self, report: &BoundReport, witness: impl FnOnce() -> String) {
        if let Some(m) = report.margin_log2 {
            self.margin = Some(self.margin.map_or(m, |old: f64| old.min(m)));
        }
        self.equality |= report.equality == Some(true);
        if self.holds && report.holds() != Some(true) {
            self.holds = false;
            self.witness = Some(witness());
        }
    }

    fn finish(self, kind: CheckKind, lambda: Option<&Rational>, exact: bool) -> CheckRecord {
        CheckRecord {
            equality: exact.then_some(self.equality),
            margin_log2: self.margin,
            witness: self.witness,
            ..record(kind, lambda, outcome(self.holds), exact)
        }
    }
}

/// Precomputed data about one graph.
struct Subject<'a> {
    g: &'a Graph,
    poly: IndependencePolynomial,
    mis: VertexSet,
    d: Option<usize>,
    values: Vec<Rational>,
}

impl Subject<'_> {
    fn n(&self) -> usize {
        self.g.n()
    }

    fn alpha(&self) -> usize {
        self.mis.len()
    }

    /// Independent-first order: a maximum independent set, then the rest.
    fn independent_first_order(&self) -> Vec<usize> {
        let rest = self.g.vertices().difference(self.mis);
        self.mis.iter().chain(rest.iter()).collect()
    }
}

fn order_text(order: &[usize]) -> String {
    order.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn random_orders(n: usize, count: usize, seed: u64, index: usize) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    (0..count)
        .map(|_| {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            order
        })
        .collect()
}

fn order_check(
    s: &Subject,
    kind: CheckKind,
    lambda: &Rational,
    value: &Rational,
    orders: &[Vec<usize>],
) -> CheckRecord {
    let mut agg = Aggregate::new();
    for order in orders {
        match order_bound(s.g, order, lambda) {
            Ok(report) => agg.add(&report.compared_with(value), || order_text(order)),
            Err(e) => return error_record(kind, Some(lambda), e.to_string()),
        }
    }
    agg.finish(kind, Some(lambda), true)
}

fn cover_checks(s: &Subject, d: usize, cfg: &RunConfig) -> Vec<CheckRecord> {
    let kind = CheckKind::Lemma3Cover;
    let per_lambda = |f: &dyn Fn(&Rational) -> CheckRecord| cfg.lambdas.iter().map(f).collect::<Vec<_>>();
    if d < 2 {
        return per_lambda(&|l| skipped(kind, Some(l), "needs degree at least 2"));
    }
    let phi = match cfg.phi {
        PhiPolicy::Default => phi_default(d).expect("degree checked"),
        PhiPolicy::Explicit(phi) if phi < d => phi,
        PhiPolicy::Explicit(phi) => {
            let note = format!("phi = {phi} is not below d = {d}");
            return per_lambda(&|l| skipped(kind, Some(l), &note));
        }
    };
    let cert = match build_cover(s.g, s.mis, phi) {
        Ok(cert) => cert,
        Err(e) => return per_lambda(&|l| error_record(kind, Some(l), e.to_string())),
    };
    if let Err(defect) = verify_cover(s.g, &cert) {
        return per_lambda(&|l| CheckRecord {
            witness: Some(defect.to_string()),
            ..record(kind, Some(l), Outcome::Fail, true)
        });
    }
    let note = format!("phi = {phi}, |T| = {}, |D| = {}", cert.seeds.len(), cert.cover.len());
    cfg.lambdas
        .iter()
        .zip(&s.values)
        .map(|(lambda, value)| match cover_count_bound(s.n(), d, s.alpha(), lambda, phi) {
            Ok(bound) => CheckRecord {
                note: Some(note.clone()),
                ..from_report(kind, Some(lambda), &bound.exact.compared_with(value))
            },
            Err(e) => error_record(kind, Some(lambda), e.to_string()),
        })
        .collect()
}

fn fixed_size_check(s: &Subject, d: usize) -> CheckRecord {
    let kind = CheckKind::FixedSizeGeneral;
    let mut agg = Aggregate::new();
    for (t, count) in s.poly.coeffs().iter().enumerate() {
        match fixed_size_bound(s.n(), d, t, false) {
            Ok(report) => agg.add(&report.compared_with_count(count), || format!("t = {t}")),
            Err(e) => return error_record(kind, None, e.to_string()),
        }
    }
    agg.finish(kind, None, false)
}

fn conjecture3_check(s: &Subject, d: usize) -> CheckRecord {
    let kind = CheckKind::Conjecture3;
    let n = s.n();
    if !n.is_multiple_of(2 * d) {
        return skipped(kind, None, "2d does not divide n");
    }
    let extremal = match kdd_union_fixed_size(n / (2 * d), d) {
        Ok(p) => p,
        Err(e) => return error_record(kind, None, e.to_string()),
    };
    let top = s.poly.degree().max(extremal.degree());
    let violation = (0..=top).find(|&t| s.poly.coeff(t) > extremal.coeff(t));
    let equal = (0..=top).all(|t| s.poly.coeff(t) == extremal.coeff(t));
    CheckRecord {
        equality: Some(equal),
        witness: violation.map(|t| format!("t = {t}: {} > {}", s.poly.coeff(t), extremal.coeff(t))),
        ..record(kind, None, outcome(violation.is_none()), true)
    }
}

fn run_checks(s: &Subject, index: usize, cfg: &RunConfig) -> Vec<CheckRecord> {
    let regular = s.d.filter(|&d| d >= 1);
    let not_regular = "graph is not regular with degree at least 1";
    let random = if cfg.enabled(CheckKind::Lemma1Random) && regular.is_some() {
        random_orders(s.n(), cfg.orders, cfg.seed, index)
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    for &kind in &cfg.checks {
        if kind == CheckKind::Lemma3Cover {
            match regular {
                Some(d) => out.extend(cover_checks(s, d, cfg)),
                None => out.extend(cfg.lambdas.iter().map(|l| skipped(kind, Some(l), not_regular))),
            }
            continue;
        }
        if !kind.per_lambda() {
            out.push(match (kind, regular) {
                (_, None) => skipped(kind, None, not_regular),
                (CheckKind::AlphaHalf, Some(_)) => record(kind, None, outcome(2 * s.alpha() <= s.n()), true),
                (CheckKind::FixedSizeGeneral, Some(d)) => fixed_size_check(s, d),
                (CheckKind::Conjecture1, Some(d)) => match conjecture_bound(s.n(), d) {
                    Ok(report) => from_report(kind, None, &report.compared_with_count(&s.poly.total())),
                    Err(e) => error_record(kind, None, e.to_string()),
                },
                (CheckKind::Conjecture3, Some(d)) => conjecture3_check(s, d),
                _ => unreachable!("per-activity check {kind:?}"),
            });
            continue;
        }
        for (lambda, value) in cfg.lambdas.iter().zip(&s.values) {
            let l = Some(lambda);
            let lemma2 = || alekseev_weighted_bound(s.n(), s.alpha(), lambda).map(|r| r.compared_with(value));
            let rec = match (kind, regular) {
                (CheckKind::Lemma2, _) => match lemma2() {
                    Ok(report) => from_report(kind, l, &report),
                    Err(e) => error_record(kind, l, e.to_string()),
                },
                (CheckKind::Lemma2Equality, _) => match lemma2() {
                    Ok(report) => {
                        let expected = s.g.is_equal_clique_union();
                        let note = if expected { "union of equal cliques" } else { "not a union of equal cliques" };
                        CheckRecord {
                            equality: report.equality,
                            note: Some(note.to_string()),
                            ..record(kind, l, outcome(report.equality == Some(expected)), true)
                        }
                    }
                    Err(e) => error_record(kind, l, e.to_string()),
                },
                (_, None) => skipped(kind, l, not_regular),
                (CheckKind::Lemma1Natural, Some(_)) => order_check(s, kind, lambda, value, &[(0..s.n()).collect()]),
                (CheckKind::Lemma1IndependentFirst, Some(_)) => {
                    order_check(s, kind, lambda, value, &[s.independent_first_order()])
                }
                (CheckKind::Lemma1Random, Some(_)) if random.is_empty() => {
                    skipped(kind, l, "no random orders requested")
                }
                (CheckKind::Lemma1Random, Some(_)) => order_check(s, kind, lambda, value, &random),
                (CheckKind::IndependentFirst, Some(d)) => {
                    bound_check(kind, l, independent_first_bound(s.n(), d, s.alpha(), lambda), value)
                }
                (CheckKind::WeightedKahn, Some(d)) => {
                    bound_check(kind, l, weighted_kahn_bound(s.n(), d, lambda), value)
                }
                (CheckKind::WeightedConjecture, Some(d)) => {
                    bound_check(kind, l, kdd_weighted_bound(s.n(), d, lambda), value)
                }
                _ => unreachable!("single check {kind:?}"),
            };
            out.push(rec);
        }
    }
    out
}

fn bound_check(
    kind: CheckKind,
    lambda: Option<&Rational>,
    report: Result<BoundReport, indpoly::BoundError>,
    value: &Rational,
) -> CheckRecord {
    match report {
        Ok(report) => from_report(kind, lambda, &report.compared_with(value)),
        Err(e) => error_record(kind, lambda, e.to_string()),
    }
}

/// Runs every enabled check on one graph.
pub fn verify_graph(index: usize, item: &GraphItem, cfg: &RunConfig) -> VerificationRecord {
    let start = Instant::now();
    let g = &item.graph;
    let mut stats = RecordStats { n: g.n(), d: g.regular_degree(), alpha: None, edge_count: g.edge_count() };
    let (status, checks) = if g.n() > cfg.cap {
        (Status::Skipped, Vec::new())
    } else {
        let poly = independence_polynomial(g);
        let mis = max_independent_set(g);
        debug_assert_eq!(mis.len(), poly.degree());
        stats.alpha = Some(mis.len());
        let values = cfg.lambdas.iter().map(|l| poly.evaluate(l)).collect();
        let subject = Subject { g, poly, mis, d: stats.d, values };
        let checks = run_checks(&subject, index, cfg);
        (VerificationRecord::status_of(&checks), checks)
    };
    VerificationRecord {
        index,
        graph_id: item.id.clone(),
        graph6: write_graph6(g),
        stats,
        status,
        checks,
        elapsed: cfg.timings.then(|| start.elapsed().as_secs_f64()),
    }
}

/// Verifies a corpus in parallel; records come back in input order.
pub fn verify_all(items: &[GraphItem], cfg: &RunConfig) -> Result<VerifyOutput> {
    let run = || -> Vec<VerificationRecord> {
        items.par_iter().enumerate().map(|(i, item)| verify_graph(i, item, cfg)).collect()
    };
    let records = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| HarnessError::Config(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(VerifyOutput { config: cfg.clone(), summary: Summary::of(&records), records })
}
