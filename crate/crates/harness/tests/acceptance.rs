//! Acceptance criteria 1-10, one line each. Exits nonzero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use indpoly::bounds::{
    alekseev_weighted_bound, conjecture1_holds_exact, fixed_size_bound, independent_first_bound,
    kdd_exponent_expansion, kdd_union_fixed_size, order_bound,
};
use indpoly::cover::{build_cover, cover_count_bound, verify_cover};
use indpoly::graph::{self, max_independent_set, random_regular, write_graph6};
use indpoly::poly::{brute_force_polynomial, independence_polynomial};
use indpoly::{BigUint, Graph, Rational, VertexSet};
use indpoly_harness::report::to_json;
use indpoly_harness::{run_verify, CheckKind, Outcome, RunConfig, Status};
use num_traits::{One, Pow};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = fn() -> Verdict;

fn lambdas() -> Vec<Rational> {
    RunConfig::default().lambdas
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed <= Duration::from_secs(limit_secs), || {
        format!("took {:.1}s, limit {limit_secs}s", elapsed.as_secs_f64())
    })
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = [0.1, 0.25, 0.5, 0.75, 0.9][rng.gen_range(0..5)];
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A random regular graph with `d` in 2..=5 and at most `max_n` vertices.
fn random_regular_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let d = rng.gen_range(2..=5);
    let sizes: Vec<usize> = (d + 1..=max_n).filter(|n| n * d % 2 == 0).collect();
    let n = *sizes.choose(rng).unwrap();
    random_regular(n, d, rng.gen()).unwrap()
}

fn random_maximal_independent_set(g: &Graph, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut set = VertexSet::EMPTY;
    for v in order {
        if g.neighbors(v).intersection(set).is_empty() {
            set.insert(v);
        }
    }
    set
}

fn named_family() -> Vec<Graph> {
    let mut family = vec![graph::petersen()];
    family.extend((3..=12).map(|n| graph::cycle(n).unwrap()));
    family.extend((1..=8).map(|n| graph::complete(n).unwrap()));
    family.extend((1..=6).map(|d| graph::complete_bipartite(d).unwrap()));
    family
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut corpus: Vec<Graph> = (0..200).map(|_| random_graph(&mut rng, 18)).collect();
    corpus.extend(named_family());
    for g in &corpus {
        let fast = independence_polynomial(g);
        let slow = brute_force_polynomial(g).map_err(|e| e.to_string())?;
        ensure(fast == slow, || format!("mismatch on {}: {fast:?} vs {slow:?}", write_graph6(g)))?;
    }
    within(start.elapsed(), 60)?;
    Ok(format!("{} graphs agree with enumeration", corpus.len()))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    for d in 1..=8 {
        let kdd = graph::complete_bipartite(d).unwrap();
        for m in 1..=3 {
            let g = graph::repeat(&kdd, m).unwrap();
            let expected = Pow::pow((BigUint::one() << (d + 1)) - 1u32, m as u32);
            let got = independence_polynomial(&g).total();
            ensure(got == expected, || format!("i({m} K_{{{d},{d}}}) = {got}, expected {expected}"))?;
            checked += 1;
        }
        let p = independence_polynomial(&kdd);
        for lambda in lambdas() {
            let expected = Rational::from_integer(2.into()) * Pow::pow(Rational::one() + &lambda, d) - Rational::one();
            ensure(p.evaluate(&lambda) == expected, || format!("P({lambda}, K_{{{d},{d}}}) mismatch"))?;
            checked += 1;
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!("{checked} exact identities"))
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let mut inputs = vec![
        "sweep:cycles:16".to_string(),
        "sweep:rr:4-20:3:1000:3000".to_string(),
        "sweep:rr:5-20:4:1000:4000".to_string(),
        "sweep:rr:6-20:5:1000:5000".to_string(),
    ];
    inputs.extend((2..=11).map(|k| format!("gen:complete:{k}")));
    let cfg = RunConfig { checks: [CheckKind::Conjecture1].into(), ..RunConfig::default() };
    let output = run_verify(&inputs, &cfg).map_err(|e| e.to_string())?;
    for r in &output.records {
        let check = r.check("conjecture1").ok_or("missing conjecture1 check")?;
        ensure(check.outcome == Outcome::Pass && check.exact, || format!("{}: {:?}", r.graph_id, check))?;
    }
    ensure(output.summary.counterexamples == 0 && output.summary.failures == 0, || format!("{:?}", output.summary))?;

    // Independent integer-form confirmation on the same corpus.
    let items = indpoly_harness::load_inputs(&inputs, cfg.seed).map_err(|e| e.to_string())?;
    for item in &items {
        let g = &item.graph;
        let d = g.regular_degree().ok_or("irregular graph in corpus")?;
        let i = independence_polynomial(g).total();
        ensure(conjecture1_holds_exact(&i, g.n(), d), || format!("{} violates the integer form", item.id))?;
    }
    within(start.elapsed(), 600)?;
    Ok(format!("{} regular graphs, 0 counterexamples", output.records.len()))
}

fn criterion_4() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut comparisons = 0;
    for _ in 0..100 {
        let g = random_regular_graph(&mut rng, 16);
        let poly = independence_polynomial(&g);
        for _ in 0..20 {
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.shuffle(&mut rng);
            for lambda in lambdas() {
                let value = poly.evaluate(&lambda);
                let report = order_bound(&g, &order, &lambda).map_err(|e| e.to_string())?.compared_with(&value);
                ensure(report.holds_exact == Some(true), || {
                    format!("order bound fails on {} with order {order:?} at {lambda}", write_graph6(&g))
                })?;
                comparisons += 1;
            }
        }
    }
    let c4 = graph::cycle(4).unwrap();
    let report = order_bound(&c4, &[0, 2, 1, 3], &Rational::one())
        .map_err(|e| e.to_string())?
        .compared_with(&Rational::from_integer(7.into()));
    ensure(report.exact_value == Some(Rational::from_integer(49.into())), || {
        format!("C_4 product {:?}", report.exact_value)
    })?;
    ensure(report.equality == Some(true), || "C_4 equality not reproduced".into())?;
    Ok(format!("{comparisons} exact comparisons, C_4 attains 49"))
}

fn lemma2_equality(g: &Graph, lambda: &Rational) -> Result<bool, String> {
    let alpha = max_independent_set(g).len();
    let value = independence_polynomial(g).evaluate(lambda);
    let report = alekseev_weighted_bound(g.n(), alpha, lambda).map_err(|e| e.to_string())?.compared_with(&value);
    ensure(report.holds_exact == Some(true), || format!("bound fails on {}", write_graph6(g)))?;
    Ok(report.equality == Some(true))
}

fn criterion_5() -> Verdict {
    let mut graphs = 0;
    for k in 1..=5 {
        let clique = graph::complete(k).unwrap();
        for m in 1..=4 {
            let g = graph::repeat(&clique, m).unwrap();
            for lambda in lambdas() {
                ensure(lemma2_equality(&g, &lambda)?, || format!("no equality on {m} K_{k} at {lambda}"))?;
            }
            graphs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut strict = 0;
    while strict < 50 {
        let g = random_graph(&mut rng, 16);
        if g.is_equal_clique_union() {
            continue;
        }
        for lambda in lambdas() {
            ensure(!lemma2_equality(&g, &lambda)?, || format!("unexpected equality on {}", write_graph6(&g)))?;
        }
        strict += 1;
    }
    for g in named_family() {
        for lambda in lambdas() {
            let equal = lemma2_equality(&g, &lambda)?;
            ensure(equal == g.is_equal_clique_union(), || format!("equality clause wrong on {}", write_graph6(&g)))?;
        }
        graphs += 1;
    }
    Ok(format!("equality on {graphs} clique unions and named graphs, strict on {strict} random graphs"))
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for triple in 0..500 {
        let d = rng.gen_range(3..=5);
        let sizes: Vec<usize> = (d + 1..=24).filter(|n| n * d % 2 == 0).collect();
        let n = *sizes.choose(&mut rng).unwrap();
        let g = random_regular(n, d, rng.gen()).unwrap();
        let source = random_maximal_independent_set(&g, &mut rng);
        let phi = rng.gen_range(1..d);
        let cert = build_cover(&g, source, phi).map_err(|e| e.to_string())?;
        verify_cover(&g, &cert).map_err(|e| format!("triple {triple}: {e}"))?;
        ensure(cert.seeds.len() * phi <= n, || format!("triple {triple}: |T| too large"))?;
        ensure(source.is_subset(cert.cover), || format!("triple {triple}: I not inside D"))?;
        ensure(cert.cover.len() * (2 * d - phi) <= n * d, || format!("triple {triple}: |D| too large"))?;

        let poly = independence_polynomial(&g);
        for lambda in lambdas() {
            let bound = cover_count_bound(n, d, poly.degree(), &lambda, phi).map_err(|e| e.to_string())?;
            let report = bound.exact.compared_with(&poly.evaluate(&lambda));
            ensure(report.holds_exact == Some(true), || format!("triple {triple}: count bound below P at {lambda}"))?;
        }
    }
    Ok("500 certificates verified, count bound dominates".into())
}

fn regular_corpus() -> Vec<Graph> {
    let mut corpus = vec![graph::petersen()];
    corpus.extend((3..=12).map(|n| graph::cycle(n).unwrap()));
    corpus.extend((2..=9).map(|n| graph::complete(n).unwrap()));
    for d in 1..=4 {
        for m in 1..=2 {
            corpus.push(graph::repeat(&graph::complete_bipartite(d).unwrap(), m).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    corpus.extend((0..100).map(|_| random_regular_graph(&mut rng, 20)));
    corpus
}

fn criterion_7() -> Verdict {
    let corpus = regular_corpus();
    for g in &corpus {
        let d = g.regular_degree().unwrap();
        let poly = independence_polynomial(g);
        for lambda in lambdas() {
            let report = independent_first_bound(g.n(), d, poly.degree(), &lambda)
                .map_err(|e| e.to_string())?
                .compared_with(&poly.evaluate(&lambda));
            ensure(report.exact_power as usize <= 2 * d && (2 * d) % report.exact_power as usize == 0, || {
                format!("unexpected clearing power {}", report.exact_power)
            })?;
            ensure(report.holds_exact == Some(true), || format!("fails on {} at {lambda}", write_graph6(g)))?;
        }
    }
    Ok(format!("{} regular graphs x 3 activities", corpus.len()))
}

fn criterion_8() -> Verdict {
    let gap = |d| kdd_exponent_expansion(d).map(|(exact, approx)| (exact - approx).abs()).map_err(|e| e.to_string());
    let (g10, g20) = (gap(10)?, gap(20)?);
    ensure(g10 <= 1e-4, || format!("d = 10 gap {g10:e}"))?;
    ensure(g20 <= 1e-6, || format!("d = 20 gap {g20:e}"))?;
    Ok(format!("gap {g10:.2e} at d = 10, {g20:.2e} at d = 20"))
}

fn criterion_9() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut corpus = vec![graph::petersen()];
    corpus.extend((0..100).map(|_| {
        let n = 2 * rng.gen_range(2..=8);
        random_regular(n, 3, rng.gen()).unwrap()
    }));
    let mut min_margin = f64::INFINITY;
    let mut divisible = 0;
    for g in &corpus {
        let n = g.n();
        let poly = independence_polynomial(g);
        for t in 0..=n / 2 {
            let report =
                fixed_size_bound(n, 3, t, false).map_err(|e| e.to_string())?.compared_with_count(&poly.coeff(t));
            ensure(report.holds() == Some(true), || format!("t = {t} fails on {}", write_graph6(g)))?;
            min_margin = min_margin.min(report.margin_log2.unwrap());
        }
        if n % 6 == 0 {
            let extremal = kdd_union_fixed_size(n / 6, 3).map_err(|e| e.to_string())?;
            for t in 0..=n / 2 {
                ensure(poly.coeff(t) <= extremal.coeff(t), || {
                    format!("i_{t} exceeds extremal on {}", write_graph6(g))
                })?;
            }
            divisible += 1;
        }
    }
    Ok(format!(
        "{} cubic graphs, smallest log2 margin {min_margin:.4}, coefficientwise check on {divisible}",
        corpus.len()
    ))
}

fn criterion_10() -> Verdict {
    let inputs: Vec<String> =
        ["sweep:cycles:10", "sweep:rr:8-14:3:20", "sweep:rr:6-12:4:10", "gen:petersen", "sweep:kdd:3:2"]
            .map(String::from)
            .to_vec();
    let cfg = RunConfig { seed: 10, ..RunConfig::default() };
    let render = |cfg: &RunConfig| -> Result<(String, Status), String> {
        let output = run_verify(&inputs, cfg).map_err(|e| e.to_string())?;
        let worst = output.records.iter().map(|r| r.status).min().unwrap_or(Status::Pass);
        Ok((to_json(&output, false).map_err(|e| e.to_string())?, worst))
    };
    let (first, worst) = render(&cfg)?;
    let (second, _) = render(&cfg)?;
    let (serial, _) = render(&RunConfig { jobs: Some(1), ..cfg.clone() })?;
    ensure(first == second && first == serial, || "reports differ between runs".into())?;
    ensure(worst == Status::Pass, || format!("verification status {worst:?}"))?;
    Ok(format!("{} bytes identical across 3 runs", first.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("oracle equivalence", criterion_1),
        ("extremal counts", criterion_2),
        ("conjecture 1 certification", criterion_3),
        ("ordering bound", criterion_4),
        ("weighted clique bound and equality", criterion_5),
        ("cover certificates", criterion_6),
        ("independent-first branch", criterion_7),
        ("exponent expansion", criterion_8),
        ("fixed-size bounds", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
