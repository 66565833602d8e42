//! Greedy seed/cover construction for independent sets in regular graphs.
//!
//! Given an independent set `I` and a threshold `phi`, seeds `T ⊆ I` are
//! chosen greedily: start from the lowest vertex of `I`, then repeatedly add
//! the lowest `u ∈ I` that still has at least `phi` neighbours outside
//! `N(T)`. The cover is `D(T) = {v ∉ N(T) : |N(v) \ N(T)| < phi}`. For a
//! `d`-regular graph on `n` vertices this gives
//!
//! * `|T| <= n / phi`,
//! * `I ⊆ D`,
//! * `|D| <= n d / (2d - phi)`,
//!
//! and since `D` depends on `T` alone, every independent set is recovered by
//! choosing a small `T` and then an independent subset of `D(T)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{log2, BoundError, BoundReport};
use crate::graph::{Graph, VertexSet};
use crate::scalar::{rational_from_u64, rational_pow};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("phi = {phi} must satisfy 0 < phi < d = {d}")]
    PhiOutOfRange { phi: usize, d: usize },
    #[error("vertex set {0:?} is not independent")]
    NotIndependent(Vec<usize>),
    #[error("vertex set {0:?} is not contained in the graph")]
    OutOfRange(Vec<usize>),
}

/// Reason a certificate fails verification.
#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "defect", rename_all = "snake_case")]
pub enum CoverDefect {
    #[error("graph setup invalid: {0}")]
    Setup(String),
    #[error("trace does not list the seed set exactly once each")]
    TraceMismatch,
    #[error("seed {vertex} is not in the source independent set")]
    SeedOutsideSource { vertex: usize },
    #[error("step {step} adds vertex {vertex} with fewer than phi new neighbours")]
    WeakStep { step: usize, vertex: usize },
    #[error("construction stopped early: vertex {vertex} is still eligible")]
    NotStopped { vertex: usize },
    #[error("cover vertex {vertex} lies in N(T)")]
    CoverMeetsNeighborhood { vertex: usize },
    #[error("cover vertex {vertex} has at least phi neighbours outside N(T)")]
    CoverVertexExposed { vertex: usize },
    #[error("cover differs from D(T) recomputed from the seeds")]
    CoverMismatch,
    #[error("|T| = {seeds} exceeds n / phi")]
    TooManySeeds { seeds: usize },
    #[error("source vertex {vertex} is not in the cover")]
    SourceNotCovered { vertex: usize },
    #[error("|D| = {cover} exceeds n d / (2d - phi)")]
    CoverTooLarge { cover: usize },
}

/// The seed set `T`, cover `D`, threshold and the trace that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub seeds: VertexSet,
    pub cover: VertexSet,
    pub phi: usize,
    pub source: VertexSet,
    /// Seeds in the order they were chosen.
    pub trace: Vec<usize>,
}

/// `floor(sqrt(d log2 d))`, clamped to `[1, d - 1]`.
///
/// Computed exactly: the result is the largest `k` with `2^(k^2) <= d^d`.
pub fn phi_default(d: usize) -> Result<usize, CoverError> {
    if d < 2 {
        return Err(CoverError::DegreeTooSmall(d));
    }
    let target = BigUint::from(d).pow(d as u32);
    let mut k = 0usize;
    while BigUint::one() << ((k + 1) * (k + 1)) <= target {
        k += 1;
    }
    Ok(k.clamp(1, d - 1))
}

/// `D(T)`: vertices outside `N(T)` with fewer than `phi` neighbours outside
/// `N(T)`.
pub fn cover_of(g: &Graph, seeds: VertexSet, phi: usize) -> VertexSet {
    let blocked = g.neighborhood(seeds);
    VertexSet::from_vertices(
        g.vertices().difference(blocked).iter().filter(|&v| g.neighbors(v).difference(blocked).len() < phi),
    )
}

fn regular_degree_for_cover(g: &Graph, phi: usize) -> Result<usize, CoverError> {
    let d = g.regular_degree().ok_or(CoverError::NotRegular)?;
    if d < 2 {
        return Err(CoverError::DegreeTooSmall(d));
    }
    if phi == 0 || phi >= d {
        return Err(CoverError::PhiOutOfRange { phi, d });
    }
    Ok(d)
}

/// Runs the greedy construction for the independent set `source`.
///
/// An empty `source` yields `T = ∅` and `D = {v : deg(v) < phi}`, which is
/// empty for regular input.
pub fn build_cover(g: &Graph, source: VertexSet, phi: usize) -> Result<CoverCertificate, CoverError> {
    regular_degree_for_cover(g, phi)?;
    if !source.is_subset(g.vertices()) {
        return Err(CoverError::OutOfRange(source.to_vec()));
    }
    if !g.is_independent(source) {
        return Err(CoverError::NotIndependent(source.to_vec()));
    }

    let mut seeds = VertexSet::EMPTY;
    let mut trace = Vec::new();
    let mut blocked = VertexSet::EMPTY;
    if let Some(first) = source.iter().next() {
        seeds.insert(first);
        trace.push(first);
        blocked = g.neighbors(first);
        while let Some(u) = source.difference(seeds).iter().find(|&u| g.neighbors(u).difference(blocked).len() >= phi) {
            seeds.insert(u);
            trace.push(u);
            blocked = blocked.union(g.neighbors(u));
        }
    }
    debug_assert_eq!(blocked, g.neighborhood(seeds));

    Ok(CoverCertificate { seeds, cover: cover_of(g, seeds, phi), phi, source, trace })
}

/// Checks every property of a certificate against `g`, recomputing the cover
/// from the seeds.
pub fn verify_cover(g: &Graph, cert: &CoverCertificate) -> Result<(), CoverDefect> {
    let phi = cert.phi;
    let d = regular_degree_for_cover(g, phi).map_err(|e| CoverDefect::Setup(e.to_string()))?;
    let all = g.vertices();
    if !cert.source.is_subset(all) || !cert.seeds.is_subset(all) || !cert.cover.is_subset(all) {
        return Err(CoverDefect::Setup("sets exceed the vertex range".into()));
    }
    if !g.is_independent(cert.source) {
        return Err(CoverDefect::Setup("source set is not independent".into()));
    }

    let traced = VertexSet::from_vertices(cert.trace.iter().copied());
    if traced != cert.seeds || cert.trace.len() != cert.seeds.len() {
        return Err(CoverDefect::TraceMismatch);
    }
    if let Some(vertex) = cert.seeds.difference(cert.source).iter().next() {
        return Err(CoverDefect::SeedOutsideSource { vertex });
    }
    if cert.trace.is_empty() != cert.source.is_empty() {
        return Err(CoverDefect::TraceMismatch);
    }
    let mut blocked = VertexSet::EMPTY;
    for (step, &vertex) in cert.trace.iter().enumerate() {
        if step > 0 && g.neighbors(vertex).difference(blocked).len() < phi {
            return Err(CoverDefect::WeakStep { step, vertex });
        }
        blocked = blocked.union(g.neighbors(vertex));
    }
    if let Some(vertex) =
        cert.source.difference(cert.seeds).iter().find(|&u| g.neighbors(u).difference(blocked).len() >= phi)
    {
        return Err(CoverDefect::NotStopped { vertex });
    }

    if let Some(vertex) = cert.cover.intersection(blocked).iter().next() {
        return Err(CoverDefect::CoverMeetsNeighborhood { vertex });
    }
    if let Some(vertex) = cert.cover.iter().find(|&v| g.neighbors(v).difference(blocked).len() >= phi) {
        return Err(CoverDefect::CoverVertexExposed { vertex });
    }
    if cover_of(g, cert.seeds, phi) != cert.cover {
        return Err(CoverDefect::CoverMismatch);
    }

    let n = g.n();
    if cert.seeds.len() * phi > n {
        return Err(CoverDefect::TooManySeeds { seeds: cert.seeds.len() });
    }
    if let Some(vertex) = cert.source.difference(cert.cover).iter().next() {
        return Err(CoverDefect::SourceNotCovered { vertex });
    }
    if cert.cover.len() * (2 * d - phi) > n * d {
        return Err(CoverDefect::CoverTooLarge { cover: cert.cover.len() });
    }
    Ok(())
}

impl CoverCertificate {
    pub fn verify(&self, g: &Graph) -> bool {
        verify_cover(g, self).is_ok()
    }
}

/// The cover-counting bound in exact form and in its relaxed closed form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverCountBound {
    /// `sum_{t <= n/phi} C(n, t) (1 + lambda n d / ((2d - phi) alpha))^alpha`.
    pub exact: BoundReport,
    /// `(1 + lambda n / 2alpha)^alpha (2d/(2d - phi))^n 2^(3 n log2(e phi) / phi)`.
    pub relaxed: BoundReport,
}

fn check_cover_params(n: usize, d: usize, alpha: usize, lambda: &Rational, phi: usize) -> Result<(), BoundError> {
    if !(lambda > &Rational::from_integer(BigInt::from(0))) {
        return Err(BoundError::NonPositiveActivity(crate::scalar::format_rational(lambda)));
    }
    if phi == 0 || phi >= d {
        return Err(BoundError::PhiOutOfRange { phi, d });
    }
    if d > n {
        return Err(BoundError::Invalid(format!("degree {d} exceeds n = {n}")));
    }
    if alpha == 0 {
        return Err(BoundError::ZeroAlpha(n));
    }
    Ok(())
}

/// `(1 + lambda n d / ((2d - phi) alpha))^alpha`, the weighted count bound for
/// the subgraph induced by one cover.
pub fn cover_power_term(n: usize, d: usize, alpha: usize, lambda: &Rational, phi: usize) -> Rational {
    let ratio = lambda * rational_from_u64((n * d) as u64) / rational_from_u64(((2 * d - phi) * alpha) as u64);
    rational_pow(&(Rational::one() + ratio), alpha as u64)
}

/// Number of seed sets considered: `sum_{t <= n/phi} C(n, t)`.
pub fn seed_set_count(n: usize, phi: usize) -> BigUint {
    let mut binom = BigUint::one();
    let mut total = BigUint::one();
    for t in 1..=n / phi {
        binom = binom * BigUint::from(n + 1 - t) / BigUint::from(t);
        total += &binom;
    }
    total
}

pub fn cover_count_bound(
    n: usize,
    d: usize,
    alpha: usize,
    lambda: &Rational,
    phi: usize,
) -> Result<CoverCountBound, BoundError> {
    check_cover_params(n, d, alpha, lambda, phi)?;
    let seeds = Rational::from_integer(BigInt::from(seed_set_count(n, phi)));
    let value = seeds * cover_power_term(n, d, alpha, lambda, phi);
    let log = crate::scalar::log2_rational(&value);
    let exact = BoundReport::log_only("cover_count", log)
        .with_exact(value, 1)
        .with_lambda(lambda)
        .with_constant("phi", phi as f64);
    let lambda_f = lambda.to_f64().expect("activity representable as f64");
    let relaxed = BoundReport::log_only(
        "cover_count_relaxed",
        log2::cover_relaxed(n as f64, d as f64, alpha as f64, lambda_f, phi as f64),
    )
    .with_lambda(lambda)
    .with_constant("phi", phi as f64);
    Ok(CoverCountBound { exact, relaxed })
}

/// `(1 + lambda n / 2alpha)^alpha exp2{c n sqrt(log2 d / d)}` with the
/// caller's constant `c`; requires `d >= 2`.
pub fn lemma3_bound(n: usize, d: usize, alpha: usize, lambda: &Rational, c: f64) -> Result<BoundReport, BoundError> {
    if d < 2 {
        return Err(BoundError::DegreeTooSmall { min: 2, got: d });
    }
    if alpha == 0 {
        return Err(BoundError::ZeroAlpha(n));
    }
    if !(c > 0.0 && c.is_finite()) {
        return Err(BoundError::NonPositiveConstant { name: "c", value: c });
    }
    let lambda_f = lambda.to_f64().filter(|l| *l > 0.0);
    let lambda_f = lambda_f.ok_or_else(|| BoundError::NonPositiveActivity(crate::scalar::format_rational(lambda)))?;
    Ok(BoundReport::log_only("lemma3", log2::lemma3(n as f64, d as f64, alpha as f64, lambda_f, c))
        .with_lambda(lambda)
        .with_constant("c", c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, petersen, random_regular};
    use crate::poly::independence_polynomial;
    use crate::scalar::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn phi_defaults() {
        assert_eq!(phi_default(2).unwrap(), 1);
        assert_eq!(phi_default(4).unwrap(), 2);
        assert_eq!(phi_default(16).unwrap(), 8);
        assert_eq!(phi_default(1), Err(CoverError::DegreeTooSmall(1)));
        for d in 2..200usize {
            let x = d as f64 * (d as f64).log2();
            let expected = (x.sqrt().floor() as usize).clamp(1, d - 1);
            assert_eq!(phi_default(d).unwrap(), expected, "d = {d}");
        }
    }

    #[test]
    fn five_cycle_trace() {
        let g = cycle(5).unwrap();
        let cert = build_cover(&g, set(&[0, 2]), 1).unwrap();
        assert_eq!((cert.seeds, cert.cover, cert.trace.clone()), (set(&[0, 2]), set(&[0, 2]), vec![0, 2]));
        assert_eq!(verify_cover(&g, &cert), Ok(()));
        // |D| = 2 <= 10/3
        assert!(cert.cover.len() * 3 <= 10);
    }

    #[test]
    fn complete_bipartite_trace() {
        for d in 2..=6 {
            let g = complete_bipartite(d).unwrap();
            let side = VertexSet::from_vertices(0..d);
            for phi in 1..d {
                let cert = build_cover(&g, side, phi).unwrap();
                assert_eq!((cert.seeds, cert.cover), (set(&[0]), side));
                assert!(cert.verify(&g));
                assert!(d * (2 * d - phi) <= 2 * d * d);
            }
        }
    }

    #[test]
    fn empty_source() {
        let g = petersen();
        let cert = build_cover(&g, VertexSet::EMPTY, 2).unwrap();
        assert!(cert.seeds.is_empty() && cert.cover.is_empty() && cert.trace.is_empty());
        assert_eq!(verify_cover(&g, &cert), Ok(()));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(build_cover(&complete(2).unwrap(), set(&[0]), 1), Err(CoverError::DegreeTooSmall(1)));
        assert_eq!(build_cover(&path(4).unwrap(), set(&[0]), 1), Err(CoverError::NotRegular));
        let g = cycle(5).unwrap();
        assert_eq!(build_cover(&g, set(&[0, 1]), 1), Err(CoverError::NotIndependent(vec![0, 1])));
        assert_eq!(build_cover(&g, set(&[0]), 2), Err(CoverError::PhiOutOfRange { phi: 2, d: 2 }));
        assert_eq!(build_cover(&g, set(&[0]), 0), Err(CoverError::PhiOutOfRange { phi: 0, d: 2 }));
    }

    #[test]
    fn tampered_certificates_fail() {
        let g = cycle(5).unwrap();
        let mut cert = build_cover(&g, set(&[0, 2]), 1).unwrap();
        cert.cover.insert(1);
        assert_eq!(verify_cover(&g, &cert), Err(CoverDefect::CoverMeetsNeighborhood { vertex: 1 }));

        let c8 = cycle(8).unwrap();
        let full = build_cover(&c8, set(&[0, 2, 4]), 1).unwrap();
        assert_eq!(full.trace, vec![0, 2, 4]);
        let mut early = full.clone();
        early.trace.pop();
        early.seeds = set(&[0, 2]);
        early.cover = cover_of(&c8, early.seeds, 1);
        assert_eq!(verify_cover(&c8, &early), Err(CoverDefect::NotStopped { vertex: 4 }));

        let mut dropped = full.clone();
        dropped.cover = dropped.cover.difference(set(&[2]));
        assert_eq!(verify_cover(&c8, &dropped), Err(CoverDefect::CoverMismatch));

        let mut outside = full;
        outside.trace = vec![0, 2, 5];
        outside.seeds = set(&[0, 2, 5]);
        assert_eq!(verify_cover(&c8, &outside), Err(CoverDefect::SeedOutsideSource { vertex: 5 }));
    }

    #[test]
    fn cover_depends_on_seeds_only() {
        for seed in 0..30 {
            let g = random_regular(16, 4, seed).unwrap();
            let source = crate::graph::max_independent_set(&g);
            for phi in 1..4 {
                let cert = build_cover(&g, source, phi).unwrap();
                assert_eq!(cover_of(&g, cert.seeds, phi), cert.cover);
                assert_eq!(verify_cover(&g, &cert), Ok(()));
            }
        }
    }

    #[test]
    fn cover_count_examples() {
        let rep = cover_count_bound(5, 2, 2, &r("1"), 1).unwrap();
        assert_eq!(rep.exact.exact_value, Some(r("2048/9")));
        let rep = rep.exact.compared_with(&r("11"));
        assert_eq!(rep.holds_exact, Some(true));

        for (n, d, alpha) in [(5usize, 2usize, 2usize), (10, 3, 4), (16, 4, 6), (24, 5, 9)] {
            for phi in 1..d {
                for lambda in [r("1/2"), r("1"), r("2")] {
                    let b = cover_count_bound(n, d, alpha, &lambda, phi).unwrap();
                    assert!(b.relaxed.log2_value >= b.exact.log2_value, "{n} {d} {alpha} {phi}");
                }
            }
        }

        let tiny = cover_count_bound(10, 3, 4, &r("1/1000000000"), 2).unwrap();
        let seeds = seed_set_count(10, 2);
        assert_eq!(seeds, BigUint::from(1 + 10 + 45 + 120 + 210 + 252u32));
        let floor = Rational::from_integer(BigInt::from(seeds));
        let value = tiny.exact.exact_value.unwrap();
        assert!(value > floor && value < floor * r("1000001/1000000"));

        assert!(cover_count_bound(5, 2, 2, &r("1"), 2).is_err());
        assert!(cover_count_bound(5, 2, 0, &r("1"), 1).is_err());
    }

    #[test]
    fn power_term_grows_with_alpha() {
        for (n, d, phi) in [(10usize, 3usize, 1usize), (20, 4, 2), (24, 5, 3)] {
            for lambda in [r("1/2"), r("1"), r("2")] {
                let terms: Vec<Rational> = (1..=n / 2).map(|a| cover_power_term(n, d, a, &lambda, phi)).collect();
                assert!(terms.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn lemma3_examples() {
        let rep = lemma3_bound(10, 3, 4, &r("1"), 1.0).unwrap();
        let expected = 4.0 * 2.25f64.log2() + 10.0 * (3f64.log2() / 3.0).sqrt();
        assert!((rep.log2_value - expected).abs() < 1e-9);
        assert!((rep.log2_value.exp2() - 3951.7).abs() < 0.1);
        let p = independence_polynomial(&petersen()).total();
        assert_eq!(rep.compared_with_count(&p).holds(), Some(true));

        // alpha = n/2 gives (1 + lambda)^(n/2) 2^(c n sqrt(log d / d))
        let half = lemma3_bound(12, 4, 6, &r("2"), 0.5).unwrap();
        assert!((half.log2_value - (6.0 * 3f64.log2() + 0.5 * 12.0 * (2.0f64 / 4.0).sqrt())).abs() < 1e-9);
        assert!(lemma3_bound(12, 1, 6, &r("1"), 1.0).is_err());
    }

    #[test]
    fn certificate_json() {
        let g = cycle(5).unwrap();
        let cert = build_cover(&g, set(&[0, 2]), 1).unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["seeds"], serde_json::json!([0, 2]));
        assert_eq!(json["phi"], 1);
        let back: CoverCertificate = serde_json::from_value(json).unwrap();
        assert_eq!(back, cert);
    }
}
