use indpoly::cover::{build_cover, cover_count_bound};
use indpoly::graph::{self, max_independent_set, parse_graph6, random_regular, write_graph6};
use indpoly::poly::{brute_force_polynomial, independence_polynomial};
use indpoly::{BigUint, Graph, Rational, VertexSet};
use num_traits::One;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_regular() -> impl Strategy<Value = Graph> {
    (2usize..=5, 0usize..4, any::<u64>()).prop_map(|(d, extra, seed)| {
        let mut n = d + 1 + extra;
        if n * d % 2 == 1 {
            n += 1;
        }
        random_regular(n, d, seed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn counting_matches_enumeration(g in arb_graph(16)) {
        prop_assert_eq!(independence_polynomial(&g), brute_force_polynomial(&g).unwrap());
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(40)) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn union_multiplies_polynomials(g in arb_graph(10), h in arb_graph(10)) {
        let joined = g.disjoint_union(&h).unwrap();
        prop_assert!(joined.is_well_formed());
        prop_assert_eq!(
            independence_polynomial(&joined),
            independence_polynomial(&g).product(&independence_polynomial(&h))
        );
    }

    #[test]
    fn low_coefficients_and_degree(g in arb_graph(18)) {
        let p = independence_polynomial(&g);
        let n = g.n();
        prop_assert_eq!(p.coeff(0), BigUint::one());
        prop_assert_eq!(p.coeff(1), BigUint::from(n));
        prop_assert_eq!(p.coeff(2), BigUint::from(n * n.saturating_sub(1) / 2 - g.edge_count()));
        let mis = max_independent_set(&g);
        prop_assert!(g.is_independent(mis));
        prop_assert_eq!(p.degree(), mis.len());
        prop_assert_eq!(p.evaluate(&Rational::one()), Rational::from_integer(p.total().into()));
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(20)) {
        let c = g.complement();
        prop_assert!(c.is_well_formed());
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn random_regular_is_simple_and_regular(g in arb_regular()) {
        prop_assert!(g.is_well_formed());
        let d = g.regular_degree().unwrap();
        prop_assert_eq!(g.edge_count(), g.n() * d / 2);
        prop_assert!(2 * g.stats().alpha <= g.n());
    }

    #[test]
    fn covers_verify_and_dominate(g in arb_regular(), pick in any::<u64>(), phi_pick in any::<usize>()) {
        let d = g.regular_degree().unwrap();
        let phi = 1 + phi_pick % (d - 1);
        let mut source = VertexSet::EMPTY;
        for v in 0..g.n() {
            if pick >> (v % 64) & 1 == 1 && g.neighbors(v).intersection(source).is_empty() {
                source.insert(v);
            }
        }
        let cert = build_cover(&g, source, phi).unwrap();
        prop_assert!(cert.verify(&g));
        prop_assert!(cert.source.is_subset(cert.cover));

        let alpha = g.stats().alpha;
        let p = independence_polynomial(&g).evaluate(&Rational::one());
        let bound = cover_count_bound(g.n(), d, alpha, &Rational::one(), phi).unwrap();
        prop_assert_eq!(bound.exact.compared_with(&p).holds_exact, Some(true));
    }
}

#[test]
fn named_families_match_enumeration() {
    let mut family = vec![graph::petersen()];
    family.extend((3..=12).map(|n| graph::cycle(n).unwrap()));
    family.extend((1..=8).map(|n| graph::complete(n).unwrap()));
    family.extend((1..=6).map(|d| graph::complete_bipartite(d).unwrap()));
    for g in &family {
        assert_eq!(independence_polynomial(g), brute_force_polynomial(g).unwrap(), "{}", write_graph6(g));
    }
}
