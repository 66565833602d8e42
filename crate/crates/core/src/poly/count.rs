use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use super::{convolve, IndependencePolynomial, PolyError};
use crate::graph::{bit, component_of, Graph, Mask};

/// Vertex limit for [`brute_force_polynomial`].
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// Tuning knobs for [`independence_polynomial_with`].
#[derive(Debug, Clone, Copy)]
pub struct CountOptions {
    /// Maximum number of residual subgraphs remembered per call. Once full,
    /// new results are simply not stored.
    pub memo_cap: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { memo_cap: 1 << 22 }
    }
}

/// Exact independence polynomial of `g`.
pub fn independence_polynomial(g: &Graph) -> IndependencePolynomial {
    independence_polynomial_with(g, CountOptions::default())
}

/// Exact independence polynomial of `g` with explicit options.
///
/// Uses `P(G) = P(G - v) + x P(G - v - N(v))` at a maximum-degree vertex of
/// each connected residual, and `P(G) = P(A) P(B)` whenever the residual
/// splits into components. Residual vertex masks key a per-call memo table.
pub fn independence_polynomial_with(g: &Graph, options: CountOptions) -> IndependencePolynomial {
    let mut counter = Counter { adj: g.adj(), memo: HashMap::new(), cap: options.memo_cap };
    let coeffs = counter.solve(g.vertices().0);
    IndependencePolynomial::from_raw(g.n(), coeffs)
}

/// `i(G)`, the number of independent sets including the empty set.
pub fn count_independent_sets(g: &Graph) -> BigUint {
    independence_polynomial(g).total()
}

struct Counter<'a> {
    adj: &'a [Mask],
    memo: HashMap<Mask, Vec<BigUint>>,
    cap: usize,
}

impl Counter<'_> {
    fn solve(&mut self, cand: Mask) -> Vec<BigUint> {
        match cand.count_ones() {
            0 => return vec![BigUint::one()],
            1 => return vec![BigUint::one(), BigUint::one()],
            _ => {}
        }
        if let Some(hit) = self.memo.get(&cand) {
            return hit.clone();
        }

        let comp = component_of(self.adj, cand, cand.trailing_zeros() as usize);
        let coeffs = if comp != cand {
            let left = self.solve(comp);
            let right = self.solve(cand & !comp);
            convolve(&left, &right)
        } else {
            self.branch(cand)
        };

        if self.memo.len() < self.cap {
            self.memo.insert(cand, coeffs.clone());
        }
        coeffs
    }

    fn branch(&mut self, cand: Mask) -> Vec<BigUint> {
        let size = cand.count_ones();
        let (pivot, degree) = max_degree_vertex(self.adj, cand);
        if degree + 1 == size && is_clique(self.adj, cand) {
            return vec![BigUint::one(), BigUint::from(size)];
        }
        let mut without = self.solve(cand & !bit(pivot));
        let with = self.solve(cand & !(bit(pivot) | self.adj[pivot]));
        if without.len() < with.len() + 1 {
            without.resize(with.len() + 1, BigUint::default());
        }
        for (t, c) in with.into_iter().enumerate() {
            without[t + 1] += c;
        }
        without
    }
}

fn max_degree_vertex(adj: &[Mask], cand: Mask) -> (usize, u32) {
    let mut best: Option<(usize, u32)> = None;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (adj[v] & cand).count_ones();
        if best.is_none_or(|(_, d)| deg > d) {
            best = Some((v, deg));
        }
    }
    best.expect("nonempty candidate set")
}

fn is_clique(adj: &[Mask], cand: Mask) -> bool {
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (adj[v] | bit(v)) & cand != cand {
            return false;
        }
    }
    true
}

/// Independence polynomial by enumerating all `2^n` vertex subsets.
///
/// Kept deliberately naive: it serves as the oracle for
/// [`independence_polynomial`].
pub fn brute_force_polynomial(g: &Graph) -> Result<IndependencePolynomial, PolyError> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(PolyError::OverBudget(n));
    }
    let mut counts = vec![0u64; n + 1];
    for subset in 0..(1 as Mask) << n {
        let independent = (0..n).all(|v| subset >> v & 1 == 0 || g.adj()[v] & subset == 0);
        if independent {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(IndependencePolynomial::from_raw(n, counts.into_iter().map(BigUint::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, petersen, random_regular, repeat};

    fn coeffs(p: &IndependencePolynomial) -> Vec<u64> {
        p.coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(coeffs(&brute_force_polynomial(&Graph::empty(3).unwrap()).unwrap()), [1, 3, 3, 1]);
        assert_eq!(coeffs(&brute_force_polynomial(&complete(3).unwrap()).unwrap()), [1, 3]);
        assert_eq!(coeffs(&brute_force_polynomial(&cycle(4).unwrap()).unwrap()), [1, 4, 2]);
        assert_eq!(brute_force_polynomial(&Graph::empty(25).unwrap()), Err(PolyError::OverBudget(25)));
    }

    #[test]
    fn branching_examples() {
        assert_eq!(coeffs(&independence_polynomial(&complete_bipartite(2).unwrap())), [1, 4, 2]);
        for n in 1..=8 {
            assert_eq!(coeffs(&independence_polynomial(&complete(n).unwrap())), [1, n as u64]);
        }
        let c5 = independence_polynomial(&cycle(5).unwrap());
        assert_eq!((coeffs(&c5), c5.total()), (vec![1, 5, 5], BigUint::from(11u8)));
        let p = independence_polynomial(&petersen());
        assert_eq!((coeffs(&p), p.total()), (vec![1, 10, 30, 30, 5], BigUint::from(76u8)));
        assert_eq!(coeffs(&independence_polynomial(&Graph::empty(0).unwrap())), [1]);
    }

    #[test]
    fn counts() {
        assert_eq!(count_independent_sets(&cycle(5).unwrap()), BigUint::from(11u8));
        assert_eq!(count_independent_sets(&complete_bipartite(3).unwrap()), BigUint::from(15u8));
        assert_eq!(count_independent_sets(&complete(1).unwrap()), BigUint::from(2u8));
        // Fibonacci: paths count F(n+2)
        assert_eq!(count_independent_sets(&path(40).unwrap()), BigUint::from(267_914_296u64));
    }

    #[test]
    fn memo_cap_does_not_change_results() {
        let g = random_regular(24, 3, 5).unwrap();
        let full = independence_polynomial(&g);
        for cap in [0, 1, 16] {
            assert_eq!(independence_polynomial_with(&g, CountOptions { memo_cap: cap }), full);
        }
    }

    #[test]
    fn large_counts_exceed_u64() {
        let g = repeat(&complete_bipartite(4).unwrap(), 8).unwrap();
        assert_eq!(count_independent_sets(&g), BigUint::from(31u8).pow(8));
        let sparse = Graph::empty(64.min(crate::graph::MAX_VERTICES)).unwrap();
        assert_eq!(count_independent_sets(&sparse), BigUint::one() << 64u32);
    }
}
