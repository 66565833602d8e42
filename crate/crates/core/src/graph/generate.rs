use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{bit, Graph, GraphError, MAX_VERTICES};

/// Pairing attempts before giving up.
pub const RETRY_CAP: usize = 10_000;

pub(super) fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    random_regular_attempts(n, d, seed).map(|(g, _)| g)
}

/// Like [`super::random_regular`], also returning the number of pairing
/// attempts consumed.
///
/// Dense targets (`2d > n - 1`) are sampled as the complement of a sparse
/// `(n - 1 - d)`-regular graph. Complementation is a bijection between the
/// labelled simple graphs of the two degrees, so the output distribution is
/// unchanged while the rejection rate drops sharply.
pub fn random_regular_attempts(n: usize, d: usize, seed: u64) -> Result<(Graph, usize), GraphError> {
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    if d >= n.max(1) {
        return Err(GraphError::InvalidParameters(format!("degree {d} must be below n = {n}")));
    }
    if !(n * d).is_multiple_of(2) {
        return Err(GraphError::InvalidParameters(format!("n*d = {} is odd", n * d)));
    }
    let sparse_d = n - 1 - d;
    if d > sparse_d {
        let (g, attempts) = pairing(n, sparse_d, seed)?;
        return Ok((g.complement(), attempts));
    }
    pairing(n, d, seed)
}

fn pairing(n: usize, d: usize, seed: u64) -> Result<(Graph, usize), GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for attempt in 1..=RETRY_CAP {
        points.shuffle(&mut rng);
        let mut g = Graph::empty(n)?;
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.adj[u] & bit(v) != 0 {
                continue 'attempt;
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        return Ok((g, attempt));
    }
    Err(GraphError::RetriesExhausted(RETRY_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, random_regular};

    #[test]
    fn parity_and_range_errors() {
        assert!(matches!(random_regular(5, 3, 0), Err(GraphError::InvalidParameters(_))));
        assert!(matches!(random_regular(4, 4, 0), Err(GraphError::InvalidParameters(_))));
    }

    #[test]
    fn unique_cubic_on_four_vertices() {
        for seed in 0..5 {
            assert_eq!(random_regular(4, 3, seed).unwrap(), complete(4).unwrap());
        }
    }

    #[test]
    fn two_regular_is_cycle_union() {
        for seed in 0..20 {
            let g = random_regular(6, 2, seed).unwrap();
            assert_eq!(g.regular_degree(), Some(2));
            for comp in g.components() {
                assert!(comp.len() >= 3);
            }
        }
    }

    #[test]
    fn cubic_and_dense_outputs_are_regular() {
        for seed in 0..50 {
            let g = random_regular(10, 3, seed).unwrap();
            assert!(g.is_well_formed());
            assert_eq!(g.regular_degree(), Some(3));
            let h = random_regular(8, 5, seed).unwrap();
            assert_eq!(h.regular_degree(), Some(5));
        }
        assert_eq!(random_regular(6, 5, 1).unwrap(), complete(6).unwrap());
    }

    #[test]
    fn seeded_output_is_deterministic() {
        assert_eq!(random_regular(16, 3, 42).unwrap(), random_regular(16, 3, 42).unwrap());
        let distinct = (0..10).map(|s| random_regular(16, 3, s).unwrap()).collect::<std::collections::HashSet<_>>();
        assert!(distinct.len() > 1);
    }
}
