//! Exact maximum independent set by branch and bound.
//!
//! Branches on a maximum-degree vertex of the residual graph (lowest index on
//! ties), taking the include branch first, and prunes with a greedy clique
//! cover of the residual vertices: every independent set meets each clique at
//! most once, so the number of cliques bounds what the residual can add.

use super::{bit, Graph, Mask, VertexSet};

/// A maximum independent set of `g`. The witness is deterministic.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let mut search = Search { adj: g.adj(), best: 0, best_size: 0 };
    search.run(g.vertices().0, 0);
    VertexSet(search.best)
}

struct Search<'a> {
    adj: &'a [Mask],
    best: Mask,
    best_size: u32,
}

impl Search<'_> {
    fn run(&mut self, mut cand: Mask, mut chosen: Mask) {
        // Vertices with at most one residual neighbour belong to some maximum
        // independent set of the residual graph.
        loop {
            let mut forced = None;
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (self.adj[v] & cand).count_ones() <= 1 {
                    forced = Some(v);
                    break;
                }
            }
            match forced {
                Some(v) => {
                    chosen |= bit(v);
                    cand &= !(bit(v) | self.adj[v]);
                }
                None => break,
            }
        }

        let size = chosen.count_ones();
        if cand == 0 {
            if size > self.best_size {
                self.best = chosen;
                self.best_size = size;
            }
            return;
        }
        if size + self.clique_cover_bound(cand) <= self.best_size {
            return;
        }

        let pivot = self.max_degree_vertex(cand);
        self.run(cand & !(bit(pivot) | self.adj[pivot]), chosen | bit(pivot));
        self.run(cand & !bit(pivot), chosen);
    }

    fn max_degree_vertex(&self, cand: Mask) -> usize {
        let mut best = (0, usize::MAX);
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let deg = (self.adj[v] & cand).count_ones();
            if best.1 == usize::MAX || deg > best.0 {
                best = (deg, v);
            }
        }
        best.1
    }

    fn clique_cover_bound(&self, cand: Mask) -> u32 {
        let mut rest = cand;
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut extendable = rest & self.adj[v];
            while extendable != 0 {
                let w = extendable.trailing_zeros() as usize;
                rest &= !bit(w);
                extendable &= self.adj[w] & !bit(w);
            }
            cliques += 1;
        }
        cliques
    }
}
