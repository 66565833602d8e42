//! Small simple graphs stored as per-vertex neighbour bit masks.

mod generate;
mod graph6;
mod mis;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use generate::random_regular_attempts;
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use mis::max_independent_set;

/// Neighbour mask word. One bit per vertex.
#[cfg(not(feature = "wide-masks"))]
pub type Mask = u64;
#[cfg(feature = "wide-masks")]
pub type Mask = u128;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = Mask::BITS as usize;

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> Mask {
    if n >= MAX_VERTICES {
        Mask::MAX
    } else {
        bit(n) - 1
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("{0} vertices exceeds the mask capacity of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("no simple realization found after {0} pairing attempts")]
    RetriesExhausted(usize),
}

/// A set of vertices of one graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub Mask);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |m, v| m | bit(v)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let vertices = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = vertices.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} exceeds mask capacity")));
        }
        Ok(VertexSet::from_vertices(vertices))
    }
}

/// Simple undirected graph on at most [`MAX_VERTICES`] vertices.
///
/// Adjacency is symmetric and irreflexive, and no mask has bits at or above
/// `n`. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Mask>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbour mask of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn adj(&self) -> &[Mask] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet(low_mask(self.n))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| VertexSet(self.adj[u] & !low_mask(u + 1)).iter().map(move |v| (u, v))).collect()
    }

    /// Common degree, if every vertex has the same degree. The empty graph
    /// on zero vertices has no degree.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Union of the neighbourhoods of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        VertexSet(set.iter().fold(0, |m, v| m | self.adj[v]))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    /// Connected components, each as a vertex set, ordered by lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices().0;
        let mut out = Vec::new();
        while rest != 0 {
            let comp = component_of(&self.adj, rest, rest.trailing_zeros() as usize);
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by
    /// `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&m| m << shift));
        Ok(Graph { n, adj })
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// True when every component is a complete graph and all components
    /// have the same order (the empty graph qualifies).
    pub fn is_equal_clique_union(&self) -> bool {
        let comps = self.components();
        let Some(first) = comps.first() else {
            return true;
        };
        let k = first.len();
        comps.iter().all(|c| c.len() == k && c.iter().all(|v| self.adj[v] | bit(v) == c.0))
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            n: self.n,
            d: self.regular_degree(),
            alpha: max_independent_set(self).len(),
            edge_count: self.edge_count(),
        }
    }

    /// Checks the structural invariants of the adjacency masks.
    pub fn is_well_formed(&self) -> bool {
        let all = low_mask(self.n);
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                self.adj[v] & !all == 0
                    && self.adj[v] & bit(v) == 0
                    && VertexSet(self.adj[v]).iter().all(|w| self.adj[w] & bit(v) != 0)
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Connected component of `start` within the induced subgraph on `within`.
pub(crate) fn component_of(adj: &[Mask], within: Mask, start: usize) -> Mask {
    let mut comp = bit(start);
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= within & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

/// Exact summary statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    /// Common degree when the graph is regular.
    pub d: Option<usize>,
    pub alpha: usize,
    pub edge_count: usize,
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameters("complete graph needs n >= 1".into()));
    }
    let mut g = Graph::empty(n)?;
    let all = low_mask(n);
    for v in 0..n {
        g.adj[v] = all & !bit(v);
    }
    Ok(g)
}

/// `C_n`, vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameters("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{d,d}` with sides `0..d` and `d..2d`.
pub fn complete_bipartite(d: usize) -> Result<Graph, GraphError> {
    if d < 1 {
        return Err(GraphError::InvalidParameters("K_{d,d} needs d >= 1".into()));
    }
    let mut g = Graph::empty(2 * d)?;
    let left = low_mask(d);
    let right = low_mask(2 * d) & !left;
    for v in 0..d {
        g.adj[v] = right;
        g.adj[d + v] = left;
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("static construction")
}

/// Disjoint union of `copies` copies of `g`.
pub fn repeat(g: &Graph, copies: usize) -> Result<Graph, GraphError> {
    let mut out = Graph::empty(0)?;
    for _ in 0..copies {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

/// Simple `d`-regular graph on `n` vertices from the pairing model,
/// deterministic in `seed`.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    generate::random_regular(n, d, seed)
}
