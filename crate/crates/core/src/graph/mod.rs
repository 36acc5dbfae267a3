//! Input graphs and hypergraphs.

mod gadget;
mod generate;
mod io;
mod stats;

pub use gadget::{generate_gadget, random_admissible, random_gadget, GadgetKind, GadgetSpec};
pub use generate::{generate, random_uniform_hypergraph, Model};
pub use io::{load_edge_list, serialize};
pub use stats::{graph_stats, GraphStats};

use thiserror::Error;

/// Dense vertex label in `0..n`.
pub type VertexId = usize;
/// Nonnegative integer edge weight.
pub type Weight = u64;

/// Polynomial exponent bounding weights: weights fit in `c·⌈log₂ n⌉` bits.
pub const WEIGHT_EXPONENT: u32 = 4;

/// Bits available for an edge weight on an `n`-vertex graph.
pub fn weight_bits(n: usize) -> u32 {
    WEIGHT_EXPONENT * crate::id_bits(n)
}

/// The reserved "infinite weight" sentinel `2^(c·⌈log₂ n⌉) − 1`.
///
/// Never stored in a [`Graph`].
pub fn inf_weight(n: usize) -> Weight {
    let bits = weight_bits(n);
    if bits >= 64 {
        Weight::MAX
    } else {
        (1u64 << bits) - 1
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("weight {weight} does not fit below the infinite-weight sentinel {inf}")]
    WeightTooLarge { weight: Weight, inf: Weight },
    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("missing header line \"n <count>\"")]
    MissingHeader,
    #[error("malformed line: {0:?}")]
    Malformed(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
    #[error("hyperedge {0} has fewer than two distinct vertices")]
    SmallHyperedge(usize),
    #[error("gadget bit vectors have lengths {x} and {y}, expected {b}")]
    GadgetLength { b: usize, x: usize, y: usize },
    #[error("gadget support condition X_i + Y_i >= 1 fails at i = {0}")]
    GadgetSupport(usize),
    #[error("invalid generator parameter: {0}")]
    BadParameter(String),
}

impl GraphError {
    pub(crate) fn at_line(self, line: usize) -> Self {
        GraphError::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// Line number for errors raised while parsing a file.
    pub fn line(&self) -> Option<usize> {
        match self {
            GraphError::AtLine { line, .. } => Some(*line),
            _ => None,
        }
    }
}

/// An undirected weighted edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub w: Weight,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// One entry of a vertex's adjacency: the neighbor and the edge weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incident {
    pub nbr: VertexId,
    pub w: Weight,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are kept normalized (`u < v`) and sorted by `(u, v)`; two graphs
/// with the same edge set therefore compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Incident>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates, out-of-range
    /// endpoints and weights at or above the infinite-weight sentinel.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let inf = inf_weight(n);
        let mut list = Vec::new();
        for (a, b, w) in edges {
            list.push(check_edge(n, inf, a, b, w)?);
        }
        list.sort_unstable();
        if let Some(pair) = list.windows(2).find(|p| p[0].u == p[1].u && p[0].v == p[1].v) {
            return Err(GraphError::DuplicateEdge(pair[0].u, pair[0].v));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Builds a graph whose edges all have weight 1.
    pub fn unweighted<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::new(n, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(Incident { nbr: e.v, w: e.w });
            adj[e.v].push(Incident { nbr: e.u, w: e.w });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Incident edges of `v`, sorted by neighbor id.
    pub fn adj(&self, v: VertexId) -> &[Incident] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n
            && self.adj[a]
                .binary_search_by(|inc| inc.nbr.cmp(&b))
                .is_ok()
    }

    pub fn weight(&self, a: VertexId, b: VertexId) -> Option<Weight> {
        let list = self.adj.get(a)?;
        list.binary_search_by(|inc| inc.nbr.cmp(&b))
            .ok()
            .map(|i| list[i].w)
    }

    pub fn total_weight(&self) -> u128 {
        self.edges.iter().map(|e| e.w as u128).sum()
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.w == 1)
    }

    /// The spanning subgraph on the given edge pairs (weights copied).
    pub fn subgraph(&self, pairs: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let w = self
                .weight(a, b)
                .ok_or(GraphError::BadParameter(format!("{{{a},{b}}} is not an edge")))?;
            edges.push((a, b, w));
        }
        Graph::new(self.n, edges)
    }
}

fn check_edge(
    n: usize,
    inf: Weight,
    a: VertexId,
    b: VertexId,
    w: Weight,
) -> Result<Edge, GraphError> {
    for x in [a, b] {
        if x >= n {
            return Err(GraphError::VertexOutOfRange { vertex: x, n });
        }
    }
    if a == b {
        return Err(GraphError::SelfLoop(a));
    }
    if w >= inf {
        return Err(GraphError::WeightTooLarge { weight: w, inf });
    }
    Ok(Edge {
        u: a.min(b),
        v: a.max(b),
        w,
    })
}

/// A hypergraph on vertices `0..n`. Each hyperedge is a sorted set of at
/// least two distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<Vec<VertexId>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, hyperedges: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut clean = Vec::with_capacity(hyperedges.len());
        let mut incidence = vec![Vec::new(); n];
        for (i, mut e) in hyperedges.into_iter().enumerate() {
            e.sort_unstable();
            e.dedup();
            if let Some(&x) = e.iter().find(|&&x| x >= n) {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
            if e.len() < 2 {
                return Err(GraphError::SmallHyperedge(i));
            }
            for &x in &e {
                incidence[x].push(i);
            }
            clean.push(e);
        }
        Ok(Hypergraph {
            n,
            hyperedges: clean,
            incidence,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Vec<VertexId>] {
        &self.hyperedges
    }

    /// Indices of the hyperedges containing `v`.
    pub fn incident(&self, v: VertexId) -> &[usize] {
        &self.incidence[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_normalized_and_sorted() {
        let g = Graph::new(4, [(3, 1, 2), (0, 2, 5), (1, 0, 1)]).unwrap();
        let pairs: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
        assert_eq!(pairs, vec![(0, 1, 1), (0, 2, 5), (1, 3, 2)]);
        assert_eq!(g.adj(1), &[Incident { nbr: 0, w: 1 }, Incident { nbr: 3, w: 2 }]);
        assert_eq!(g.weight(3, 1), Some(2));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn rejects_invariant_violations() {
        assert_eq!(Graph::unweighted(0, []), Err(GraphError::Empty));
        assert_eq!(Graph::unweighted(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::unweighted(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::unweighted(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        let inf = inf_weight(4);
        assert_eq!(inf, 255);
        assert!(Graph::new(4, [(0, 1, inf - 1)]).is_ok());
        assert!(matches!(
            Graph::new(4, [(0, 1, inf)]),
            Err(GraphError::WeightTooLarge { .. })
        ));
    }

    #[test]
    fn inf_weight_saturates() {
        assert_eq!(inf_weight(2), 15);
        assert_eq!(inf_weight(1 << 20), Weight::MAX);
    }

    #[test]
    fn hypergraph_validation() {
        let h = Hypergraph::new(4, vec![vec![2, 0, 1], vec![3, 1]]).unwrap();
        assert_eq!(h.hyperedges()[0], vec![0, 1, 2]);
        assert_eq!(h.incident(1), &[0, 1]);
        assert_eq!(
            Hypergraph::new(3, vec![vec![1, 1]]),
            Err(GraphError::SmallHyperedge(0))
        );
        assert!(Hypergraph::new(3, vec![vec![0, 3]]).is_err());
    }
}
