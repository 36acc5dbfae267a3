//! The algorithm suite.
//!
//! Every algorithm except [`hmis`] is a [`NodeProgram`](crate::NodeProgram)
//! for the clique engine. Broadcast-only programs (BFS, MST, connectivity,
//! spanning tree verification, Bellman-Ford, spanner, densest subgraph) can
//! be priced with either conversion; PageRank and triangle detection use
//! unicasts and need point-to-point pricing.

pub mod bellman_ford;
pub mod bfs;
pub mod densest;
pub mod fragments;
pub mod hmis;
pub mod logsp;
pub mod mis;
pub mod pagerank;
pub mod spanner;
pub mod triangle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Incident, VertexId, Weight};

pub use bellman_ford::{bellman_ford_program, BellmanFord};
pub use bfs::{bfs_program, Bfs, PathInfo};
pub use densest::{densest_subgraph_program, Densest, DensestOutput};
pub use fragments::{
    conn_program, mst_program, st_verify_program, Conn, ConnOutput, Mst, MstOutput, StVerify,
    StVerifyOutput, TieBreak,
};
pub use hmis::{hmis_kmachine, HmisRun};
pub use logsp::{logapprox_shortest_paths, LogSpRun};
pub use mis::{luby_mis_program, Mis, MisOutput};
pub use pagerank::{pagerank_program, PageRank, PageRankOutput};
pub use spanner::{spanner_program, Spanner, SpannerOutput};
pub use triangle::{triangle_program, Triangle};

/// Parameters shared by the suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AlgoConfig {
    /// PageRank reset probability, in `(0, 1)`.
    pub gamma: f64,
    /// PageRank tokens created per node; `None` means `⌈token_factor·log₂ n⌉`.
    pub tokens_per_node: Option<usize>,
    pub token_factor: f64,
    /// Densest-subgraph slack, `> 0`.
    pub eps: f64,
    /// Spanner parameter `δ ≥ 1`; the stretch is `2δ − 1`.
    pub delta_spanner: usize,
    /// Source vertex for BFS and Bellman-Ford.
    pub source: VertexId,
    pub mis_max_phases: usize,
}

impl Default for AlgoConfig {
    fn default() -> Self {
        AlgoConfig {
            gamma: 0.15,
            tokens_per_node: None,
            token_factor: 1.0,
            eps: 0.5,
            delta_spanner: 2,
            source: 0,
            mis_max_phases: 1000,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("gamma must lie strictly between 0 and 1, got {0}")]
    Gamma(f64),
    #[error("at least one token per node is required")]
    Tokens,
    #[error("token_factor must be positive, got {0}")]
    TokenFactor(f64),
    #[error("eps must be positive, got {0}")]
    Eps(f64),
    #[error("delta_spanner must be at least 1")]
    Delta,
    #[error("mis_max_phases must be at least 1")]
    MisPhases,
    #[error("source {vertex} out of range for n = {n}")]
    Source { vertex: VertexId, n: usize },
}

impl AlgoConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.gamma > 0.0 && self.gamma < 1.0) {
            return Err(ConfigError::Gamma(self.gamma));
        }
        if self.tokens_per_node == Some(0) {
            return Err(ConfigError::Tokens);
        }
        if !(self.token_factor > 0.0 && self.token_factor.is_finite()) {
            return Err(ConfigError::TokenFactor(self.token_factor));
        }
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(ConfigError::Eps(self.eps));
        }
        if self.delta_spanner == 0 {
            return Err(ConfigError::Delta);
        }
        if self.mis_max_phases == 0 {
            return Err(ConfigError::MisPhases);
        }
        Ok(())
    }

    pub(crate) fn check_source(&self, n: usize) -> Result<(), ConfigError> {
        if self.source >= n {
            return Err(ConfigError::Source {
                vertex: self.source,
                n,
            });
        }
        Ok(())
    }

    /// Tokens per node on an `n`-vertex graph.
    pub fn tokens(&self, n: usize) -> usize {
        self.tokens_per_node.unwrap_or_else(|| {
            let lg = (n.max(2) as f64).log2();
            ((self.token_factor * lg).ceil() as usize).max(1)
        })
    }
}

/// Stable algorithm names used by the CLI and in CSV rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Bfs,
    Mst,
    Conn,
    StVerify,
    PageRank,
    Mis,
    Hmis,
    BfSssp,
    Spanner,
    LogSp,
    Densest,
    Triangle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 12] = [
        Algorithm::Bfs,
        Algorithm::Mst,
        Algorithm::Conn,
        Algorithm::StVerify,
        Algorithm::PageRank,
        Algorithm::Mis,
        Algorithm::Hmis,
        Algorithm::BfSssp,
        Algorithm::Spanner,
        Algorithm::LogSp,
        Algorithm::Densest,
        Algorithm::Triangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Bfs => "bfs",
            Algorithm::Mst => "mst",
            Algorithm::Conn => "conn",
            Algorithm::StVerify => "stverify",
            Algorithm::PageRank => "pagerank",
            Algorithm::Mis => "mis",
            Algorithm::Hmis => "hmis",
            Algorithm::BfSssp => "bf_sssp",
            Algorithm::Spanner => "spanner",
            Algorithm::LogSp => "logsp",
            Algorithm::Densest => "densest",
            Algorithm::Triangle => "triangle",
        }
    }

    /// Whether the clique program only ever broadcasts.
    pub fn broadcast_only(self) -> bool {
        !matches!(
            self,
            Algorithm::PageRank | Algorithm::Triangle | Algorithm::Hmis
        )
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// The weight of edge `{me, x}` if `x` is a neighbor.
pub(crate) fn neighbor_weight(edges: &[Incident], x: VertexId) -> Option<Weight> {
    edges
        .binary_search_by(|e| e.nbr.cmp(&x))
        .ok()
        .map(|i| edges[i].w)
}

/// Index of `x` in a sorted adjacency list.
pub(crate) fn neighbor_index(edges: &[Incident], x: VertexId) -> Option<usize> {
    edges.binary_search_by(|e| e.nbr.cmp(&x)).ok()
}
