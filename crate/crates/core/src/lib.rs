//! A deterministic simulator of the k-machine model of distributed graph
//! computation.
//!
//! Graph algorithms are written once as per-vertex round-synchronous programs
//! ([`clique::NodeProgram`]) and executed on the complete communication
//! network over the vertex set (the *clique model*). The resulting message
//! trace is then priced in k-machine rounds under a random vertex partition
//! and a per-link bandwidth of `W` bits ([`kmachine`]).
//!
//! The crate is organised as:
//!
//! * [`graph`] – graphs, hypergraphs, generators (including the lower-bound
//!   gadget families) and the edge-list file format.
//! * [`clique`] – the clique-model execution engine, its trace and metrics.
//! * [`kmachine`] – random vertex partitioning, mapping-bound checks and the
//!   point-to-point / broadcast conversion engines.
//! * [`algorithms`] – the algorithm suite (BFS, MST, connectivity, spanning
//!   tree verification, PageRank, Luby MIS, hypergraph MIS, Bellman-Ford,
//!   Baswana-Sen spanners, spanner-based approximate shortest paths, densest
//!   subgraph peeling and triangle detection).
//! * [`oracles`] – sequential reference implementations and checkers.
//! * [`harness`] – experiment configuration, sweeps, CSV output, scaling fits
//!   and the validation battery.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod algorithms;
pub mod clique;
pub mod graph;
pub mod harness;
pub mod kmachine;
pub mod oracles;
pub mod rng;

pub use clique::{run_clique, CliqueMetrics, CliqueRun, CliqueTrace, NodeProgram};
pub use graph::{Graph, Hypergraph, VertexId, Weight};
pub use kmachine::{run_on_kmachines, Mode, Partition, SimReport};

/// `⌈log₂ n⌉`, clamped to at least 1 bit.
///
/// This is the width of a vertex identifier and the unit in which message
/// sizes, headers and the default bandwidth are expressed.
pub fn id_bits(n: usize) -> u32 {
    if n <= 2 {
        1
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Number of bits needed to write `value` in binary (at least 1).
pub fn value_bits(value: u64) -> u32 {
    (u64::BITS - value.leading_zeros()).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_bits_is_ceil_log2() {
        assert_eq!(id_bits(1), 1);
        assert_eq!(id_bits(2), 1);
        assert_eq!(id_bits(3), 2);
        assert_eq!(id_bits(4), 2);
        assert_eq!(id_bits(5), 3);
        assert_eq!(id_bits(16), 4);
        assert_eq!(id_bits(17), 5);
        assert_eq!(id_bits(4096), 12);
    }

    #[test]
    fn value_bits_counts_binary_digits() {
        assert_eq!(value_bits(0), 1);
        assert_eq!(value_bits(1), 1);
        assert_eq!(value_bits(255), 8);
        assert_eq!(value_bits(256), 9);
    }
}
