//! Densest subgraph by iterative peeling.
//!
//! In every round each active node broadcasts its active degree. From these
//! every node knows the active vertex and edge counts, records the density
//! of the current active set, and applies the removal rule to everyone:
//! nodes with degree below `(1 + ε)` times the average degree leave. The
//! best iterate seen is the output.

use super::{neighbor_index, AlgoConfig};
use crate::clique::{Inbox, NodeInit, NodeProgram, Step};
use crate::graph::{Incident, VertexId};
use crate::rng::SimRng;
use crate::value_bits;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensestOutput {
    /// Edges and vertices of the best iterate.
    pub edges: u64,
    pub vertices: u64,
    /// Whether this node belongs to the best iterate.
    pub member: bool,
    pub iterations: usize,
}

impl DensestOutput {
    pub fn density(&self) -> f64 {
        if self.vertices == 0 {
            0.0
        } else {
            self.edges as f64 / self.vertices as f64
        }
    }
}

#[derive(Debug, Clone)]
pub struct Densest {
    pub eps: f64,
}

pub fn densest_subgraph_program(cfg: &AlgoConfig) -> Densest {
    Densest { eps: cfg.eps }
}

pub struct DensestState {
    id: VertexId,
    edges: Vec<Incident>,
    active_nbr: Vec<bool>,
    degree: u64,
    active: bool,
    best: Option<DensestOutput>,
    iteration: usize,
}

impl NodeProgram for Densest {
    type State = DensestState;
    type Msg = u64;
    type Output = DensestOutput;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> DensestState {
        DensestState {
            id: node.id,
            edges: node.edges.to_vec(),
            active_nbr: vec![true; node.edges.len()],
            degree: node.edges.len() as u64,
            active: true,
            best: None,
            iteration: 0,
        }
    }

    fn step(&self, s: &mut DensestState, round: usize, inbox: &Inbox<'_, u64>, _: &mut SimRng) -> Step<u64> {
        if round > 1 {
            let mut degrees: Vec<(VertexId, u64)> = inbox.broadcasts().map(|(v, &d)| (v, d)).collect();
            if s.active {
                degrees.push((s.id, s.degree));
            }
            if degrees.is_empty() {
                return Step::halt();
            }
            s.iteration += 1;
            let vertices = degrees.len() as u64;
            let twice_edges: u64 = degrees.iter().map(|&(_, d)| d).sum();
            let edges = twice_edges / 2;
            let better = s.best.map_or(true, |b| edges * b.vertices > b.edges * vertices);
            if better {
                s.best = Some(DensestOutput {
                    edges,
                    vertices,
                    member: s.active,
                    iterations: s.iteration,
                });
            }
            // Remove `d < (1 + ε)·2m/n`, i.e. `d·n < (1 + ε)·2m`.
            let threshold = (1.0 + self.eps) * twice_edges as f64;
            let leaves = |d: u64| edges == 0 || ((d * vertices) as f64) < threshold;
            for &(v, d) in &degrees {
                if !leaves(d) {
                    continue;
                }
                if v == s.id {
                    s.active = false;
                } else if let Some(i) = neighbor_index(&s.edges, v) {
                    if s.active_nbr[i] {
                        s.active_nbr[i] = false;
                        s.degree -= 1;
                    }
                }
            }
        }
        if s.active {
            Step::broadcast(s.degree, value_bits(s.degree))
        } else {
            Step::silent()
        }
    }

    fn output(&self, s: &DensestState) -> DensestOutput {
        let mut out = s.best.unwrap_or(DensestOutput {
            edges: 0,
            vertices: 1,
            member: true,
            iterations: 0,
        });
        out.iterations = s.iteration;
        out
    }
}
