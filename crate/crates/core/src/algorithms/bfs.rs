//! Breadth-first search tree from a fixed source.
//!
//! The node first reached at hop distance `r − 1` broadcasts
//! `(id, distance, parent)` in round `r` and halts. A node hearing a
//! broadcast from a neighbor while still unreached adopts the smallest such
//! neighbor as its parent. Unreached nodes stop after a silent round.

use super::{neighbor_weight, AlgoConfig};
use crate::clique::{Inbox, NodeInit, NodeProgram, Step};
use crate::graph::{Incident, VertexId};
use crate::rng::SimRng;

/// A distance label with its tree parent. `dist = None` means unreachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PathInfo {
    pub dist: Option<u64>,
    pub parent: Option<VertexId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfsMsg {
    pub dist: u64,
    pub parent: Option<VertexId>,
}

#[derive(Debug, Clone)]
pub struct Bfs {
    pub source: VertexId,
}

pub fn bfs_program(cfg: &AlgoConfig) -> Bfs {
    Bfs { source: cfg.source }
}

pub struct BfsState {
    id: VertexId,
    bits: u32,
    edges: Vec<Incident>,
    info: PathInfo,
}

impl NodeProgram for Bfs {
    type State = BfsState;
    type Msg = BfsMsg;
    type Output = PathInfo;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> BfsState {
        BfsState {
            id: node.id,
            bits: 3 * crate::id_bits(node.n),
            edges: node.edges.to_vec(),
            info: PathInfo::default(),
        }
    }

    fn step(
        &self,
        s: &mut BfsState,
        round: usize,
        inbox: &Inbox<'_, BfsMsg>,
        _: &mut SimRng,
    ) -> Step<BfsMsg> {
        if round == 1 && s.id == self.source {
            s.info.dist = Some(0);
            return Step::broadcast(
                BfsMsg {
                    dist: 0,
                    parent: None,
                },
                s.bits,
            )
            .and_halt();
        }
        if round > 1 && inbox.is_empty() {
            return Step::halt();
        }
        let reached = inbox
            .broadcasts()
            .find(|(src, _)| neighbor_weight(&s.edges, *src).is_some());
        match reached {
            Some((parent, msg)) => {
                let dist = msg.dist + 1;
                s.info = PathInfo {
                    dist: Some(dist),
                    parent: Some(parent),
                };
                Step::broadcast(
                    BfsMsg {
                        dist,
                        parent: Some(parent),
                    },
                    s.bits,
                )
                .and_halt()
            }
            None => Step::silent(),
        }
    }

    fn output(&self, s: &BfsState) -> PathInfo {
        s.info
    }
}
