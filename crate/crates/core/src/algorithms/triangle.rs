//! Triangle detection from 2-neighborhoods.
//!
//! In round `j` every node unicasts the id of its `j`-th neighbor to all its
//! neighbors, so after `Δ` rounds each node holds its neighbors' lists and
//! checks locally for a triangle through itself. Every node then broadcasts
//! the outcome once and outputs the OR over all nodes.

use super::neighbor_index;
use crate::clique::{Inbox, NodeInit, NodeProgram, Payload, Step};
use crate::graph::{Incident, VertexId};
use crate::rng::SimRng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriMsg {
    /// One neighbor id; `last` marks the end of the sender's list.
    Entry { id: u32, last: bool },
    Found(bool),
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Triangle;

pub fn triangle_program() -> Triangle {
    Triangle
}

pub struct TriState {
    n: usize,
    lg: u32,
    edges: Vec<Incident>,
    sent: usize,
    finished: usize,
    local: bool,
    announced: bool,
    heard: usize,
    any: bool,
}

impl NodeProgram for Triangle {
    type State = TriState;
    type Msg = TriMsg;
    type Output = bool;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> TriState {
        TriState {
            n: node.n,
            lg: crate::id_bits(node.n),
            edges: node.edges.to_vec(),
            sent: 0,
            finished: 0,
            local: false,
            announced: false,
            heard: 0,
            any: false,
        }
    }

    fn step(&self, s: &mut TriState, _: usize, inbox: &Inbox<'_, TriMsg>, _: &mut SimRng) -> Step<TriMsg> {
        for (_, m) in inbox.direct() {
            if let TriMsg::Entry { id, last } = *m {
                // `id` is adjacent to the sender, which is adjacent to us.
                s.local |= neighbor_index(&s.edges, id as VertexId).is_some();
                s.finished += last as usize;
            }
        }
        for (_, m) in inbox.broadcasts() {
            if let TriMsg::Found(b) = *m {
                s.heard += 1;
                s.any |= b;
            }
        }
        let deg = s.edges.len();
        if s.sent < deg {
            let entry = TriMsg::Entry {
                id: s.edges[s.sent].nbr as u32,
                last: s.sent + 1 == deg,
            };
            s.sent += 1;
            let msgs = s
                .edges
                .iter()
                .map(|e| (e.nbr, Payload::new(entry, s.lg + 1)))
                .collect();
            return Step::unicast(msgs);
        }
        if !s.announced {
            if s.finished < deg {
                return Step::silent();
            }
            s.announced = true;
            s.any |= s.local;
            return Step::broadcast(TriMsg::Found(s.local), 1).halt_if(s.heard == s.n - 1);
        }
        if s.heard == s.n - 1 {
            Step::halt()
        } else {
            Step::silent()
        }
    }

    fn output(&self, s: &TriState) -> bool {
        s.any
    }
}
