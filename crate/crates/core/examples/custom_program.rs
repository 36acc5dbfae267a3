//! Writes a small clique-model program from scratch: every node learns the
//! maximum id in its 2-hop neighborhood. Runs it and prints the metrics.

use kmachine::clique::{Inbox, NodeInit, NodeProgram, Payload, Step};
use kmachine::graph::{generate, Model, VertexId};
use kmachine::rng::SimRng;
use kmachine::{id_bits, run_clique};

struct TwoHopMax;

struct State {
    lg: u32,
    neighbors: Vec<VertexId>,
    best: VertexId,
}

impl NodeProgram for TwoHopMax {
    type State = State;
    type Msg = VertexId;
    type Output = VertexId;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> State {
        State {
            lg: id_bits(node.n),
            neighbors: node.edges.iter().map(|e| e.nbr).collect(),
            best: node.id,
        }
    }

    fn step(&self, s: &mut State, round: usize, inbox: &Inbox<'_, VertexId>, _: &mut SimRng) -> Step<VertexId> {
        for (_, &v) in inbox.direct() {
            s.best = s.best.max(v);
        }
        if round == 3 {
            return Step::halt();
        }
        let msgs = s
            .neighbors
            .iter()
            .map(|&u| (u, Payload::new(s.best, s.lg)))
            .collect();
        Step::unicast(msgs)
    }

    fn output(&self, s: &State) -> VertexId {
        s.best
    }
}

fn main() {
    let g = generate(&Model::Path, 12, 0).expect("path");
    let run = run_clique(&g, &TwoHopMax, 0, 10).expect("run");
    println!("outputs: {:?}", run.outputs);
    println!("metrics: {:?}", run.metrics);
    println!("messages in round 2: {}", run.trace.rounds[1].len());
}
