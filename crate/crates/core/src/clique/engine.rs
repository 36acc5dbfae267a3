use thiserror::Error;

use super::program::{Envelope, Inbox, NodeInit, NodeProgram, Outbox};
use super::trace::{CliqueMetrics, CliqueTrace, Dest, TraceMessage};
use crate::graph::{Graph, VertexId};
use crate::rng::node_rng;

/// Payloads are capped at `PAYLOAD_FACTOR · ⌈log₂ n⌉` bits.
pub const PAYLOAD_FACTOR: u32 = 4;

pub fn payload_cap(n: usize) -> u32 {
    PAYLOAD_FACTOR * crate::id_bits(n)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliqueError {
    #[error("round budget must be at least 1")]
    ZeroBudget,
    #[error("round budget of {max_rounds} exhausted before every node halted")]
    BudgetExhausted {
        max_rounds: usize,
        partial: Box<CliqueTrace>,
    },
    #[error("round {round}: node {src} addressed out-of-range vertex {dst}")]
    DestinationOutOfRange {
        round: usize,
        src: VertexId,
        dst: VertexId,
    },
    #[error("round {round}: node {src} addressed itself")]
    SelfAddressed { round: usize, src: VertexId },
    #[error("round {round}: node {src} sent two messages to {dst}")]
    DuplicateDestination {
        round: usize,
        src: VertexId,
        dst: VertexId,
    },
    #[error("round {round}: node {src} declared a {bits}-bit payload, cap is {cap}")]
    PayloadTooLarge {
        round: usize,
        src: VertexId,
        bits: u32,
        cap: u32,
    },
    #[error("round {round}: node {src} declared an empty payload")]
    EmptyPayload { round: usize, src: VertexId },
}

/// Outcome of a complete clique execution.
#[derive(Debug, Clone)]
pub struct CliqueRun<O> {
    pub outputs: Vec<O>,
    pub trace: CliqueTrace,
    pub metrics: CliqueMetrics,
}

/// Executes `prog` on every vertex of `g` until all nodes halt.
///
/// Nodes are stepped in id order within a round, but a round only ever reads
/// the previous round's messages, so the order is unobservable.
pub fn run_clique<P: NodeProgram>(
    g: &Graph,
    prog: &P,
    seed: u64,
    max_rounds: usize,
) -> Result<CliqueRun<P::Output>, CliqueError> {
    if max_rounds == 0 {
        return Err(CliqueError::ZeroBudget);
    }
    let n = g.n();
    let cap = payload_cap(n);
    let others = n as u64 - 1;

    let mut states: Vec<P::State> = (0..n)
        .map(|v| {
            let init = NodeInit {
                id: v,
                n,
                edges: g.adj(v),
            };
            prog.init(init, &mut node_rng(seed, v, 0))
        })
        .collect();
    let mut halted = vec![false; n];
    let mut live = n;

    let mut trace = CliqueTrace::new(n);
    let mut metrics = CliqueMetrics::default();

    let mut bcast: Vec<Envelope<P::Msg>> = Vec::new();
    let mut direct: Vec<Vec<Envelope<P::Msg>>> = vec![Vec::new(); n];
    let mut next_bcast: Vec<Envelope<P::Msg>> = Vec::new();
    let mut next_direct: Vec<Vec<Envelope<P::Msg>>> = vec![Vec::new(); n];
    let mut seen_dst = vec![usize::MAX; n];
    let mut recv = vec![0u64; n];
    let mut sent = vec![0u64; n];

    for round in 1..=max_rounds {
        let mut record = Vec::new();
        recv.fill(0);
        sent.fill(0);

        for v in 0..n {
            if halted[v] {
                continue;
            }
            let inbox = Inbox {
                me: v,
                broadcast: &bcast,
                direct: &direct[v],
            };
            let step = prog.step(&mut states[v], round, &inbox, &mut node_rng(seed, v, round));
            match step.out {
                Outbox::Silent => {}
                Outbox::Broadcast(payload) => {
                    check_bits(round, v, payload.bits, cap)?;
                    record.push(TraceMessage {
                        src: v as u32,
                        dst: Dest::AllOthers,
                        bits: payload.bits,
                    });
                    sent[v] += others;
                    next_bcast.push(Envelope { src: v, payload });
                }
                Outbox::Unicast(mut msgs) => {
                    msgs.sort_by_key(|(d, _)| *d);
                    for (dst, payload) in msgs {
                        if dst >= n {
                            return Err(CliqueError::DestinationOutOfRange { round, src: v, dst });
                        }
                        if dst == v {
                            return Err(CliqueError::SelfAddressed { round, src: v });
                        }
                        if seen_dst[dst] == v {
                            return Err(CliqueError::DuplicateDestination { round, src: v, dst });
                        }
                        seen_dst[dst] = v;
                        check_bits(round, v, payload.bits, cap)?;
                        record.push(TraceMessage {
                            src: v as u32,
                            dst: Dest::One(dst as u32),
                            bits: payload.bits,
                        });
                        sent[v] += 1;
                        recv[dst] += 1;
                        next_direct[dst].push(Envelope { src: v, payload });
                    }
                }
            }
            if step.halt {
                halted[v] = true;
                live -= 1;
            }
        }
        seen_dst.fill(usize::MAX);

        if !record.is_empty() {
            let bcasts = next_bcast.len() as u64;
            metrics.rounds = round;
            metrics.broadcasts += bcasts;
            metrics.messages += bcasts * others + (record.len() as u64 - bcasts);
            let mut is_bcaster = vec![false; n];
            for e in &next_bcast {
                is_bcaster[e.src] = true;
            }
            for v in 0..n {
                let load = sent[v] + recv[v] + bcasts - is_bcaster[v] as u64;
                metrics.comm_degree = metrics.comm_degree.max(load);
            }
        }
        trace.rounds.push(record);

        std::mem::swap(&mut bcast, &mut next_bcast);
        std::mem::swap(&mut direct, &mut next_direct);
        next_bcast.clear();
        next_direct.iter_mut().for_each(Vec::clear);

        if live == 0 {
            let outputs = states.iter().map(|s| prog.output(s)).collect();
            return Ok(CliqueRun {
                outputs,
                trace,
                metrics,
            });
        }
    }
    Err(CliqueError::BudgetExhausted {
        max_rounds,
        partial: Box::new(trace),
    })
}

fn check_bits(round: usize, src: VertexId, bits: u32, cap: u32) -> Result<(), CliqueError> {
    if bits == 0 {
        return Err(CliqueError::EmptyPayload { round, src });
    }
    if bits > cap {
        return Err(CliqueError::PayloadTooLarge {
            round,
            src,
            bits,
            cap,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{Payload, Step};
    use crate::graph::{generate, Model};
    use crate::rng::SimRng;
    use rand::Rng;

    /// Broadcasts the node id once, then halts.
    struct Hello;

    impl NodeProgram for Hello {
        type State = (usize, Vec<usize>);
        type Msg = usize;
        type Output = Vec<usize>;

        fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> Self::State {
            (node.id, Vec::new())
        }

        fn step(
            &self,
            s: &mut Self::State,
            _: usize,
            _: &Inbox<'_, usize>,
            _: &mut SimRng,
        ) -> Step<usize> {
            Step::broadcast(s.0, 2).and_halt()
        }

        fn output(&self, s: &Self::State) -> Vec<usize> {
            s.1.clone()
        }
    }

    /// Node 0 unicasts to node 1, everyone halts.
    struct Poke;

    impl NodeProgram for Poke {
        type State = usize;
        type Msg = ();
        type Output = ();

        fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> usize {
            node.id
        }

        fn step(&self, id: &mut usize, _: usize, _: &Inbox<'_, ()>, _: &mut SimRng) -> Step<()> {
            if *id == 0 {
                Step::unicast(vec![(1, Payload::new((), 1))]).and_halt()
            } else {
                Step::halt()
            }
        }

        fn output(&self, _: &usize) {}
    }

    /// Random gossip that logs everything it receives, for conservation and
    /// determinism checks.
    struct Gossip {
        rounds: usize,
        target: Option<usize>,
        bits: u32,
    }

    impl NodeProgram for Gossip {
        type State = (usize, usize, Vec<(usize, usize, u64)>);
        type Msg = u64;
        type Output = Vec<(usize, usize, u64)>;

        fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> Self::State {
            (node.id, node.n, Vec::new())
        }

        fn step(
            &self,
            s: &mut Self::State,
            round: usize,
            inbox: &Inbox<'_, u64>,
            rng: &mut SimRng,
        ) -> Step<u64> {
            for e in inbox.iter() {
                s.2.push((round, e.src, e.payload.msg));
            }
            if round > self.rounds {
                return Step::halt();
            }
            let value: u64 = rng.gen();
            if rng.gen_bool(0.3) {
                return Step::broadcast(value, self.bits);
            }
            let mut msgs = Vec::new();
            for d in 0..s.1 {
                if d != s.0 && rng.gen_bool(0.2) {
                    msgs.push((self.target.unwrap_or(d), Payload::new(value ^ d as u64, self.bits)));
                }
            }
            Step::unicast(msgs)
        }

        fn output(&self, s: &Self::State) -> Self::Output {
            s.2.clone()
        }
    }

    fn clique(n: usize) -> Graph {
        generate(&Model::Clique, n, 0).unwrap()
    }

    #[test]
    fn broadcast_once_metrics() {
        let run = run_clique(&clique(4), &Hello, 1, 10).unwrap();
        let m = run.metrics;
        assert_eq!((m.rounds, m.broadcasts, m.messages, m.comm_degree), (1, 4, 12, 6));
        assert_eq!(CliqueMetrics::from_trace(&run.trace), m);
    }

    #[test]
    fn single_unicast_metrics() {
        let run = run_clique(&clique(3), &Poke, 1, 10).unwrap();
        let m = run.metrics;
        assert_eq!((m.rounds, m.messages, m.broadcasts, m.comm_degree), (1, 1, 0, 1));
        assert_eq!(run.trace.export(), "1 0 1 1 0\n");
    }

    #[test]
    fn trace_export_format() {
        let run = run_clique(&clique(3), &Hello, 1, 10).unwrap();
        assert_eq!(run.trace.export(), "1 0 2 2 1\n1 1 2 2 1\n1 2 2 2 1\n");
    }

    #[test]
    fn budget_exhaustion_keeps_partial_trace() {
        let prog = Gossip {
            rounds: 50,
            target: None,
            bits: 3,
        };
        match run_clique(&clique(5), &prog, 3, 4) {
            Err(CliqueError::BudgetExhausted { max_rounds, partial }) => {
                assert_eq!(max_rounds, 4);
                assert_eq!(partial.rounds_executed(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(run_clique(&clique(2), &Hello, 0, 0).unwrap_err(), CliqueError::ZeroBudget);
    }

    #[test]
    fn rejects_bad_messages() {
        let far = Gossip {
            rounds: 3,
            target: Some(99),
            bits: 3,
        };
        assert!(matches!(
            run_clique(&clique(5), &far, 1, 10),
            Err(CliqueError::DestinationOutOfRange { dst: 99, .. })
        ));
        let dup = Gossip {
            rounds: 3,
            target: Some(0),
            bits: 3,
        };
        assert!(matches!(
            run_clique(&clique(6), &dup, 1, 10),
            Err(CliqueError::DuplicateDestination { .. } | CliqueError::SelfAddressed { .. })
        ));
        let fat = Gossip {
            rounds: 3,
            target: None,
            bits: payload_cap(5) + 1,
        };
        assert!(matches!(
            run_clique(&clique(5), &fat, 1, 10),
            Err(CliqueError::PayloadTooLarge { .. })
        ));
    }

    #[test]
    fn deterministic_and_conserving() {
        let g = clique(7);
        let prog = Gossip {
            rounds: 6,
            target: None,
            bits: 5,
        };
        let a = run_clique(&g, &prog, 11, 20).unwrap();
        let b = run_clique(&g, &prog, 11, 20).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.outputs, b.outputs);
        assert_eq!(a.trace.export(), b.trace.export());
        assert_eq!(CliqueMetrics::from_trace(&a.trace), a.metrics);

        // Every message received in round r was sent exactly once in r - 1.
        let mut delivered: Vec<(usize, usize, usize)> = Vec::new();
        for (dst, log) in a.outputs.iter().enumerate() {
            for &(round, src, _) in log {
                delivered.push((round - 1, src, dst));
            }
        }
        let mut sent: Vec<(usize, usize, usize)> = Vec::new();
        for (round, m) in a.trace.messages() {
            match m.dst {
                Dest::AllOthers => {
                    sent.extend((0..g.n()).filter(|&d| d != m.src()).map(|d| (round, m.src(), d)))
                }
                Dest::One(d) => sent.push((round, m.src(), d as usize)),
            }
        }
        // Messages sent in the final round land on halted nodes.
        let last = a.trace.rounds_executed();
        sent.retain(|s| s.0 < last);
        delivered.sort();
        sent.sort();
        assert_eq!(delivered, sent);

        let c = run_clique(&g, &prog, 12, 20).unwrap();
        assert_ne!(a.trace, c.trace);
    }
}
