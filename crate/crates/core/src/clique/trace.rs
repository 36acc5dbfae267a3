use std::fmt::Write as _;

use crate::graph::VertexId;

/// Destination set of a traced message.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dest {
    /// Every node except the sender.
    AllOthers,
    One(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceMessage {
    pub src: u32,
    pub dst: Dest,
    pub bits: u32,
}

impl TraceMessage {
    pub fn is_broadcast(&self) -> bool {
        self.dst == Dest::AllOthers
    }

    pub fn src(&self) -> VertexId {
        self.src as VertexId
    }
}

/// Every message of a clique execution, grouped by round.
///
/// `rounds[i]` holds the messages sent in round `i + 1`, ordered by sender
/// (and by destination within one sender's unicasts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTrace {
    pub n: usize,
    pub rounds: Vec<Vec<TraceMessage>>,
}

impl CliqueTrace {
    pub fn new(n: usize) -> Self {
        CliqueTrace {
            n,
            rounds: Vec::new(),
        }
    }

    /// Rounds executed, including trailing silent ones.
    pub fn rounds_executed(&self) -> usize {
        self.rounds.len()
    }

    pub fn messages(&self) -> impl Iterator<Item = (usize, &TraceMessage)> {
        self.rounds
            .iter()
            .enumerate()
            .flat_map(|(i, msgs)| msgs.iter().map(move |m| (i + 1, m)))
    }

    pub fn unicast_count(&self) -> usize {
        self.messages().filter(|(_, m)| !m.is_broadcast()).count()
    }

    /// Debug export: one `round src dst_count bits bcast_flag` line per
    /// message.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for (round, m) in self.messages() {
            let (count, flag) = match m.dst {
                Dest::AllOthers => (self.n - 1, 1),
                Dest::One(_) => (1, 0),
            };
            let _ = writeln!(out, "{round} {} {count} {} {flag}", m.src, m.bits);
        }
        out
    }
}

/// Complexity measures of a clique execution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CliqueMetrics {
    /// `T_C`: index of the last round in which any message was sent.
    pub rounds: usize,
    /// Point-to-point messages; a broadcast counts as `n − 1`.
    pub messages: u64,
    /// Broadcast emissions.
    pub broadcasts: u64,
    /// `Δ′`: the most messages sent plus received by one node in one round.
    pub comm_degree: u64,
}

impl CliqueMetrics {
    /// Recomputes all measures from a trace.
    pub fn from_trace(trace: &CliqueTrace) -> Self {
        let n = trace.n;
        let others = n.saturating_sub(1) as u64;
        let mut metrics = CliqueMetrics::default();
        let mut sent = vec![0u64; n];
        let mut received = vec![0u64; n];
        let mut broadcaster = vec![false; n];
        for (i, msgs) in trace.rounds.iter().enumerate() {
            if msgs.is_empty() {
                continue;
            }
            metrics.rounds = i + 1;
            sent.fill(0);
            received.fill(0);
            broadcaster.fill(false);
            let mut bcasts = 0u64;
            for m in msgs {
                match m.dst {
                    Dest::AllOthers => {
                        bcasts += 1;
                        sent[m.src()] += others;
                        broadcaster[m.src()] = true;
                        metrics.messages += others;
                    }
                    Dest::One(d) => {
                        sent[m.src()] += 1;
                        received[d as usize] += 1;
                        metrics.messages += 1;
                    }
                }
            }
            metrics.broadcasts += bcasts;
            for v in 0..n {
                let heard = bcasts - broadcaster[v] as u64;
                metrics.comm_degree = metrics.comm_degree.max(sent[v] + received[v] + heard);
            }
        }
        metrics
    }
}
