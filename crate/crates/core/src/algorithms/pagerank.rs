//! PageRank by terminating random walks.
//!
//! Every node starts `τ` tokens. In each round every token at a node ends
//! with probability `γ` and otherwise moves to a uniform random neighbor;
//! tokens taking the same edge travel as one message carrying their
//! multiplicity. `visits(v)` counts every round a token spends at `v`,
//! including its start, and `π̂(v) = γ·visits(v)/(nτ)`.
//!
//! The program runs for a fixed `L = ⌈ln(N·n³) / −ln(1 − γ)⌉` rounds, after
//! which a surviving token has probability at most `n⁻³`. Tokens alive after
//! `L` rounds are dropped and flagged.

use rand::Rng;

use super::AlgoConfig;
use crate::clique::{payload_cap, Inbox, NodeInit, NodeProgram, Payload, Step};
use crate::graph::Incident;
use crate::rng::SimRng;
use crate::value_bits;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankOutput {
    pub estimate: f64,
    pub visits: u64,
    /// Tokens still alive here when the schedule ended.
    pub truncated: u64,
}

#[derive(Debug, Clone)]
pub struct PageRank {
    pub gamma: f64,
    pub tokens: usize,
    /// Total tokens `N`, fixed once `n` is known.
    n: usize,
}

pub fn pagerank_program(cfg: &AlgoConfig, n: usize) -> PageRank {
    PageRank {
        gamma: cfg.gamma,
        tokens: cfg.tokens(n),
        n,
    }
}

impl PageRank {
    pub fn total_tokens(&self) -> u64 {
        (self.n * self.tokens) as u64
    }

    /// Length of the fixed walk schedule.
    pub fn schedule(&self) -> usize {
        let n = self.n.max(2) as f64;
        let total = self.total_tokens().max(1) as f64;
        ((total * n.powi(3)).ln() / -(1.0 - self.gamma).ln()).ceil() as usize
    }
}

pub struct PrState {
    edges: Vec<Incident>,
    held: u64,
    visits: u64,
    /// Per-neighbor tokens that did not fit in one payload yet.
    backlog: Vec<u64>,
    pending: u64,
    cap: u64,
}

impl NodeProgram for PageRank {
    type State = PrState;
    type Msg = u64;
    type Output = PageRankOutput;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> PrState {
        let bits = payload_cap(node.n);
        PrState {
            edges: node.edges.to_vec(),
            held: self.tokens as u64,
            visits: self.tokens as u64,
            backlog: vec![0; node.edges.len()],
            pending: 0,
            cap: if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 },
        }
    }

    fn step(&self, s: &mut PrState, round: usize, inbox: &Inbox<'_, u64>, rng: &mut SimRng) -> Step<u64> {
        let arrived: u64 = inbox.direct().map(|(_, &c)| c).sum();
        s.held += arrived;
        s.visits += arrived;
        if round > self.schedule() {
            return Step::halt();
        }
        let deg = s.edges.len();
        if deg == 0 {
            s.held = 0;
            return Step::silent();
        }
        if s.held == 0 && s.pending == 0 {
            return Step::silent();
        }
        for _ in 0..s.held {
            if !rng.gen_bool(self.gamma) {
                s.backlog[rng.gen_range(0..deg)] += 1;
                s.pending += 1;
            }
        }
        s.held = 0;
        let mut msgs = Vec::new();
        for (i, e) in s.edges.iter().enumerate() {
            let count = s.backlog[i].min(s.cap);
            if count > 0 {
                s.backlog[i] -= count;
                s.pending -= count;
                msgs.push((e.nbr, Payload::new(count, value_bits(count))));
            }
        }
        Step::unicast(msgs)
    }

    fn output(&self, s: &PrState) -> PageRankOutput {
        let total = self.total_tokens().max(1) as f64;
        PageRankOutput {
            estimate: self.gamma * s.visits as f64 / total,
            visits: s.visits,
            truncated: s.held + s.pending,
        }
    }

    fn round_budget(&self, _: usize) -> usize {
        self.schedule() + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::run_clique;
    use crate::graph::{generate, Graph, Model};

    fn run(g: &Graph, gamma: f64, tokens: usize, seed: u64) -> crate::CliqueRun<PageRankOutput> {
        let cfg = AlgoConfig {
            gamma,
            tokens_per_node: Some(tokens),
            ..AlgoConfig::default()
        };
        let p = pagerank_program(&cfg, g.n());
        run_clique(g, &p, seed, p.round_budget(g.n())).unwrap()
    }

    #[test]
    fn cycle_is_uniform() {
        let g = generate(&Model::Cycle, 8, 0).unwrap();
        let r = run(&g, 0.2, 4096, 1);
        for o in &r.outputs {
            assert!((o.estimate - 0.125).abs() <= 0.02, "{}", o.estimate);
            assert_eq!(o.truncated, 0);
        }
    }

    #[test]
    fn single_edge_is_even() {
        let g = Graph::unweighted(2, [(0, 1)]).unwrap();
        let mut mean = 0.0;
        for seed in 0..200 {
            let r = run(&g, 0.15, 6, seed);
            mean += r.outputs[0].estimate / 200.0;
        }
        assert!((mean - 0.5).abs() <= 0.02, "{mean}");
    }

    #[test]
    fn isolated_tokens_end_at_once() {
        let g = Graph::unweighted(3, [(0, 1)]).unwrap();
        let r = run(&g, 0.5, 10, 0);
        assert_eq!(r.outputs[2].visits, 10);
        assert!(r.trace.messages().all(|(_, m)| m.src != 2));
    }

    #[test]
    fn estimates_sum_to_one() {
        for seed in 0..5 {
            let g = generate(&Model::Gnp { p: 0.2 }, 40, seed).unwrap();
            let r = run(&g, 0.15, 50, seed);
            let total = (40 * 50) as f64;
            let sum: f64 = r.outputs.iter().map(|o| o.estimate).sum();
            if (0..40).all(|v| g.degree(v) > 0) {
                assert!((sum - 1.0).abs() <= 3.0 / total.sqrt(), "{sum}");
            }
        }
    }
}
