//! Synchronous Bellman-Ford single-source shortest paths.
//!
//! A node broadcasts its tentative distance in every round in which that
//! distance improved. The run ends after the first globally silent round.

use super::{neighbor_weight, AlgoConfig, PathInfo};
use crate::clique::{Inbox, NodeInit, NodeProgram, Step};
use crate::graph::{Incident, VertexId};
use crate::rng::SimRng;
use crate::value_bits;

#[derive(Debug, Clone)]
pub struct BellmanFord {
    pub source: VertexId,
}

pub fn bellman_ford_program(cfg: &AlgoConfig) -> BellmanFord {
    BellmanFord { source: cfg.source }
}

pub struct BfState {
    id: VertexId,
    edges: Vec<Incident>,
    info: PathInfo,
    sent_last: bool,
}

impl NodeProgram for BellmanFord {
    type State = BfState;
    type Msg = u64;
    type Output = PathInfo;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> BfState {
        BfState {
            id: node.id,
            edges: node.edges.to_vec(),
            info: PathInfo::default(),
            sent_last: false,
        }
    }

    fn step(&self, s: &mut BfState, round: usize, inbox: &Inbox<'_, u64>, _: &mut SimRng) -> Step<u64> {
        if round == 1 {
            if s.id == self.source {
                s.info.dist = Some(0);
                s.sent_last = true;
                return Step::broadcast(0, 1);
            }
            return Step::silent();
        }
        if inbox.is_empty() && !s.sent_last {
            return Step::halt();
        }
        let mut improved = false;
        for (src, &d) in inbox.broadcasts() {
            if let Some(w) = neighbor_weight(&s.edges, src) {
                let cand = d + w;
                if s.info.dist.map_or(true, |cur| cand < cur) {
                    s.info = PathInfo {
                        dist: Some(cand),
                        parent: Some(src),
                    };
                    improved = true;
                }
            }
        }
        s.sent_last = improved;
        match (improved, s.info.dist) {
            (true, Some(d)) => Step::broadcast(d, value_bits(d)),
            _ => Step::silent(),
        }
    }

    fn output(&self, s: &BfState) -> PathInfo {
        s.info
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::run_clique;
    use crate::graph::{graph_stats, generate, Graph, Model};

    fn dists(g: &Graph) -> Vec<Option<u64>> {
        let r = run_clique(g, &BellmanFord { source: 0 }, 0, 1000).unwrap();
        r.outputs.iter().map(|p| p.dist).collect()
    }

    #[test]
    fn weighted_path() {
        let g = Graph::new(3, [(0, 1, 5), (1, 2, 7)]).unwrap();
        assert_eq!(dists(&g), vec![Some(0), Some(5), Some(12)]);
    }

    #[test]
    fn relaxation_prefers_two_hops() {
        let g = Graph::new(3, [(0, 1, 1), (1, 2, 1), (0, 2, 3)]).unwrap();
        let r = run_clique(&g, &BellmanFord { source: 0 }, 0, 100).unwrap();
        assert_eq!(r.outputs[2].dist, Some(2));
        assert_eq!(r.outputs[2].parent, Some(1));
    }

    #[test]
    fn round_and_broadcast_bounds() {
        for seed in 0..8 {
            let g = generate(&Model::RandomWeighted { p: 0.3, wmax: 100 }, 40, seed).unwrap();
            let s = graph_stats(&g).sp_diameter;
            let r = run_clique(&g, &BellmanFord { source: 0 }, 0, 1000).unwrap();
            assert!(r.metrics.rounds <= s + 1, "T_C {} vs S {s}", r.metrics.rounds);
            assert!(r.metrics.broadcasts as usize <= g.n() * s + g.n());
            assert_eq!(r.trace.unicast_count(), 0);
        }
    }

    #[test]
    fn unreachable() {
        let g = Graph::new(3, [(1, 2, 4)]).unwrap();
        assert_eq!(dists(&g), vec![Some(0), None, None]);
    }
}
