//! Luby's maximal independent set, broadcast form.
//!
//! Each phase has three rounds. *Mark*: an active node with `d` active
//! neighbors broadcasts `d` with probability `1/(2d)`; an active node with no
//! active neighbor joins outright. *Resolve*: a marked node joins unless a
//! marked neighbor has a larger `(degree, id)`; joiners announce it.
//! *Deactivate*: active neighbors of joiners leave and announce it.

use rand::Rng;

use super::{neighbor_index, AlgoConfig};
use crate::clique::{Inbox, NodeInit, NodeProgram, Step};
use crate::graph::{Incident, VertexId};
use crate::rng::SimRng;
use crate::value_bits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MisMsg {
    Mark(u32),
    Join,
    Leave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MisOutput {
    pub in_mis: bool,
    /// Phase in which the node was decided (0 if never).
    pub phase: usize,
    /// The phase budget ran out before the node was decided.
    pub failed: bool,
}

#[derive(Debug, Clone)]
pub struct Mis {
    pub max_phases: usize,
}

pub fn luby_mis_program(cfg: &AlgoConfig) -> Mis {
    Mis {
        max_phases: cfg.mis_max_phases,
    }
}

pub struct MisState {
    id: VertexId,
    edges: Vec<Incident>,
    active_nbr: Vec<bool>,
    degree: u32,
    marked: bool,
    out: MisOutput,
}

impl MisState {
    fn drop_neighbor(&mut self, x: VertexId) {
        if let Some(i) = neighbor_index(&self.edges, x) {
            if self.active_nbr[i] {
                self.active_nbr[i] = false;
                self.degree -= 1;
            }
        }
    }
}

impl NodeProgram for Mis {
    type State = MisState;
    type Msg = MisMsg;
    type Output = MisOutput;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> MisState {
        MisState {
            id: node.id,
            edges: node.edges.to_vec(),
            active_nbr: vec![true; node.edges.len()],
            degree: node.edges.len() as u32,
            marked: false,
            out: MisOutput {
                in_mis: false,
                phase: 0,
                failed: false,
            },
        }
    }

    fn step(&self, s: &mut MisState, round: usize, inbox: &Inbox<'_, MisMsg>, rng: &mut SimRng) -> Step<MisMsg> {
        let phase = (round - 1) / 3 + 1;
        match (round - 1) % 3 {
            0 => {
                for (src, m) in inbox.broadcasts() {
                    if *m == MisMsg::Leave {
                        s.drop_neighbor(src);
                    }
                }
                if phase > self.max_phases {
                    s.out.failed = true;
                    return Step::halt();
                }
                if s.degree == 0 {
                    s.out.in_mis = true;
                    s.out.phase = phase;
                    return Step::halt();
                }
                s.marked = rng.gen_bool(1.0 / (2.0 * s.degree as f64));
                if s.marked {
                    Step::broadcast(MisMsg::Mark(s.degree), value_bits(s.degree as u64))
                } else {
                    Step::silent()
                }
            }
            1 => {
                if !s.marked {
                    return Step::silent();
                }
                let mine = (s.degree, s.id);
                let beaten = inbox.broadcasts().any(|(src, m)| match m {
                    MisMsg::Mark(d) => {
                        neighbor_index(&s.edges, src).is_some_and(|i| s.active_nbr[i])
                            && (*d, src) > mine
                    }
                    _ => false,
                });
                if beaten {
                    return Step::silent();
                }
                s.out.in_mis = true;
                s.out.phase = phase;
                Step::broadcast(MisMsg::Join, 1).and_halt()
            }
            _ => {
                let covered = inbox.broadcasts().any(|(src, m)| {
                    *m == MisMsg::Join
                        && neighbor_index(&s.edges, src).is_some_and(|i| s.active_nbr[i])
                });
                if covered {
                    s.out.phase = phase;
                    return Step::broadcast(MisMsg::Leave, 1).and_halt();
                }
                Step::silent()
            }
        }
    }

    fn output(&self, s: &MisState) -> MisOutput {
        s.out
    }

    fn round_budget(&self, _: usize) -> usize {
        3 * self.max_phases + 3
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::run_clique;
    use crate::graph::{generate, Graph, Model};

    fn run(g: &Graph, seed: u64) -> Vec<MisOutput> {
        let p = Mis { max_phases: 200 };
        run_clique(g, &p, seed, p.round_budget(g.n())).unwrap().outputs
    }

    fn independent_and_maximal(g: &Graph, set: &[bool]) -> bool {
        let independent = g.edges().iter().all(|e| !(set[e.u] && set[e.v]));
        let maximal = (0..g.n()).all(|v| set[v] || g.adj(v).iter().any(|e| set[e.nbr]));
        independent && maximal
    }

    #[test]
    fn edgeless_all_join() {
        let g = Graph::unweighted(5, []).unwrap();
        assert!(run(&g, 0).iter().all(|o| o.in_mis && o.phase == 1));
    }

    #[test]
    fn clique_exactly_one() {
        for seed in 0..20 {
            let g = generate(&Model::Clique, 6, 0).unwrap();
            let out = run(&g, seed);
            assert_eq!(out.iter().filter(|o| o.in_mis).count(), 1);
        }
    }

    #[test]
    fn random_graphs_valid() {
        for seed in 0..20 {
            let g = generate(&Model::Gnp { p: 0.1 }, 80, seed).unwrap();
            let out = run(&g, seed);
            let set: Vec<bool> = out.iter().map(|o| o.in_mis).collect();
            assert!(independent_and_maximal(&g, &set), "seed {seed}");
            assert!(out.iter().all(|o| !o.failed));
        }
    }

    #[test]
    fn phase_budget_failure() {
        let g = generate(&Model::Clique, 30, 0).unwrap();
        let p = Mis { max_phases: 1 };
        let r = run_clique(&g, &p, 4, p.round_budget(30)).unwrap();
        // One phase cannot settle a 30-clique unless the lone mark wins at once.
        let failed = r.outputs.iter().filter(|o| o.failed).count();
        let joined = r.outputs.iter().filter(|o| o.in_mis).count();
        assert!(failed == 0 || joined == 0);
        assert!(failed == 0 || failed == 30);
    }
}
