//! Baswana–Sen `(2δ − 1)`-spanners of unweighted graphs, broadcast form.
//!
//! Clusters are named by their center. Each of the `δ − 1` iterations has
//! a sampling round (every center of a current cluster broadcasts with
//! probability `n^(−1/δ)`), a join round and zero or more announcement
//! rounds:
//!
//! * a clustered vertex whose cluster was not sampled joins the sampled
//!   cluster of its smallest neighbor in one, adding that edge;
//! * if it has no such neighbor it leaves the clustering and adds one edge
//!   to every adjacent cluster (the smallest neighbor in each), announcing
//!   the chosen neighbors over the following rounds, three ids per payload;
//! * afterwards an edge survives only if both endpoints are clustered, in
//!   different clusters.
//!
//! The final phase adds, for every vertex, one edge to each adjacent
//! cluster over the surviving edges. Leave and count messages carry the
//! number of announcements, so all nodes agree on the number of rounds.

use std::collections::BTreeSet;

use rand::Rng;

use super::{neighbor_index, AlgoConfig};
use crate::clique::{Inbox, NodeInit, NodeProgram, Step};
use crate::graph::{Incident, VertexId};
use crate::rng::SimRng;

const IDS_PER_PAYLOAD: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpMsg {
    Sampled,
    Join { center: u32, via: u32 },
    Leave { count: u32 },
    Count(u32),
    Ids(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpannerOutput {
    /// Incident spanner edges, by neighbor.
    pub edges: Vec<VertexId>,
}

impl SpannerOutput {
    /// All spanner edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edge_set(outputs: &[SpannerOutput]) -> Vec<(VertexId, VertexId)> {
        let mut set: Vec<_> = outputs
            .iter()
            .enumerate()
            .flat_map(|(v, o)| o.edges.iter().map(move |&x| (v.min(x), v.max(x))))
            .collect();
        set.sort_unstable();
        set.dedup();
        set
    }
}

#[derive(Debug, Clone)]
pub struct Spanner {
    pub delta: usize,
}

pub fn spanner_program(cfg: &AlgoConfig) -> Spanner {
    Spanner {
        delta: cfg.delta_spanner,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stage {
    Sample,
    Join,
    AfterJoin,
    Announce(usize),
    FinalCount,
    AfterFinalCount,
    FinalAnnounce(usize),
    Stop,
}

pub struct SpState {
    id: VertexId,
    lg: u32,
    p: f64,
    edges: Vec<Incident>,
    alive: Vec<bool>,
    nbr_cluster: Vec<Option<u32>>,
    cluster: Option<u32>,
    sampled: BTreeSet<u32>,
    spanner: BTreeSet<VertexId>,
    queue: Vec<u32>,
    rounds_needed: usize,
    iteration: usize,
    stage: Stage,
}

impl SpState {
    /// One edge per adjacent cluster over surviving edges: the smallest
    /// neighbor in each.
    fn one_per_cluster(&self) -> Vec<u32> {
        let mut best: Vec<(u32, VertexId)> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if !self.alive[i] {
                continue;
            }
            if let Some(c) = self.nbr_cluster[i] {
                match best.iter_mut().find(|(bc, _)| *bc == c) {
                    Some(slot) => slot.1 = slot.1.min(e.nbr),
                    None => best.push((c, e.nbr)),
                }
            }
        }
        let mut ids: Vec<u32> = best.into_iter().map(|(_, v)| v as u32).collect();
        ids.sort_unstable();
        ids
    }

    fn queue_ids(&mut self, ids: Vec<u32>) -> usize {
        self.spanner.extend(ids.iter().map(|&x| x as VertexId));
        let rounds = ids.len().div_ceil(IDS_PER_PAYLOAD);
        self.queue = ids;
        self.queue.reverse();
        self.rounds_needed = rounds;
        rounds
    }

    fn announce(&mut self) -> Step<SpMsg> {
        let take = self.queue.len().min(IDS_PER_PAYLOAD);
        if take == 0 {
            return Step::silent();
        }
        let ids: Vec<u32> = (0..take).filter_map(|_| self.queue.pop()).collect();
        let bits = ids.len() as u32 * self.lg;
        Step::broadcast(SpMsg::Ids(ids), bits)
    }

    fn absorb(&mut self, inbox: &Inbox<'_, SpMsg>) {
        let me = self.id as u32;
        for (src, m) in inbox.broadcasts() {
            let idx = neighbor_index(&self.edges, src);
            match m {
                SpMsg::Sampled => {
                    self.sampled.insert(src as u32);
                }
                SpMsg::Join { center, via } => {
                    if *via == me {
                        self.spanner.insert(src);
                    }
                    if let Some(i) = idx {
                        self.nbr_cluster[i] = Some(*center);
                    }
                }
                SpMsg::Leave { count } => {
                    if let Some(i) = idx {
                        self.nbr_cluster[i] = None;
                    }
                    let r = (*count as usize).div_ceil(IDS_PER_PAYLOAD);
                    self.rounds_needed = self.rounds_needed.max(r);
                }
                SpMsg::Count(count) => {
                    let r = (*count as usize).div_ceil(IDS_PER_PAYLOAD);
                    self.rounds_needed = self.rounds_needed.max(r);
                }
                SpMsg::Ids(ids) => {
                    if ids.contains(&me) {
                        self.spanner.insert(src);
                    }
                }
            }
        }
    }

    fn prune(&mut self) {
        for i in 0..self.edges.len() {
            let keep = match (self.cluster, self.nbr_cluster[i]) {
                (Some(a), Some(b)) => a != b,
                _ => false,
            };
            self.alive[i] &= keep;
        }
    }
}

impl Spanner {
    fn after_iteration(&self, s: &mut SpState) -> Stage {
        s.iteration += 1;
        if s.iteration < self.delta {
            Stage::Sample
        } else {
            Stage::FinalCount
        }
    }
}

impl NodeProgram for Spanner {
    type State = SpState;
    type Msg = SpMsg;
    type Output = SpannerOutput;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> SpState {
        let delta = self.delta.max(1);
        let deg = node.edges.len();
        SpState {
            id: node.id,
            lg: crate::id_bits(node.n),
            p: (node.n as f64).powf(-1.0 / delta as f64),
            edges: node.edges.to_vec(),
            alive: vec![true; deg],
            nbr_cluster: node.edges.iter().map(|e| Some(e.nbr as u32)).collect(),
            cluster: Some(node.id as u32),
            sampled: BTreeSet::new(),
            spanner: BTreeSet::new(),
            queue: Vec::new(),
            rounds_needed: 0,
            iteration: 1,
            stage: if delta > 1 { Stage::Sample } else { Stage::FinalCount },
        }
    }

    fn step(&self, s: &mut SpState, _: usize, inbox: &Inbox<'_, SpMsg>, rng: &mut SimRng) -> Step<SpMsg> {
        s.absorb(inbox);
        match s.stage {
            Stage::AfterJoin => {
                s.prune();
                s.stage = match s.rounds_needed {
                    0 => self.after_iteration(s),
                    r => Stage::Announce(r),
                };
            }
            Stage::AfterFinalCount => {
                s.stage = match s.rounds_needed {
                    0 => Stage::Stop,
                    r => Stage::FinalAnnounce(r),
                };
            }
            _ => {}
        }

        match s.stage {
            Stage::Sample => {
                s.sampled.clear();
                s.stage = Stage::Join;
                if s.cluster == Some(s.id as u32) && rng.gen_bool(s.p) {
                    s.sampled.insert(s.id as u32);
                    return Step::broadcast(SpMsg::Sampled, 1);
                }
                Step::silent()
            }
            Stage::Join => {
                s.stage = Stage::AfterJoin;
                s.rounds_needed = 0;
                let Some(own) = s.cluster else {
                    return Step::silent();
                };
                if s.sampled.contains(&own) {
                    return Step::silent();
                }
                let target = s
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| s.alive[i])
                    .filter_map(|(i, e)| s.nbr_cluster[i].map(|c| (e.nbr, c)))
                    .find(|(_, c)| s.sampled.contains(c));
                if let Some((via, center)) = target {
                    s.cluster = Some(center);
                    s.spanner.insert(via);
                    return Step::broadcast(
                        SpMsg::Join {
                            center,
                            via: via as u32,
                        },
                        1 + 2 * s.lg,
                    );
                }
                let ids = s.one_per_cluster();
                s.cluster = None;
                let count = ids.len() as u32;
                s.queue_ids(ids);
                if count == 0 {
                    return Step::silent();
                }
                Step::broadcast(SpMsg::Leave { count }, 1 + s.lg)
            }
            Stage::Announce(left) => {
                s.stage = if left > 1 {
                    Stage::Announce(left - 1)
                } else {
                    self.after_iteration(s)
                };
                s.announce()
            }
            Stage::FinalCount => {
                s.stage = Stage::AfterFinalCount;
                let ids = s.one_per_cluster();
                let count = ids.len() as u32;
                s.rounds_needed = 0;
                s.queue_ids(ids);
                if count == 0 {
                    return Step::silent();
                }
                Step::broadcast(SpMsg::Count(count), s.lg)
            }
            Stage::FinalAnnounce(left) => {
                s.stage = if left > 1 {
                    Stage::FinalAnnounce(left - 1)
                } else {
                    Stage::Stop
                };
                s.announce()
            }
            Stage::Stop => Step::halt(),
            Stage::AfterJoin | Stage::AfterFinalCount => unreachable!("resolved above"),
        }
    }

    fn output(&self, s: &SpState) -> SpannerOutput {
        SpannerOutput {
            edges: s.spanner.iter().copied().collect(),
        }
    }

    fn round_budget(&self, n: usize) -> usize {
        (self.delta + 1) * (n / IDS_PER_PAYLOAD + 4) + 8
    }
}
