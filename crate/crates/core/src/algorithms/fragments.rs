//! Fragment merging: minimum spanning trees, connectivity and spanning tree
//! verification.
//!
//! Every node keeps the fragment label of every vertex (the smallest vertex
//! id in the fragment). In each phase, every node with an incident edge
//! leaving its fragment broadcasts `(fragment, neighbor)` and, for weighted
//! inputs, the edge weight in the following round. Since all nodes hear all
//! broadcasts, they pick the same minimum outgoing edge per fragment and
//! contract the same merge forest locally. A phase without any candidate
//! ends the run.

use crate::clique::{Inbox, NodeInit, NodeProgram, Step};
use crate::graph::{weight_bits, Incident, VertexId, Weight};
use crate::rng::SimRng;

/// Total order on edges used to make fragment minima unique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// `(w, min(u,v), max(u,v))`.
    #[default]
    Standard,
    /// `(min(u,v), max(u,v))`, ignoring weights. Yields a spanning tree that
    /// is generally not minimum; only useful as a fault-injection fixture.
    IdsOnly,
}

impl TieBreak {
    pub fn key(self, a: VertexId, b: VertexId, w: Weight) -> (Weight, VertexId, VertexId) {
        let (lo, hi) = (a.min(b), a.max(b));
        match self {
            TieBreak::Standard => (w, lo, hi),
            TieBreak::IdsOnly => (0, lo, hi),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FragMsg {
    /// A node's minimum outgoing edge; `count` carries the number of incident
    /// candidate edges in the first round of spanning tree verification.
    Cand {
        frag: u32,
        nbr: u32,
        count: Option<u32>,
    },
    Weight(Weight),
}

#[derive(Debug, Clone, Copy)]
struct Core {
    weighted: bool,
    tie: TieBreak,
    count: bool,
}

pub struct FragState {
    id: VertexId,
    lg: u32,
    wbits: u32,
    edges: Vec<Incident>,
    frag: Vec<u32>,
    fragments: usize,
    own: Option<(VertexId, Weight)>,
    pending: Vec<(VertexId, VertexId)>,
    tree: Vec<(VertexId, Weight)>,
    degree_sum: u64,
}

impl Core {
    fn init(&self, node: NodeInit<'_>, edges: Vec<Incident>) -> FragState {
        let edges = if self.weighted {
            edges
        } else {
            edges.into_iter().map(|e| Incident { nbr: e.nbr, w: 1 }).collect()
        };
        FragState {
            id: node.id,
            lg: crate::id_bits(node.n),
            wbits: weight_bits(node.n),
            degree_sum: edges.len() as u64,
            edges,
            frag: (0..node.n as u32).collect(),
            fragments: node.n,
            own: None,
            pending: Vec::new(),
            tree: Vec::new(),
        }
    }

    fn step(&self, s: &mut FragState, round: usize, inbox: &Inbox<'_, FragMsg>) -> Step<FragMsg> {
        let second_half = self.weighted && round % 2 == 0;
        if second_half {
            s.pending = inbox
                .broadcasts()
                .filter_map(|(src, m)| match m {
                    FragMsg::Cand { nbr, .. } => Some((src, *nbr as VertexId)),
                    FragMsg::Weight(_) => None,
                })
                .collect();
            return match s.own {
                Some((_, w)) => Step::broadcast(FragMsg::Weight(w), s.wbits),
                None => Step::silent(),
            };
        }

        if round > 1 {
            let cands = self.collect(s, inbox);
            if self.count && round == 2 {
                s.degree_sum += inbox
                    .broadcasts()
                    .filter_map(|(_, m)| match m {
                        FragMsg::Cand { count, .. } => count.map(u64::from),
                        FragMsg::Weight(_) => None,
                    })
                    .sum::<u64>();
            }
            if cands.is_empty() {
                return Step::halt();
            }
            self.merge(s, &cands);
        }
        if s.fragments == 1 {
            return Step::halt();
        }

        let me = s.frag[s.id];
        s.own = s
            .edges
            .iter()
            .filter(|e| s.frag[e.nbr] != me)
            .min_by_key(|e| self.tie.key(s.id, e.nbr, e.w))
            .map(|e| (e.nbr, e.w));
        match s.own {
            Some((nbr, _)) => {
                let first_count = self.count && round == 1;
                let count = first_count.then_some(s.edges.len() as u32);
                let bits = if first_count { 3 * s.lg } else { 2 * s.lg };
                Step::broadcast(
                    FragMsg::Cand {
                        frag: me,
                        nbr: nbr as u32,
                        count,
                    },
                    bits,
                )
            }
            None => Step::silent(),
        }
    }

    /// Last phase's candidates as `(src, nbr, w)`, own candidate included.
    fn collect(&self, s: &FragState, inbox: &Inbox<'_, FragMsg>) -> Vec<(VertexId, VertexId, Weight)> {
        let mut cands: Vec<(VertexId, VertexId, Weight)> = if self.weighted {
            let weights: Vec<(VertexId, Weight)> = inbox
                .broadcasts()
                .filter_map(|(src, m)| match m {
                    FragMsg::Weight(w) => Some((src, *w)),
                    FragMsg::Cand { .. } => None,
                })
                .collect();
            debug_assert_eq!(weights.len(), s.pending.len());
            s.pending
                .iter()
                .zip(&weights)
                .map(|(&(src, nbr), &(wsrc, w))| {
                    debug_assert_eq!(src, wsrc);
                    (src, nbr, w)
                })
                .collect()
        } else {
            inbox
                .broadcasts()
                .filter_map(|(src, m)| match m {
                    FragMsg::Cand { nbr, .. } => Some((src, *nbr as VertexId, 1)),
                    FragMsg::Weight(_) => None,
                })
                .collect()
        };
        if let Some((nbr, w)) = s.own {
            cands.push((s.id, nbr, w));
        }
        cands
    }

    fn merge(&self, s: &mut FragState, cands: &[(VertexId, VertexId, Weight)]) {
        let n = s.frag.len();
        let mut best: Vec<Option<(VertexId, VertexId, Weight)>> = vec![None; n];
        for &(a, b, w) in cands {
            let f = s.frag[a] as usize;
            let better = match best[f] {
                None => true,
                Some((x, y, v)) => self.tie.key(a, b, w) < self.tie.key(x, y, v),
            };
            if better {
                best[f] = Some((a, b, w));
            }
        }
        let mut parent: Vec<u32> = (0..n as u32).collect();
        for &(a, b, w) in best.iter().flatten() {
            let (ra, rb) = (find(&mut parent, s.frag[a]), find(&mut parent, s.frag[b]));
            if ra != rb {
                parent[ra.max(rb) as usize] = ra.min(rb);
                s.fragments -= 1;
            }
            if a == s.id || b == s.id {
                let other = if a == s.id { b } else { a };
                if !s.tree.iter().any(|&(x, _)| x == other) {
                    s.tree.push((other, w));
                }
            }
        }
        for v in 0..n {
            let f = s.frag[v];
            s.frag[v] = find(&mut parent, f);
        }
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Result of the MST program at one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MstOutput {
    /// Incident tree edges as `(neighbor, weight)`, sorted by neighbor.
    pub edges: Vec<(VertexId, Weight)>,
    /// Whether the forest spans the graph (a single fragment remained).
    pub spanning: bool,
    pub fragments: usize,
}

impl MstOutput {
    /// Sum of tree weights over all nodes' outputs (each edge counted once).
    pub fn total_weight(outputs: &[MstOutput]) -> u128 {
        let twice: u128 = outputs
            .iter()
            .flat_map(|o| o.edges.iter().map(|&(_, w)| w as u128))
            .sum();
        twice / 2
    }

    /// The forest as normalized `(u, v, w)` triples, sorted.
    pub fn forest(outputs: &[MstOutput]) -> Vec<(VertexId, VertexId, Weight)> {
        let mut out: Vec<_> = outputs
            .iter()
            .enumerate()
            .flat_map(|(v, o)| {
                o.edges
                    .iter()
                    .filter(move |&&(x, _)| v < x)
                    .map(move |&(x, w)| (v, x, w))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Mst {
    pub tie: TieBreak,
}

pub fn mst_program() -> Mst {
    Mst::default()
}

impl Mst {
    fn core(&self) -> Core {
        Core {
            weighted: true,
            tie: self.tie,
            count: false,
        }
    }
}

impl NodeProgram for Mst {
    type State = FragState;
    type Msg = FragMsg;
    type Output = MstOutput;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> FragState {
        self.core().init(node, node.edges.to_vec())
    }

    fn step(&self, s: &mut FragState, round: usize, inbox: &Inbox<'_, FragMsg>, _: &mut SimRng) -> Step<FragMsg> {
        self.core().step(s, round, inbox)
    }

    fn output(&self, s: &FragState) -> MstOutput {
        let mut edges = s.tree.clone();
        edges.sort_unstable();
        MstOutput {
            edges,
            spanning: s.fragments == 1,
            fragments: s.fragments,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnOutput {
    pub fragments: usize,
    pub connected: bool,
}

/// Connectivity: fragment merging on the input edges with unit weights.
/// A fragment with no outgoing input edge simply stops, which stands in for
/// the infinite-weight completion of the graph.
#[derive(Debug, Clone, Copy, Default)]
pub struct Conn;

pub fn conn_program() -> Conn {
    Conn
}

const CONN: Core = Core {
    weighted: false,
    tie: TieBreak::Standard,
    count: false,
};

impl NodeProgram for Conn {
    type State = FragState;
    type Msg = FragMsg;
    type Output = ConnOutput;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> FragState {
        CONN.init(node, node.edges.to_vec())
    }

    fn step(&self, s: &mut FragState, round: usize, inbox: &Inbox<'_, FragMsg>, _: &mut SimRng) -> Step<FragMsg> {
        CONN.step(s, round, inbox)
    }

    fn output(&self, s: &FragState) -> ConnOutput {
        ConnOutput {
            fragments: s.fragments,
            connected: s.fragments == 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StVerifyOutput {
    pub yes: bool,
    pub connected: bool,
    /// `|S|` from the half-counting rule.
    pub edge_count: u64,
}

/// Spanning tree verification of a candidate edge set `S ⊆ E`.
///
/// Connectivity runs on `S`; the first broadcast of each node also carries
/// its number of incident `S` edges, so every node learns `Σ deg_S / 2`.
#[derive(Debug, Clone, Default)]
pub struct StVerify {
    candidate: Vec<(VertexId, VertexId)>,
}

/// `candidate` edges are normalized internally; order does not matter.
pub fn st_verify_program<I>(candidate: I) -> StVerify
where
    I: IntoIterator<Item = (VertexId, VertexId)>,
{
    let mut candidate: Vec<_> = candidate
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    candidate.sort_unstable();
    candidate.dedup();
    StVerify { candidate }
}

const STV: Core = Core {
    weighted: false,
    tie: TieBreak::Standard,
    count: true,
};

impl NodeProgram for StVerify {
    type State = FragState;
    type Msg = FragMsg;
    type Output = StVerifyOutput;

    fn init(&self, node: NodeInit<'_>, _: &mut SimRng) -> FragState {
        let v = node.id;
        let edges = node
            .edges
            .iter()
            .filter(|e| {
                self.candidate
                    .binary_search(&(v.min(e.nbr), v.max(e.nbr)))
                    .is_ok()
            })
            .copied()
            .collect();
        STV.init(node, edges)
    }

    fn step(&self, s: &mut FragState, round: usize, inbox: &Inbox<'_, FragMsg>, _: &mut SimRng) -> Step<FragMsg> {
        STV.step(s, round, inbox)
    }

    fn output(&self, s: &FragState) -> StVerifyOutput {
        let n = s.frag.len() as u64;
        let edge_count = s.degree_sum / 2;
        let connected = s.fragments == 1;
        StVerifyOutput {
            yes: connected && edge_count == n - 1,
            connected,
            edge_count,
        }
    }
}
