use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub m: usize,
    pub max_degree: usize,
    /// Hop diameter; `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    /// Shortest-path diameter: the largest, over connected pairs, of the
    /// fewest edges on any minimum-weight path.
    pub sp_diameter: usize,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let n = g.n();
    let mut diameter = Some(0);
    let mut sp_diameter = 0;
    for s in 0..n {
        match bfs_eccentricity(g, s) {
            Some(ecc) => diameter = diameter.map(|d: usize| d.max(ecc)),
            None => diameter = None,
        }
        sp_diameter = sp_diameter.max(min_hop_eccentricity(g, s));
    }
    GraphStats {
        m: g.m(),
        max_degree: g.max_degree(),
        diameter,
        sp_diameter,
    }
}

fn bfs_eccentricity(g: &Graph, s: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut reached = 1;
    let mut ecc = 0;
    while let Some(v) = queue.pop_front() {
        for inc in g.adj(v) {
            if dist[inc.nbr] == usize::MAX {
                dist[inc.nbr] = dist[v] + 1;
                ecc = ecc.max(dist[inc.nbr]);
                reached += 1;
                queue.push_back(inc.nbr);
            }
        }
    }
    (reached == g.n()).then_some(ecc)
}

/// Dijkstra on the lexicographic key `(weight, hops)`.
fn min_hop_eccentricity(g: &Graph, s: usize) -> usize {
    let mut best = vec![(u128::MAX, usize::MAX); g.n()];
    best[s] = (0, 0);
    let mut heap = BinaryHeap::from([Reverse((0u128, 0usize, s))]);
    let mut ecc = 0;
    while let Some(Reverse((d, h, v))) = heap.pop() {
        if (d, h) > best[v] {
            continue;
        }
        ecc = ecc.max(h);
        for inc in g.adj(v) {
            let cand = (d + inc.w as u128, h + 1);
            if cand < best[inc.nbr] {
                best[inc.nbr] = cand;
                heap.push(Reverse((cand.0, cand.1, inc.nbr)));
            }
        }
    }
    ecc
}
