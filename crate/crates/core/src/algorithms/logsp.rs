//! `O(log n)`-approximate shortest paths through a spanner.
//!
//! A `(2δ − 1)`-spanner with `δ = ⌈log₂ n⌉` is built in the clique model and
//! priced with the broadcast conversion. Each machine then ships the
//! spanner edges it is responsible for (those whose smaller endpoint it
//! hosts) to machine 0, one `3⌈log₂ n⌉`-bit record per edge; that step costs
//! the heaviest link's load over `W`. Machine 0 answers every query exactly
//! on the collected spanner.

use std::collections::VecDeque;

use super::{Spanner, SpannerOutput};
use crate::clique::CliqueMetrics;
use crate::graph::{Graph, VertexId};
use crate::kmachine::{run_on_kmachines, KmError, Mode, Partition, SimReport};

#[derive(Debug, Clone)]
pub struct LogSpRun {
    /// `estimates[u][v]`: hop distance between `u` and `v` in the spanner.
    pub estimates: Vec<Vec<Option<u64>>>,
    pub spanner: Vec<(VertexId, VertexId)>,
    pub outputs: Vec<SpannerOutput>,
    pub delta: usize,
    /// Spanner construction plus edge collection.
    pub report: SimReport,
    pub metrics: CliqueMetrics,
    /// k-machine rounds spent on edge collection alone.
    pub collect_rounds: u64,
}

pub fn logapprox_shortest_paths(
    g: &Graph,
    k: usize,
    w: u64,
    seed: u64,
) -> Result<LogSpRun, KmError> {
    let n = g.n();
    let delta = crate::id_bits(n) as usize;
    let run = run_on_kmachines(g, &Spanner { delta }, k, w, Mode::Bcast, seed)?;
    let spanner = SpannerOutput::edge_set(&run.outputs);
    let mut report = run.report;
    let before = report.km_rounds;
    charge_collection(&mut report, &run.partition, &spanner, n);
    let collect_rounds = report.km_rounds - before;
    let estimates = (0..n).map(|s| bfs_hops(n, &spanner, s)).collect();
    Ok(LogSpRun {
        estimates,
        spanner,
        outputs: run.outputs,
        delta,
        report,
        metrics: run.metrics,
        collect_rounds,
    })
}

fn charge_collection(report: &mut SimReport, part: &Partition, edges: &[(VertexId, VertexId)], n: usize) {
    let k = part.k();
    let record = 3 * crate::id_bits(n) as u64;
    let mut load = vec![0u64; k * k];
    for &(a, _) in edges {
        let q = part.home(a);
        if q != 0 {
            load[q * k] += record;
        }
    }
    report.charge_round(&load);
}

fn bfs_hops(n: usize, edges: &[(VertexId, VertexId)], s: VertexId) -> Vec<Option<u64>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut dist = vec![None; n];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap_or(0) + 1;
        for &y in &adj[x] {
            if dist[y].is_none() {
                dist[y] = Some(d);
                queue.push_back(y);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};

    #[test]
    fn tree_estimates_are_exact() {
        let g = generate(&Model::Path, 16, 0).unwrap();
        let r = logapprox_shortest_paths(&g, 4, 4, 3).unwrap();
        for u in 0..16 {
            for v in 0..16 {
                assert_eq!(r.estimates[u][v], Some(u.abs_diff(v) as u64));
            }
        }
        assert!(r.collect_rounds > 0);
    }

    #[test]
    fn cycle_never_underestimates() {
        let g = generate(&Model::Cycle, 64, 0).unwrap();
        let r = logapprox_shortest_paths(&g, 4, 6, 1).unwrap();
        for u in 0..64usize {
            for v in 0..64usize {
                let d = u.abs_diff(v).min(64 - u.abs_diff(v)) as u64;
                let est = r.estimates[u][v].unwrap();
                assert!(d <= est && est <= (2 * r.delta as u64 - 1) * d);
            }
        }
    }

    #[test]
    fn collection_cost_uses_heaviest_link() {
        let part = Partition::from_homes(3, vec![0, 1, 1, 2]);
        let mut report = SimReport::empty(3, 2, Mode::Bcast);
        // Machine 1 hosts the smaller endpoint of two edges, machine 2 of none.
        charge_collection(&mut report, &part, &[(0, 1), (1, 2), (2, 3)], 4);
        assert_eq!(report.per_link_bits[1][0], 12);
        assert_eq!(report.km_rounds, 6);
    }
}
