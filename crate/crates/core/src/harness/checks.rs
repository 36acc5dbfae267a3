//! Output checks of each algorithm against the oracles.

use crate::algorithms::{
    DensestOutput, LogSpRun, MisOutput, MstOutput, PageRankOutput, PathInfo, StVerifyOutput,
};
use crate::algorithms::ConnOutput;
use crate::graph::{Graph, Hypergraph, VertexId};
use crate::oracles::{self, OracleError};

pub fn bfs(g: &Graph, source: VertexId, out: &[PathInfo]) -> bool {
    let truth = oracles::bfs_distances(g, source);
    out.iter().zip(&truth).enumerate().all(|(v, (o, &d))| {
        o.dist == d && parent_ok(g, source, v, o, |p| out[p].dist.map(|x| x + 1))
    })
}

pub fn sssp(g: &Graph, source: VertexId, out: &[PathInfo]) -> bool {
    let truth = oracles::dijkstra(g, source);
    out.iter().zip(&truth).enumerate().all(|(v, (o, &d))| {
        o.dist == d
            && parent_ok(g, source, v, o, |p| {
                out[p].dist.zip(g.weight(p, v)).map(|(x, w)| x + w)
            })
    })
}

/// A reached non-source vertex names a neighbor through which its distance
/// is attained.
fn parent_ok(
    g: &Graph,
    source: VertexId,
    v: VertexId,
    o: &PathInfo,
    via: impl Fn(VertexId) -> Option<u64>,
) -> bool {
    match (o.dist, o.parent) {
        (None, None) => true,
        (Some(0), None) => v == source,
        (Some(d), Some(p)) => v != source && g.has_edge(p, v) && via(p) == Some(d),
        _ => false,
    }
}

pub fn mst(g: &Graph, out: &[MstOutput]) -> bool {
    match oracles::kruskal_mst(g) {
        Ok((weight, _)) => {
            let forest: Vec<_> = MstOutput::forest(out).iter().map(|e| (e.0, e.1)).collect();
            MstOutput::total_weight(out) == weight
                && oracles::is_spanning_tree(g, &forest)
                && out.iter().all(|o| o.spanning && o.fragments == 1)
        }
        Err(_) => {
            let c = oracles::component_count(g);
            out.iter().all(|o| !o.spanning && o.fragments == c)
        }
    }
}

pub fn conn(g: &Graph, out: &[ConnOutput]) -> bool {
    let c = oracles::component_count(g);
    out.iter().all(|o| o.fragments == c && o.connected == (c == 1))
}

pub fn st_verify(g: &Graph, candidate: &[(VertexId, VertexId)], out: &[StVerifyOutput]) -> bool {
    let expected = oracles::is_spanning_tree(g, candidate);
    out.iter().all(|o| o.yes == expected)
}

pub fn mis(g: &Graph, out: &[MisOutput]) -> bool {
    let set: Vec<bool> = out.iter().map(|o| o.in_mis).collect();
    out.iter().all(|o| !o.failed) && oracles::validate_mis(g, &set)
}

pub fn hmis(h: &Hypergraph, set: &[bool]) -> bool {
    oracles::validate_hypergraph_mis(h, set)
}

/// Estimates sum to `1 ± 3/√N` whenever no token can end at an isolated
/// vertex.
pub fn pagerank_sum(g: &Graph, total_tokens: u64, out: &[PageRankOutput]) -> bool {
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        return true;
    }
    let sum: f64 = out.iter().map(|o| o.estimate).sum();
    (sum - 1.0).abs() <= 3.0 / (total_tokens as f64).sqrt()
}

pub fn pagerank_l1(g: &Graph, gamma: f64, out: &[PageRankOutput]) -> f64 {
    let est: Vec<f64> = out.iter().map(|o| o.estimate).collect();
    oracles::l1_distance(&est, &oracles::exact_pagerank(g, gamma))
}

/// Worst ratio `d_H(u, v) / d_G(u, v)` over connected pairs, or `None` when
/// `H` is not a subgraph of `G` or disconnects a pair connected in `G`.
pub fn stretch(g: &Graph, spanner: &[(VertexId, VertexId)]) -> Option<f64> {
    let h = g.subgraph(spanner).ok()?;
    let mut worst: f64 = 1.0;
    for s in 0..g.n() {
        let dg = oracles::bfs_distances(g, s);
        let dh = oracles::bfs_distances(&h, s);
        for (a, b) in dg.iter().zip(&dh) {
            match (a, b) {
                (None, None) => {}
                (Some(0), Some(0)) => {}
                (Some(a), Some(b)) => worst = worst.max(*b as f64 / *a as f64),
                _ => return None,
            }
        }
    }
    Some(worst)
}

pub fn spanner(g: &Graph, delta: usize, edges: &[(VertexId, VertexId)]) -> bool {
    stretch(g, edges).is_some_and(|s| s <= (2 * delta - 1) as f64)
}

pub fn logsp(g: &Graph, run: &LogSpRun) -> bool {
    let limit = 2 * run.delta as u64 - 1;
    (0..g.n()).all(|s| {
        let truth = oracles::bfs_distances(g, s);
        truth.iter().zip(&run.estimates[s]).all(|(t, e)| match (t, e) {
            (None, None) => true,
            (Some(t), Some(e)) => t <= e && *e <= limit * t,
            _ => false,
        })
    })
}

/// Optimal density when an exact oracle covers the instance.
pub fn densest_opt(g: &Graph) -> Result<f64, OracleError> {
    if g.n() <= oracles::DENSEST_MAX_N {
        oracles::brute_densest(g).map(|r| r.0)
    } else {
        oracles::densest_by_flow(g).map(|(a, b)| a as f64 / b as f64)
    }
}

/// All nodes agree, the announced members induce the announced counts, and
/// where an exact oracle applies, `density ≥ OPT/(2 + 2ε)`.
pub fn densest(g: &Graph, eps: f64, out: &[DensestOutput]) -> bool {
    let Some(first) = out.first() else {
        return true;
    };
    let agree = out.iter().all(|o| (o.edges, o.vertices) == (first.edges, first.vertices));
    let members = out.iter().filter(|o| o.member).count() as u64;
    let inside = g
        .edges()
        .iter()
        .filter(|e| out[e.u].member && out[e.v].member)
        .count() as u64;
    let consistent = agree && members == first.vertices && inside == first.edges;
    let quality = match densest_opt(g) {
        Ok(opt) => first.density() * (2.0 + 2.0 * eps) >= opt - 1e-12,
        Err(_) => true,
    };
    consistent && quality
}

pub fn triangle(g: &Graph, out: &[bool]) -> bool {
    let truth = oracles::has_triangle(g);
    out.iter().all(|&b| b == truth)
}

/// `16·log²n·(n/k + k)`.
pub fn hmis_round_bound(n: usize, k: usize) -> f64 {
    let l = (n.max(2) as f64).log2();
    16.0 * l * l * (n as f64 / k as f64 + k as f64)
}
