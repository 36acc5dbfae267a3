//! Sequential reference implementations and validity checkers.
//!
//! Nothing here shares code with the node programs. Oracles with
//! super-linear cost refuse inputs above an explicit size cap.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use thiserror::Error;

use crate::graph::{Graph, Hypergraph, VertexId, Weight};

pub const DENSEST_MAX_N: usize = 22;
pub const DENSEST_FLOW_MAX_N: usize = 512;
pub const APSP_MAX_N: usize = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("instance with n = {n} exceeds the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

fn mst_key(u: VertexId, v: VertexId, w: Weight) -> (Weight, VertexId, VertexId) {
    (w, u.min(v), u.max(v))
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// A minimum spanning tree under the key `(w, min, max)`: total weight and
/// sorted edge list.
pub fn kruskal_mst(g: &Graph) -> Result<(u128, Vec<(VertexId, VertexId, Weight)>), OracleError> {
    let mut edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
    edges.sort_by_key(|&(u, v, w)| mst_key(u, v, w));
    let mut dsu = Dsu::new(g.n());
    let mut tree = Vec::new();
    for (u, v, w) in edges {
        if dsu.union(u, v) {
            tree.push((u, v, w));
        }
    }
    if tree.len() + 1 != g.n() {
        return Err(OracleError::Disconnected);
    }
    tree.sort_unstable();
    Ok((tree.iter().map(|e| e.2 as u128).sum(), tree))
}

/// Prim's algorithm on the same key, as an independent second opinion.
pub fn prim_mst(g: &Graph) -> Result<(u128, Vec<(VertexId, VertexId, Weight)>), OracleError> {
    let n = g.n();
    let mut in_tree = vec![false; n];
    let mut heap = BinaryHeap::new();
    let mut tree = Vec::new();
    in_tree[0] = true;
    for e in g.adj(0) {
        heap.push(Reverse((mst_key(0, e.nbr, e.w), e.nbr)));
    }
    while let Some(Reverse(((w, a, b), to))) = heap.pop() {
        if in_tree[to] {
            continue;
        }
        in_tree[to] = true;
        tree.push((a, b, w));
        for e in g.adj(to) {
            if !in_tree[e.nbr] {
                heap.push(Reverse((mst_key(to, e.nbr, e.w), e.nbr)));
            }
        }
    }
    if tree.len() + 1 != n {
        return Err(OracleError::Disconnected);
    }
    tree.sort_unstable();
    Ok((tree.iter().map(|e| e.2 as u128).sum(), tree))
}

pub fn component_count(g: &Graph) -> usize {
    let mut dsu = Dsu::new(g.n());
    let mut count = g.n();
    for e in g.edges() {
        if dsu.union(e.u, e.v) {
            count -= 1;
        }
    }
    count
}

/// Whether `edges ⊆ E(g)` forms a spanning tree of `g`.
pub fn is_spanning_tree(g: &Graph, edges: &[(VertexId, VertexId)]) -> bool {
    if edges.len() + 1 != g.n() {
        return false;
    }
    let mut dsu = Dsu::new(g.n());
    edges
        .iter()
        .all(|&(a, b)| g.has_edge(a, b) && dsu.union(a, b))
}

/// Stationary distribution of the walk that restarts at a uniform vertex
/// with probability `γ` and otherwise moves to a uniform neighbor. Mass at
/// an isolated vertex restarts uniformly. Iterates until the L1 change is at
/// most `1e-10`.
pub fn exact_pagerank(g: &Graph, gamma: f64) -> Vec<f64> {
    let n = g.n();
    let uniform = 1.0 / n as f64;
    let mut pi = vec![uniform; n];
    loop {
        let dangling: f64 = (0..n).filter(|&v| g.degree(v) == 0).map(|v| pi[v]).sum();
        let base = gamma * uniform + (1.0 - gamma) * dangling * uniform;
        let mut next = vec![base; n];
        for (u, &mass) in pi.iter().enumerate() {
            let d = g.degree(u);
            if d == 0 {
                continue;
            }
            let share = (1.0 - gamma) * mass / d as f64;
            for e in g.adj(u) {
                next[e.nbr] += share;
            }
        }
        let residual: f64 = next.iter().zip(&pi).map(|(a, b)| (a - b).abs()).sum();
        pi = next;
        if residual <= 1e-10 {
            return pi;
        }
    }
}

pub fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Exhaustive maximum of `m(S)/|S|` over nonempty `S`, with a witness.
pub fn brute_densest(g: &Graph) -> Result<(f64, Vec<VertexId>), OracleError> {
    let n = g.n();
    if n > DENSEST_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            cap: DENSEST_MAX_N,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.adj(v).iter().fold(0u32, |m, e| m | 1 << e.nbr))
        .collect();
    let (mut best_e, mut best_v, mut best_s) = (0u64, 1u64, 1u32);
    for s in 1u32..(1u32 << n) {
        let size = s.count_ones() as u64;
        let twice: u64 = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| (adj[v] & s).count_ones() as u64)
            .sum();
        let e = twice / 2;
        if e * best_v > best_e * size {
            (best_e, best_v, best_s) = (e, size, s);
        }
    }
    let witness = (0..n).filter(|&v| best_s >> v & 1 == 1).collect();
    Ok((best_e as f64 / best_v as f64, witness))
}

/// Optimal density as an exact fraction `(edges, vertices)`, by binary
/// search over candidate fractions with a max-closure (min-cut) test.
pub fn densest_by_flow(g: &Graph) -> Result<(u64, u64), OracleError> {
    if g.n() > DENSEST_FLOW_MAX_N {
        return Err(OracleError::TooLarge {
            n: g.n(),
            cap: DENSEST_FLOW_MAX_N,
        });
    }
    let n = g.n() as u64;
    let m = g.m() as u64;
    if m == 0 {
        return Ok((0, 1));
    }
    let mut cands: Vec<(u64, u64)> = (1..=n)
        .flat_map(|b| (0..=m.min(b * (b - 1) / 2)).map(move |a| (a, b)))
        .collect();
    cands.sort_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
    cands.dedup_by(|x, y| x.0 * y.1 == y.0 * x.1);
    // Smallest candidate a/b with no S of density strictly above it.
    let (mut lo, mut hi) = (0usize, cands.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        let (a, b) = cands[mid];
        if closure_value(g, a, b) > 0 {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Ok(cands[lo])
}

/// `max_S (b·m(S) − a·|S|)` via the edge/vertex closure network.
fn closure_value(g: &Graph, a: u64, b: u64) -> u64 {
    let (n, m) = (g.n(), g.m());
    let src = n + m;
    let sink = src + 1;
    let mut net = FlowNet::new(n + m + 2);
    for (i, e) in g.edges().iter().enumerate() {
        net.add(src, n + i, b);
        net.add(n + i, e.u, u64::MAX / 4);
        net.add(n + i, e.v, u64::MAX / 4);
    }
    for v in 0..n {
        net.add(v, sink, a);
    }
    b * m as u64 - net.max_flow(src, sink)
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, a: usize, b: usize, c: u64) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Edmonds–Karp.
    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0;
        loop {
            let mut prev = vec![usize::MAX; self.head.len()];
            let mut queue = VecDeque::from([s]);
            let mut seen = vec![false; self.head.len()];
            seen[s] = true;
            while let Some(x) = queue.pop_front() {
                for &id in &self.head[x] {
                    let y = self.to[id];
                    if !seen[y] && self.cap[id] > 0 {
                        seen[y] = true;
                        prev[y] = id;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut push = u64::MAX;
            let mut y = t;
            while y != s {
                let id = prev[y];
                push = push.min(self.cap[id]);
                y = self.to[id ^ 1];
            }
            let mut y = t;
            while y != s {
                let id = prev[y];
                self.cap[id] -= push;
                self.cap[id ^ 1] += push;
                y = self.to[id ^ 1];
            }
            total += push;
        }
    }
}

/// Independent and maximal in a graph.
pub fn validate_mis(g: &Graph, set: &[bool]) -> bool {
    let independent = g.edges().iter().all(|e| !(set[e.u] && set[e.v]));
    let maximal = (0..g.n()).all(|v| set[v] || g.adj(v).iter().any(|e| set[e.nbr]));
    independent && maximal
}

/// No hyperedge inside the set, and no outside vertex can be added.
pub fn validate_hypergraph_mis(h: &Hypergraph, set: &[bool]) -> bool {
    let full = |e: &Vec<VertexId>| e.iter().all(|&u| set[u]);
    if h.hyperedges().iter().any(full) {
        return false;
    }
    (0..h.n()).all(|v| {
        set[v]
            || h.incident(v).iter().any(|&i| {
                h.hyperedges()[i].iter().all(|&u| u == v || set[u])
            })
    })
}

/// Exact distances and, among minimum-weight paths, the fewest hops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllPairs {
    pub dist: Vec<Vec<Option<u64>>>,
    pub hops: Vec<Vec<Option<usize>>>,
}

impl AllPairs {
    /// Shortest-path diameter.
    pub fn sp_diameter(&self) -> usize {
        self.hops
            .iter()
            .flat_map(|row| row.iter().flatten().copied())
            .max()
            .unwrap_or(0)
    }
}

/// Floyd–Warshall on the lexicographic key `(distance, hops)`.
pub fn all_pairs_distances(g: &Graph) -> Result<AllPairs, OracleError> {
    let n = g.n();
    if n > APSP_MAX_N {
        return Err(OracleError::TooLarge { n, cap: APSP_MAX_N });
    }
    let mut d: Vec<Vec<Option<(u64, usize)>>> = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some((0, 0));
    }
    for e in g.edges() {
        let k = Some((e.w, 1));
        d[e.u][e.v] = d[e.u][e.v].min(k).or(k);
        d[e.v][e.u] = d[e.u][e.v];
    }
    for k in 0..n {
        for i in 0..n {
            let Some((a, ha)) = d[i][k] else { continue };
            for j in 0..n {
                if let Some((b, hb)) = d[k][j] {
                    let cand = (a + b, ha + hb);
                    if d[i][j].map_or(true, |cur| cand < cur) {
                        d[i][j] = Some(cand);
                    }
                }
            }
        }
    }
    Ok(AllPairs {
        dist: d.iter().map(|r| r.iter().map(|x| x.map(|p| p.0)).collect()).collect(),
        hops: d.iter().map(|r| r.iter().map(|x| x.map(|p| p.1)).collect()).collect(),
    })
}

pub fn dijkstra(g: &Graph, s: VertexId) -> Vec<Option<u64>> {
    let mut dist = vec![None; g.n()];
    let mut heap = BinaryHeap::from([Reverse((0u64, s))]);
    while let Some(Reverse((d, v))) = heap.pop() {
        if dist[v].is_some() {
            continue;
        }
        dist[v] = Some(d);
        for e in g.adj(v) {
            if dist[e.nbr].is_none() {
                heap.push(Reverse((d + e.w, e.nbr)));
            }
        }
    }
    dist
}

pub fn bfs_distances(g: &Graph, s: VertexId) -> Vec<Option<u64>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for e in g.adj(v) {
            if dist[e.nbr].is_none() {
                dist[e.nbr] = dist[v].map(|d| d + 1);
                queue.push_back(e.nbr);
            }
        }
    }
    dist
}

/// Triangle existence by intersecting the neighborhoods of each edge's
/// endpoints.
pub fn has_triangle(g: &Graph) -> bool {
    g.edges().iter().any(|e| {
        let (a, b) = (g.adj(e.u), g.adj(e.v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].nbr.cmp(&b[j].nbr) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};

    #[test]
    fn mst_examples() {
        let tri = Graph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        assert_eq!(kruskal_mst(&tri).unwrap().0, 3);
        let path = Graph::new(3, [(0, 1, 5), (1, 2, 7)]).unwrap();
        assert_eq!(kruskal_mst(&path).unwrap().0, 12);
        let split = Graph::unweighted(3, [(0, 1)]).unwrap();
        assert_eq!(kruskal_mst(&split), Err(OracleError::Disconnected));
        assert_eq!(prim_mst(&split), Err(OracleError::Disconnected));
    }

    #[test]
    fn kruskal_agrees_with_prim() {
        let mut checked = 0;
        for seed in 0..1000u64 {
            let n = 8 + (seed as usize * 37) % 249;
            let p = 8.0 / n as f64;
            let g = generate(&Model::RandomWeighted { p: p.min(1.0), wmax: 20 }, n, seed).unwrap();
            match (kruskal_mst(&g), prim_mst(&g)) {
                (Ok(a), Ok(b)) => {
                    assert_eq!(a, b, "seed {seed}");
                    checked += 1;
                }
                (Err(a), Err(b)) => assert_eq!(a, b),
                (a, b) => panic!("seed {seed}: {a:?} vs {b:?}"),
            }
        }
        assert!(checked > 500);
    }

    #[test]
    fn pagerank_examples() {
        let cycle = generate(&Model::Cycle, 8, 0).unwrap();
        assert!(exact_pagerank(&cycle, 0.15).iter().all(|&p| (p - 0.125).abs() < 1e-9));
        let edge = Graph::unweighted(2, [(0, 1)]).unwrap();
        assert!(exact_pagerank(&edge, 0.15).iter().all(|&p| (p - 0.5).abs() < 1e-9));
        let star = generate(&Model::Star, 5, 0).unwrap();
        let pi = exact_pagerank(&star, 0.15);
        assert!((1..5).all(|v| pi[0] > pi[v]));
        assert!((pi.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn densest_examples() {
        let k4 = generate(&Model::Clique, 4, 0).unwrap();
        assert_eq!(brute_densest(&k4).unwrap().0, 1.5);
        let edge = Graph::unweighted(2, [(0, 1)]).unwrap();
        assert_eq!(brute_densest(&edge).unwrap().0, 0.5);
        let big = generate(&Model::Path, 23, 0).unwrap();
        assert!(matches!(brute_densest(&big), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn densest_flow_cross_check() {
        for seed in 0..30 {
            let g = generate(&Model::Gnp { p: 0.4 }, 10, seed).unwrap();
            let (brute, witness) = brute_densest(&g).unwrap();
            let (a, b) = densest_by_flow(&g).unwrap();
            assert!((brute - a as f64 / b as f64).abs() < 1e-12, "seed {seed}");
            let inside = g
                .edges()
                .iter()
                .filter(|e| witness.contains(&e.u) && witness.contains(&e.v))
                .count();
            assert!((inside as f64 / witness.len() as f64 - brute).abs() < 1e-12);
        }
    }

    #[test]
    fn mis_checker_examples() {
        let k4 = generate(&Model::Clique, 4, 0).unwrap();
        assert!(validate_mis(&k4, &[true, false, false, false]));
        assert!(!validate_mis(&k4, &[true, true, false, false]));
        assert!(!validate_mis(&k4, &[false; 4]));
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(validate_hypergraph_mis(&h, &[true, true, false]));
        assert!(!validate_hypergraph_mis(&h, &[true, true, true]));
        assert!(!validate_hypergraph_mis(&h, &[true, false, false]));
    }

    #[test]
    fn apsp_examples() {
        let path = generate(&Model::Path, 3, 0).unwrap();
        assert_eq!(all_pairs_distances(&path).unwrap().dist[0][2], Some(2));
        let split = Graph::unweighted(3, [(0, 1)]).unwrap();
        assert_eq!(all_pairs_distances(&split).unwrap().dist[0][2], None);
    }

    #[test]
    fn apsp_rows_match_dijkstra() {
        for seed in 0..5 {
            let g = generate(&Model::RandomWeighted { p: 0.2, wmax: 30 }, 64, seed).unwrap();
            let ap = all_pairs_distances(&g).unwrap();
            for s in [0, 17, 63] {
                assert_eq!(ap.dist[s], dijkstra(&g, s));
            }
            let unit = generate(&Model::Gnp { p: 0.1 }, 64, seed).unwrap();
            let ap = all_pairs_distances(&unit).unwrap();
            assert_eq!(ap.dist[5], bfs_distances(&unit, 5));
        }
    }

    #[test]
    fn sp_diameter_matches_graph_stats() {
        for seed in 0..10 {
            let g = generate(&Model::RandomWeighted { p: 0.3, wmax: 10 }, 12, seed).unwrap();
            let ap = all_pairs_distances(&g).unwrap();
            assert_eq!(ap.sp_diameter(), crate::graph::graph_stats(&g).sp_diameter);
        }
    }

    #[test]
    fn triangles() {
        assert!(has_triangle(&generate(&Model::Clique, 3, 0).unwrap()));
        assert!(!has_triangle(&generate(&Model::Star, 6, 0).unwrap()));
        assert!(!has_triangle(&generate(&Model::Cycle, 6, 0).unwrap()));
    }

    #[test]
    fn spanning_tree_checker() {
        let g = generate(&Model::Cycle, 4, 0).unwrap();
        assert!(is_spanning_tree(&g, &[(0, 1), (1, 2), (2, 3)]));
        assert!(!is_spanning_tree(&g, &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!(component_count(&Graph::unweighted(4, [(0, 1)]).unwrap()), 3);
    }
}
