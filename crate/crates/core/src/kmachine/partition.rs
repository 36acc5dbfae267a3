use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::rng::{rng_for, stream};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("machine count must be at least 1")]
    NoMachines,
    #[error("{k} machines exceed the {n} vertices")]
    TooManyMachines { k: usize, n: usize },
}

/// A random vertex partition: every vertex has one home machine in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    k: usize,
    home: Vec<u32>,
    seed: u64,
}

impl Partition {
    /// A partition with explicit homes, mainly for tests.
    pub fn from_homes(k: usize, home: Vec<u32>) -> Self {
        assert!(home.iter().all(|&h| (h as usize) < k), "home outside 0..k");
        Partition { k, home, seed: 0 }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.home.len()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn home(&self, v: VertexId) -> usize {
        self.home[v] as usize
    }

    /// Vertex count hosted by each machine.
    pub fn loads(&self) -> Vec<usize> {
        let mut loads = vec![0; self.k];
        for &h in &self.home {
            loads[h as usize] += 1;
        }
        loads
    }

    /// Vertices hosted by machine `p`, ascending.
    pub fn hosted(&self, p: usize) -> Vec<VertexId> {
        (0..self.home.len())
            .filter(|&v| self.home[v] as usize == p)
            .collect()
    }
}

/// Assigns each vertex independently and uniformly to one of `k` machines.
/// The home of `v` depends only on `(seed, v, k)`.
pub fn random_vertex_partition(g: &Graph, k: usize, seed: u64) -> Result<Partition, PartitionError> {
    random_partition_of(g.n(), k, seed)
}

pub fn random_partition_of(n: usize, k: usize, seed: u64) -> Result<Partition, PartitionError> {
    if k == 0 {
        return Err(PartitionError::NoMachines);
    }
    if k > n {
        return Err(PartitionError::TooManyMachines { k, n });
    }
    let home = (0..n)
        .map(|v| rng_for(seed, stream::PARTITION, v as u64).gen_range(0..k as u32))
        .collect();
    Ok(Partition { k, home, seed })
}

/// Largest vertex count on one machine and largest input-edge count on one
/// inter-machine link `{p, q}`, `p ≠ q`.
pub fn check_mapping_bounds(g: &Graph, part: &Partition) -> (usize, usize) {
    let k = part.k();
    let max_vertices = part.loads().into_iter().max().unwrap_or(0);
    let mut links = vec![0usize; k * k];
    for e in g.edges() {
        let (p, q) = (part.home(e.u), part.home(e.v));
        if p != q {
            links[p.min(q) * k + p.max(q)] += 1;
        }
    }
    (max_vertices, links.into_iter().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};

    #[test]
    fn single_vertex_single_machine() {
        let g = generate(&Model::Path, 1, 0).unwrap();
        let p = random_vertex_partition(&g, 1, 5).unwrap();
        assert_eq!(p.home(0), 0);
    }

    #[test]
    fn rejects_bad_k() {
        let g = generate(&Model::Path, 3, 0).unwrap();
        assert_eq!(random_vertex_partition(&g, 0, 0), Err(PartitionError::NoMachines));
        assert_eq!(
            random_vertex_partition(&g, 4, 0),
            Err(PartitionError::TooManyMachines { k: 4, n: 3 })
        );
    }

    #[test]
    fn deterministic() {
        let g = generate(&Model::Path, 100, 0).unwrap();
        assert_eq!(
            random_vertex_partition(&g, 7, 3).unwrap(),
            random_vertex_partition(&g, 7, 3).unwrap()
        );
        assert_ne!(
            random_vertex_partition(&g, 7, 3).unwrap(),
            random_vertex_partition(&g, 7, 4).unwrap()
        );
    }

    #[test]
    fn concentration_over_seeds() {
        // n = 10000, k = 10: counts stay within 1000 ± 5·√1000 and average 1000.
        let slack = 5.0 * 1000f64.sqrt();
        let mut total = 0usize;
        for seed in 0..100 {
            let p = random_partition_of(10_000, 10, seed).unwrap();
            for c in p.loads() {
                assert!((c as f64 - 1000.0).abs() <= slack, "seed {seed}: {c}");
                total += c;
            }
        }
        assert_eq!(total, 100 * 10_000);
    }

    #[test]
    fn two_vertices_one_edge() {
        let g = Graph::unweighted(2, [(0, 1)]).unwrap();
        let p = Partition::from_homes(2, vec![0, 1]);
        assert_eq!(check_mapping_bounds(&g, &p), (1, 1));
        let same = Partition::from_homes(2, vec![1, 1]);
        assert_eq!(check_mapping_bounds(&g, &same), (2, 0));
    }
}
