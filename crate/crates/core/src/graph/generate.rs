use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;

use super::{inf_weight, Edge, Graph, GraphError, Hypergraph, VertexId};
use crate::rng::{rng_for, stream};

/// Graph families available to [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Cycle,
    Path,
    /// Vertex 0 is the center.
    Star,
    Clique,
    /// Row-major grid with `⌈√n⌉` columns; the last row may be partial.
    Grid,
    /// Erdős–Rényi: every pair independently with probability `p`.
    Gnp { p: f64 },
    /// `Gnp` with weights drawn uniformly from `1..=wmax`.
    RandomWeighted { p: f64, wmax: u64 },
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Cycle => write!(f, "cycle"),
            Model::Path => write!(f, "path"),
            Model::Star => write!(f, "star"),
            Model::Clique => write!(f, "clique"),
            Model::Grid => write!(f, "grid"),
            Model::Gnp { p } => write!(f, "gnp:{p}"),
            Model::RandomWeighted { p, wmax } => write!(f, "random_weighted:{p}:{wmax}"),
        }
    }
}

impl FromStr for Model {
    type Err = GraphError;

    /// Accepts `cycle`, `path`, `star`, `clique`, `grid`, `gnp:<p>` and
    /// `random_weighted:<p>:<wmax>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || GraphError::BadParameter(format!("unknown model {s:?}"));
        let prob = |t: &str| t.parse::<f64>().map_err(|_| bad());
        Ok(match parts.as_slice() {
            ["cycle"] => Model::Cycle,
            ["path"] => Model::Path,
            ["star"] => Model::Star,
            ["clique"] => Model::Clique,
            ["grid"] => Model::Grid,
            ["gnp", p] => Model::Gnp { p: prob(p)? },
            ["random_weighted", p, w] => Model::RandomWeighted {
                p: prob(p)?,
                wmax: w.parse().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        })
    }
}

/// Generates a graph. Pure in `(model, n, seed)`.
pub fn generate(model: &Model, n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut edges: Vec<Edge> = Vec::new();
    let mut push = |u: VertexId, v: VertexId, w| {
        edges.push(Edge {
            u: u.min(v),
            v: u.max(v),
            w,
        })
    };
    match *model {
        Model::Cycle => {
            for i in 0..n.saturating_sub(1) {
                push(i, i + 1, 1);
            }
            if n >= 3 {
                push(n - 1, 0, 1);
            }
        }
        Model::Path => {
            for i in 1..n {
                push(i - 1, i, 1);
            }
        }
        Model::Star => {
            for i in 1..n {
                push(0, i, 1);
            }
        }
        Model::Clique => {
            for u in 0..n {
                for v in u + 1..n {
                    push(u, v, 1);
                }
            }
        }
        Model::Grid => {
            let cols = (n as f64).sqrt().ceil() as usize;
            for i in 0..n {
                if (i + 1) % cols != 0 && i + 1 < n {
                    push(i, i + 1, 1);
                }
                if i + cols < n {
                    push(i, i + cols, 1);
                }
            }
        }
        Model::Gnp { p } | Model::RandomWeighted { p, .. } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GraphError::BadProbability(p));
            }
            let wmax = match *model {
                Model::RandomWeighted { wmax, .. } => {
                    if wmax == 0 || wmax >= inf_weight(n) {
                        return Err(GraphError::BadParameter(format!(
                            "wmax {wmax} must lie in 1..{}",
                            inf_weight(n)
                        )));
                    }
                    Some(wmax)
                }
                _ => None,
            };
            let mut rng = rng_for(seed, stream::GRAPH, n as u64);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < p {
                        let w = wmax.map_or(1, |wm| rng.gen_range(1..=wm));
                        push(u, v, w);
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// `m` hyperedges, each a uniformly random `r`-subset of `0..n`.
pub fn random_uniform_hypergraph(
    n: usize,
    m: usize,
    r: usize,
    seed: u64,
) -> Result<Hypergraph, GraphError> {
    if r < 2 || r > n {
        return Err(GraphError::BadParameter(format!(
            "hyperedge size {r} must lie in 2..={n}"
        )));
    }
    let mut rng = rng_for(seed, stream::GRAPH, (n as u64) << 20 | r as u64);
    let hyperedges = (0..m)
        .map(|_| index::sample(&mut rng, n, r).into_vec())
        .collect();
    Hypergraph::new(n, hyperedges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_stats;

    #[test]
    fn clique_counts() {
        let g = generate(&Model::Clique, 4, 3).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn cycle_structure() {
        let g = generate(&Model::Cycle, 5, 0).unwrap();
        assert_eq!(g.m(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert_eq!(graph_stats(&g).diameter, Some(2));
    }

    #[test]
    fn small_and_structured_models() {
        assert_eq!(generate(&Model::Cycle, 2, 0).unwrap().m(), 1);
        assert_eq!(generate(&Model::Path, 1, 0).unwrap().m(), 0);
        let s = generate(&Model::Star, 5, 0).unwrap();
        assert_eq!(s.degree(0), 4);
        let grid = generate(&Model::Grid, 9, 0).unwrap();
        assert_eq!(grid.m(), 12);
        let partial = generate(&Model::Grid, 7, 0).unwrap();
        // 3 columns: rows {0,1,2},{3,4,5},{6}
        assert_eq!(partial.m(), 2 + 2 + 3 + 1);
    }

    #[test]
    fn gnp_rejects_bad_input() {
        assert_eq!(generate(&Model::Gnp { p: 0.5 }, 0, 0), Err(GraphError::Empty));
        assert_eq!(
            generate(&Model::Gnp { p: 1.5 }, 4, 0),
            Err(GraphError::BadProbability(1.5))
        );
        assert!(generate(&Model::RandomWeighted { p: 0.5, wmax: 15 }, 2, 0).is_err());
    }

    #[test]
    fn generation_is_pure() {
        let m = Model::RandomWeighted { p: 0.3, wmax: 50 };
        assert_eq!(generate(&m, 40, 9).unwrap(), generate(&m, 40, 9).unwrap());
        assert_ne!(generate(&m, 40, 9).unwrap(), generate(&m, 40, 10).unwrap());
    }

    #[test]
    fn gnp_mean_edge_count() {
        // Monte-Carlo over 200 seeds against the exact mean C(64,2)/2 = 1008.
        let total: usize = (0..200)
            .map(|s| generate(&Model::Gnp { p: 0.5 }, 64, s).unwrap().m())
            .sum();
        let mean = total as f64 / 200.0;
        assert!((mean - 1008.0).abs() <= 100.8, "mean {mean}");
    }

    #[test]
    fn model_strings_round_trip() {
        for s in ["cycle", "path", "star", "clique", "grid", "gnp:0.25", "random_weighted:0.3:1000"] {
            let m: Model = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        assert!("gnp".parse::<Model>().is_err());
    }

    #[test]
    fn hypergraph_generator() {
        let h = random_uniform_hypergraph(20, 30, 3, 1).unwrap();
        assert_eq!(h.hyperedges().len(), 30);
        assert!(h.hyperedges().iter().all(|e| e.len() == 3));
        assert_eq!(h, random_uniform_hypergraph(20, 30, 3, 1).unwrap());
        assert!(random_uniform_hypergraph(2, 1, 3, 0).is_err());
    }
}
