//! BFS on an unweighted graph and Bellman-Ford on a weighted one, checked
//! against sequential oracles.

use kmachine::algorithms::{bellman_ford_program, bfs_program, AlgoConfig};
use kmachine::graph::{generate, Model};
use kmachine::{oracles, run_on_kmachines, Mode};

fn main() {
    let cfg = AlgoConfig::default();

    let g = generate(&Model::Grid, 100, 0).expect("grid");
    let run = run_on_kmachines(&g, &bfs_program(&cfg), 4, 7, Mode::Bcast, 1).expect("bfs");
    let dist: Vec<_> = run.outputs.iter().map(|o| o.dist).collect();
    assert_eq!(dist, oracles::bfs_distances(&g, 0));
    println!("bfs grid n=100: eccentricity {:?}, {} k-machine rounds", dist.iter().flatten().max(), run.report.km_rounds);

    let g = generate(&Model::RandomWeighted { p: 0.1, wmax: 100 }, 128, 2).expect("graph");
    let run = run_on_kmachines(&g, &bellman_ford_program(&cfg), 8, 7, Mode::Bcast, 2).expect("bf");
    let dist: Vec<_> = run.outputs.iter().map(|o| o.dist).collect();
    assert_eq!(dist, oracles::dijkstra(&g, 0));
    println!("bellman-ford n=128: farthest {:?}, {} k-machine rounds", dist.iter().flatten().max(), run.report.km_rounds);
}
