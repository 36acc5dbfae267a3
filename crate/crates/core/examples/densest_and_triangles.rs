//! Densest-subgraph peeling against the exact optimum, and triangle
//! detection.

use kmachine::algorithms::{densest_subgraph_program, triangle_program, AlgoConfig};
use kmachine::graph::{generate, Model};
use kmachine::harness::checks;
use kmachine::{oracles, run_on_kmachines, Mode};

fn main() {
    let cfg = AlgoConfig::default();
    let g = generate(&Model::Gnp { p: 0.08 }, 120, 9).expect("graph");
    let run = run_on_kmachines(&g, &densest_subgraph_program(&cfg), 4, 7, Mode::Bcast, 9).expect("densest");
    let found = &run.outputs[0];
    let opt = checks::densest_opt(&g).expect("optimum");
    println!(
        "densest: {} vertices, {} edges, density {:.3}, optimum {opt:.3}, guarantee {:.3}",
        found.vertices,
        found.edges,
        found.density(),
        opt / (2.0 + 2.0 * cfg.eps)
    );

    for p in [0.01, 0.03, 0.1] {
        let g = generate(&Model::Gnp { p }, 80, 9).expect("graph");
        let run = run_on_kmachines(&g, &triangle_program(), 4, 7, Mode::P2p, 9).expect("triangle");
        println!("gnp:{p} triangle={} oracle={}", run.outputs[0], oracles::has_triangle(&g));
    }
}
