//! Random-walk PageRank compared with the power-iteration oracle.

use kmachine::algorithms::{pagerank_program, AlgoConfig};
use kmachine::graph::{generate, Model};
use kmachine::{oracles, run_on_kmachines, Mode};

fn main() {
    let n = 200;
    let g = generate(&Model::Gnp { p: 0.05 }, n, 5).expect("graph");
    let truth = oracles::exact_pagerank(&g, 0.15);
    for factor in [1.0, 4.0, 16.0] {
        let cfg = AlgoConfig {
            token_factor: factor,
            ..AlgoConfig::default()
        };
        let prog = pagerank_program(&cfg, n);
        let run = run_on_kmachines(&g, &prog, 8, 8, Mode::P2p, 5).expect("pagerank");
        let est: Vec<f64> = run.outputs.iter().map(|o| o.estimate).collect();
        println!(
            "tokens={:>6} L1={:.4} km_rounds={}",
            prog.total_tokens(),
            oracles::l1_distance(&est, &truth),
            run.report.km_rounds
        );
    }
}
