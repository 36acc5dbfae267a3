//! Baswana-Sen spanners for several δ and approximate all-pairs distances
//! from a spanner collected at one machine.

use kmachine::algorithms::{logapprox_shortest_paths, spanner_program, AlgoConfig, SpannerOutput};
use kmachine::graph::{generate, Model};
use kmachine::harness::checks;
use kmachine::run_clique;

fn main() {
    let g = generate(&Model::Gnp { p: 0.3 }, 100, 7).expect("graph");
    println!("input m={}", g.m());
    for delta in [1, 2, 3, 7] {
        let cfg = AlgoConfig {
            delta_spanner: delta,
            ..AlgoConfig::default()
        };
        let prog = spanner_program(&cfg);
        let run = run_clique(&g, &prog, 7, 2000).expect("spanner");
        let edges = SpannerOutput::edge_set(&run.outputs);
        println!(
            "delta={delta}: {} edges, stretch {:?}",
            edges.len(),
            checks::stretch(&g, &edges)
        );
    }
    let run = logapprox_shortest_paths(&g, 4, 7, 7).expect("logsp");
    println!(
        "log-approx distances: delta={} spanner edges={} valid={} km_rounds={} (collection {})",
        run.delta,
        run.spanner.len(),
        checks::logsp(&g, &run),
        run.report.km_rounds,
        run.collect_rounds
    );
}
