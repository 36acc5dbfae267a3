//! Luby's MIS in the clique model and the hypergraph MIS run directly on
//! k machines.

use kmachine::algorithms::{hmis_kmachine, luby_mis_program, AlgoConfig};
use kmachine::graph::{generate, random_uniform_hypergraph, Model};
use kmachine::{id_bits, oracles, run_on_kmachines, Mode};

fn main() {
    let g = generate(&Model::Gnp { p: 0.1 }, 150, 6).expect("graph");
    let run = run_on_kmachines(&g, &luby_mis_program(&AlgoConfig::default()), 4, 8, Mode::Bcast, 6).expect("mis");
    let set: Vec<bool> = run.outputs.iter().map(|o| o.in_mis).collect();
    let phases = run.outputs.iter().map(|o| o.phase).max().unwrap_or(0);
    println!(
        "luby: |I|={} valid={} phases={phases}",
        set.iter().filter(|&&b| b).count(),
        oracles::validate_mis(&g, &set)
    );

    let n = 64;
    let h = random_uniform_hypergraph(n, 128, 3, 6).expect("hypergraph");
    for k in [2, 4, 8] {
        let run = hmis_kmachine(&h, k, id_bits(n) as u64, 6).expect("hmis");
        println!(
            "hmis k={k}: |I|={} valid={} km_rounds={}",
            run.in_set.iter().filter(|&&b| b).count(),
            oracles::validate_hypergraph_mis(&h, &run.in_set),
            run.report.km_rounds
        );
    }
}
