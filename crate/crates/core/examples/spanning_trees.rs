//! Minimum spanning forest, connectivity and spanning tree verification.

use kmachine::algorithms::{conn_program, mst_program, st_verify_program, MstOutput};
use kmachine::graph::{generate, generate_gadget, random_gadget, GadgetKind, Model};
use kmachine::{oracles, run_clique, run_on_kmachines, Mode};

fn main() {
    let g = generate(&Model::RandomWeighted { p: 0.05, wmax: 1000 }, 200, 3).expect("graph");
    let run = run_on_kmachines(&g, &mst_program(), 8, 8, Mode::Bcast, 3).expect("mst");
    let weight = MstOutput::total_weight(&run.outputs);
    println!("mst weight {weight}, kruskal {:?}", oracles::kruskal_mst(&g).map(|r| r.0));
    println!("{} clique rounds, {} k-machine rounds", run.metrics.rounds, run.report.km_rounds);

    for seed in 0..4 {
        let spec = random_gadget(GadgetKind::Conn, 16, seed);
        let h = generate_gadget(&spec).expect("gadget");
        let out = run_clique(&h, &conn_program(), seed, 400).expect("conn").outputs;
        println!("conn gadget {seed}: connected={} predicted={}", out[0].connected, spec.predicted());
    }

    let (_, tree) = oracles::kruskal_mst(&g).expect("connected");
    let mut candidate: Vec<_> = tree.iter().map(|&(u, v, _)| (u, v)).collect();
    let yes = run_clique(&g, &st_verify_program(candidate.iter().copied()), 0, 1000).expect("verify").outputs;
    candidate.pop();
    let no = run_clique(&g, &st_verify_program(candidate.iter().copied()), 0, 1000).expect("verify").outputs;
    println!("verify tree: {}, verify tree minus one edge: {}", yes[0].yes, no[0].yes);
}
