//! Prices one MST execution on k machines in both conversion modes and
//! compares the measured rounds to the conversion bounds.

use kmachine::algorithms::mst_program;
use kmachine::graph::{generate, Model};
use kmachine::kmachine::{bcast_round_bound, check_mapping_bounds, convert, p2p_round_bound, random_vertex_partition};
use kmachine::{id_bits, run_clique, Mode};

fn main() {
    let n = 256;
    let g = generate(&Model::RandomWeighted { p: 0.1, wmax: 1000 }, n, 4).expect("graph");
    let run = run_clique(&g, &mst_program(), 4, 4 * n).expect("mst");
    let w = id_bits(n) as u64;
    println!("clique: {:?}", run.metrics);
    println!("{:>3} {:>10} {:>12} {:>10} {:>12} {:>9}", "k", "p2p", "p2p_bound", "bcast", "bcast_bound", "max_load");
    for k in [2, 4, 8, 16, 32] {
        let part = random_vertex_partition(&g, k, 4).expect("partition");
        let p2p = convert(&run.trace, &part, w, Mode::P2p).expect("p2p");
        let bcast = convert(&run.trace, &part, w, Mode::Bcast).expect("bcast");
        let (vertices, _) = check_mapping_bounds(&g, &part);
        println!(
            "{k:>3} {:>10} {:>12.0} {:>10} {:>12.0} {:>9}",
            p2p.km_rounds,
            p2p_round_bound(&run.metrics, n, k, w),
            bcast.km_rounds,
            bcast_round_bound(&run.metrics, n, k, w),
            vertices
        );
    }
}
