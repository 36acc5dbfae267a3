//! Generates one graph per model, prints its statistics and round-trips it
//! through the edge-list format.

use kmachine::graph::{generate, graph_stats, load_edge_list, serialize, Model};

fn main() {
    let models = ["cycle", "path", "star", "clique", "grid", "gnp:0.1", "random_weighted:0.2:50"];
    for spec in models {
        let model: Model = spec.parse().expect("model");
        let g = generate(&model, 64, 1).expect("generate");
        let s = graph_stats(&g);
        println!(
            "{model:<24} n={} m={} max_degree={} diameter={:?}",
            g.n(),
            s.m,
            s.max_degree,
            s.diameter
        );
        let back = load_edge_list(&serialize(&g)).expect("parse");
        assert_eq!(back.edges(), g.edges());
    }
}
