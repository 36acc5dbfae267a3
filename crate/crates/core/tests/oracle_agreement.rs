use kmachine::algorithms::{
    bellman_ford_program, bfs_program, conn_program, densest_subgraph_program, hmis_kmachine,
    logapprox_shortest_paths, mst_program, spanner_program, st_verify_program, triangle_program,
    AlgoConfig, MstOutput, SpannerOutput,
};
use kmachine::graph::{generate, generate_gadget, random_gadget, random_uniform_hypergraph, GadgetKind, Model};
use kmachine::harness::checks;
use kmachine::{id_bits, oracles, run_clique, NodeProgram};

#[test]
fn bfs_on_gnp() {
    for seed in 0..50 {
        let g = generate(&Model::Gnp { p: 0.1 }, 128, seed).unwrap();
        let run = run_clique(&g, &bfs_program(&AlgoConfig::default()), seed, 600).unwrap();
        assert!(checks::bfs(&g, 0, &run.outputs), "seed {seed}");
    }
}

#[test]
fn mst_on_weighted_gnp() {
    for seed in 0..50 {
        let g = generate(&Model::RandomWeighted { p: 0.3, wmax: 1000 }, 256, seed).unwrap();
        let run = run_clique(&g, &mst_program(), seed, 2000).unwrap();
        let (w, _) = oracles::kruskal_mst(&g).unwrap();
        assert_eq!(MstOutput::total_weight(&run.outputs), w, "seed {seed}");
    }
}

#[test]
fn conn_gadgets() {
    let mut seen = [0usize; 2];
    for seed in 0..100 {
        let spec = random_gadget(GadgetKind::Conn, 32, seed);
        let g = generate_gadget(&spec).unwrap();
        let run = run_clique(&g, &conn_program(), seed, 500).unwrap();
        assert!(run.outputs.iter().all(|o| o.connected == spec.predicted()));
        assert!(checks::conn(&g, &run.outputs));
        seen[usize::from(spec.predicted())] += 1;
    }
    assert!(seen.iter().all(|&c| c > 20), "{seen:?}");
}

#[test]
fn stverify_gadgets() {
    let mut seen = [0usize; 2];
    for seed in 0..100 {
        let spec = random_gadget(GadgetKind::StVerify, 16, seed);
        let g = generate_gadget(&spec).unwrap();
        let all: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let run = run_clique(&g, &st_verify_program(all.iter().copied()), seed, 500).unwrap();
        assert!(run.outputs.iter().all(|o| o.yes == spec.predicted()), "seed {seed}");
        assert!(checks::st_verify(&g, &all, &run.outputs));
        seen[usize::from(spec.predicted())] += 1;
    }
    assert!(seen.iter().all(|&c| c > 20), "{seen:?}");
}

#[test]
fn bellman_ford_on_weighted_gnp() {
    for seed in 0..50 {
        let g = generate(&Model::RandomWeighted { p: 0.3, wmax: 100 }, 128, seed).unwrap();
        let run = run_clique(&g, &bellman_ford_program(&AlgoConfig::default()), seed, 600).unwrap();
        assert!(checks::sssp(&g, 0, &run.outputs), "seed {seed}");
    }
}

#[test]
fn spanner_size_on_gnp() {
    let n = 128;
    let delta = id_bits(n) as usize;
    let cfg = AlgoConfig {
        delta_spanner: delta,
        ..AlgoConfig::default()
    };
    let prog = spanner_program(&cfg);
    let mut total = 0usize;
    for seed in 0..50 {
        let g = generate(&Model::Gnp { p: 0.3 }, n, seed).unwrap();
        let run = run_clique(&g, &prog, seed, prog.round_budget(n)).unwrap();
        let edges = SpannerOutput::edge_set(&run.outputs);
        assert!(checks::spanner(&g, delta, &edges), "seed {seed}");
        total += edges.len();
    }
    let mean = total as f64 / 50.0;
    let bound = 4.0 * delta as f64 * (n as f64).powf(1.0 + 1.0 / delta as f64);
    assert!(mean <= bound, "{mean} > {bound}");
}

#[test]
fn logsp_on_clique() {
    let g = generate(&Model::Clique, 64, 0).unwrap();
    let run = logapprox_shortest_paths(&g, 4, 6, 5).unwrap();
    assert!(checks::logsp(&g, &run));
}

#[test]
fn densest_on_small_gnp() {
    let d = AlgoConfig::default();
    for seed in 0..100 {
        let n = 4 + (seed as usize % 9);
        let g = generate(&Model::Gnp { p: 0.5 }, n, seed).unwrap();
        let prog = densest_subgraph_program(&d);
        let run = run_clique(&g, &prog, seed, prog.round_budget(n)).unwrap();
        let (opt, _) = oracles::brute_densest(&g).unwrap();
        assert!(run.outputs[0].density() * (2.0 + 2.0 * d.eps) >= opt, "seed {seed}");
    }
}

#[test]
fn triangle_on_gnp() {
    let mut yes = 0;
    for seed in 0..50 {
        let g = generate(&Model::Gnp { p: 0.2 }, 64, seed).unwrap();
        let run = run_clique(&g, &triangle_program(), seed, triangle_program().round_budget(64)).unwrap();
        assert!(checks::triangle(&g, &run.outputs), "seed {seed}");
        yes += usize::from(run.outputs[0]);
    }
    assert!(yes > 0);
}

#[test]
fn sparse_triangle_instances_include_both_answers() {
    let mut answers = [0usize; 2];
    for seed in 0..60 {
        let g = generate(&Model::Gnp { p: 0.03 }, 64, seed).unwrap();
        let run = run_clique(&g, &triangle_program(), seed, triangle_program().round_budget(64)).unwrap();
        assert!(checks::triangle(&g, &run.outputs));
        answers[usize::from(run.outputs[0])] += 1;
    }
    assert!(answers.iter().all(|&c| c > 0), "{answers:?}");
}

#[test]
fn hmis_on_three_uniform_hypergraphs() {
    let n = 64;
    for seed in 0..50 {
        let h = random_uniform_hypergraph(n, 2 * n, 3, seed).unwrap();
        let run = hmis_kmachine(&h, 4, id_bits(n) as u64, seed).unwrap();
        assert!(checks::hmis(&h, &run.in_set), "seed {seed}");
        assert!((run.report.km_rounds as f64) <= checks::hmis_round_bound(n, 4));
    }
}
