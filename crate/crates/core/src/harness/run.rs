use super::config::{ExperimentConfig, GraphSource};
use super::{checks, HarnessError};
use crate::algorithms::{
    bellman_ford_program, bfs_program, conn_program, densest_subgraph_program, hmis_kmachine,
    logapprox_shortest_paths, luby_mis_program, pagerank_program, spanner_program,
    st_verify_program, triangle_program, AlgoConfig, Algorithm, Mst, SpannerOutput,
};
use crate::clique::{run_clique, CliqueMetrics, CliqueTrace, NodeProgram};
use crate::graph::{
    generate, generate_gadget, load_edge_list, random_gadget, random_uniform_hypergraph, Graph,
    Hypergraph,
};
use crate::kmachine::{convert, random_vertex_partition, within_conversion_bound, RunRecord};

/// The input of one seed.
#[derive(Debug, Clone)]
pub enum Instance {
    Graph(Graph),
    Hyper(Hypergraph),
}

impl Instance {
    pub fn n(&self) -> usize {
        match self {
            Instance::Graph(g) => g.n(),
            Instance::Hyper(h) => h.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            Instance::Graph(g) => g.m(),
            Instance::Hyper(h) => h.hyperedges().len(),
        }
    }
}

pub fn build_graph(source: &GraphSource, n: usize, seed: u64) -> Result<Graph, HarnessError> {
    Ok(match source {
        GraphSource::Model(m) => generate(m, n, seed)?,
        GraphSource::Gadget(kind) => generate_gadget(&random_gadget(*kind, n, seed))?,
        GraphSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
            load_edge_list(&text)?
        }
    })
}

pub fn build_instance(cfg: &ExperimentConfig, seed: u64) -> Result<Instance, HarnessError> {
    if cfg.algorithm == Algorithm::Hmis && cfg.rank > 2 {
        let m = cfg.hyperedges.unwrap_or(cfg.n);
        return Ok(Instance::Hyper(random_uniform_hypergraph(cfg.n, m, cfg.rank, seed)?));
    }
    let g = build_graph(&cfg.graph, cfg.n, seed)?;
    if cfg.algorithm == Algorithm::Hmis {
        let edges = g.edges().iter().map(|e| vec![e.u, e.v]).collect();
        return Ok(Instance::Hyper(Hypergraph::new(g.n(), edges)?));
    }
    Ok(Instance::Graph(g))
}

/// One CSV row per `(k, seed)`, sorted by `k` then seed. A row's `success`
/// is the oracle verdict on the outputs combined with the round bound of
/// its mode.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<RunRecord>, HarnessError> {
    cfg.validate()?;
    let mut instances = Vec::with_capacity(cfg.seeds.len());
    for &seed in &cfg.seeds {
        let inst = build_instance(cfg, seed)?;
        check_instance(cfg, &inst)?;
        instances.push((seed, inst));
    }
    let mut rows = Vec::new();
    for (seed, inst) in &instances {
        rows.extend(run_on_instance(cfg, inst, *seed)?);
    }
    rows.sort_by_key(|r| (r.report.k, r.seed));
    Ok(rows)
}

fn check_instance(cfg: &ExperimentConfig, inst: &Instance) -> Result<(), HarnessError> {
    let n = inst.n();
    if let Some(&k) = cfg.k.iter().find(|&&k| k > n) {
        return Err(HarnessError::Config(format!("k = {k} exceeds n = {n}")));
    }
    cfg.params.check_source(n)?;
    Ok(())
}

/// A clique execution with its oracle verdict.
struct Outcome {
    trace: CliqueTrace,
    metrics: CliqueMetrics,
    valid: bool,
}

fn clique<P: NodeProgram>(
    g: &Graph,
    prog: &P,
    seed: u64,
    check: impl FnOnce(&[P::Output]) -> bool,
) -> Result<Outcome, HarnessError> {
    let run = run_clique(g, prog, seed, prog.round_budget(g.n()))?;
    let valid = check(&run.outputs);
    Ok(Outcome {
        trace: run.trace,
        metrics: run.metrics,
        valid,
    })
}

fn execute(alg: Algorithm, g: &Graph, p: &AlgoConfig, seed: u64) -> Result<Outcome, HarnessError> {
    match alg {
        Algorithm::Bfs => clique(g, &bfs_program(p), seed, |o| checks::bfs(g, p.source, o)),
        Algorithm::BfSssp => clique(g, &bellman_ford_program(p), seed, |o| {
            checks::sssp(g, p.source, o)
        }),
        Algorithm::Mst => clique(g, &Mst::default(), seed, |o| checks::mst(g, o)),
        Algorithm::Conn => clique(g, &conn_program(), seed, |o| checks::conn(g, o)),
        Algorithm::StVerify => {
            let all: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
            clique(g, &st_verify_program(all.iter().copied()), seed, |o| {
                checks::st_verify(g, &all, o)
            })
        }
        Algorithm::PageRank => {
            let prog = pagerank_program(p, g.n());
            let total = prog.total_tokens();
            clique(g, &prog, seed, |o| checks::pagerank_sum(g, total, o))
        }
        Algorithm::Mis => clique(g, &luby_mis_program(p), seed, |o| checks::mis(g, o)),
        Algorithm::Spanner => {
            let prog = spanner_program(p);
            clique(g, &prog, seed, |o| {
                checks::spanner(g, prog.delta, &SpannerOutput::edge_set(o))
            })
        }
        Algorithm::Densest => clique(g, &densest_subgraph_program(p), seed, |o| {
            checks::densest(g, p.eps, o)
        }),
        Algorithm::Triangle => clique(g, &triangle_program(), seed, |o| checks::triangle(g, o)),
        Algorithm::Hmis | Algorithm::LogSp => unreachable!("priced per k"),
    }
}

/// Runs every `k` of `cfg` on one instance. The clique execution does not
/// depend on `k`, so it runs once and its trace is priced per `k`.
pub fn run_on_instance(
    cfg: &ExperimentConfig,
    inst: &Instance,
    seed: u64,
) -> Result<Vec<RunRecord>, HarnessError> {
    let n = inst.n();
    let w = cfg.w.unwrap_or(crate::id_bits(n) as u64);
    let record = |metrics, report| RunRecord {
        n,
        m: inst.m(),
        algorithm: cfg.algorithm.name().to_string(),
        seed,
        metrics,
        report,
    };
    let mut rows = Vec::with_capacity(cfg.k.len());
    match (cfg.algorithm, inst) {
        (Algorithm::Hmis, Instance::Hyper(h)) => {
            for &k in &cfg.k {
                let run = hmis_kmachine(h, k, w, seed)?;
                let mut report = run.report;
                report.success = checks::hmis(h, &run.in_set)
                    && report.km_rounds as f64 <= checks::hmis_round_bound(n, k);
                rows.push(record(CliqueMetrics::default(), report));
            }
        }
        (Algorithm::LogSp, Instance::Graph(g)) => {
            for &k in &cfg.k {
                let run = logapprox_shortest_paths(g, k, w, seed)?;
                let mut spanner_part = run.report.clone();
                spanner_part.km_rounds -= run.collect_rounds;
                let mut report = run.report.clone();
                report.success = checks::logsp(g, &run)
                    && within_conversion_bound(&spanner_part, &run.metrics, n);
                rows.push(record(run.metrics, report));
            }
        }
        (alg, Instance::Graph(g)) => {
            let out = execute(alg, g, &cfg.params, seed)?;
            let mode = cfg.mode();
            for &k in &cfg.k {
                let part = random_vertex_partition(g, k, seed)?;
                let mut report = convert(&out.trace, &part, w, mode)?;
                report.success = out.valid && within_conversion_bound(&report, &out.metrics, n);
                rows.push(record(out.metrics, report));
            }
        }
        (alg, Instance::Hyper(_)) => {
            return Err(HarnessError::Config(format!("{alg} needs a graph instance")))
        }
    }
    Ok(rows)
}
