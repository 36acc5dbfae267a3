//! The fixed validation battery.

use std::fmt;

use super::config::{ExperimentConfig, GraphSource};
use super::fit::{fit_scaling, median, Sweep};
use super::run::{run_on_instance, Instance};
use super::{checks, HarnessError};
use crate::algorithms::{
    bellman_ford_program, bfs_program, conn_program, densest_subgraph_program, hmis_kmachine,
    logapprox_shortest_paths, luby_mis_program, pagerank_program, spanner_program,
    st_verify_program, triangle_program, AlgoConfig, Algorithm, Mst, Spanner, SpannerOutput,
    TieBreak,
};
use crate::clique::{run_clique, NodeProgram};
use crate::graph::{
    generate, generate_gadget, random_admissible, random_gadget, random_uniform_hypergraph,
    GadgetKind, Graph, Model,
};
use crate::kmachine::{
    check_mapping_bounds, random_vertex_partition, run_on_kmachines, within_conversion_bound,
    Mode, RunRecord,
};
use crate::rng::{prf, stream};

/// Pass counts of one family of instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}/{}", self.name, self.passed, self.total)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {verdict} {}: {}", self.id, self.name, self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub seed: u64,
    pub criteria: Vec<Criterion>,
    /// Every k-machine run of the battery, in execution order.
    pub rows: Vec<RunRecord>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    pub fn verdicts(&self) -> Vec<(u8, bool)> {
        self.criteria.iter().map(|c| (c.id, c.pass)).collect()
    }

    pub fn criterion(&self, id: u8) -> Option<&Criterion> {
        self.criteria.iter().find(|c| c.id == id)
    }

    pub fn csv(&self) -> String {
        super::to_csv(&self.rows)
    }
}

/// Seed of instance `i` of family `tag`.
fn sub(seed: u64, tag: u64, i: usize) -> u64 {
    prf(seed, stream::INSTANCE ^ tag, i as u64)
}

fn w_for(n: usize) -> u64 {
    crate::id_bits(n) as u64
}

fn lg(n: usize) -> f64 {
    (n as f64).log2()
}

struct Battery {
    seed: u64,
    rows: Vec<RunRecord>,
    bound_checked: usize,
    bound_violations: usize,
}

impl Battery {
    fn push(&mut self, row: RunRecord, bound_ok: bool) {
        if row.report.mode != Mode::Direct {
            self.bound_checked += 1;
            if !bound_ok {
                self.bound_violations += 1;
            }
        }
        self.rows.push(row);
    }

    fn push_harness_rows(&mut self, rows: Vec<RunRecord>) {
        for r in rows {
            let ok = within_conversion_bound(&r.report, &r.metrics, r.n);
            self.push(r, ok);
        }
    }
}

pub fn validate_all(seed: u64) -> Result<ValidationReport, HarnessError> {
    let mut b = Battery {
        seed,
        rows: Vec::new(),
        bound_checked: 0,
        bound_violations: 0,
    };
    let mut criteria = vec![fidelity(&mut b)?, correctness(seed)?, mapping(seed)?];
    let (mst, pagerank) = table_scaling(&mut b)?;
    let lower = lower_bound_direction(&mut b)?;
    let mis = mis_phases(seed)?;
    let pr = pagerank_accuracy(seed)?;
    let hmis = hmis_rounds(&mut b)?;
    criteria.push(Criterion {
        id: 4,
        name: "conversion bounds",
        pass: b.bound_violations == 0,
        detail: format!("{} violations in {} runs", b.bound_violations, b.bound_checked),
    });
    criteria.extend([mst, pagerank, lower, mis, pr, hmis]);
    criteria.sort_by_key(|c| c.id);
    Ok(ValidationReport {
        seed,
        criteria,
        rows: b.rows,
    })
}

fn fidelity_graph(alg: Algorithm, n: usize, seed: u64) -> Result<Graph, HarnessError> {
    let sparse = (4.0 / n as f64).min(1.0);
    Ok(match alg {
        Algorithm::Mst | Algorithm::BfSssp => generate(
            &Model::RandomWeighted {
                p: (3.0 * (n as f64).ln() / n as f64).min(1.0),
                wmax: 16,
            },
            n,
            seed,
        )?,
        Algorithm::StVerify => generate_gadget(&random_gadget(GadgetKind::StVerify, n / 2 - 1, seed))?,
        _ => generate(&Model::Gnp { p: sparse }, n, seed)?,
    })
}

fn compare<P: NodeProgram>(
    b: &mut Battery,
    alg: Algorithm,
    g: &Graph,
    prog: &P,
    k: usize,
    seed: u64,
) -> Result<bool, HarnessError>
where
    P::Output: PartialEq,
{
    let mode = super::default_mode(alg);
    let n = g.n();
    let km = run_on_kmachines(g, prog, k, w_for(n), mode, seed)?;
    let pure = run_clique(g, prog, seed, prog.round_budget(n))?;
    let same = km.outputs == pure.outputs && km.metrics == pure.metrics;
    let bound_ok = within_conversion_bound(&km.report, &km.metrics, n);
    let mut report = km.report;
    report.success = same && bound_ok;
    b.push(
        RunRecord {
            n,
            m: g.m(),
            algorithm: alg.name().to_string(),
            seed,
            metrics: km.metrics,
            report,
        },
        bound_ok,
    );
    Ok(same)
}

/// Criterion 1: k-machine outputs equal pure clique outputs.
fn fidelity(b: &mut Battery) -> Result<Criterion, HarnessError> {
    let cfg = AlgoConfig::default();
    let mut runs = 0;
    let mut diffs = 0;
    for (ai, &alg) in Algorithm::ALL.iter().enumerate() {
        if alg == Algorithm::Hmis {
            continue;
        }
        for i in 0..20 {
            let s = sub(b.seed, 1, ai * 1000 + i);
            let n = 16 + (s % 241) as usize;
            let k = 2 + i % 7;
            let g = fidelity_graph(alg, n, s)?;
            let same = match alg {
                Algorithm::Bfs => compare(b, alg, &g, &bfs_program(&cfg), k, s)?,
                Algorithm::BfSssp => compare(b, alg, &g, &bellman_ford_program(&cfg), k, s)?,
                Algorithm::Mst => compare(b, alg, &g, &Mst::default(), k, s)?,
                Algorithm::Conn => compare(b, alg, &g, &conn_program(), k, s)?,
                Algorithm::StVerify => {
                    let all = g.edges().iter().map(|e| (e.u, e.v));
                    compare(b, alg, &g, &st_verify_program(all), k, s)?
                }
                Algorithm::PageRank => compare(b, alg, &g, &pagerank_program(&cfg, g.n()), k, s)?,
                Algorithm::Mis => compare(b, alg, &g, &luby_mis_program(&cfg), k, s)?,
                Algorithm::Spanner => compare(b, alg, &g, &spanner_program(&cfg), k, s)?,
                Algorithm::Densest => compare(b, alg, &g, &densest_subgraph_program(&cfg), k, s)?,
                Algorithm::Triangle => compare(b, alg, &g, &triangle_program(), k, s)?,
                Algorithm::LogSp => {
                    let run = logapprox_shortest_paths(&g, k, w_for(n), s)?;
                    let prog = Spanner { delta: run.delta };
                    let pure = run_clique(&g, &prog, s, prog.round_budget(n))?;
                    let same = run.outputs == pure.outputs;
                    let mut spanner_part = run.report.clone();
                    spanner_part.km_rounds -= run.collect_rounds;
                    let bound_ok = within_conversion_bound(&spanner_part, &run.metrics, n);
                    let mut report = run.report;
                    report.success = same && bound_ok;
                    b.push(
                        RunRecord {
                            n,
                            m: g.m(),
                            algorithm: alg.name().to_string(),
                            seed: s,
                            metrics: run.metrics,
                            report,
                        },
                        bound_ok,
                    );
                    same
                }
                Algorithm::Hmis => unreachable!(),
            };
            runs += 1;
            diffs += usize::from(!same);
        }
    }
    Ok(Criterion {
        id: 1,
        name: "simulation fidelity",
        pass: diffs == 0,
        detail: format!("{diffs} differing runs out of {runs}"),
    })
}

fn weighted_connected(n: usize, wmax: u64, seed: u64) -> Result<Graph, HarnessError> {
    let p = (3.0 * (n as f64).ln() / n as f64).min(1.0);
    Ok(generate(&Model::RandomWeighted { p, wmax }, n, seed)?)
}

/// MST weight equality on 100 random weighted graphs with `n ≤ 256`.
pub fn check_mst_weights(seed: u64, tie: TieBreak) -> Result<Check, HarnessError> {
    let mut passed = 0;
    for i in 0..100 {
        let s = sub(seed, 20, i);
        let n = 8 + (s % 249) as usize;
        let wmax = if i % 2 == 0 { 4 } else { 1000 };
        let g = weighted_connected(n, wmax, s)?;
        let prog = Mst { tie };
        let run = run_clique(&g, &prog, s, prog.round_budget(n))?;
        passed += usize::from(checks::mst(&g, &run.outputs));
    }
    Ok(Check {
        name: "mst",
        passed,
        total: 100,
    })
}

fn count<F>(name: &'static str, total: usize, mut f: F) -> Result<Check, HarnessError>
where
    F: FnMut(usize) -> Result<bool, HarnessError>,
{
    let mut passed = 0;
    for i in 0..total {
        passed += usize::from(f(i)?);
    }
    Ok(Check { name, passed, total })
}

/// Criterion 2: outputs against the oracles.
fn correctness(seed: u64) -> Result<Criterion, HarnessError> {
    let d = AlgoConfig::default();
    let mut parts = vec![check_mst_weights(seed, TieBreak::Standard)?];
    parts.push(count("bfs", 50, |i| {
        let s = sub(seed, 21, i);
        let n = 8 + (s % 249) as usize;
        let g = generate(&Model::Gnp { p: (2.0 / n as f64).min(1.0) }, n, s)?;
        let cfg = AlgoConfig {
            source: (s >> 8) as usize % n,
            ..d.clone()
        };
        let run = run_clique(&g, &bfs_program(&cfg), s, 4 * n + 64)?;
        Ok(checks::bfs(&g, cfg.source, &run.outputs))
    })?);
    parts.push(count("bellman_ford", 50, |i| {
        let s = sub(seed, 22, i);
        let n = 8 + (s % 249) as usize;
        let g = generate(
            &Model::RandomWeighted {
                p: (4.0 / n as f64).min(1.0),
                wmax: 50,
            },
            n,
            s,
        )?;
        let cfg = AlgoConfig {
            source: (s >> 8) as usize % n,
            ..d.clone()
        };
        let run = run_clique(&g, &bellman_ford_program(&cfg), s, 4 * n + 64)?;
        Ok(checks::sssp(&g, cfg.source, &run.outputs))
    })?);
    parts.push(count("mis", 100, |i| {
        let s = sub(seed, 23, i);
        let n = 8 + (s % 249) as usize;
        let p = [0.02, 0.05, 0.1, 0.3][i % 4];
        let g = generate(&Model::Gnp { p }, n, s)?;
        let prog = luby_mis_program(&d);
        let run = run_clique(&g, &prog, s, prog.round_budget(n))?;
        Ok(checks::mis(&g, &run.outputs))
    })?);
    parts.push(count("hmis", 50, |i| {
        let s = sub(seed, 24, i);
        let n = 16 + (s % 241) as usize;
        let h = random_uniform_hypergraph(n, n, 3, s)?;
        let run = hmis_kmachine(&h, 2 + i % 7, w_for(n), s)?;
        Ok(checks::hmis(&h, &run.in_set))
    })?);
    parts.push(count("spanner", 40, |i| {
        let s = sub(seed, 25, i / 2);
        let n = 16 + (s % 113) as usize;
        let p = [0.1, 0.2, 0.4, 0.8][(i / 2) % 4];
        let g = generate(&Model::Gnp { p }, n, s)?;
        let delta = if i % 2 == 0 { 2 } else { crate::id_bits(n) as usize };
        let prog = Spanner { delta };
        let run = run_clique(&g, &prog, s, prog.round_budget(n))?;
        Ok(checks::spanner(&g, delta, &SpannerOutput::edge_set(&run.outputs)))
    })?);
    parts.push(count("densest", 100, |i| {
        let s = sub(seed, 26, i);
        let n = 4 + (s % 9) as usize;
        let p = [0.2, 0.4, 0.6, 0.8][i % 4];
        let g = generate(&Model::Gnp { p }, n, s)?;
        let prog = densest_subgraph_program(&d);
        let run = run_clique(&g, &prog, s, prog.round_budget(n))?;
        Ok(checks::densest(&g, d.eps, &run.outputs))
    })?);
    parts.push(count("triangle", 50, |i| {
        let s = sub(seed, 27, i);
        let n = 8 + (s % 57) as usize;
        let p = ((i % 6 + 1) as f64 * 0.5 / n as f64).min(1.0);
        let g = generate(&Model::Gnp { p }, n, s)?;
        let prog = triangle_program();
        let run = run_clique(&g, &prog, s, prog.round_budget(n))?;
        Ok(checks::triangle(&g, &run.outputs))
    })?);
    for (name, kind, tag) in [
        ("stverify", GadgetKind::StVerify, 28),
        ("conn", GadgetKind::Conn, 29),
    ] {
        parts.push(count(name, 100, |i| {
            let s = sub(seed, tag, i);
            let spec = random_gadget(kind, 1 + (s % 40) as usize, s);
            let g = generate_gadget(&spec)?;
            let n = g.n();
            Ok(if kind == GadgetKind::StVerify {
                let all: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
                let prog = st_verify_program(all.iter().copied());
                let run = run_clique(&g, &prog, s, prog.round_budget(n))?;
                checks::st_verify(&g, &all, &run.outputs)
            } else {
                let run = run_clique(&g, &conn_program(), s, conn_program().round_budget(n))?;
                checks::conn(&g, &run.outputs)
            })
        })?);
    }
    Ok(Criterion {
        id: 2,
        name: "correctness vs oracles",
        pass: parts.iter().all(Check::ok),
        detail: parts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
    })
}

/// Criterion 3: vertex and link loads under random vertex partitions.
fn mapping(seed: u64) -> Result<Criterion, HarnessError> {
    let n = 2048;
    let (mut trials, mut failures) = (0, 0);
    let (mut worst_v, mut worst_e): (f64, f64) = (0.0, 0.0);
    for i in 0..50 {
        let s = sub(seed, 3, i);
        let g = generate(&Model::Gnp { p: 0.1 }, n, s)?;
        for k in [4, 8, 16] {
            let part = random_vertex_partition(&g, k, s)?;
            let (verts, edges) = check_mapping_bounds(&g, &part);
            let vb = 4.0 * n as f64 / k as f64;
            let kf = k as f64;
            let eb = 8.0 * lg(n) * (g.m() as f64 / (kf * kf) + g.max_degree() as f64 / kf);
            worst_v = worst_v.max(verts as f64 / vb);
            worst_e = worst_e.max(edges as f64 / eb);
            trials += 1;
            failures += usize::from(verts as f64 > vb || edges as f64 > eb);
        }
    }
    Ok(Criterion {
        id: 3,
        name: "mapping bounds",
        pass: failures == 0,
        detail: format!(
            "{failures} violations in {trials} trials; worst vertex ratio {worst_v:.4}, worst link ratio {worst_e:.4}"
        ),
    })
}

const SWEEP_K: [usize; 5] = [2, 4, 8, 16, 32];

fn median_at_k(rows: &[RunRecord], k: usize) -> f64 {
    let mut v: Vec<f64> = rows
        .iter()
        .filter(|r| r.report.k == k)
        .map(|r| r.report.km_rounds as f64)
        .collect();
    median(&mut v)
}

/// Criteria 5 and 6: MST and PageRank sweeps over `k`.
fn table_scaling(b: &mut Battery) -> Result<(Criterion, Criterion), HarnessError> {
    let n = 4096;
    let model = Model::Gnp { p: 0.02 };
    let seeds: Vec<u64> = (0..5).map(|i| sub(b.seed, 5, i)).collect();
    let mst_cfg = ExperimentConfig::new(
        Algorithm::Mst,
        GraphSource::Model(model.clone()),
        n,
        SWEEP_K.to_vec(),
        seeds.clone(),
    );
    let pr_cfg = ExperimentConfig {
        algorithm: Algorithm::PageRank,
        ..mst_cfg.clone()
    };
    let mut slow_cfg = pr_cfg.clone();
    slow_cfg.params.gamma = 0.075;
    slow_cfg.k = vec![8];
    let (mut mst_rows, mut pr_rows, mut slow_rows) = (Vec::new(), Vec::new(), Vec::new());
    for &s in &seeds {
        let inst = Instance::Graph(generate(&model, n, s)?);
        mst_rows.extend(run_on_instance(&mst_cfg, &inst, s)?);
        pr_rows.extend(run_on_instance(&pr_cfg, &inst, s)?);
        slow_rows.extend(run_on_instance(&slow_cfg, &inst, s)?);
    }
    let all_valid = |rows: &[RunRecord]| rows.iter().all(|r| r.report.success);
    let mst_fit = fit_scaling(&mst_rows, Sweep::K)?;
    let pr_fit = fit_scaling(&pr_rows, Sweep::K)?;
    let ratio = median_at_k(&slow_rows, 8) / median_at_k(&pr_rows, 8);
    let mst_pass = (-1.3..=-0.7).contains(&mst_fit.slope) && mst_fit.r2 >= 0.9 && all_valid(&mst_rows);
    let pr_pass = (-1.3..=-0.7).contains(&pr_fit.slope)
        && ratio >= 1.5
        && all_valid(&pr_rows)
        && all_valid(&slow_rows);
    let medians = |fit: &super::ScalingFit| {
        fit.points
            .iter()
            .map(|(x, y)| format!("k={x}:{y}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mst = Criterion {
        id: 5,
        name: "MST scaling in k",
        pass: mst_pass,
        detail: format!(
            "slope {:.4}, R² {:.4}, valid {}; medians {}",
            mst_fit.slope,
            mst_fit.r2,
            all_valid(&mst_rows),
            medians(&mst_fit)
        ),
    };
    let pr = Criterion {
        id: 6,
        name: "PageRank scaling in k",
        pass: pr_pass,
        detail: format!(
            "slope {:.4}, R² {:.4}, γ-halving ratio at k=8 {:.4}, valid {}; medians {}",
            pr_fit.slope,
            pr_fit.r2,
            ratio,
            all_valid(&pr_rows) && all_valid(&slow_rows),
            medians(&pr_fit)
        ),
    };
    b.push_harness_rows(mst_rows);
    b.push_harness_rows(pr_rows);
    b.push_harness_rows(slow_rows);
    Ok((mst, pr))
}

/// Criterion 7: spanning trees on ST_LOWER gadgets grow linearly in `n`.
fn lower_bound_direction(b: &mut Battery) -> Result<Criterion, HarnessError> {
    let cfg = ExperimentConfig::new(
        Algorithm::Mst,
        GraphSource::Gadget(GadgetKind::StLower),
        0,
        vec![8],
        Vec::new(),
    );
    let mut rows = Vec::new();
    for bsize in [512, 1024, 2048, 4096] {
        for i in 0..5 {
            let s = sub(b.seed, 7, bsize * 10 + i);
            let g = generate_gadget(&random_admissible(bsize, s))?;
            rows.extend(run_on_instance(&cfg, &Instance::Graph(g), s)?);
        }
    }
    let fit = fit_scaling(&rows, Sweep::N)?;
    let valid = rows.iter().all(|r| r.report.success);
    let pass = (0.7..=1.3).contains(&fit.slope) && valid;
    let detail = format!(
        "slope {:.4}, R² {:.4}, valid {valid}; medians {}",
        fit.slope,
        fit.r2,
        fit.points
            .iter()
            .map(|(x, y)| format!("n={x}:{y}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    b.push_harness_rows(rows);
    Ok(Criterion {
        id: 7,
        name: "lower-bound direction",
        pass,
        detail,
    })
}

/// Criterion 8: Luby phases within `10·log₂ n`.
fn mis_phases(seed: u64) -> Result<Criterion, HarnessError> {
    let n = 256;
    let limit = (10.0 * lg(n)) as usize;
    let prog = luby_mis_program(&AlgoConfig::default());
    let mut within = 0;
    let mut worst = 0;
    for i in 0..100 {
        let s = sub(seed, 8, i);
        let g = generate(&Model::Gnp { p: 0.1 }, n, s)?;
        let run = run_clique(&g, &prog, s, prog.round_budget(n))?;
        let failed = run.outputs.iter().any(|o| o.failed);
        let phases = run.outputs.iter().map(|o| o.phase).max().unwrap_or(0);
        worst = worst.max(phases);
        within += usize::from(!failed && phases <= limit && checks::mis(&g, &run.outputs));
    }
    Ok(Criterion {
        id: 8,
        name: "Luby MIS phases",
        pass: within >= 99,
        detail: format!("{within}/100 valid runs within {limit} phases; worst {worst}"),
    })
}

/// Criterion 9: PageRank against power iteration.
fn pagerank_accuracy(seed: u64) -> Result<Criterion, HarnessError> {
    let n = 64;
    let cfg = AlgoConfig {
        gamma: 0.15,
        token_factor: 100.0,
        ..AlgoConfig::default()
    };
    let prog = pagerank_program(&cfg, n);
    let (mut ok, mut worst): (usize, f64) = (0, 0.0);
    for i in 0..20 {
        let s = sub(seed, 9, i);
        let g = generate(&Model::Gnp { p: 0.2 }, n, s)?;
        let run = run_clique(&g, &prog, s, prog.round_budget(n))?;
        let l1 = checks::pagerank_l1(&g, cfg.gamma, &run.outputs);
        worst = worst.max(l1);
        ok += usize::from(l1 <= 0.1 && checks::pagerank_sum(&g, prog.total_tokens(), &run.outputs));
    }
    Ok(Criterion {
        id: 9,
        name: "PageRank accuracy",
        pass: ok == 20,
        detail: format!(
            "{ok}/20 instances pass; worst L1 {worst:.4}; {} tokens per node",
            prog.tokens
        ),
    })
}

/// Criterion 10: HMIS rounds within `16·log²n·(n/k + k)`.
fn hmis_rounds(b: &mut Battery) -> Result<Criterion, HarnessError> {
    let n = 1024;
    let (mut ok, mut runs, mut worst): (usize, usize, f64) = (0, 0, 0.0);
    for i in 0..10 {
        let s = sub(b.seed, 10, i);
        let h = random_uniform_hypergraph(n, n, 3, s)?;
        for k in [4, 8, 16] {
            let run = hmis_kmachine(&h, k, w_for(n), s)?;
            let bound = checks::hmis_round_bound(n, k);
            let valid = checks::hmis(&h, &run.in_set);
            let within = run.report.km_rounds as f64 <= bound;
            worst = worst.max(run.report.km_rounds as f64 / bound);
            runs += 1;
            ok += usize::from(valid && within);
            let mut report = run.report;
            report.success = valid && within;
            b.push(
                RunRecord {
                    n,
                    m: h.hyperedges().len(),
                    algorithm: Algorithm::Hmis.name().to_string(),
                    seed: s,
                    metrics: Default::default(),
                    report,
                },
                true,
            );
        }
    }
    Ok(Criterion {
        id: 10,
        name: "HMIS round bound",
        pass: ok == runs,
        detail: format!("{ok}/{runs} valid runs within the bound; worst ratio {worst:.6}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_tie_break_is_caught() {
        let good = check_mst_weights(3, TieBreak::Standard).unwrap();
        let bad = check_mst_weights(3, TieBreak::IdsOnly).unwrap();
        assert!(good.ok());
        assert!(!bad.ok());
    }

    #[test]
    fn sub_seeds_differ() {
        assert_ne!(sub(1, 1, 0), sub(1, 1, 1));
        assert_ne!(sub(1, 1, 0), sub(1, 2, 0));
    }
}
