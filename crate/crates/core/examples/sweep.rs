//! Runs an experiment over several k through the harness, writes the CSV
//! and fits a power law to the median rounds.

use kmachine::algorithms::Algorithm;
use kmachine::graph::Model;
use kmachine::harness::{fit_scaling, run_experiment, to_csv, ExperimentConfig, GraphSource, Sweep};

fn main() {
    let cfg = ExperimentConfig::new(
        Algorithm::Mst,
        GraphSource::Model(Model::RandomWeighted { p: 0.1, wmax: 1000 }),
        256,
        vec![2, 4, 8, 16, 32],
        (0..3).collect(),
    );
    let rows = run_experiment(&cfg).expect("experiment");
    print!("{}", to_csv(&rows));
    let fit = fit_scaling(&rows, Sweep::K).expect("fit");
    println!("{fit}");
}
