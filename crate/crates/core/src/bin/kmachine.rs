use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kmachine::graph::{generate, serialize, Model};
use kmachine::harness::{
    fit_scaling, run_experiment, to_csv, validate_all, ConfigFile, HarnessError,
    Sweep,
};
use kmachine::kmachine::RunRecord;

#[derive(Parser)]
#[command(name = "kmachine", version, about = "k-machine model simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment and emit its CSV rows.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        flags: Overrides,
    },
    /// Run an experiment over a range of k or n and fit a power law.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "k")]
        sweep: Sweep,
        #[command(flatten)]
        flags: Overrides,
    },
    /// Run the validation battery.
    Validate {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a graph as an edge list.
    Gen {
        #[arg(long)]
        model: Model,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Flags that replace the corresponding config keys.
#[derive(Args)]
struct Overrides {
    #[arg(long)]
    algorithm: Option<String>,
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    graph_file: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    ns: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    k: Option<Vec<usize>>,
    #[arg(long = "W")]
    w: Option<u64>,
    #[arg(long)]
    mode: Option<String>,
    #[arg(long, value_delimiter = ',')]
    seeds: Option<Vec<u64>>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    tokens_per_node: Option<usize>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    delta_spanner: Option<usize>,
    #[arg(long)]
    source: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

impl Overrides {
    fn into_config(self) -> ConfigFile {
        ConfigFile {
            algorithm: self.algorithm,
            model: self.model,
            graph_file: self.graph_file,
            n: self.n,
            ns: self.ns,
            k: self.k,
            w: self.w,
            mode: self.mode,
            seeds: self.seeds,
            gamma: self.gamma,
            tokens_per_node: self.tokens_per_node,
            eps: self.eps,
            delta_spanner: self.delta_spanner,
            source: self.source,
            output: self.output,
            ..ConfigFile::default()
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), HarnessError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| HarnessError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn all_succeeded(rows: &[RunRecord]) -> bool {
    rows.iter().all(|r| r.report.success)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.command {
        Command::Run { config, flags } => {
            let cfg = ConfigFile::load(&config)?.overlay(flags.into_config()).resolve()?;
            let rows = run_experiment(&cfg)?;
            write_out(cfg.output.as_deref(), &to_csv(&rows))?;
            Ok(all_succeeded(&rows))
        }
        Command::Sweep { config, sweep, flags } => {
            let base = ConfigFile::load(&config)?.overlay(flags.into_config()).resolve()?;
            let rows = match sweep {
                Sweep::K => run_experiment(&base)?,
                Sweep::N => {
                    if base.ns.is_empty() {
                        return Err(HarnessError::Config("an n sweep needs the ns key".into()));
                    }
                    let mut rows = Vec::new();
                    for &n in &base.ns {
                        let mut cfg = base.clone();
                        cfg.n = n;
                        rows.extend(run_experiment(&cfg)?);
                    }
                    rows
                }
            };
            write_out(base.output.as_deref(), &to_csv(&rows))?;
            let fit = fit_scaling(&rows, sweep)?;
            eprintln!("{fit}");
            for ((x, y), r) in fit.points.iter().zip(&fit.residuals) {
                eprintln!("  {sweep}={x} median_km_rounds={y} residual={r:.4}");
            }
            Ok(all_succeeded(&rows))
        }
        Command::Validate { seed, out } => {
            let report = validate_all(seed)?;
            for c in &report.criteria {
                eprintln!("{c}");
            }
            write_out(out.as_deref(), &report.csv())?;
            Ok(report.all_pass())
        }
        Command::Gen { model, n, seed, out } => {
            let g = generate(&model, n, seed)?;
            write_out(Some(&out), &serialize(&g))?;
            Ok(true)
        }
    }
}
