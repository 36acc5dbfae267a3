//! The k-machine model: random vertex partitioning and the conversion of
//! clique executions into k-machine rounds.

mod convert;
mod partition;
mod report;

pub use convert::{
    bcast_header_bits, bcast_round_bound, convert_broadcast, convert_p2p, p2p_header_bits,
    p2p_round_bound, within_conversion_bound, ConvertError,
};
pub use partition::{
    check_mapping_bounds, random_partition_of, random_vertex_partition, Partition, PartitionError,
};
pub use report::{Mode, RunRecord, SimReport, CSV_HEADER};

use thiserror::Error;

use crate::clique::{run_clique, CliqueError, CliqueMetrics, CliqueTrace, NodeProgram};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KmError {
    #[error(transparent)]
    Clique(#[from] CliqueError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Convert(#[from] ConvertError),
    #[error("clique programs are priced in P2P or BCAST mode, not DIRECT")]
    DirectMode,
}

/// A clique execution priced on `k` machines.
#[derive(Debug, Clone)]
pub struct KmRun<O> {
    pub outputs: Vec<O>,
    pub report: SimReport,
    pub metrics: CliqueMetrics,
    pub trace: CliqueTrace,
    pub partition: Partition,
}

/// Prices an existing trace under `mode`.
pub fn convert(
    trace: &CliqueTrace,
    part: &Partition,
    w: u64,
    mode: Mode,
) -> Result<SimReport, KmError> {
    match mode {
        Mode::P2p => Ok(convert_p2p(trace, part, w)?),
        Mode::Bcast => Ok(convert_broadcast(trace, part, w)?),
        Mode::Direct => Err(KmError::DirectMode),
    }
}

/// Partitions `g` over `k` machines, runs `prog` in the clique engine and
/// converts the trace. The outputs are exactly those of [`run_clique`] with
/// the same seed: the partition only affects the cost.
pub fn run_on_kmachines<P: NodeProgram>(
    g: &Graph,
    prog: &P,
    k: usize,
    w: u64,
    mode: Mode,
    seed: u64,
) -> Result<KmRun<P::Output>, KmError> {
    if mode == Mode::Direct {
        return Err(KmError::DirectMode);
    }
    let partition = random_vertex_partition(g, k, seed)?;
    let run = run_clique(g, prog, seed, prog.round_budget(g.n()))?;
    let report = convert(&run.trace, &partition, w, mode)?;
    Ok(KmRun {
        outputs: run.outputs,
        report,
        metrics: run.metrics,
        trace: run.trace,
        partition,
    })
}
