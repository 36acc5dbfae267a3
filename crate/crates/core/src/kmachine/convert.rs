//! Pricing a clique trace in k-machine rounds.
//!
//! Each machine simulates its hosted vertices; only messages crossing
//! machines cost anything. Within one clique round every directed link
//! carries up to `W` bits per k-machine round, so the round costs
//! `⌈max directed-link load / W⌉`.

use thiserror::Error;

use super::partition::Partition;
use super::report::{Mode, SimReport};
use crate::clique::{CliqueMetrics, CliqueTrace, Dest};
use crate::id_bits;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConvertError {
    #[error("bandwidth must be at least 1 bit")]
    ZeroBandwidth,
    #[error("trace covers {trace} vertices but the partition covers {partition}")]
    SizeMismatch { trace: usize, partition: usize },
    #[error("round {round}: node {src} sent a unicast in a broadcast-only trace")]
    UnicastInBroadcastTrace { round: usize, src: usize },
}

/// Header bits on a converted unicast: source and destination ids.
pub fn p2p_header_bits(n: usize) -> u64 {
    2 * id_bits(n) as u64
}

/// Header bits on a deduplicated broadcast copy: the source id.
pub fn bcast_header_bits(n: usize) -> u64 {
    id_bits(n) as u64
}

fn check(trace: &CliqueTrace, part: &Partition, w: u64) -> Result<(), ConvertError> {
    if w == 0 {
        return Err(ConvertError::ZeroBandwidth);
    }
    if trace.n != part.n() {
        return Err(ConvertError::SizeMismatch {
            trace: trace.n,
            partition: part.n(),
        });
    }
    Ok(())
}

/// Point-to-point conversion. Every inter-machine message of `p` bits is
/// charged `p + 2⌈log₂ n⌉` bits on its directed link; a broadcast is
/// charged as `n − 1` unicasts.
pub fn convert_p2p(trace: &CliqueTrace, part: &Partition, w: u64) -> Result<SimReport, ConvertError> {
    check(trace, part, w)?;
    let k = part.k();
    let header = p2p_header_bits(trace.n);
    let hosted: Vec<u64> = part.loads().into_iter().map(|c| c as u64).collect();
    let mut report = SimReport::empty(k, w, Mode::P2p);
    let mut load = vec![0u64; k * k];
    for msgs in &trace.rounds {
        load.fill(0);
        for m in msgs {
            let p = part.home(m.src());
            let bits = m.bits as u64 + header;
            match m.dst {
                Dest::One(d) => {
                    let q = part.home(d as usize);
                    if p != q {
                        load[p * k + q] += bits;
                    }
                }
                Dest::AllOthers => {
                    for q in (0..k).filter(|&q| q != p) {
                        load[p * k + q] += hosted[q] * bits;
                    }
                }
            }
        }
        report.charge_round(&load);
    }
    Ok(report)
}

/// Broadcast conversion. A broadcasting node's machine sends one copy of
/// `payload + ⌈log₂ n⌉` bits over each of its `k − 1` links.
pub fn convert_broadcast(
    trace: &CliqueTrace,
    part: &Partition,
    w: u64,
) -> Result<SimReport, ConvertError> {
    check(trace, part, w)?;
    let k = part.k();
    let header = bcast_header_bits(trace.n);
    let mut report = SimReport::empty(k, w, Mode::Bcast);
    let mut load = vec![0u64; k * k];
    for (i, msgs) in trace.rounds.iter().enumerate() {
        load.fill(0);
        for m in msgs {
            if !m.is_broadcast() {
                return Err(ConvertError::UnicastInBroadcastTrace {
                    round: i + 1,
                    src: m.src(),
                });
            }
            let p = part.home(m.src());
            for q in (0..k).filter(|&q| q != p) {
                load[p * k + q] += m.bits as u64 + header;
            }
        }
        report.charge_round(&load);
    }
    Ok(report)
}

fn log2_sq(n: usize) -> f64 {
    let l = (n as f64).log2();
    l * l
}

/// Explicit-constant form of the point-to-point bound:
/// `16·log²n·(M·3⌈log₂ n⌉/(k²W) + T_C·⌈Δ′·3⌈log₂ n⌉/(kW)⌉ + T_C)`.
pub fn p2p_round_bound(metrics: &CliqueMetrics, n: usize, k: usize, w: u64) -> f64 {
    let msg_bits = 3.0 * id_bits(n) as f64;
    let (k, w) = (k as f64, w as f64);
    let t = metrics.rounds as f64;
    let degree_term = (metrics.comm_degree as f64 * msg_bits / (k * w)).ceil();
    16.0 * log2_sq(n) * (metrics.messages as f64 * msg_bits / (k * k * w) + t * degree_term + t)
}

/// Explicit-constant form of the broadcast bound:
/// `16·log²n·(B·2⌈log₂ n⌉/(kW) + T_C)`.
pub fn bcast_round_bound(metrics: &CliqueMetrics, n: usize, k: usize, w: u64) -> f64 {
    let msg_bits = 2.0 * id_bits(n) as f64;
    16.0 * log2_sq(n)
        * (metrics.broadcasts as f64 * msg_bits / (k as f64 * w as f64) + metrics.rounds as f64)
}

/// Whether `report` respects the bound matching its mode. Direct-mode
/// reports have no conversion bound and always pass.
pub fn within_conversion_bound(report: &SimReport, metrics: &CliqueMetrics, n: usize) -> bool {
    let bound = match report.mode {
        Mode::P2p => p2p_round_bound(metrics, n, report.k, report.w),
        Mode::Bcast => bcast_round_bound(metrics, n, report.k, report.w),
        Mode::Direct => return true,
    };
    report.km_rounds as f64 <= bound
}
