//! Maximal independent sets of hypergraphs, directly on `k` machines.
//!
//! Machines take turns in id order. Machine `i` fixes the status of each of
//! its nodes in ascending id: the node enters unless some hyperedge would
//! then lie entirely inside the set, given all statuses announced so far.
//! It then disseminates its `(id, status)` pairs `k − 1` at a time, one per
//! link, and each receiver forwards its pair to the remaining machines in
//! the next step. Forwarding overlaps with the next batch, so a phase of
//! `b` batches takes `b + 1` steps (`b` when `k = 2`), each costing
//! `⌈(⌈log₂ n⌉ + 1)/W⌉` rounds.

use crate::graph::Hypergraph;
use crate::kmachine::{random_partition_of, Mode, Partition, PartitionError, SimReport};

#[derive(Debug, Clone)]
pub struct HmisRun {
    pub in_set: Vec<bool>,
    pub report: SimReport,
    pub partition: Partition,
}

pub fn hmis_kmachine(h: &Hypergraph, k: usize, w: u64, seed: u64) -> Result<HmisRun, PartitionError> {
    let n = h.n();
    let partition = random_partition_of(n, k, seed)?;
    let mut report = SimReport::empty(k, w.max(1), Mode::Direct);
    let pair_bits = crate::id_bits(n) as u64 + 1;

    let mut decided = vec![false; n];
    let mut in_set = vec![false; n];
    let mut load = vec![0u64; k * k];
    for i in 0..k {
        let hosted = partition.hosted(i);
        for &v in &hosted {
            let blocked = h.incident(v).iter().any(|&e| {
                h.hyperedges()[e]
                    .iter()
                    .all(|&u| u == v || (decided[u] && in_set[u]))
            });
            in_set[v] = !blocked;
            decided[v] = true;
        }
        if k == 1 {
            continue;
        }
        // Receivers of the previous batch, which forward in the current step.
        let mut forwarding: Vec<usize> = Vec::new();
        let receivers: Vec<usize> = (0..k).filter(|&q| q != i).collect();
        for batch in hosted.chunks(k - 1) {
            load.fill(0);
            for &q in &forwarding {
                add_forward(&mut load, k, i, q, pair_bits);
            }
            forwarding.clear();
            for (&q, _) in receivers.iter().zip(batch) {
                load[i * k + q] += pair_bits;
                forwarding.push(q);
            }
            report.charge_round(&load);
        }
        if k > 2 && !forwarding.is_empty() {
            load.fill(0);
            for &q in &forwarding {
                add_forward(&mut load, k, i, q, pair_bits);
            }
            report.charge_round(&load);
        }
    }
    Ok(HmisRun {
        in_set,
        report,
        partition,
    })
}

fn add_forward(load: &mut [u64], k: usize, origin: usize, q: usize, bits: u64) {
    for r in (0..k).filter(|&r| r != origin && r != q) {
        load[q * k + r] += bits;
    }
}
