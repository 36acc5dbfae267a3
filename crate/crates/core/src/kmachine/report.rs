use std::fmt;
use std::str::FromStr;

/// How a clique trace is priced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Point-to-point conversion; broadcasts are expanded to unicasts.
    P2p,
    /// Broadcast conversion with per-machine deduplication.
    Bcast,
    /// A native k-machine algorithm that does not go through conversion.
    Direct,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::P2p => "P2P",
            Mode::Bcast => "BCAST",
            Mode::Direct => "DIRECT",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "P2P" => Ok(Mode::P2p),
            "BCAST" | "BROADCAST" => Ok(Mode::Bcast),
            "DIRECT" => Ok(Mode::Direct),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

/// k-machine cost of an execution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub k: usize,
    /// Bandwidth per link per direction per round.
    pub w: u64,
    pub mode: Mode,
    /// Total k-machine rounds.
    pub km_rounds: u64,
    /// k-machine rounds spent on each clique round (index = clique round − 1).
    pub round_costs: Vec<u64>,
    /// Symmetric ledger: bits carried by link `{p, q}` in both directions.
    /// The diagonal stays zero.
    pub per_link_bits: Vec<Vec<u64>>,
    /// Bits sent plus received by each machine.
    pub per_machine_bits: Vec<u64>,
    /// Rounds under the alternative model where each machine may move at
    /// most `k·W` bits per round in total.
    pub machine_budget_rounds: u64,
    pub success: bool,
}

impl SimReport {
    pub(crate) fn empty(k: usize, w: u64, mode: Mode) -> Self {
        SimReport {
            k,
            w,
            mode,
            km_rounds: 0,
            round_costs: Vec::new(),
            per_link_bits: vec![vec![0; k]; k],
            per_machine_bits: vec![0; k],
            machine_budget_rounds: 0,
            success: true,
        }
    }

    /// Sum over unordered links.
    pub fn total_link_bits(&self) -> u64 {
        (0..self.k)
            .flat_map(|p| (p + 1..self.k).map(move |q| (p, q)))
            .map(|(p, q)| self.per_link_bits[p][q])
            .sum()
    }

    pub fn max_link_bits(&self) -> u64 {
        self.per_link_bits
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn max_machine_bits(&self) -> u64 {
        self.per_machine_bits.iter().copied().max().unwrap_or(0)
    }

    /// Folds one clique round's directed link loads (`load[p * k + q]` is
    /// `p → q`) into the report.
    pub(crate) fn charge_round(&mut self, load: &[u64]) {
        let k = self.k;
        let mut max_link = 0;
        let mut machine = vec![0u64; k];
        for p in 0..k {
            for q in 0..k {
                let bits = load[p * k + q];
                if bits == 0 {
                    continue;
                }
                debug_assert_ne!(p, q, "intra-machine traffic is free");
                max_link = max_link.max(bits);
                self.per_link_bits[p][q] += bits;
                self.per_link_bits[q][p] += bits;
                machine[p] += bits;
                machine[q] += bits;
            }
        }
        let cost = max_link.div_ceil(self.w);
        self.round_costs.push(cost);
        self.km_rounds += cost;
        let budget = k as u64 * self.w;
        let max_machine = machine.iter().copied().max().unwrap_or(0);
        self.machine_budget_rounds += max_machine.div_ceil(budget);
        for (total, bits) in self.per_machine_bits.iter_mut().zip(machine) {
            *total += bits;
        }
    }
}

/// Header of the per-run CSV.
pub const CSV_HEADER: &str =
    "n,m,k,W,mode,algorithm,seed,T_C,M,B,Dprime,km_rounds,max_link_bits,max_machine_bits,success";

/// One CSV row: a run's identity, its clique metrics and its k-machine cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunRecord {
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    pub seed: u64,
    pub metrics: crate::clique::CliqueMetrics,
    pub report: SimReport,
}

impl RunRecord {
    pub fn csv_row(&self) -> String {
        let r = &self.report;
        let c = &self.metrics;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            r.k,
            r.w,
            r.mode,
            self.algorithm,
            self.seed,
            c.rounds,
            c.messages,
            c.broadcasts,
            c.comm_degree,
            r.km_rounds,
            r.max_link_bits(),
            r.max_machine_bits(),
            r.success
        )
    }
}
