use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use super::HarnessError;
use crate::algorithms::{AlgoConfig, Algorithm};
use crate::graph::{GadgetKind, Model};
use crate::kmachine::Mode;

/// Where the input graph of each seed comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    Model(Model),
    /// A lower-bound gadget with `b` = the configured size.
    Gadget(GadgetKind),
    File(PathBuf),
}

impl FromStr for GraphSource {
    type Err = HarnessError;

    /// A [`Model`] string, `gadget:st_lower`, `gadget:stverify` or
    /// `gadget:conn`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "gadget:st_lower" => GraphSource::Gadget(GadgetKind::StLower),
            "gadget:stverify" => GraphSource::Gadget(GadgetKind::StVerify),
            "gadget:conn" => GraphSource::Gadget(GadgetKind::Conn),
            _ => GraphSource::Model(s.parse()?),
        })
    }
}

/// A validated experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    pub graph: GraphSource,
    /// Vertex count for generators, `b` for gadgets; unused for files.
    pub n: usize,
    /// Sizes for an `n` sweep.
    pub ns: Vec<usize>,
    pub k: Vec<usize>,
    /// Link bandwidth; `⌈log₂ n⌉` when unset.
    pub w: Option<u64>,
    /// Conversion mode; chosen from the algorithm when unset.
    pub mode: Option<Mode>,
    pub seeds: Vec<u64>,
    pub params: AlgoConfig,
    /// Hypergraph size for `hmis` when `rank ≥ 3`; defaults to `n`.
    pub hyperedges: Option<usize>,
    /// `2` runs `hmis` on the graph's edges, larger values on a random
    /// `rank`-uniform hypergraph.
    pub rank: usize,
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    /// A config with defaults for everything but the essentials.
    pub fn new(algorithm: Algorithm, graph: GraphSource, n: usize, k: Vec<usize>, seeds: Vec<u64>) -> Self {
        ExperimentConfig {
            algorithm,
            graph,
            n,
            ns: Vec::new(),
            k,
            w: None,
            mode: None,
            seeds,
            params: AlgoConfig::default(),
            hyperedges: None,
            rank: 2,
            output: None,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode.unwrap_or_else(|| default_mode(self.algorithm))
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        self.params.validate()?;
        let bad = |msg: String| Err(HarnessError::Config(msg));
        if self.seeds.is_empty() {
            return bad("seed list is empty".into());
        }
        if self.k.is_empty() || self.k.contains(&0) {
            return bad("k list must be nonempty and positive".into());
        }
        if self.w == Some(0) {
            return bad("W must be positive".into());
        }
        if self.rank < 2 {
            return bad("rank must be at least 2".into());
        }
        let mode = self.mode();
        let allowed = match self.algorithm {
            Algorithm::Hmis => mode == Mode::Direct,
            Algorithm::LogSp => mode == Mode::Bcast,
            a if a.broadcast_only() => mode != Mode::Direct,
            _ => mode == Mode::P2p,
        };
        if !allowed {
            return bad(format!("mode {mode} is not available for {}", self.algorithm));
        }
        if matches!(self.graph, GraphSource::Model(_)) {
            if let Some(&k) = self.k.iter().find(|&&k| k > self.n) {
                return bad(format!("k = {k} exceeds n = {}", self.n));
            }
        }
        Ok(())
    }
}

pub fn default_mode(algorithm: Algorithm) -> Mode {
    match algorithm {
        Algorithm::Hmis => Mode::Direct,
        a if a.broadcast_only() => Mode::Bcast,
        _ => Mode::P2p,
    }
}

/// The flat JSON configuration document. Every key is optional so that
/// command-line flags can be layered on top with [`ConfigFile::overlay`].
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigFile {
    pub algorithm: Option<String>,
    pub model: Option<String>,
    pub graph_file: Option<PathBuf>,
    pub n: Option<usize>,
    pub ns: Option<Vec<usize>>,
    pub k: Option<Vec<usize>>,
    #[serde(rename = "W")]
    pub w: Option<u64>,
    pub mode: Option<String>,
    pub seeds: Option<Vec<u64>>,
    pub gamma: Option<f64>,
    pub tokens_per_node: Option<usize>,
    pub token_factor: Option<f64>,
    pub eps: Option<f64>,
    pub delta_spanner: Option<usize>,
    pub source: Option<usize>,
    pub mis_max_phases: Option<usize>,
    pub hyperedges: Option<usize>,
    pub rank: Option<usize>,
    pub output: Option<PathBuf>,
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        Self::from_json(&text)
    }

    /// Keys present in `over` replace those in `self`.
    pub fn overlay(self, over: ConfigFile) -> ConfigFile {
        ConfigFile {
            algorithm: over.algorithm.or(self.algorithm),
            model: over.model.or(self.model),
            graph_file: over.graph_file.or(self.graph_file),
            n: over.n.or(self.n),
            ns: over.ns.or(self.ns),
            k: over.k.or(self.k),
            w: over.w.or(self.w),
            mode: over.mode.or(self.mode),
            seeds: over.seeds.or(self.seeds),
            gamma: over.gamma.or(self.gamma),
            tokens_per_node: over.tokens_per_node.or(self.tokens_per_node),
            token_factor: over.token_factor.or(self.token_factor),
            eps: over.eps.or(self.eps),
            delta_spanner: over.delta_spanner.or(self.delta_spanner),
            source: over.source.or(self.source),
            mis_max_phases: over.mis_max_phases.or(self.mis_max_phases),
            hyperedges: over.hyperedges.or(self.hyperedges),
            rank: over.rank.or(self.rank),
            output: over.output.or(self.output),
        }
    }

    pub fn resolve(self) -> Result<ExperimentConfig, HarnessError> {
        let missing = |key: &str| HarnessError::Config(format!("missing key {key:?}"));
        let algorithm: Algorithm = self
            .algorithm
            .as_deref()
            .ok_or_else(|| missing("algorithm"))?
            .parse()
            .map_err(HarnessError::Config)?;
        let graph = match (&self.model, &self.graph_file) {
            (Some(_), Some(_)) => {
                return Err(HarnessError::Config(
                    "model and graph_file are mutually exclusive".into(),
                ))
            }
            (Some(m), None) => m.parse()?,
            (None, Some(p)) => GraphSource::File(p.clone()),
            (None, None) => return Err(missing("model")),
        };
        let n = match (&graph, self.n) {
            (GraphSource::File(_), n) => n.unwrap_or(0),
            (_, Some(n)) => n,
            (_, None) => self
                .ns
                .as_ref()
                .and_then(|ns| ns.first().copied())
                .ok_or_else(|| missing("n"))?,
        };
        let d = AlgoConfig::default();
        let params = AlgoConfig {
            gamma: self.gamma.unwrap_or(d.gamma),
            tokens_per_node: self.tokens_per_node.or(d.tokens_per_node),
            token_factor: self.token_factor.unwrap_or(d.token_factor),
            eps: self.eps.unwrap_or(d.eps),
            delta_spanner: self.delta_spanner.unwrap_or(d.delta_spanner),
            source: self.source.unwrap_or(d.source),
            mis_max_phases: self.mis_max_phases.unwrap_or(d.mis_max_phases),
        };
        let mode = match self.mode.as_deref() {
            Some(m) => Some(m.parse().map_err(HarnessError::Config)?),
            None => None,
        };
        let cfg = ExperimentConfig {
            algorithm,
            graph,
            n,
            ns: self.ns.unwrap_or_default(),
            k: self.k.ok_or_else(|| missing("k"))?,
            w: self.w,
            mode,
            seeds: self.seeds.unwrap_or_else(|| vec![0]),
            params,
            hyperedges: self.hyperedges,
            rank: self.rank.unwrap_or(2),
            output: self.output,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_document_resolves() {
        let cfg = ConfigFile::from_json(
            r#"{"algorithm": "mst", "model": "cycle", "n": 64, "k": [2, 4], "seeds": [0, 1], "W": 8}"#,
        )
        .unwrap()
        .resolve()
        .unwrap();
        assert_eq!(cfg.algorithm, Algorithm::Mst);
        assert_eq!(cfg.graph, GraphSource::Model(Model::Cycle));
        assert_eq!(cfg.w, Some(8));
        assert_eq!(cfg.mode(), Mode::Bcast);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(ConfigFile::from_json(r#"{"algorithm": "mst", "colour": 1}"#).is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = ConfigFile::from_json(r#"{"algorithm": "bfs", "model": "path", "n": 10, "k": [2]}"#).unwrap();
        let flags = ConfigFile {
            k: Some(vec![5]),
            ..ConfigFile::default()
        };
        let cfg = file.overlay(flags).resolve().unwrap();
        assert_eq!(cfg.k, vec![5]);
        assert_eq!(cfg.n, 10);
    }

    #[test]
    fn zero_gamma_is_rejected() {
        let err = ConfigFile::from_json(
            r#"{"algorithm": "pagerank", "model": "cycle", "n": 8, "k": [2], "gamma": 0.0}"#,
        )
        .unwrap()
        .resolve();
        assert!(matches!(err, Err(HarnessError::Algo(_))));
    }

    #[test]
    fn invalid_combinations() {
        let base = |extra: &str| {
            let text = format!(r#"{{"algorithm": "pagerank", "model": "cycle", "n": 8, {extra}}}"#);
            ConfigFile::from_json(&text).unwrap().resolve()
        };
        assert!(base(r#""k": [16]"#).is_err());
        assert!(base(r#""k": [2], "mode": "bcast""#).is_err());
        assert!(base(r#""k": [2], "seeds": []"#).is_err());
        assert!(base(r#""k": []"#).is_err());
        assert!(base(r#""k": [2]"#).is_ok());
    }
}
