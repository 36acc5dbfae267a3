use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::kmachine::RunRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    K,
    N,
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sweep::K => "k",
            Sweep::N => "n",
        })
    }
}

impl FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "k" => Ok(Sweep::K),
            "n" => Ok(Sweep::N),
            _ => Err(format!("unknown sweep variable {s:?}, expected k or n")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FitError {
    #[error("a fit needs at least 3 distinct swept values, got {0}")]
    TooFewPoints(usize),
    #[error("cannot take log₂ of ({x}, {y})")]
    NonPositive { x: f64, y: f64 },
}

/// Least-squares line through `(log₂ x, log₂ y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingFit {
    pub sweep: Sweep,
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    /// `(x, median km_rounds)` in ascending `x`.
    pub points: Vec<(f64, f64)>,
    /// `log₂ y − fitted`, per point.
    pub residuals: Vec<f64>,
}

impl fmt::Display for ScalingFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sweep={} slope={:.4} intercept={:.4} r2={:.4}",
            self.sweep, self.slope, self.intercept, self.r2
        )
    }
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let h = values.len() / 2;
    if values.len() % 2 == 1 {
        values[h]
    } else {
        (values[h - 1] + values[h]) / 2.0
    }
}

/// Groups rows by the swept variable, takes the median `km_rounds` of each
/// group and fits a power law.
pub fn fit_scaling(rows: &[RunRecord], sweep: Sweep) -> Result<ScalingFit, FitError> {
    let mut groups: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for r in rows {
        let x = match sweep {
            Sweep::K => r.report.k,
            Sweep::N => r.n,
        };
        groups.entry(x).or_default().push(r.report.km_rounds as f64);
    }
    let points: Vec<(f64, f64)> = groups
        .into_iter()
        .map(|(x, mut ys)| (x as f64, median(&mut ys)))
        .collect();
    fit_points(&points, sweep)
}

pub fn fit_points(points: &[(f64, f64)], sweep: Sweep) -> Result<ScalingFit, FitError> {
    if points.len() < 3 {
        return Err(FitError::TooFewPoints(points.len()));
    }
    if let Some(&(x, y)) = points.iter().find(|(x, y)| *x <= 0.0 || *y <= 0.0) {
        return Err(FitError::NonPositive { x, y });
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.log2(), y.log2())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals: Vec<f64> = logs.iter().map(|p| p.1 - (intercept + slope * p.0)).collect();
    let ss_res: f64 = residuals.iter().map(|r| r * r).sum();
    let ss_tot: f64 = logs.iter().map(|p| (p.1 - my).powi(2)).sum();
    let r2 = if ss_tot <= f64::EPSILON * len {
        1.0
    } else {
        1.0 - ss_res / ss_tot
    };
    Ok(ScalingFit {
        sweep,
        slope,
        intercept,
        r2,
        points: points.to_vec(),
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::CliqueMetrics;
    use crate::kmachine::{Mode, SimReport};

    fn row(k: usize, seed: u64, rounds: u64) -> RunRecord {
        let mut report = SimReport::empty(k, 8, Mode::Bcast);
        report.km_rounds = rounds;
        RunRecord {
            n: 100,
            m: 0,
            algorithm: "mst".into(),
            seed,
            metrics: CliqueMetrics::default(),
            report,
        }
    }

    #[test]
    fn exact_inverse_law() {
        let rows: Vec<_> = [1, 2, 4, 8, 10].iter().map(|&k| row(k, 0, 1000 / k as u64)).collect();
        let fit = fit_scaling(&rows, Sweep::K).unwrap();
        assert!((fit.slope + 1.0).abs() < 1e-12);
        assert!((fit.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_rounds() {
        let rows: Vec<_> = [2, 4, 8].iter().map(|&k| row(k, 0, 77)).collect();
        let fit = fit_scaling(&rows, Sweep::K).unwrap();
        assert_eq!(fit.slope, 0.0);
        assert_eq!(fit.r2, 1.0);
    }

    #[test]
    fn medians_suppress_outliers() {
        let mut rows = Vec::new();
        for &k in &[2u64, 4, 8, 16] {
            for seed in 0..5 {
                let rounds = if seed == 0 { 1_000_000 } else { 800 / k };
                rows.push(row(k as usize, seed, rounds));
            }
        }
        let fit = fit_scaling(&rows, Sweep::K).unwrap();
        assert!((fit.slope + 1.0).abs() < 1e-12);
    }

    #[test]
    fn needs_three_points() {
        let rows = vec![row(2, 0, 5), row(4, 0, 3), row(4, 1, 3)];
        assert_eq!(fit_scaling(&rows, Sweep::K), Err(FitError::TooFewPoints(2)));
        assert!(fit_scaling(&[row(2, 0, 0), row(3, 0, 1), row(4, 0, 1)], Sweep::K).is_err());
    }

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
