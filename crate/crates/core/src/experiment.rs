//! Parameter sweeps over construction families and log-log exponent fits.

use std::fmt;
use std::fs::File;
use std::io;
use std::path::PathBuf;
use std::time::Instant;

use crate::construct::{ConstructionName, ConstructionSpec};
use crate::counting::{count_pairs_at_any, distinct_count_any, AnyDistance};
use crate::error::{Error, Result};
use crate::incidence::dyadic_classify;
use crate::point::{AnyPointSet, DualDistance, Plane, SquaredDistance};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statistic {
    /// Pairs at `[1, 0]` in 𝔻² or at squared distance 1 in ℝ².
    UnitCount,
    RepeatedCount(AnyDistance),
    DistinctCount {
        include_zero: bool,
    },
    /// Multiplicity in 𝔻², minimal multiplicity in 𝕎².
    Multiplicity,
    /// Number of populated dyadic cells.
    DyadicTable,
}

impl Statistic {
    pub fn name(&self) -> &'static str {
        match self {
            Statistic::UnitCount => "unit-count",
            Statistic::RepeatedCount(_) => "repeated-count",
            Statistic::DistinctCount { .. } => "distinct-count",
            Statistic::Multiplicity => "multiplicity",
            Statistic::DyadicTable => "dyadic-table",
        }
    }

    fn check_plane(&self, plane: Plane) -> Result<()> {
        let ok = match self {
            Statistic::UnitCount => plane != Plane::Double,
            Statistic::RepeatedCount(d) => d.plane() == plane,
            Statistic::DistinctCount { .. } => true,
            Statistic::Multiplicity => plane != Plane::Real,
            Statistic::DyadicTable => plane == Plane::Dual,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidStatistic {
                statistic: self.name().to_string(),
                plane,
            })
        }
    }

    fn evaluate(&self, set: &AnyPointSet) -> Result<u64> {
        match self {
            Statistic::UnitCount => {
                let unit = match set.plane() {
                    Plane::Dual => AnyDistance::Dual(DualDistance::unit()),
                    _ => AnyDistance::Real(SquaredDistance(Rational::one())),
                };
                count_pairs_at_any(set, &unit)
            }
            Statistic::RepeatedCount(d) => count_pairs_at_any(set, d),
            Statistic::DistinctCount { include_zero } => {
                distinct_count_any(set, *include_zero).map(|n| n as u64)
            }
            Statistic::Multiplicity => {
                let report = set.analyze()?;
                Ok(report
                    .multiplicity
                    .or(report.minimal_multiplicity)
                    .unwrap_or(1) as u64)
            }
            Statistic::DyadicTable => Ok(dyadic_classify(set.as_dual()?).len() as u64),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub construction: ConstructionName,
    /// One integer parameter tuple per row.
    pub schedule: Vec<Vec<i64>>,
    pub statistic: Statistic,
    /// Where to write the CSV, if anywhere.
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.schedule.is_empty() {
            return Err(Error::InvalidParameter(
                "experiment schedule is empty".into(),
            ));
        }
        let (_, inputs) = self.construction.signature();
        if inputs > 0 {
            return Err(Error::InvalidParameter(format!(
                "{} needs input point sets and cannot be swept",
                self.construction
            )));
        }
        self.statistic.check_plane(self.construction.plane())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub n: usize,
    pub value: u64,
    /// Wall time for generation plus evaluation; informational only.
    pub seconds: f64,
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    cfg.validate()?;
    let mut rows = Vec::with_capacity(cfg.schedule.len());
    for params in &cfg.schedule {
        let start = Instant::now();
        let set = ConstructionSpec::new(cfg.construction, params.clone()).generate()?;
        let value = cfg.statistic.evaluate(&set)?;
        rows.push(ExperimentRow {
            n: set.len(),
            value,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    if let Some(path) = &cfg.output {
        write_rows_csv(&rows, File::create(path)?)?;
    }
    Ok(rows)
}

/// CSV with header `n,value,seconds`.
pub fn write_rows_csv<W: io::Write>(rows: &[ExperimentRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "value", "seconds"])?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.value.to_string(),
            format!("{:.6}", r.seconds),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Least-squares slope of `ln(value)` against `ln(n)`.
pub fn fit_exponent(rows: &[ExperimentRow]) -> Result<f64> {
    if rows.len() < 3 {
        return Err(Error::Fit(format!(
            "need at least 3 rows, got {}",
            rows.len()
        )));
    }
    if let Some(r) = rows.iter().find(|r| r.value == 0 || r.n == 0) {
        return Err(Error::Fit(format!(
            "nonpositive entry at n={} value={}",
            r.n, r.value
        )));
    }
    let xs: Vec<f64> = rows.iter().map(|r| (r.n as f64).ln()).collect();
    let ys: Vec<f64> = rows.iter().map(|r| (r.value as f64).ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Fit("all rows have the same n".into()));
    }
    Ok(sxy / sxx)
}
