//! The warp-speed bootstrap power engine.
//!
//! One Monte Carlo replication draws a sample from the alternative, computes
//! every requested statistic, then draws a single bootstrap sample from the
//! fitted null `P(λ̂)` (refitting the mean on the bootstrap sample) and
//! computes the statistics again. After M replications the per-statistic
//! critical value is the `⌊M(1−α)⌋`-th order statistic of the pooled
//! bootstrap values, and the empirical power is the percentage of
//! alternative-sample statistics strictly above it.

use super::{collect_indexed, critical_value, sample_null};
use crate::distributions::AlternativeSpec;
use crate::empirical::mle_lambda;
use crate::error::{Error, Result};
use crate::rng::RngHandle;
use crate::statistics::{compute, FitContext, StatisticId, DEFAULT_LAPLACE_A};

/// Grid definition for a power study.
#[derive(Debug, Clone)]
pub struct PowerStudyConfig {
    pub alternatives: Vec<AlternativeSpec>,
    pub sample_sizes: Vec<u32>,
    pub statistics: Vec<StatisticId>,
    /// Monte Carlo replications per (alternative, n) cell.
    pub replications: u64,
    pub alpha: f64,
    pub seed: u64,
}

impl PowerStudyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.alternatives.is_empty() {
            return Err(Error::InvalidConfig("no alternatives listed".into()));
        }
        if self.sample_sizes.is_empty() || self.sample_sizes.contains(&0) {
            return Err(Error::InvalidConfig(
                "sample_sizes must be non-empty and positive".into(),
            ));
        }
        if self.statistics.is_empty() {
            return Err(Error::InvalidConfig("no statistics listed".into()));
        }
        if self.replications < 100 {
            return Err(Error::InvalidConfig(format!(
                "replications must be at least 100, got {}",
                self.replications
            )));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "alpha must lie strictly between 0 and 1, got {}",
                self.alpha
            )));
        }
        for alt in &self.alternatives {
            alt.validate()?;
            // The table carries a Fisher index per alternative.
            alt.fisher_index()?;
        }
        Ok(())
    }
}

/// One (alternative, n) row of rejection percentages, aligned with the
/// table's statistic list.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerRow {
    pub alternative: AlternativeSpec,
    pub fisher_index: f64,
    pub n: u32,
    pub power_pct: Vec<f64>,
}

/// Rejection-percentage matrix indexed by (alternative, n) x statistic.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerTable {
    pub statistics: Vec<StatisticId>,
    pub rows: Vec<PowerRow>,
    pub replications: u64,
    pub alpha: f64,
    pub seed: u64,
}

/// Run the warp-speed power study; data-parallel over replications when the
/// `parallel` feature is enabled (the default).
pub fn warp_speed_power(config: &PowerStudyConfig) -> Result<PowerTable> {
    run(config, false)
}

/// Sequential fallback with bit-identical output, independent of features
/// and thread counts.
pub fn warp_speed_power_sequential(config: &PowerStudyConfig) -> Result<PowerTable> {
    run(config, true)
}

fn run(config: &PowerStudyConfig, sequential: bool) -> Result<PowerTable> {
    config.validate()?;
    let root = RngHandle::new(config.seed, 0);
    let m = config.replications;
    let ids = config.statistics.clone();
    let mut rows = Vec::with_capacity(config.alternatives.len() * config.sample_sizes.len());

    let mut cell_idx = 0u64;
    for &alt in &config.alternatives {
        let fisher_index = alt.fisher_index().expect("validated");
        for &n in &config.sample_sizes {
            let cell = root.substream(cell_idx);
            cell_idx += 1;

            let scores: Vec<(Vec<f64>, Vec<f64>)> = collect_indexed(
                m,
                |rep| replicate(alt, n as usize, &ids, cell.substream(rep)),
                sequential,
            );

            let mut power_pct = Vec::with_capacity(ids.len());
            for j in 0..ids.len() {
                let observed: Vec<f64> = scores.iter().map(|(s, _)| s[j]).collect();
                let boot: Vec<f64> = scores.iter().map(|(_, s)| s[j]).collect();
                power_pct.push(power_from_scores(&observed, &boot, config.alpha));
            }
            rows.push(PowerRow {
                alternative: alt,
                fisher_index,
                n,
                power_pct,
            });
        }
    }

    Ok(PowerTable {
        statistics: ids,
        rows,
        replications: m,
        alpha: config.alpha,
        seed: config.seed,
    })
}

// One warp-speed replication: sample from F, evaluate the battery, then one
// bootstrap sample from P(λ̂) with its own refit.
fn replicate(
    alt: AlternativeSpec,
    n: usize,
    ids: &[StatisticId],
    handle: RngHandle,
) -> (Vec<f64>, Vec<f64>) {
    let sample = alt.sample(n, handle.substream(0)).expect("validated spec");
    let fit = mle_lambda(&sample);
    let ctx = FitContext::new(&sample, &fit);
    let observed: Vec<f64> = ids.iter().map(|&id| compute(id, &ctx).value).collect();

    let boot = sample_null(fit.lambda_hat(), n, handle.substream(1));
    let boot_ctx = FitContext::from_sample(&boot);
    let bootstrap: Vec<f64> = ids.iter().map(|&id| compute(id, &boot_ctx).value).collect();

    (observed, bootstrap)
}

/// Rejection percentage: share of observed statistics strictly above the
/// warp-speed critical value of the pooled bootstrap scores.
pub(crate) fn power_from_scores(observed: &[f64], bootstrap: &[f64], alpha: f64) -> f64 {
    let crit = critical_value(bootstrap, alpha).expect("M >= 100");
    let rejections = observed.iter().filter(|&&s| s > crit).count();
    100.0 * rejections as f64 / observed.len() as f64
}

impl PowerTable {
    /// Long-format CSV with one record per (alternative, n, statistic) cell.
    /// Floats are rendered in shortest round-trip form, so re-parsing
    /// reproduces the table bit for bit.
    pub fn write_csv<W: std::io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record([
            "alternative",
            "fisher_index",
            "n",
            "statistic",
            "power_pct",
            "M",
            "alpha",
            "seed",
        ])?;
        for row in &self.rows {
            for (id, pct) in self.statistics.iter().zip(&row.power_pct) {
                w.serialize((
                    row.alternative.to_string(),
                    row.fisher_index,
                    row.n,
                    id.name(),
                    pct,
                    self.replications,
                    self.alpha,
                    self.seed,
                ))?;
            }
        }
        w.flush().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Csv(e.to_string()))
    }

    /// Parse the CSV produced by [`PowerTable::write_csv`]. Laplace-weighted
    /// statistics are reconstructed with the default tuning parameter.
    pub fn from_csv_str(s: &str) -> Result<PowerTable> {
        type Record = (String, f64, u32, String, f64, u64, f64, u64);
        let mut reader = csv::Reader::from_reader(s.as_bytes());
        let mut records: Vec<Record> = Vec::new();
        for record in reader.deserialize() {
            records.push(record?);
        }
        let (replications, alpha, seed) = match records.first() {
            Some(r) => (r.5, r.6, r.7),
            None => return Err(Error::Csv("empty table".into())),
        };

        let mut statistics: Vec<StatisticId> = Vec::new();
        let mut rows: Vec<PowerRow> = Vec::new();
        for (alt_text, fi, n, stat_name, pct, m, a, sd) in records {
            if (m, a, sd) != (replications, alpha, seed) {
                return Err(Error::Csv("inconsistent table metadata".into()));
            }
            let alt: AlternativeSpec = alt_text.parse()?;
            let id = StatisticId::from_name(&stat_name, DEFAULT_LAPLACE_A)?;
            let is_new_row = rows
                .last()
                .is_none_or(|last: &PowerRow| !(last.alternative == alt && last.n == n));
            if is_new_row {
                rows.push(PowerRow {
                    alternative: alt,
                    fisher_index: fi,
                    n,
                    power_pct: Vec::new(),
                });
            }
            if rows.len() == 1 {
                statistics.push(id);
            }
            rows.last_mut().expect("just pushed").power_pct.push(pct);
        }

        if rows.iter().any(|r| r.power_pct.len() != statistics.len()) {
            return Err(Error::Csv("ragged table".into()));
        }
        Ok(PowerTable {
            statistics,
            rows,
            replications,
            alpha,
            seed,
        })
    }

    /// Aligned human-readable table; `*` marks each row's maximum power,
    /// including ties.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let alt_width = self
            .rows
            .iter()
            .map(|r| r.alternative.to_string().len())
            .chain(["alternative".len()])
            .max()
            .unwrap_or(12);
        out.push_str(&format!(
            "{:<alt_width$}  {:>5}  {:>4}",
            "alternative", "FI", "n"
        ));
        for id in &self.statistics {
            out.push_str(&format!("  {:>9}", id.name()));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{:<alt_width$}  {:>5.2}  {:>4}",
                row.alternative.to_string(),
                row.fisher_index,
                row.n
            ));
            let row_max = row.power_pct.iter().copied().fold(f64::MIN, f64::max);
            for &pct in &row.power_pct {
                let mark = if pct == row_max { "*" } else { "" };
                out.push_str(&format!("  {:>9}", format!("{pct:.1}{mark}")));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "M = {}, alpha = {}, seed = {}\n",
            self.replications, self.alpha, self.seed
        ));
        out
    }
}
