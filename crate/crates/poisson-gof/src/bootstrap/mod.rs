//! Parametric-bootstrap p-values for observed datasets and the warp-speed
//! bootstrap Monte Carlo engine for power studies.
//!
//! Replications are independent work items keyed by their index through
//! [`RngHandle`] sub-streams, so results are bit-identical no matter how many
//! threads execute them. With the default `parallel` feature the loops run on
//! rayon; without it the same code runs sequentially.

mod power;

pub use power::{
    warp_speed_power, warp_speed_power_sequential, PowerRow, PowerStudyConfig, PowerTable,
};

use crate::empirical::{mle_lambda, CountSample};
use crate::error::{Error, Result};
use crate::rng::RngHandle;
use crate::statistics::{compute, FitContext, StatisticId};

/// Result of a parametric bootstrap for a single statistic on one dataset.
#[derive(Debug, Clone)]
pub struct BootstrapOutcome {
    pub id: StatisticId,
    /// Value of the statistic on the observed sample.
    pub statistic: f64,
    /// The B bootstrap replicate values (empty for a degenerate fit).
    pub replicates: Vec<f64>,
    /// `(1 + #{S* > S}) / (B + 1)`; never zero. Ties at the observed value
    /// do not count against the hypothesis, which matters for statistics
    /// with point masses (an unobserved zero cell pins tinf-lap to exactly
    /// 1.0, and most bootstrap replicates tie there).
    pub p_value: f64,
    /// True when `λ̂ = 0`; the bootstrap law is a point mass and p = 1.
    pub degenerate: bool,
}

impl BootstrapOutcome {
    /// Reject the Poisson hypothesis at level `alpha` iff `p <= alpha`.
    pub fn reject_at(&self, alpha: f64) -> bool {
        self.p_value <= alpha
    }
}

/// Classical parametric bootstrap p-value for one statistic.
///
/// Draws B samples of size n from `P(λ̂)`, refits the mean on each bootstrap
/// sample, and compares the replicated statistics against the observed one.
pub fn bootstrap_pvalue(
    sample: &CountSample,
    id: StatisticId,
    replications: u64,
    handle: RngHandle,
) -> Result<BootstrapOutcome> {
    let mut outcomes = bootstrap_report(sample, &[id], replications, handle)?;
    Ok(outcomes.remove(0))
}

/// Bootstrap a whole battery of statistics sharing one set of bootstrap
/// samples, which is substantially cheaper than separate runs and leaves
/// each marginal p-value unchanged.
pub fn bootstrap_report(
    sample: &CountSample,
    ids: &[StatisticId],
    replications: u64,
    handle: RngHandle,
) -> Result<Vec<BootstrapOutcome>> {
    run_report(sample, ids, replications, handle, false)
}

/// Sequential variant of [`bootstrap_report`]; same output bit for bit.
pub fn bootstrap_report_sequential(
    sample: &CountSample,
    ids: &[StatisticId],
    replications: u64,
    handle: RngHandle,
) -> Result<Vec<BootstrapOutcome>> {
    run_report(sample, ids, replications, handle, true)
}

fn run_report(
    sample: &CountSample,
    ids: &[StatisticId],
    replications: u64,
    handle: RngHandle,
    sequential: bool,
) -> Result<Vec<BootstrapOutcome>> {
    if replications < 100 {
        return Err(Error::InvalidConfig(format!(
            "bootstrap replications must be at least 100, got {replications}"
        )));
    }
    if ids.is_empty() {
        return Err(Error::InvalidConfig("no statistics requested".into()));
    }
    let fit = mle_lambda(sample);
    let ctx = FitContext::new(sample, &fit);
    let observed: Vec<f64> = ids.iter().map(|&id| compute(id, &ctx).value).collect();

    if fit.is_degenerate() {
        // Every bootstrap sample from a point mass at zero is all-zero.
        return Ok(ids
            .iter()
            .zip(observed)
            .map(|(&id, statistic)| BootstrapOutcome {
                id,
                statistic,
                replicates: Vec::new(),
                p_value: 1.0,
                degenerate: true,
            })
            .collect());
    }

    let n = sample.n();
    let lambda_hat = fit.lambda_hat();
    let ids_owned = ids.to_vec();
    let replicate = |b: u64| -> Vec<f64> {
        let boot = sample_null(lambda_hat, n, handle.substream(b));
        let boot_ctx = FitContext::from_sample(&boot);
        ids_owned
            .iter()
            .map(|&id| compute(id, &boot_ctx).value)
            .collect()
    };
    let rows: Vec<Vec<f64>> = collect_indexed(replications, replicate, sequential);

    Ok(ids
        .iter()
        .enumerate()
        .map(|(j, &id)| {
            let statistic = observed[j];
            let replicates: Vec<f64> = rows.iter().map(|r| r[j]).collect();
            let exceed = replicates.iter().filter(|&&s| s > statistic).count();
            let p_value = (1.0 + exceed as f64) / (replications as f64 + 1.0);
            BootstrapOutcome {
                id,
                statistic,
                replicates,
                p_value,
                degenerate: false,
            }
        })
        .collect())
}

/// Draw `n` observations from `P(lambda)`; `lambda = 0` yields the all-zero
/// sample that a degenerate refit produces inside Monte Carlo loops.
pub(crate) fn sample_null(lambda: f64, n: usize, handle: RngHandle) -> CountSample {
    let mut rng = handle.rng();
    let obs: Vec<u32> = (0..n)
        .map(|_| crate::distributions::sample_poisson(lambda, &mut rng))
        .collect();
    CountSample::from_observations(obs).expect("n >= 1")
}

/// The `⌊M(1−α)⌋`-th order statistic (1-based, clamped to the list) of the
/// pooled bootstrap values: the warp-speed critical value.
pub fn critical_value(replicates: &[f64], alpha: f64) -> Result<f64> {
    if replicates.is_empty() {
        return Err(Error::EmptyReplicates);
    }
    let mut sorted = replicates.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let m = sorted.len();
    let raw = (m as f64 * (1.0 - alpha) + 1e-9).floor() as usize;
    let idx = raw.clamp(1, m);
    Ok(sorted[idx - 1])
}

// Map indices 0..count, in parallel when built with the `parallel` feature
// and not explicitly asked for the sequential path.
pub(crate) fn collect_indexed<T, F>(count: u64, f: F, sequential: bool) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if !sequential {
            use rayon::prelude::*;
            return (0..count).into_par_iter().map(f).collect();
        }
    }
    let _ = sequential;
    (0..count).map(f).collect()
}
