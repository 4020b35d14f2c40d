//! The fourteen test statistics: nine weighted-distance statistics built on
//! the empirical weight function, and five classical EDF competitors.
//!
//! All statistics are pure functions of the sample and the fitted mean; a
//! [`FitContext`] precomputes the fitted pmf/cdf tables once so that a whole
//! battery can be evaluated cheaply on the same sample, which is what the
//! bootstrap loops need.
//!
//! Numerical conventions, chosen to reproduce the published example values:
//! - the `T2` family reports the weighted sum of squares itself (no final
//!   square root); p-values and power are unchanged either way since the
//!   root is monotone,
//! - `ks` is the unscaled sup-distance between the fitted and empirical cdfs,
//! - `cv` and `ad` truncate their sums at x = 100, and `ad` skips terms whose
//!   denominator `F(1−F)` is zero to machine precision,
//! - `kl` sums `|F_n − F_λ̂|` over the integer grid `0..=max(m, 100)`,
//! - `id` scans integers `0..=m+1`, exact because both integrated
//!   distribution functions are piecewise linear with kinks only at integers.

use crate::empirical::CountSample;
use crate::empirical::FittedNull;
use crate::error::{Error, Result};
use crate::Poisson;

/// Weight function g for the weighted-distance statistics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Weight {
    /// The fitted Poisson pmf `f_λ̂`.
    Fitted,
    /// The empirical pmf `f_n`.
    Empirical,
    /// The exponential kernel `e^{-ax}` with tuning parameter `a > 0`.
    Laplace(f64),
}

/// Identifies one of the fourteen test statistics. The Laplace-weighted
/// members carry their tuning parameter (1.0 reproduces every published
/// table).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StatisticId {
    T1Fit,
    T1Emp,
    T1Lap(f64),
    T2Fit,
    T2Emp,
    T2Lap(f64),
    TInfFit,
    TInfEmp,
    TInfLap(f64),
    Ks,
    Cv,
    Ad,
    Kl,
    Id,
}

pub const DEFAULT_LAPLACE_A: f64 = 1.0;

impl StatisticId {
    /// All fourteen statistics in the canonical reporting order.
    pub fn all(laplace_a: f64) -> Vec<StatisticId> {
        use StatisticId::*;
        vec![
            Ks,
            Cv,
            Ad,
            Kl,
            Id,
            T1Fit,
            T1Emp,
            T1Lap(laplace_a),
            T2Fit,
            T2Emp,
            T2Lap(laplace_a),
            TInfFit,
            TInfEmp,
            TInfLap(laplace_a),
        ]
    }

    /// Canonical text name used by the CLI, config files and CSV output.
    pub fn name(&self) -> &'static str {
        use StatisticId::*;
        match self {
            T1Fit => "t1-fit",
            T1Emp => "t1-emp",
            T1Lap(_) => "t1-lap",
            T2Fit => "t2-fit",
            T2Emp => "t2-emp",
            T2Lap(_) => "t2-lap",
            TInfFit => "tinf-fit",
            TInfEmp => "tinf-emp",
            TInfLap(_) => "tinf-lap",
            Ks => "ks",
            Cv => "cv",
            Ad => "ad",
            Kl => "kl",
            Id => "id",
        }
    }

    /// Parse a canonical name; `laplace_a` is attached to the `*-lap`
    /// members. `all` is not a statistic and is handled by callers.
    pub fn from_name(name: &str, laplace_a: f64) -> Result<StatisticId> {
        use StatisticId::*;
        Ok(match name.trim().to_ascii_lowercase().as_str() {
            "t1-fit" => T1Fit,
            "t1-emp" => T1Emp,
            "t1-lap" => T1Lap(laplace_a),
            "t2-fit" => T2Fit,
            "t2-emp" => T2Emp,
            "t2-lap" => T2Lap(laplace_a),
            "tinf-fit" => TInfFit,
            "tinf-emp" => TInfEmp,
            "tinf-lap" => TInfLap(laplace_a),
            "ks" => Ks,
            "cv" => Cv,
            "ad" => Ad,
            "kl" => Kl,
            "id" => Id,
            other => return Err(Error::UnknownStatistic(other.to_string())),
        })
    }
}

impl std::fmt::Display for StatisticId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A computed statistic value; always finite and non-negative (overflowing
/// weight ratios saturate at `f64::MAX`, preserving ordering).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatValue {
    pub id: StatisticId,
    pub value: f64,
}

/// Everything the statistics need, precomputed once per (sample, fit):
/// empirical and fitted pmf/cdf tables, the empirical weight function and
/// suffix sums for the integrated distribution functions.
///
/// A degenerate fit (`λ̂ = 0`, all observations zero) is represented as a
/// point mass at zero; every statistic then reduces to its tail term (zero
/// for the fitted and empirical weights).
#[derive(Debug, Clone)]
pub struct FitContext {
    n: f64,
    m: u32,
    lambda_hat: f64,
    degenerate: bool,
    /// f_n on 0..=m.
    emp_pmf: Vec<f64>,
    /// F_n on 0..=m.
    emp_cdf: Vec<f64>,
    /// w* on 0..=m (saturating, zero where f_n is zero).
    w_star: Vec<f64>,
    /// f_λ̂ on 0..len; len covers max(m+1, 100) and extends until the
    /// survival drops below 1e-15.
    fitted_pmf: Vec<f64>,
    /// F_λ̂, same range.
    fitted_cdf: Vec<f64>,
    /// max_{x > m} f_λ̂(x) = f_λ̂(m+1).
    tail_max: f64,
    /// Ψ_λ̂(t) for integer t in 0..=m+1.
    psi_fit: Vec<f64>,
    /// Σ_{v >= t} freq(v) and Σ_{v >= t} v·freq(v), for Ψ_n at integers.
    count_suffix: Vec<f64>,
    weighted_suffix: Vec<f64>,
}

impl FitContext {
    pub fn new(sample: &CountSample, fit: &FittedNull) -> FitContext {
        let n = sample.n() as f64;
        let m = sample.max();
        let lambda_hat = fit.lambda_hat();
        let degenerate = fit.is_degenerate();

        let emp_pmf: Vec<f64> = (0..=m).map(|x| sample.freq(x) as f64 / n).collect();
        let mut emp_cdf = emp_pmf.clone();
        for x in 1..emp_cdf.len() {
            emp_cdf[x] += emp_cdf[x - 1];
        }

        let min_len = (m as usize + 2).max(101);
        let (fitted_pmf, fitted_cdf, tail_max) = if degenerate {
            let mut pmf = vec![0.0; min_len];
            pmf[0] = 1.0;
            (pmf, vec![1.0; min_len], 0.0)
        } else {
            let dist = Poisson::new(lambda_hat).expect("positive mean");
            let mut pmf = Vec::with_capacity(min_len);
            let mut cdf = Vec::with_capacity(min_len);
            let mut acc = 0.0f64;
            let mut x = 0u32;
            loop {
                let p = dist.pmf(x);
                acc += p;
                pmf.push(p);
                cdf.push(acc.min(1.0));
                if pmf.len() >= min_len && 1.0 - acc < 1e-15 {
                    break;
                }
                x += 1;
                // generous hard cap; the survival threshold triggers first
                if x as usize
                    > min_len + 4 * (lambda_hat.sqrt() as usize + 20) + lambda_hat as usize
                {
                    break;
                }
            }
            let tail = dist.pmf(m + 1);
            (pmf, cdf, tail)
        };

        let w_star: Vec<f64> = (0..=m as usize)
            .map(|x| {
                if emp_pmf[x] == 0.0 {
                    0.0
                } else if degenerate {
                    // Point mass: w*(0) = f_n(0) / 1 = 1 for the all-zero sample.
                    1.0
                } else {
                    let dist = Poisson::new(lambda_hat).expect("positive mean");
                    (emp_pmf[x].ln() - dist.log_pmf(x as u32))
                        .exp()
                        .min(f64::MAX)
                }
            })
            .collect();

        // Ψ_λ̂ at integers 0..=m+1 via suffix sums of the survival function.
        let len = fitted_cdf.len();
        let mut psi_fit = vec![0.0f64; m as usize + 2];
        let mut suffix = 0.0f64;
        let mut survivals: Vec<f64> = fitted_cdf.iter().map(|&c| 1.0 - c).collect();
        // Anything beyond the table is below the 1e-15 cutoff.
        for k in (0..len).rev() {
            suffix += survivals[k];
            survivals[k] = suffix;
        }
        for (t, slot) in psi_fit.iter_mut().enumerate() {
            *slot = if t < len { survivals[t] } else { 0.0 };
        }

        // Suffix sums of the frequency table for Ψ_n at integers.
        let mut count_suffix = vec![0.0f64; m as usize + 3];
        let mut weighted_suffix = vec![0.0f64; m as usize + 3];
        for v in (0..=m as usize).rev() {
            let c = sample.freq(v as u32) as f64;
            count_suffix[v] = count_suffix[v + 1] + c;
            weighted_suffix[v] = weighted_suffix[v + 1] + c * v as f64;
        }

        FitContext {
            n,
            m,
            lambda_hat,
            degenerate,
            emp_pmf,
            emp_cdf,
            w_star,
            fitted_pmf,
            fitted_cdf,
            tail_max,
            psi_fit,
            count_suffix,
            weighted_suffix,
        }
    }

    /// Convenience: fit the MLE and build the context in one step.
    pub fn from_sample(sample: &CountSample) -> FitContext {
        FitContext::new(sample, &crate::empirical::mle_lambda(sample))
    }

    pub fn lambda_hat(&self) -> f64 {
        self.lambda_hat
    }

    pub fn sample_max(&self) -> u32 {
        self.m
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    fn emp_cdf_at(&self, x: usize) -> f64 {
        if x >= self.emp_cdf.len() {
            1.0
        } else {
            self.emp_cdf[x]
        }
    }

    fn psi_emp(&self, t: usize) -> f64 {
        // (1/n) Σ_{v > t} freq(v) (v − t) for integer t.
        if t + 1 >= self.count_suffix.len() {
            return 0.0;
        }
        (self.weighted_suffix[t + 1] - t as f64 * self.count_suffix[t + 1]) / self.n
    }

    fn laplace_tail(&self, a: f64) -> f64 {
        // Σ_{x=m+1}^{∞} e^{-ax} = e^{-a(m+1)} / (1 - e^{-a})
        (-a * (f64::from(self.m) + 1.0)).exp() / (1.0 - (-a).exp())
    }

    fn weight_values(&self, g: Weight) -> impl Iterator<Item = f64> + '_ {
        (0..=self.m as usize).map(move |x| match g {
            Weight::Fitted => self.fitted_pmf[x],
            Weight::Empirical => self.emp_pmf[x],
            Weight::Laplace(a) => (-a * x as f64).exp(),
        })
    }

    fn tail_term(&self, g: Weight) -> f64 {
        match g {
            Weight::Fitted => 1.0 - self.fitted_cdf[self.m as usize],
            Weight::Empirical => 0.0,
            Weight::Laplace(a) => self.laplace_tail(a),
        }
    }
}

fn saturate(v: f64) -> f64 {
    if v.is_nan() {
        // Only reachable when a huge weight ratio meets an underflowed
        // kernel value; the true term is below any representable scale.
        0.0
    } else {
        v.min(f64::MAX)
    }
}

/// Weighted L1 distance between w* and 1:
/// `Σ_{x=0}^{m} |w*(x) − 1| g(x) + Σ_{x>m} g(x)`.
///
/// With the fitted weight the summand is evaluated as `|f_n(x) − f_λ̂(x)|`,
/// algebraically identical and free of the division by small pmf values.
pub fn stat_t1(ctx: &FitContext, g: Weight) -> f64 {
    let body: f64 = match g {
        Weight::Fitted => (0..=ctx.m as usize)
            .map(|x| (ctx.emp_pmf[x] - ctx.fitted_pmf[x]).abs())
            .sum(),
        _ => ctx
            .weight_values(g)
            .enumerate()
            .map(|(x, gx)| saturate((ctx.w_star[x] - 1.0).abs() * gx))
            .sum(),
    };
    saturate(body + ctx.tail_term(g))
}

/// Weighted squared L2 distance between w* and 1:
/// `Σ_{x=0}^{m} (w*(x) − 1)² g(x) + Σ_{x>m} g(x)`.
///
/// Reported without the final square root, matching the published values;
/// the root is monotone so bootstrap p-values are unaffected.
pub fn stat_t2(ctx: &FitContext, g: Weight) -> f64 {
    let body: f64 = match g {
        Weight::Fitted => (0..=ctx.m as usize)
            .map(|x| {
                let f = ctx.fitted_pmf[x];
                let d = ctx.emp_pmf[x] - f;
                if f == 0.0 {
                    if ctx.emp_pmf[x] > 0.0 {
                        f64::MAX
                    } else {
                        0.0
                    }
                } else {
                    saturate(d * d / f)
                }
            })
            .sum(),
        _ => ctx
            .weight_values(g)
            .enumerate()
            .map(|(x, gx)| {
                let d = ctx.w_star[x] - 1.0;
                saturate(d * d * gx)
            })
            .sum(),
    };
    saturate(body + ctx.tail_term(g))
}

/// Weighted L∞ distance between w* and 1:
/// `max( max_{x ≤ m} |w*(x) − 1| g(x), max_{x > m} g(x) )`.
///
/// The over-the-maximum term is `f_λ̂(m+1)` for the fitted weight (the pmf is
/// non-increasing beyond the sample maximum since `λ̂ ≤ m + 1`), `e^{-a(m+1)}`
/// for the Laplace weight, and absent for the empirical weight.
pub fn stat_tinf(ctx: &FitContext, g: Weight) -> f64 {
    let body = match g {
        Weight::Fitted => (0..=ctx.m as usize)
            .map(|x| (ctx.emp_pmf[x] - ctx.fitted_pmf[x]).abs())
            .fold(0.0f64, f64::max),
        _ => ctx
            .weight_values(g)
            .enumerate()
            .map(|(x, gx)| saturate((ctx.w_star[x] - 1.0).abs() * gx))
            .fold(0.0f64, f64::max),
    };
    let tail = match g {
        Weight::Fitted => ctx.tail_max,
        Weight::Empirical => 0.0,
        Weight::Laplace(a) => (-a * (f64::from(ctx.m) + 1.0)).exp(),
    };
    body.max(tail)
}

/// Kolmogorov-Smirnov sup-distance `max_x |F_λ̂(x) − F_n(x)|`, exact when
/// scanned over `0..=m` (beyond m the difference is `1 − F_λ̂`, largest at m).
pub fn stat_ks(ctx: &FitContext) -> f64 {
    (0..=ctx.m as usize)
        .map(|x| (ctx.fitted_cdf[x] - ctx.emp_cdf[x]).abs())
        .fold(0.0f64, f64::max)
}

/// Cramér-von Mises: `(1/n) Σ_{x=0}^{100} (F_λ̂(x) − F_n(x))² f_λ̂(x)`.
pub fn stat_cv(ctx: &FitContext) -> f64 {
    let sum: f64 = (0..=100usize)
        .map(|x| {
            let d = ctx.fitted_cdf[x] - ctx.emp_cdf_at(x);
            d * d * ctx.fitted_pmf[x]
        })
        .sum();
    sum / ctx.n
}

/// Anderson-Darling: the Cramér-von Mises sum with each term divided by
/// `F_λ̂(x)(1 − F_λ̂(x))`, truncated at x = 100 and skipping terms whose
/// denominator is zero to machine precision.
pub fn stat_ad(ctx: &FitContext) -> f64 {
    let sum: f64 = (0..=100usize)
        .map(|x| {
            let f = ctx.fitted_cdf[x];
            let denom = f * (1.0 - f);
            if denom == 0.0 {
                0.0
            } else {
                let d = f - ctx.emp_cdf_at(x);
                d * d * ctx.fitted_pmf[x] / denom
            }
        })
        .sum();
    sum / ctx.n
}

/// The L1 distance between the fitted and empirical cdfs over the integer
/// grid, scaled by √n: `√n Σ_{x=0}^{max(m,100)} |F_n(x) − F_λ̂(x)|`.
pub fn stat_kl(ctx: &FitContext) -> f64 {
    let hi = (ctx.m as usize).max(100);
    let sum: f64 = (0..=hi)
        .map(|x| {
            let f = if x < ctx.fitted_cdf.len() {
                ctx.fitted_cdf[x]
            } else {
                1.0
            };
            (ctx.emp_cdf_at(x) - f).abs()
        })
        .sum();
    ctx.n.sqrt() * sum
}

/// Integrated-distribution-function statistic
/// `sup_{t≥0} √n |Ψ_λ̂(t) − Ψ_n(t)|`.
///
/// Both idfs are piecewise linear in t with kinks only at the integers, and
/// beyond m+1 the difference decreases, so scanning `t ∈ {0,…,m+1}` is exact.
pub fn stat_id(ctx: &FitContext) -> f64 {
    let sup = (0..=ctx.m as usize + 1)
        .map(|t| (ctx.psi_fit[t] - ctx.psi_emp(t)).abs())
        .fold(0.0f64, f64::max);
    ctx.n.sqrt() * sup
}

/// Evaluate any statistic on a precomputed context.
pub fn compute(id: StatisticId, ctx: &FitContext) -> StatValue {
    use StatisticId::*;
    let value = match id {
        T1Fit => stat_t1(ctx, Weight::Fitted),
        T1Emp => stat_t1(ctx, Weight::Empirical),
        T1Lap(a) => stat_t1(ctx, Weight::Laplace(a)),
        T2Fit => stat_t2(ctx, Weight::Fitted),
        T2Emp => stat_t2(ctx, Weight::Empirical),
        T2Lap(a) => stat_t2(ctx, Weight::Laplace(a)),
        TInfFit => stat_tinf(ctx, Weight::Fitted),
        TInfEmp => stat_tinf(ctx, Weight::Empirical),
        TInfLap(a) => stat_tinf(ctx, Weight::Laplace(a)),
        Ks => stat_ks(ctx),
        Cv => stat_cv(ctx),
        Ad => stat_ad(ctx),
        Kl => stat_kl(ctx),
        Id => stat_id(ctx),
    };
    StatValue { id, value }
}

/// Evaluate a battery of statistics on one context.
pub fn compute_many(ids: &[StatisticId], ctx: &FitContext) -> Vec<StatValue> {
    ids.iter().map(|&id| compute(id, ctx)).collect()
}
