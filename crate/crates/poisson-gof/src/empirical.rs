//! Empirical functionals of an observed count sample: frequency table,
//! empirical pmf/cdf, empirical integrated distribution function, the Poisson
//! MLE and the empirical weight function `w*(x) = f_n(x) / f_λ̂(x)`.

use crate::distributions::Poisson;
use crate::error::{Error, Result};

/// An immutable multiset of non-negative integer observations.
///
/// The raw list is kept alongside a dense frequency table over `0..=max`;
/// every functional here depends only on the frequencies, never on order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSample {
    observations: Vec<u32>,
    freq: Vec<u64>,
    sum: u64,
}

impl CountSample {
    pub fn from_observations(observations: Vec<u32>) -> Result<Self> {
        if observations.is_empty() {
            return Err(Error::EmptySample);
        }
        let m = *observations.iter().max().expect("non-empty") as usize;
        let mut freq = vec![0u64; m + 1];
        let mut sum = 0u64;
        for &x in &observations {
            freq[x as usize] += 1;
            sum += u64::from(x);
        }
        Ok(CountSample {
            observations,
            freq,
            sum,
        })
    }

    /// Build from `(value, count)` pairs; counts of zero are allowed and
    /// contribute nothing.
    pub fn from_frequencies(pairs: &[(u32, u64)]) -> Result<Self> {
        let mut observations = Vec::new();
        for &(value, count) in pairs {
            for _ in 0..count {
                observations.push(value);
            }
        }
        Self::from_observations(observations)
    }

    pub fn n(&self) -> usize {
        self.observations.len()
    }

    /// The sample maximum `m`.
    pub fn max(&self) -> u32 {
        (self.freq.len() - 1) as u32
    }

    pub fn observations(&self) -> &[u32] {
        &self.observations
    }

    /// Count of observations equal to `x` (zero beyond the maximum).
    pub fn freq(&self, x: u32) -> u64 {
        self.freq.get(x as usize).copied().unwrap_or(0)
    }

    pub fn mean(&self) -> f64 {
        self.sum as f64 / self.n() as f64
    }

    /// Unbiased sample variance over sample mean; `NaN` for an all-zero
    /// sample or a single observation.
    pub fn fisher_index(&self) -> f64 {
        let n = self.n() as f64;
        let mean = self.mean();
        if mean == 0.0 || self.n() < 2 {
            return f64::NAN;
        }
        let ss: f64 = self
            .observations
            .iter()
            .map(|&x| {
                let d = f64::from(x) - mean;
                d * d
            })
            .sum();
        ss / (n - 1.0) / mean
    }
}

/// The fitted null: `λ̂` is the sample mean, the Poisson MLE.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FittedNull {
    lambda_hat: f64,
}

impl FittedNull {
    pub fn lambda_hat(&self) -> f64 {
        self.lambda_hat
    }

    /// True when every observation was zero, collapsing the fitted Poisson to
    /// a point mass at 0.
    pub fn is_degenerate(&self) -> bool {
        self.lambda_hat == 0.0
    }
}

/// Maximum-likelihood estimate of the Poisson mean: the arithmetic mean,
/// computed from the exact integer sum so the only rounding is one division.
pub fn mle_lambda(sample: &CountSample) -> FittedNull {
    FittedNull {
        lambda_hat: sample.mean(),
    }
}

/// `f_n(x)`: the fraction of observations equal to `x`.
pub fn empirical_pmf(sample: &CountSample, x: u32) -> f64 {
    sample.freq(x) as f64 / sample.n() as f64
}

/// `F_n(x)`: the fraction of observations `≤ x`; accepts negative arguments.
pub fn empirical_cdf(sample: &CountSample, x: i64) -> f64 {
    if x < 0 {
        return 0.0;
    }
    if x >= i64::from(sample.max()) {
        return 1.0;
    }
    let upto = x as u32;
    let count: u64 = (0..=upto).map(|v| sample.freq(v)).sum();
    count as f64 / sample.n() as f64
}

/// `Ψ_n(t) = (1/n) Σ (X_j − t) I(X_j > t)`: the empirical integrated
/// distribution function, piecewise linear with kinks at the integers.
pub fn empirical_idf(sample: &CountSample, t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    let mut acc = 0.0;
    for x in 0..=sample.max() {
        let c = sample.freq(x);
        if c > 0 && f64::from(x) > t {
            acc += c as f64 * (f64::from(x) - t);
        }
    }
    acc / sample.n() as f64
}

/// The empirical weight function `w*(x) = f_n(x) / f_λ̂(x)`, evaluated in log
/// space and saturating at `f64::MAX` instead of overflowing; exactly zero
/// wherever `f_n(x) = 0` (in particular for all `x` beyond the maximum).
pub fn empirical_weight(sample: &CountSample, fit: &FittedNull, x: u32) -> Result<f64> {
    if fit.is_degenerate() {
        return Err(Error::DegenerateFit);
    }
    let count = sample.freq(x);
    if count == 0 {
        return Ok(0.0);
    }
    let dist = Poisson::new(fit.lambda_hat())?;
    let ln_w = (count as f64 / sample.n() as f64).ln() - dist.log_pmf(x);
    Ok(ln_w.exp().min(f64::MAX))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair() -> CountSample {
        CountSample::from_observations(vec![0, 1]).unwrap()
    }

    fn sparrow() -> CountSample {
        CountSample::from_frequencies(&[(0, 9), (1, 22), (2, 6), (3, 2), (4, 1)]).unwrap()
    }

    #[test]
    fn empty_sample_rejected() {
        assert!(matches!(
            CountSample::from_observations(vec![]),
            Err(Error::EmptySample)
        ));
    }

    #[test]
    fn mle_is_the_mean() {
        assert_eq!(mle_lambda(&pair()).lambda_hat(), 0.5);
        assert_eq!(mle_lambda(&sparrow()).lambda_hat(), 1.1);
        let horse = CountSample::from_frequencies(&[
            (3, 1),
            (4, 1),
            (5, 2),
            (6, 2),
            (7, 1),
            (8, 1),
            (9, 2),
            (10, 1),
            (11, 3),
            (12, 1),
            (14, 1),
            (15, 2),
            (17, 1),
            (18, 1),
        ])
        .unwrap();
        assert_eq!(horse.n(), 20);
        assert_eq!(mle_lambda(&horse).lambda_hat(), 9.8);
    }

    #[test]
    fn empirical_pmf_and_cdf() {
        let s = sparrow();
        assert_eq!(empirical_pmf(&pair(), 0), 0.5);
        assert_eq!(empirical_pmf(&s, 1), 0.55);
        assert_eq!(empirical_pmf(&s, 7), 0.0);
        assert_eq!(empirical_cdf(&pair(), 0), 0.5);
        assert_eq!(empirical_cdf(&s, 1), 0.775);
        assert_eq!(empirical_cdf(&s, i64::from(s.max())), 1.0);
        assert_eq!(empirical_cdf(&s, -1), 0.0);
        // cdf increments are the pmf.
        for x in 0..=s.max() {
            let inc = empirical_cdf(&s, i64::from(x)) - empirical_cdf(&s, i64::from(x) - 1);
            assert!((inc - empirical_pmf(&s, x)).abs() < 1e-15);
        }
    }

    #[test]
    fn empirical_idf_values() {
        assert_eq!(empirical_idf(&pair(), 0.0), 0.5);
        assert_eq!(empirical_idf(&pair(), 1.0), 0.0);
        let single = CountSample::from_observations(vec![5]).unwrap();
        assert_eq!(empirical_idf(&single, 2.5), 2.5);
    }

    #[test]
    fn weight_function_values() {
        let p = pair();
        let fit = mle_lambda(&p);
        let w0 = empirical_weight(&p, &fit, 0).unwrap();
        let w1 = empirical_weight(&p, &fit, 1).unwrap();
        assert!((w0 - 0.8243606353500641).abs() < 1e-12);
        assert!((w1 - 1.6487212707001282).abs() < 1e-12);
        assert_eq!(empirical_weight(&p, &fit, 17).unwrap(), 0.0);

        let s = sparrow();
        let fit = mle_lambda(&s);
        let w0 = empirical_weight(&s, &fit, 0).unwrap();
        assert!((w0 - 0.6759373553879474).abs() < 1e-12);
    }

    #[test]
    fn weight_saturates_instead_of_overflowing() {
        // One observation absurdly far above the fitted mean.
        let mut obs = vec![0u32; 999];
        obs.push(60_000);
        let s = CountSample::from_observations(obs).unwrap();
        let fit = mle_lambda(&s);
        let w = empirical_weight(&s, &fit, 60_000).unwrap();
        assert!(w.is_finite() && w == f64::MAX);
    }

    #[test]
    fn degenerate_fit_is_an_error_for_the_weight() {
        let zeros = CountSample::from_observations(vec![0, 0, 0]).unwrap();
        let fit = mle_lambda(&zeros);
        assert!(fit.is_degenerate());
        assert!(matches!(
            empirical_weight(&zeros, &fit, 0),
            Err(Error::DegenerateFit)
        ));
    }

    #[test]
    fn frequency_and_raw_constructions_agree() {
        let a = CountSample::from_frequencies(&[(0, 2), (3, 1), (5, 0)]).unwrap();
        let b = CountSample::from_observations(vec![3, 0, 0]).unwrap();
        assert_eq!(a.n(), b.n());
        assert_eq!(a.max(), b.max());
        for x in 0..=a.max() {
            assert_eq!(a.freq(x), b.freq(x));
        }
    }

    #[test]
    fn normalization_identity() {
        // Σ w*(x) f_λ̂(x) over 0..=m equals Σ f_n(x) = 1.
        let s = sparrow();
        let fit = mle_lambda(&s);
        let dist = Poisson::new(fit.lambda_hat()).unwrap();
        let total: f64 = (0..=s.max())
            .map(|x| empirical_weight(&s, &fit, x).unwrap() * dist.pmf(x))
            .sum();
        assert!((total - 1.0).abs() < 1e-12);
    }
}
