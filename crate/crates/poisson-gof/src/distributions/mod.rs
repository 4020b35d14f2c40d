//! The null distribution and the alternative families used in power studies.
//!
//! Every family has an exact sampler, a pmf, and closed-form mean/variance
//! from which the Fisher index (variance-to-mean ratio) is derived. The
//! Fisher index is the cross-checkable fingerprint of each parameterization:
//! 1 for Poisson, below 1 underdispersed, above 1 overdispersed.

mod ln_fact;
mod poisson;

pub use poisson::{sample_poisson, Poisson};

use crate::empirical::CountSample;
use crate::error::{Error, Result};
use crate::rng::RngHandle;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Distribution;
use std::fmt;
use std::str::FromStr;

/// One of the count distributions available to the power-study engine.
///
/// `Du(k)` is uniform on `{0,…,k}`. `Zip(p, λ)` draws from `P(λ)` with
/// probability `p` and is zero otherwise, so its Fisher index is
/// `1 + λ(1−p)`. `Wp(λ, a, b)` re-weights `P(λ)` by the normalized quadratic
/// `(a y² + b y + 1) / (a(λ+λ²) + bλ + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlternativeSpec {
    Poisson(f64),
    Du(u32),
    Bin(u32, f64),
    Nb(f64, f64),
    Pm(f64, f64, f64),
    Zip(f64, f64),
    Wp(f64, f64, f64),
}

impl AlternativeSpec {
    pub fn validate(&self) -> Result<()> {
        fn rate(name: &'static str, v: f64) -> Result<()> {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidParameter {
                    name,
                    value: v,
                    reason: "rate must be positive and finite",
                });
            }
            Ok(())
        }
        fn prob(name: &'static str, v: f64) -> Result<()> {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParameter {
                    name,
                    value: v,
                    reason: "probability must lie in [0, 1]",
                });
            }
            Ok(())
        }
        match *self {
            AlternativeSpec::Poisson(l) => rate("lambda", l),
            AlternativeSpec::Du(_) => Ok(()),
            AlternativeSpec::Bin(m, p) => {
                if m == 0 {
                    return Err(Error::InvalidParameter {
                        name: "m",
                        value: 0.0,
                        reason: "number of trials must be positive",
                    });
                }
                prob("p", p)
            }
            AlternativeSpec::Nb(r, p) => {
                rate("r", r)?;
                prob("p", p)?;
                if p == 0.0 {
                    return Err(Error::InvalidParameter {
                        name: "p",
                        value: 0.0,
                        reason: "success probability must be positive",
                    });
                }
                Ok(())
            }
            AlternativeSpec::Pm(p, l1, l2) => {
                prob("p", p)?;
                rate("lambda1", l1)?;
                rate("lambda2", l2)
            }
            AlternativeSpec::Zip(p, l) => {
                prob("p", p)?;
                rate("lambda", l)
            }
            AlternativeSpec::Wp(l, a, b) => {
                rate("lambda", l)?;
                for (name, v) in [("a", a), ("b", b)] {
                    if !v.is_finite() || v < 0.0 {
                        return Err(Error::InvalidParameter {
                            name,
                            value: v,
                            reason: "weight coefficient must be non-negative",
                        });
                    }
                }
                Ok(())
            }
        }
    }

    /// Probability mass at `x`. Families with unbounded support are evaluated
    /// via the Poisson log-pmf or log-space binomial coefficients.
    pub fn pmf(&self, x: u32) -> f64 {
        match *self {
            AlternativeSpec::Poisson(l) => pois_pmf(l, x),
            AlternativeSpec::Du(k) => {
                if x <= k {
                    1.0 / (f64::from(k) + 1.0)
                } else {
                    0.0
                }
            }
            AlternativeSpec::Bin(m, p) => binomial_pmf(m, p, x),
            AlternativeSpec::Nb(r, p) => negative_binomial_pmf(r, p, x),
            AlternativeSpec::Pm(p, l1, l2) => p * pois_pmf(l1, x) + (1.0 - p) * pois_pmf(l2, x),
            AlternativeSpec::Zip(p, l) => {
                let zero = if x == 0 { 1.0 - p } else { 0.0 };
                zero + p * pois_pmf(l, x)
            }
            AlternativeSpec::Wp(l, a, b) => {
                let y = f64::from(x);
                let weight = (a * y * y + b * y + 1.0) / wp_normalizer(l, a, b);
                pois_pmf(l, x) * weight
            }
        }
    }

    pub fn mean(&self) -> f64 {
        match *self {
            AlternativeSpec::Poisson(l) => l,
            AlternativeSpec::Du(k) => f64::from(k) / 2.0,
            AlternativeSpec::Bin(m, p) => f64::from(m) * p,
            AlternativeSpec::Nb(r, p) => r * (1.0 - p) / p,
            AlternativeSpec::Pm(p, l1, l2) => p * l1 + (1.0 - p) * l2,
            AlternativeSpec::Zip(p, l) => p * l,
            AlternativeSpec::Wp(l, a, b) => {
                (a * poisson_raw_moment(l, 3) + b * poisson_raw_moment(l, 2) + l)
                    / wp_normalizer(l, a, b)
            }
        }
    }

    pub fn variance(&self) -> f64 {
        let mu = self.mean();
        match *self {
            AlternativeSpec::Poisson(l) => l,
            AlternativeSpec::Du(k) => f64::from(k) * (f64::from(k) + 2.0) / 12.0,
            AlternativeSpec::Bin(m, p) => f64::from(m) * p * (1.0 - p),
            AlternativeSpec::Nb(r, p) => r * (1.0 - p) / (p * p),
            AlternativeSpec::Pm(p, l1, l2) => {
                let second = p * (l1 + l1 * l1) + (1.0 - p) * (l2 + l2 * l2);
                second - mu * mu
            }
            AlternativeSpec::Zip(p, l) => p * (l + l * l) - mu * mu,
            AlternativeSpec::Wp(l, a, b) => {
                let second = (a * poisson_raw_moment(l, 4)
                    + b * poisson_raw_moment(l, 3)
                    + poisson_raw_moment(l, 2))
                    / wp_normalizer(l, a, b);
                second - mu * mu
            }
        }
    }

    /// Variance-to-mean ratio from the closed-form moments.
    pub fn fisher_index(&self) -> Result<f64> {
        self.validate()?;
        let mu = self.mean();
        if mu <= 0.0 {
            return Err(Error::FisherIndexUndefined(
                "zero-mean distribution has no variance-to-mean ratio",
            ));
        }
        Ok(self.variance() / mu)
    }

    /// Draw `n` independent observations on the given stream.
    pub fn sample(&self, n: usize, handle: RngHandle) -> Result<CountSample> {
        self.validate()?;
        if n == 0 {
            return Err(Error::EmptySample);
        }
        let mut rng = handle.rng();
        let mut obs = Vec::with_capacity(n);
        match *self {
            AlternativeSpec::Poisson(l) => {
                obs.extend((0..n).map(|_| sample_poisson(l, &mut rng)));
            }
            AlternativeSpec::Du(k) => {
                obs.extend((0..n).map(|_| rng.gen_range(0..=k)));
            }
            AlternativeSpec::Bin(m, p) => {
                for _ in 0..n {
                    let mut count = 0u32;
                    for _ in 0..m {
                        if rng.gen::<f64>() < p {
                            count += 1;
                        }
                    }
                    obs.push(count);
                }
            }
            AlternativeSpec::Nb(r, p) => {
                // Gamma(shape r, scale (1-p)/p) mixed Poisson.
                if p == 1.0 {
                    obs.resize(n, 0);
                } else {
                    let gamma = rand_distr::Gamma::new(r, (1.0 - p) / p).map_err(|_| {
                        Error::InvalidParameter {
                            name: "r",
                            value: r,
                            reason: "gamma mixing parameters invalid",
                        }
                    })?;
                    for _ in 0..n {
                        let g = gamma.sample(&mut rng);
                        obs.push(sample_poisson(g, &mut rng));
                    }
                }
            }
            AlternativeSpec::Pm(p, l1, l2) => {
                for _ in 0..n {
                    let l = if rng.gen::<f64>() < p { l1 } else { l2 };
                    obs.push(sample_poisson(l, &mut rng));
                }
            }
            AlternativeSpec::Zip(p, l) => {
                for _ in 0..n {
                    if rng.gen::<f64>() < p {
                        obs.push(sample_poisson(l, &mut rng));
                    } else {
                        obs.push(0);
                    }
                }
            }
            AlternativeSpec::Wp(l, a, b) => {
                let table = wp_cumulative_table(l, a, b);
                for _ in 0..n {
                    obs.push(sample_from_cumulative(&table, &mut rng));
                }
            }
        }
        CountSample::from_observations(obs)
    }
}

// Raw Poisson moments E[X^k] for k = 1..4.
fn poisson_raw_moment(l: f64, k: u32) -> f64 {
    match k {
        1 => l,
        2 => l + l * l,
        3 => l + 3.0 * l * l + l * l * l,
        4 => l + 7.0 * l * l + 6.0 * l * l * l + l * l * l * l,
        _ => unreachable!("raw moments implemented up to order 4"),
    }
}

// E[a X^2 + b X + 1] under P(lambda): the weight normalizer.
fn wp_normalizer(l: f64, a: f64, b: f64) -> f64 {
    a * (l + l * l) + b * l + 1.0
}

fn binomial_pmf(m: u32, p: f64, x: u32) -> f64 {
    if x > m {
        return 0.0;
    }
    if p == 0.0 {
        return if x == 0 { 1.0 } else { 0.0 };
    }
    if p == 1.0 {
        return if x == m { 1.0 } else { 0.0 };
    }
    let (mf, xf) = (f64::from(m), f64::from(x));
    let ln_choose = ln_factorial(m) - ln_factorial(x) - ln_factorial(m - x);
    (ln_choose + xf * p.ln() + (mf - xf) * (1.0 - p).ln()).exp()
}

fn negative_binomial_pmf(r: f64, p: f64, x: u32) -> f64 {
    // C(r+x-1, x) p^r (1-p)^x with real r, via ln Γ(r+x) − ln Γ(r) as a sum.
    let mut ln_ratio = 0.0f64;
    for j in 0..x {
        ln_ratio += (r + f64::from(j)).ln();
    }
    (ln_ratio - ln_factorial(x) + r * p.ln() + f64::from(x) * (1.0 - p).ln()).exp()
}

fn ln_factorial(k: u32) -> f64 {
    if (k as usize) < ln_fact::LN_FACT.len() {
        let (hi, lo) = ln_fact::LN_FACT[k as usize];
        hi + lo
    } else {
        let n = f64::from(k);
        (n + 0.5) * n.ln() - n + 0.918_938_533_204_672_8 + (1.0 / 12.0) / n
    }
}

// Truncated inverse-CDF table for the weighted Poisson: stop once the
// cumulative mass reaches 1 - 1e-12; the final cell absorbs the residual.
fn wp_cumulative_table(l: f64, a: f64, b: f64) -> Vec<f64> {
    let d = Poisson::new(l).expect("validated");
    let norm = wp_normalizer(l, a, b);
    let mut cum = Vec::with_capacity(64);
    let mut acc = 0.0f64;
    let mut y = 0u32;
    loop {
        let yf = f64::from(y);
        acc += d.pmf(y) * (a * yf * yf + b * yf + 1.0) / norm;
        cum.push(acc);
        if acc >= 1.0 - 1e-12 {
            break;
        }
        y += 1;
        assert!(y < 100_000, "weighted Poisson table failed to converge");
    }
    cum
}

fn sample_from_cumulative(cum: &[f64], rng: &mut ChaCha8Rng) -> u32 {
    let u: f64 = rng.gen();
    match cum.iter().position(|&c| u < c) {
        Some(idx) => idx as u32,
        None => (cum.len() - 1) as u32,
    }
}

fn pois_pmf(l: f64, x: u32) -> f64 {
    Poisson::new(l).expect("validated").pmf(x)
}

impl fmt::Display for AlternativeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AlternativeSpec::Poisson(l) => write!(f, "poisson({l})"),
            AlternativeSpec::Du(k) => write!(f, "du({k})"),
            AlternativeSpec::Bin(m, p) => write!(f, "bin({m},{p})"),
            AlternativeSpec::Nb(r, p) => write!(f, "nb({r},{p})"),
            AlternativeSpec::Pm(p, l1, l2) => write!(f, "pm({p},{l1},{l2})"),
            AlternativeSpec::Zip(p, l) => write!(f, "zip({p},{l})"),
            AlternativeSpec::Wp(l, a, b) => write!(f, "wp({l},{a},{b})"),
        }
    }
}

impl FromStr for AlternativeSpec {
    type Err = Error;

    /// Parse the canonical text form, e.g. `poisson(5)`, `du(6)`,
    /// `bin(10,0.2)`, `nb(3,0.75)`, `pm(0.2,1,5)`, `zip(0.8,3)`, `wp(2,1,1)`.
    /// Case-insensitive and whitespace-tolerant.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParseSpec {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim().to_ascii_lowercase();
        let open = t.find('(').ok_or_else(|| err("expected `name(args)`"))?;
        if !t.ends_with(')') {
            return Err(err("missing closing parenthesis"));
        }
        let name = t[..open].trim();
        let args: Vec<f64> = t[open + 1..t.len() - 1]
            .split(',')
            .map(|a| a.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err("arguments must be numbers"))?;

        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(err(&format!(
                    "expected {k} argument(s), got {}",
                    args.len()
                )))
            }
        };
        let as_count = |v: f64, what: &str| {
            if v.fract() == 0.0 && (0.0..=u32::MAX as f64).contains(&v) {
                Ok(v as u32)
            } else {
                Err(err(&format!("{what} must be a non-negative integer")))
            }
        };

        let spec = match name {
            "poisson" | "pois" | "p" => {
                arity(1)?;
                AlternativeSpec::Poisson(args[0])
            }
            "du" => {
                arity(1)?;
                AlternativeSpec::Du(as_count(args[0], "du upper bound")?)
            }
            "bin" | "b" | "binomial" => {
                arity(2)?;
                AlternativeSpec::Bin(as_count(args[0], "number of trials")?, args[1])
            }
            "nb" | "negbin" => {
                arity(2)?;
                AlternativeSpec::Nb(args[0], args[1])
            }
            "pm" => {
                arity(3)?;
                AlternativeSpec::Pm(args[0], args[1], args[2])
            }
            "zip" => {
                arity(2)?;
                AlternativeSpec::Zip(args[0], args[1])
            }
            "wp" => {
                arity(3)?;
                AlternativeSpec::Wp(args[0], args[1], args[2])
            }
            other => return Err(err(&format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fisher_index_closed_forms() {
        // Values printed alongside the power tables.
        let cases = [
            (AlternativeSpec::Poisson(0.5), 1.0),
            (AlternativeSpec::Poisson(10.0), 1.0),
            (AlternativeSpec::Du(4), 1.0),
            (AlternativeSpec::Du(6), 4.0 / 3.0),
            (AlternativeSpec::Bin(5, 0.25), 0.75),
            (AlternativeSpec::Bin(10, 0.1), 0.9),
            (AlternativeSpec::Nb(1.0, 0.5), 2.0),
            (AlternativeSpec::Nb(9.0, 0.9), 1.0 / 0.9),
            (AlternativeSpec::Pm(0.5, 3.0, 5.0), 1.25),
            (AlternativeSpec::Pm(0.2, 1.0, 5.0), 6.76 / 4.2),
            (AlternativeSpec::Zip(0.9, 3.0), 1.3),
            (AlternativeSpec::Zip(0.8, 3.0), 1.6),
        ];
        for (spec, want) in cases {
            let fi = spec.fisher_index().unwrap();
            assert!(
                (fi - want).abs() < 1e-12,
                "{spec}: fisher index {fi} != {want}"
            );
        }
    }

    #[test]
    fn fisher_index_of_zero_mean_spec_is_an_error() {
        assert!(AlternativeSpec::Du(0).fisher_index().is_err());
        assert!(AlternativeSpec::Zip(0.0, 3.0).fisher_index().is_err());
    }

    #[test]
    fn pmf_sums_to_one() {
        let specs = [
            AlternativeSpec::Poisson(5.0),
            AlternativeSpec::Du(6),
            AlternativeSpec::Bin(10, 0.2),
            AlternativeSpec::Nb(3.0, 0.75),
            AlternativeSpec::Nb(0.7, 0.4),
            AlternativeSpec::Pm(0.2, 1.0, 5.0),
            AlternativeSpec::Zip(0.8, 3.0),
            AlternativeSpec::Wp(2.0, 1.0, 1.0),
        ];
        for spec in specs {
            let mut acc = 0.0;
            let mut x = 0u32;
            while acc < 1.0 - 1e-12 && x < 10_000 {
                acc += spec.pmf(x);
                x += 1;
            }
            assert!((acc - 1.0).abs() < 1e-10, "{spec}: pmf sums to {acc}");
        }
    }

    #[test]
    fn canonical_text_round_trip() {
        let specs = [
            AlternativeSpec::Poisson(5.0),
            AlternativeSpec::Du(6),
            AlternativeSpec::Bin(10, 0.2),
            AlternativeSpec::Nb(3.0, 0.75),
            AlternativeSpec::Pm(0.2, 1.0, 5.0),
            AlternativeSpec::Zip(0.8, 3.0),
            AlternativeSpec::Wp(2.0, 1.0, 1.0),
        ];
        for spec in specs {
            let text = spec.to_string();
            let parsed: AlternativeSpec = text.parse().unwrap();
            assert_eq!(parsed, spec, "round trip through `{text}`");
        }
        // Tolerant forms.
        assert_eq!(
            " ZIP( 0.8 , 3 ) ".parse::<AlternativeSpec>().unwrap(),
            AlternativeSpec::Zip(0.8, 3.0)
        );
        assert!("nb(2, 2/3)".parse::<AlternativeSpec>().is_err());
        assert!("poisson(5)".parse::<AlternativeSpec>().is_ok());
        assert!("poisson(-1)".parse::<AlternativeSpec>().is_err());
        assert!("du(2.5)".parse::<AlternativeSpec>().is_err());
        assert!("frob(1)".parse::<AlternativeSpec>().is_err());
    }

    #[test]
    fn sample_matches_spec_moments() {
        // Spot checks against the published Fisher indices at n = 1e5.
        let handle = RngHandle::new(991, 0);
        let n = 100_000;

        let du = AlternativeSpec::Du(4)
            .sample(n, handle.substream(0))
            .unwrap();
        let mean = du.mean();
        assert!((mean - 2.0).abs() < 0.02, "du mean {mean}");
        assert!((du.fisher_index() - 1.0).abs() < 0.05);

        let zip = AlternativeSpec::Zip(0.8, 3.0)
            .sample(n, handle.substream(1))
            .unwrap();
        assert!((zip.mean() - 2.4).abs() < 0.03, "zip mean {}", zip.mean());
        assert!((zip.fisher_index() - 1.6).abs() < 0.05);

        let nb = AlternativeSpec::Nb(1.0, 0.5)
            .sample(n, handle.substream(2))
            .unwrap();
        assert!((nb.fisher_index() - 2.0).abs() < 0.05);
    }

    #[test]
    fn sampling_is_reproducible() {
        let spec = AlternativeSpec::Pm(0.2, 1.0, 5.0);
        let a = spec.sample(500, RngHandle::new(7, 3)).unwrap();
        let b = spec.sample(500, RngHandle::new(7, 3)).unwrap();
        assert_eq!(a.observations(), b.observations());
        let c = spec.sample(500, RngHandle::new(7, 4)).unwrap();
        assert_ne!(a.observations(), c.observations());
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(AlternativeSpec::Poisson(-1.0)
            .sample(10, RngHandle::new(0, 0))
            .is_err());
        assert!(AlternativeSpec::Zip(1.5, 3.0).validate().is_err());
        assert!(AlternativeSpec::Nb(0.0, 0.5).validate().is_err());
        assert!(AlternativeSpec::Wp(2.0, -0.1, 0.0).validate().is_err());
        assert!(AlternativeSpec::Bin(0, 0.5).validate().is_err());
    }
}
