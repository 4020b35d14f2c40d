//! Goodness-of-fit tests for the Poisson distribution based on the empirical
//! weight function, together with classical EDF competitors, parametric
//! bootstrap p-values and a warp-speed Monte Carlo power-study engine.
//!
//! The test statistics measure weighted `L1`, `L2` and `L∞` distances between
//! the empirical weight function `w*(x) = f_n(x) / f_λ̂(x)` and the constant
//! function 1, under three summable weights: the fitted Poisson pmf, the
//! empirical pmf and an exponential (Laplace-type) kernel `e^{-ax}`.
//!
//! Layout:
//! - [`distributions`]: exact Poisson pmf/cdf, samplers for the null and the
//!   alternative families used in power studies, Fisher indices.
//! - [`empirical`]: count samples, frequency tables, MLE and `w*`.
//! - [`statistics`]: the nine weighted-distance statistics and five classical
//!   competitors as pure functions of (sample, fitted mean).
//! - [`bootstrap`]: parametric-bootstrap p-values and the warp-speed power
//!   engine (data-parallel with rayon by default; build with
//!   `--no-default-features` for the sequential fallback).

pub mod bootstrap;
pub mod distributions;
pub mod empirical;
mod error;
pub mod rng;
pub mod statistics;

pub use bootstrap::{BootstrapOutcome, PowerStudyConfig, PowerTable};
pub use distributions::{AlternativeSpec, Poisson};
pub use empirical::{CountSample, FittedNull};
pub use error::{Error, Result};
pub use rng::RngHandle;
pub use statistics::{FitContext, StatValue, StatisticId};
