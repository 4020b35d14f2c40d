//! Rendering of single-dataset test reports.

use poisson_gof::bootstrap::BootstrapOutcome;
use poisson_gof::empirical::mle_lambda;
use poisson_gof::CountSample;
use std::path::Path;

pub struct RunReport {
    dataset: String,
    n: usize,
    max: u32,
    lambda_hat: f64,
    /// Sample variance-to-mean ratio; `None` when undefined (all zeros).
    fisher_index: Option<f64>,
    alpha: f64,
    replications: u64,
    seed: u64,
    degenerate: bool,
    rows: Vec<Row>,
}

struct Row {
    name: &'static str,
    statistic: f64,
    p_value: f64,
    reject: bool,
}

impl RunReport {
    pub fn new(
        path: &Path,
        sample: &CountSample,
        alpha: f64,
        replications: u64,
        seed: u64,
        outcomes: &[BootstrapOutcome],
    ) -> RunReport {
        let fit = mle_lambda(sample);
        let fi = sample.fisher_index();
        RunReport {
            dataset: path.display().to_string(),
            n: sample.n(),
            max: sample.max(),
            lambda_hat: fit.lambda_hat(),
            fisher_index: if fi.is_nan() { None } else { Some(fi) },
            alpha,
            replications,
            seed,
            degenerate: fit.is_degenerate(),
            rows: outcomes
                .iter()
                .map(|o| Row {
                    name: o.id.name(),
                    statistic: o.statistic,
                    p_value: o.p_value,
                    reject: o.reject_at(alpha),
                })
                .collect(),
        }
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("dataset: {}\n", self.dataset));
        let fi = match self.fisher_index {
            Some(v) => format!("{v:.4}"),
            None => "n/a".into(),
        };
        out.push_str(&format!(
            "n = {}, max = {}, lambda_hat = {}, sample fisher index = {}\n",
            self.n, self.max, self.lambda_hat, fi
        ));
        out.push_str(&format!(
            "B = {}, alpha = {}, seed = {}\n",
            self.replications, self.alpha, self.seed
        ));
        if self.degenerate {
            out.push_str(
                "all observations are zero: the fitted null is a point mass at 0 and every p-value is 1\n",
            );
        }
        out.push('\n');
        out.push_str(&format!(
            "{:<10} {:>14} {:>10}  decision\n",
            "statistic", "value", "p-value"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "{:<10} {:>14.6} {:>10.4}  {}\n",
                row.name,
                row.statistic,
                row.p_value,
                if row.reject { "reject" } else { "keep" }
            ));
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("statistic,value,p_value,reject\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.name, row.statistic, row.p_value, row.reject
            ));
        }
        out
    }

    pub fn render_jsonl(&self) -> String {
        let mut out = String::new();
        let summary = serde_json::json!({
            "dataset": self.dataset,
            "n": self.n,
            "max": self.max,
            "lambda_hat": self.lambda_hat,
            "sample_fisher_index": self.fisher_index,
            "B": self.replications,
            "alpha": self.alpha,
            "seed": self.seed,
            "degenerate": self.degenerate,
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        for row in &self.rows {
            let line = serde_json::json!({
                "statistic": row.name,
                "value": row.statistic,
                "p_value": row.p_value,
                "reject": row.reject,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}
