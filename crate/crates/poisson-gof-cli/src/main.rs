//! `poisson-gof`: test count datasets against the Poisson hypothesis and run
//! warp-speed bootstrap power studies.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 numeric/domain error.

mod dataset;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use poisson_gof::bootstrap::{bootstrap_report, warp_speed_power};
use poisson_gof::statistics::DEFAULT_LAPLACE_A;
use poisson_gof::{Error as GofError, PowerStudyConfig, PowerTable, StatisticId};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "poisson-gof", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run goodness-of-fit tests with parametric-bootstrap p-values.
    Test(TestArgs),
    /// Print statistic values only (no bootstrap).
    Stat(StatArgs),
    /// Run a warp-speed bootstrap power study from a config file or preset.
    Power(PowerArgs),
}

#[derive(Args)]
struct TestArgs {
    /// Dataset file: one count per line, or `value,count` lines; `#` comments.
    #[arg(long)]
    data: PathBuf,
    /// Comma-separated statistic names, or `all`.
    #[arg(long, default_value = "all")]
    tests: String,
    /// Bootstrap replications B.
    #[arg(long, default_value_t = 10_000)]
    reps: u64,
    /// Significance level used for the reported decisions.
    #[arg(long, default_value_t = 0.10)]
    alpha: f64,
    #[arg(long, default_value_t = 20_240_601)]
    seed: u64,
    /// Tuning parameter of the exponential weight for the *-lap statistics.
    #[arg(long, default_value_t = DEFAULT_LAPLACE_A)]
    laplace_a: f64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Worker threads (0 = all available cores).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct StatArgs {
    #[arg(long)]
    data: PathBuf,
    #[arg(long, default_value = "all")]
    tests: String,
    #[arg(long, default_value_t = DEFAULT_LAPLACE_A)]
    laplace_a: f64,
}

#[derive(Args)]
struct PowerArgs {
    /// Study definition (TOML). Exactly one of --config/--preset.
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Built-in study: paper-n30, paper-n50, paper-n100 or desk.
    #[arg(long)]
    preset: Option<String>,
    /// Write the CSV table here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Human,
    Csv,
    Jsonl,
}

enum CliError {
    /// Unreadable/invalid input files or malformed flag values: exit 1.
    Usage(String),
    /// Structurally valid input with out-of-domain numbers: exit 2.
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<GofError> for CliError {
    fn from(e: GofError) -> Self {
        match e {
            GofError::ParseSpec { .. } | GofError::UnknownStatistic(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message (also for --help/--version).
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match cli.command {
        Command::Test(args) => cmd_test(args),
        Command::Stat(args) => cmd_stat(args),
        Command::Power(args) => cmd_power(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn parse_tests(list: &str, laplace_a: f64) -> Result<Vec<StatisticId>, CliError> {
    if laplace_a <= 0.0 || !laplace_a.is_finite() {
        return Err(CliError::Domain(format!(
            "--laplace-a must be positive, got {laplace_a}"
        )));
    }
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(StatisticId::all(laplace_a));
    }
    list.split(',')
        .map(|name| StatisticId::from_name(name, laplace_a).map_err(CliError::from))
        .collect()
}

fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    if workers == 0 {
        Ok(f())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| CliError::Domain(format!("cannot build thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

fn cmd_test(args: TestArgs) -> Result<(), CliError> {
    if !(args.alpha > 0.0 && args.alpha < 1.0) {
        return Err(CliError::Domain(format!(
            "--alpha must lie strictly between 0 and 1, got {}",
            args.alpha
        )));
    }
    let sample = dataset::load(&args.data)?;
    let ids = parse_tests(&args.tests, args.laplace_a)?;
    let handle = poisson_gof::RngHandle::new(args.seed, 0);
    let outcomes = in_pool(args.workers, || {
        bootstrap_report(&sample, &ids, args.reps, handle)
    })?
    .map_err(CliError::from)?;
    let report = report::RunReport::new(
        &args.data, &sample, args.alpha, args.reps, args.seed, &outcomes,
    );
    match args.format {
        Format::Human => print!("{}", report.render_human()),
        Format::Csv => print!("{}", report.render_csv()),
        Format::Jsonl => print!("{}", report.render_jsonl()),
    }
    Ok(())
}

fn cmd_stat(args: StatArgs) -> Result<(), CliError> {
    let sample = dataset::load(&args.data)?;
    let ids = parse_tests(&args.tests, args.laplace_a)?;
    let ctx = poisson_gof::FitContext::from_sample(&sample);
    for id in ids {
        let value = poisson_gof::statistics::compute(id, &ctx).value;
        println!("{}\t{}", id.name(), value);
    }
    Ok(())
}

fn cmd_power(args: PowerArgs) -> Result<(), CliError> {
    let toml_text = match (&args.config, &args.preset) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?,
        (None, Some(name)) => preset_toml(name)?.to_string(),
        (None, None) | (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "power requires exactly one of --config PATH or --preset NAME".into(),
            ))
        }
    };
    let config = parse_power_config(&toml_text)?;
    let table = in_pool(args.workers, || warp_speed_power(&config))?.map_err(CliError::from)?;

    if let Some(out) = &args.out {
        write_csv_file(&table, out)?;
    }
    match args.format {
        Format::Human => print!("{}", table.render_human()),
        Format::Csv => {
            print!("{}", table.to_csv_string().map_err(CliError::from)?)
        }
        Format::Jsonl => {
            for row in &table.rows {
                for (id, pct) in table.statistics.iter().zip(&row.power_pct) {
                    let line = serde_json::json!({
                        "alternative": row.alternative.to_string(),
                        "fisher_index": row.fisher_index,
                        "n": row.n,
                        "statistic": id.name(),
                        "power_pct": pct,
                        "M": table.replications,
                        "alpha": table.alpha,
                        "seed": table.seed,
                    });
                    println!("{line}");
                }
            }
        }
    }
    Ok(())
}

fn write_csv_file(table: &PowerTable, out: &Path) -> Result<(), CliError> {
    let file = std::fs::File::create(out)
        .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", out.display())))?;
    table
        .write_csv(std::io::BufWriter::new(file))
        .map_err(CliError::from)
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPowerConfig {
    alternatives: Vec<String>,
    sample_sizes: Vec<u32>,
    statistics: Vec<String>,
    replications: u64,
    #[serde(default = "default_alpha")]
    alpha: f64,
    #[serde(default)]
    seed: u64,
    #[serde(default = "default_laplace_a")]
    laplace_a: f64,
}

fn default_alpha() -> f64 {
    0.05
}

fn default_laplace_a() -> f64 {
    DEFAULT_LAPLACE_A
}

fn parse_power_config(text: &str) -> Result<PowerStudyConfig, CliError> {
    let raw: RawPowerConfig = toml::from_str(text)
        .map_err(|e| CliError::Usage(format!("config schema violation: {e}")))?;
    let alternatives = raw
        .alternatives
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::from)?;
    let mut statistics = Vec::new();
    for name in &raw.statistics {
        if name.trim().eq_ignore_ascii_case("all") {
            statistics.extend(StatisticId::all(raw.laplace_a));
        } else {
            statistics.push(StatisticId::from_name(name, raw.laplace_a).map_err(CliError::from)?);
        }
    }
    let config = PowerStudyConfig {
        alternatives,
        sample_sizes: raw.sample_sizes,
        statistics,
        replications: raw.replications,
        alpha: raw.alpha,
        seed: raw.seed,
    };
    config.validate().map_err(CliError::from)?;
    Ok(config)
}

fn preset_toml(name: &str) -> Result<&'static str, CliError> {
    Ok(match name {
        "paper-n30" => include_str!("../presets/paper-n30.toml"),
        "paper-n50" => include_str!("../presets/paper-n50.toml"),
        "paper-n100" => include_str!("../presets/paper-n100.toml"),
        "desk" => include_str!("../presets/desk.toml"),
        other => {
            return Err(CliError::Usage(format!(
                "unknown preset `{other}` (available: paper-n30, paper-n50, paper-n100, desk)"
            )))
        }
    })
}
