//! End-to-end tests of the `poisson-gof` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_poisson-gof"))
}

fn workspace_data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn stat_reproduces_published_sparrow_values() {
    let data = workspace_data("sparrow.csv");
    let out = run(&["stat", "--data", data.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("t1-fit\t0.37707056972736175"), "{text}");
    assert!(text.contains("t1-lap\t0.574269280003752"), "{text}");
    assert!(text.contains("kl\t1.3644732726263566"), "{text}");
}

#[test]
fn stat_reproduces_published_horse_kick_values() {
    let data = workspace_data("horsekicks.csv");
    let out = run(&[
        "stat",
        "--data",
        data.to_str().unwrap(),
        "--tests",
        "tinf-fit,t2-emp",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("tinf-fit\t0.0748566853903571"), "{text}");
    assert!(text.contains("t2-emp\t5.2816009040346135"), "{text}");
}

#[test]
fn test_command_reports_and_respects_alpha() {
    let data = workspace_data("sparrow.csv");
    let out = run(&[
        "test",
        "--data",
        data.to_str().unwrap(),
        "--tests",
        "tinf-fit,t2-emp",
        "--reps",
        "2000",
        "--alpha",
        "0.10",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lambda_hat = 1.1"), "{text}");
    assert!(text.contains("tinf-fit"), "{text}");
    // tinf-fit p ~ 0.017 -> reject at 0.10; t2-emp p ~ 0.27 -> keep.
    let lines: Vec<&str> = text.lines().collect();
    let tinf = lines.iter().find(|l| l.starts_with("tinf-fit")).unwrap();
    let t2 = lines.iter().find(|l| l.starts_with("t2-emp")).unwrap();
    assert!(tinf.ends_with("reject"), "{tinf}");
    assert!(t2.ends_with("keep"), "{t2}");
}

#[test]
fn degenerate_dataset_gets_unit_pvalues() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.csv");
    std::fs::write(&path, "0\n").unwrap();
    let out = run(&["test", "--data", path.to_str().unwrap(), "--reps", "200"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("every p-value is 1"), "{text}");
    assert!(text.contains("1.0000  keep"), "{text}");
}

#[test]
fn raw_and_frequency_formats_give_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let freq = dir.path().join("freq.csv");
    std::fs::write(&freq, "0,2\n1,1\n3,1\n").unwrap();
    let raw = dir.path().join("raw.csv");
    std::fs::write(&raw, "3\n0\n1\n0\n").unwrap();
    let args = |p: &Path| {
        vec![
            "test".to_string(),
            "--data".into(),
            p.to_str().unwrap().into(),
            "--reps".into(),
            "500".into(),
            "--seed".into(),
            "11".into(),
            "--format".into(),
            "csv".into(),
        ]
    };
    let a = bin().args(args(&freq)).output().unwrap();
    let b = bin().args(args(&raw)).output().unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn jsonl_output_is_parseable() {
    let data = workspace_data("sparrow.csv");
    let out = run(&[
        "test",
        "--data",
        data.to_str().unwrap(),
        "--tests",
        "ks",
        "--reps",
        "200",
        "--format",
        "jsonl",
    ]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.is_object());
    }
}

#[test]
fn power_runs_from_config_and_round_trips_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("study.toml");
    std::fs::write(
        &config,
        r#"
alternatives = ["poisson(1)", "nb(1,0.5)"]
sample_sizes = [30]
statistics = ["t1-lap", "ad"]
replications = 400
alpha = 0.05
seed = 99
"#,
    )
    .unwrap();
    let out_csv = dir.path().join("table.csv");
    let out = run(&[
        "power",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_csv.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("alternative"), "{text}");
    assert!(text.contains("nb(1,0.5)"), "{text}");
    // Human table marks each row maximum.
    assert!(text.contains('*'), "{text}");

    let csv_text = std::fs::read_to_string(&out_csv).unwrap();
    assert!(csv_text.starts_with("alternative,fisher_index,n,statistic,power_pct,M,alpha,seed"));
    assert!(csv_text.contains("\"nb(1,0.5)\""));
}

#[test]
fn power_is_byte_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("study.toml");
    std::fs::write(
        &config,
        r#"
alternatives = ["zip(0.8,3)"]
sample_sizes = [30]
statistics = ["all"]
replications = 300
seed = 5
"#,
    )
    .unwrap();
    let mut outputs = Vec::new();
    for workers in ["1", "4", "8"] {
        let out_csv = dir.path().join(format!("table-{workers}.csv"));
        let out = run(&[
            "power",
            "--config",
            config.to_str().unwrap(),
            "--out",
            out_csv.to_str().unwrap(),
            "--workers",
            workers,
        ]);
        assert!(out.status.success());
        outputs.push(std::fs::read(&out_csv).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[1], outputs[2]);
}

#[test]
fn presets_are_available_and_validate() {
    // Smoke-test the desk preset config by asking for a bad preset first.
    let out = run(&["power", "--preset", "no-such-preset"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unknown preset"), "{err}");
}

#[test]
fn exit_codes_distinguish_parse_and_domain_errors() {
    // Unknown flag: usage error, code 1 (clap).
    let out = run(&["test", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));

    // Unreadable dataset path: parse error, code 1.
    let out = run(&["stat", "--data", "/nonexistent/file.csv"]);
    assert_eq!(out.status.code(), Some(1));

    // Malformed dataset content with a line number: code 1.
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "1\nnot-a-number\n").unwrap();
    let out = run(&["stat", "--data", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    // Structurally valid config with out-of-domain numbers: code 2.
    let config = dir.path().join("bad.toml");
    std::fs::write(
        &config,
        r#"
alternatives = ["poisson(-3)"]
sample_sizes = [30]
statistics = ["all"]
replications = 400
"#,
    )
    .unwrap();
    let out = run(&["power", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown config key: schema violation, code 1, names the key.
    let config2 = dir.path().join("unknown-key.toml");
    std::fs::write(
        &config2,
        r#"
alternatives = ["poisson(3)"]
sample_sizes = [30]
statistics = ["all"]
replications = 400
frobnicate = true
"#,
    )
    .unwrap();
    let out = run(&["power", "--config", config2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("frobnicate"));

    // Bad alpha on test: domain error, code 2.
    let data = workspace_data("sparrow.csv");
    let out = run(&[
        "test",
        "--data",
        data.to_str().unwrap(),
        "--alpha",
        "1.5",
        "--reps",
        "200",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
