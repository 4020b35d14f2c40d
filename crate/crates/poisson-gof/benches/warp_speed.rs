//! Compares the sequential and rayon-parallel Monte Carlo paths on a small
//! power-study grid and a single-dataset bootstrap. Both paths produce
//! bit-identical tables; the benchmark quantifies the speedup.

use criterion::{criterion_group, criterion_main, Criterion};
use poisson_gof::bootstrap::{
    bootstrap_report, bootstrap_report_sequential, warp_speed_power, warp_speed_power_sequential,
};
use poisson_gof::{AlternativeSpec, CountSample, PowerStudyConfig, RngHandle, StatisticId};

fn bench_config() -> PowerStudyConfig {
    PowerStudyConfig {
        alternatives: vec![
            AlternativeSpec::Nb(1.0, 0.5),
            AlternativeSpec::Zip(0.8, 3.0),
        ],
        sample_sizes: vec![50],
        statistics: StatisticId::all(1.0),
        replications: 500,
        alpha: 0.05,
        seed: 7,
    }
}

fn sparrow() -> CountSample {
    CountSample::from_frequencies(&[(0, 9), (1, 22), (2, 6), (3, 2), (4, 1)]).unwrap()
}

fn bench_warp_speed(c: &mut Criterion) {
    let config = bench_config();
    let mut group = c.benchmark_group("warp_speed_power");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| warp_speed_power_sequential(&config).unwrap())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| warp_speed_power(&config).unwrap())
    });
    group.finish();
}

fn bench_bootstrap(c: &mut Criterion) {
    let sample = sparrow();
    let ids = StatisticId::all(1.0);
    let handle = RngHandle::new(7, 0);
    let mut group = c.benchmark_group("bootstrap_report_b2000");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| bootstrap_report_sequential(&sample, &ids, 2000, handle).unwrap())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| bootstrap_report(&sample, &ids, 2000, handle).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_warp_speed, bench_bootstrap);
criterion_main!(benches);
