//! Sequential against rayon-parallel execution of the heavier sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use imocheck::c1::checks;
use imocheck::n1;
use imocheck::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn n1_classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("n1_classify_2_to_2000");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                exec.map_range(2..2001, |a0| {
                    n1::classify(a0, n1::default_budget(a0)).map(|t| t.classification)
                })
            })
        });
    }
    group.finish();
}

fn c1_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("c1_counting_max_12");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| checks::check_counting(black_box(12), exec))
        });
    }
    group.finish();
}

fn c1_exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("c1_theorem_exhaustive_area_15");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| checks::check_theorem_exhaustive(black_box(15), exec))
        });
    }
    group.finish();
}

fn c1_parity(c: &mut Criterion) {
    let mut group = c.benchmark_group("c1_parity_lemma_max_9");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| checks::check_parity_lemma(black_box(9), exec))
        });
    }
    group.finish();
}

criterion_group!(benches, n1_classification, c1_counting, c1_exhaustive, c1_parity);
criterion_main!(benches);
