use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bdtorus::oracle::{brute_invariant_points, brute_radical, DEFAULT_CAP};
use bdtorus::random::{random_datum, rng, GcdMode};
use bdtorus::{packet_group, validate, Execution, Mat, RawConfig, StabilizationPolicy};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn swap() -> bdtorus::CoverDatum {
    validate(&RawConfig {
        rank: 2,
        inertia_gens: vec![],
        frobenius: vec![vec![0, 1], vec![1, 0]],
        q: 3,
        n: 2,
        q_upper: vec![vec![0, 1], vec![0, 0]],
    })
    .unwrap()
}

fn oracle_enumeration(c: &mut Criterion) {
    let d = swap();
    let mut group = c.benchmark_group("oracle_invariant_points");
    for m in [4u64, 6] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, m), &m, |b, &m| {
                b.iter(|| brute_invariant_points(&d, &Mat::identity(2), black_box(m), DEFAULT_CAP, exec).unwrap())
            });
        }
    }
    group.finish();

    let gram = Mat::from_rows(&[[2, 1, 0], [1, 2, 1], [0, 1, 2]]);
    let mut group = c.benchmark_group("oracle_radical");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| brute_radical(black_box(&gram), 12, DEFAULT_CAP, exec).unwrap()));
    }
    group.finish();
}

fn packet_group_batches(c: &mut Criterion) {
    let mut g = rng(2024);
    let data: Vec<_> = (0..24).map(|_| random_datum(&mut g, 4, GcdMode::Coprime)).collect();
    let policy = StabilizationPolicy::default();
    let mut group = c.benchmark_group("packet_group_batch");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| exec.map(&data, |d| packet_group(d, &policy, Execution::Sequential).map(|p| p.group)))
        });
    }
    group.finish();

    let d = swap();
    let mut group = c.benchmark_group("packet_group_levels");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| packet_group(black_box(&d), &policy, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, oracle_enumeration, packet_group_batches);
criterion_main!(benches);
