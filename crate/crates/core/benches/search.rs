//! One worker thread against the default rayon pool on a few mid-sized
//! searches. Build with `--no-default-features` to time the sequential
//! fallback alone.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use metdim_core::{expr, metric_dimension, SearchOptions};

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("metric_dimension");
    group.sample_size(10);
    for e in ["pg2(3)", "hadamard(12,paley1)", "knn_minus_i(14)", "named(tutte_8_cage)"] {
        let g = expr::build(e).expect("valid expression");
        for (label, threads) in [("sequential", Some(1)), ("parallel", None)] {
            let opts = SearchOptions { threads, deterministic: true, ..SearchOptions::default() };
            group.bench_with_input(BenchmarkId::new(label, e), &g, |b, g| b.iter(|| metric_dimension(g, &opts).expect("search succeeds").dimension));
        }
    }
    group.finish();
}

criterion_group!(benches, search);
criterion_main!(benches);
