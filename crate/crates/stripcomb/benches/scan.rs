//! Compares the parallel and sequential grid-evaluation paths on a realistic
//! workload: running a batch of identity checks over their default grids.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use stripcomb::verify::{default_grid, run_check, Params};
use stripcomb::{maybe_par_map, seq_map};

fn workload() -> Vec<(&'static str, Params)> {
    let mut grid = Vec::new();
    for id in ["dyck-gf", "hankel-reciprocity", "toeplitz-reciprocity", "hankel-eval"] {
        for params in default_grid(id) {
            grid.push((id, params));
        }
    }
    grid
}

fn bench_scan(c: &mut Criterion) {
    let grid = workload();
    let mut group = c.benchmark_group("grid-scan");
    group.sample_size(10);

    group.bench_function("seq_map", |b| {
        b.iter_batched(
            || grid.clone(),
            |items| seq_map(items, |(id, p)| run_check(id, &p).unwrap().verdict),
            BatchSize::LargeInput,
        )
    });
    group.bench_function("maybe_par_map-all-cores", |b| {
        b.iter_batched(
            || grid.clone(),
            |items| maybe_par_map(items, 0, |(id, p)| run_check(id, &p).unwrap().verdict),
            BatchSize::LargeInput,
        )
    });
    group.bench_function("maybe_par_map-one-job", |b| {
        b.iter_batched(
            || grid.clone(),
            |items| maybe_par_map(items, 1, |(id, p)| run_check(id, &p).unwrap().verdict),
            BatchSize::LargeInput,
        )
    });

    group.finish();
}

criterion_group!(benches, bench_scan);
criterion_main!(benches);
