use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use edgepoly::atlas::{find_xi_collisions, trees_up_to};
use edgepoly::{xi_expansion, MemoMode, XiEngine};
use edgepoly_bench::{complete, cycle, doubled_wheel, grid, petersen};

fn recurrence(c: &mut Criterion) {
    let mut group = c.benchmark_group("recurrence");
    group.sample_size(10);
    let graphs = [
        ("K5", complete(5)),
        ("C12", cycle(12)),
        ("grid3x3", grid(3, 3)),
        ("petersen", petersen()),
        ("doubled-wheel5", doubled_wheel(5)),
    ];
    for (name, g) in &graphs {
        for mode in [MemoMode::Canonical, MemoMode::Exact] {
            let id = BenchmarkId::new(format!("{mode:?}"), name);
            group.bench_with_input(id, g, |b, g| {
                b.iter(|| XiEngine::with_mode(mode).xi(black_box(g)))
            });
        }
    }
    group.finish();
}

fn expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("expansion");
    group.sample_size(10);
    for (name, g) in [("K5", complete(5)), ("grid3x3", grid(3, 3))] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| xi_expansion(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn canonical_key(c: &mut Criterion) {
    let g = petersen();
    c.bench_function("canonical_key/petersen", |b| b.iter(|| black_box(&g).canonical_key()));
    let k8 = complete(8);
    c.bench_function("canonical_key/K8", |b| b.iter(|| black_box(&k8).canonical_key()));
}

fn tree_atlas(c: &mut Criterion) {
    let trees = trees_up_to(9).unwrap();
    let mut group = c.benchmark_group("atlas");
    group.sample_size(10);
    group.bench_function("trees-up-to-9", |b| {
        b.iter(|| find_xi_collisions("trees", black_box(&trees), &XiEngine::new()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, recurrence, expansion, canonical_key, tree_atlas);
criterion_main!(benches);
