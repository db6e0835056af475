use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lda_core::graph::{generate, FamilySpec};
use lda_core::solver::{chi_exact, chi_ld_exact, SearchBudget};

fn cycles_and_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("chi_ld_exact");
    group.sample_size(10);
    for n in [6, 8, 10] {
        let cycle = generate(&FamilySpec::Cycle(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("cycle", n), &cycle, |b, g| {
            b.iter(|| chi_ld_exact(black_box(g), SearchBudget::default()).unwrap())
        });
        let path = generate(&FamilySpec::Path(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("path", n), &path, |b, g| {
            b.iter(|| chi_ld_exact(black_box(g), SearchBudget::default()).unwrap())
        });
    }
    let wheel = generate(&FamilySpec::Wheel(7)).unwrap();
    for threads in [1, 4] {
        group.bench_with_input(
            BenchmarkId::new("wheel7_threads", threads),
            &wheel,
            |b, g| {
                b.iter(|| {
                    chi_ld_exact(black_box(g), SearchBudget::default().with_threads(threads))
                        .unwrap()
                })
            },
        );
    }
    group.finish();
}

fn chromatic(c: &mut Criterion) {
    let g = generate(&FamilySpec::CompleteMultipartite(vec![3, 3, 3, 3])).unwrap();
    c.bench_function("chi_exact/k3333", |b| {
        b.iter(|| chi_exact(black_box(&g)).unwrap())
    });
}

criterion_group!(benches, cycles_and_paths, chromatic);
criterion_main!(benches);
