//! Sequential against data-parallel execution of the main engines.
//!
//! The `sequential` variants run inside a one-thread rayon pool; building with
//! `--no-default-features` removes rayon entirely.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liecoh::catalog;
use liecoh::cechain::ce_cohomology;
use liecoh::leibniz::{leibniz_cohomology, LeibnizComplexSpec};
use liecoh::verify::{self, CheckOptions, HuntConfig};
use liecoh::{LieAlgebra, Representation};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let default = rayon::ThreadPoolBuilder::new().build().unwrap();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    vec![("sequential", single), ("parallel", default)]
}

fn ce_adjoint(g: &LieAlgebra) -> Vec<usize> {
    ce_cohomology(g, &Representation::adjoint(g), false).unwrap().betti
}

fn leibniz_adjoint(g: &LieAlgebra, degree: usize) -> Vec<usize> {
    let m = Representation::adjoint(g);
    leibniz_cohomology(&LeibnizComplexSpec::new(g, &m).with_max_degree(degree))
        .unwrap()
        .betti
}

fn bench_engines(c: &mut Criterion) {
    let affine = catalog::affine(2);
    let semidirect = catalog::sl2_semidirect_heisenberg();
    let sl2 = catalog::sl2();
    let hunt = HuntConfig {
        family: "random-semidirect".into(),
        count: 8,
        seed: 7,
        checks: vec!["prop2.5".into(), "thm4.1".into()],
        options: CheckOptions::default(),
    };
    let mut group = c.benchmark_group("engine");
    group.sample_size(10);
    for (label, pool) in pools() {
        group.bench_with_input(BenchmarkId::new("ce_adjoint_affine2", label), &affine, |b, g| {
            b.iter(|| pool.install(|| black_box(ce_adjoint(g))))
        });
        group.bench_with_input(BenchmarkId::new("ce_adjoint_sl2_h3", label), &semidirect, |b, g| {
            b.iter(|| pool.install(|| black_box(ce_adjoint(g))))
        });
        group.bench_with_input(BenchmarkId::new("leibniz_adjoint_sl2_deg4", label), &sl2, |b, g| {
            b.iter(|| pool.install(|| black_box(leibniz_adjoint(g, 4))))
        });
        group.bench_with_input(BenchmarkId::new("hunt_semidirect_8", label), &hunt, |b, cfg| {
            b.iter(|| pool.install(|| black_box(verify::hunt(cfg).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_engines);
criterion_main!(benches);
