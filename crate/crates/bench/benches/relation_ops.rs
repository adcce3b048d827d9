use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use relforest_bench::seeded_relation;
use relforest_core::components::wcc;

fn bench_relation_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("relation");
    for n in [32, 128, 256] {
        let a = seeded_relation(n, 11);
        let b = seeded_relation(n, 12);
        group.bench_with_input(BenchmarkId::new("compose", n), &n, |bench, _| {
            bench.iter(|| a.compose(&b))
        });
        group.bench_with_input(BenchmarkId::new("star", n), &n, |bench, _| {
            bench.iter(|| a.star())
        });
        group.bench_with_input(BenchmarkId::new("wcc", n), &n, |bench, _| {
            bench.iter(|| wcc(&a))
        });
        group.bench_with_input(BenchmarkId::new("transpose", n), &n, |bench, _| {
            bench.iter(|| a.transpose())
        });
    }
    group.finish();

    c.bench_function("parse-print-128", |bench| {
        let text = seeded_relation(128, 13).to_string();
        bench.iter(|| {
            let r: relforest_core::relation::Relation = text.parse().unwrap();
            r.to_string()
        })
    });
}

criterion_group!(benches, bench_relation_ops);
criterion_main!(benches);
