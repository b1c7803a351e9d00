use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use indigraph_bench::{context, GROUPS};
use indigraph_core::analysis::{clique_number, hamiltonian_cycle, independence_number, planarity};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("min_gen_sets");
    for &recipe in GROUPS {
        g.bench_with_input(BenchmarkId::from_parameter(recipe), recipe, |b, r| {
            b.iter(|| context(r).enumeration().unwrap().total())
        });
    }
    g.finish();
}

fn analysis(c: &mut Criterion) {
    for &recipe in GROUPS {
        let ctx = context(recipe);
        let delta = ctx.delta().unwrap().graph.clone();
        c.bench_with_input(BenchmarkId::new("planarity", recipe), &delta, |b, g| b.iter(|| planarity(g).planar));
        c.bench_with_input(BenchmarkId::new("clique", recipe), &delta, |b, g| {
            b.iter(|| clique_number(g, u64::MAX).unwrap().0)
        });
        c.bench_with_input(BenchmarkId::new("independence", recipe), &delta, |b, g| {
            b.iter(|| independence_number(g, u64::MAX).unwrap().0)
        });
        c.bench_with_input(BenchmarkId::new("hamiltonian", recipe), &delta, |b, g| {
            b.iter(|| hamiltonian_cycle(g, 10_000_000).unwrap().is_yes())
        });
    }
}

criterion_group! {
    name = kernels;
    config = Criterion::default().sample_size(10);
    targets = enumeration, analysis
}
criterion_main!(kernels);
