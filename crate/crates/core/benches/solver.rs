use bklab_core::catalog;
use bklab_core::choosability::{
    is_f_choosable_sequential, is_f_choosable_with, FSpec, SolveOptions,
};
use bklab_core::graph::Graph;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn cases() -> Vec<(&'static str, Graph, FSpec)> {
    let k2_antichair = Graph::complete(2).join(&catalog::antichair()).unwrap();
    let k3_p4 = Graph::complete(3).join(&Graph::path(4)).unwrap();
    let e2_k2_p3 = catalog::e2n(1)
        .unwrap()
        .join(&Graph::complete(2).disjoint_union(&Graph::path(3)).unwrap())
        .unwrap();
    vec![
        ("k2*antichair d1", k2_antichair, FSpec::d1()),
        ("k3*p4 d1", k3_p4, FSpec::d1()),
        ("e2*(k2+p3) d1", e2_k2_p3, FSpec::d1()),
        ("n6 d1", catalog::n6(), FSpec::d1()),
    ]
}

fn bench_solver(c: &mut Criterion) {
    let opts = SolveOptions::default();
    let mut group = c.benchmark_group("choosability");
    group.sample_size(10);
    for (name, g, f) in cases() {
        group.bench_function(format!("{name}/default"), |b| {
            b.iter(|| black_box(is_f_choosable_with(&g, &f, &opts).unwrap().choosable))
        });
        group.bench_function(format!("{name}/sequential"), |b| {
            b.iter(|| black_box(is_f_choosable_sequential(&g, &f, &opts).unwrap().choosable))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_solver);
criterion_main!(benches);
