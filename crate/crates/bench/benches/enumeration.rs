use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use xclab_bench::{cycle, example_cnf, petersen};
use xclab_core::cutpoly::{clique_point, cut_polytope, mstar, pn_membership};
use xclab_core::graphs::{complete_graph, suspension};
use xclab_core::polyhedra::facet_enumeration;
use xclab_core::reductions::{make_cubic, sat_to_subsetsum, stab_polytope};
use xclab_core::xcbounds::{rect_cover_exact, suppmat};
use xclab_core::Budget;

fn polytopes(c: &mut Criterion) {
    let budget = Budget::default();
    let k5 = complete_graph(5).unwrap();
    c.bench_function("cut_polytope K8", |b| {
        let k8 = complete_graph(8).unwrap();
        b.iter(|| cut_polytope(black_box(&k8), &budget).unwrap())
    });
    c.bench_function("facets CUT(K5)", |b| {
        let p = cut_polytope(&k5, &budget).unwrap();
        b.iter(|| facet_enumeration(black_box(&p), &budget).unwrap())
    });
    c.bench_function("stab Petersen", |b| {
        let g = petersen();
        b.iter(|| stab_polytope(black_box(&g), &budget).unwrap())
    });
}

fn slack(c: &mut Criterion) {
    let budget = Budget::default();
    c.bench_function("mstar 6", |b| b.iter(|| mstar(black_box(6), &budget).unwrap()));
    let mut slow = c.benchmark_group("exact cover");
    slow.sample_size(10);
    slow.bench_function("rect cover mstar 4", |b| {
        let s = suppmat(&mstar(4, &budget).unwrap()).unwrap();
        b.iter(|| rect_cover_exact(black_box(&s), &budget).unwrap())
    });
    slow.finish();
    c.bench_function("pn membership C7 k=3", |b| {
        let g = suspension(&cycle(7));
        let x = clique_point(&g, 3).unwrap();
        b.iter(|| pn_membership(black_box(&x), g.vertex_count(), &budget).unwrap())
    });
}

fn reductions(c: &mut Criterion) {
    let budget = Budget::default();
    c.bench_function("sat2ss example", |b| {
        let f = example_cnf();
        b.iter(|| sat_to_subsetsum(black_box(&f), &budget).unwrap())
    });
    c.bench_function("make_cubic C5", |b| {
        let g = cycle(5);
        b.iter(|| make_cubic(black_box(&g), &budget).unwrap())
    });
}

criterion_group!(benches, polytopes, slack, reductions);
criterion_main!(benches);
