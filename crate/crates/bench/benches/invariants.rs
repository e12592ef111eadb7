use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use knotforge::invariants::{bracket_state_sum, colorings, conway, conway_via_alexander, kauffman_bracket};
use knotforge_bench::{census_knot, twisted};

fn bracket(c: &mut Criterion) {
    let mut g = c.benchmark_group("bracket");
    for name in ["3_1", "5_2", "6_1"] {
        let d = census_knot(name);
        g.bench_with_input(BenchmarkId::new("sweep", name), &d, |b, d| b.iter(|| kauffman_bracket(black_box(d)).unwrap()));
        g.bench_with_input(BenchmarkId::new("state_sum", name), &d, |b, d| b.iter(|| bracket_state_sum(black_box(d)).unwrap()));
    }
    let big = twisted("6_1", 4);
    g.bench_with_input(BenchmarkId::new("sweep", format!("6_1+4 twists ({} crossings)", big.crossing_count())), &big, |b, d| {
        b.iter(|| kauffman_bracket(black_box(d)).unwrap())
    });
    g.finish();
}

fn conway_paths(c: &mut Criterion) {
    let mut g = c.benchmark_group("conway");
    for d in [census_knot("6_2"), twisted("5_2", 3)] {
        let label = format!("{} crossings", d.crossing_count());
        g.bench_with_input(BenchmarkId::new("skein", &label), &d, |b, d| b.iter(|| conway(black_box(d))));
        g.bench_with_input(BenchmarkId::new("alexander", &label), &d, |b, d| b.iter(|| conway_via_alexander(black_box(d)).unwrap()));
    }
    g.finish();
}

fn coloring_counts(c: &mut Criterion) {
    let d = twisted("6_3", 3);
    c.bench_function("colorings:6 via smith normal form", |b| b.iter(|| colorings(black_box(&d), 6).unwrap()));
}

criterion_group!(benches, bracket, conway_paths, coloring_counts);
criterion_main!(benches);
