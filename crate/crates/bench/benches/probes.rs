use criterion::{criterion_group, criterion_main, Criterion};
use knotforge::census::census_diagrams;
use knotforge::finitetype::{probe_finite_type, probe_nq_finite, region_enumerator, ProbeOptions};
use knotforge::{Evaluator, InvariantSpec};
use knotforge_bench::census_knot;

fn probes(c: &mut Criterion) {
    let corpus = census_diagrams().unwrap();
    let opts = ProbeOptions { budget: u64::MAX, ..ProbeOptions::default() };
    let mut g = c.benchmark_group("probe");
    g.sample_size(10);
    g.bench_function("ft a:3 order 3 census", |b| {
        b.iter(|| probe_finite_type(&mut Evaluator::new(), &InvariantSpec::Vassiliev(3), &corpus, 3, opts).unwrap())
    });
    g.bench_function("nq colorings:4 order 0 q=2 census", |b| {
        b.iter(|| probe_nq_finite(&mut Evaluator::new(), &InvariantSpec::Colorings(4), &corpus, 2, 2, 0, false, opts).unwrap())
    });
    g.finish();
    let d = census_knot("6_1");
    c.bench_function("regions up to 4 strands on 6_1", |b| b.iter(|| region_enumerator(&d, 4, 1, false)));
}

criterion_group!(benches, probes);
criterion_main!(benches);
