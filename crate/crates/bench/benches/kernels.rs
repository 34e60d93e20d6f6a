use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use superbott_bench::{e1_specs, lr_triples, rational_inputs, tensor_pairs};
use superbott_core::characters::{lr_coefficient, rational_tensor_with_shift};
use superbott_core::cohomology::{e1_page_detailed, E1Options};
use superbott_core::superschur::rational_schur_char;

// LR coefficients are memoized, so those numbers are cache hits after the
// first iteration. `rational_tensor_with_shift` skips the tensor table.

fn lr(c: &mut Criterion) {
    let mut g = c.benchmark_group("lr_coefficient");
    for (lam, mu, nu) in lr_triples() {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{lam}*{mu}->{nu}")), &(lam, mu, nu), |b, (l, m, n)| {
            b.iter(|| lr_coefficient(black_box(l), black_box(m), black_box(n)))
        });
    }
    g.finish();
}

fn tensor(c: &mut Criterion) {
    let mut g = c.benchmark_group("rational_tensor");
    for (a, w) in tensor_pairs() {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{a}x{w}")), &(a, w), |b, (a, w)| {
            b.iter(|| rational_tensor_with_shift(black_box(a), black_box(w), 17).unwrap())
        });
    }
    g.finish();
}

fn e1(c: &mut Criterion) {
    let mut g = c.benchmark_group("e1_page");
    g.sample_size(20);
    for spec in e1_specs() {
        g.bench_with_input(BenchmarkId::from_parameter(spec.to_string()), &spec, |b, s| {
            b.iter(|| e1_page_detailed(black_box(s), E1Options::default()).unwrap())
        });
    }
    g.finish();
}

fn rational(c: &mut Criterion) {
    let mut g = c.benchmark_group("rational_schur_char");
    for (lam, mu, d) in rational_inputs() {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{lam};{mu} on {d}")), &(lam, mu, d), |b, (l, m, d)| {
            b.iter(|| rational_schur_char(black_box(l), black_box(m), *d).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, lr, tensor, e1, rational);
criterion_main!(benches);
