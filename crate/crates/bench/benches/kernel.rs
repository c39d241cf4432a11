use beatty_bench::{operand, DIGITS};
use beatty_core::kernel::{beatty_f, frac_compare, kronecker_witness};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn bench_beatty_f(c: &mut Criterion) {
    let mut g = c.benchmark_group("beatty_f");
    for d in DIGITS {
        let x = operand(d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &x, |b, x| {
            b.iter(|| beatty_f(black_box(x)))
        });
    }
    g.finish();
}

fn bench_frac_compare(c: &mut Criterion) {
    let mut g = c.benchmark_group("frac_compare");
    for d in DIGITS {
        let x = operand(d);
        let y = &x + 1;
        g.bench_with_input(BenchmarkId::from_parameter(d), &(x, y), |b, (x, y)| {
            b.iter(|| frac_compare(black_box(x), black_box(y)))
        });
    }
    g.finish();
}

fn bench_witness(c: &mut Criterion) {
    let mut g = c.benchmark_group("kronecker_witness");
    for d in DIGITS {
        let (x, y) = (operand(d), operand(d) + 1);
        g.bench_with_input(BenchmarkId::from_parameter(d), &(x, y), |b, (x, y)| {
            b.iter(|| kronecker_witness(black_box(x), black_box(y)))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_beatty_f, bench_frac_compare, bench_witness);
criterion_main!(benches);
