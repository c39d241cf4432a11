use beatty_bench::{box_sentence, far_interval};
use beatty_core::extrema::{brute_arg_min, Extrema};
use beatty_core::formula::{Evaluator, Parser};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

const WIDTHS: [i64; 4] = [16, 256, 4096, 65536];

fn bench_argmin(c: &mut Criterion) {
    let fast = Extrema { brute_threshold: 0 };
    let mut g = c.benchmark_group("argmin");
    for w in WIDTHS {
        let iv = far_interval(w);
        g.bench_with_input(BenchmarkId::new("peeling", w), &iv, |b, iv| {
            b.iter(|| fast.arg_min(black_box(iv)))
        });
        if w <= 4096 {
            g.bench_with_input(BenchmarkId::new("scan", w), &iv, |b, iv| {
                b.iter(|| brute_arg_min(black_box(iv)))
            });
        }
    }
    g.finish();
}

fn bench_decide(c: &mut Criterion) {
    let mut g = c.benchmark_group("decide_box");
    for w in [50i64, 500] {
        let phi = Parser::default()
            .parse_sentence(&box_sentence(w))
            .expect("fixture parses");
        g.bench_with_input(BenchmarkId::new("fast", w), &phi, |b, phi| {
            b.iter(|| Evaluator::default().decide(black_box(phi)))
        });
        g.bench_with_input(BenchmarkId::new("enumerate", w), &phi, |b, phi| {
            b.iter(|| Evaluator::enumerating().decide(black_box(phi)))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_argmin, bench_decide);
criterion_main!(benches);
