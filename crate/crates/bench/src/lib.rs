//! Criterion benchmarks for generation, composition and verification.
//!
//! Uncached timings build a fresh [`NumberCache`] per iteration; the global
//! cache would otherwise serve every call after the first.

use std::hint::black_box;

use bepoly::catalog::lookup;
use bepoly::dsl::{eval_expr, parse_identity};
use bepoly::series::{bernoulli_gf, verify_kernel, KernelId};
use bepoly::special::{bernoulli_poly_oracle, NumberCache};
use bepoly::verify::{verify, verify_all};
use bepoly::{Family, GaussRational};
use criterion::{BenchmarkId, Criterion};

pub fn generators(c: &mut Criterion) {
    let mut group = c.benchmark_group("generators");
    for n in [8u32, 24, 48] {
        group.bench_with_input(BenchmarkId::new("bernoulli_uncached", n), &n, |b, &n| {
            b.iter(|| NumberCache::new().poly(Family::Bernoulli, black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("euler_uncached", n), &n, |b, &n| {
            b.iter(|| NumberCache::new().poly(Family::Euler, black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("bernoulli_double_sum", n), &n, |b, &n| {
            b.iter(|| bernoulli_poly_oracle(black_box(n)))
        });
    }
    group.bench_function("bernoulli_series_order_24", |b| b.iter(|| bernoulli_gf(black_box(24))));
    group.finish();
}

pub fn composition(c: &mut Criterion) {
    let mut group = c.benchmark_group("compose_affine");
    let cache = NumberCache::new();
    let a = GaussRational::from(2);
    let half = GaussRational::ratio(-1, 2).expect("nonzero denominator");
    for n in [16u32, 64] {
        let p = cache.poly(Family::Bernoulli, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| p.compose_affine(black_box(&a), black_box(&half)))
        });
    }
    group.finish();
}

pub fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for id in ["T2.1a", "T2.6", "T3.4d", "N4.4"] {
        let e = lookup(id).expect("catalog entry");
        group.bench_function(id, |b| b.iter(|| verify(e, black_box(8)).expect("admissible")));
    }
    group.bench_function("all_n_max_12", |b| b.iter(|| verify_all(black_box(12), false).expect("sweep")));
    group.bench_function("kernel_K2.23_order_16", |b| {
        b.iter(|| verify_kernel(KernelId::K2_23, black_box(16), None).expect("kernel"))
    });
    group.finish();
}

pub fn language(c: &mut Criterion) {
    let text = lookup("T2.6").expect("catalog entry").canonical;
    let mut group = c.benchmark_group("dsl");
    group.bench_function("parse_T2.6", |b| b.iter(|| parse_identity(black_box(text)).expect("parses")));
    let expr = parse_identity(text).expect("parses");
    group.bench_function("eval_T2.6_lhs_n12", |b| b.iter(|| eval_expr(black_box(&expr.lhs), 12).expect("evaluates")));
    group.finish();
}
