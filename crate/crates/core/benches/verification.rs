use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lieop::oracle::{bracket_check, cross_check};
use lieop::realization::{realize_all, Convention, OrbitContext, Weight};
use lieop::rootsys::{Family, LieType};
use lieop::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn context(f: Family, n: usize) -> OrbitContext {
    OrbitContext::new(LieType::new(f, n).unwrap(), &[], Weight::Symbolic).unwrap()
}

fn bench_realize(c: &mut Criterion) {
    let mut group = c.benchmark_group("realize_all");
    group.sample_size(10);
    for (name, t) in [("G2", context(Family::G, 2)), ("B3", context(Family::B, 3))] {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &t, |b, ctx| {
                b.iter(|| realize_all(black_box(ctx), Convention::Formal, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket_check");
    group.sample_size(10);
    for (name, ctx) in [("A3", context(Family::A, 3)), ("G2", context(Family::G, 2))] {
        let real = realize_all(&ctx, Convention::Formal, Exec::Parallel).unwrap();
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &real, |b, real| {
                b.iter(|| bracket_check(black_box(real), ctx.algebra(), exec))
            });
        }
    }
    group.finish();
}

fn bench_cross(c: &mut Criterion) {
    let mut group = c.benchmark_group("cross_check");
    group.sample_size(10);
    let ctx = context(Family::B, 3);
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "B3"), |b| {
            b.iter(|| cross_check(black_box(&ctx), exec).unwrap())
        });
    }
    group.finish();
}

fn bench_jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    group.sample_size(10);
    let ctx = context(Family::F, 4);
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "F4"), |b| {
            b.iter(|| black_box(ctx.algebra()).jacobi_violations(exec))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_realize, bench_bracket, bench_cross, bench_jacobi);
criterion_main!(benches);
