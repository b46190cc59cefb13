use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wellcov::chordal::{chordal_is_1_extendable, chordal_is_wk, lex_bfs_peo};
use wellcov::mis::{enumerate_maximal_independent_sets, independence_number};
use wellcov::oracle::{alpha_binary_search, builtin_solver, is_es_via_oracle, OracleMode};
use wellcov::recognizers::{is_es, is_well_covered};
use wellcov_bench::{chordal_corona, dense_random};

fn alpha(c: &mut Criterion) {
    let mut group = c.benchmark_group("alpha");
    for n in [20, 40, 60] {
        let g = dense_random(n, 0.3);
        group.bench_with_input(BenchmarkId::new("branch-and-bound", n), &g, |b, g| {
            b.iter(|| independence_number(black_box(g)))
        });
    }
    for n in [10, 16] {
        let g = dense_random(n, 0.3);
        group.bench_with_input(BenchmarkId::new("sat-binary-search", n), &g, |b, g| {
            b.iter(|| alpha_binary_search(black_box(g), &mut builtin_solver()).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximal-independent-sets");
    for n in [16, 24, 32] {
        let g = dense_random(n, 0.3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| enumerate_maximal_independent_sets(black_box(g)).count())
        });
    }
    group.finish();
}

fn chordal(c: &mut Criterion) {
    let mut group = c.benchmark_group("chordal");
    for base in [1_000, 10_000, 100_000] {
        let g = chordal_corona(base);
        group.bench_with_input(BenchmarkId::new("lex-bfs-peo", base), &g, |b, g| {
            b.iter(|| lex_bfs_peo(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("wk-2", base), &g, |b, g| {
            b.iter(|| chordal_is_wk(black_box(g), 2).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("1-extendable", base), &g, |b, g| {
            b.iter(|| chordal_is_1_extendable(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn es_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("es-2");
    let g = dense_random(12, 0.35);
    group.bench_function("brute", |b| b.iter(|| is_es(black_box(&g), 2)));
    for (name, mode) in [("sat-per-set", OracleMode::PerSet), ("sat-combined", OracleMode::Combined)] {
        group.bench_function(name, |b| {
            b.iter(|| is_es_via_oracle(black_box(&g), 2, &mut builtin_solver(), mode).unwrap())
        });
    }
    group.bench_function("well-covered", |b| b.iter(|| is_well_covered(black_box(&g))));
    group.finish();
}

criterion_group!(benches, alpha, enumeration, chordal, es_routes);
criterion_main!(benches);
