use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cylindre::*;
use cylindre_bench::{dense_dividend, plane, plane_formula, PLANE_SETS};

fn components(c: &mut Criterion) {
    let mut group = c.benchmark_group("components");
    group.sample_size(10);
    for (name, text) in PLANE_SETS {
        let f = plane_formula(text);
        group.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| analyze(black_box(f), &plane(), &CadOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    group.sample_size(10);
    let v = vars_from(&["x", "y", "z"]);
    let sphere = parse_polynomial("x^2 + y^2 + z^2 - 1", &v).unwrap();
    group.bench_function("sphere", |b| b.iter(|| decompose(black_box(std::slice::from_ref(&sphere)), &v).unwrap()));
    group.finish();
}

fn division(c: &mut Criterion) {
    let mut group = c.benchmark_group("generic_divide");
    for p in 1..=4usize {
        let g = dense_dividend(3, 5);
        group.bench_with_input(BenchmarkId::new("long", p), &p, |b, &p| {
            b.iter(|| generic_divide(black_box(&g), p).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("via_roots", p), &p, |b, &p| {
            b.iter(|| generic_divide_via_roots(black_box(&g), p).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let f = plane_formula("x*y - 1 = 0");
    let bx = vec![
        (rational::int(-4), rational::int(4)),
        (rational::int(-4), rational::int(4)),
    ];
    c.bench_function("grid_oracle/hyperbola_1_50", |b| {
        b.iter(|| grid_oracle(black_box(&f), &bx, &rational::ratio(1, 50)).unwrap())
    });
}

criterion_group!(benches, components, decomposition, division, oracle);
criterion_main!(benches);
