use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dyonstark::oracle::oracle_shifts;
use dyonstark::quadrature::{gauss_laguerre, gauss_legendre};
use dyonstark::specfun::wigner_d;
use dyonstark::stark::stark_table;
use dyonstark::{FieldConfig, HalfInteger, PhysicalParams};

fn quadrature(c: &mut Criterion) {
    for order in [16, 48, 128] {
        c.bench_function(&format!("gauss_laguerre/{order}"), |b| b.iter(|| gauss_laguerre(black_box(order))));
        c.bench_function(&format!("gauss_legendre/{order}"), |b| b.iter(|| gauss_legendre(black_box(order))));
    }
}

fn wigner(c: &mut Criterion) {
    let j = HalfInteger::from_twice(19);
    let m = HalfInteger::from_twice(3);
    let s = HalfInteger::from_twice(-5);
    c.bench_function("wigner_d/j=19/2", |b| b.iter(|| wigner_d(j, m, s, black_box(1.1))));
}

fn shifts(c: &mut Criterion) {
    let s = HalfInteger::from_twice(1);
    let params = PhysicalParams::atomic(s);
    let field = FieldConfig::new(1.0).unwrap();
    let n = HalfInteger::from_twice(9);
    c.bench_function("stark_table/n=9/2", |b| b.iter(|| stark_table(black_box(n), s, &field, &params)));
    c.bench_function("oracle_shifts/n=9/2", |b| b.iter(|| oracle_shifts(black_box(n), s, &field, &params, 48)));
}

criterion_group!(benches, quadrature, wigner, shifts);
criterion_main!(benches);
