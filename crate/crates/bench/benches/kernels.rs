use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use laurent_gl::{
    act_unit, check_cyclic, check_filtration_axioms, ladder_word, separation_certificate, AlphaParam, Exponent,
    FiltrationConfig, IndexSet, LaurentPoly, MatrixUnit,
};
use laurent_gl_bench::{dense_poly, monomials, twisted};

fn action(c: &mut Criterion) {
    let alpha = twisted(4);
    let f = LaurentPoly::from_terms(4, monomials(4, 1, 2).into_iter().map(|k| (k, 1.into()))).unwrap();
    let units: Vec<MatrixUnit> = MatrixUnit::all(4).collect();
    c.bench_function("act_unit/all_units_n4", |b| {
        b.iter(|| {
            for &u in &units {
                black_box(act_unit(u, black_box(&f), &alpha).unwrap());
            }
        })
    });
}

fn ladders(c: &mut Criterion) {
    let alpha = twisted(3);
    let (p, q) = (Exponent::from([12, 0, 0]), Exponent::from([1, -6, 17]));
    c.bench_function("ladder_word/n3_long", |b| b.iter(|| ladder_word(black_box(&p), black_box(&q), &alpha).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let alpha = AlphaParam::zero(3);
    let set = IndexSet::from_bits(0b011);
    c.bench_function("check_cyclic/n3_B6", |b| b.iter(|| check_cyclic(&alpha, black_box(-2), set, 6).unwrap()));
}

fn separation(c: &mut Criterion) {
    let alpha = twisted(3);
    let f = dense_poly(3, 0, 2, 12);
    c.bench_function("separation/12_terms", |b| b.iter(|| separation_certificate(black_box(&f), &alpha).unwrap()));
}

fn filtration(c: &mut Criterion) {
    let config = FiltrationConfig { n: 2, m_range: [-2, 2], bound: 3 };
    c.bench_function("filtration/n2_B3", |b| b.iter(|| check_filtration_axioms(black_box(&config)).unwrap()));
}

criterion_group! {
    name = kernels;
    config = Criterion::default().sample_size(20);
    targets = action, ladders, oracle, separation, filtration
}
criterion_main!(kernels);
