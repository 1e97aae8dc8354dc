use std::hint::black_box;

use antialg_bench::{ak1_axioms, complete_ak1, k3_enveloping, k3_pbw, normal_form, reversed_word};
use criterion::{criterion_group, criterion_main, Criterion};

fn normal_forms(c: &mut Criterion) {
    let rs = k3_enveloping(12).unwrap();
    for k in [2, 4, 6] {
        let e = reversed_word(&rs, k).unwrap();
        c.bench_function(&format!("nf K3 B^{k} A^{k}"), |b| b.iter(|| normal_form(&rs, black_box(&e)).unwrap()));
    }
}

fn completion(c: &mut Criterion) {
    let mut g = c.benchmark_group("completion");
    g.sample_size(10);
    g.bench_function("K3 to degree 8", |b| b.iter(|| k3_enveloping(black_box(8)).unwrap()));
    g.bench_function("AK1 [-3,3] to degree 4", |b| b.iter(|| complete_ak1(black_box(3), 4).unwrap()));
    g.bench_function("PBW K3 degree 8", |b| b.iter(|| k3_pbw(black_box(8)).unwrap()));
    g.finish();
}

fn axioms(c: &mut Criterion) {
    let mut g = c.benchmark_group("axioms");
    g.sample_size(10);
    g.bench_function("AK1 [-4,4]", |b| b.iter(|| ak1_axioms(black_box(4)).unwrap()));
    g.finish();
}

criterion_group!(benches, normal_forms, completion, axioms);
criterion_main!(benches);
