use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cce_core::closure::close_catalog;
use cce_core::commutant::build_catalog;
use cce_core::polyalg::poisson_bracket;
use cce_core::quantize::Enveloping;
use cce_core::{AlgebraType, LieAlgebra};

fn alg(s: &str) -> LieAlgebra {
    LieAlgebra::new(AlgebraType::parse(s).unwrap()).unwrap()
}

fn structure_constants(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_algebra");
    for s in ["B3", "C4", "D5"] {
        g.bench_with_input(BenchmarkId::from_parameter(s), s, |b, s| b.iter(|| alg(s)));
    }
    g.finish();
}

fn catalogs(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_catalog");
    g.sample_size(10);
    for s in ["B3", "C3", "D4", "B4"] {
        let a = alg(s);
        g.bench_with_input(BenchmarkId::from_parameter(s), &a, |b, a| {
            b.iter(|| build_catalog(&a.roots, None).unwrap())
        });
    }
    g.finish();
}

fn closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("close_catalog");
    g.sample_size(10);
    for s in ["D3", "B3"] {
        let a = alg(s);
        let cat = build_catalog(&a.roots, None).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(s), &(a, cat), |b, (a, cat)| {
            b.iter(|| close_catalog(cat, a).unwrap())
        });
    }
    g.finish();
}

fn brackets(c: &mut Criterion) {
    let a = alg("C3");
    let cat = build_catalog(&a.roots, None).unwrap();
    let top: Vec<_> = cat.generators().filter(|&id| cat.degree(id) == 6).take(2).collect();
    let (p, q) = (cat.polynomial(top[0], &a), cat.polynomial(top[1], &a));
    let cas = a.quadratic_casimir().unwrap();
    c.bench_function("poisson_bracket/C3 sextic pair", |b| {
        b.iter(|| poisson_bracket(&p, &q, &a.sc).unwrap())
    });
    c.bench_function("poisson_bracket/C3 casimir x sextic", |b| {
        b.iter(|| poisson_bracket(&cas, &p, &a.sc).unwrap())
    });
}

fn enveloping(c: &mut Criterion) {
    let a = alg("B2");
    let cat = build_catalog(&a.roots, None).unwrap();
    let quartic: Vec<_> = cat.generators().filter(|&id| cat.degree(id) == 4).collect();
    let (p, q) = (cat.polynomial(quartic[0], &a), cat.polynomial(quartic[1], &a));
    c.bench_function("symmetrize+commutator/B2 quartic pair", |b| {
        b.iter(|| {
            let mut env = Enveloping::new(&a.sc);
            let (lp, lq) = (env.symmetrize(&p), env.symmetrize(&q));
            env.commutator(&lp, &lq)
        })
    });
}

criterion_group!(benches, structure_constants, catalogs, closure, brackets, enveloping);
criterion_main!(benches);
