use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use frobgb::cohomology::{h0_length, rjj_estimate};
use frobgb::groebner::{buchberger_with, divide, is_groebner, BuchbergerOptions, PairStrategy};
use frobgb::verify::{check_spoly_certificates, verify_construction};
use frobgb::{ConstructionParams, Ideal, RingExt};
use frobgb_bench::{construction, cyclic3, e_generators, example_pair};

fn buchberger(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger");
    for (p, m) in [(3, 4), (3, 8), (5, 12)] {
        let gens = e_generators(p, m);
        let ring = gens[0].ring().clone();
        group.bench_with_input(
            BenchmarkId::new("e", format!("p{p}_m{m}")),
            &gens,
            |b, gens| {
                b.iter(|| {
                    buchberger_with(&ring, black_box(gens), &BuchbergerOptions::default()).unwrap()
                })
            },
        );
    }
    let gens = cyclic3(7);
    let ring = gens[0].ring().clone();
    for (name, strategy) in [
        ("normal", PairStrategy::Normal),
        ("fifo", PairStrategy::Fifo),
        ("random", PairStrategy::Random(7)),
    ] {
        let opts = BuchbergerOptions {
            strategy,
            ..Default::default()
        };
        group.bench_function(BenchmarkId::new("cyclic3", name), |b| {
            b.iter(|| buchberger_with(&ring, black_box(&gens), &opts).unwrap())
        });
    }
    let bare = BuchbergerOptions {
        product_criterion: false,
        chain_criterion: false,
        ..Default::default()
    };
    group.bench_function(BenchmarkId::new("cyclic3", "no_criteria"), |b| {
        b.iter(|| buchberger_with(&ring, black_box(&gens), &bare).unwrap())
    });
    group.finish();
}

fn division(c: &mut Criterion) {
    let mut group = c.benchmark_group("division");
    for m in [4, 10, 20] {
        let o = construction(3, m);
        group.bench_with_input(BenchmarkId::new("f_by_G", m), &o, |b, o| {
            b.iter(|| divide(black_box(&o.f), &o.g_basis).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("is_groebner_G", m), &o, |b, o| {
            b.iter(|| is_groebner(black_box(&o.g_basis)).unwrap())
        });
    }
    group.finish();
}

fn ideal_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("ideals");
    group.sample_size(20);
    let o = construction(3, 4);
    let s = Ideal::principal(&o.ring.var("s").unwrap());
    group.bench_function("saturate_e_by_max", |b| {
        b.iter(|| o.e.saturate_ideal(black_box(&o.max)).unwrap())
    });
    group.bench_function("colon_e_by_f", |b| {
        b.iter(|| o.e.colon_element(black_box(&o.f)).unwrap())
    });
    group.bench_function("intersect_h_s", |b| {
        b.iter(|| o.h.intersect(black_box(&s)).unwrap())
    });
    group.bench_function("h0_length_h_over_e", |b| {
        b.iter(|| h0_length(&o.h, black_box(&o.e), &o.max).unwrap())
    });
    group.finish();
}

fn harnesses(c: &mut Criterion) {
    let mut group = c.benchmark_group("harness");
    group.sample_size(10);
    for (p, m) in [(3, 4), (7, 6)] {
        let params = ConstructionParams::new(p, m).unwrap();
        group.bench_with_input(
            BenchmarkId::new("verify_construction", format!("p{p}_m{m}")),
            &params,
            |b, &params| b.iter(|| verify_construction(black_box(params)).unwrap()),
        );
        group.bench_with_input(
            BenchmarkId::new("certificates", format!("p{p}_m{m}")),
            &params,
            |b, &params| b.iter(|| check_spoly_certificates(black_box(params), None).unwrap()),
        );
    }
    let o = construction(3, 4);
    let (j, i) = example_pair(3);
    group.bench_function("rjj_p3_q3", |b| {
        b.iter(|| rjj_estimate(black_box(&j), &i, &o.max, 2, &[3], Some(&o.g)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, buchberger, division, ideal_ops, harnesses);
criterion_main!(benches);
