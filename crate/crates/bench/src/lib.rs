//! Criterion benchmarks for the arithmetic kernels.

use std::hint::black_box;

use carlitz_core::basealg::parse_a_poly;
use carlitz_core::carlitz::{bernoulli_carlitz_table, carlitz_phi, torsion_poly};
use carlitz_core::coateswiles::cw_verify;
use carlitz_core::coleman::{coleman_norm, ColemanSeries, XRat};
use carlitz_core::lfun::{stickelberger_series, zeta_neg, Place};
use carlitz_core::{APoly, GaloisField};
use criterion::{BenchmarkId, Criterion};

fn poly(text: &str, q: u64) -> APoly {
    parse_a_poly(text, GaloisField::get(q).expect("prime power")).expect("literal")
}

fn poly_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("poly_mul");
    for d in [16u64, 64, 256] {
        let a = poly(&format!("T^{d}+T^{}+1", d / 2), 3);
        let b = poly(&format!("2*T^{d}+T^3+2"), 3);
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |bch, _| {
            bch.iter(|| black_box(&a).mul(black_box(&b)))
        });
    }
    group.finish();
}

fn torsion(c: &mut Criterion) {
    let pi = poly("T^2+T+1", 2);
    c.bench_function("torsion_poly/q2_deg2_n2", |b| b.iter(|| torsion_poly(black_box(&pi), 2).expect("torsion")));
}

fn bernoulli(c: &mut Criterion) {
    let f = GaloisField::get(3).expect("prime power");
    c.bench_function("bernoulli_carlitz_table/q3_n24", |b| {
        b.iter(|| bernoulli_carlitz_table(f, black_box(24)).expect("table"))
    });
}

fn coleman(c: &mut Criterion) {
    let pi = poly("T^2+T+1", 2);
    let a = poly("T^2+1", 2);
    let f = ColemanSeries::Exact(XRat::from_poly(carlitz_phi(&a).to_x_poly()));
    c.bench_function("coleman_norm/phi_fixed_point", |b| b.iter(|| coleman_norm(black_box(&f), &pi).expect("norm")));
}

fn coates_wiles(c: &mut Criterion) {
    let a = poly("T^2+T", 2);
    let b = poly("T+1", 2);
    c.bench_function("cw_verify/q2_kmax8", |bch| bch.iter(|| cw_verify(black_box(&a), &b, 8).expect("verify")));
}

fn stickelberger(c: &mut Criterion) {
    let pi = poly("T^2+T+1", 2);
    let t = vec![poly("T", 2)];
    c.bench_function("stickelberger_series/level2", |b| {
        b.iter(|| stickelberger_series(black_box(&pi), 2, &[Place::Infinity], &t, 12).expect("theta"))
    });
}

fn zeta(c: &mut Criterion) {
    let f = GaloisField::get(3).expect("prime power");
    c.bench_function("zeta_neg/q3_k40", |b| b.iter(|| zeta_neg(f, black_box(40)).expect("zeta")));
}

pub fn benchmarks(c: &mut Criterion) {
    poly_mul(c);
    torsion(c);
    bernoulli(c);
    coleman(c);
    coates_wiles(c);
    stickelberger(c);
    zeta(c);
}
