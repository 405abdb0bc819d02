//! Benchmarks for the hot paths: full reports, the graded build, lattice
//! point enumeration, and volumes.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use brieskorn::corpus;
use brieskorn::{
    build_graded_jacobian, certify_nondegenerate, kkp_report, unit_coefficients,
    vertex_polynomial, Q,
};

fn full_report(c: &mut Criterion) {
    let mut group = c.benchmark_group("kkp_report");
    for (id, p) in [
        ("p2", corpus::mirror_p2()),
        ("p1xp1xp1", corpus::mirror_p1p1p1()),
    ] {
        let a = unit_coefficients(&p);
        group.bench_function(id, |b| {
            b.iter(|| kkp_report(black_box(id), black_box(&p), black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn graded_build(c: &mut Criterion) {
    let p = corpus::mirror_p3();
    let a = unit_coefficients(&p);
    let f = vertex_polynomial(&p, &a).unwrap();
    let cert = certify_nondegenerate(&f).unwrap();
    c.bench_function("build_graded_jacobian/p3", |b| {
        b.iter(|| build_graded_jacobian(black_box(&f), black_box(&p), black_box(&cert)).unwrap())
    });
}

fn geometry(c: &mut Criterion) {
    let cube = corpus::cube();
    let three = Q::from_integer(3.into());
    c.bench_function("lattice_points/cube_x3", |b| {
        b.iter(|| cube.lattice_points(black_box(&three)).unwrap())
    });
    c.bench_function("normalized_volume/cube", |b| {
        b.iter(|| cube.normalized_volume().unwrap())
    });
}

criterion_group!(benches, full_report, graded_build, geometry);
criterion_main!(benches);
