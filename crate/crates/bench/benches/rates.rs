use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use twophoton_bench::{operating_field, reference_setup};
use twophoton_core::qd_stark::m12;
use twophoton_core::quadrature::GridSpec;
use twophoton_core::rates::{tpse_spectral_density_cavity, tpse_total};
use twophoton_core::{evaluate_point, Direction, Environment, Overlaps};

fn point_rates(c: &mut Criterion) {
    let s = reference_setup();
    let e = operating_field();
    let [l1, l2] = s.tpa_legs();
    c.bench_function("m12", |b| {
        b.iter(|| m12(black_box(l1.omega), l2.omega, e, &s.dot, &s.states, Overlaps::UNIFORM, Direction::Absorption))
    });
    c.bench_function("tpse_density_cavity", |b| {
        b.iter(|| tpse_spectral_density_cavity(black_box(s.mode2.omega_c), &s.dot, &s.states, e, &s.mode1, &s.mode2))
    });
    c.bench_function("evaluate_point", |b| b.iter(|| evaluate_point(black_box(e), &s)));
}

fn totals(c: &mut Criterion) {
    let s = reference_setup();
    let e = operating_field();
    let mut group = c.benchmark_group("tpse_total");
    group.sample_size(10);
    group.bench_function("bulk", |b| {
        b.iter(|| tpse_total(&s.dot, &s.states, black_box(e), &Environment::Bulk, GridSpec::default()))
    });
    let double = Environment::DoubleMode { mode1: s.mode1, mode2: s.mode2 };
    group.bench_function("double_mode", |b| {
        b.iter(|| tpse_total(&s.dot, &s.states, black_box(e), &double, GridSpec::default()))
    });
    group.finish();
}

criterion_group!(benches, point_rates, totals);
criterion_main!(benches);
