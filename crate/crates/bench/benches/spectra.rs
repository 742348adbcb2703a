use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use pdm_core::models::{energy, RadialProblem};
use pdm_core::nu::nu_quantize;
use pdm_core::oracle::{solve_energy, OracleConfig};
use pdm_core::sweeps::{find_crossings, SweepParam, DEFAULT_SCAN_STEPS};
use pdm_core::{BoundState, ModelKind, PhysicalParams, QuantumState, RadialEquation, WaveForm};

fn yukawa() -> PhysicalParams {
    PhysicalParams { mu: -0.5, kz: 0.5, delta: 0.1, v0: 1.0, v2: 2.0, ..Default::default() }
}

fn closed_forms(c: &mut Criterion) {
    let p = PhysicalParams::default();
    let q = yukawa();
    let state = QuantumState::new(2, 1);
    c.bench_function("energy/a", |b| b.iter(|| energy(ModelKind::A, black_box(&state), black_box(&p))));
    c.bench_function("energy/c", |b| b.iter(|| energy(ModelKind::C, black_box(&state), black_box(&q))));
    c.bench_function("nu_quantize", |b| b.iter(|| nu_quantize(black_box(0.5), black_box(-0.2), black_box(1.0), 3)));
    c.bench_function("bound_state/c", |b| b.iter(|| BoundState::new(ModelKind::C, black_box(state), &q, WaveForm::Xi)));
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let p = PhysicalParams::default();
    let a = RadialProblem::new(ModelKind::A, 1, &p, RadialEquation::Exact).unwrap();
    group.bench_function("model_a/richardson", |b| b.iter(|| solve_energy(&a, 2, None, &OracleConfig::default())));
    let plain = OracleConfig { richardson: false, ..OracleConfig::default() };
    group.bench_function("model_a/single_grid", |b| b.iter(|| solve_energy(&a, 2, None, &plain)));
    let ga = RadialProblem::new(ModelKind::C, 1, &yukawa(), RadialEquation::GreeneAldrich).unwrap();
    group.bench_function("model_c/greene_aldrich", |b| b.iter(|| solve_energy(&ga, 1, None, &OracleConfig::default())));
    group.finish();
}

fn crossings(c: &mut Criterion) {
    let p = PhysicalParams { kz: 1.0, ..Default::default() };
    c.bench_function("crossings/a_beta", |b| {
        b.iter(|| {
            find_crossings(
                ModelKind::A,
                QuantumState::new(0, 1),
                QuantumState::new(0, 2),
                SweepParam::Beta,
                (-4.0, 4.0),
                &p,
                DEFAULT_SCAN_STEPS,
            )
        })
    });
}

criterion_group!(benches, closed_forms, oracle, crossings);
criterion_main!(benches);
