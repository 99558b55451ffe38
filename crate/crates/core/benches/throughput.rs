//! Throughput of the batch evaluation paths.
//!
//! With the default `parallel` feature each workload runs twice: once on
//! the default rayon pool and once inside a single-thread pool, so the
//! scheduling overhead and scaling of the data-parallel path are directly
//! comparable. Building with `--no-default-features` benches the plain
//! sequential iterators instead.

use criterion::{criterion_group, criterion_main, Criterion};
use medrad_core::depth::{depth_field, DepthMethod, GridSpec, ProjectionIndex};
use medrad_core::geometry::{radial_center, DataSet};
use medrad_core::radial::{profile, Sample1D};
use medrad_core::scenario::{generate_scenario, Scenario};
use std::hint::black_box;

fn bench_modes(c: &mut Criterion, name: &str, f: &dyn Fn() -> f64) {
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    #[cfg(feature = "parallel")]
    {
        group.bench_function("rayon-default", |b| b.iter(|| black_box(f())));
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .expect("single-thread pool");
        group.bench_function("rayon-1-thread", |b| b.iter(|| pool.install(|| black_box(f()))));
    }
    #[cfg(not(feature = "parallel"))]
    group.bench_function("sequential", |b| b.iter(|| black_box(f())));
    group.finish();
}

fn profile_workload(c: &mut Criterion) {
    let data = generate_scenario(&Scenario::Gaussian { n: 4000, seed: 1 }).unwrap();
    let sample = Sample1D::new(data.column(0)).unwrap();
    let grid: Vec<f64> = (0..400).map(|i| -4.0 + i as f64 * 0.02).collect();
    bench_modes(c, "profile-400-nodes-n4000", &|| {
        let p = profile(&sample, &grid, 0.0).unwrap();
        p.entries.iter().map(|e| e.g).sum()
    });
}

fn field_workload(c: &mut Criterion) {
    let data = generate_scenario(&Scenario::Bimodal { n: 500, seed: 2 }).unwrap();
    let center = radial_center(&data, 1e-6).unwrap();
    let spec = GridSpec::from_data(&data, 24, 24, 0.1).unwrap();
    bench_modes(c, "field-24x24-spatial-tukey-n500", &|| {
        let field = depth_field(
            &data,
            &[DepthMethod::Spatial, DepthMethod::Tukey2d],
            &spec,
            &center,
        )
        .unwrap();
        field.layers.iter().flat_map(|l| &l.values).sum()
    });
}

fn projection_workload(c: &mut Criterion) {
    let data = generate_scenario(&Scenario::Gaussian { n: 1000, seed: 3 }).unwrap();
    bench_modes(c, "projection-fit-400-dirs-n1000", &|| {
        let index = ProjectionIndex::fit(&data, 400, 7).unwrap();
        index.depth(&[0.25, -0.5]).unwrap()
    });
}

fn center_workload(c: &mut Criterion) {
    let data = generate_scenario(&Scenario::Gaussian { n: 400, seed: 4 }).unwrap();
    bench_modes(c, "radial-center-n400", &|| {
        radial_center(&data, 1e-6).unwrap().g_at_center
    });
}

criterion_group!(
    benches,
    profile_workload,
    field_workload,
    projection_workload,
    center_workload
);
criterion_main!(benches);
