use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use ripplefront_bench::{central_open_cell, random_map, sparse_frontier};
use ripplefront_core::{
    bfs_oracle, load_scenarios, propagate, relax_sweep, run_episode, visible_set, DistanceField, FieldMode,
    FovCone, Heading, SimConfig,
};
use std::hint::black_box;
use std::num::NonZeroU32;

fn field(c: &mut Criterion) {
    let scenarios = load_scenarios().unwrap();
    let mut group = c.benchmark_group("field");
    for name in ["square", "passages"] {
        let map = sparse_frontier(&scenarios.get(name).unwrap().map, 8, 1);
        group.bench_function(format!("bfs_oracle/{name}"), |b| b.iter(|| bfs_oracle(black_box(&map))));
        group.bench_function(format!("relax_sweep_x1/{name}"), |b| {
            b.iter_batched(
                || DistanceField::seeded(&map),
                |mut f| relax_sweep(&map, &mut f).unwrap(),
                BatchSize::SmallInput,
            )
        });
        let mode = FieldMode::Sweeps(NonZeroU32::new(8).unwrap());
        group.bench_function(format!("sweeps8/{name}"), |b| {
            b.iter_batched(
                || bfs_oracle(&map),
                |mut f| propagate(&map, &mut f, mode).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
    let large = random_map(256, 256, 0.25, 0.9, 7);
    group.bench_function("bfs_oracle/random256", |b| b.iter(|| bfs_oracle(black_box(&large))));
    group.finish();
}

fn vision(c: &mut Criterion) {
    let scenarios = load_scenarios().unwrap();
    let mut group = c.benchmark_group("vision");
    for name in ["square", "docks"] {
        let map = &scenarios.get(name).unwrap().map;
        let pos = central_open_cell(map);
        for (label, cone) in [("cone45", FovCone::default()), ("omni", FovCone::new(6.0, 180.0).unwrap())] {
            group.bench_function(format!("{label}/{name}"), |b| {
                b.iter(|| visible_set(map, black_box(pos), Heading::East, &cone).unwrap())
            });
        }
    }
    group.finish();
}

fn episode(c: &mut Criterion) {
    let scenarios = load_scenarios().unwrap();
    let map = &scenarios.get("square").unwrap().map;
    let start = central_open_cell(map);
    let config = SimConfig::default();
    let mut group = c.benchmark_group("episode");
    group.sample_size(10);
    group.bench_function("run_episode/square", |b| {
        b.iter(|| run_episode(map, "square", black_box(start), Heading::East, &config).unwrap())
    });
    group.finish();
}

criterion_group!(benches, field, vision, episode);
criterion_main!(benches);
