use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use vantage_core::arrangement2d::a_s_with;
use vantage_core::constructions::{free_config, platonic, FreeSpace, Solid};
use vantage_core::exactnum::{int, Rational};
use vantage_core::geometry::PointConfig;
use vantage_core::par::Exec;
use vantage_core::search::{search_achievable, SearchParams, Strategy};
use vantage_core::twovantage::{sample_two_vantage_orderings, SamplerSpec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn arrangement(c: &mut Criterion) {
    let mut g = c.benchmark_group("planar arrangement");
    g.sample_size(10);
    for n in [12usize, 20] {
        let s = free_config(n, 1, FreeSpace::Plane).unwrap();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &s, |b, s| b.iter(|| a_s_with(black_box(s), exec)));
        }
    }
    g.finish();
}

fn sphere(c: &mut Criterion) {
    let mut g = c.benchmark_group("dodecahedron");
    g.sample_size(10);
    let d = platonic(Solid::Dodecahedron);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| black_box(&d).regions(exec)));
    }
    g.finish();
}

fn two_vantage(c: &mut Criterion) {
    let mut g = c.benchmark_group("two-vantage sampling");
    g.sample_size(10);
    let pts: Vec<[Rational; 2]> = (1..=8).map(|i| [int(i), int(0)]).collect();
    let s = PointConfig::plane(pts).unwrap();
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| sample_two_vantage_orderings(&s, &SamplerSpec::default(), 100_000, 1, exec).unwrap())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("achievability search n=5");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| search_achievable(5, 20_000, 1, Strategy::Mixed, &SearchParams::default(), exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, arrangement, sphere, two_vantage, search);
criterion_main!(benches);
