use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use posetdim::fixtures::{all_posets, random_two_dimensional, rng};
use posetdim::generators::{incidence_poset, standard_example};
use posetdim::realizer::{verify_boolean_realizer_with, verify_realizer_with};
use posetdim::solvers::decide_boolean_dimension_small_with;
use posetdim::transforms::ramsey_cycle_witness_with;
use posetdim::{Budget, Exec, PartialLinearExtension};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    let s = standard_example(400).unwrap();
    let br = s.boolean.clone().unwrap();
    let (p, real) = random_two_dimensional(1500, &mut rng(1));
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::new("boolean S_400", name), |b| {
            b.iter(|| verify_boolean_realizer_with(black_box(&s.poset), black_box(&br), exec).unwrap())
        });
        group.bench_function(BenchmarkId::new("realizer n=1500", name), |b| {
            b.iter(|| verify_realizer_with(black_box(&p), black_box(&real), exec).unwrap())
        });
    }
    group.finish();
}

fn small_boolean(c: &mut Criterion) {
    let mut group = c.benchmark_group("boolean_small");
    group.sample_size(10);
    let hard: Vec<_> = all_posets(5).into_iter().rev().take(8).collect();
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::new("n=5 d=2", name), |b| {
            b.iter(|| {
                for p in &hard {
                    black_box(decide_boolean_dimension_small_with(p, 2, &Budget::unlimited(), exec).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn ramsey(c: &mut Criterion) {
    let mut group = c.benchmark_group("ramsey");
    let n = 60;
    let inc = incidence_poset(n).unwrap();
    // one member per triple: every color distinct, so the full scan runs
    let fam: Vec<PartialLinearExtension> = (1..=n)
        .flat_map(|i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
        .map(|(i, j, k)| PartialLinearExtension::new(vec![inc.edge(i, k), inc.vertex(j)]).unwrap())
        .collect();
    assert_eq!(ramsey_cycle_witness_with(n, &fam, Exec::Sequential).unwrap(), None);
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::new("P_60", name), |b| {
            b.iter(|| black_box(ramsey_cycle_witness_with(n, &fam, exec)))
        });
    }
    group.finish();
}

criterion_group!(benches, verify, small_boolean, ramsey);
criterion_main!(benches);
