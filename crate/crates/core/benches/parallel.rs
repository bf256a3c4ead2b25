use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wradius::ensemble::{sample, EnsembleKind, EnsembleSpec};
use wradius::harness::{run_selected, SuiteConfig};
use wradius::radius::{radius_sweep, NormKind, SweepConfig};
use wradius::{Execution, Weight};

const MODES: [(&str, Execution); 2] = [("serial", Execution::Serial), ("parallel", Execution::Parallel)];

fn operator_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("operator_sweep");
    let nu = Weight::new(0.3).unwrap();
    for dim in [4, 16] {
        let a = sample(&EnsembleSpec::new(EnsembleKind::Ginibre, dim), 7).unwrap();
        for (name, execution) in MODES {
            let cfg = SweepConfig::default().with_execution(execution);
            group.bench_with_input(BenchmarkId::new(name, dim), &a, |b, a| {
                b.iter(|| radius_sweep(black_box(a), nu, NormKind::Operator, &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn suite_slice(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite_slice");
    group.sample_size(10);
    let ids = ["T3.1-closed-vs-sweep", "T7.3.vii", "P2.9.ii-wnu-dominates"];
    for (name, execution) in MODES {
        let cfg = SuiteConfig::new(42).with_trials(24).with_execution(execution);
        group.bench_function(name, |b| b.iter(|| run_selected(black_box(&cfg), &ids).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, operator_sweep, suite_slice);
criterion_main!(benches);
