use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use evenorbit::lie_data::SemisimpleSystem;
use evenorbit::transform::{continuous_coefficients, SampleSet, TransformPlan};
use evenorbit::weyl::EvenGroupKind;
use evenorbit::Execution;
use num_complex::Complex64;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn forward(c: &mut Criterion) {
    let mut group = c.benchmark_group("forward");
    for (sel, m) in [("a1xa2", 8), ("a1xg2", 12)] {
        let s = SemisimpleSystem::from_selector(sel).unwrap();
        let base = TransformPlan::new(&s, EvenGroupKind::FullEven, &[m]).unwrap();
        let samples = SampleSet::random(base.points().clone(), 1);
        for (name, exec) in MODES {
            let plan = base.clone().with_execution(exec);
            group.bench_with_input(
                BenchmarkId::new(name, format!("{sel}/M={m}")),
                &samples,
                |b, samples| b.iter(|| plan.forward(black_box(samples)).unwrap()),
            );
        }
    }
    group.finish();
}

fn gram(c: &mut Criterion) {
    let mut group = c.benchmark_group("gram");
    group.sample_size(10);
    let s = SemisimpleSystem::from_selector("a1xc2").unwrap();
    let base = TransformPlan::new(&s, EvenGroupKind::ProductEven, &[4, 4]).unwrap();
    for (name, exec) in MODES {
        let plan = base.clone().with_execution(exec);
        group.bench_function(BenchmarkId::new(name, "a1xc2/M=4,4"), |b| {
            b.iter(|| plan.orthogonality_residual())
        });
    }
    group.finish();
}

fn quadrature(c: &mut Criterion) {
    let mut group = c.benchmark_group("continuous");
    group.sample_size(10);
    let s = SemisimpleSystem::from_selector("a1xa2").unwrap();
    let f = |x: &[f64]| Complex64::new((x[0] * x[1]).cos(), x[2]);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "a1xa2/res=24"), |b| {
            b.iter(|| continuous_coefficients(f, &s, EvenGroupKind::FullEven, 2, 24, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, forward, gram, quadrature);
criterion_main!(benches);
