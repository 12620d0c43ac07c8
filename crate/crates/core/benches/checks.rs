use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use repherd_core::checks::{run_suite, Suite};
use repherd_core::{fixtures, Analysis, Budget, Exec, Field};

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog+suite");
    group.sample_size(10);
    for (name, alg) in [("tilted5", fixtures::tilted5(Field::Rationals)), ("d5", fixtures::d5(Field::Rationals))] {
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), name), &alg, |b, alg| {
                b.iter(|| {
                    let a = Analysis::new(alg, Budget::default(), exec).unwrap();
                    run_suite(&a, Suite::All).unwrap()
                })
            });
        }
    }
    group.finish();
}

fn kronecker_budget(c: &mut Criterion) {
    let alg = fixtures::kronecker(Field::Rationals);
    let budget = Budget { max_modules: 30, ..Budget::default() };
    let mut group = c.benchmark_group("kronecker-partial");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| b.iter(|| Analysis::new(&alg, budget, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, suite, kronecker_budget);
criterion_main!(benches);
