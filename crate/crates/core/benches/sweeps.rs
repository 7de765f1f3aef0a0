use bdcover::par::Exec;
use bdcover::verify::{bdinv_suite, cover_suite, hecke_suite, reps_suite, Grid, VerifyConfig};
use bdcover::verify::PropertyReport;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

type Suite = fn(&VerifyConfig) -> Vec<PropertyReport>;

fn sweeps(c: &mut Criterion) {
    let suites: [(&str, Suite); 4] = [
        ("bdinv", bdinv_suite),
        ("cover", cover_suite),
        ("hecke", hecke_suite),
        ("reps", reps_suite),
    ];
    let mut group = c.benchmark_group("small_grid");
    group.sample_size(10);
    for (name, suite) in suites {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let cfg = VerifyConfig {
                grid: Grid::Small,
                exec,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(name, format!("{exec:?}")), &cfg, |b, cfg| {
                b.iter(|| black_box(suite(cfg)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
