use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qfab::homology::{dominant_dimension, gorenstein_dimension};
use qfab::nakayama::{higher_nakayama, KupischSeries};
use qfab::par::Execution;

fn homological_dimensions(c: &mut Criterion) {
    let mut group = c.benchmark_group("gorenstein_dimension");
    group.sample_size(10);
    for (n, l) in [(2, vec![4, 3, 3, 3]), (3, vec![4, 3, 3, 3])] {
        let h = higher_nakayama(n, &KupischSeries::new(l.clone()).unwrap()).unwrap();
        let label = format!("n{n}-{}v", h.algebra.n_vertices());
        for exec in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), &label), &h.algebra, |b, a| {
                b.iter(|| gorenstein_dimension(a, 20, exec))
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("dominant_dimension");
    group.sample_size(10);
    let h = higher_nakayama(3, &KupischSeries::new(vec![4, 3, 3, 3]).unwrap()).unwrap();
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| b.iter(|| dominant_dimension(&h.algebra, 20, exec)));
    }
    group.finish();
}

criterion_group!(benches, homological_dimensions);
criterion_main!(benches);
