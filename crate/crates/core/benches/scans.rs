use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rootgroups::grptool::{center, centralizer_of_element, Ambient, FiniteGroup};
use rootgroups::{Exec, Family, GroupTable};

fn ambient(family: Family, q: u32, exec: Exec) -> Ambient {
    Ambient::new(GroupTable::build(family, q).unwrap()).unwrap().with_exec(exec)
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scans");
    group.sample_size(10);
    for (family, q) in [(Family::G2, 5), (Family::Su4, 4)] {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let g = ambient(family, q, exec);
            let s = g.whole();
            let x = g.root_element(0, 1).unwrap();
            let id = format!("{family}-q{q}/{exec:?}");
            group.bench_function(BenchmarkId::new("exponent", &id), |b| {
                b.iter(|| g.exec().max(0..g.order(), |y| g.element_order(y)))
            });
            group.bench_function(BenchmarkId::new("center", &id), |b| b.iter(|| center(&g, black_box(&s))));
            group.bench_function(BenchmarkId::new("centralizer", &id), |b| {
                b.iter(|| centralizer_of_element(&g, &s, black_box(x)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, scans);
criterion_main!(benches);
