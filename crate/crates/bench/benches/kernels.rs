use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use nilcent_bench::fixtures;
use nilcent_core::invariants::{build_slice, restricted_invariants};
use nilcent_core::varieties::{nullcone_data, two_block_equations};
use nilcent_core::{groebner, AlgebraKind, CentralizerAlgebra, Partition};

fn label(p: &Partition, k: AlgebraKind) -> String {
    format!("{k} {p}")
}

fn structure_constants(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure_constants");
    for (p, k) in fixtures() {
        g.bench_with_input(BenchmarkId::from_parameter(label(&p, k)), &(p, k), |b, (p, k)| {
            b.iter(|| CentralizerAlgebra::new(black_box(p.clone()), *k).unwrap())
        });
    }
    g.finish();
}

fn slice_invariants(c: &mut Criterion) {
    let mut g = c.benchmark_group("slice_invariants");
    g.sample_size(10);
    for (p, k) in fixtures() {
        let alg = CentralizerAlgebra::new(p.clone(), k).unwrap();
        g.bench_function(BenchmarkId::from_parameter(label(&p, k)), |b| {
            b.iter(|| {
                let slice = build_slice(&alg).unwrap();
                restricted_invariants(&alg, &slice).unwrap()
            })
        });
    }
    g.finish();
}

fn groebner_bases(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner");
    g.sample_size(10);
    let commuting = two_block_equations(3, 2).unwrap();
    g.bench_function("two-block commuting variety (3,2)", |b| {
        b.iter(|| groebner::groebner(black_box(&commuting)).unwrap())
    });
    let sp = CentralizerAlgebra::new(Partition::new(vec![4, 2]).unwrap(), AlgebraKind::Sp).unwrap();
    let nullcone = nullcone_data(&sp).unwrap().ideal();
    g.bench_function("null cone sp (4,2)", |b| b.iter(|| groebner::groebner(black_box(&nullcone)).unwrap()));
    g.finish();
}

criterion_group!(benches, structure_constants, slice_invariants, groebner_bases);
criterion_main!(benches);
