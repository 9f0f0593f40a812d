use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use hopfcert_core::braided::{
    check_braided_crossed_module, transmutation, BraidedCrossedModuleData, QuasitriangularStructure,
};
use hopfcert_core::constructions::{quantum_double_crossed_module, smash_product, CayleyTable};
use hopfcert_core::hopf::check_hopf;
use hopfcert_core::linalg::kernel_basis;
use hopfcert_core::two_group::{check_crossed_module, strict_2group_unchecked};
use hopfcert_core::Field;

fn kernels(c: &mut Criterion) {
    let f101 = Field::prime(101).unwrap();
    let d = quantum_double_crossed_module(f101, &CayleyTable::symmetric(3), "S3").unwrap();
    let cm = &d.crossed;

    c.bench_function("check_hopf D(S3)", |b| {
        b.iter(|| check_hopf(black_box(&d.double)))
    });
    c.bench_function("smash_product k(S3) x kS3", |b| {
        b.iter(|| smash_product(black_box(&cm.source), &cm.target, &cm.action).unwrap())
    });
    c.bench_function("check_crossed_module D(S3)", |b| {
        b.iter(|| check_crossed_module(black_box(cm)))
    });
    c.bench_function("cotensor D(S3)", |b| {
        let qg = strict_2group_unchecked(cm);
        let defining = qg.cotensor_defining_map();
        b.iter(|| kernel_basis(black_box(&defining)))
    });

    let q = QuasitriangularStructure::new(d.double.clone(), d.r_matrix.clone()).unwrap();
    c.bench_function("transmutation D(S3)", |b| {
        b.iter(|| transmutation(black_box(&q)).unwrap())
    });
    let bcm =
        BraidedCrossedModuleData::transmuted(transmutation(&q).unwrap(), q.hopf.clone()).unwrap();
    let mut slow = c.benchmark_group("slow");
    slow.sample_size(10);
    slow.bench_function("check_braided_crossed_module B(D(S3))", |b| {
        b.iter(|| check_braided_crossed_module(black_box(&bcm)))
    });
    slow.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
