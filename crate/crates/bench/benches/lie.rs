use criterion::{black_box, criterion_group, criterion_main, Criterion};
use lie_core::desing::{build_tower, demazure_refinement};
use lie_core::orbits::{brute_force_min_codim, complement_codim_ge2};
use lie_core::weyl::enumerate;
use lie_core::{build_root_system, LieType, NodeSet, WeylElement};

fn root_systems(c: &mut Criterion) {
    c.bench_function("build E6", |b| {
        b.iter(|| build_root_system(black_box(LieType::E), 6).unwrap())
    });
    c.bench_function("build F4", |b| {
        b.iter(|| build_root_system(black_box(LieType::F), 4).unwrap())
    });
}

fn weyl(c: &mut Criterion) {
    let b4 = build_root_system(LieType::B, 4).unwrap();
    c.bench_function("enumerate W(B4)", |b| {
        b.iter(|| enumerate(black_box(&b4)).unwrap())
    });
}

fn orbits(c: &mut Criterion) {
    let a4 = build_root_system(LieType::A, 4).unwrap();
    let p = NodeSet::from([1]);
    c.bench_function("codim criterion A4", |b| {
        b.iter(|| complement_codim_ge2(&a4, black_box(&p), &p).unwrap())
    });
    c.bench_function("codim brute force A4", |b| {
        b.iter(|| brute_force_min_codim(&a4, black_box(&p), &p).unwrap())
    });
}

fn desing(c: &mut Criterion) {
    let b3 = build_root_system(LieType::B, 3).unwrap();
    let all = NodeSet::all(3);
    let elements = enumerate(&b3).unwrap();
    c.bench_function("towers over W(B3)", |b| {
        b.iter(|| {
            for w in &elements {
                black_box(build_tower(&b3, &all, w).unwrap());
            }
        })
    });
    let w0 = WeylElement::longest(&b3);
    let tower = build_tower(&b3, &all, &w0).unwrap();
    c.bench_function("refine w0 in B3", |b| {
        b.iter(|| demazure_refinement(&b3, black_box(&tower)).unwrap())
    });
}

criterion_group!(benches, root_systems, weyl, orbits, desing);
criterion_main!(benches);
