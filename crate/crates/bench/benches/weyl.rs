use criterion::{criterion_group, criterion_main, Criterion};
use minrep_core::weyl::{group_order, DEFAULT_BUDGET};
use minrep_core::{line_preservers, make_root_system, orthogonal_subsystem, CartanType, Registry, Strategy, Vector};
use std::hint::black_box;

fn enumeration(c: &mut Criterion) {
    for ty in [CartanType::F4, CartanType::E6, CartanType::D(6)] {
        let rs = make_root_system(ty).unwrap();
        c.bench_function(&format!("group_order {ty}"), |b| b.iter(|| group_order(black_box(&rs), DEFAULT_BUDGET).unwrap()));
    }
}

fn subsystems(c: &mut Criterion) {
    let e8 = make_root_system(CartanType::E8).unwrap();
    let v = Vector::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]);
    c.bench_function("orthogonal_subsystem E8", |b| b.iter(|| orthogonal_subsystem(black_box(&e8), &v).unwrap()));
}

fn preservers(c: &mut Criterion) {
    let reg = Registry::builtin();
    for (name, strategy) in [("e6_6", Strategy::Brute), ("e6_6", Strategy::Reduced), ("e7_-5", Strategy::Reduced)] {
        let r = reg.get(name).unwrap();
        let (beta, xi0) = (&r.modules[0].beta, r.xi0_table.as_ref().unwrap());
        c.bench_function(&format!("line_preservers {name} {strategy}"), |b| {
            b.iter(|| line_preservers(&r.k_space, black_box(beta), xi0, strategy, DEFAULT_BUDGET).unwrap())
        });
    }
}

criterion_group!(benches, enumeration, subsystems, preservers);
criterion_main!(benches);
