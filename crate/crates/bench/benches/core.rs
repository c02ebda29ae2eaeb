use criterion::{black_box, criterion_group, criterion_main, Criterion};
use maxcurve_core::curve::{CurveModel, PlacePoint};
use maxcurve_core::linsys::LinearSystem;
use maxcurve_core::make_field;
use maxcurve_core::semigroup::NumericalSemigroup;
use maxcurve_core::zeta::lpoly_of_curve;

fn field_arithmetic(c: &mut Criterion) {
    let f = make_field(3, 8).unwrap();
    let els: Vec<_> = f.elements().step_by(97).collect();
    c.bench_function("gf 3^8 mul+inv", |b| {
        b.iter(|| {
            let mut acc = maxcurve_core::Fe::ONE;
            for &a in &els {
                acc = f.mul(acc, a);
                if let Some(i) = f.inv(acc) {
                    acc = f.add(acc, i);
                }
            }
            black_box(acc)
        })
    });
}

fn point_counts(c: &mut Criterion) {
    let curve = CurveModel::artin_schreier(9, 5).unwrap();
    c.bench_function("count y^9+y=x^5 over F_81", |b| b.iter(|| black_box(curve.count_points(1).unwrap())));
    let herm = CurveModel::hermitian(3).unwrap();
    c.bench_function("L-polynomial of hermitian q=3", |b| b.iter(|| black_box(lpoly_of_curve(&herm).unwrap())));
}

fn orders(c: &mut Criterion) {
    let curve = CurveModel::hyperelliptic_example().unwrap();
    let ls = LinearSystem::new(&curve, 10).unwrap();
    let f = curve.base_field();
    let p = PlacePoint::Infinity { index: 0 };
    c.bench_function("orders of |10P0| at infinity", |b| b.iter(|| black_box(ls.orders_at(f, &p).unwrap())));
    c.bench_function("generic orders of |10P0|", |b| b.iter(|| black_box(ls.generic_orders().unwrap())));
}

fn semigroups(c: &mut Criterion) {
    c.bench_function("semigroup <12,13>", |b| {
        b.iter(|| black_box(NumericalSemigroup::from_generators(&[12, 13]).unwrap()))
    });
}

criterion_group!(benches, field_arithmetic, point_counts, orders, semigroups);
criterion_main!(benches);
