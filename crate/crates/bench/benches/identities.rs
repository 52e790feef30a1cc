use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use symplane::combinat::symmetric_pp_generating_function;
use symplane::exactalg::{determinant, x_pow, PolyMatrix};
use symplane::identity::{eq6_sides, lemma_sides};
use symplane::schur::{box_det_ratio, schur_box_sum, BoxParams, SchurBackend};

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("weyl_determinant");
    for n in [3usize, 4, 5, 6] {
        let m = PolyMatrix::from_fn(n, |i, j| {
            &x_pow(i, j as i32 - 1) - &x_pow(i, (2 * n - j) as i32)
        });
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| determinant(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn theorem(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem");
    group.sample_size(10);
    for (m, n) in [(2u32, 3usize), (4, 4)] {
        let p = BoxParams::new(m, n);
        group.bench_with_input(
            BenchmarkId::new("det_ratio", format!("{m}x{n}")),
            &p,
            |b, &p| b.iter(|| box_det_ratio(p).unwrap()),
        );
        for (name, backend) in [
            ("tableaux", SchurBackend::Tableaux),
            ("bialternant", SchurBackend::Bialternant),
        ] {
            group.bench_with_input(BenchmarkId::new(name, format!("{m}x{n}")), &p, |b, &p| {
                b.iter(|| schur_box_sum(p, backend).unwrap())
            });
        }
    }
    group.finish();
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identities");
    group.sample_size(10);
    group.bench_function("lemma_6", |b| b.iter(|| lemma_sides(black_box(6))));
    group.bench_function("eq6_3", |b| b.iter(|| eq6_sides(black_box(3)).unwrap()));
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("symmetric_pp_gf_4x4", |b| {
        b.iter(|| symmetric_pp_generating_function(black_box(4), black_box(4)))
    });
}

criterion_group!(benches, determinants, theorem, identities, enumeration);
criterion_main!(benches);
