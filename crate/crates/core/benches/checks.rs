use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hom_yd::catalog::{taft_biproduct, taft_bundle};
use hom_yd::constructions::check_radford_conditions;
use hom_yd::par;
use hom_yd::structures::check_hom_bialgebra;
use hom_yd::Field;
use hom_yd_testkit::fuzz::Generator;

fn modes(c: &mut Criterion) {
    let f = Field::Prime(7);
    let b = taft_biproduct(f, &f.from_i64(3)).unwrap();
    let d = taft_bundle(f, &f.from_i64(3)).unwrap().data;
    let (batch, _) = Generator::new(7).admissible(40, 400).unwrap();

    let mut g = c.benchmark_group("parallel vs sequential");
    for parallel in [true, false] {
        let mode = if parallel { "parallel" } else { "sequential" };
        g.bench_with_input(BenchmarkId::new("taft biproduct axioms", mode), &parallel, |bench, &on| {
            par::set_parallel(on);
            bench.iter(|| check_hom_bialgebra(b.bialgebra()).unwrap().passed());
        });
        g.bench_with_input(BenchmarkId::new("taft R1–R5", mode), &parallel, |bench, &on| {
            par::set_parallel(on);
            bench.iter(|| check_radford_conditions(&d).unwrap().passed());
        });
        g.bench_with_input(BenchmarkId::new("fuzz batch R1–R5", mode), &parallel, |bench, &on| {
            par::set_parallel(on);
            bench.iter(|| par::map(&batch, |i| check_radford_conditions(&i.data).unwrap().passed()));
        });
    }
    g.finish();
    par::set_parallel(true);
}

criterion_group!(benches, modes);
criterion_main!(benches);
