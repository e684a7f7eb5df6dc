use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use harmonia::catalog::{random_nonneg_line, random_torus};
use harmonia::maximal::{cz_decompose, hl_maximal};
use harmonia::singular::{riesz_pv, riesz_transform};
use harmonia::{dft_analyze, dft_line, LineGrid, TorusGrid};

fn fft(c: &mut Criterion) {
    let mut g = c.benchmark_group("dft_analyze");
    for n in [1usize << 10, 1 << 14] {
        let f = random_torus(TorusGrid::new(n).unwrap(), 1);
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| b.iter(|| dft_analyze(black_box(f))));
    }
    g.finish();
    let f = random_nonneg_line(LineGrid::new(2, 8.0, 256).unwrap(), 1);
    c.bench_function("dft_line_2d_256", |b| b.iter(|| dft_line(black_box(&f))));
}

fn maximal(c: &mut Criterion) {
    let f = random_nonneg_line(LineGrid::new(1, 8.0, 4096).unwrap(), 2);
    c.bench_function("hl_maximal_1d_4096", |b| b.iter(|| hl_maximal(black_box(&f))));
    let f2 = random_nonneg_line(LineGrid::new(2, 4.0, 64).unwrap(), 2);
    c.bench_function("hl_maximal_2d_64", |b| b.iter(|| hl_maximal(black_box(&f2))));
    c.bench_function("cz_decompose_2d_64", |b| b.iter(|| cz_decompose(black_box(&f2), 2.0).unwrap()));
}

fn riesz(c: &mut Criterion) {
    let f = random_nonneg_line(LineGrid::new(2, 8.0, 64).unwrap(), 3);
    c.bench_function("riesz_multiplier_64", |b| b.iter(|| riesz_transform(black_box(&f), 1).unwrap()));
    c.bench_function("riesz_pv_64", |b| b.iter(|| riesz_pv(black_box(&f), 1, 0.5).unwrap()));
}

criterion_group!(benches, fft, maximal, riesz);
criterion_main!(benches);
