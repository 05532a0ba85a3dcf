use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rmub::hadamard::{construct, HadamardCatalog};
use rmub::search::{extend_lattice_lines, max_orthogonal_sign_vectors, SearchBudget};
use rmub::{canonical_form, greedy_lines, sylvester_lines};
use rmub_bench::latin_power_of_four;

fn verification(c: &mut Criterion) {
    let d16 = latin_power_of_four(2);
    let d64 = latin_power_of_four(3);
    c.bench_function("verify latin mubs d=16", |b| b.iter(|| black_box(&d16).violation()));
    c.bench_function("verify latin mubs d=64", |b| b.iter(|| black_box(&d64).violation()));
    c.bench_function("canonical form d=64", |b| b.iter(|| canonical_form(black_box(&d64)).unwrap()));
}

fn constructions(c: &mut Criterion) {
    c.bench_function("latin mubs d=64", |b| b.iter(|| latin_power_of_four(black_box(3))));
    c.bench_function("hadamard 188", |b| b.iter(|| construct(black_box(188)).unwrap()));
    c.bench_function("hadamard catalog build", |b| b.iter(HadamardCatalog::build));
    c.bench_function("greedy lines d=64", |b| b.iter(|| greedy_lines(black_box(64)).unwrap()));
}

fn searches(c: &mut Criterion) {
    let syl = sylvester_lines(2, 1, &[1, 1, 1]).unwrap();
    let greedy = greedy_lines(16).unwrap();
    let one = SearchBudget::default().with_workers(1);
    let all = SearchBudget::default();
    let mut g = c.benchmark_group("search");
    g.sample_size(20);
    g.bench_function("extend sylvester d=16, 1 worker", |b| b.iter(|| extend_lattice_lines(&syl, &one).unwrap()));
    g.bench_function("extend sylvester d=16, all workers", |b| b.iter(|| extend_lattice_lines(&syl, &all).unwrap()));
    g.bench_function("extend greedy d=16", |b| b.iter(|| extend_lattice_lines(&greedy, &all).unwrap()));
    g.bench_function("max orthogonal d=12", |b| b.iter(|| max_orthogonal_sign_vectors(black_box(12)).unwrap()));
    g.finish();
}

criterion_group!(benches, verification, constructions, searches);
criterion_main!(benches);
