use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use cbc_bench::{build, specs};
use cbc_core::breadth::breadth_profile;
use cbc_core::group::enumerate_normal_subgroups;
use cbc_core::theorems::theorem2;

fn build_group(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_group");
    for (name, spec) in specs() {
        group.bench_function(name, |b| b.iter(|| build(black_box(&spec))));
    }
    group.finish();
}

fn breadth(c: &mut Criterion) {
    let mut group = c.benchmark_group("breadth_profile");
    for (name, spec) in specs() {
        let g = build(&spec);
        group.bench_function(name, |b| b.iter(|| breadth_profile(black_box(&g))));
    }
    group.finish();
}

fn normal_lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_subgroups");
    group.sample_size(10);
    for (name, spec) in specs() {
        let g = build(&spec);
        group.bench_function(name, |b| b.iter(|| enumerate_normal_subgroups(black_box(&g), 5000)));
    }
    group.finish();
}

fn class_breadth_subgroup(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem2");
    for (name, spec) in specs() {
        let g = build(&spec);
        group.bench_function(name, |b| b.iter(|| theorem2(black_box(&g)).expect("holds")));
    }
    group.finish();
}

criterion_group!(benches, build_group, breadth, normal_lattice, class_breadth_subgroup);
criterion_main!(benches);
