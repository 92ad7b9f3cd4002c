use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use permdek_bench::{reversed, sample_permutations};
use permdek_core::dek::{clairvoyant_winnable, optimal_policy_value};
use permdek_core::dyck::{enumerate_dyck_paths, knuth_richards};
use permdek_core::enumerate::{count_obtainable, obtainable_with, SearchOptions};
use permdek_core::{ContainerKind, MachineConfig};

fn obtainability(c: &mut Criterion) {
    let config = MachineConfig::pair(ContainerKind::Stack, ContainerKind::Queue);
    let sample = sample_permutations(8, 64);
    let mut group = c.benchmark_group("obtainable/stack-queue/n8");
    for (name, options) in [
        ("memo+canon", SearchOptions::default()),
        ("memo", SearchOptions { memoize: true, canonicalize: false }),
        ("plain", SearchOptions { memoize: false, canonicalize: false }),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| {
                sample
                    .iter()
                    .filter(|p| obtainable_with(&config, p, options).unwrap())
                    .count()
            })
        });
    }
    group.finish();
}

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    group.sample_size(10);
    for name in ["two-stacks", "stack-queue", "deque"] {
        let config: MachineConfig = name.parse().unwrap();
        group.bench_with_input(BenchmarkId::new(name, 6), &config, |b, config| {
            b.iter(|| count_obtainable(config, 6).unwrap().count)
        });
    }
    group.finish();
}

fn dek(c: &mut Criterion) {
    let mut group = c.benchmark_group("dek");
    for n in [6, 8, 10] {
        let deal = reversed(n);
        group.bench_with_input(BenchmarkId::new("clairvoyant/reversed", n), &deal, |b, deal| {
            b.iter(|| clairvoyant_winnable(black_box(deal)).unwrap().0)
        });
    }
    group.sample_size(10);
    group.bench_function("policy/n6", |b| b.iter(|| optimal_policy_value(6).unwrap()));
    group.finish();
}

fn dyck(c: &mut Criterion) {
    c.bench_function("dyck/enumerate/n10", |b| b.iter(|| enumerate_dyck_paths(10).unwrap().count()));
    let stackable: Vec<_> = sample_permutations(9, 2000).into_iter().filter(|p| p.avoids_312()).collect();
    c.bench_function("dyck/knuth_richards/n9", |b| {
        b.iter(|| stackable.iter().map(|p| knuth_richards(p).unwrap()).collect::<Vec<_>>())
    });
}

criterion_group!(benches, obtainability, counting, dek, dyck);
criterion_main!(benches);
