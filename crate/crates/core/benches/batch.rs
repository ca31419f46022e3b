use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use namelint::batch::{analyze, evaluate_sequential};
use namelint::{IdentifierRecord, Lexicon, RuleConfig};

const WORDS: [&str; 12] = [
    "get", "set", "user", "name", "cached", "node", "repr", "url", "compute", "size", "file",
    "path",
];

fn corpus(n: usize) -> Vec<IdentifierRecord> {
    (0..n)
        .map(|i| {
            let len = 1 + i % 6;
            let words: Vec<String> = (0..len)
                .map(|k| {
                    let w = WORDS[(i * 7 + k * 3) % WORDS.len()];
                    if k == 0 || i % 10 == 0 {
                        w.to_string()
                    } else {
                        w[..1].to_uppercase() + &w[1..]
                    }
                })
                .collect();
            let name = if i % 10 == 0 {
                words.join("_")
            } else {
                words.concat()
            };
            IdentifierRecord::new(&name, &format!("src/f{}.java", i / 50), i % 50 + 1)
                .unwrap()
                .with_language("java")
        })
        .collect()
}

fn bench_batch(c: &mut Criterion) {
    let lexicon = Lexicon::builtin();
    let cfg = RuleConfig::default();
    let mut group = c.benchmark_group("analyze");
    for n in [1_000, 10_000] {
        let records = corpus(n);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("sequential", n), &records, |b, recs| {
            b.iter(|| analyze(black_box(recs), lexicon, &cfg, 1).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &records, |b, recs| {
            b.iter(|| analyze(black_box(recs), lexicon, &cfg, 0).unwrap())
        });
    }
    group.finish();

    let records = corpus(10_000);
    let mut group = c.benchmark_group("evaluate");
    group.throughput(Throughput::Elements(records.len() as u64));
    group.bench_function("sequential", |b| {
        b.iter(|| evaluate_sequential(black_box(&records), lexicon, &cfg))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| namelint::batch::evaluate_parallel(black_box(&records), lexicon, &cfg))
    });
    group.finish();
}

criterion_group!(benches, bench_batch);
criterion_main!(benches);
