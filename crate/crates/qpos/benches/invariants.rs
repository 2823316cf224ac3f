//! Parallel vs sequential sweeps over the workloads the CLI actually runs:
//! family bound tables, polynomial corpora, and the G1 torus chain. Each
//! iteration starts from a fresh engine so the comparison measures compute,
//! not cache hits.

use criterion::{criterion_group, criterion_main, Criterion};

use qpos::batch::{map_indexed, map_indexed_seq};
use qpos::bounds::{
    family_generate, family_report, random_braid_words, FamilySpec, DEFAULT_SEED,
};
use qpos::braid::{closed_braid_diagram, BraidWord};
use qpos::diagram::LinkDiagram;
use qpos::skein::SkeinEngine;

fn torus_table(c: &mut Criterion) {
    let fams: Vec<_> = (-5..=5)
        .map(|k| family_generate(&FamilySpec::Torus2 { k }).unwrap())
        .collect();
    let mut group = c.benchmark_group("torus-table");
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new();
            map_indexed(fams.clone(), |_, fam| family_report(&eng, &fam, false))
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new();
            map_indexed_seq(fams.clone(), |_, fam| family_report(&eng, &fam, false))
        })
    });
    group.finish();
}

fn homfly_corpus(c: &mut Criterion) {
    let diagrams: Vec<LinkDiagram> = random_braid_words(DEFAULT_SEED, 24, 4, 8)
        .iter()
        .map(closed_braid_diagram)
        .collect();
    let mut group = c.benchmark_group("homfly-corpus");
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new();
            map_indexed(diagrams.clone(), |_, d| eng.homfly_p(&d).unwrap())
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new();
            map_indexed_seq(diagrams.clone(), |_, d| eng.homfly_p(&d).unwrap())
        })
    });
    group.finish();
}

fn g1_chain(c: &mut Criterion) {
    let diagrams: Vec<LinkDiagram> = (2..=11usize)
        .map(|n| closed_braid_diagram(&BraidWord::new(2, vec![-1; n]).unwrap()))
        .collect();
    let mut group = c.benchmark_group("g1-torus-chain");
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new().with_budgets(14, 16);
            map_indexed(diagrams.clone(), |_, d| eng.g_poly(&d, 1).unwrap())
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new().with_budgets(14, 16);
            map_indexed_seq(diagrams.clone(), |_, d| eng.g_poly(&d, 1).unwrap())
        })
    });
    group.finish();
}

fn congruence_trefoil(c: &mut Criterion) {
    // single-shot: the 18-crossing zero-framed trefoil cable
    let d = closed_braid_diagram(&BraidWord::new(2, vec![1, 1, 1]).unwrap());
    c.bench_function("congruence-trefoil", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new().with_budgets(24, 10);
            eng.congruence_check(&d).unwrap()
        })
    });
}

fn congruence_batch(c: &mut Criterion) {
    // heavier independent items: each cable expands mostly disjoint
    // subproblems, so the sweep is compute-bound rather than cache-bound
    let diagrams: Vec<LinkDiagram> = vec![
        closed_braid_diagram(&BraidWord::new(2, vec![1, 1]).unwrap()),
        closed_braid_diagram(&BraidWord::new(2, vec![1, 1, 1]).unwrap()),
        closed_braid_diagram(&BraidWord::new(2, vec![-1, -1, -1]).unwrap()),
        closed_braid_diagram(&BraidWord::new(3, vec![1, -2, 1, -2]).unwrap()),
    ];
    let mut group = c.benchmark_group("congruence-batch");
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new().with_budgets(24, 10);
            map_indexed(diagrams.clone(), |_, d| eng.congruence_check(&d).unwrap())
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let eng = SkeinEngine::new().with_budgets(24, 10);
            map_indexed_seq(diagrams.clone(), |_, d| eng.congruence_check(&d).unwrap())
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    torus_table,
    homfly_corpus,
    g1_chain,
    congruence_trefoil,
    congruence_batch
);
criterion_main!(benches);
