//! Sequential versus rayon-parallel execution of the hot paths: degree-box
//! profile scans, the monomial s.o.p. search and a small verifier corpus.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use relcm::invariants::{cd, default_degree_bound, sop_search};
use relcm::parse::parse_ideal;
use relcm::verifier::{run_corpus, CorpusParams, RunConfig};
use relcm::{Engine, ExecMode, MonomialIdeal, PrimeField, RingSpec};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn engine(mode: ExecMode) -> Engine {
    Engine::new(PrimeField::default()).with_mode(mode)
}

fn pair(ring: &str, a: &str, i: &str) -> (MonomialIdeal, MonomialIdeal) {
    let ring = RingSpec::parse(ring, relcm::ring::DEFAULT_CHAR).expect("valid ring");
    (
        parse_ideal(&ring, a).expect("valid a"),
        parse_ideal(&ring, i).expect("valid I"),
    )
}

fn profile_scans(c: &mut Criterion) {
    let (a, i) = pair(
        "x1,x2,y1,y2,z",
        "y1^2, y2*z, x1*y2",
        "x1*x2, x2*y1^2, y1*y2, y2*x1, z^3",
    );
    let mut group = c.benchmark_group("profile_scan");
    for (name, mode) in MODES {
        let e = engine(mode);
        group.bench_with_input(BenchmarkId::new("ext", name), &e, |b, e| {
            b.iter(|| e.ext_profile(&a, &i).expect("profile"))
        });
        group.bench_with_input(BenchmarkId::new("local_cohomology", name), &e, |b, e| {
            b.iter(|| e.lc_profile(&a, &i).expect("profile"))
        });
    }
    group.finish();
}

fn sop(c: &mut Criterion) {
    let (a, i) = pair(
        "x1,x2,x3,x4,x5",
        "x1*x2, x2*x3, x3*x4, x4*x5, x5*x1",
        "x1^2*x3, x2*x4^2",
    );
    let mut group = c.benchmark_group("sop_search");
    for (name, mode) in MODES {
        let e = engine(mode);
        let height = cd(&e, &a, &i).expect("cd").expect("nonzero module");
        let bound = default_degree_bound(&e, &a);
        group.bench_with_input(BenchmarkId::from_parameter(name), &e, |b, e| {
            b.iter(|| sop_search(e, &a, &i, height, bound).expect("search"))
        });
    }
    group.finish();
}

fn corpus(c: &mut Criterion) {
    let params = CorpusParams {
        count: 24,
        ..CorpusParams::default()
    };
    let mut group = c.benchmark_group("corpus_24");
    group.sample_size(10);
    for (name, mode) in MODES {
        let config = RunConfig::new(params.clone(), engine(mode));
        group.bench_with_input(BenchmarkId::from_parameter(name), &config, |b, config| {
            b.iter(|| run_corpus(config).expect("corpus runs"))
        });
    }
    group.finish();
}

criterion_group!(benches, profile_scans, sop, corpus);
criterion_main!(benches);
