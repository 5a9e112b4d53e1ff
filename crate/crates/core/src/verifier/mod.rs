//! Seeded random corpora, theorem suites and replays of known examples.
//!
//! A corpus instance is a triple `(a, I, J)` of monomial ideals in the
//! standard ring `k[x1..xn]`: `a` is the relative ideal, `S/I` the module and
//! `J` an auxiliary ideal used as a second module `S/J` by suites that need
//! one. Every instance is analysed once and then handed to every suite.

pub mod fixtures;
pub mod suites;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::complex::Engine;
use crate::error::{Error, Result};
use crate::invariants::Analysis;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::par;
use crate::parse::{format_ideal, ideal_strings};
use crate::properties::{self, Verdict, Verdicts};
use crate::ring::RingSpec;

use suites::{Case, Outcome, CROSS_ENGINE, SUITES};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusParams {
    pub n: usize,
    pub max_exponent: u32,
    pub gen_count_range: RangeInclusive<usize>,
    pub squarefree: bool,
    pub count: usize,
    pub seed: u64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            n: 4,
            max_exponent: 3,
            gen_count_range: 1..=5,
            squarefree: false,
            count: 200,
            seed: 42,
        }
    }
}

impl CorpusParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidRing(format!("corpus parameters: {msg}")));
        if self.n == 0 || self.n > crate::monomial::MAX_VARS {
            return bad("n must be between 1 and 32");
        }
        if self.max_exponent == 0 {
            return bad("max_exponent must be positive");
        }
        if self.gen_count_range.is_empty() || *self.gen_count_range.start() == 0 {
            return bad("generator counts must be a nonempty range of positive integers");
        }
        if *self.gen_count_range.end() > crate::complex::MAX_TAYLOR_GENS {
            return bad("at most 16 generators per ideal");
        }
        Ok(())
    }

    pub fn ring(&self) -> RingSpec {
        RingSpec::standard(self.n).expect("validated variable count")
    }
}

/// The `index`-th pseudo-random proper nonzero monomial ideal of the corpus.
/// Each index draws from its own ChaCha stream, so ideals do not depend on
/// evaluation order.
pub fn random_ideal(params: &CorpusParams, index: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(index);
    let count = rng.random_range(params.gen_count_range.clone());
    let top = if params.squarefree { 1 } else { params.max_exponent };
    let gens = (0..count).map(|_| loop {
        let exps: Vec<u32> = (0..params.n).map(|_| rng.random_range(0..=top)).collect();
        if exps.iter().any(|&e| e > 0) {
            break Monomial::new(exps);
        }
    });
    MonomialIdeal::minimal_generators(params.n, gens.collect::<Vec<_>>()).expect("generated exponents match the ring")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub index: usize,
    pub a: MonomialIdeal,
    pub i: MonomialIdeal,
    /// Auxiliary ideal defining a second module `S/J`.
    pub aux: MonomialIdeal,
}

/// Instance `k` uses ideals `3k`, `3k + 1` and `3k + 2`; every fourth module
/// is the ring itself (`I = 0`).
pub fn instance(params: &CorpusParams, k: usize) -> Instance {
    let base = 3 * k as u64;
    let i = if k % 4 == 3 {
        MonomialIdeal::zero(params.n)
    } else {
        random_ideal(params, base + 1)
    };
    Instance {
        index: k,
        a: random_ideal(params, base),
        i,
        aux: random_ideal(params, base + 2),
    }
}

pub fn corpus(params: &CorpusParams) -> Vec<Instance> {
    (0..params.count).map(|k| instance(params, k)).collect()
}

/// SHA-256 over the canonical text form of every instance.
pub fn corpus_digest(params: &CorpusParams, instances: &[Instance]) -> String {
    let ring = params.ring();
    let mut hasher = Sha256::new();
    for inst in instances {
        let line = format!(
            "{}|{}|{}|{}\n",
            inst.index,
            format_ideal(&ring, &inst.a),
            format_ideal(&ring, &inst.i),
            format_ideal(&ring, &inst.aux)
        );
        hasher.update(line.as_bytes());
    }
    hex::encode(hasher.finalize())
}

/// Deliberate checker perturbations used to prove the suites are not vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fault {
    /// Negates the relative Cohen-Macaulay verdict before suites run.
    FlipRelativeCm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub a: String,
    pub i: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub hypothesis_mode: String,
    pub instances_run: usize,
    /// Instances on which the hypothesis was certified.
    pub non_vacuous: usize,
    pub violations: Vec<Violation>,
    /// Accumulated evaluation time over all instances.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: CorpusParams,
    pub engine: Engine,
    pub fault: Option<Fault>,
}

impl RunConfig {
    pub fn new(params: CorpusParams, engine: Engine) -> Self {
        RunConfig {
            params,
            engine,
            fault: None,
        }
    }

    pub fn with_fault(self, fault: Fault) -> Self {
        RunConfig {
            fault: Some(fault),
            ..self
        }
    }
}

/// Evaluation of every suite on one instance.
struct InstanceRun {
    record: Value,
    outcomes: Vec<(&'static str, Outcome, Duration)>,
}

#[derive(Debug, Clone)]
pub struct CorpusRun {
    pub params: CorpusParams,
    pub digest: String,
    pub suites: Vec<SuiteResult>,
    /// One JSON object per instance, in index order.
    pub records: Vec<Value>,
    /// Instance records of every violation, extended with suite, expected
    /// and actual.
    pub counterexamples: Vec<Value>,
}

impl CorpusRun {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.suite == name)
    }

    pub fn total_violations(&self) -> usize {
        self.suites.iter().map(|s| s.violations.len()).sum()
    }

    /// Writes the instance log to `path` and the counterexamples next to it;
    /// returns the counterexample path.
    pub fn write_jsonl(&self, path: &Path) -> Result<PathBuf> {
        write_lines(path, &self.records)?;
        let cex = counterexample_path(path);
        write_lines(&cex, &self.counterexamples)?;
        Ok(cex)
    }

    /// Suite summary as JSON, without timings.
    pub fn summary(&self) -> Value {
        json!({
            "params": self.params,
            "digest": self.digest,
            "passed": self.passed(),
            "suites": self.suites,
        })
    }
}

/// `corpus.jsonl` → `corpus.counterexamples.jsonl`.
pub fn counterexample_path(path: &Path) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("corpus");
    path.with_file_name(format!("{stem}.counterexamples.jsonl"))
}

fn write_lines(path: &Path, lines: &[Value]) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    for line in lines {
        serde_json::to_writer(&mut out, line).map_err(|e| Error::Io(e.to_string()))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

fn apply_fault(mut verdicts: Verdicts, fault: Option<Fault>) -> Verdicts {
    if fault == Some(Fault::FlipRelativeCm) {
        verdicts.rel_cm = match verdicts.rel_cm {
            Verdict::Holds => Verdict::Fails,
            Verdict::Fails => Verdict::Holds,
            v => v,
        };
    }
    verdicts
}

fn run_instance(config: &RunConfig, ring: &RingSpec, inst: &Instance) -> InstanceRun {
    let engine = &config.engine;
    let analysis = Analysis::new(engine, &inst.a, &inst.i);
    let mut outcomes = Vec::with_capacity(SUITES.len() + 1);

    let start = Instant::now();
    let cross = suites::cross_engine(engine, analysis.as_ref());
    outcomes.push((CROSS_ENGINE, cross, start.elapsed()));

    let mut record = json!({
        "seed": config.params.seed,
        "index": inst.index,
        "ring": { "n": ring.n(), "char": engine.field.characteristic() },
        "a": ideal_strings(ring, &inst.a),
        "i": ideal_strings(ring, &inst.i),
        "aux": ideal_strings(ring, &inst.aux),
    });
    match &analysis {
        Ok(an) => {
            let verdicts = apply_fault(Verdicts::from_analysis(an), config.fault);
            let case = Case {
                engine,
                instance: inst,
                analysis: an,
                verdicts,
            };
            for suite in SUITES {
                let start = Instant::now();
                let outcome = suite.run(&case);
                outcomes.push((suite.name, outcome, start.elapsed()));
            }
            record["invariants"] = serde_json::to_value(an.record()).expect("serializable");
            record["report"] = match properties::report_from_analysis(engine, an) {
                Ok(report) => serde_json::to_value(report).expect("serializable"),
                Err(e) => {
                    record["error"] = Value::String(e.to_string());
                    Value::Null
                }
            };
        }
        Err(e) => {
            for suite in SUITES {
                outcomes.push((suite.name, Outcome::Skipped, Duration::ZERO));
            }
            record["invariants"] = Value::Null;
            record["report"] = Value::Null;
            record["error"] = Value::String(e.to_string());
        }
    }
    let labels: BTreeMap<&str, &str> = outcomes.iter().map(|(name, o, _)| (*name, o.label())).collect();
    record["suites"] = json!(labels);
    InstanceRun { record, outcomes }
}

/// Generates the corpus, analyses every instance and runs every suite.
pub fn run_corpus(config: &RunConfig) -> Result<CorpusRun> {
    config.params.validate()?;
    let ring = config.params.ring();
    let instances = corpus(&config.params);
    let digest = corpus_digest(&config.params, &instances);
    let runs = par::map_collect(config.engine.mode, instances.len(), |k| {
        run_instance(config, &ring, &instances[k])
    });

    let mut suites: Vec<SuiteResult> = suites::suite_names()
        .into_iter()
        .map(|name| SuiteResult {
            suite: name.to_string(),
            hypothesis_mode: suites::hypothesis_mode(name).to_string(),
            instances_run: 0,
            non_vacuous: 0,
            violations: Vec::new(),
            wall_time: Duration::ZERO,
        })
        .collect();
    let mut counterexamples = Vec::new();
    for (inst, run) in instances.iter().zip(&runs) {
        for (slot, (name, outcome, elapsed)) in suites.iter_mut().zip(&run.outcomes) {
            debug_assert_eq!(slot.suite, *name);
            slot.wall_time += *elapsed;
            if *outcome == Outcome::Skipped {
                continue;
            }
            slot.instances_run += 1;
            if *outcome != Outcome::Vacuous {
                slot.non_vacuous += 1;
            }
            if let Outcome::Violation { expected, actual } = outcome {
                slot.violations.push(Violation {
                    index: inst.index,
                    a: format_ideal(&ring, &inst.a),
                    i: format_ideal(&ring, &inst.i),
                    expected: expected.clone(),
                    actual: actual.clone(),
                });
                let mut cex = run.record.clone();
                cex["suite"] = Value::String(name.to_string());
                cex["expected"] = Value::String(expected.clone());
                cex["actual"] = Value::String(actual.clone());
                counterexamples.push(cex);
            }
        }
    }
    Ok(CorpusRun {
        params: config.params.clone(),
        digest,
        suites,
        records: runs.into_iter().map(|r| r.record).collect(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideals_are_reproducible() {
        let p = CorpusParams::default();
        for k in 0..20 {
            assert_eq!(random_ideal(&p, k), random_ideal(&p, k));
            let ideal = random_ideal(&p, k);
            assert!(ideal.is_proper() && !ideal.is_zero());
            assert!(ideal.gens().iter().all(|g| g.exps().iter().all(|&e| e <= 3)));
        }
        assert_ne!(random_ideal(&p, 0), random_ideal(&p, 1));
    }

    #[test]
    fn squarefree_corpora() {
        let p = CorpusParams {
            squarefree: true,
            ..CorpusParams::default()
        };
        assert!((0..30).all(|k| random_ideal(&p, k).is_squarefree()));
    }

    #[test]
    fn single_generator_corpora() {
        let p = CorpusParams {
            gen_count_range: 1..=1,
            max_exponent: 1,
            ..CorpusParams::default()
        };
        for k in 0..30 {
            let ideal = random_ideal(&p, k);
            assert_eq!(ideal.mu(), 1);
            assert!(ideal.is_proper());
        }
    }

    #[test]
    fn digest_depends_on_seed() {
        let p = CorpusParams {
            count: 10,
            ..CorpusParams::default()
        };
        let q = CorpusParams { seed: 43, ..p.clone() };
        assert_eq!(corpus_digest(&p, &corpus(&p)), corpus_digest(&p, &corpus(&p)));
        assert_ne!(corpus_digest(&p, &corpus(&p)), corpus_digest(&q, &corpus(&q)));
    }

    #[test]
    fn rejects_bad_params() {
        let p = CorpusParams {
            gen_count_range: 0..=2,
            ..CorpusParams::default()
        };
        assert!(p.validate().is_err());
        let p = CorpusParams {
            n: 0,
            ..CorpusParams::default()
        };
        assert!(run_corpus(&RunConfig::new(p, Engine::default())).is_err());
    }

    #[test]
    fn small_run_passes_and_fault_is_caught() {
        let p = CorpusParams {
            count: 12,
            ..CorpusParams::default()
        };
        let clean = run_corpus(&RunConfig::new(p.clone(), Engine::default())).unwrap();
        assert!(clean.passed(), "{:#?}", clean.suites);
        assert!(clean.counterexamples.is_empty());
        let faulty = run_corpus(&RunConfig::new(p, Engine::default()).with_fault(Fault::FlipRelativeCm)).unwrap();
        assert!(!faulty.suite("ass_prime_criterion").unwrap().violations.is_empty());
        assert_eq!(faulty.counterexamples.len(), faulty.total_violations());
    }

    #[test]
    fn counterexample_file_name() {
        assert_eq!(
            counterexample_path(Path::new("/tmp/run.jsonl")),
            PathBuf::from("/tmp/run.counterexamples.jsonl")
        );
    }
}
