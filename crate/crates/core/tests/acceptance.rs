//! Acceptance criteria, one printed line each.
//!
//! Runs without the libtest harness so every line is shown under
//! `cargo test`; the process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use relcm::complex::Functor;
use relcm::monomial::{MonomialPrime, VarSet};
use relcm::parse::parse_ideal;
use relcm::verifier::{run_corpus, CorpusParams, CorpusRun, Fault, RunConfig};
use relcm::{Engine, MonomialIdeal, PrimeField, RingSpec, Verdict};

/// Characteristic of the coefficient field for every exact comparison.
const CHARACTERISTIC: u32 = 32003;
/// Default corpus: seed, size, ring size, exponent and generator caps.
const SEED: u64 = 42;
const CORPUS_SIZE: usize = 200;
const CORPUS_VARS: usize = 4;
const MAX_EXPONENT: u32 = 3;
const MAX_GENERATORS: usize = 5;
/// Extra box padding under which every profile must be unchanged.
const BOX_PADDING: u32 = 2;
/// Minimum number of informative instances for the Ext vanishing bound.
const MIN_EXT_BOUND_INSTANCES: usize = 10;
/// Violations tolerated in any suite.
const MAX_VIOLATIONS: usize = 0;

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    outcome: Outcome,
}

fn engine() -> Engine {
    Engine::new(PrimeField::new(CHARACTERISTIC).expect("prime"))
}

fn ideal(ring: &RingSpec, text: &str) -> MonomialIdeal {
    parse_ideal(ring, text).expect("fixture parses")
}

/// Collects `(name, expected, actual)` comparisons into one outcome.
struct Compare(Vec<String>, usize);

impl Compare {
    fn new() -> Self {
        Compare(Vec::new(), 0)
    }

    fn eq<T: std::fmt::Debug + PartialEq>(&mut self, name: &str, expected: T, actual: T) {
        self.1 += 1;
        if expected != actual {
            self.0.push(format!("{name}: expected {expected:?}, got {actual:?}"));
        }
    }

    fn finish(self) -> Outcome {
        if self.0.is_empty() {
            Ok(format!("{} exact values match", self.1))
        } else {
            Err(self.0.join("; "))
        }
    }
}

const C4: &str = "x1*x2, x2*y1, y1*y2, y2*x1";

fn c4_ring() -> RingSpec {
    RingSpec::parse("x1,x2,y1,y2", CHARACTERISTIC).unwrap()
}

fn report(a: &MonomialIdeal, i: &MonomialIdeal) -> Result<relcm::PropertyReport, String> {
    relcm::properties::full_report(&engine(), a, i).map_err(|e| e.to_string())
}

fn edge_ideal_with_y_variables() -> Outcome {
    let ring = c4_ring();
    let r = report(&ideal(&ring, "y1, y2"), &ideal(&ring, C4))?;
    let mut c = Compare::new();
    c.eq("grade", Some(1), r.invariants.grade);
    c.eq("cd", Some(1), r.invariants.cd);
    c.eq("cd(a, S)", 2, r.invariants.cd_ring);
    c.eq("rel_cm", Verdict::Holds, r.rel_cm);
    c.eq("rel_max_cm", Verdict::Fails, r.rel_max_cm);
    c.eq("rel_gorenstein", Verdict::Fails, r.rel_gorenstein);
    c.finish()
}

fn edge_ideal_on_the_ring() -> Outcome {
    let ring = c4_ring();
    let e = engine();
    let a = ideal(&ring, C4);
    let zero = MonomialIdeal::zero(4);
    let r = report(&a, &zero)?;
    let mut c = Compare::new();
    c.eq("pd(S/a)", Ok(3), e.pd(&a).map_err(|e| e.to_string()));
    c.eq("depth(S/a)", Ok(1), e.depth(&a).map_err(|e| e.to_string()));
    c.eq("dim(S/a)", Ok(2), a.dim_quotient().map_err(|e| e.to_string()));
    c.eq("cd(a, S)", Some(3), r.invariants.cd);
    c.eq("grade(a, S)", Some(2), r.invariants.grade);
    c.eq("a-id(S)", Some(3), r.invariants.a_id);
    c.eq("rel_cm", Verdict::Fails, r.rel_cm);
    c.eq("rel_regular_ring", Verdict::Fails, r.rel_regular_ring);
    let m = ideal(&ring, "x1, x2, y1, y2");
    let scan = e.scan_box(&m, &a);
    let hilbert = e
        .hilbert_in_box(Functor::LocalCohomology, &m, &a, 1, &scan)
        .map_err(|e| e.to_string())?;
    let total: usize = hilbert.iter().map(|(_, d)| d).sum();
    let support: Vec<Vec<i64>> = hilbert.iter().filter(|(_, d)| *d > 0).map(|(b, _)| b.clone()).collect();
    c.eq("H^1_m(S/a) total", 1, total);
    c.eq("H^1_m(S/a) support", vec![vec![0i64; 4]], support);
    c.finish()
}

fn non_radical_plane() -> Outcome {
    let ring = RingSpec::parse("x,y", CHARACTERISTIC).unwrap();
    let a = ideal(&ring, "x*y, x^2");
    let r = report(&a, &MonomialIdeal::zero(2))?;
    let ass: BTreeSet<MonomialPrime> = a.associated_primes().map_err(|e| e.to_string())?.into_iter().collect();
    let expected: BTreeSet<MonomialPrime> = [VarSet::from_indices([0]), VarSet::from_indices([0, 1])]
        .into_iter()
        .map(|v| MonomialPrime::new(2, v))
        .collect();
    let mut c = Compare::new();
    c.eq("Ass(R/a)", expected, ass);
    c.eq("grade", Some(1), r.invariants.grade);
    c.eq("cd", Some(1), r.invariants.cd);
    c.eq("a-id", Some(2), r.invariants.a_id);
    c.eq("rel_cm", Verdict::Holds, r.rel_cm);
    c.eq("a-id differs from grade", true, r.invariants.a_id != r.invariants.grade);
    c.finish()
}

fn gorenstein_and_regular_instances() -> Outcome {
    let plane = RingSpec::parse("x,y", CHARACTERISTIC).unwrap();
    let r = report(&ideal(&plane, "x^2, y^3, x*y"), &MonomialIdeal::zero(2))?;
    let mut c = Compare::new();
    c.eq("Ext profile", Some(vec![2]), r.invariants.ext_profile.clone());
    c.eq("rel_gorenstein", Verdict::Holds, r.rel_gorenstein);

    let ring = RingSpec::standard(4).unwrap();
    let a = ideal(&ring, "x1^2, x2^3");
    let r = report(&a, &MonomialIdeal::zero(4))?;
    c.eq("rel_regular_ring", Verdict::Holds, r.rel_regular_ring);
    c.eq("pd(S/aS)", 2, r.invariants.pd_a);
    c.eq(
        "pd(S) + cd(a, S)",
        Some(2),
        r.invariants.pd.map(|pd| pd + r.invariants.cd_ring),
    );
    c.finish()
}

fn default_params() -> CorpusParams {
    CorpusParams {
        n: CORPUS_VARS,
        max_exponent: MAX_EXPONENT,
        gen_count_range: 1..=MAX_GENERATORS,
        squarefree: false,
        count: CORPUS_SIZE,
        seed: SEED,
    }
}

fn suite_line(run: &CorpusRun, name: &str) -> Result<String, String> {
    let s = run.suite(name).ok_or_else(|| format!("suite {name} missing"))?;
    let line = format!("{name} {}/{} informative", s.non_vacuous, s.instances_run);
    if s.violations.len() > MAX_VIOLATIONS {
        let first = &s.violations[0];
        Err(format!(
            "{line}, {} violations (first: instance {} a={} i={}: expected {}, got {})",
            s.violations.len(),
            first.index,
            first.a,
            first.i,
            first.expected,
            first.actual
        ))
    } else {
        Ok(line)
    }
}

fn cross_engine(run: &CorpusRun) -> Outcome {
    // The cross-engine suite compares grade (Ext, Čech, localization), cd
    // (Čech, minimal primes), a-id against pd(S/a) and all profiles under
    // the padded box on every instance.
    let s = run.suite("cross_engine").ok_or("cross_engine missing")?;
    if relcm::verifier::suites::BOX_PADDING_CHECK != BOX_PADDING {
        return Err(format!(
            "suite pads the box by {}",
            relcm::verifier::suites::BOX_PADDING_CHECK
        ));
    }
    if s.instances_run != CORPUS_SIZE {
        return Err(format!("ran on {} of {CORPUS_SIZE} instances", s.instances_run));
    }
    let id = suite_line(run, "relative_id_equals_pd")?;
    suite_line(run, "cross_engine").map(|l| format!("{l}; {id}; box padding +{BOX_PADDING}"))
}

const THEOREM_SUITES: &[&str] = &[
    "gorenstein_chain",
    "ass_prime_criterion",
    "torsion_equivalence",
    "sop_cd_drop",
    "sop_regular_sequence",
    "ext_vanishing_bound",
    "regular_numeric_criterion",
    "regular_ext_concentration",
    "relative_id_nzd_quotient",
    "localized_cm_at_minimal_primes",
    "pd_regular_quotient",
    "gorenstein_two_paths",
    "regular_ring_lifts_maxcm",
];

fn theorem_suites(run: &CorpusRun) -> Outcome {
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for name in THEOREM_SUITES {
        match suite_line(run, name) {
            Ok(l) => lines.push(l),
            Err(e) => failures.push(e),
        }
    }
    let bound = run.suite("ext_vanishing_bound").ok_or("ext_vanishing_bound missing")?;
    if bound.non_vacuous < MIN_EXT_BOUND_INSTANCES {
        failures.push(format!(
            "ext_vanishing_bound informative on {} < {MIN_EXT_BOUND_INSTANCES} instances",
            bound.non_vacuous
        ));
    }
    if failures.is_empty() {
        Ok(lines.join(", "))
    } else {
        Err(failures.join("; "))
    }
}

fn fault_injection(params: &CorpusParams) -> Outcome {
    let run = run_corpus(&RunConfig::new(params.clone(), engine()).with_fault(Fault::FlipRelativeCm))
        .map_err(|e| e.to_string())?;
    let hit: Vec<String> = run
        .suites
        .iter()
        .filter(|s| !s.violations.is_empty())
        .map(|s| format!("{} ({})", s.suite, s.violations.len()))
        .collect();
    if hit.is_empty() {
        Err("no suite noticed the flipped verdict".into())
    } else {
        Ok(format!("flipped rel_cm caught by {}", hit.join(", ")))
    }
}

fn determinism(first: &CorpusRun, params: &CorpusParams) -> Outcome {
    let second = run_corpus(&RunConfig::new(params.clone(), engine())).map_err(|e| e.to_string())?;
    let bytes = |run: &CorpusRun| -> String {
        let mut out = serde_json::to_string(&run.summary()).unwrap();
        for r in &run.records {
            out.push('\n');
            out.push_str(&serde_json::to_string(r).unwrap());
        }
        out
    };
    if first.digest != second.digest {
        return Err(format!("digests differ: {} vs {}", first.digest, second.digest));
    }
    let (x, y) = (bytes(first), bytes(&second));
    if x != y {
        return Err("reports differ between runs".into());
    }
    let fixtures_a = relcm::verifier::fixtures::reproduce_all(&engine()).map_err(|e| e.to_string())?;
    let fixtures_b = relcm::verifier::fixtures::reproduce_all(&engine()).map_err(|e| e.to_string())?;
    if serde_json::to_string(&fixtures_a).unwrap() != serde_json::to_string(&fixtures_b).unwrap() {
        return Err("example reports differ between runs".into());
    }
    Ok(format!(
        "digest {} and {} report bytes identical",
        &first.digest[..16],
        x.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let params = default_params();
    let corpus = run_corpus(&RunConfig::new(params.clone(), engine()));
    let corpus_outcome = |f: &dyn Fn(&CorpusRun) -> Outcome| match &corpus {
        Ok(run) => f(run),
        Err(e) => Err(format!("corpus run failed: {e}")),
    };
    let criteria = vec![
        Criterion {
            id: "AC1",
            title: "edge ideal of the four-cycle with a = (y1, y2)",
            outcome: edge_ideal_with_y_variables(),
        },
        Criterion {
            id: "AC2",
            title: "ring relative to the edge ideal of the four-cycle",
            outcome: edge_ideal_on_the_ring(),
        },
        Criterion {
            id: "AC3",
            title: "non-radical ideal (xy, x^2) in k[x, y]",
            outcome: non_radical_plane(),
        },
        Criterion {
            id: "AC4",
            title: "Gorenstein m-primary ideal and regular pure powers",
            outcome: gorenstein_and_regular_instances(),
        },
        Criterion {
            id: "AC5",
            title: "cross-engine agreement on the seeded corpus",
            outcome: corpus_outcome(&cross_engine),
        },
        Criterion {
            id: "AC6",
            title: "theorem suites on the seeded corpus",
            outcome: corpus_outcome(&theorem_suites),
        },
        Criterion {
            id: "AC7",
            title: "fault injection is detected",
            outcome: fault_injection(&params),
        },
        Criterion {
            id: "AC8",
            title: "determinism across identical runs",
            outcome: corpus_outcome(&|run| determinism(run, &params)),
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        match &c.outcome {
            Ok(detail) => println!("PASS {} {}: {}", c.id, c.title, detail),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {}: {}", c.id, c.title, detail);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
