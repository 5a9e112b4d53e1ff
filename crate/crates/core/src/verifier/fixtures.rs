//! Fixed worked examples with known invariants, replayed exactly.
//!
//! | id                     | relative ideal `a`         | module `S/I`        |
//! |------------------------|----------------------------|---------------------|
//! | `c4_edge_y_ideal`      | `(y1, y2)`                 | `S/I(C4)`           |
//! | `artinian_gorenstein`  | `(x^2, y^3, xy)`           | `k[x, y]`           |
//! | `pure_power_regular`   | `(x1^2, x2^3)`             | `k[x1..x4]`         |
//! | `c4_edge_ideal_ring`   | `I(C4)`                    | `k[x1, x2, y1, y2]` |
//! | `principal_annihilated`| `(x)`                      | `k[x, y]/(x)`       |
//! | `non_radical_plane`    | `(xy, x^2)`                | `k[x, y]`           |
//! | `c4_not_regular`       | `I(C4)`                    | `k[x1, x2, y1, y2]` |
//!
//! `I(C4) = (x1x2, x2y1, y1y2, y2x1)` is the edge ideal of the four-cycle.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::time::Instant;

use serde::Serialize;

use crate::complex::{Engine, Functor};
use crate::error::{Error, Result};
use crate::invariants::Analysis;
use crate::monomial::{MonomialPrime, VarSet};
use crate::parse::{format_ideal, parse_ideal};
use crate::properties::{self, Verdict};
use crate::ring::RingSpec;

use super::{SuiteResult, Violation};

pub const EXAMPLE_IDS: &[&str] = &[
    "c4_edge_y_ideal",
    "artinian_gorenstein",
    "pure_power_regular",
    "c4_edge_ideal_ring",
    "principal_annihilated",
    "non_radical_plane",
    "c4_not_regular",
];

const C4: &str = "x1*x2, x2*y1, y1*y2, y2*x1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub quantity: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub id: String,
    pub description: String,
    pub ring: Vec<String>,
    pub a: String,
    pub i: String,
    pub checks: Vec<CheckRecord>,
    pub notes: Vec<String>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn to_suite_result(&self) -> SuiteResult {
        SuiteResult {
            suite: self.id.clone(),
            hypothesis_mode: "exact".into(),
            instances_run: self.checks.len(),
            non_vacuous: self.checks.len(),
            violations: self
                .checks
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.ok)
                .map(|(k, c)| Violation {
                    index: k,
                    a: self.a.clone(),
                    i: self.i.clone(),
                    expected: format!("{} = {}", c.quantity, c.expected),
                    actual: format!("{} = {}", c.quantity, c.actual),
                })
                .collect(),
            wall_time: Default::default(),
        }
    }
}

struct Checks(Vec<CheckRecord>);

impl Checks {
    fn eq<T: Debug + PartialEq>(&mut self, quantity: &str, expected: T, actual: T) {
        self.0.push(CheckRecord {
            quantity: quantity.to_string(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            ok: expected == actual,
        });
    }
}

struct Fixture {
    description: &'static str,
    ring: &'static str,
    a: &'static str,
    i: &'static str,
    notes: &'static [&'static str],
}

fn fixture(id: &str) -> Result<Fixture> {
    let f = match id {
        "c4_edge_y_ideal" => Fixture {
            description: "relative CM but not maximal CM nor Gorenstein over the four-cycle",
            ring: "x1,x2,y1,y2",
            a: "y1, y2",
            i: C4,
            notes: &[],
        },
        "artinian_gorenstein" => Fixture {
            description: "an m-primary ideal makes the ring relative Gorenstein",
            ring: "x,y",
            a: "x^2, y^3, x*y",
            i: "0",
            notes: &[],
        },
        "pure_power_regular" => Fixture {
            description: "pure powers of distinct variables make the ring relative regular",
            ring: "x1,x2,x3,x4",
            a: "x1^2, x2^3",
            i: "0",
            notes: &[],
        },
        "c4_edge_ideal_ring" => Fixture {
            description: "the ring is not relative CM with respect to the edge ideal of the four-cycle",
            ring: "x1,x2,y1,y2",
            a: C4,
            i: "0",
            notes: &[],
        },
        "principal_annihilated" => Fixture {
            description: "a module killed by a principal regular ideal has Ext in two degrees",
            ring: "x,y",
            a: "x",
            i: "x",
            notes: &[],
        },
        "non_radical_plane" => Fixture {
            description: "relative CM with a-relative injective dimension above the grade",
            ring: "x,y",
            a: "x*y, x^2",
            i: "0",
            notes: &["the local power-series ring is modeled by the graded ring k[x, y]; Ass, pd, grade, cd and a-id agree in both"],
        },
        "c4_not_regular" => Fixture {
            description: "the edge ideal of the four-cycle is not generated by a regular sequence",
            ring: "x1,x2,y1,y2",
            a: C4,
            i: "0",
            notes: &[],
        },
        _ => {
            return Err(Error::Unknown {
                kind: "example",
                name: id.to_string(),
            })
        }
    };
    Ok(f)
}

/// Replays one example, comparing every quantity against its known value.
pub fn reproduce_example(engine: &Engine, id: &str) -> Result<ExampleReport> {
    let f = fixture(id)?;
    let ring = RingSpec::parse(f.ring, engine.field.characteristic())?;
    let a = parse_ideal(&ring, f.a)?;
    let i = parse_ideal(&ring, f.i)?;
    let an = Analysis::new(engine, &a, &i)?;
    let report = properties::report_from_analysis(engine, &an)?;
    let rec = &report.invariants;
    let mut c = Checks(Vec::new());
    use Verdict::*;
    match id {
        "c4_edge_y_ideal" => {
            c.eq("grade(a, M)", Some(1), rec.grade);
            c.eq("cd(a, M)", Some(1), rec.cd);
            c.eq("cd(a, S)", 2, rec.cd_ring);
            c.eq("rel_cm", Holds, report.rel_cm);
            c.eq("rel_max_cm", Fails, report.rel_max_cm);
            c.eq("rel_gorenstein", Fails, report.rel_gorenstein);
        }
        "artinian_gorenstein" => {
            c.eq("Ext profile", Some(vec![2]), rec.ext_profile.clone());
            c.eq("rel_gorenstein", Holds, report.rel_gorenstein);
            c.eq("rel_max_cm", Holds, report.rel_max_cm);
            c.eq("rel_cm", Holds, report.rel_cm);
        }
        "pure_power_regular" => {
            c.eq("rel_regular_ring", Holds, report.rel_regular_ring);
            c.eq("rel_regular_module", Holds, report.rel_regular_module);
            c.eq("pd(S/aS)", 2, rec.pd_a);
            c.eq("pd(S) + cd(a, S)", Some(2), rec.pd.map(|pd| pd + rec.cd_ring));
        }
        "c4_edge_ideal_ring" => {
            c.eq("pd(S/a)", 3, engine.pd(&a)?);
            c.eq("depth(S/a)", 1, engine.depth(&a)?);
            c.eq("dim(S/a)", 2, a.dim_quotient()?);
            c.eq("cd(a, S)", Some(3), rec.cd);
            c.eq("grade(a, S)", Some(2), rec.grade);
            c.eq("a-id(S)", Some(3), rec.a_id);
            c.eq("rel_cm", Fails, report.rel_cm);
            c.eq("rel_regular_ring", Fails, report.rel_regular_ring);
            let m = parse_ideal(&ring, "x1, x2, y1, y2")?;
            let scan = engine.scan_box(&m, &a);
            let hilbert = engine.hilbert_in_box(Functor::LocalCohomology, &m, &a, 1, &scan)?;
            let total: usize = hilbert.iter().map(|(_, d)| d).sum();
            let support: Vec<Vec<i64>> = hilbert.iter().filter(|(_, d)| *d > 0).map(|(b, _)| b.clone()).collect();
            c.eq("total dim of H^1_m(S/a) over the box", 1, total);
            c.eq("support of H^1_m(S/a)", vec![vec![0i64; 4]], support);
        }
        "principal_annihilated" => {
            c.eq("pd(S/a)", 1, rec.pd_a);
            c.eq("cd(a, S)", 1, rec.cd_ring);
            c.eq("Ext profile", Some(vec![0, 1]), rec.ext_profile.clone());
            c.eq("rel_gorenstein", Fails, report.rel_gorenstein);
        }
        "non_radical_plane" => {
            let ass: BTreeSet<MonomialPrime> = a.associated_primes()?.into_iter().collect();
            let expected: BTreeSet<MonomialPrime> = [VarSet::from_indices([0]), VarSet::from_indices([0, 1])]
                .into_iter()
                .map(|vars| MonomialPrime::new(2, vars))
                .collect();
            c.eq("Ass(S/a)", expected, ass);
            c.eq("grade(a, S)", Some(1), rec.grade);
            c.eq("cd(a, S)", Some(1), rec.cd);
            c.eq("a-id(S)", Some(2), rec.a_id);
            c.eq("rel_cm", Holds, report.rel_cm);
            c.eq("a-id differs from grade", true, rec.a_id != rec.grade);
        }
        "c4_not_regular" => {
            c.eq("grade(a, S)", 2, rec.grade_ring);
            c.eq("mu(a)", 4, rec.mu);
            c.eq("rel_regular_ring", Fails, report.rel_regular_ring);
        }
        _ => unreachable!("fixture() rejects unknown ids"),
    }
    Ok(ExampleReport {
        id: id.to_string(),
        description: f.description.to_string(),
        ring: ring.names().to_vec(),
        a: format_ideal(&ring, &a),
        i: format_ideal(&ring, &i),
        checks: c.0,
        notes: f.notes.iter().map(|s| s.to_string()).collect(),
    })
}

pub fn reproduce_all(engine: &Engine) -> Result<Vec<ExampleReport>> {
    EXAMPLE_IDS.iter().map(|id| reproduce_example(engine, id)).collect()
}

/// Replays every example and returns per-example suite results, timed.
pub fn example_suites(engine: &Engine) -> Result<Vec<SuiteResult>> {
    EXAMPLE_IDS
        .iter()
        .map(|id| {
            let start = Instant::now();
            let mut result = reproduce_example(engine, id)?.to_suite_result();
            result.wall_time = start.elapsed();
            Ok(result)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_reproduces() {
        let engine = Engine::default();
        for report in reproduce_all(&engine).unwrap() {
            assert!(report.passed(), "{report:#?}");
            assert!(report.to_suite_result().passed());
        }
    }

    #[test]
    fn unknown_example_is_an_error() {
        assert!(matches!(
            reproduce_example(&Engine::default(), "nope"),
            Err(Error::Unknown { .. })
        ));
    }
}
