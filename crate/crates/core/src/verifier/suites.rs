//! Theorem suites evaluated on one corpus instance at a time.
//!
//! Every suite decides, for a single instance, whether its hypothesis is
//! certified (otherwise the instance is vacuous) and whether the conclusion
//! holds. Hypotheses that cannot be certified in general are restricted to a
//! certifiable sub-case; `hypothesis_mode` names that restriction.

use std::collections::BTreeSet;

use crate::complex::{Engine, Functor};
use crate::error::{Error, Result};
use crate::invariants::{self, Analysis, EngineReadings, SopStatus};
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime};
use crate::properties::{self, Verdict, Verdicts};

use super::Instance;

/// Outcome of one suite on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Vacuous,
    Violation {
        expected: String,
        actual: String,
    },
    /// The instance could not be analysed (recorded under `cross_engine`).
    Skipped,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Vacuous => "vacuous",
            Outcome::Violation { .. } => "violation",
            Outcome::Skipped => "skipped",
        }
    }

    fn check(ok: bool, expected: impl FnOnce() -> String, actual: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Violation {
                expected: expected(),
                actual: actual(),
            }
        }
    }
}

/// Everything a suite may consult about one analysed instance.
pub struct Case<'a> {
    pub engine: &'a Engine,
    pub instance: &'a Instance,
    pub analysis: &'a Analysis,
    pub verdicts: Verdicts,
}

impl Case<'_> {
    fn a(&self) -> &MonomialIdeal {
        &self.analysis.a
    }

    fn i(&self) -> &MonomialIdeal {
        &self.analysis.i
    }
}

type Check = fn(&Case) -> Result<Outcome>;

pub struct Suite {
    pub name: &'static str,
    pub hypothesis_mode: &'static str,
    pub statement: &'static str,
    check: Check,
}

impl Suite {
    pub fn run(&self, case: &Case) -> Outcome {
        if case.analysis.is_degenerate() {
            return Outcome::Vacuous;
        }
        (self.check)(case).unwrap_or_else(|e| Outcome::Violation {
            expected: "a computable instance".into(),
            actual: e.to_string(),
        })
    }
}

/// Extra padding under which `cross_engine` recomputes every profile.
pub const BOX_PADDING_CHECK: u32 = 2;

/// Name of the suite that owns engine agreement and box invariance.
pub const CROSS_ENGINE: &str = "cross_engine";

pub const SUITES: &[Suite] = &[
    Suite {
        name: "gorenstein_chain",
        hypothesis_mode: "all_nondegenerate",
        statement: "Gorenstein implies maximal CM implies CM; regular module implies Gorenstein",
        check: gorenstein_chain,
    },
    Suite {
        name: "ass_prime_criterion",
        hypothesis_mode: "all_nondegenerate",
        statement: "relative CM iff cd(a, S/P) = grade(a, M) for every associated prime P",
        check: ass_prime_criterion,
    },
    Suite {
        name: "torsion_equivalence",
        hypothesis_mode: "relative_cm_only",
        statement: "for relative CM M: cd = 0 iff a in Rad(I) iff every Ass prime contains a iff some does",
        check: torsion_equivalence,
    },
    Suite {
        name: "sop_cd_drop",
        hypothesis_mode: "found_monomial_sop",
        statement: "every prefix x_1..x_k of an s.o.p. gives cd(a, M/(x_1..x_k)M) = c - k",
        check: sop_cd_drop,
    },
    Suite {
        name: "sop_regular_sequence",
        hypothesis_mode: "found_monomial_sop",
        statement: "a found s.o.p. is M-regular iff M is relative CM",
        check: sop_regular_sequence,
    },
    Suite {
        name: "ext_vanishing_bound",
        hypothesis_mode: "candidate_modules_with_certified_sop",
        statement: "Ext^i(N, M) = 0 for i < grade(a, M) - cd(a, N) when N is relative CM with cd = ara",
        check: ext_vanishing_bound,
    },
    Suite {
        name: "relative_id_equals_pd",
        hypothesis_mode: "all_nondegenerate",
        statement: "a-id(M) = pd(S/a)",
        check: relative_id_equals_pd,
    },
    Suite {
        name: "relative_id_nzd_quotient",
        hypothesis_mode: "generators_of_a_regular_on_m",
        statement: "a-id(M) = a-id(M/xM) for a generator x of a that is M-regular",
        check: relative_id_nzd_quotient,
    },
    Suite {
        name: "pd_regular_quotient",
        hypothesis_mode: "relative_regular_only",
        statement: "pd(M/aM) = pd(M) + cd(a, S) for relative regular M",
        check: pd_regular_quotient,
    },
    Suite {
        name: "regular_numeric_criterion",
        hypothesis_mode: "all_nondegenerate",
        statement: "grade(a, M) = grade(a, S) = mu(a) iff the generators of a are regular on M and S",
        check: regular_numeric_criterion,
    },
    Suite {
        name: "regular_ext_concentration",
        hypothesis_mode: "relative_regular_only",
        statement: "for relative regular M, Ext is concentrated at c with Ext^c(S/a, M) = M/aM shifted",
        check: regular_ext_concentration,
    },
    Suite {
        name: "localized_cm_at_minimal_primes",
        hypothesis_mode: "relative_cm_only",
        statement: "for relative CM M, M_P is Cohen-Macaulay at every minimal prime P of a + I",
        check: localized_cm_at_minimal_primes,
    },
    Suite {
        name: "gorenstein_two_paths",
        hypothesis_mode: "all_nondegenerate",
        statement: "Ext vanishing off c iff maximal CM with Ext vanishing above c",
        check: gorenstein_two_paths,
    },
    Suite {
        name: "regular_ring_lifts_maxcm",
        hypothesis_mode: "relative_regular_ring_and_max_cm",
        statement: "if S is relative regular, every relative maximal CM M is relative regular",
        check: regular_ring_lifts_maxcm,
    },
];

/// All suite names in reporting order, `cross_engine` first.
pub fn suite_names() -> Vec<&'static str> {
    std::iter::once(CROSS_ENGINE)
        .chain(SUITES.iter().map(|s| s.name))
        .collect()
}

pub fn hypothesis_mode(name: &str) -> &'static str {
    if name == CROSS_ENGINE {
        return "all_instances";
    }
    SUITES
        .iter()
        .find(|s| s.name == name)
        .map_or("unknown", |s| s.hypothesis_mode)
}

fn profile_str(p: &BTreeSet<usize>) -> String {
    format!("{p:?}")
}

/// Multi-engine agreement, `a-id = pd(S/a)`, `grade <= cd <= mu` and
/// invariance of every profile under a padded box.
pub fn cross_engine(engine: &Engine, analysis: std::result::Result<&Analysis, &Error>) -> Outcome {
    let an = match analysis {
        Ok(an) => an,
        Err(e) => {
            return Outcome::Violation {
                expected: "all engines agree".into(),
                actual: e.to_string(),
            }
        }
    };
    match cross_engine_checks(engine, an) {
        Ok(None) => Outcome::Pass,
        Ok(Some((expected, actual))) => Outcome::Violation { expected, actual },
        Err(e) => Outcome::Violation {
            expected: "all engines agree".into(),
            actual: e.to_string(),
        },
    }
}

fn cross_engine_checks(engine: &Engine, an: &Analysis) -> Result<Option<(String, String)>> {
    let zero = MonomialIdeal::zero(an.a.nvars());
    let mut targets: Vec<(&MonomialIdeal, &EngineReadings)> = vec![(&zero, &an.ring)];
    if let Some(module) = &an.module {
        targets.push((&an.i, module));
    }
    let padded = engine.with_box_pad(engine.box_pad + BOX_PADDING_CHECK);
    for (target, readings) in targets {
        let issues = readings.disagreements();
        if !issues.is_empty() {
            return Ok(Some(("all engines agree".into(), issues.join("; "))));
        }
        if readings.a_id() != Some(an.pd_a) {
            return Ok(Some((
                format!("a-id = pd(S/a) = {}", an.pd_a),
                format!("a-id = {:?}", readings.a_id()),
            )));
        }
        let (g, c) = (readings.grade()?, readings.cd()?);
        if !(g <= c && c <= an.a.mu()) {
            return Ok(Some((
                "grade <= cd <= mu".into(),
                format!("grade {g}, cd {c}, mu {}", an.a.mu()),
            )));
        }
        let ext = padded.ext_profile(&an.a, target)?;
        let lc = padded.lc_profile(&an.a, target)?;
        if ext != readings.ext_profile || lc != readings.lc_profile {
            return Ok(Some((
                format!(
                    "profiles ext {} lc {}",
                    profile_str(&readings.ext_profile),
                    profile_str(&readings.lc_profile)
                ),
                format!(
                    "with box padded by 2: ext {} lc {}",
                    profile_str(&ext),
                    profile_str(&lc)
                ),
            )));
        }
    }
    Ok(None)
}

fn verdict_tuple(v: &Verdicts) -> String {
    format!(
        "cm {}, max_cm {}, gorenstein {}, regular {}",
        v.rel_cm, v.rel_max_cm, v.rel_gorenstein, v.rel_regular_module
    )
}

fn gorenstein_chain(case: &Case) -> Result<Outcome> {
    Ok(Outcome::check(
        case.verdicts.chain_holds(),
        || "gorenstein => max_cm => cm and regular => gorenstein".into(),
        || verdict_tuple(&case.verdicts),
    ))
}

fn ass_prime_criterion(case: &Case) -> Result<Outcome> {
    let grade = case.analysis.grade().expect("nondegenerate");
    let criterion = properties::ass_prime_criterion(case.engine, case.a(), case.i(), grade)?;
    Ok(Outcome::check(
        criterion == case.verdicts.rel_cm.holds(),
        || format!("rel_cm = {criterion} (associated-prime criterion)"),
        || format!("rel_cm = {}", case.verdicts.rel_cm),
    ))
}

fn torsion_equivalence(case: &Case) -> Result<Outcome> {
    if !case.verdicts.rel_cm.holds() {
        return Ok(Outcome::Vacuous);
    }
    let ass = case.i().associated_primes()?;
    let preds = [
        case.analysis.cd() == Some(0),
        case.a().is_subset(&case.i().radical()),
        ass.iter().all(|p| p.contains_ideal(case.a())),
        ass.iter().any(|p| p.contains_ideal(case.a())),
    ];
    Ok(Outcome::check(
        preds.iter().all(|&p| p == preds[0]),
        || "cd = 0, a in Rad(I), all Ass primes contain a, some Ass prime contains a all agree".into(),
        || format!("{preds:?}"),
    ))
}

fn found_sop<'a>(case: &Case<'a>) -> Option<&'a [Monomial]> {
    match &case.analysis.sop {
        Some(w) if w.status == SopStatus::Found => Some(&w.sequence),
        _ => None,
    }
}

fn sop_cd_drop(case: &Case) -> Result<Outcome> {
    let Some(seq) = found_sop(case) else {
        return Ok(Outcome::Vacuous);
    };
    let c = seq.len();
    let mut quotient = case.i().clone();
    for (k, x) in seq.iter().enumerate() {
        quotient = quotient.with_generator(x)?;
        let cd = case.engine.lc_profile(case.a(), &quotient)?.last().copied();
        if cd != Some(c - k - 1) {
            return Ok(Outcome::Violation {
                expected: format!("cd after {} elements = {}", k + 1, c - k - 1),
                actual: format!("cd = {cd:?}"),
            });
        }
    }
    Ok(Outcome::Pass)
}

fn sop_regular_sequence(case: &Case) -> Result<Outcome> {
    let Some(w) = &case.analysis.sop else {
        return Ok(Outcome::Vacuous);
    };
    if !w.certifies_ara() {
        return Ok(Outcome::Vacuous);
    }
    let regular = invariants::is_monomial_regular_sequence(&w.sequence, case.i())?;
    let cm = case.verdicts.rel_cm.holds();
    Ok(Outcome::check(
        regular == cm,
        || format!("witness regular on M = rel_cm = {cm}"),
        || format!("witness regular on M = {regular}"),
    ))
}

fn ext_vanishing_bound(case: &Case) -> Result<Outcome> {
    let (a, i, engine) = (case.a(), case.i(), case.engine);
    let grade_m = case.analysis.grade().expect("nondegenerate");
    let first = MonomialIdeal::minimal_generators(a.nvars(), a.gens().first().cloned())?;
    let candidates = [a.sum(i)?, case.instance.aux.clone(), first];
    let mut informative = false;
    for j in candidates.iter().filter(|j| j.is_proper()) {
        let readings = EngineReadings {
            ext_profile: engine.ext_profile(a, j)?,
            lc_profile: engine.lc_profile(a, j)?,
            grade_localization: None,
            cd_primes: None,
        };
        let (Some(g), Some(c)) = (readings.grade_ext(), readings.cd_cech()) else {
            continue;
        };
        if g != c || grade_m <= c {
            continue;
        }
        let sop = invariants::sop_search(engine, a, j, c, invariants::default_degree_bound(engine, a))?;
        if !sop.certifies_ara() {
            continue;
        }
        informative = true;
        let bound = grade_m - c;
        let profile = engine.ext_profile(j, i)?;
        if let Some(&low) = profile.iter().find(|&&k| k < bound) {
            return Ok(Outcome::Violation {
                expected: format!("Ext^k(S/J, M) = 0 for k < {bound} with J = {:?}", j.gens()),
                actual: format!("Ext^{low} nonzero"),
            });
        }
    }
    Ok(if informative { Outcome::Pass } else { Outcome::Vacuous })
}

fn relative_id_equals_pd(case: &Case) -> Result<Outcome> {
    let a_id = case.analysis.a_id();
    let pd = case.engine.pd(case.a())?;
    Ok(Outcome::check(
        a_id == Some(pd),
        || format!("a-id = pd(S/a) = {pd}"),
        || format!("a-id = {a_id:?}"),
    ))
}

fn relative_id_nzd_quotient(case: &Case) -> Result<Outcome> {
    let a_id = case.analysis.a_id();
    let mut informative = false;
    for x in case.a().gens() {
        if !case.i().is_nonzero_divisor(x)? {
            continue;
        }
        informative = true;
        let quotient = case.i().with_generator(x)?;
        let after = case.engine.ext_profile(case.a(), &quotient)?.last().copied();
        if after != a_id {
            return Ok(Outcome::Violation {
                expected: format!("a-id(M/xM) = a-id(M) = {a_id:?} for x = {:?}", x.exps()),
                actual: format!("a-id(M/xM) = {after:?}"),
            });
        }
    }
    Ok(if informative { Outcome::Pass } else { Outcome::Vacuous })
}

fn pd_regular_quotient(case: &Case) -> Result<Outcome> {
    if !case.verdicts.rel_regular_module.holds() {
        return Ok(Outcome::Vacuous);
    }
    let lhs = case.engine.pd(&case.i().sum(case.a())?)?;
    let pd_m = case.engine.pd(case.i())?;
    let c = case.analysis.cd_ring();
    Ok(Outcome::check(
        lhs == pd_m + c,
        || format!("pd(M/aM) = pd(M) + cd(a, S) = {pd_m} + {c}"),
        || format!("pd(M/aM) = {lhs}"),
    ))
}

fn regular_numeric_criterion(case: &Case) -> Result<Outcome> {
    let gens = case.a().gens().to_vec();
    let zero = MonomialIdeal::zero(case.a().nvars());
    let witnessed = invariants::is_monomial_regular_sequence(&gens, case.i())?
        && invariants::is_monomial_regular_sequence(&gens, &zero)?;
    let numeric = case.verdicts.rel_regular_module.holds();
    Ok(Outcome::check(
        numeric == witnessed,
        || format!("numeric criterion = {witnessed} (generators regular on M and S)"),
        || format!("numeric criterion = {numeric}"),
    ))
}

fn regular_ext_concentration(case: &Case) -> Result<Outcome> {
    if !case.verdicts.rel_regular_module.holds() {
        return Ok(Outcome::Vacuous);
    }
    let c = case.analysis.cd_ring();
    let profile = case.analysis.ext_profile().expect("nondegenerate");
    if !profile.iter().eq([c].iter()) {
        return Ok(Outcome::Violation {
            expected: format!("Ext profile {{{c}}}"),
            actual: profile_str(profile),
        });
    }
    let n = case.a().nvars();
    let sigma = case.a().gens().iter().fold(Monomial::one(n), |acc, g| acc.mul(g));
    let quotient = case.i().sum(case.a())?;
    let scan = case.engine.scan_box(case.a(), case.i());
    let ext = case.engine.hilbert_in_box(Functor::Ext, case.a(), case.i(), c, &scan)?;
    for (b, dim) in ext {
        let shifted: Vec<i64> = b.iter().zip(sigma.exps()).map(|(&x, &s)| x + i64::from(s)).collect();
        let expected = if shifted.iter().all(|&x| x >= 0) {
            let m = Monomial::new(shifted.iter().map(|&x| x as u32).collect());
            usize::from(!quotient.contains(&m))
        } else {
            0
        };
        if dim != expected {
            return Ok(Outcome::Violation {
                expected: format!("dim Ext^{c}_{b:?} = dim (M/aM)_(b + sigma) = {expected}"),
                actual: format!("{dim}"),
            });
        }
    }
    Ok(Outcome::Pass)
}

fn localized_cm_at_minimal_primes(case: &Case) -> Result<Outcome> {
    if !case.verdicts.rel_cm.holds() {
        return Ok(Outcome::Vacuous);
    }
    let n = case.a().nvars();
    for p in case.a().sum(case.i())?.minimal_primes()? {
        let local = case.i().erase_to_one(p.vars.complement(n));
        let depth = p.vars.len() - case.engine.pd(&local)?;
        let dim = local.dim_quotient()?;
        if depth != dim {
            return Ok(Outcome::Violation {
                expected: format!("depth = dim of M localized at {}", prime_str(&p)),
                actual: format!("depth {depth}, dim {dim}"),
            });
        }
    }
    Ok(Outcome::Pass)
}

fn prime_str(p: &MonomialPrime) -> String {
    format!("P{}", p.vars)
}

fn gorenstein_two_paths(case: &Case) -> Result<Outcome> {
    let c = case.analysis.cd_ring();
    let profile = case.analysis.ext_profile().expect("nondegenerate");
    let second = case.verdicts.rel_max_cm.holds() && profile.iter().all(|&k| k <= c);
    let first = case.verdicts.rel_gorenstein.holds();
    Ok(Outcome::check(
        first == second,
        || format!("gorenstein = {second} (maximal CM and Ext vanishing above {c})"),
        || format!("gorenstein = {first}, Ext profile {}", profile_str(profile)),
    ))
}

fn regular_ring_lifts_maxcm(case: &Case) -> Result<Outcome> {
    let v = &case.verdicts;
    if !(v.rel_regular_ring.holds() && v.rel_max_cm.holds()) {
        return Ok(Outcome::Vacuous);
    }
    Ok(Outcome::check(
        v.rel_regular_module == Verdict::Holds,
        || "relative regular module".into(),
        || format!("rel_regular_module = {}", v.rel_regular_module),
    ))
}
