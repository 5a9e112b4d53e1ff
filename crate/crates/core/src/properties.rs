//! Decision procedures for the relative property lattice of `(a, M = S/I)`.
//!
//! Each verdict is computed from its definition and then confirmed by an
//! equivalent characterization; a mismatch is an
//! [`Error::EngineDisagreement`].
//!
//! When `I` is the unit ideal (`M = 0 = aM`) the module is degenerate: it is
//! relative Cohen-Macaulay and relative regular by convention, while the
//! maximal Cohen-Macaulay and Gorenstein properties are not applicable.

use serde::{Serialize, Serializer};

use crate::complex::{DegreeBox, Engine};
use crate::error::{Error, Result};
use crate::invariants::{self, Analysis, InvariantRecord, SopWitness};
use crate::monomial::{Monomial, MonomialIdeal};

/// A property verdict. Serializes as `true`, `false` or `"not_applicable"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            Verdict::NotApplicable => None,
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_bool() {
            Some(b) => s.serialize_bool(b),
            None => s.serialize_str("not_applicable"),
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "true",
            Verdict::Fails => "false",
            Verdict::NotApplicable => "not applicable",
        })
    }
}

/// Evidence backing the verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// Relative s.o.p. search outcome; absent for the zero module.
    pub sop: Option<SopWitness>,
    /// The minimal generators of `a`, present when they form a regular
    /// sequence on both `S` and `S/I`.
    pub regular_sequence: Option<Vec<Monomial>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub rel_cm: Verdict,
    pub rel_max_cm: Verdict,
    pub rel_gorenstein: Verdict,
    pub rel_regular_ring: Verdict,
    pub rel_regular_module: Verdict,
    /// Gorenstein ⟹ maximal CM ⟹ CM and regular ⟹ Gorenstein among the
    /// verdicts above.
    pub chain_consistent: bool,
    pub witnesses: Witnesses,
    pub invariants: InvariantRecord,
    #[serde(rename = "char")]
    pub characteristic: u32,
    #[serde(rename = "box")]
    pub scan: DegreeBox,
    pub notes: Vec<String>,
}

/// Verdicts read straight from the definitions, without cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub rel_cm: Verdict,
    pub rel_max_cm: Verdict,
    pub rel_gorenstein: Verdict,
    pub rel_regular_ring: Verdict,
    pub rel_regular_module: Verdict,
}

impl Verdicts {
    pub fn from_analysis(an: &Analysis) -> Self {
        let gorenstein = match an.ext_profile() {
            Some(profile) => Verdict::from_bool(profile.iter().eq([an.cd_ring()].iter())),
            None => Verdict::NotApplicable,
        };
        let regular_module = match an.grade() {
            Some(grade) => grade == an.grade_ring() && grade == an.mu(),
            None => true,
        };
        Verdicts {
            rel_cm: Verdict::from_bool(an.grade() == an.cd()),
            rel_max_cm: relative_max_cm(an),
            rel_gorenstein: gorenstein,
            rel_regular_ring: Verdict::from_bool(relative_regular_ring(an)),
            rel_regular_module: Verdict::from_bool(regular_module),
        }
    }

    pub fn chain_holds(&self) -> bool {
        chain_holds(
            self.rel_cm,
            self.rel_max_cm,
            self.rel_gorenstein,
            self.rel_regular_module,
        )
    }
}

/// `cd(a, S/P) = grade(a, S/I)` for every associated prime `P` of `I`.
pub fn ass_prime_criterion(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal, grade: usize) -> Result<bool> {
    for p in i.associated_primes()? {
        if invariants::cd_of_prime_quotient(engine, a, &p)? != Some(grade) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn relative_cm(engine: &Engine, an: &Analysis) -> Result<bool> {
    let (Some(grade), Some(cd)) = (an.grade(), an.cd()) else {
        return Ok(true);
    };
    let verdict = grade == cd;
    let criterion = ass_prime_criterion(engine, &an.a, &an.i, grade)?;
    if verdict != criterion {
        return Err(Error::disagreement(
            "rel_cm",
            format!("grade = cd gives {verdict}, associated-prime criterion gives {criterion}"),
        ));
    }
    Ok(verdict)
}

fn relative_max_cm(an: &Analysis) -> Verdict {
    match an.grade() {
        Some(grade) => Verdict::from_bool(grade == an.cd_ring()),
        None => Verdict::NotApplicable,
    }
}

fn relative_gorenstein(an: &Analysis) -> Result<Verdict> {
    let Some(profile) = an.ext_profile() else {
        return Ok(Verdict::NotApplicable);
    };
    let c = an.cd_ring();
    let by_definition = profile.iter().eq([c].iter());
    let by_vanishing_above = relative_max_cm(an).holds() && profile.iter().all(|&k| k <= c);
    if by_definition != by_vanishing_above {
        return Err(Error::disagreement(
            "rel_gorenstein",
            format!("Ext profile {profile:?} against cd(a, S) = {c}: definition gives {by_definition}, maximal CM with vanishing above gives {by_vanishing_above}"),
        ));
    }
    Ok(Verdict::from_bool(by_definition))
}

fn relative_regular_ring(an: &Analysis) -> bool {
    an.grade_ring() == an.mu()
}

/// Returns the verdict and, when it holds, the generators as the witness
/// regular sequence.
fn relative_regular_module(an: &Analysis) -> Result<(bool, Option<Vec<Monomial>>)> {
    let Some(grade) = an.grade() else {
        return Ok((true, None));
    };
    let numeric = grade == an.grade_ring() && grade == an.mu();
    let gens = an.a.gens().to_vec();
    let zero = MonomialIdeal::zero(an.a.nvars());
    let witnessed = invariants::is_monomial_regular_sequence(&gens, &an.i)?
        && invariants::is_monomial_regular_sequence(&gens, &zero)?;
    if numeric != witnessed {
        return Err(Error::disagreement(
            "rel_regular_module",
            format!("numeric criterion gives {numeric}, generator regular sequence gives {witnessed}"),
        ));
    }
    Ok((numeric, witnessed.then_some(gens)))
}

/// Checks the implication chain among computed verdicts.
pub fn chain_holds(cm: Verdict, max_cm: Verdict, gor: Verdict, reg_module: Verdict) -> bool {
    let implies = |p: Verdict, q: Verdict| !p.holds() || q.holds();
    implies(gor, max_cm) && implies(max_cm, cm) && (max_cm == Verdict::NotApplicable || implies(reg_module, gor))
}

/// Assembles every verdict, witness and invariant for an analysed pair.
pub fn report_from_analysis(engine: &Engine, an: &Analysis) -> Result<PropertyReport> {
    let rel_cm = Verdict::from_bool(relative_cm(engine, an)?);
    let rel_max_cm = relative_max_cm(an);
    let rel_gorenstein = relative_gorenstein(an)?;
    let rel_regular_ring = Verdict::from_bool(relative_regular_ring(an));
    let (regular, regular_sequence) = relative_regular_module(an)?;
    let rel_regular_module = Verdict::from_bool(regular);
    let mut notes = vec![
        "maximal Cohen-Macaulay and Gorenstein are measured against cd(a, S) of the ambient polynomial ring S"
            .to_string(),
    ];
    if an.is_degenerate() {
        notes.push("M = aM because I is the unit ideal; grade, cd and a-id are undefined".to_string());
    }
    Ok(PropertyReport {
        rel_cm,
        rel_max_cm,
        rel_gorenstein,
        rel_regular_ring,
        rel_regular_module,
        chain_consistent: chain_holds(rel_cm, rel_max_cm, rel_gorenstein, rel_regular_module),
        witnesses: Witnesses {
            sop: an.sop.clone(),
            regular_sequence,
        },
        invariants: an.record(),
        characteristic: engine.field.characteristic(),
        scan: an.scan.clone(),
        notes,
    })
}

pub fn full_report(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<PropertyReport> {
    report_from_analysis(engine, &Analysis::new(engine, a, i)?)
}

pub fn is_relative_cm(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<bool> {
    relative_cm(engine, &Analysis::new(engine, a, i)?)
}

pub fn is_relative_max_cm(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Verdict> {
    Ok(relative_max_cm(&Analysis::new(engine, a, i)?))
}

pub fn is_relative_gorenstein(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Verdict> {
    relative_gorenstein(&Analysis::new(engine, a, i)?)
}

pub fn is_relative_regular_ring(engine: &Engine, a: &MonomialIdeal) -> Result<bool> {
    let zero = MonomialIdeal::zero(a.nvars());
    Ok(relative_regular_ring(&Analysis::new(engine, a, &zero)?))
}

pub fn is_relative_regular_module(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<bool> {
    Ok(relative_regular_module(&Analysis::new(engine, a, i)?)?.0)
}
