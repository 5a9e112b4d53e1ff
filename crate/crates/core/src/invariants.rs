//! Named invariants of a pair `(a, M = S/I)`.
//!
//! Each invariant is read off by an authoritative engine and confirmed by at
//! least one independent route:
//!
//! | invariant | authoritative            | cross-checks                               |
//! |-----------|--------------------------|--------------------------------------------|
//! | grade     | least nonzero Ext index  | least nonzero `H^i_a`; localization depths |
//! | cd        | largest nonzero `H^i_a`  | minimal primes + pd of erased radicals     |
//! | a-id      | largest nonzero Ext index| `pd(S/a)`                                  |
//!
//! Disagreement is reported as [`Error::EngineDisagreement`].

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::{DegreeBox, Engine};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime, VarSet};
use crate::par;

/// Raw output of every engine for one pair `(a, I)`, before any agreement
/// check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EngineReadings {
    pub ext_profile: BTreeSet<usize>,
    pub lc_profile: BTreeSet<usize>,
    pub grade_localization: Option<usize>,
    pub cd_primes: Option<usize>,
}

impl EngineReadings {
    pub fn collect(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Self> {
        Ok(EngineReadings {
            ext_profile: engine.ext_profile(a, i)?,
            lc_profile: engine.lc_profile(a, i)?,
            grade_localization: grade_via_localization(engine, a, i)?,
            cd_primes: cd_via_primes(engine, a, i)?,
        })
    }

    pub fn grade_ext(&self) -> Option<usize> {
        self.ext_profile.first().copied()
    }

    pub fn grade_cech(&self) -> Option<usize> {
        self.lc_profile.first().copied()
    }

    pub fn cd_cech(&self) -> Option<usize> {
        self.lc_profile.last().copied()
    }

    pub fn a_id(&self) -> Option<usize> {
        self.ext_profile.last().copied()
    }

    /// Human-readable description of every engine mismatch.
    pub fn disagreements(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.grade_ext() != self.grade_cech() || self.grade_ext() != self.grade_localization {
            out.push(format!(
                "grade: ext {:?}, cech {:?}, localization {:?}",
                self.grade_ext(),
                self.grade_cech(),
                self.grade_localization
            ));
        }
        if self.cd_cech() != self.cd_primes {
            out.push(format!(
                "cd: cech {:?}, minimal primes {:?}",
                self.cd_cech(),
                self.cd_primes
            ));
        }
        out
    }

    pub fn grade(&self) -> Result<usize> {
        match (self.grade_ext(), self.grade_cech(), self.grade_localization) {
            (Some(x), Some(y), Some(z)) if x == y && y == z => Ok(x),
            (x, y, z) => Err(Error::disagreement(
                "grade",
                format!("ext {x:?}, cech {y:?}, localization {z:?}"),
            )),
        }
    }

    pub fn cd(&self) -> Result<usize> {
        match (self.cd_cech(), self.cd_primes) {
            (Some(x), Some(y)) if x == y => Ok(x),
            (x, y) => Err(Error::disagreement("cd", format!("cech {x:?}, minimal primes {y:?}"))),
        }
    }
}

/// `grade(a, S/I) = min depth (S/I)_P` over monomial primes `P ⊇ a`, each
/// localization computed by setting the outside variables to one.
pub fn grade_via_localization(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Option<usize>> {
    let n = i.nvars();
    let mut best: Option<usize> = None;
    for bits in 0u32..(1 << n) {
        let f = VarSet(bits);
        if !MonomialPrime::new(n, f).contains_ideal(a) {
            continue;
        }
        let local = i.erase_to_one(f.complement(n));
        if local.is_unit() {
            continue;
        }
        let depth = f.len() - engine.pd(&local)?;
        best = Some(best.map_or(depth, |b| b.min(depth)));
    }
    Ok(best)
}

/// `cd(a, S/P_F)`, computed as the projective dimension of the radical of
/// the image of `a` in the polynomial ring `S/P_F`. `None` when that image
/// is the unit ideal.
pub fn cd_of_prime_quotient(engine: &Engine, a: &MonomialIdeal, prime: &MonomialPrime) -> Result<Option<usize>> {
    let image = a.erase_to_zero(prime.vars);
    if image.is_unit() {
        return Ok(None);
    }
    if image.is_zero() {
        return Ok(Some(0));
    }
    Ok(Some(engine.pd(&image.radical())?))
}

/// `cd(a, S/I) = max cd(a, S/P)` over the minimal primes `P` of `I`.
pub fn cd_via_primes(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Option<usize>> {
    let mut best = None;
    for p in i.minimal_primes()? {
        if let Some(c) = cd_of_prime_quotient(engine, a, &p)? {
            best = Some(best.map_or(c, |b: usize| b.max(c)));
        }
    }
    Ok(best)
}

fn check_pair(a: &MonomialIdeal, i: &MonomialIdeal) -> Result<()> {
    if a.nvars() != i.nvars() {
        return Err(Error::RingMismatch {
            left: a.nvars(),
            right: i.nvars(),
        });
    }
    if a.is_unit() {
        return Err(Error::UnitIdeal {
            op: "relative invariants",
        });
    }
    Ok(())
}

/// `grade(a, S/I)`; `None` for the zero module.
pub fn grade(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Option<usize>> {
    check_pair(a, i)?;
    if i.is_unit() {
        return Ok(None);
    }
    EngineReadings::collect(engine, a, i)?.grade().map(Some)
}

/// `cd(a, S/I)`; `None` for the zero module.
pub fn cd(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Option<usize>> {
    check_pair(a, i)?;
    if i.is_unit() {
        return Ok(None);
    }
    let c = engine.lc_profile(a, i)?.last().copied();
    let fast = cd_via_primes(engine, a, i)?;
    if c != fast {
        return Err(Error::disagreement(
            "cd",
            format!("cech {c:?}, minimal primes {fast:?}"),
        ));
    }
    Ok(c)
}

/// `a`-relative injective dimension of `S/I`, checked against `pd(S/a)`.
pub fn a_id(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Option<usize>> {
    check_pair(a, i)?;
    if i.is_unit() {
        return Ok(None);
    }
    let value = engine.ext_profile(a, i)?.last().copied();
    let pd = engine.pd(a)?;
    if value != Some(pd) {
        return Err(Error::disagreement("a_id", format!("ext {value:?}, pd(S/a) {pd}")));
    }
    Ok(value)
}

/// Checks that `seq` is a regular sequence on `S/I` with nonzero quotient.
pub fn is_monomial_regular_sequence(seq: &[Monomial], i: &MonomialIdeal) -> Result<bool> {
    let mut current = i.clone();
    for m in seq {
        if !current.is_nonzero_divisor(m)? {
            return Ok(false);
        }
        current = current.with_generator(m)?;
    }
    Ok(current.is_proper())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SopStatus {
    Found,
    /// No monomial sequence within the degree bound works. This says
    /// nothing about non-monomial sequences.
    NoneAmongMonomials,
    /// `cd = 0`: the empty sequence is the s.o.p.
    DegenerateZeroLength,
}

/// Outcome of a relative s.o.p. search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SopWitness {
    pub status: SopStatus,
    pub sequence: Vec<Monomial>,
    pub degree_bound: u32,
}

impl SopWitness {
    /// A certified s.o.p. (possibly empty) exists.
    pub fn certifies_ara(&self) -> bool {
        self.status != SopStatus::NoneAmongMonomials
    }
}

/// Monomials of `a` of total degree at most `bound`, ordered by degree and
/// then lexicographically with the largest first.
fn candidates(a: &MonomialIdeal, bound: u32) -> Vec<Monomial> {
    let n = a.nvars();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn walk(j: usize, left: u32, exps: &mut Vec<u32>, a: &MonomialIdeal, out: &mut Vec<Monomial>) {
        if j == exps.len() {
            let m = Monomial::new(exps.clone());
            if a.contains(&m) {
                out.push(m);
            }
            return;
        }
        for e in 0..=left {
            exps[j] = e;
            walk(j + 1, left - e, exps, a, out);
        }
        exps[j] = 0;
    }
    walk(0, bound, &mut exps, a, &mut out);
    out.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| y.cmp(x)));
    out
}

/// Advances `combo` to the next k-subset of `0..len` in lexicographic order.
fn next_combination(combo: &mut [usize], len: usize) -> bool {
    let k = combo.len();
    for pos in (0..k).rev() {
        if combo[pos] < len - k + pos {
            combo[pos] += 1;
            for q in pos + 1..k {
                combo[q] = combo[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Searches for a relative system of parameters of `S/I` among monomials of
/// `a` of total degree at most `degree_bound`.
///
/// Radical membership only depends on supports, and a length-`c` s.o.p.
/// never repeats a support (that would give `ara < cd`), so the search runs
/// over combinations of support representatives: the first candidate of
/// each support. The witness returned is the lexicographically first one in
/// candidate order.
pub fn sop_search(
    engine: &Engine,
    a: &MonomialIdeal,
    i: &MonomialIdeal,
    c: usize,
    degree_bound: u32,
) -> Result<SopWitness> {
    check_pair(a, i)?;
    if i.is_unit() {
        return Err(Error::UnitIdeal {
            op: "relative s.o.p. search",
        });
    }
    let target = a.sum(i)?.radical();
    if c == 0 {
        let status = if i.radical() == target {
            SopStatus::DegenerateZeroLength
        } else {
            SopStatus::NoneAmongMonomials
        };
        return Ok(SopWitness {
            status,
            sequence: Vec::new(),
            degree_bound,
        });
    }
    let mut reps: Vec<Monomial> = Vec::new();
    let mut seen: BTreeSet<VarSet> = BTreeSet::new();
    for m in candidates(a, degree_bound) {
        if seen.insert(m.support()) {
            reps.push(m);
        }
    }
    let works = |combo: &[usize]| -> bool {
        let gens = i.gens().iter().cloned().chain(combo.iter().map(|&k| reps[k].clone()));
        let generated = MonomialIdeal::from_trusted(i.nvars(), gens.collect());
        generated.radical() == target
    };
    // First combination starting at `first`, scanning the rest sequentially.
    let first_from = |first: usize| -> Option<Vec<usize>> {
        if reps.len() < c || first > reps.len() - c {
            return None;
        }
        let rest_len = reps.len() - first - 1;
        let mut tail: Vec<usize> = (0..c - 1).collect();
        loop {
            let combo: Vec<usize> = std::iter::once(first)
                .chain(tail.iter().map(|t| first + 1 + t))
                .collect();
            if works(&combo) {
                return Some(combo);
            }
            if tail.is_empty() || !next_combination(&mut tail, rest_len) {
                return None;
            }
        }
    };
    let found = par::find_first(engine.mode, reps.len(), |first| first_from(first).is_some()).and_then(first_from);
    Ok(match found {
        Some(combo) => SopWitness {
            status: SopStatus::Found,
            sequence: combo.iter().map(|&k| reps[k].clone()).collect(),
            degree_bound,
        },
        None => SopWitness {
            status: SopStatus::NoneAmongMonomials,
            sequence: Vec::new(),
            degree_bound,
        },
    })
}

/// Degree bound used when the engine does not fix one.
pub fn default_degree_bound(engine: &Engine, a: &MonomialIdeal) -> u32 {
    engine.degree_bound.unwrap_or_else(|| a.max_degree().max(6))
}

/// Numeric invariants of `(a, S/I)` with the engine behind each number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub grade: Option<usize>,
    pub cd: Option<usize>,
    pub mu: usize,
    pub a_id: Option<usize>,
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    pub dim: Option<usize>,
    pub ara_lower: Option<usize>,
    pub ara_upper: Option<usize>,
    /// `grade(a, S)` and `cd(a, S)` of the ambient ring.
    pub grade_ring: usize,
    pub cd_ring: usize,
    /// `pd(S/a)`.
    pub pd_a: usize,
    /// Nonvanishing indices of `Ext^i(S/a, S/I)` and `H^i_a(S/I)`.
    pub ext_profile: Option<Vec<usize>>,
    pub lc_profile: Option<Vec<usize>>,
    pub provenance: BTreeMap<&'static str, &'static str>,
}

/// Everything computed for one pair, with all cross-checks already passed.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub a: MonomialIdeal,
    pub i: MonomialIdeal,
    /// Readings for `(a, S/I)`; `None` when `I` is the unit ideal.
    pub module: Option<EngineReadings>,
    /// Readings for `(a, S)`.
    pub ring: EngineReadings,
    pub pd_a: usize,
    pub pd_i: Option<usize>,
    pub dim_i: Option<usize>,
    pub sop: Option<SopWitness>,
    pub scan: DegreeBox,
}

impl Analysis {
    pub fn new(engine: &Engine, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<Self> {
        check_pair(a, i)?;
        let n = a.nvars();
        let zero = MonomialIdeal::zero(n);
        let ring = EngineReadings::collect(engine, a, &zero)?;
        ring.grade()?;
        ring.cd()?;
        let pd_a = engine.pd(a)?;
        if ring.a_id() != Some(pd_a) {
            return Err(Error::disagreement(
                "a_id(S)",
                format!("ext {:?}, pd(S/a) {pd_a}", ring.a_id()),
            ));
        }
        let (module, pd_i, dim_i, sop) = if i.is_unit() {
            (None, None, None, None)
        } else {
            let readings = EngineReadings::collect(engine, a, i)?;
            readings.grade()?;
            let c = readings.cd()?;
            if readings.a_id() != Some(pd_a) {
                return Err(Error::disagreement(
                    "a_id",
                    format!("ext {:?}, pd(S/a) {pd_a}", readings.a_id()),
                ));
            }
            let sop = sop_search(engine, a, i, c, default_degree_bound(engine, a))?;
            (Some(readings), Some(engine.pd(i)?), Some(i.dim_quotient()?), Some(sop))
        };
        Ok(Analysis {
            a: a.clone(),
            i: i.clone(),
            module,
            ring,
            pd_a,
            pd_i,
            dim_i,
            sop,
            scan: engine.scan_box(a, i),
        })
    }

    pub fn is_degenerate(&self) -> bool {
        self.module.is_none()
    }

    pub fn grade(&self) -> Option<usize> {
        self.module.as_ref().and_then(EngineReadings::grade_ext)
    }

    pub fn cd(&self) -> Option<usize> {
        self.module.as_ref().and_then(EngineReadings::cd_cech)
    }

    pub fn a_id(&self) -> Option<usize> {
        self.module.as_ref().and_then(EngineReadings::a_id)
    }

    pub fn ext_profile(&self) -> Option<&BTreeSet<usize>> {
        self.module.as_ref().map(|r| &r.ext_profile)
    }

    pub fn grade_ring(&self) -> usize {
        self.ring.grade_ext().expect("S is nonzero")
    }

    pub fn cd_ring(&self) -> usize {
        self.ring.cd_cech().expect("S is nonzero")
    }

    pub fn mu(&self) -> usize {
        self.a.mu()
    }

    pub fn record(&self) -> InvariantRecord {
        let n = self.a.nvars();
        let certified = self.sop.as_ref().is_some_and(SopWitness::certifies_ara);
        let mut provenance = BTreeMap::new();
        provenance.insert("grade", "ext_taylor; checked by cech and localization_depth");
        provenance.insert("cd", "cech; checked by minimal_primes_pd");
        provenance.insert("a_id", "ext_taylor; checked by pd_taylor");
        provenance.insert("pd", "taylor_betti");
        provenance.insert("depth", "auslander_buchsbaum");
        provenance.insert("dim", "minimal_primes");
        provenance.insert("mu", "minimal_generators");
        provenance.insert("ara_lower", "cd");
        provenance.insert("ara_upper", if certified { "sop_search" } else { "mu" });
        InvariantRecord {
            grade: self.grade(),
            cd: self.cd(),
            mu: self.mu(),
            a_id: self.a_id(),
            pd: self.pd_i,
            depth: self.pd_i.map(|pd| n - pd),
            dim: self.dim_i,
            ara_lower: self.cd(),
            ara_upper: if self.is_degenerate() {
                None
            } else if certified {
                self.cd()
            } else {
                Some(self.mu())
            },
            grade_ring: self.grade_ring(),
            cd_ring: self.cd_ring(),
            pd_a: self.pd_a,
            ext_profile: self.module.as_ref().map(|r| r.ext_profile.iter().copied().collect()),
            lc_profile: self.module.as_ref().map(|r| r.lc_profile.iter().copied().collect()),
            provenance,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn c4() -> MonomialIdeal {
        ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]])
    }

    fn y12() -> MonomialIdeal {
        ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]])
    }

    #[test]
    fn grades() {
        let e = Engine::default();
        assert_eq!(grade(&e, &y12(), &c4()).unwrap(), Some(1));
        assert_eq!(grade(&e, &c4(), &MonomialIdeal::zero(4)).unwrap(), Some(2));
        assert_eq!(
            grade(&e, &ideal(2, &[&[2, 0], &[0, 3]]), &MonomialIdeal::zero(2)).unwrap(),
            Some(2)
        );
        assert_eq!(grade(&e, &y12(), &MonomialIdeal::unit(4)).unwrap(), None);
        assert!(grade(&e, &MonomialIdeal::unit(4), &c4()).is_err());
    }

    #[test]
    fn cohomological_dimensions() {
        let e = Engine::default();
        assert_eq!(cd(&e, &y12(), &c4()).unwrap(), Some(1));
        assert_eq!(cd(&e, &c4(), &MonomialIdeal::zero(4)).unwrap(), Some(3));
        assert_eq!(
            cd(&e, &ideal(2, &[&[1, 1], &[2, 0]]), &MonomialIdeal::zero(2)).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn relative_injective_dimensions() {
        let e = Engine::default();
        let zero2 = MonomialIdeal::zero(2);
        assert_eq!(a_id(&e, &ideal(2, &[&[1, 1], &[2, 0]]), &zero2).unwrap(), Some(2));
        assert_eq!(a_id(&e, &c4(), &MonomialIdeal::zero(4)).unwrap(), Some(3));
        assert_eq!(a_id(&e, &ideal(2, &[&[1, 0]]), &zero2).unwrap(), Some(1));
    }

    #[test]
    fn sop_searches() {
        let e = Engine::default();
        let a = ideal(4, &[&[2, 0, 0, 0], &[0, 3, 0, 0]]);
        let zero = MonomialIdeal::zero(4);
        let w = sop_search(&e, &a, &zero, 2, 6).unwrap();
        assert_eq!(w.status, SopStatus::Found);
        assert_eq!(
            w.sequence,
            vec![Monomial::new(vec![2, 0, 0, 0]), Monomial::new(vec![0, 3, 0, 0])]
        );

        let w = sop_search(&e, &y12(), &zero, 2, 6).unwrap();
        assert_eq!(w.sequence, y12().gens().to_vec());

        let w = sop_search(&e, &y12(), &c4(), 1, 4).unwrap();
        assert_eq!(w.status, SopStatus::NoneAmongMonomials);
        // Oracle: no single monomial of y12 up to degree 4 has the right radical.
        let target = y12().sum(&c4()).unwrap().radical();
        for m in candidates(&y12(), 4) {
            let got = c4().with_generator(&m).unwrap();
            assert_ne!(got.minimal_primes().unwrap(), target.minimal_primes().unwrap());
        }

        let w = sop_search(&e, &ideal(2, &[&[1, 0]]), &ideal(2, &[&[1, 0]]), 0, 6).unwrap();
        assert_eq!(w.status, SopStatus::DegenerateZeroLength);
    }

    #[test]
    fn sop_modes_agree() {
        let a = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[2, 0, 0]]);
        let i = ideal(3, &[&[0, 0, 2]]);
        let seq = Engine::default().with_mode(crate::ExecMode::Sequential);
        let par = Engine::default();
        for c in 1..=3 {
            assert_eq!(
                sop_search(&seq, &a, &i, c, 5).unwrap(),
                sop_search(&par, &a, &i, c, 5).unwrap()
            );
        }
    }

    #[test]
    fn regular_sequences() {
        let zero = MonomialIdeal::zero(2);
        let x = Monomial::var(2, 0);
        let y = Monomial::var(2, 1);
        assert!(is_monomial_regular_sequence(&[x.clone(), y.clone()], &zero).unwrap());
        assert!(!is_monomial_regular_sequence(std::slice::from_ref(&x), &ideal(2, &[&[1, 1]])).unwrap());
        assert!(!is_monomial_regular_sequence(&[Monomial::pure_power(4, 2, 2)], &c4()).unwrap());
        assert!(c4()
            .quotient(&Monomial::pure_power(4, 2, 2))
            .unwrap()
            .contains(&Monomial::var(4, 1)));
        assert!(!is_monomial_regular_sequence(&[x.clone(), x], &zero).unwrap());
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut combo = vec![0, 1];
        let mut seen = vec![combo.clone()];
        while next_combination(&mut combo, 4) {
            seen.push(combo.clone());
        }
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn analysis_record() {
        let e = Engine::default();
        let rec = Analysis::new(&e, &y12(), &c4()).unwrap().record();
        assert_eq!((rec.grade, rec.cd, rec.mu), (Some(1), Some(1), 2));
        assert_eq!((rec.grade_ring, rec.cd_ring, rec.pd_a), (2, 2, 2));
        assert_eq!((rec.pd, rec.depth, rec.dim), (Some(3), Some(1), Some(2)));
        assert_eq!((rec.ara_lower, rec.ara_upper), (Some(1), Some(2)));

        let rec = Analysis::new(&e, &y12(), &MonomialIdeal::unit(4)).unwrap().record();
        assert_eq!((rec.grade, rec.cd, rec.a_id, rec.ara_upper), (None, None, None, None));
    }
}
