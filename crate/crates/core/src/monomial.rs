//! Monomials, monomial ideals and their combinatorial structure theory.
//!
//! Ideals are stored by their minimal generators in lexicographic order with
//! the largest monomial first (`x1 > x2 > ...`). Two ideals are equal exactly
//! when their generator lists are identical.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Variable subsets are bitmasks, which caps the number of variables.
pub const MAX_VARS: usize = 32;

/// An exponent vector `e`, standing for the monomial `x^e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, j: usize) -> Self {
        Monomial::pure_power(n, j, 1)
    }

    pub fn pure_power(n: usize, j: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[j] = k;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / gcd(self, m)`.
    pub fn colon(&self, m: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&m.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn support(&self) -> VarSet {
        VarSet(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0, |acc, (j, _)| acc | (1 << j)),
        )
    }

    /// The squarefree monomial with the same support.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    /// Keeps only the coordinates outside `dropped`.
    pub fn project_out(&self, dropped: VarSet) -> Monomial {
        Monomial(
            self.0
                .iter()
                .enumerate()
                .filter(|(j, _)| !dropped.contains(*j))
                .map(|(_, &e)| e)
                .collect(),
        )
    }
}

/// A subset of variable positions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(pub u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn full(n: usize) -> VarSet {
        if n >= 32 {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> VarSet {
        VarSet(indices.into_iter().fold(0, |acc, j| acc | (1 << j)))
    }

    pub fn contains(self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn complement(self, n: usize) -> VarSet {
        VarSet(!self.0 & VarSet::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&j| self.contains(j))
    }
}

/// A monomial ideal given by its canonical minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            nvars: n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            nvars: n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The ideal generated by `gens`, reduced to its canonical minimal
    /// generating set.
    pub fn minimal_generators<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.nvars(),
            });
        }
        Ok(Self::from_trusted(n, gens))
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::minimal_generators(n, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub(crate) fn from_trusted(n: usize, mut gens: Vec<Monomial>) -> Self {
        // Ascending total degree puts every potential divisor before its multiples.
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort_by(|a, b| b.cmp(a));
        MonomialIdeal {
            nvars: n,
            gens: minimal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimum number of generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Largest exponent of each variable over the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: m.nvars(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_trusted(self.nvars, gens))
    }

    pub fn with_generator(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        Ok(Self::from_trusted(self.nvars, gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(Self::from_trusted(self.nvars, gens))
    }

    /// `(self : m)`.
    pub fn quotient(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Ok(Self::from_trusted(self.nvars, gens))
    }

    /// `(self : other)`.
    pub fn quotient_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut acc = MonomialIdeal::unit(self.nvars);
        for m in &other.gens {
            acc = acc.intersect(&self.quotient(m)?)?;
        }
        Ok(acc)
    }

    /// `(self : other^∞)`, so that `Γ_other(S/self) = saturation / self`.
    pub fn saturation(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut current = self.clone();
        loop {
            let next = current.quotient_ideal(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `m` is a nonzero-divisor on `S/self`.
    pub fn is_nonzero_divisor(&self, m: &Monomial) -> Result<bool> {
        Ok(self.quotient(m)? == *self)
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::from_trusted(self.nvars, self.gens.iter().map(Monomial::radical).collect())
    }

    pub fn radical_equal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.radical() == other.radical())
    }

    /// Irredundant decomposition into ideals generated by pure powers.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal {
                op: "irreducible decomposition",
            });
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal {
                op: "irreducible decomposition",
            });
        }
        let n = self.nvars;
        let mut finished: Vec<MonomialIdeal> = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(ideal) = stack.pop() {
            // Splitting only enlarges an ideal, so anything already above a
            // finished component is redundant.
            if finished.iter().any(|c| c.is_subset(&ideal)) {
                continue;
            }
            match ideal.gens.iter().find(|g| g.support().len() >= 2) {
                None => {
                    finished.retain(|c| !ideal.is_subset(c));
                    finished.push(ideal);
                }
                Some(g) => {
                    let j = g.support().iter().next().expect("nonempty support");
                    let u = Monomial::pure_power(n, j, g.exps()[j]);
                    let mut v = g.clone();
                    v.0[j] = 0;
                    // Pushed in reverse so the `u` branch is explored first.
                    stack.push(ideal.with_generator(&v)?);
                    stack.push(ideal.with_generator(&u)?);
                }
            }
        }
        finished.sort();
        Ok(finished)
    }

    pub fn associated_primes(&self) -> Result<Vec<MonomialPrime>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal {
                op: "associated primes",
            });
        }
        if self.is_zero() {
            return Ok(vec![MonomialPrime::new(self.nvars, VarSet::EMPTY)]);
        }
        let mut primes: Vec<MonomialPrime> = self
            .irreducible_decomposition()?
            .iter()
            .map(|c| {
                let vars = c.gens.iter().fold(VarSet::EMPTY, |acc, g| acc.union(g.support()));
                MonomialPrime::new(self.nvars, vars)
            })
            .collect();
        primes.sort();
        primes.dedup();
        Ok(primes)
    }

    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        let primes = self.associated_primes()?;
        Ok(primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q != *p && q.vars.is_subset(p.vars)))
            .cloned()
            .collect())
    }

    /// Krull dimension of `S/self`.
    pub fn dim_quotient(&self) -> Result<usize> {
        Ok(self.nvars - self.height()?)
    }

    pub fn height(&self) -> Result<usize> {
        Ok(self
            .minimal_primes()?
            .iter()
            .map(|p| p.vars.len())
            .min()
            .expect("a proper ideal has a minimal prime"))
    }

    /// Image of the ideal in `S/P_F`, living in the ring on the variables
    /// outside `f`.
    pub fn erase_to_zero(&self, f: VarSet) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|g| !g.support().intersects(f))
            .map(|g| g.project_out(f))
            .collect();
        Self::from_trusted(self.nvars - f.len(), gens)
    }

    /// Sets the variables in `f` to one. The result lives in the ring on the
    /// variables outside `f` and models localization at the complementary
    /// monomial prime.
    pub fn erase_to_one(&self, f: VarSet) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.project_out(f)).collect();
        Self::from_trusted(self.nvars - f.len(), gens)
    }
}

/// The monomial prime `P_F = <x_i : i in F>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    nvars: usize,
    pub vars: VarSet,
}

impl MonomialPrime {
    pub fn new(nvars: usize, vars: VarSet) -> Self {
        MonomialPrime { nvars, vars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self.vars.iter().map(|j| Monomial::var(self.nvars, j)).collect();
        MonomialIdeal::from_trusted(self.nvars, gens)
    }

    /// `ideal ⊆ P_F`.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal.gens().iter().all(|g| g.support().intersects(self.vars))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|j| j.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}
