//! Homological engines: Taylor complexes, Ext and Čech local cohomology.
//!
//! Every module that appears here is multigraded with graded pieces of
//! dimension at most one per complex term, so each multidegree gives a small
//! cochain complex indexed by subsets of generators. Ranks are taken over a
//! prime field.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, VarSet};
use crate::par::{self, ExecMode};
use crate::rank::{PrimeField, SignMatrix};

/// Taylor complexes are indexed by subsets, so the generator count is capped.
pub const MAX_TAYLOR_GENS: usize = 16;

/// Finite scan region `{ b : -rho_j <= b_j <= rho_j }`.
///
/// With `rho_j` one past the largest `x_j`-exponent of every participating
/// generator, multiplication by `x_j` is an isomorphism of the graded
/// complexes beyond the box, so module vanishing is decided inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DegreeBox {
    rho: Vec<u32>,
}

impl DegreeBox {
    pub fn new(rho: Vec<u32>) -> Result<Self> {
        if rho.is_empty() || rho.contains(&0) {
            return Err(Error::InvalidRing(format!("box radii must be positive, got {rho:?}")));
        }
        Ok(DegreeBox { rho })
    }

    /// Stabilization box for the given ideals, enlarged by `pad` in every
    /// direction.
    pub fn for_ideals(n: usize, ideals: &[&MonomialIdeal], pad: u32) -> Self {
        let mut rho = vec![1 + pad; n];
        for ideal in ideals {
            for (r, e) in rho.iter_mut().zip(ideal.max_exponents()) {
                *r = (*r).max(1 + e + pad);
            }
        }
        DegreeBox { rho }
    }

    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    pub fn padded(&self, pad: u32) -> Self {
        DegreeBox {
            rho: self.rho.iter().map(|r| r + pad).collect(),
        }
    }

    /// Number of multidegrees in the box.
    pub fn len(&self) -> usize {
        self.rho.iter().map(|&r| 2 * r as usize + 1).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `idx`-th multidegree, first coordinate varying slowest.
    pub fn degree(&self, mut idx: usize) -> Vec<i64> {
        let mut b = vec![0i64; self.rho.len()];
        for j in (0..self.rho.len()).rev() {
            let width = 2 * self.rho[j] as usize + 1;
            b[j] = (idx % width) as i64 - self.rho[j] as i64;
            idx /= width;
        }
        b
    }

    pub fn contains(&self, b: &[i64]) -> bool {
        b.len() == self.rho.len() && b.iter().zip(&self.rho).all(|(&v, &r)| v.abs() <= r as i64)
    }

    fn check(&self, b: &[i64]) -> Result<()> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(Error::BoxViolation {
                degree: b.to_vec(),
                rho: self.rho.clone(),
            })
        }
    }
}

/// One nonzero graded piece of an Ext or local cohomology module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Slice {
    pub i: usize,
    pub b: Vec<i64>,
    pub dim: usize,
}

fn sign(mask: u32, t: usize) -> i8 {
    if (mask & ((1u32 << t) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Coboundary matrices `d^k : C^k -> C^{k+1}` of the subcomplex of the
/// simplex cochain complex on `r` points spanned by `members`. The entry for
/// `T -> T ∪ {t}` is `(-1)^{#{s in T : s < t}}`.
pub fn subset_coboundaries(r: usize, members: &[u32]) -> Vec<SignMatrix> {
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for &m in members {
        by_size[m.count_ones() as usize].push(m);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    (0..r)
        .map(|k| {
            let (cols, rows) = (&by_size[k], &by_size[k + 1]);
            let mut d = SignMatrix::zeros(rows.len(), cols.len());
            if rows.is_empty() || cols.is_empty() {
                return d;
            }
            for (c, &mask) in cols.iter().enumerate() {
                for t in (0..r).filter(|&t| mask >> t & 1 == 0) {
                    if let Ok(row) = rows.binary_search(&(mask | 1 << t)) {
                        d.set(row, c, sign(mask, t));
                    }
                }
            }
            d
        })
        .collect()
}

/// Cohomology dimensions `H^0..H^r` of the subcomplex spanned by `members`.
pub fn subset_cohomology(r: usize, members: &[u32], field: PrimeField) -> Vec<usize> {
    let mut sizes = vec![0usize; r + 1];
    for &m in members {
        sizes[m.count_ones() as usize] += 1;
    }
    let ranks: Vec<usize> = subset_coboundaries(r, members).iter().map(|d| field.rank(d)).collect();
    (0..=r)
        .map(|k| {
            let outgoing = if k < r { ranks[k] } else { 0 };
            let incoming = if k > 0 { ranks[k - 1] } else { 0 };
            sizes[k] - outgoing - incoming
        })
        .collect()
}

/// The Taylor resolution of `S/I`: one free summand per subset `T` of the
/// minimal generators, in degree `alpha_T = lcm(T)`.
#[derive(Debug, Clone)]
pub struct TaylorComplex {
    nvars: usize,
    gens: Vec<Monomial>,
    alphas: Vec<Monomial>,
}

impl TaylorComplex {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let gens = ideal.gens().to_vec();
        if gens.len() > MAX_TAYLOR_GENS {
            return Err(Error::TooManyGenerators {
                count: gens.len(),
                limit: MAX_TAYLOR_GENS,
            });
        }
        let n = ideal.nvars();
        let mut alphas = Vec::with_capacity(1 << gens.len());
        alphas.push(Monomial::one(n));
        for mask in 1u32..(1 << gens.len()) {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            alphas.push(alphas[rest as usize].lcm(&gens[low]));
        }
        Ok(TaylorComplex { nvars: n, gens, alphas })
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn alpha(&self, mask: u32) -> &Monomial {
        &self.alphas[mask as usize]
    }

    /// Masks grouped by their lcm degree.
    pub fn degree_classes(&self) -> BTreeMap<Monomial, Vec<u32>> {
        let mut classes: BTreeMap<Monomial, Vec<u32>> = BTreeMap::new();
        for (mask, alpha) in self.alphas.iter().enumerate() {
            classes.entry(alpha.clone()).or_default().push(mask as u32);
        }
        classes
    }

    /// Chain boundary `∂_k : F_k -> F_{k-1}` with monomial coefficients,
    /// returned as (row mask, column mask, sign, coefficient).
    pub fn boundary_terms(&self, k: usize) -> Vec<(u32, u32, i8, Monomial)> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << self.gens.len()) {
            if mask.count_ones() as usize != k {
                continue;
            }
            for t in (0..self.gens.len()).filter(|&t| mask >> t & 1 == 1) {
                let face = mask & !(1 << t);
                let coefficient = self.alpha(mask).colon(self.alpha(face));
                out.push((face, mask, sign(face, t), coefficient));
            }
        }
        out
    }

    /// Components of `Hom(Taylor, S/I)` that are nonzero in degree `b`.
    fn hom_members(&self, target: &MonomialIdeal, b: &[i64]) -> Vec<u32> {
        let mut e = vec![0u32; self.nvars];
        (0u32..(1 << self.gens.len()))
            .filter(|&mask| {
                let alpha = self.alpha(mask).exps();
                for j in 0..self.nvars {
                    let v = b[j] + alpha[j] as i64;
                    if v < 0 {
                        return false;
                    }
                    e[j] = v as u32;
                }
                !target
                    .gens()
                    .iter()
                    .any(|g| g.exps().iter().zip(&e).all(|(a, b)| a <= b))
            })
            .collect()
    }
}

/// Degree-`b` piece of the Čech complex term indexed by `mask`: is
/// `(S/I)[m_T^{-1}]_b` nonzero, where `support` is the set of inverted
/// variables.
fn cech_nonzero(support: VarSet, target: &MonomialIdeal, b: &[i64]) -> bool {
    let free = |j: usize| !support.contains(j);
    if (0..b.len()).any(|j| free(j) && b[j] < 0) {
        return false;
    }
    !target
        .gens()
        .iter()
        .any(|g| g.exps().iter().enumerate().all(|(j, &e)| !free(j) || e as i64 <= b[j]))
}

/// Graded piece of the Čech term `(S/I)[m_T^{-1}]` in degree `b`, where `T`
/// is a subset (bitmask) of the minimal generators of `a`: 1 when nonzero.
pub fn cech_piece(a: &MonomialIdeal, i: &MonomialIdeal, mask: u32, b: &[i64]) -> usize {
    let support = a
        .gens()
        .iter()
        .enumerate()
        .filter(|(t, _)| mask >> t & 1 == 1)
        .fold(VarSet::EMPTY, |acc, (_, g)| acc.union(g.support()));
    cech_nonzero(support, i, b) as usize
}

/// Which graded engine to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Functor {
    /// `Ext^i(S/J, S/I)` from the Taylor complex of `J`.
    Ext,
    /// `H^i_a(S/I)` from the Čech complex on the generators of `a`.
    LocalCohomology,
}

/// A per-degree cochain complex of one of the two engines.
enum GradedComplex<'a> {
    Ext {
        taylor: TaylorComplex,
        target: &'a MonomialIdeal,
    },
    Cech {
        r: usize,
        supports: Vec<VarSet>,
        target: &'a MonomialIdeal,
    },
}

impl<'a> GradedComplex<'a> {
    fn build(functor: Functor, ideal: &MonomialIdeal, target: &'a MonomialIdeal) -> Result<Self> {
        match functor {
            Functor::Ext => Ok(GradedComplex::Ext {
                taylor: TaylorComplex::new(ideal)?,
                target,
            }),
            Functor::LocalCohomology => {
                let r = ideal.mu();
                if r > MAX_TAYLOR_GENS {
                    return Err(Error::TooManyGenerators {
                        count: r,
                        limit: MAX_TAYLOR_GENS,
                    });
                }
                let mut supports = Vec::with_capacity(1 << r);
                supports.push(VarSet::EMPTY);
                for mask in 1u32..(1 << r) {
                    let low = mask.trailing_zeros() as usize;
                    let rest = supports[(mask & (mask - 1)) as usize];
                    supports.push(rest.union(ideal.gens()[low].support()));
                }
                Ok(GradedComplex::Cech { r, supports, target })
            }
        }
    }

    fn rank(&self) -> usize {
        match self {
            GradedComplex::Ext { taylor, .. } => taylor.rank(),
            GradedComplex::Cech { r, .. } => *r,
        }
    }

    fn members(&self, b: &[i64]) -> Vec<u32> {
        match self {
            GradedComplex::Ext { taylor, target } => taylor.hom_members(target, b),
            GradedComplex::Cech { supports, target, .. } => (0..supports.len() as u32)
                .filter(|&mask| cech_nonzero(supports[mask as usize], target, b))
                .collect(),
        }
    }

    fn dims(&self, b: &[i64], field: PrimeField) -> Vec<usize> {
        let members = self.members(b);
        if members.is_empty() {
            return vec![0; self.rank() + 1];
        }
        subset_cohomology(self.rank(), &members, field)
    }
}

/// Configuration shared by all engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
pub struct Engine {
    pub field: PrimeField,
    /// Extra padding added to every stabilization box.
    pub box_pad: u32,
    #[serde(skip)]
    pub mode: ExecMode,
    /// Total degree bound for relative s.o.p. searches; `None` uses the
    /// larger of 6 and the top generator degree of the ideal searched.
    pub degree_bound: Option<u32>,
}

fn require_proper(ideal: &MonomialIdeal, op: &'static str) -> Result<()> {
    if ideal.is_unit() {
        Err(Error::UnitIdeal { op })
    } else {
        Ok(())
    }
}

impl Engine {
    pub fn new(field: PrimeField) -> Self {
        Engine {
            field,
            ..Engine::default()
        }
    }

    pub fn with_mode(self, mode: ExecMode) -> Self {
        Engine { mode, ..self }
    }

    pub fn with_box_pad(self, box_pad: u32) -> Self {
        Engine { box_pad, ..self }
    }

    /// Total Betti numbers `beta_0..beta_r` of `S/I`.
    pub fn betti_numbers(&self, i: &MonomialIdeal) -> Result<Vec<usize>> {
        require_proper(i, "betti numbers")?;
        let taylor = TaylorComplex::new(i)?;
        let r = taylor.rank();
        let mut betti = vec![0usize; r + 1];
        for members in taylor.degree_classes().values() {
            for (k, d) in subset_cohomology(r, members, self.field).into_iter().enumerate() {
                betti[k] += d;
            }
        }
        Ok(betti)
    }

    /// Projective dimension of `S/I`.
    pub fn pd(&self, i: &MonomialIdeal) -> Result<usize> {
        let betti = self.betti_numbers(i)?;
        Ok(betti.iter().rposition(|&b| b != 0).unwrap_or(0))
    }

    /// `depth S/I = n - pd S/I`.
    pub fn depth(&self, i: &MonomialIdeal) -> Result<usize> {
        Ok(i.nvars() - self.pd(i)?)
    }

    /// Stabilization box for the pair, including the configured padding.
    pub fn scan_box(&self, ideal: &MonomialIdeal, target: &MonomialIdeal) -> DegreeBox {
        DegreeBox::for_ideals(ideal.nvars(), &[ideal, target], self.box_pad)
    }

    fn prepare<'a>(
        &self,
        functor: Functor,
        ideal: &MonomialIdeal,
        target: &'a MonomialIdeal,
    ) -> Result<GradedComplex<'a>> {
        if ideal.nvars() != target.nvars() {
            return Err(Error::RingMismatch {
                left: ideal.nvars(),
                right: target.nvars(),
            });
        }
        require_proper(ideal, "graded engines (relative ideal)")?;
        require_proper(target, "graded engines (module S/I)")?;
        GradedComplex::build(functor, ideal, target)
    }

    /// Dimensions of all cohomological indices at one multidegree.
    pub fn slice_dims(
        &self,
        functor: Functor,
        ideal: &MonomialIdeal,
        target: &MonomialIdeal,
        b: &[i64],
    ) -> Result<Vec<usize>> {
        let complex = self.prepare(functor, ideal, target)?;
        self.scan_box(ideal, target).check(b)?;
        Ok(complex.dims(b, self.field))
    }

    /// `dim_k Ext^i(S/J, S/I)_b`.
    pub fn ext_slice(&self, j: &MonomialIdeal, i: &MonomialIdeal, idx: usize, b: &[i64]) -> Result<usize> {
        Ok(self.slice_dims(Functor::Ext, j, i, b)?.get(idx).copied().unwrap_or(0))
    }

    /// `dim_k H^i_a(S/I)_b`.
    pub fn local_cohomology_slice(&self, a: &MonomialIdeal, i: &MonomialIdeal, idx: usize, b: &[i64]) -> Result<usize> {
        Ok(self
            .slice_dims(Functor::LocalCohomology, a, i, b)?
            .get(idx)
            .copied()
            .unwrap_or(0))
    }

    /// Indices whose module is nonzero somewhere in `scan`.
    pub fn profile_in(
        &self,
        functor: Functor,
        ideal: &MonomialIdeal,
        target: &MonomialIdeal,
        scan: &DegreeBox,
    ) -> Result<BTreeSet<usize>> {
        let complex = self.prepare(functor, ideal, target)?;
        let field = self.field;
        let bits = par::map_reduce(
            self.mode,
            scan.len(),
            0u64,
            |idx| {
                complex
                    .dims(&scan.degree(idx), field)
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d > 0)
                    .fold(0u64, |acc, (k, _)| acc | 1 << k)
            },
            |x, y| x | y,
        );
        Ok((0..64).filter(|k| bits >> k & 1 == 1).collect())
    }

    pub fn profile(&self, functor: Functor, ideal: &MonomialIdeal, target: &MonomialIdeal) -> Result<BTreeSet<usize>> {
        self.profile_in(functor, ideal, target, &self.scan_box(ideal, target))
    }

    /// Nonvanishing indices `i` of `Ext^i(S/J, S/I)`.
    pub fn ext_profile(&self, j: &MonomialIdeal, i: &MonomialIdeal) -> Result<BTreeSet<usize>> {
        self.profile(Functor::Ext, j, i)
    }

    pub fn ext_vanishes(&self, j: &MonomialIdeal, i: &MonomialIdeal, idx: usize) -> Result<bool> {
        Ok(!self.ext_profile(j, i)?.contains(&idx))
    }

    /// Nonvanishing indices `i` of `H^i_a(S/I)`.
    pub fn lc_profile(&self, a: &MonomialIdeal, i: &MonomialIdeal) -> Result<BTreeSet<usize>> {
        self.profile(Functor::LocalCohomology, a, i)
    }

    /// Every nonzero graded piece in the stabilization box, in box order.
    pub fn slices(&self, functor: Functor, ideal: &MonomialIdeal, target: &MonomialIdeal) -> Result<Vec<Slice>> {
        let complex = self.prepare(functor, ideal, target)?;
        let scan = self.scan_box(ideal, target);
        let field = self.field;
        let per_degree = par::map_collect(self.mode, scan.len(), |idx| {
            let b = scan.degree(idx);
            complex
                .dims(&b, field)
                .into_iter()
                .enumerate()
                .filter(|(_, d)| *d > 0)
                .map(|(i, dim)| Slice { i, b: b.clone(), dim })
                .collect::<Vec<_>>()
        });
        let mut out: Vec<Slice> = per_degree.into_iter().flatten().collect();
        out.sort_by_key(|s| s.i);
        Ok(out)
    }

    /// Box Hilbert function of a single cohomological index, as
    /// `(degree, dim)` pairs in box order (zeros included).
    pub fn hilbert_in_box(
        &self,
        functor: Functor,
        ideal: &MonomialIdeal,
        target: &MonomialIdeal,
        idx: usize,
        scan: &DegreeBox,
    ) -> Result<Vec<(Vec<i64>, usize)>> {
        let complex = self.prepare(functor, ideal, target)?;
        let field = self.field;
        Ok(par::map_collect(self.mode, scan.len(), |k| {
            let b = scan.degree(k);
            let d = complex.dims(&b, field).get(idx).copied().unwrap_or(0);
            (b, d)
        }))
    }

    /// All coboundary matrices of one graded complex at degree `b`, for
    /// consistency checks.
    pub fn coboundaries(
        &self,
        functor: Functor,
        ideal: &MonomialIdeal,
        target: &MonomialIdeal,
        b: &[i64],
    ) -> Result<Vec<SignMatrix>> {
        let complex = self.prepare(functor, ideal, target)?;
        Ok(subset_coboundaries(complex.rank(), &complex.members(b)))
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

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn box_enumeration() {
        let scan = DegreeBox::new(vec![1, 2]).unwrap();
        assert_eq!(scan.len(), 15);
        assert_eq!(scan.degree(0), vec![-1, -2]);
        assert_eq!(scan.degree(14), vec![1, 2]);
        assert!(scan.contains(&[0, -2]) && !scan.contains(&[2, 0]));
        assert!(DegreeBox::new(vec![0]).is_err());
        let b = DegreeBox::for_ideals(2, &[&ideal(2, &[&[2, 0], &[0, 3]])], 0);
        assert_eq!(b.rho(), &[3, 4]);
    }

    #[test]
    fn taylor_degrees() {
        let t = TaylorComplex::new(&c4()).unwrap();
        assert_eq!(t.rank(), 4);
        assert!(t.alpha(0).is_one());
        for mask in 0u32..16 {
            for sub in 0u32..16 {
                if sub & mask == sub {
                    assert!(t.alpha(sub).divides(t.alpha(mask)));
                }
            }
        }
    }

    #[test]
    fn taylor_boundary_squares_to_zero() {
        // Compose monomial boundaries symbolically: each (target, source)
        // pair through an intermediate face must cancel by sign.
        let t = TaylorComplex::new(&c4()).unwrap();
        for k in 2..=4 {
            let upper = t.boundary_terms(k);
            let lower = t.boundary_terms(k - 1);
            let mut acc: BTreeMap<(u32, u32, Monomial), i64> = BTreeMap::new();
            for (mid, src, s1, c1) in &upper {
                for (dst, mid2, s2, c2) in &lower {
                    if mid == mid2 {
                        *acc.entry((*dst, *src, c1.mul(c2))).or_default() += (*s1 as i64) * (*s2 as i64);
                    }
                }
            }
            assert!(acc.values().all(|&v| v == 0), "d∘d ≠ 0 at level {k}");
        }
    }

    #[test]
    fn betti_numbers_of_known_ideals() {
        let e = Engine::default();
        assert_eq!(e.betti_numbers(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap(), vec![1, 2, 1]);
        assert_eq!(e.pd(&c4()).unwrap(), 3);
        assert_eq!(e.depth(&c4()).unwrap(), 1);
        assert_eq!(e.pd(&ideal(2, &[&[1, 1], &[2, 0]])).unwrap(), 2);
        assert_eq!(e.betti_numbers(&MonomialIdeal::zero(3)).unwrap(), vec![1]);
        assert!(e.betti_numbers(&MonomialIdeal::unit(3)).is_err());
        // C4 edge ideal: minimal resolution 1, 4, 4, 1.
        assert_eq!(e.betti_numbers(&c4()).unwrap()[..4], [1, 4, 4, 1]);
    }

    #[test]
    fn ext_slices() {
        let e = Engine::default();
        let x = ideal(1, &[&[1]]);
        let x2 = ideal(1, &[&[2]]);
        assert_eq!(e.ext_slice(&x, &x2, 0, &[1]).unwrap(), 1);
        assert_eq!(e.ext_slice(&x, &x2, 0, &[0]).unwrap(), 0);
        assert!(matches!(e.ext_slice(&x, &x2, 0, &[9]), Err(Error::BoxViolation { .. })));

        let a = ideal(2, &[&[2, 0], &[0, 3], &[1, 1]]);
        let zero = MonomialIdeal::zero(2);
        let scan = e.scan_box(&a, &zero);
        for idx in 0..scan.len() {
            let b = scan.degree(idx);
            for i in [0, 1, 3] {
                assert_eq!(e.ext_slice(&a, &zero, i, &b).unwrap(), 0);
            }
        }
        assert_eq!(e.ext_profile(&a, &zero).unwrap(), set(&[2]));
    }

    #[test]
    fn ext_profiles() {
        let e = Engine::default();
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let xy = ideal(2, &[&[1, 1]]);
        assert_eq!(e.ext_profile(&m, &xy).unwrap(), set(&[1, 2]));
        assert_eq!(
            e.ext_profile(&ideal(2, &[&[1, 1], &[2, 0]]), &MonomialIdeal::zero(2))
                .unwrap(),
            set(&[1, 2])
        );
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(e.ext_profile(&x, &x).unwrap(), set(&[0, 1]));
        assert_eq!(
            e.ext_profile(&ideal(2, &[&[2, 0], &[0, 3]]), &MonomialIdeal::zero(2))
                .unwrap(),
            set(&[2])
        );
        assert!(e.ext_vanishes(&x, &x, 2).unwrap());
        assert!(e.ext_profile(&MonomialIdeal::unit(2), &x).is_err());
    }

    #[test]
    fn cech_pieces() {
        let xy = ideal(2, &[&[1, 1]]);
        let a = ideal(2, &[&[1, 0]]);
        assert_eq!(cech_piece(&a, &xy, 1, &[-3, 0]), 1);
        assert_eq!(cech_piece(&a, &xy, 1, &[-3, 1]), 0);
        assert_eq!(cech_piece(&a, &xy, 0, &[1, 0]), 1);
        assert_eq!(cech_piece(&a, &xy, 0, &[1, 1]), 0);
        assert_eq!(cech_piece(&a, &xy, 0, &[-1, 0]), 0);
        assert_eq!(cech_piece(&a, &MonomialIdeal::unit(2), 1, &[0, 0]), 0);
        assert_eq!(cech_piece(&a, &MonomialIdeal::unit(2), 0, &[0, 0]), 0);
    }

    #[test]
    fn local_cohomology_profiles() {
        let e = Engine::default();
        let y = ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(e.lc_profile(&y, &c4()).unwrap(), set(&[1]));
        assert_eq!(e.lc_profile(&c4(), &MonomialIdeal::zero(4)).unwrap(), set(&[2, 3]));
        assert_eq!(e.lc_profile(&MonomialIdeal::zero(4), &c4()).unwrap(), set(&[0]));
    }

    #[test]
    fn h1_of_c4_quotient_is_the_residue_field() {
        let e = Engine::default();
        let m = ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let slices = e.slices(Functor::LocalCohomology, &m, &c4()).unwrap();
        let h1: Vec<&Slice> = slices.iter().filter(|s| s.i == 1).collect();
        assert_eq!(h1.len(), 1);
        assert_eq!(h1[0].b, vec![0, 0, 0, 0]);
        assert_eq!(h1[0].dim, 1);
        assert!(slices.iter().all(|s| s.i != 0));
    }

    #[test]
    fn coboundaries_compose_to_zero() {
        let e = Engine::default();
        let a = ideal(3, &[&[1, 1, 0], &[0, 2, 1], &[1, 0, 1]]);
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        let scan = e.scan_box(&a, &i);
        for functor in [Functor::Ext, Functor::LocalCohomology] {
            for idx in (0..scan.len()).step_by(7) {
                let ds = e.coboundaries(functor, &a, &i, &scan.degree(idx)).unwrap();
                for w in ds.windows(2) {
                    if w[0].rows == 0 || w[0].cols == 0 || w[1].rows == 0 {
                        continue;
                    }
                    assert!(w[1].product(&w[0]).iter().all(|&v| v == 0));
                }
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = c4();
        let zero = MonomialIdeal::zero(4);
        let seq = Engine::default().with_mode(ExecMode::Sequential);
        let par = Engine::default().with_mode(ExecMode::Parallel);
        assert_eq!(seq.lc_profile(&a, &zero).unwrap(), par.lc_profile(&a, &zero).unwrap());
        assert_eq!(
            seq.slices(Functor::Ext, &a, &zero).unwrap(),
            par.slices(Functor::Ext, &a, &zero).unwrap()
        );
    }
}
