//! Exact relative homological invariants of monomial quotients.
//!
//! For a polynomial ring `S = k[x_1, ..., x_n]` over a prime field, a monomial
//! ideal `a` and a cyclic module `M = S/I`, this crate computes grade,
//! cohomological dimension, the `a`-relative injective dimension and relative
//! systems of parameters, and decides the relative Cohen-Macaulay, maximal
//! Cohen-Macaulay, Gorenstein and regular properties.
//!
//! Every invariant has an authoritative engine and at least one independent
//! cross-check:
//!
//! * Ext modules are computed degree by degree from the Taylor complex of `a`
//!   mapped into `S/I`;
//! * local cohomology is computed degree by degree from the Čech complex on
//!   the generators of `a`;
//! * combinatorial fast paths use associated primes, variable erasure and
//!   projective dimensions of monomial quotients.
//!
//! All graded computations are confined to a finite [`DegreeBox`] on which the
//! complexes are known to stabilize.

pub mod complex;
pub mod error;
pub mod invariants;
pub mod monomial;
pub mod par;
pub mod parse;
pub mod properties;
pub mod rank;
pub mod ring;
pub mod verifier;

pub use complex::{DegreeBox, Engine, TaylorComplex};
pub use error::{Error, Result};
pub use invariants::{Analysis, EngineReadings, InvariantRecord, SopStatus, SopWitness};
pub use monomial::{Monomial, MonomialIdeal, MonomialPrime, VarSet};
pub use par::ExecMode;
pub use properties::{PropertyReport, Verdict, Verdicts};
pub use rank::PrimeField;
pub use ring::RingSpec;
