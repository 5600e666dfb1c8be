//! Computational toolkit for finite semigroups arising from affine
//! near-semirings over Brandt semigroups.
//!
//! The crate builds the additive and multiplicative semigroup reducts of
//! `A+(Bn)` (the near-semiring generated by the affine self-maps of the
//! Brandt semigroup `Bn`), decides whether a finite semigroup given by its
//! Cayley table is a syntactic semigroup, and connects the algebra to
//! automata: DFA minimization, transition monoids, and star-free
//! expression compilation.
//!
//! Modules:
//!
//! - [`semigroup`]: carrier-agnostic kernel — Cayley tables, congruences,
//!   quotients, Green's relations, aperiodicity, isomorphism search.
//! - [`brandt`]: the Brandt semigroups `Bn` and their element encoding.
//! - [`affine`]: self-maps of `Bn`, affine maps, closure generation, and
//!   the two reducts of `A+(Bn)`.
//! - [`syntactic`]: syntactic congruences of a subset, disjunctivity
//!   certificates, and the syntactic-semigroup decision procedure.
//! - [`automata`]: DFAs, minimization, transition monoids, star-free
//!   expressions, and the concrete witness machines.
//! - [`separations`]: replayable context computations that separate every
//!   distinct pair of elements in both reducts.
//! - [`io`]: canonical JSON encodings for semigroups, DFAs, element
//!   bundles, and disjunctivity certificates.

pub mod affine;
pub mod automata;
pub mod brandt;
pub mod budget;
pub mod io;
pub mod semigroup;
pub mod separations;
pub mod syntactic;

pub use affine::{APlusBn, MapKind, MapOnBn, Perm};
pub use automata::{Dfa, Equivalence, StarFreeExpr, TransitionMonoidResult};
pub use brandt::{Brandt, BrandtElement};
pub use budget::Budget;
pub use semigroup::{Congruence, FiniteSemigroup, GreenRelations, IsoWitness, Partition};
pub use syntactic::{ContextMode, DisjunctiveCertificate, DisjunctiveOutcome};
