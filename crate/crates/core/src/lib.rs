//! Exact computational algebra for multisemigroups with multiplicities.
//!
//! A multisemigroup with multiplicities is a finite carrier together with a
//! table assigning to each ordered pair a finitely supported multiplicity
//! function into `Card_k`, the semiring of cardinals saturated at a bound.
//! The table must satisfy an associativity law that makes iterated products
//! independent of bracketing. This crate provides:
//!
//! * saturating cardinal arithmetic, the reduction and lifting homomorphisms
//!   between bounds, and a small family of semiring instances with an axiom
//!   checker ([`cardinal`], [`semiring`]);
//! * the table type with its verifier, word evaluation from either end,
//!   reduction and lifting, structure constants, and the bilinear algebra on
//!   multiplicity functions ([`mms`], [`multisemigroup`], [`algebra`]);
//! * exhaustive, pruned search for deformations of plain multisemigroups,
//!   with an obstruction certificate for non-deformability ([`deformation`]);
//! * generators for the concrete families: Kazhdan-Lusztig structure
//!   constants of dihedral groups, projective-functor composition tables,
//!   Catalan monoids ([`catalog`]);
//! * a canonical JSON interchange format ([`json`]).
//!
//! Everything is immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

pub mod algebra;
pub mod cardinal;
pub mod carrier;
pub mod catalog;
pub mod deformation;
pub mod error;
pub mod json;
pub mod mms;
pub mod multiplicity;
pub mod multisemigroup;
pub mod semiring;

pub use cardinal::{Cardinal, CardinalBound, CardinalValue};
pub use carrier::Carrier;
pub use error::{Error, Result};
pub use mms::{AssocVerdict, MultiMultisemigroup};
pub use multiplicity::MultiplicityFunction;
pub use multisemigroup::Multisemigroup;
