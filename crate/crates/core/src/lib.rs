//! Combinatorial analysis of subsets of finite abelian groups and the
//! incidence structures they generate.
//!
//! The crate is organised around one pipeline:
//!
//! 1. [`groupalg`] builds small abelian groups (ℤₙ, additive GF(p^m),
//!    ℤ₂ × G) and cyclotomic classes with their cyclotomic numbers;
//! 2. [`diffana`] computes difference functions and difference levels of a
//!    subset, classifying it as a difference set, an almost difference set,
//!    or a general multi-level subset;
//! 3. [`incidence`] holds block structures (developments, duals,
//!    contractions, complements, point adjunctions) and verifies t-levels
//!    by exhaustive subset enumeration, together with packing/covering
//!    bounds;
//! 4. [`gf2codes`] views incidence matrices over GF(2): rank, Gram rank,
//!    self-orthogonality, minimum distance and a dual-distance bound;
//! 5. [`constructions`] generates the catalogued adesign families and
//!    verifies every claimed parameter set, recording confirmations and
//!    refutations alike.
//!
//! Everything is exact integer arithmetic; no floating point is used in
//! any accept/reject decision. The crate is `no_std` (with `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constructions;
pub mod diffana;
pub mod gf2codes;
pub mod groupalg;
pub mod incidence;

pub use constructions::{ClaimRecord, ClaimStatus, Construction};
pub use diffana::{difference_profile, Classification, DifferenceProfile};
pub use gf2codes::BitMatrix;
pub use groupalg::{make_group, Group, GroupSpec};
pub use incidence::{t_level_profile, IncidenceStructure, LevelProfile, Verdict};
