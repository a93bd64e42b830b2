//! Finite inverse semigroups, their twisted actions on finite-dimensional
//! \*-algebras, and the crossed products those actions generate.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation over explicit tables and structure constants; file formats and
//! the command-line front-end live in the companion `twistcross` crate.
//!
//! Layout, bottom-up:
//!
//! - [`partial_bijection`]: injective partial maps of `{1..n}` in tuple notation.
//! - [`semigroup`]: Cayley-table inverse semigroups, closure enumeration,
//!   natural order, F̃ detection, maximal group images.
//! - [`congruence`]: idempotent-separating congruences and normal Clifford
//!   subsemigroups.
//! - [`cross_section`]: order-preserving cross-sections.
//! - [`exel`]: the inverse semigroup `S(G)` of a finite group.
//! - [`algebra`]: \*-algebras by structure constants, basis-aligned ideals,
//!   partial automorphisms, radical and trace-form certification.
//! - [`actions`]: Busby-Smith, Green and twisted partial actions with their
//!   verifiers and conversions.
//! - [`crossed`]: convolution algebras, crossed-product quotients, covariant
//!   representations and decomposition checks.
//! - [`catalog`]: named instances shared by the tests and the CLI.
#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod actions;
pub mod algebra;
pub mod catalog;
pub mod congruence;
pub mod cross_section;
pub mod crossed;
pub mod error;
pub mod exel;
pub mod linalg;
pub mod partial_bijection;
pub mod report;
pub mod scalar;
pub mod semigroup;

pub use error::{Error, Result};
pub use scalar::{GaussRat, Scalar, C64};

/// Default numerical tolerance for the floating-point backend.
pub const DEFAULT_TOL: f64 = 1e-9;
