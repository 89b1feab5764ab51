//! Exact-arithmetic toolkit for cyclic algebras over the rationals and the
//! Weyl-group cosets their unit groups can realize.
//!
//! The crate is organized bottom-up:
//!
//! - [`rational`] — arbitrary-precision rational scalars and text renderings;
//! - [`unipoly`] — dense univariate polynomials over the rationals;
//! - [`arith`] — integer utilities (primality, factoring, Legendre symbols);
//! - [`permcycle`] — permutations, cycle types, exclusion predicates, and
//!   exact censuses of the symmetric group;
//! - [`numberfield`] — cyclic Galois number fields over Q with an explicit
//!   generator of the Galois group, plus a norm-equation solver;
//! - [`matrixnf`] — exact matrices over a number field: determinants,
//!   characteristic and minimal polynomials, monomial structure;
//! - [`cyclicalg`] — cyclic algebras (K/Q, sigma, a): crossed-product
//!   arithmetic, the regular representation, reduced norm and trace, and a
//!   division test;
//! - [`brauer`] — local invariants over Q: Hilbert symbols, quaternion
//!   Hasse invariants, and root-of-unity obstructions;
//! - [`weyl`] — which cycle types the unit groups D^x and SL_1(D) realize on
//!   the fundamental apartment, and the monomial-stabilizer search;
//! - [`verify`] — self-contained verification suites that re-derive the
//!   library's headline results from independent brute-force oracles.
//!
//! All arithmetic is exact (no floating point on any decision path), all
//! containers iterate in a deterministic order, and every randomized check is
//! driven by a caller-supplied seed.

pub mod arith;
pub mod brauer;
pub mod cyclicalg;
pub mod matrixnf;
pub mod numberfield;
pub mod permcycle;
pub mod rational;
pub mod unipoly;
pub mod verify;
pub mod weyl;

/// Default height bound for norm-equation and stabilizer searches.
pub const DEFAULT_HEIGHT_BOUND: u32 = 4;
