//! Exact-arithmetic toolkit for the sporadic Apéry-like sequences.
//!
//! The fifteen sporadic sequences (Zagier's A–F, the Almkvist–Zudilin
//! sequences (δ), (η), (α), (ε), (ζ), (γ) and Cooper's s7, s10, s18) can be
//! produced in three independent ways:
//!
//! - as integer solutions of three-term recurrences,
//! - as binomial sums,
//! - as constant terms of powers of Laurent polynomials.
//!
//! This crate implements all three routes over arbitrary-precision integers,
//! decides whether the Newton polytope of a representing Laurent polynomial
//! has the origin as its only interior lattice point, verifies Gauss / Lucas /
//! Dwork-style congruences and p-adic valuation bounds at desk scale, and
//! searches bounded families of "good" Laurent polynomials (factors with
//! coefficients in {-1,0,1}) for matches against target sequences.
//!
//! Everything is exact: no floating point, no modular shortcuts unless a
//! modulus is explicitly requested.

pub mod binom;
pub mod catalog;
pub mod congruence;
pub mod error;
pub mod laurent;
pub mod polytope;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
