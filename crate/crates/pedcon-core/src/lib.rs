//! Exact-arithmetic toolkit for congruences of `ped(n)`, the number of
//! partitions of `n` whose even parts are distinct (equivalently: partitions
//! with no part divisible by 4).
//!
//! The crate provides:
//!
//! * [`series`] — truncated formal power series over exact integers or
//!   `Z/mZ`, with the sparse pentagonal machinery for Euler products
//!   `(q^k; q^k)_∞`, eta-quotient expansions, theta series, and two
//!   independent ways of computing `ped(n)`;
//! * [`arith`] — Legendre symbols, divisor enumeration, square classes of
//!   residue rings, and related utilities;
//! * [`radu`] — Radu's verification algorithm, which upgrades finitely many
//!   coefficient checks on an eta-quotient to an infinite congruence family;
//! * [`modform`] — eta-quotient modular-form certification (weight, level,
//!   character, cusp orders) and Hecke operators on q-expansions;
//! * [`newman`] — Newman's exact three-term recurrence for the coefficients
//!   of `f₁f₃⁶`, the infinite congruence families it yields, and arithmetic
//!   density sampling.
//!
//! All computations are exact: arbitrary-precision integers, residue rings,
//! and rationals. There is no floating point anywhere in the crate.

pub mod arith;
pub mod error;
pub mod modform;
pub mod newman;
pub mod radu;
pub mod series;

pub use error::{Error, Result};
