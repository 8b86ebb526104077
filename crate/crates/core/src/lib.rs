//! Exact constructions, search oracles and claim checkers for large convex
//! subsets of difference sets.
//!
//! Everything here works over arbitrary-precision rationals. A "set of reals"
//! is a [`RealSet`], a strictly increasing sequence of [`ExactScalar`]s.
//!
//! * [`exact`] holds the arithmetic, convexity predicates and the
//!   difference/sum-set operators.
//! * [`constructions`] generates the convex sets, difference blocks, glued
//!   chains and matchings.
//! * [`oracles`] computes the extremal quantities independently of the
//!   constructions.
//! * [`claims`] runs the mechanized claim checks and growth tables.
//! * [`cli`] is the command-line front end.

pub mod claims;
pub mod cli;
pub mod constructions;
mod error;
pub mod exact;
pub mod oracles;

pub use error::{Error, Result};
pub use exact::{ExactScalar, Matching, RealSet};
