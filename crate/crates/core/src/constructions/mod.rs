//! Generators for the constructions: the cubic convex set and its
//! difference blocks, block gluing, the square-root and half-size matchings,
//! and the base-`2n` digit set.

pub(crate) mod glue;
mod matchings;
mod thm1;
mod thm3;

pub use glue::{glue_chain, glue_pair, GlueTrace, Splice, SpliceRecord};
pub use matchings::{ceil_sqrt, thm2_matching, thm2_required_size, thm4_matching};
pub use thm1::{thm1_block, thm1_set, DifferenceBlock, Thm1Params};
pub use thm3::{thm3_block_of, thm3_set};

use crate::exact::RealSet;

/// `{i² : 1 ≤ i ≤ n}`.
pub fn squares(n: usize) -> RealSet {
    RealSet::from_ints((1..=n as i64).map(|i| i * i)).expect("squares increase")
}
