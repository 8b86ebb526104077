//! Construction-agnostic computations of the extremal quantities: the
//! largest convex subset of a set, the largest matching with a convex
//! restricted difference set, and the largest weakly convex subset of
//! `{1, …, n}` without four consecutive terms in arithmetic progression.
//!
//! Every search returns the lexicographically smallest optimal witness, and
//! every witness is re-checked against its defining predicate before it is
//! handed back.

mod enumerate;
mod lcs;
mod matching;
mod no4ap;

use serde::Serialize;

pub use enumerate::{enumerate_convex_subsets, ConvexSubsets};
pub use lcs::{lcs_convex, lcs_convex_bruteforce, BRUTEFORCE_GUARD};
pub use matching::{all_matchings, max_convex_matching, CM_GUARD};
pub use no4ap::{has_four_term_run, max_weakly_convex_no4ap, NO4AP_GUARD};

use crate::exact::{Matching, RealSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(RealSet),
    Matching(Matching),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: usize,
    pub exhaustive: bool,
    pub witness: Witness,
}

impl OracleResult {
    pub fn witness_set(&self) -> Option<&RealSet> {
        match &self.witness {
            Witness::Set(s) => Some(s),
            Witness::Matching(_) => None,
        }
    }

    pub fn witness_matching(&self) -> Option<&Matching> {
        match &self.witness {
            Witness::Matching(m) => Some(m),
            Witness::Set(_) => None,
        }
    }
}
