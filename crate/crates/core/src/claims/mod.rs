//! Mechanized checks of the construction claims, plus growth tables.
//!
//! Each checker returns a [`Report`]. A report fails exactly when it carries
//! a counterexample.

mod growth;
mod matching_claims;
mod thm1_claims;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub use growth::{growth_table, write_growth_csv, Family, GrowthRow};
pub use matching_claims::{block_profile, verify_claims_3, BlockProfile, EXHAUSTIVE_MAX_N};
pub use thm1_claims::{claim2_bound, verify_claim_2_1, verify_claim_2_2, verify_thm1_size};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub claim_id: String,
    pub params: BTreeMap<String, Value>,
    pub passed: bool,
    pub counterexample: Option<Value>,
    pub counts: BTreeMap<String, u64>,
}

impl Report {
    fn new(claim_id: &str) -> Self {
        Self {
            claim_id: claim_id.to_owned(),
            params: BTreeMap::new(),
            passed: true,
            counterexample: None,
            counts: BTreeMap::new(),
        }
    }

    fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_owned(), value.into());
    }

    fn count(&mut self, key: impl Into<String>, value: usize) {
        self.counts.insert(key.into(), value as u64);
    }

    /// Records the first counterexample; later ones are ignored.
    fn fail(&mut self, counterexample: Value) {
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample);
            self.passed = false;
        }
    }
}
