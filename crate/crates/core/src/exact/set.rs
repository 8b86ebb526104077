use std::ops::Deref;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use super::ExactScalar;
use crate::{Error, Result};

/// A finite set of reals, stored as a strictly increasing sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct RealSet {
    elements: Vec<ExactScalar>,
}

impl RealSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Wraps an already strictly increasing sequence.
    pub fn new(elements: Vec<ExactScalar>) -> Result<Self> {
        if let Some(t) = elements.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "elements not strictly increasing at position {t}: {} then {}",
                elements[t],
                elements[t + 1]
            )));
        }
        Ok(Self { elements })
    }

    /// Sorts and deduplicates arbitrary values.
    pub fn from_unsorted(mut elements: Vec<ExactScalar>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self { elements }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        Self::new(values.into_iter().map(ExactScalar::from).collect())
    }

    /// Caller guarantees strict increase; checked in debug builds.
    pub(crate) fn from_sorted_unchecked(elements: Vec<ExactScalar>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements }
    }

    pub fn elements(&self) -> &[ExactScalar] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<ExactScalar> {
        self.elements
    }

    pub fn contains(&self, x: &ExactScalar) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// Consecutive gaps `s[t+1] − s[t]`.
    pub fn gaps(&self) -> Vec<ExactScalar> {
        self.elements.windows(2).map(|w| &w[1] - &w[0]).collect()
    }

    /// `{x + shift : x ∈ self}`.
    pub fn translate(&self, shift: &ExactScalar) -> Self {
        Self::from_sorted_unchecked(self.elements.iter().map(|x| x + shift).collect())
    }

    pub fn is_subset_of(&self, other: &RealSet) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }
}

impl Deref for RealSet {
    type Target = [ExactScalar];
    fn deref(&self) -> &[ExactScalar] {
        &self.elements
    }
}

impl std::fmt::Debug for RealSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.elements.iter()).finish()
    }
}

impl<'de> Deserialize<'de> for RealSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            elements: Vec<ExactScalar>,
        }
        let w = Wire::deserialize(d)?;
        RealSet::new(w.elements).map_err(D::Error::custom)
    }
}
