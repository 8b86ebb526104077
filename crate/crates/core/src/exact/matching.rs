use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use crate::{Error, Result};

/// A set of element-disjoint index pairs into a base set of `base_size`
/// elements. Indices are 1-based and every pair has `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    base_size: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(base_size: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; base_size + 1];
        for &(lo, hi) in &pairs {
            if lo == 0 || hi > base_size {
                return Err(Error::InvalidMatching(format!(
                    "pair ({lo}, {hi}) out of range 1..={base_size}"
                )));
            }
            if lo >= hi {
                return Err(Error::InvalidMatching(format!(
                    "pair ({lo}, {hi}) must satisfy lo < hi"
                )));
            }
            for idx in [lo, hi] {
                if std::mem::replace(&mut used[idx], true) {
                    return Err(Error::InvalidMatching(format!(
                        "index {idx} used by more than one pair"
                    )));
                }
            }
        }
        Ok(Self { base_size, pairs })
    }

    pub fn empty(base_size: usize) -> Self {
        Self {
            base_size,
            pairs: Vec::new(),
        }
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks that the matching indexes a set of size `n`.
    pub fn check_base(&self, n: usize) -> Result<()> {
        if self.base_size != n {
            return Err(Error::InvalidMatching(format!(
                "matching is over {} elements but the set has {n}",
                self.base_size
            )));
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for Matching {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            base_size: usize,
            pairs: Vec<(usize, usize)>,
        }
        let w = Wire::deserialize(d)?;
        Matching::new(w.base_size, w.pairs).map_err(D::Error::custom)
    }
}
