use num_bigint::BigInt;
use serde::Serialize;

use crate::exact::{ExactScalar, RealSet};
use crate::{Error, Result};

/// Parameters of the cubic construction `a_i = i + c₁i² + c₂i³` with
/// `c₁ = 75/n²`, `c₂ = 1/n⁵`.
///
/// Blocks `D_k` are taken for `k ∈ [⌈0.009n⌉, ⌊0.01n⌋]` and each holds the
/// first `⌊0.99n⌋` differences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm1Params {
    pub n: usize,
    pub strict: bool,
    pub c1: ExactScalar,
    pub c2: ExactScalar,
    pub k_min: usize,
    pub k_max: usize,
    pub i_max: usize,
}

impl Thm1Params {
    /// Strict mode demands `n ≥ 1000` and `100 | n`. Lenient mode takes any
    /// `n ≥ 100` whose block range `[⌈0.009n⌉, ⌊0.01n⌋]` is nonempty.
    pub fn new(n: usize, strict: bool) -> Result<Self> {
        if strict && (n < 1000 || !n.is_multiple_of(100)) {
            return Err(Error::InvalidParams(format!(
                "strict mode needs n to be a multiple of 100 with n ≥ 1000, got {n}"
            )));
        }
        if n < 100 {
            return Err(Error::InvalidParams(format!(
                "n must be at least 100, got {n}"
            )));
        }
        let k_min = (9 * n).div_ceil(1000);
        let k_max = n / 100;
        let i_max = 99 * n / 100;
        if k_min > k_max {
            return Err(Error::InvalidParams(format!(
                "block range [{k_min}, {k_max}] is empty for n = {n}"
            )));
        }
        let nn = BigInt::from(n);
        Ok(Self {
            n,
            strict,
            c1: ExactScalar::ratio(75, nn.pow(2)),
            c2: ExactScalar::ratio(1, nn.pow(5)),
            k_min,
            k_max,
            i_max,
        })
    }

    /// `a_i` for any `i ≥ 1` (the formula extends past `n`).
    pub fn element(&self, i: usize) -> ExactScalar {
        let i = BigInt::from(i);
        let n = BigInt::from(self.n);
        let n3 = n.pow(3);
        let numer = &i * n3.clone() * &n * &n + BigInt::from(75) * &i * &i * n3 + i.pow(3);
        ExactScalar::ratio(numer, n.pow(5))
    }

    /// Closed form `d_i^{(k)} = k + c₁(2ki + k²) + c₂(3i²k + 3ik² + k³)`.
    pub fn block_value(&self, k: usize, i: usize) -> ExactScalar {
        let (k, i) = (BigInt::from(k), BigInt::from(i));
        let lin = ExactScalar::from(k.clone());
        let quad = &self.c1 * ExactScalar::from(BigInt::from(2) * &k * &i + &k * &k);
        let cubic = &self.c2
            * ExactScalar::from(
                BigInt::from(3) * &i * &i * &k + BigInt::from(3) * &i * &k * &k + k.pow(3),
            );
        lin + quad + cubic
    }

    /// Smallest element of `D_k`, `d_1^{(k)}`.
    pub fn block_min(&self, k: usize) -> ExactScalar {
        self.block_value(k, 1)
    }

    /// Largest element of `D_k`, `d_{⌊0.99n⌋}^{(k)}`.
    pub fn block_max(&self, k: usize) -> ExactScalar {
        self.block_value(k, self.i_max)
    }

    pub fn set(&self) -> RealSet {
        RealSet::from_sorted_unchecked((1..=self.n).map(|i| self.element(i)).collect())
    }

    pub fn block(&self, k: usize) -> Result<DifferenceBlock> {
        if !(self.k_min..=self.k_max).contains(&k) {
            return Err(Error::InvalidParams(format!(
                "k = {k} outside [{}, {}]",
                self.k_min, self.k_max
            )));
        }
        let values: Vec<ExactScalar> = (1..=self.i_max).map(|i| self.block_value(k, i)).collect();
        Ok(DifferenceBlock {
            k,
            first_index: 1,
            count: values.len(),
            values: RealSet::from_sorted_unchecked(values),
        })
    }
}

/// The `k`-th difference block `{a_{i+k} − a_i}` of a generating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceBlock {
    pub k: usize,
    pub values: RealSet,
    pub first_index: usize,
    pub count: usize,
}

impl DifferenceBlock {
    /// Builds the block directly from a set, `{A[i+k] − A[i] : 1 ≤ i ≤ count}`.
    pub fn from_set(a: &RealSet, k: usize, count: usize) -> Result<Self> {
        if k == 0 || count + k > a.len() {
            return Err(Error::InvalidParams(format!(
                "block k = {k} with {count} elements does not fit a set of {}",
                a.len()
            )));
        }
        let values = RealSet::from_unsorted((0..count).map(|i| &a[i + k] - &a[i]).collect());
        Ok(Self {
            k,
            values,
            first_index: 1,
            count,
        })
    }
}

pub fn thm1_set(n: usize, strict: bool) -> Result<RealSet> {
    Ok(Thm1Params::new(n, strict)?.set())
}

/// `D_k` for the lenient parameters at `n`.
pub fn thm1_block(n: usize, k: usize) -> Result<DifferenceBlock> {
    Thm1Params::new(n, false)?.block(k)
}
