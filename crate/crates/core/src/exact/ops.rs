//! Convexity predicates and difference/sum-set operators.

use std::cmp::Ordering;

use super::{ExactScalar, Matching, RealSet};
use crate::{Error, Result};

/// Strictly increasing consecutive gaps. Sequences of length ≤ 2 are convex.
pub fn is_convex(s: &[ExactScalar]) -> bool {
    first_convexity_violation(s).is_none()
}

/// Nondecreasing consecutive gaps. Sequences of length ≤ 2 qualify.
pub fn is_weakly_convex(s: &[ExactScalar]) -> bool {
    s.windows(3).all(|w| &w[2] - &w[1] >= &w[1] - &w[0])
}

/// Index `t` of the first interior element with `s[t+1] − s[t] ≤ s[t] − s[t−1]`.
pub fn first_convexity_violation(s: &[ExactScalar]) -> Option<usize> {
    s.windows(3)
        .position(|w| &w[2] - &w[1] <= &w[1] - &w[0])
        .map(|p| p + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairOp {
    Difference,
    Sum,
}

impl PairOp {
    fn apply(self, a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
        match self {
            PairOp::Difference => a - b,
            PairOp::Sum => a + b,
        }
    }
}

fn nonempty(a: &RealSet) -> Result<()> {
    if a.is_empty() {
        return Err(Error::InvalidInput("set must be nonempty".into()));
    }
    Ok(())
}

/// `A − A`, including zero and the negative differences.
pub fn difference_set(a: &RealSet) -> Result<RealSet> {
    nonempty(a)?;
    let mut out = Vec::with_capacity(a.len() * a.len());
    for x in a.iter() {
        for y in a.iter() {
            out.push(x - y);
        }
    }
    Ok(RealSet::from_unsorted(out))
}

/// The strictly positive part of `A − A`.
pub fn positive_differences(a: &RealSet) -> RealSet {
    let mut out = Vec::with_capacity(a.len() * a.len().saturating_sub(1) / 2);
    for (i, x) in a.iter().enumerate() {
        for y in &a[i + 1..] {
            out.push(y - x);
        }
    }
    RealSet::from_unsorted(out)
}

/// `A + A`.
pub fn sum_set(a: &RealSet) -> Result<RealSet> {
    nonempty(a)?;
    let mut out = Vec::with_capacity(a.len() * (a.len() + 1) / 2);
    for (i, x) in a.iter().enumerate() {
        for y in &a[i..] {
            out.push(x + y);
        }
    }
    Ok(RealSet::from_unsorted(out))
}

fn restricted(
    a: &RealSet,
    m: &Matching,
    f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar,
) -> Result<RealSet> {
    m.check_base(a.len())?;
    let values = m
        .pairs()
        .iter()
        .map(|&(lo, hi)| f(&a[lo - 1], &a[hi - 1]))
        .collect();
    Ok(RealSet::from_unsorted(values))
}

/// `{A[hi] − A[lo] : (lo, hi) ∈ M}`; every value is positive.
pub fn restricted_difference_set(a: &RealSet, m: &Matching) -> Result<RealSet> {
    restricted(a, m, |lo, hi| hi - lo)
}

/// `{A[lo] + A[hi] : (lo, hi) ∈ M}`.
pub fn restricted_sum_set(a: &RealSet, m: &Matching) -> Result<RealSet> {
    restricted(a, m, |lo, hi| lo + hi)
}

/// Number of ordered pairs `(a, b) ∈ A × A` with `a − b = x` (or `a + b = x`),
/// diagonal pairs included.
pub fn count_representations(a: &RealSet, x: &ExactScalar, op: PairOp) -> usize {
    a.iter()
        .filter(|&v| {
            let partner = match op {
                PairOp::Difference => v - x,
                PairOp::Sum => x - v,
            };
            a.contains(&partner)
        })
        .count()
}

/// Largest representation count over all `x` in `A − A` or `A + A`, with
/// the first value attaining it.
pub fn max_representation(a: &RealSet, op: PairOp) -> Option<(ExactScalar, usize)> {
    let mut values: Vec<ExactScalar> = Vec::with_capacity(a.len() * a.len());
    for x in a.iter() {
        for y in a.iter() {
            values.push(op.apply(x, y));
        }
    }
    values.sort_unstable();
    let mut best: Option<(ExactScalar, usize)> = None;
    for run in values.chunk_by(|p, q| p == q) {
        if best.as_ref().is_none_or(|(_, c)| run.len() > *c) {
            best = Some((run[0].clone(), run.len()));
        }
    }
    best
}

/// Finds 0-based positions `(i, j)` with `A[j] − A[i] = x`, if any.
///
/// Checks convexity of `a` on every call; use [`DifferenceFinder`] for
/// repeated queries against one set.
pub fn find_difference(a: &[ExactScalar], x: &ExactScalar) -> Option<(usize, usize)> {
    DifferenceFinder::new(a).find(x)
}

/// Repeated membership queries against `A − A` for one sorted set.
///
/// For convex `A` each `k`-th difference block `A[i+k] − A[i]` is
/// increasing in `i`, and both its first and last element increase with
/// `k`, so a lookup is a pair of binary searches per candidate `k`. Other
/// sets fall back to a linear two-pointer sweep.
pub struct DifferenceFinder<'a> {
    a: &'a [ExactScalar],
    convex: bool,
}

impl<'a> DifferenceFinder<'a> {
    pub fn new(a: &'a [ExactScalar]) -> Self {
        Self {
            a,
            convex: is_convex(a),
        }
    }

    pub fn find(&self, x: &ExactScalar) -> Option<(usize, usize)> {
        if self.a.is_empty() {
            return None;
        }
        if x.is_zero() {
            return Some((0, 0));
        }
        if x.is_negative() {
            return self.find(&-x).map(|(i, j)| (j, i));
        }
        if self.convex {
            find_difference_convex(self.a, x)
        } else {
            find_difference_sweep(self.a, x)
        }
    }
}

fn find_difference_convex(a: &[ExactScalar], x: &ExactScalar) -> Option<(usize, usize)> {
    let n = a.len();
    // Block k spans [a[k] − a[0], a[n−1] − a[n−1−k]].
    let block_min = |k: usize| &a[k] - &a[0];
    let block_max = |k: usize| &a[n - 1] - &a[n - 1 - k];
    // Largest k with block_min(k) ≤ x.
    let (mut lo, mut hi) = (0usize, n - 1);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if &block_min(mid) <= x {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let k_hi = lo;
    // Smallest k ≥ 1 with block_max(k) ≥ x.
    let (mut lo, mut hi) = (1usize, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if &block_max(mid) >= x {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let k_lo = lo;
    for k in k_lo..=k_hi {
        let found = partition_point_by(n - k, |i| (&a[i + k] - &a[i]).cmp(x));
        if let Some(i) = found {
            return Some((i, i + k));
        }
    }
    None
}

/// Binary search over an increasing sequence given by `cmp(i)` against a
/// target, returning the matching position.
fn partition_point_by(len: usize, cmp: impl Fn(usize) -> Ordering) -> Option<usize> {
    let (mut lo, mut hi) = (0usize, len);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match cmp(mid) {
            Ordering::Less => lo = mid + 1,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return Some(mid),
        }
    }
    None
}

fn find_difference_sweep(a: &[ExactScalar], x: &ExactScalar) -> Option<(usize, usize)> {
    let (mut i, mut j) = (0usize, 0usize);
    while j < a.len() {
        match (&a[j] - &a[i]).cmp(x) {
            Ordering::Equal => return Some((i, j)),
            Ordering::Less => j += 1,
            Ordering::Greater => i += 1,
        }
    }
    None
}
