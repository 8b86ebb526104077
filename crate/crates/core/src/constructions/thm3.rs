use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact::{ExactScalar, RealSet};
use crate::{Error, Result};

fn base(n: usize) -> BigInt {
    BigInt::from(2 * n)
}

/// `a_j = j·B^n + (j−1)·B^{n−1} + ⋯ + 1·B^{n−j+1}` with `B = 2n`, for
/// `1 ≤ j ≤ n`. Written in base `B` the digits of `a_j` read
/// `j, j−1, …, 1, 0, …, 0` from the top, so no carries occur anywhere.
pub fn thm3_set(n: usize) -> Result<RealSet> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let b = base(n);
    let powers: Vec<BigInt> = (0..=n as u32).map(|e| b.pow(e)).collect();
    let elements = (1..=n)
        .map(|j| {
            let v: BigInt = (0..j).map(|t| BigInt::from(j - t) * &powers[n - t]).sum();
            ExactScalar::from(v)
        })
        .collect();
    RealSet::new(elements)
}

/// Base-`2n` digits of a nonnegative integer, least significant first.
pub(crate) fn digits(x: &BigInt, n: usize) -> Vec<usize> {
    let b = base(n);
    let mut out = Vec::new();
    let mut v = x.clone();
    while !v.is_zero() {
        out.push((&v % &b).to_usize().expect("digit fits"));
        v /= &b;
    }
    out
}

/// Recovers `(k, j)` with `x = a_{j+k} − a_j` from the base-`2n` digits of
/// `x`, or `None` if `x` is not a positive difference of `thm3_set(n)`.
///
/// `d_j^{(k)}` has digit `k` at positions `n, n−1, …, n−j`, then
/// `k−1, k−2, …, 1` at positions `n−j−1, …, n−j−k+1`, then zeros.
pub fn thm3_block_of(n: usize, x: &ExactScalar) -> Option<(usize, usize)> {
    if n < 2 || !x.is_integer() || !x.numer().is_positive() {
        return None;
    }
    let d = digits(x.numer(), n);
    if d.len() != n + 1 {
        return None;
    }
    let k = d[n];
    if k == 0 || k >= n {
        return None;
    }
    let run = (0..=n).rev().take_while(|&p| d[p] == k).count();
    let j = run - 1;
    if j == 0 || j + k > n {
        return None;
    }
    let expected = |p: usize| -> usize {
        if p >= n - j {
            k
        } else {
            // m = n − j − p steps below the run
            k.saturating_sub(n - j - p)
        }
    };
    (0..=n).all(|p| d[p] == expected(p)).then_some((k, j))
}
