use super::{OracleResult, Witness};
use crate::exact::{is_convex, ExactScalar, RealSet, ScaledInts, ScaledValues};
use crate::{Error, Result};

/// Default size guard for [`lcs_convex_bruteforce`].
pub const BRUTEFORCE_GUARD: usize = 20;

/// Size of the largest convex subset of `b`, by dynamic programming over
/// the last two elements.
///
/// `len(h, j)` is the longest convex subsequence starting `b[h], b[j]`:
///
/// ```text
/// len(h, j) = max(2, 1 + max{ len(j, t) : b[t] > 2·b[j] − b[h] })
/// ```
///
/// For a fixed middle `j` the admissible `t` form a suffix, so a running
/// suffix maximum and a pointer that only moves right give `O(n²)` overall.
/// The values are first scaled to integers, which keeps every comparison
/// exact and lets small inputs run on `i128`.
pub fn lcs_convex(b: &RealSet) -> Result<OracleResult> {
    if b.is_empty() {
        return Err(Error::InvalidInput("set must be nonempty".into()));
    }
    let indices = match ScaledValues::new(b) {
        ScaledValues::Small(v) => longest_convex_indices(&v),
        ScaledValues::Big(v) => longest_convex_indices(&v),
    };
    Ok(set_result(b, &indices, true))
}

fn set_result(b: &[ExactScalar], indices: &[usize], exhaustive: bool) -> OracleResult {
    let witness = RealSet::new(indices.iter().map(|&i| b[i].clone()).collect())
        .expect("witness indices increase");
    assert!(is_convex(&witness), "oracle witness must be convex");
    OracleResult {
        value: witness.len(),
        exhaustive,
        witness: Witness::Set(witness),
    }
}

/// Lexicographically smallest longest convex subsequence of a strictly
/// increasing sequence, as indices.
pub(crate) fn longest_convex_indices<T: ScaledInts>(v: &[T]) -> Vec<usize> {
    let n = v.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut len = vec![0u32; n * n];
    let mut suffix_max = vec![0u32; n + 1];
    for j in (1..n).rev() {
        suffix_max[n] = 0;
        for t in (j + 1..n).rev() {
            suffix_max[t] = suffix_max[t + 1].max(len[j * n + t]);
        }
        let mut t = j + 1;
        for h in (0..j).rev() {
            let threshold = v[j].reflect(&v[h]);
            while t < n && v[t] <= threshold {
                t += 1;
            }
            len[h * n + j] = if t < n { 1 + suffix_max[t] } else { 2 };
        }
    }

    let mut best = (2u32, 0usize, 1usize);
    for h in 0..n {
        for j in h + 1..n {
            if len[h * n + j] > best.0 {
                best = (len[h * n + j], h, j);
            }
        }
    }
    // Row-major scan with strict improvement already yields the smallest
    // (h, j) reaching the maximum.
    let (mut remaining, mut h, mut j) = best;
    let mut out = vec![h, j];
    while remaining > 2 {
        let threshold = v[j].reflect(&v[h]);
        let t = (j + 1..n)
            .find(|&t| v[t] > threshold && len[j * n + t] == remaining - 1)
            .expect("dp table is consistent");
        out.push(t);
        h = j;
        j = t;
        remaining -= 1;
    }
    out
}

/// Exhaustive reference for [`lcs_convex`]: tries all `2^|b|` subsets.
pub fn lcs_convex_bruteforce(b: &RealSet, limit: usize) -> Result<OracleResult> {
    if b.is_empty() {
        return Err(Error::InvalidInput("set must be nonempty".into()));
    }
    if b.len() > limit {
        return Err(Error::TooLarge {
            size: b.len(),
            limit,
        });
    }
    let n = b.len();
    let mut best: Vec<usize> = Vec::new();
    let mut subset = Vec::with_capacity(n);
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size < best.len() {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        subset.clear();
        subset.extend(idx.iter().map(|&i| b[i].clone()));
        if is_convex(&subset) && (size > best.len() || idx < best) {
            best = idx;
        }
    }
    Ok(set_result(b, &best, true))
}
