use num_integer::Roots;

use crate::exact::{first_convexity_violation, ExactScalar, Matching};
use crate::{Error, Result};

pub fn ceil_sqrt(n: usize) -> usize {
    let r = n.sqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// Largest index used by the square-root matching on `n` elements,
/// `k + 1 + k(k+1)/2` with `k = ⌈√n⌉`.
pub fn thm2_required_size(n: usize) -> usize {
    let k = ceil_sqrt(n);
    k + 1 + k * (k + 1) / 2
}

fn require_convex(a: &[ExactScalar]) -> Result<()> {
    match first_convexity_violation(a) {
        Some(t) => Err(Error::InvalidInput(format!(
            "set is not convex at position {}",
            t + 1
        ))),
        None => Ok(()),
    }
}

/// `{(k+1−i, k+1+i(i+1)/2) : 1 ≤ i ≤ k}` with `k = ⌈√n⌉`, listed by `i`.
/// Its restricted difference set is convex whenever `a` is.
pub fn thm2_matching(a: &[ExactScalar]) -> Result<Matching> {
    require_convex(a)?;
    let n = a.len();
    let needed = thm2_required_size(n);
    if needed > n {
        return Err(Error::InsufficientN { n, needed });
    }
    let k = ceil_sqrt(n);
    let pairs = (1..=k)
        .map(|i| (k + 1 - i, k + 1 + i * (i + 1) / 2))
        .collect();
    Matching::new(n, pairs)
}

/// `{(t, h+t) : 1 ≤ t ≤ h}` with `h = ⌊n/2⌋`; for odd `n` the last element
/// is left out. Its restricted sum set is convex whenever `a` is.
pub fn thm4_matching(a: &[ExactScalar]) -> Result<Matching> {
    if a.len() < 2 {
        return Err(Error::InvalidParams(format!(
            "need at least 2 elements, got {}",
            a.len()
        )));
    }
    require_convex(a)?;
    let h = a.len() / 2;
    Matching::new(a.len(), (1..=h).map(|t| (t, h + t)).collect())
}
