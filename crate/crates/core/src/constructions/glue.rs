use serde::{Deserialize, Serialize};

use super::thm1::Thm1Params;
use crate::exact::{first_convexity_violation, ExactScalar, RealSet};
use crate::{Error, Result};

/// 1-based splice positions: `b_i ≤ a_j < a_{j+1} ≤ b_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splice {
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpliceRecord {
    /// Index of the incoming block.
    pub k: usize,
    /// End of the retained prefix of the running set.
    pub j: usize,
    /// Position in the incoming block after which its suffix is kept.
    pub i: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueTrace {
    pub splices: Vec<SpliceRecord>,
}

fn require_convex(s: &[ExactScalar], what: &str) -> Result<()> {
    if let Some(t) = first_convexity_violation(s) {
        return Err(Error::InvalidInput(format!(
            "{what} is not convex at position {}",
            t + 1
        )));
    }
    Ok(())
}

/// Glues convex `a` onto convex `b`: finds `b_i ≤ a_j < a_{j+1} ≤ b_{i+1}`
/// and returns `{a_1, …, a_j, b_{i+1}, …, b_m}`, which is again convex.
///
/// Among all valid splices the one giving the largest output wins, ties
/// going to the smallest `i`.
pub fn glue_pair(a: &RealSet, b: &RealSet) -> Result<(RealSet, Splice)> {
    require_convex(a, "left set")?;
    require_convex(b, "right set")?;
    let splice = best_splice(a, b).ok_or(Error::NoSplice)?;
    let mut out = Vec::with_capacity(splice.j + b.len() - splice.i);
    out.extend_from_slice(&a[..splice.j]);
    out.extend_from_slice(&b[splice.i..]);
    Ok((RealSet::from_sorted_unchecked(out), splice))
}

fn best_splice(a: &[ExactScalar], b: &[ExactScalar]) -> Option<Splice> {
    let (n, m) = (a.len(), b.len());
    // For each j the only candidate i is the last one with b_i ≤ a_j: any
    // earlier i has b_{i+1} ≤ a_j < a_{j+1}.
    let mut best: Option<(usize, Splice)> = None;
    let mut i = 0usize; // count of b elements ≤ a_j, i.e. the 1-based i
    for j in 1..n {
        while i < m && b[i] <= a[j - 1] {
            i += 1;
        }
        if i == 0 || i >= m {
            continue;
        }
        if a[j] <= b[i] {
            let size = j + m - i;
            let better = match best {
                None => true,
                Some((s, prev)) => size > s || (size == s && i < prev.i),
            };
            if better {
                best = Some((size, Splice { i, j }));
            }
        }
    }
    best.map(|(_, s)| s)
}

/// Glues `D_{k_min}, D_{k_min+1}, …, D_{k_max}` left to right.
pub fn glue_chain(n: usize, strict: bool) -> Result<(RealSet, GlueTrace)> {
    let params = Thm1Params::new(n, strict)?;
    glue_chain_with(&params)
}

pub(crate) fn glue_chain_with(params: &Thm1Params) -> Result<(RealSet, GlueTrace)> {
    let mut running = params.block(params.k_min)?.values;
    let mut trace = GlueTrace::default();
    for k in params.k_min + 1..=params.k_max {
        let block = params.block(k)?;
        let (next, splice) = glue_pair(&running, &block.values)?;
        trace.splices.push(SpliceRecord {
            k,
            j: splice.j,
            i: splice.i,
        });
        running = next;
    }
    Ok((running, trace))
}
