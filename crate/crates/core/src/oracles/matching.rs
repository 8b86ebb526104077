use super::{OracleResult, Witness};
use crate::exact::{
    first_convexity_violation, is_convex, restricted_difference_set, ExactScalar, Matching, RealSet,
};
use crate::{Error, Result};

/// Default size guard for [`max_convex_matching`].
pub const CM_GUARD: usize = 12;

struct Search {
    /// Candidate pairs as 0-based `(lo, hi, difference)`, sorted by
    /// difference, then `lo`, then `hi`.
    pairs: Vec<(usize, usize, ExactScalar)>,
    n: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl Search {
    /// Depth-first over increasing pair positions. Differences are appended
    /// in nondecreasing order, so the distinct-value sequence only grows at
    /// its top end: a convexity violation among earlier values can never be
    /// repaired and the branch is cut as soon as it appears.
    fn run(
        &mut self,
        start: usize,
        used: u64,
        last: Option<&ExactScalar>,
        prev: Option<&ExactScalar>,
    ) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let free = self.n - used.count_ones() as usize;
        if self.chosen.len() + free / 2 <= self.best.len() {
            return;
        }
        for p in start..self.pairs.len() {
            let (lo, hi) = (self.pairs[p].0, self.pairs[p].1);
            if used >> lo & 1 == 1 || used >> hi & 1 == 1 {
                continue;
            }
            let d = &self.pairs[p].2;
            let (next_last, next_prev) = match (last, prev) {
                (Some(l), _) if l == d => (last, prev),
                // a later, larger difference may still clear the gap
                (Some(l), Some(q)) if d - l <= l - q => continue,
                _ => (Some(d), last),
            };
            let (nl, np) = (next_last.cloned(), next_prev.cloned());
            self.chosen.push(p);
            self.run(p + 1, used | 1 << lo | 1 << hi, nl.as_ref(), np.as_ref());
            self.chosen.pop();
        }
    }
}

/// Largest matching `M` on a convex set `a` whose restricted difference set
/// `{a_hi − a_lo}` is convex. Counts pairs, not distinct differences.
///
/// Exhaustive branch-and-bound; `a` may have at most `limit` elements.
pub fn max_convex_matching(a: &RealSet, limit: usize) -> Result<OracleResult> {
    if a.len() > limit {
        return Err(Error::TooLarge {
            size: a.len(),
            limit,
        });
    }
    if a.len() > 64 {
        return Err(Error::TooLarge {
            size: a.len(),
            limit: 64,
        });
    }
    if let Some(t) = first_convexity_violation(a) {
        return Err(Error::InvalidInput(format!(
            "set is not convex at position {}",
            t + 1
        )));
    }
    let n = a.len();
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for lo in 0..n {
        for hi in lo + 1..n {
            pairs.push((lo, hi, &a[hi] - &a[lo]));
        }
    }
    pairs.sort_by(|x, y| x.2.cmp(&y.2).then(x.0.cmp(&y.0)).then(x.1.cmp(&y.1)));
    let mut search = Search {
        pairs,
        n,
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.run(0, 0, None, None);
    let matching = Matching::new(
        n,
        search
            .best
            .iter()
            .map(|&p| (search.pairs[p].0 + 1, search.pairs[p].1 + 1))
            .collect(),
    )?;
    assert!(
        is_convex(&restricted_difference_set(a, &matching)?),
        "oracle witness must give a convex restricted difference set"
    );
    Ok(OracleResult {
        value: matching.len(),
        exhaustive: true,
        witness: Witness::Matching(matching),
    })
}

/// Every matching (including the empty one) on `n` elements, as 1-based
/// pairs. There are only 35696 of them at `n = 12`.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    fn go(
        n: usize,
        next: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
    ) {
        if next > n {
            out.push(Matching::new(n, cur.clone()).expect("disjoint by construction"));
            return;
        }
        if used[next] {
            go(n, next + 1, used, cur, out);
            return;
        }
        // leave `next` unmatched
        go(n, next + 1, used, cur, out);
        used[next] = true;
        for partner in next + 1..=n {
            if !used[partner] {
                used[partner] = true;
                cur.push((next, partner));
                go(n, next + 1, used, cur, out);
                cur.pop();
                used[partner] = false;
            }
        }
        used[next] = false;
    }
    let mut out = Vec::new();
    go(n, 1, &mut vec![false; n + 2], &mut Vec::new(), &mut out);
    out
}
