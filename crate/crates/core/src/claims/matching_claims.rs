use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::Report;
use crate::constructions::{thm3_block_of, thm3_set};
use crate::exact::{
    is_convex, is_weakly_convex, positive_differences, restricted_difference_set, ExactScalar,
    RealSet,
};
use crate::oracles::{all_matchings, enumerate_convex_subsets, has_four_term_run};
use crate::{Error, Result};

/// Largest `n` for which every convex subset of the positive differences is
/// enumerated.
pub const EXHAUSTIVE_MAX_N: usize = 5;

/// How a subset of `A − A` distributes over the difference blocks `D_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockProfile {
    /// `k ↦ |S ∩ D_k|`, nonzero entries only.
    pub per_block: BTreeMap<usize, usize>,
}

impl BlockProfile {
    /// `K(S)` in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        self.per_block.keys().copied().collect()
    }

    fn indices_as_set(&self) -> RealSet {
        RealSet::from_ints(self.per_block.keys().map(|&k| k as i64)).expect("sorted keys")
    }
}

/// Maps every element of `s` to its block by base-`2n` digit decoding.
/// Returns the first element that does not decode.
pub fn block_profile(
    n: usize,
    s: &[ExactScalar],
) -> std::result::Result<BlockProfile, ExactScalar> {
    let mut per_block = BTreeMap::new();
    for x in s {
        let (k, _) = thm3_block_of(n, x).ok_or_else(|| x.clone())?;
        *per_block.entry(k).or_insert(0) += 1;
    }
    Ok(BlockProfile { per_block })
}

/// Checks the block conclusions for one convex `S`; `Err` names the first
/// claim that fails.
fn check_subset(n: usize, s: &[ExactScalar]) -> std::result::Result<BlockProfile, &'static str> {
    let profile = block_profile(n, s).map_err(|_| "element is not a block element")?;
    let heavy: Vec<usize> = profile
        .per_block
        .iter()
        .filter(|&(_, &c)| c >= 2)
        .map(|(&k, _)| k)
        .collect();
    if heavy.len() > 1 {
        return Err("heavy block: two blocks hold two or more elements");
    }
    if let Some(&k2) = heavy.first() {
        if profile.per_block.keys().any(|&k1| k1 < k2) {
            return Err("heavy block: a lighter block precedes the heavy block");
        }
    }
    if !is_weakly_convex(&profile.indices_as_set()) {
        return Err("block indices: K(S) is not weakly convex");
    }
    if profile.per_block.values().any(|&c| c > 2) {
        return Err("block load: a block holds three or more elements");
    }
    if s.len() > profile.per_block.len() + 1 {
        return Err("|S| exceeds |K(S)| + 1");
    }
    Ok(profile)
}

/// Random convex chains through `b`: pick a start, then repeatedly pick a
/// uniformly random admissible next element. Every prefix of size ≥ 3 is
/// returned.
fn random_convex_chains(b: &RealSet, walks: usize, seed: u64) -> Vec<RealSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    if b.len() < 3 {
        return out;
    }
    for _ in 0..walks {
        let first = rng.gen_range(0..b.len() - 1);
        let second = rng.gen_range(first + 1..b.len());
        let mut path = vec![first, second];
        loop {
            let d = path.len();
            let threshold = b[path[d - 1]].reflect(&b[path[d - 2]]);
            let start = b.partition_point(|x| x <= &threshold).max(path[d - 1] + 1);
            if start >= b.len() {
                break;
            }
            path.push(rng.gen_range(start..b.len()));
            out.push(RealSet::from_sorted_unchecked(
                path.iter().map(|&i| b[i].clone()).collect(),
            ));
        }
    }
    out
}

/// Structural checks for the base-`2n` construction.
///
/// Every convex `S` drawn from the positive part of `A − A` must satisfy:
/// at most one block meets `S` twice and no block below it meets `S` at all;
/// `K(S)` is weakly convex; no block meets `S` three times; and
/// `|S| ≤ |K(S)| + 1`. For `n ≤ 5` all such `S` are enumerated; above that
/// the first `sample_cap` in lexicographic order plus `sample_cap` random
/// chains are checked and the coverage is reported.
///
/// For matching-derived `S` (every matching with a convex restricted
/// difference set, always enumerated in full), `K(S)` must also avoid four
/// consecutive terms in arithmetic progression.
pub fn verify_claims_3(n: usize, sample_cap: usize) -> Result<Report> {
    if !(2..=8).contains(&n) {
        return Err(Error::InvalidParams(format!(
            "claims harness supports 2 ≤ n ≤ 8, got {n}"
        )));
    }
    let a = thm3_set(n)?;
    let positives = positive_differences(&a);
    let mut report = Report::new("claims3");
    report.param("n", n);
    report.param("sample_cap", sample_cap);
    report.count("positive_differences", positives.len());

    let exhaustive = n <= EXHAUSTIVE_MAX_N;
    let count_cap = if exhaustive { usize::MAX } else { sample_cap };
    let mut stream = enumerate_convex_subsets(&positives, usize::MAX, count_cap);
    let mut checked = 0usize;
    let mut largest = 0usize;
    for s in stream.by_ref() {
        checked += 1;
        largest = largest.max(s.len());
        if let Err(claim) = check_subset(n, &s) {
            report.fail(json!({ "claim": claim, "subset": s }));
            break;
        }
    }
    let truncated = stream.truncated();
    report.count("subsets_enumerated", checked);
    report.count("enumeration_truncated", truncated as usize);
    report.count("exhaustive", (exhaustive && !truncated) as usize);

    if !exhaustive {
        let samples = random_convex_chains(&positives, sample_cap, n as u64);
        report.count("random_samples", samples.len());
        for s in &samples {
            largest = largest.max(s.len());
            if let Err(claim) = check_subset(n, s) {
                report.fail(json!({ "claim": claim, "subset": s }));
                break;
            }
        }
    }
    report.count("largest_subset", largest);

    let mut convex_matchings = 0usize;
    let mut largest_matching = 0usize;
    let matchings = all_matchings(n);
    report.count("matchings_enumerated", matchings.len());
    for m in &matchings {
        let s = restricted_difference_set(&a, m)?;
        if !is_convex(&s) {
            continue;
        }
        convex_matchings += 1;
        largest_matching = largest_matching.max(m.len());
        if s.len() != m.len() {
            report.fail(json!({ "claim": "matching differences are not distinct", "matching": m }));
            break;
        }
        match check_subset(n, &s) {
            Err(claim) => {
                report.fail(json!({ "claim": claim, "matching": m }));
                break;
            }
            Ok(profile) => {
                if has_four_term_run(&profile.indices_as_set()) {
                    report.fail(json!({
                        "claim": "matching-derived blocks: K(S) has four consecutive terms in progression",
                        "matching": m,
                    }));
                    break;
                }
            }
        }
    }
    report.count("convex_matchings", convex_matchings);
    report.count("largest_convex_matching", largest_matching);
    Ok(report)
}
