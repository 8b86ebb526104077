use serde_json::json;

use super::Report;
use crate::constructions::{glue::glue_chain_with, Thm1Params};
use crate::exact::{is_convex, DifferenceFinder, ExactScalar};
use crate::Result;

/// Per-block lower bound `⌈151n/540⌉` on the elements of `D_k` that no
/// neighbouring block reaches.
pub fn claim2_bound(n: usize) -> usize {
    (151 * n).div_ceil(540)
}

fn base_report(id: &str, p: &Thm1Params) -> Report {
    let mut r = Report::new(id);
    r.param("n", p.n);
    r.param("k_min", p.k_min);
    r.param("k_max", p.k_max);
    r.param("i_max", p.i_max);
    r
}

/// For each `k ∈ [k_min, k_max − 1]`, looks for `1 ≤ i, j < i_max` with
/// `d_i^{(k+1)} ≤ d_j^{(k)} < d_{j+1}^{(k)} ≤ d_{i+1}^{(k+1)}` and records the
/// one with the smallest `i`.
pub fn verify_claim_2_1(n: usize) -> Result<Report> {
    let p = Thm1Params::new(n, false)?;
    let mut report = base_report("claim21", &p);
    for k in p.k_min..p.k_max {
        let lower = p.block(k)?.values;
        let upper = p.block(k + 1)?.values;
        let found = (0..upper.len() - 1).find_map(|i| {
            // first j with d_j^{(k)} ≥ d_i^{(k+1)}; later j only push
            // d_{j+1}^{(k)} further right
            let j = lower.partition_point(|x| x < &upper[i]);
            (j + 1 < lower.len() && lower[j + 1] <= upper[i + 1]).then_some((i + 1, j + 1))
        });
        match found {
            Some((i, j)) => {
                report.count(format!("i@k={k}"), i);
                report.count(format!("j@k={k}"), j);
            }
            None => report.fail(json!({ "k": k, "reason": "no interleaving pair" })),
        }
    }
    report.count("blocks_checked", p.k_max - p.k_min);
    Ok(report)
}

/// For each `k ∈ [k_min, k_max]`, counts `D_k ∩ (d_max^{(k−1)}, d_min^{(k+1)})`
/// exactly (both ends open) and requires at least `⌈151n/540⌉`. The
/// neighbouring endpoints come from the closed form, which is defined for
/// every `k`.
pub fn verify_claim_2_2(n: usize) -> Result<Report> {
    let p = Thm1Params::new(n, false)?;
    let mut report = base_report("claim22", &p);
    let bound = claim2_bound(n);
    report.param("bound", bound);
    for k in p.k_min..=p.k_max {
        let block = p.block(k)?.values;
        let count = exclusive_count(&p, k, &block);
        report.count(format!("count@k={k}"), count);
        if count < bound {
            report.fail(json!({ "k": k, "count": count, "bound": bound }));
        }
    }
    Ok(report)
}

fn exclusive_window(p: &Thm1Params, k: usize) -> (ExactScalar, ExactScalar) {
    (p.block_max(k - 1), p.block_min(k + 1))
}

fn exclusive_count(p: &Thm1Params, k: usize, values: &[ExactScalar]) -> usize {
    let (lo, hi) = exclusive_window(p, k);
    values.iter().filter(|x| &lo < *x && *x < &hi).count()
}

/// Runs the gluing, re-checks convexity and membership in `A − A` element by
/// element, and compares `|S|` with both `⌈151n/540⌉·(k_max − k_min − 1)` and
/// `⌈n²/4000⌉`.
pub fn verify_thm1_size(n: usize) -> Result<Report> {
    let p = Thm1Params::new(n, false)?;
    let mut report = base_report("thm1size", &p);
    let a = p.set();
    let (s, trace) = glue_chain_with(&p)?;
    report.count("size", s.len());
    report.count("splices", trace.splices.len());

    if !is_convex(&s) {
        report.fail(json!({ "reason": "glued set is not convex" }));
    }
    let finder = DifferenceFinder::new(&a);
    for x in s.iter() {
        let ok = finder
            .find(x)
            .is_some_and(|(i, j)| i < j && &(&a[j] - &a[i]) == x);
        if !ok {
            report.fail(json!({ "reason": "element outside A - A", "element": x }));
            break;
        }
    }

    for k in p.k_min..=p.k_max {
        let block = p.block(k)?.values;
        let (lo, hi) = exclusive_window(&p, k);
        let survivors = s.iter().filter(|x| block.contains(x)).count();
        let exclusive = s
            .iter()
            .filter(|x| &lo < *x && *x < &hi && block.contains(x))
            .count();
        report.count(format!("survivors@k={k}"), survivors);
        report.count(format!("exclusive@k={k}"), exclusive);
        if survivors == 0 {
            report.fail(json!({ "reason": "block lost entirely", "k": k }));
        }
    }

    let interior = (p.k_max - p.k_min).saturating_sub(1);
    let proof_bound = claim2_bound(n) * interior;
    let quadratic_bound = (n * n).div_ceil(4000);
    report.count("proof_bound", proof_bound);
    report.count("quadratic_bound", quadratic_bound);
    if s.len() < proof_bound || s.len() < quadratic_bound {
        report.fail(json!({
            "reason": "glued set too small",
            "size": s.len(),
            "proof_bound": proof_bound,
            "quadratic_bound": quadratic_bound,
        }));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(claim2_bound(10_000), 2797);
        assert_eq!(claim2_bound(1000), 280);
        assert_eq!(claim2_bound(2000), 560);
    }

    #[test]
    fn claim1_small() {
        let r = verify_claim_2_1(1000).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.counts.contains_key("i@k=9"));
        assert!(r.counterexample.is_none());
    }

    #[test]
    fn claim2_counts_bounded_by_block_size() {
        let r = verify_claim_2_2(1000).unwrap();
        for (key, &v) in &r.counts {
            assert!(key.starts_with("count@"));
            assert!(v <= 990);
        }
    }

    #[test]
    fn thm1_size_small() {
        let r = verify_thm1_size(1000).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.counts["size"] >= 250);
    }

    #[test]
    fn every_block_keeps_its_exclusive_part() {
        for n in [1000, 2000] {
            let r = verify_thm1_size(n).unwrap();
            let p = Thm1Params::new(n, true).unwrap();
            for k in p.k_min..=p.k_max {
                let survivors = r.counts[&format!("survivors@k={k}")] as usize;
                let exclusive = r.counts[&format!("exclusive@k={k}")] as usize;
                let lost = p.i_max - survivors;
                assert!(survivors > 0);
                assert!(exclusive + 2 * lost >= claim2_bound(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn invalid_n_is_an_error() {
        assert!(verify_claim_2_1(50).is_err());
    }
}
