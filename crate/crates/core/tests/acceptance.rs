//! Exit-gate checks. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use convexdiff::claims::{
    claim2_bound, verify_claim_2_1, verify_claim_2_2, verify_claims_3, verify_thm1_size, Report,
};
use convexdiff::constructions::{
    ceil_sqrt, glue_chain, squares, thm1_set, thm2_matching, thm2_required_size, thm3_set,
    thm4_matching,
};
use convexdiff::exact::{
    count_representations, difference_set, gen_convex_random, is_convex, max_representation,
    positive_differences, restricted_difference_set, restricted_sum_set, DifferenceFinder, PairOp,
};
use convexdiff::oracles::{
    lcs_convex, lcs_convex_bruteforce, max_convex_matching, max_weakly_convex_no4ap,
    BRUTEFORCE_GUARD, CM_GUARD, NO4AP_GUARD,
};
use convexdiff::{ExactScalar, RealSet};

/// Glued sizes at n = 1000, 2000, 10000 (strict parameters).
const GLUED_SIZE_GOLDEN: [(usize, usize); 3] = [(1000, 1756), (2000, 4921), (10_000, 80_812)];

/// Largest convex matching on the base-2n digit set for n = 4..=10.
const DIGIT_SET_CM_GOLDEN: [usize; 7] = [2, 2, 3, 3, 4, 4, 5];

/// Largest weakly convex subset of {1..n} with no four-term run, n = 1..=40.
const NO4AP_GOLDEN: [usize; 40] = [
    1, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7, 8, 8, 8, 8, 9, 9, 9, 9, 9, 10, 10, 10, 10, 10,
    11, 11, 11, 11, 11, 11, 12, 12, 12, 12,
];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Self {
            passed: true,
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            if self.passed {
                self.detail = what();
            }
            self.passed = false;
        }
    }

    fn note(mut self, text: String) -> Self {
        if self.passed {
            self.detail = text;
        }
        self
    }
}

fn report_ok(r: &convexdiff::Result<Report>) -> bool {
    matches!(r, Ok(rep) if rep.passed && rep.counterexample.is_none())
}

fn glued_sizes() -> Outcome {
    let mut out = Outcome::new();
    let mut sizes = Vec::new();
    for (n, golden) in GLUED_SIZE_GOLDEN {
        let (s, trace) = match glue_chain(n, true) {
            Ok(v) => v,
            Err(e) => {
                out.check(false, || format!("n={n}: glue failed: {e}"));
                continue;
            }
        };
        out.check(is_convex(&s), || format!("n={n}: glued set not convex"));
        let a = thm1_set(n, true).expect("strict parameters");
        let finder = DifferenceFinder::new(&a);
        let outside = s
            .iter()
            .find(|x| !finder.find(x).is_some_and(|(i, j)| &(&a[j] - &a[i]) == *x));
        out.check(outside.is_none(), || {
            format!("n={n}: {outside:?} not in A - A")
        });
        out.check(s.len() == golden, || {
            format!("n={n}: |S| = {} but regression value is {golden}", s.len())
        });
        let report = verify_thm1_size(n);
        out.check(report_ok(&report), || {
            format!("n={n}: size report failed: {report:?}")
        });
        if n == 10_000 {
            let bound = claim2_bound(n) * 9;
            out.check(bound == 25_173, || format!("bound arithmetic gave {bound}"));
            out.check(s.len() >= bound, || {
                format!("|S(10000)| = {} < {bound}", s.len())
            });
            out.check(trace.splices.len() == 10, || {
                "expected 10 splices at n=10000".into()
            });
        }
        sizes.push(s.len());
    }
    if let [s1000, s2000, _] = sizes[..] {
        // |S(2000)| ≥ 3.5 |S(1000)| in integers
        out.check(2 * s2000 >= 7 * s1000, || {
            format!(
                "quadratic trend: |S(2000)| = {s2000} < 3.5 x |S(1000)| = {}",
                3.5 * s1000 as f64
            )
        });
    }
    out.note(format!("sizes {sizes:?}"))
}

fn claims_one_and_two() -> Outcome {
    let mut out = Outcome::new();
    for n in [1000, 2000, 10_000] {
        let r = verify_claim_2_1(n);
        out.check(report_ok(&r), || format!("interleaving at n={n}: {r:?}"));
        let r = verify_claim_2_2(n);
        out.check(report_ok(&r), || {
            format!("exclusive counts at n={n}: {r:?}")
        });
    }
    out.note("n in {1000, 2000, 10000}".into())
}

fn nested_matching() -> Outcome {
    let mut out = Outcome::new();
    let sizes: Vec<usize> = (25..=500).filter(|&n| thm2_required_size(n) <= n).collect();
    let cases: Vec<(usize, u64)> = (0..200u64)
        .map(|s| (sizes[(s as usize * 37) % sizes.len()], s))
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|&(n, seed)| {
            let a = gen_convex_random(n, seed).unwrap();
            let m = match thm2_matching(&a) {
                Ok(m) => m,
                Err(e) => return Some(format!("n={n} seed={seed}: {e}")),
            };
            let k = ceil_sqrt(n);
            let diffs = restricted_difference_set(&a, &m).unwrap();
            let ok = m.len() == k && k * k >= n && diffs.len() == k && is_convex(&diffs);
            (!ok).then(|| format!("n={n} seed={seed}: |M| = {}", m.len()))
        })
        .collect();
    out.check(failures.is_empty(), || failures.join("; "));
    out.note(format!(
        "200/200 convex, sizes {}..={}",
        sizes[0],
        sizes[sizes.len() - 1]
    ))
}

fn digit_set_matchings() -> Outcome {
    let mut out = Outcome::new();
    let values: Vec<_> = (4..=10usize)
        .into_par_iter()
        .map(|n| (n, max_convex_matching(&thm3_set(n).unwrap(), CM_GUARD)))
        .collect();
    let mut got = Vec::new();
    for (n, r) in values {
        match r {
            Ok(r) => {
                out.check(r.exhaustive, || format!("n={n}: search not exhaustive"));
                out.check(r.value * r.value <= 9 * n, || {
                    format!("n={n}: value {} > 3 sqrt(n)", r.value)
                });
                got.push(r.value);
            }
            Err(e) => out.check(false, || format!("n={n}: {e}")),
        }
    }
    out.check(got == DIGIT_SET_CM_GOLDEN, || {
        format!("values {got:?} differ from {DIGIT_SET_CM_GOLDEN:?}")
    });
    for n in [4, 5] {
        let r = verify_claims_3(n, 10_000);
        let exhaustive = matches!(&r, Ok(rep) if rep.counts.get("exhaustive") == Some(&1));
        out.check(report_ok(&r) && exhaustive, || {
            format!("block claims at n={n}: {r:?}")
        });
    }
    out.note(format!("values {got:?} for n = 4..=10"))
}

fn difference_set_lower_bound() -> Outcome {
    let mut out = Outcome::new();
    let cases: Vec<(usize, Option<u64>)> = (5..=40)
        .flat_map(|n| std::iter::once((n, None)).chain((0..50).map(move |s| (n, Some(s)))))
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|&(n, seed)| {
            let a = match seed {
                None => squares(n),
                Some(s) => gen_convex_random(n, 1000 * n as u64 + s).unwrap(),
            };
            let r = lcs_convex(&difference_set(&a).unwrap()).unwrap();
            (r.value < n).then(|| format!("n={n} seed={seed:?}: {}", r.value))
        })
        .collect();
    out.check(failures.is_empty(), || failures.join("; "));
    out.note(format!("{} sets", cases.len()))
}

fn random_small_set(rng: &mut ChaCha8Rng) -> RealSet {
    let size = rng.gen_range(1..=12);
    let values = (0..size)
        .map(|_| {
            if rng.gen_bool(0.6) {
                ExactScalar::from(rng.gen_range(-15i64..=15))
            } else {
                ExactScalar::ratio(rng.gen_range(-120i64..=120), rng.gen_range(1i64..=7))
            }
        })
        .collect();
    RealSet::from_unsorted(values)
}

fn oracle_agreement() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let sets: Vec<RealSet> = (0..500).map(|_| random_small_set(&mut rng)).collect();
    let disagreements: Vec<String> = sets
        .par_iter()
        .filter_map(|b| {
            let fast = lcs_convex(b).unwrap();
            let slow = lcs_convex_bruteforce(b, BRUTEFORCE_GUARD).unwrap();
            (fast.value != slow.value).then(|| format!("{b:?}: {} vs {}", fast.value, slow.value))
        })
        .collect();
    out.check(disagreements.is_empty(), || disagreements.join("; "));
    out.note("500/500 agree".into())
}

fn offset_sum_matching() -> Outcome {
    let mut out = Outcome::new();
    let failures: Vec<String> = (0..200u64)
        .into_par_iter()
        .filter_map(|seed| {
            let n = 2 + (seed as usize * 131) % 300;
            let a = gen_convex_random(n, seed).unwrap();
            let m = thm4_matching(&a).unwrap();
            let sums = restricted_sum_set(&a, &m).unwrap();
            let ok = m.len() == n / 2 && sums.len() == n / 2 && is_convex(&sums);
            (!ok).then(|| format!("n={n} seed={seed}"))
        })
        .collect();
    out.check(failures.is_empty(), || failures.join("; "));
    out.note("200/200 convex, sizes 2..=301".into())
}

fn no_four_term_runs() -> Outcome {
    let mut out = Outcome::new();
    let values: Vec<_> = (1..=40usize)
        .into_par_iter()
        .map(|n| max_weakly_convex_no4ap(n, NO4AP_GUARD))
        .collect();
    out.check(values.iter().all(|r| r.exhaustive), || {
        "a run was not exhaustive".into()
    });
    let v: Vec<usize> = values.iter().map(|r| r.value).collect();
    out.check(v.windows(2).all(|w| w[0] <= w[1]), || {
        format!("not monotone: {v:?}")
    });
    out.check(v[3] == 3, || format!("v(4) = {}", v[3]));
    out.check(v[39] <= 2 * v[9] + 2, || {
        format!("v(40) = {} > 2 v(10) + 2 = {}", v[39], 2 * v[9] + 2)
    });
    out.check(v == NO4AP_GOLDEN, || {
        format!("values {v:?} differ from regression")
    });
    out.note(format!("v(10) = {}, v(40) = {}", v[9], v[39]))
}

fn representation_counts() -> Outcome {
    let mut out = Outcome::new();
    let mut sum_maxima = Vec::new();
    for n in 2..=10 {
        let a = thm3_set(n).unwrap();
        for x in positive_differences(&a).iter() {
            for y in [x.clone(), -x] {
                let c = count_representations(&a, &y, PairOp::Difference);
                out.check(c == 1, || format!("n={n}: {y} has {c} representations"));
            }
        }
        let (_, count) = max_representation(&a, PairOp::Sum).unwrap();
        sum_maxima.push((n, count));
    }
    out.note(format!(
        "max sum representations (n, count): {sum_maxima:?}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "glued difference blocks: convexity, membership, size",
            glued_sizes,
        ),
        (
            "block interleaving and exclusive counts",
            claims_one_and_two,
        ),
        (
            "nested difference matching on random convex sets",
            nested_matching,
        ),
        (
            "base-2n digit set matchings and block claims",
            digit_set_matchings,
        ),
        (
            "convex subset of A - A at least |A|",
            difference_set_lower_bound,
        ),
        ("dynamic program agrees with brute force", oracle_agreement),
        (
            "offset sum matching on random convex sets",
            offset_sum_matching,
        ),
        (
            "weakly convex sets without four-term runs",
            no_four_term_runs,
        ),
        (
            "representation counts on the digit set",
            representation_counts,
        ),
    ];
    let mut failed = 0;
    for (index, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.passed);
        println!(
            "[{status}] criterion {}: {name} ({:.1}s) {}",
            index + 1,
            start.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
