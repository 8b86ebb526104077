use super::{OracleResult, Witness};
use crate::exact::{is_weakly_convex, ExactScalar, RealSet};

/// Largest `n` searched exhaustively by default.
pub const NO4AP_GUARD: usize = 40;

/// True if some four consecutive elements form an arithmetic progression.
pub fn has_four_term_run(s: &[ExactScalar]) -> bool {
    s.windows(4).any(|w| {
        let g = &w[1] - &w[0];
        &w[2] - &w[1] == g && &w[3] - &w[2] == g
    })
}

/// Largest `K ⊆ {1, …, n}` that is weakly convex and has no four
/// consecutive elements in arithmetic progression.
///
/// In gap terms: gaps are nondecreasing and no gap value repeats three
/// times in a row. Up to `guard` the search is an exhaustive memoized
/// recursion over `(last element, last gap, repeat count)`. Beyond it the
/// greedy gap sequence `1, 1, 2, 2, 3, 3, …` from 1 is returned as a
/// best-effort answer with `exhaustive = false`.
pub fn max_weakly_convex_no4ap(n: usize, guard: usize) -> OracleResult {
    let elements = if n == 0 {
        Vec::new()
    } else if n <= guard {
        exhaustive(n)
    } else {
        greedy(n)
    };
    let witness = RealSet::from_ints(elements.iter().map(|&x| x as i64)).expect("increasing");
    assert!(is_weakly_convex(&witness) && !has_four_term_run(&witness));
    OracleResult {
        value: witness.len(),
        exhaustive: n <= guard,
        witness: Witness::Set(witness),
    }
}

fn greedy(n: usize) -> Vec<usize> {
    let mut out = vec![1usize];
    let mut step = 0usize;
    loop {
        let gap = step / 2 + 1;
        let next = out[out.len() - 1] + gap;
        if next > n {
            return out;
        }
        out.push(next);
        step += 1;
    }
}

struct Memo {
    n: usize,
    // (x, gap, repeats) -> most elements that can still follow x
    table: Vec<Option<usize>>,
}

impl Memo {
    fn key(&self, x: usize, gap: usize, repeats: usize) -> usize {
        (x * (self.n + 1) + gap) * 3 + repeats
    }

    /// Admissible next gaps after a run of `repeats` copies of `gap`.
    fn allowed(gap: usize, repeats: usize, next_gap: usize) -> Option<usize> {
        match next_gap.cmp(&gap) {
            std::cmp::Ordering::Less => None,
            std::cmp::Ordering::Equal if repeats >= 2 => None,
            std::cmp::Ordering::Equal => Some(repeats + 1),
            std::cmp::Ordering::Greater => Some(1),
        }
    }

    fn after(&mut self, x: usize, gap: usize, repeats: usize) -> usize {
        let key = self.key(x, gap, repeats);
        if let Some(v) = self.table[key] {
            return v;
        }
        let mut best = 0;
        for next_gap in gap.max(1)..=self.n - x {
            if let Some(r) = Self::allowed(gap, repeats, next_gap) {
                best = best.max(1 + self.after(x + next_gap, next_gap, r));
            }
        }
        self.table[key] = Some(best);
        best
    }
}

fn exhaustive(n: usize) -> Vec<usize> {
    let mut memo = Memo {
        n,
        table: vec![None; (n + 1) * (n + 1) * 3],
    };
    let (mut x, value) = (1..=n)
        .map(|x| (x, memo.after(x, 0, 0)))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .expect("n ≥ 1");
    let mut out = vec![x];
    let (mut gap, mut repeats, mut remaining) = (0, 0, value);
    while remaining > 0 {
        let (next_gap, r) = (gap.max(1)..=n - x)
            .filter_map(|g| Memo::allowed(gap, repeats, g).map(|r| (g, r)))
            .find(|&(g, r)| memo.after(x + g, g, r) + 1 == remaining)
            .expect("memo is consistent");
        x += next_gap;
        out.push(x);
        gap = next_gap;
        repeats = r;
        remaining -= 1;
    }
    out
}
