use crate::exact::{ExactScalar, RealSet};

/// Lexicographic stream of the convex subsets of `b` with at least three
/// elements, produced by [`enumerate_convex_subsets`].
pub struct ConvexSubsets<'a> {
    b: &'a [ExactScalar],
    size_cap: usize,
    count_cap: usize,
    emitted: usize,
    path: Vec<usize>,
    // cursors[d] is the next candidate for position d of the path
    cursors: Vec<usize>,
    truncated: bool,
    done: bool,
}

impl ConvexSubsets<'_> {
    /// True once the stream stopped because `count_cap` was reached while
    /// more subsets remained.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    fn emit(&self) -> RealSet {
        RealSet::from_sorted_unchecked(self.path.iter().map(|&i| self.b[i].clone()).collect())
    }
}

impl Iterator for ConvexSubsets<'_> {
    type Item = RealSet;

    fn next(&mut self) -> Option<RealSet> {
        if self.done {
            return None;
        }
        loop {
            let d = self.path.len();
            let extension = if d < self.size_cap {
                let start = self.cursors[d];
                if d >= 2 {
                    // every t with b[t] > 2·b[last] − b[prev] extends convexly
                    let threshold = self.b[self.path[d - 1]].reflect(&self.b[self.path[d - 2]]);
                    let first = self.b.partition_point(|x| x <= &threshold);
                    Some(start.max(first)).filter(|&t| t < self.b.len())
                } else {
                    Some(start).filter(|&t| t < self.b.len())
                }
            } else {
                None
            };
            match extension {
                Some(t) => {
                    self.cursors[d] = t + 1;
                    self.path.push(t);
                    self.cursors.push(t + 1);
                    if self.path.len() >= 3 {
                        if self.emitted == self.count_cap {
                            self.truncated = true;
                            self.done = true;
                            return None;
                        }
                        self.emitted += 1;
                        return Some(self.emit());
                    }
                }
                None => {
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    self.path.pop();
                    self.cursors.pop();
                }
            }
        }
    }
}

/// Convex subsets of `b` of size `3..=size_cap`, in lexicographic order of
/// their elements, stopping after `count_cap` of them.
pub fn enumerate_convex_subsets(
    b: &RealSet,
    size_cap: usize,
    count_cap: usize,
) -> ConvexSubsets<'_> {
    ConvexSubsets {
        b,
        size_cap,
        count_cap,
        emitted: 0,
        path: Vec::new(),
        cursors: vec![0],
        truncated: false,
        done: false,
    }
}
