//! Exact rational arithmetic, the canonical set and matching types, and the
//! operators built on them.

mod matching;
mod ops;
mod random;
mod scalar;
mod scaled;
mod set;

pub use matching::Matching;
pub use ops::{
    count_representations, difference_set, find_difference, first_convexity_violation, is_convex,
    is_weakly_convex, max_representation, positive_differences, restricted_difference_set,
    restricted_sum_set, sum_set, DifferenceFinder, PairOp,
};
pub use random::gen_convex_random;
pub use scalar::ExactScalar;
pub use scaled::{ScaledInts, ScaledValues};
pub use set::RealSet;
