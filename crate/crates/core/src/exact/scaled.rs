use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::ExactScalar;

/// Integer values that support the one affine operation the search oracles
/// need, `2·x − y`, exactly.
pub trait ScaledInts: Ord + Clone + Send + Sync {
    fn reflect(&self, other: &Self) -> Self;
}

impl ScaledInts for i128 {
    fn reflect(&self, other: &Self) -> Self {
        2 * self - other
    }
}

impl ScaledInts for BigInt {
    fn reflect(&self, other: &Self) -> Self {
        self + self - other
    }
}

/// A sequence of rationals multiplied through by the lcm of their
/// denominators. Scaling by a positive constant preserves order and every
/// gap comparison, so convexity questions can be answered on integers.
#[derive(Debug, Clone)]
pub enum ScaledValues {
    /// Every magnitude is below 2^125, so `2·x − y` cannot overflow.
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

impl ScaledValues {
    pub fn new(values: &[ExactScalar]) -> Self {
        let lcm = values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<BigInt> = values
            .iter()
            .map(|v| v.numer() * (&lcm / v.denom()))
            .collect();
        let bound = BigInt::one() << 125;
        if ints.iter().all(|v| v.abs() < bound) {
            ScaledValues::Small(ints.iter().map(|v| v.to_i128().unwrap()).collect())
        } else {
            ScaledValues::Big(ints)
        }
    }
}
