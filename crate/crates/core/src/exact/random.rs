use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ExactScalar, RealSet};
use crate::{Error, Result};

const DENOMINATORS: [i64; 6] = [1, 2, 3, 4, 5, 7];

/// A deterministic pseudo-random convex set of `n` rationals.
///
/// The set is the running sum of a strictly increasing sequence of positive
/// gaps. Increments are drawn with small denominators, and a quarter of them
/// are tiny (`1/420`) so that some outputs are only barely convex.
pub fn gen_convex_random(n: usize, seed: u64) -> Result<RealSet> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = ExactScalar::from(rng.gen_range(-50..=50));
    let mut gap = random_step(&mut rng);
    let mut out = Vec::with_capacity(n);
    out.push(x.clone());
    for _ in 1..n {
        x = &x + &gap;
        out.push(x.clone());
        gap = &gap + &random_step(&mut rng);
    }
    Ok(RealSet::from_sorted_unchecked(out))
}

fn random_step(rng: &mut ChaCha8Rng) -> ExactScalar {
    if rng.gen_bool(0.25) {
        ExactScalar::ratio(1, 420)
    } else {
        let den = DENOMINATORS[rng.gen_range(0..DENOMINATORS.len())];
        ExactScalar::ratio(rng.gen_range(1..=12), den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::is_convex;

    #[test]
    fn singleton() {
        assert_eq!(gen_convex_random(1, 99).unwrap().len(), 1);
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            gen_convex_random(40, 3).unwrap(),
            gen_convex_random(40, 3).unwrap()
        );
        assert_ne!(
            gen_convex_random(40, 3).unwrap(),
            gen_convex_random(40, 4).unwrap()
        );
    }

    #[test]
    fn convex_output() {
        let a = gen_convex_random(50, 7).unwrap();
        assert_eq!(a.len(), 50);
        assert!(is_convex(&a));
    }

    #[test]
    fn zero_rejected() {
        assert!(matches!(
            gen_convex_random(0, 1),
            Err(Error::InvalidInput(_))
        ));
    }
}
