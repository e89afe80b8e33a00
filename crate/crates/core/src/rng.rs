//! Seeded randomness. Every randomized routine takes a `u64` seed and derives
//! per-trial seeds with [`sub_seed`], so results do not depend on scheduling.

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// splitmix64 over `seed` and `index`.
pub fn sub_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A uniformly sized random subset of `pool` with between `min` and `max`
/// elements (clamped to the pool size), sorted.
pub fn subset(rng: &mut Rng, pool: &[usize], min: usize, max: usize) -> Vec<usize> {
    let hi = max.min(pool.len());
    let lo = min.min(hi);
    let k = rng.random_range(lo..=hi);
    let mut v = pool.to_vec();
    v.shuffle(rng);
    v.truncate(k);
    v.sort_unstable();
    v
}

/// Splits off the first `k` entries of a shuffled pool.
pub fn take(pool: &mut Vec<usize>, k: usize) -> Vec<usize> {
    let k = k.min(pool.len());
    let mut out: Vec<usize> = pool.drain(..k).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_seeds_differ_and_repeat() {
        assert_eq!(sub_seed(7, 3), sub_seed(7, 3));
        assert_ne!(sub_seed(7, 3), sub_seed(7, 4));
        assert_ne!(sub_seed(7, 3), sub_seed(8, 3));
    }

    #[test]
    fn subset_respects_bounds() {
        let mut r = rng(1);
        let pool: Vec<usize> = (0..10).collect();
        for _ in 0..100 {
            let s = subset(&mut r, &pool, 1, 3);
            assert!((1..=3).contains(&s.len()));
            assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(subset(&mut r, &[], 1, 3).is_empty());
    }
}
