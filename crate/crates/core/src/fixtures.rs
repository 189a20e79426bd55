//! Rings given only by tables, for exercising code paths that cannot rely
//! on a constructor.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::ring::FiniteRing;

/// `GF(2)[u,v]/(u,v)²`: local with a radical that needs two generators.
/// Element `a + b·u + c·v` has index `a + 2b + 4c`.
pub fn square_zero_two_generator() -> Result<FiniteRing> {
    let n = 8usize;
    let digits = |x: usize| (x & 1, (x >> 1) & 1, (x >> 2) & 1);
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            let (a, b, c) = digits(x);
            let (d, e, f) = digits(y);
            add[x * n + y] = (x ^ y) as u32;
            let p = (a * d) | (((a * e) ^ (b * d)) << 1) | (((a * f) ^ (c * d)) << 2);
            mul[x * n + y] = p as u32;
        }
    }
    FiniteRing::from_tables("GF(2)[u,v]/(u,v)^2", add, mul, 0, 1)
}

/// The same ring on a carrier relabelled by a seeded random permutation.
pub fn shuffled(ring: &FiniteRing, seed: u64) -> Result<FiniteRing> {
    let mut perm: Vec<u32> = (0..ring.size() as u32).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    ring.to_table_ring(format!("shuffled({}, {seed})", ring.label()), &perm)
}
