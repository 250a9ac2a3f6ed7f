//! Seeded workload builders shared by the criterion benches, so that
//! timings are comparable across runs and machines.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use k3nef_core::bridgeland::ChernChar;
use k3nef_core::cone::RatCone;
use k3nef_core::picard::Div;
use k3nef_core::ratio::{frac, rat};

/// Deterministic batch of pointed cones with small integer rays in the
/// given dimension. Non-pointed draws are discarded, so every returned
/// cone exercises the full canonicalization and duality paths.
pub fn seeded_pointed_cones(seed: u64, dim: usize, count: usize) -> Vec<RatCone> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let nrays = rng.gen_range(dim..=dim + 2);
        let rays: Vec<Vec<i64>> = (0..nrays)
            .map(|_| (0..dim).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        let refs: Vec<&[i64]> = rays.iter().map(|r| r.as_slice()).collect();
        if let Ok(c) = RatCone::from_int_rays(dim, &refs) {
            if c.is_pointed() && !c.rays().is_empty() {
                out.push(c);
            }
        }
    }
    out
}

/// Deterministic batch of rank-positive Chern characters with small
/// rational data (half-integral ch2, as on a K3 with a B-field).
pub fn seeded_characters(seed: u64, count: usize) -> Vec<ChernChar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            ChernChar::new(
                rat(rng.gen_range(1..=3i64)),
                Div::from_ints(rng.gen_range(-4..=4), rng.gen_range(-4..=4)),
                frac(rng.gen_range(-12..=12i64), 2),
            )
        })
        .collect()
}
