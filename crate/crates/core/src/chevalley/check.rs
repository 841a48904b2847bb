//! Seeded spot checks of the group law, for instances too large to sweep.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroupElement, GroupTable};
use crate::error::Result;

fn random_element(t: &GroupTable, rng: &mut ChaCha8Rng) -> GroupElement {
    t.element(rng.gen_range(0..t.order()))
}

/// `(ab)c = a(bc)` on `samples` triples drawn with the given seed. Returns
/// the first failing triple.
pub fn sample_associativity(
    t: &GroupTable,
    samples: u64,
    seed: u64,
) -> std::result::Result<(), [GroupElement; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let [a, b, c] = [(); 3].map(|_| random_element(t, &mut rng));
        if t.mul(&t.mul(&a, &b), &c) != t.mul(&a, &t.mul(&b, &c)) {
            return Err([a, b, c]);
        }
    }
    Ok(())
}

/// Collection against the SL₄(q²) matrix model on `samples` seeded pairs.
/// Unitary family only.
pub fn sample_oracle(t: &GroupTable, samples: u64, seed: u64) -> Result<std::result::Result<(), [GroupElement; 2]>> {
    let oracle = t.matrix_oracle()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (a, b) = (random_element(t, &mut rng), random_element(t, &mut rng));
        if !oracle.check_pair(&a, &b) {
            return Ok(Err([a, b]));
        }
    }
    Ok(Ok(()))
}
