#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schur_core::algebra::{q, Q};
use schur_core::schur::{dual_basis, schur_basis};
use schur_core::{AmbientElement, Partition};

pub fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn mono(l: &[usize], n: usize, cols: &[&[usize]]) -> AmbientElement {
    AmbientElement::monomial(&p(l), n, false, cols, q(1)).unwrap()
}

pub fn dual_mono(l: &[usize], n: usize, cols: &[&[usize]]) -> AmbientElement {
    AmbientElement::monomial(&p(l), n, true, cols, q(1)).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng) -> Q {
    q(rng.gen_range(-3..=3))
}

/// Nonzero integer combination of a few basis vectors of `S_λ ℂⁿ` (or its dual).
pub fn random_element(lambda: &Partition, n: usize, dual: bool, rng: &mut ChaCha8Rng) -> AmbientElement {
    let basis = if dual { dual_basis(lambda, n) } else { schur_basis(lambda, n) };
    loop {
        let mut out = AmbientElement::zero(lambda.clone(), n, dual);
        for _ in 0..3 {
            let b = &basis[rng.gen_range(0..basis.len())];
            out = out.plus(&b.scaled(&small(rng)));
        }
        if !out.is_zero() {
            return out;
        }
    }
}
