#![allow(dead_code)]

use concave_fs_core::bodies::SchurPair;
use concave_fs_core::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform by area in the closed disk of radius `r_max`.
pub fn in_disk(rng: &mut impl Rng, r_max: f64) -> C64 {
    let r = r_max * rng.random::<f64>().sqrt();
    C64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
}

pub fn on_circle(rng: &mut impl Rng) -> C64 {
    C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
}

pub fn schur_pair(rng: &mut impl Rng) -> SchurPair {
    SchurPair::new(in_disk(rng, 1.0), in_disk(rng, 1.0)).unwrap()
}

pub fn big_p(rng: &mut impl Rng, hi: f64) -> f64 {
    rng.random_range(2.0..hi).max(2.0 + 1e-6)
}
