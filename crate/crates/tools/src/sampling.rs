//! Seeded samplers shared by the verification suites and the acceptance run.
//!
//! Sample `i` of a run with seed `s` draws from ChaCha8 seeded with `s` on
//! stream `i`, so results do not depend on thread scheduling.

use std::f64::consts::TAU;

use concave_fs_core::bodies::SchurPair;
use concave_fs_core::disk_maps::{blaschke2_dieudonne, ConjugatedMap, OriginMap};
use concave_fs_core::quad_max::QuadCoeffs;
use concave_fs_core::{PoleParam, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Uniform by area in the disk of radius `r_max`.
pub fn in_disk(rng: &mut impl Rng, r_max: f64) -> C64 {
    C64::from_polar(r_max * rng.random::<f64>().sqrt(), rng.random_range(0.0..TAU))
}

pub fn on_circle(rng: &mut impl Rng) -> C64 {
    C64::from_polar(1.0, rng.random_range(0.0..TAU))
}

pub fn triple(rng: &mut impl Rng, half_width: f64) -> QuadCoeffs {
    let mut x = || rng.random_range(-half_width..=half_width);
    QuadCoeffs { a: x(), b: x(), c: x() }
}

/// `P` uniform on `(2, hi]`.
pub fn big_p(rng: &mut impl Rng, hi: f64) -> PoleParam {
    let v = hi - rng.random::<f64>() * (hi - 2.0);
    PoleParam::from_big_p(v.max(2.0 + 1e-9)).expect("P > 2")
}

pub fn pole_p(rng: &mut impl Rng, lo: f64, hi: f64) -> PoleParam {
    PoleParam::from_p(rng.random_range(lo..hi)).expect("0 < p < 1")
}

pub fn schur_pair(rng: &mut impl Rng) -> SchurPair {
    SchurPair {
        sigma0: in_disk(rng, 1.0),
        sigma1: in_disk(rng, 1.0),
    }
}

/// `T_p ∘ ψ ∘ T_p` with `ψ` a rotation or a degree-2 Blaschke product
/// fixing 0 whose data stay inside `|z₀| <= 0.9`.
pub fn conjugated_map(rng: &mut impl Rng, pp: PoleParam, blaschke: bool) -> ConjugatedMap {
    let psi = if blaschke {
        let z0 = C64::from_polar(rng.random_range(0.1..0.9), rng.random_range(0.0..TAU));
        let w0 = in_disk(rng, 0.99 * z0.norm());
        OriginMap::Blaschke(blaschke2_dieudonne(z0, w0, on_circle(rng)).expect("valid Dieudonne data"))
    } else {
        OriginMap::Rotation(on_circle(rng))
    };
    ConjugatedMap::new(pp.p(), psi).expect("0 < p < 1")
}
