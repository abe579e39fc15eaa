//! Numerics for holomorphic self-maps of the unit disk with a prescribed
//! fixed point `p`, and for the class of normalized concave functions with
//! a pole at `p`.
//!
//! Everything is parameterized by [`PoleParam`], the pair `(p, P)` with
//! `P = p + 1/p`. The crate covers:
//!
//! - the first two coefficient bodies of maps fixing `p` ([`bodies`]),
//! - the closed-form maximum of `|a + bz + cz²| + 1 - |z|²` over the closed
//!   disk and a brute-force oracle for it ([`quad_max`]),
//! - disk automorphisms, degree-2 Blaschke products and truncated power
//!   series ([`disk_maps`], [`series`]),
//! - the integral representation of concave functions ([`concave`]),
//! - the sharp bound of the Fekete-Szego functional `|a₃ - μa₂²|`
//!   ([`fekete_szego`]),
//! - the variability region of `a₃ - a₂²` ([`regions`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
// `!(x < y)` is deliberate: it rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod bodies;
pub mod concave;
pub mod disk_maps;
mod error;
pub mod fekete_szego;
pub mod grid;
pub mod numeric;
pub mod quad_max;
pub mod regions;
pub mod series;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use numeric::PoleParam;
pub use series::PowerSeries;
