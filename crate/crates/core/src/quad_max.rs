//! `Y(a, b, c) = max_{|z| <= 1} |a + bz + cz²| + 1 - |z|²` for real `a, b, c`.

use crate::grid::disk_max;
use crate::numeric::{modulus, sqrt};
use crate::{Error, Result, C64};

/// Real coefficients of the quadratic `a + bz + cz²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl QuadCoeffs {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::Domain("quadratic coefficients must be finite"));
        }
        Ok(QuadCoeffs { a, b, c })
    }

    /// `|a + bz + cz²| + 1 - |z|²`
    #[inline]
    pub fn objective(&self, z: C64) -> f64 {
        let q = (z * self.c + self.b) * z + self.a;
        modulus(q) + 1.0 - z.norm_sqr()
    }
}

/// Which case of the closed form produced `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YBranch {
    /// `ac >= 0`, `|b| >= 2(1-|c|)`: `|a| + |b| + |c|`.
    SumAll,
    /// `ac >= 0`, `|b| < 2(1-|c|)`: `1 + |a| + b²/(4(1-|c|))`.
    PlusParabola,
    /// `ac < 0`: `1 - |a| + b²/(4(1-|c|))`.
    MinusParabola,
    /// `ac < 0`: `1 + |a| + b²/(4(1+|c|))`.
    PlusParabolaNeg,
    /// `R = |a| + |b| - |c|`.
    R1,
    /// `R = -|a| + |b| + |c|`.
    R2,
    /// `R = (|c| + |a|)·sqrt(1 - b²/(4ac))`.
    R3,
}

/// Closed-form `Y(a, b, c)` and the case that fired. Case predicates are
/// exact comparisons; at a boundary the earlier-listed case wins.
pub fn y_closed(q: QuadCoeffs) -> (f64, YBranch) {
    let QuadCoeffs { a, b, c } = q;
    let (aa, ab, ac) = (a.abs(), b.abs(), c.abs());
    let b2 = b * b;
    if a * c >= 0.0 {
        if ab >= 2.0 * (1.0 - ac) {
            (aa + ab + ac, YBranch::SumAll)
        } else {
            (1.0 + aa + b2 / (4.0 * (1.0 - ac)), YBranch::PlusParabola)
        }
    } else {
        // ac < 0, so c != 0.
        let k = -4.0 * a * c * (1.0 / (c * c) - 1.0);
        if k <= b2 && ab < 2.0 * (1.0 - ac) {
            (1.0 - aa + b2 / (4.0 * (1.0 - ac)), YBranch::MinusParabola)
        } else if b2 < k.min(4.0 * (1.0 + ac) * (1.0 + ac)) {
            (1.0 + aa + b2 / (4.0 * (1.0 + ac)), YBranch::PlusParabolaNeg)
        } else {
            r_unchecked(aa, ab, ac, a * c, b2)
        }
    }
}

/// The `R(a, b, c)` tail of the `ac < 0` case.
pub fn r_closed(q: QuadCoeffs) -> Result<(f64, YBranch)> {
    let QuadCoeffs { a, b, c } = q;
    if !(a * c < 0.0) {
        return Err(Error::Domain("R(a, b, c) requires ac < 0"));
    }
    Ok(r_unchecked(a.abs(), b.abs(), c.abs(), a * c, b * b))
}

fn r_unchecked(aa: f64, ab: f64, ac: f64, a_times_c: f64, b2: f64) -> (f64, YBranch) {
    if ac * (ab + 4.0 * aa) <= aa * ab {
        (aa + ab - ac, YBranch::R1)
    } else if aa * ab <= ac * (ab - 4.0 * aa) {
        (-aa + ab + ac, YBranch::R2)
    } else {
        ((ac + aa) * sqrt(1.0 - b2 / (4.0 * a_times_c)), YBranch::R3)
    }
}

/// Brute-force `Y` over an `n_radial × n_angular` polar grid plus one
/// golden-section refinement.
pub fn y_oracle(q: QuadCoeffs, n_radial: usize, n_angular: usize) -> f64 {
    assert!(n_radial >= 2 && n_angular >= 8, "grid too small for y_oracle");
    disk_max(|z| q.objective(z), n_radial, n_angular).value
}
