//! The extremal family `f_ζ`, the region `Ω_p = -P⁻²h(D̄)` with
//! `h(σ) = 1 - tσ + σ²`, `t = P² - 2`, and sampling of the variability
//! region `W_p` of `a₃ - a₂²`.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::bodies::SchurPair;
use crate::concave::lambda_mu_from_sigma;
use crate::disk_maps::t_a;
use crate::numeric::{modulus, sqrt};
use crate::series::PowerSeries;
use crate::{Error, PoleParam, Result, C64};

const ONE: C64 = C64::new(1.0, 0.0);
const POLE_EPS: f64 = 1e-15;

/// `h(σ) = 1 - tσ + σ²` with `t = P² - 2 > 2`; univalent on the closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HQuad {
    pub t: f64,
}

impl HQuad {
    pub fn new(pp: PoleParam) -> Self {
        HQuad {
            t: pp.big_p() * pp.big_p() - 2.0,
        }
    }

    #[inline]
    pub fn eval(&self, s: C64) -> C64 {
        (s - self.t) * s + 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionTag {
    OmegaBoundary,
    WpCloud,
    Cardioid,
    UnitCircle,
}

impl RegionTag {
    pub fn name(self) -> &'static str {
        match self {
            RegionTag::OmegaBoundary => "omega_boundary",
            RegionTag::WpCloud => "wp_cloud",
            RegionTag::Cardioid => "cardioid",
            RegionTag::UnitCircle => "unit_circle",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            RegionTag::OmegaBoundary,
            RegionTag::WpCloud,
            RegionTag::Cardioid,
            RegionTag::UnitCircle,
        ]
        .into_iter()
        .find(|t| t.name() == name)
    }

    /// Boundary traces are ordered curves; clouds are unordered.
    pub fn is_curve(self) -> bool {
        !matches!(self, RegionTag::WpCloud)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionSample {
    pub points: Vec<C64>,
    pub tag: RegionTag,
}

/// Koebe function `K(z) = z/(1 - z)²`.
pub fn koebe(z: C64) -> C64 {
    let d = ONE - z;
    z / (d * d)
}

/// `Aₙ(ζ) = (1 - p²ⁿζ)/(pⁿ⁻¹(1 - p²ζ))`, the coefficients of
/// `f_ζ(z) = (z - T_p(pζ)z²)/((1 - z/p)(1 - pz))`.
pub fn a_n_extremal(pp: PoleParam, zeta: C64, n: u32) -> Result<C64> {
    if n == 0 {
        return Err(Error::Domain("coefficient index starts at 1"));
    }
    let p = pp.p();
    let den = ONE - zeta * (p * p);
    if modulus(den) < POLE_EPS {
        return Err(Error::Pole);
    }
    let num = ONE - zeta * libm::pow(p, 2.0 * n as f64);
    Ok(num / (den * libm::pow(p, (n - 1) as f64)))
}

/// Series of `f_ζ` by series division of its rational form; the
/// denominator `(1 - z/p)(1 - pz)` is `1 - Pz + z²`.
pub fn f_zeta_series(pp: PoleParam, zeta: C64, order: usize) -> Result<PowerSeries> {
    let p = pp.p();
    let lead = t_a(C64::new(p, 0.0), zeta * p)?;
    let num = [C64::new(0.0, 0.0), ONE, -lead];
    let den = [ONE, C64::new(-pp.big_p(), 0.0), ONE];
    let at = |c: &[C64], n: usize| c.get(n).copied().unwrap_or_default();
    PowerSeries::from_fn(order, |n| at(&num, n)).div(&PowerSeries::from_fn(order, |n| at(&den, n)))
}

/// `Λ₁(f_ζ) = -(P² - 4)K(p²ζ)`.
pub fn lambda1_extremal(pp: PoleParam, zeta: C64) -> C64 {
    let p = pp.p();
    let s = pp.big_p() * pp.big_p();
    -koebe(zeta * (p * p)) * (s - 4.0)
}

/// `Λ₁(f_ζ) = -P⁻²h(T_{p²}(ζ))`.
pub fn lambda1_h_form(pp: PoleParam, zeta: C64) -> Result<C64> {
    let p = pp.p();
    let sigma = t_a(C64::new(p * p, 0.0), zeta)?;
    Ok(-HQuad::new(pp).eval(sigma) / (pp.big_p() * pp.big_p()))
}

/// Second Hankel determinant `A₂A₄ - A₃²` of `f_ζ`.
pub fn hankel2_extremal(pp: PoleParam, zeta: C64) -> Result<C64> {
    let a = |n| a_n_extremal(pp, zeta, n);
    Ok(a(2)? * a(4)? - a(3)? * a(3)?)
}

/// The `σ` with `-P⁻²h(σ) = w` of smaller modulus. The two roots sum to
/// `t > 2`, so at most one of them lies in the closed disk.
pub fn omega_preimage(pp: PoleParam, w: C64) -> C64 {
    let h = HQuad::new(pp);
    let v = -w * (pp.big_p() * pp.big_p());
    // σ² - tσ + (1 - v) = 0; principal sqrt has Re >= 0, so t + s is the
    // larger root and the product form avoids cancellation.
    let s = (C64::new(h.t * h.t, 0.0) - (ONE - v) * 4.0).sqrt();
    let big = (s + h.t) * 0.5;
    (ONE - v) / big
}

pub fn omega_contains(pp: PoleParam, w: C64, tol: f64) -> bool {
    modulus(omega_preimage(pp, w)) <= 1.0 + tol
}

/// `-P⁻²h(e^{iθⱼ})`, `θⱼ = 2πj/m`.
pub fn omega_boundary(pp: PoleParam, m: usize) -> RegionSample {
    assert!(m >= 16, "need at least 16 boundary points");
    let h = HQuad::new(pp);
    let k = -1.0 / (pp.big_p() * pp.big_p());
    let points = circle(m).map(|s| h.eval(s) * k).collect();
    RegionSample {
        points,
        tag: RegionTag::OmegaBoundary,
    }
}

/// Distance between `h(∂D)` and `h(r∂D)`: `(1 - r)(P² - 3 - r)`.
pub fn delta_r(pp: PoleParam, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain("r must lie in [0, 1]"));
    }
    Ok((1.0 - r) * (pp.big_p() * pp.big_p() - 3.0 - r))
}

/// `P₀ = (1 + √37)/3`, the larger root of `3P² - 2P - 12`.
pub fn big_p0_constant() -> f64 {
    (1.0 + sqrt(37.0)) / 3.0
}

/// `p₀ = (1 + √37 - √(2(1 + √37)))/6`, the pole with `p₀ + 1/p₀ = P₀`.
pub fn p0_constant() -> f64 {
    let k = 1.0 + sqrt(37.0);
    (k - sqrt(2.0 * k)) / 6.0
}

/// A point of `W_p` outside `Ω_p`, reached with `σ₀ = -r`, `σ₁ = -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub r: f64,
    pub value: C64,
}

/// `a₃ - a₂²` at `σ₀ = -r`, `σ₁ = -1`: `-P⁻²[h(r) - (1 - r²)P/3]`.
pub fn witness_value(pp: PoleParam, r: f64) -> f64 {
    let big_p = pp.big_p();
    let h = HQuad::new(pp).eval(C64::new(r, 0.0)).re;
    -(h - (1.0 - r * r) * big_p / 3.0) / (big_p * big_p)
}

/// Feasible `r` satisfy `3P² - (1 + r)P - 9 - 3r < 0`, i.e.
/// `r > (3P² - P - 9)/(P + 3)`; the interval is nonempty iff `P < P₀`.
/// Returns the witness at the midpoint of `(r_lo, 1)`.
pub fn wp_witness(pp: PoleParam) -> Option<Witness> {
    let big_p = pp.big_p();
    if 3.0 * big_p * big_p - 2.0 * big_p - 12.0 >= 0.0 {
        return None;
    }
    let r_lo = ((3.0 * big_p * big_p - big_p - 9.0) / (big_p + 3.0)).max(0.0);
    let r = 0.5 * (r_lo + 1.0);
    Some(Witness {
        r,
        value: C64::new(witness_value(pp, r), 0.0),
    })
}

/// `Λ₁` over `σ₀ = rᵢe^{iθⱼ}` (`rᵢ = i/(n_r - 1)`) and `σ₁` on the unit
/// circle; the witness point is appended when it exists.
pub fn wp_sample(pp: PoleParam, n_r: usize, n_theta0: usize, n_theta1: usize) -> RegionSample {
    assert!(n_r >= 32 && n_theta0 >= 64 && n_theta1 >= 16, "wp grid too small");
    let dirs0: Vec<C64> = circle(n_theta0).collect();
    let dirs1: Vec<C64> = circle(n_theta1).collect();
    let mut points = Vec::with_capacity(n_r * n_theta0 * n_theta1 + 1);
    for i in 0..n_r {
        let r = i as f64 / (n_r - 1) as f64;
        for d0 in &dirs0 {
            for &s1 in &dirs1 {
                let s = SchurPair {
                    sigma0: d0 * r,
                    sigma1: s1,
                };
                points.push(lambda_mu_from_sigma(pp, s, 1.0));
            }
        }
    }
    if let Some(w) = wp_witness(pp) {
        let s = SchurPair {
            sigma0: C64::new(-w.r, 0.0),
            sigma1: -ONE,
        };
        points.push(lambda_mu_from_sigma(pp, s, 1.0));
    }
    RegionSample {
        points,
        tag: RegionTag::WpCloud,
    }
}

/// `-(1 + e^{iθ})²/4`, the boundary of `∩ Ω_p`.
pub fn cardioid_boundary(m: usize) -> RegionSample {
    assert!(m >= 16, "need at least 16 boundary points");
    let points = circle(m).map(|z| -(z + 1.0) * (z + 1.0) * 0.25).collect();
    RegionSample {
        points,
        tag: RegionTag::Cardioid,
    }
}

pub fn unit_circle(m: usize) -> RegionSample {
    assert!(m >= 16, "need at least 16 boundary points");
    RegionSample {
        points: circle(m).collect(),
        tag: RegionTag::UnitCircle,
    }
}

fn circle(m: usize) -> impl Iterator<Item = C64> {
    (0..m).map(move |j| C64::from_polar(1.0, TAU * j as f64 / m as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn pp(p: f64) -> PoleParam {
        PoleParam::from_p(p).unwrap()
    }

    #[test]
    fn a_n_examples() {
        let p = pp(0.5);
        for zeta in [c(0.0, 0.0), c(0.3, 0.4), c(-1.0, 0.0)] {
            assert!((a_n_extremal(p, zeta, 1).unwrap() - ONE).norm() < 1e-15);
        }
        for n in 1..6 {
            let want = libm::pow(0.5, -((n - 1) as f64));
            assert!((a_n_extremal(p, c(0.0, 0.0), n).unwrap().re - want).abs() < 1e-12);
        }
        assert!(a_n_extremal(p, ONE, 0).is_err());
    }

    #[test]
    fn a_n_matches_series() {
        let p = pp(0.5);
        let zeta = C64::from_polar(1.0, core::f64::consts::FRAC_PI_3);
        let s = f_zeta_series(p, zeta, 9).unwrap();
        for n in 1..=8u32 {
            let a = a_n_extremal(p, zeta, n).unwrap();
            assert!((s[n as usize] - a).norm() < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn lambda1_examples() {
        for &p in &[0.1, 0.5, 0.9] {
            assert_eq!(lambda1_extremal(pp(p), c(0.0, 0.0)), c(-0.0, -0.0));
            assert!((lambda1_extremal(pp(p), ONE) + ONE).norm() < 1e-12);
        }
        let p = pp(0.6);
        let zeta = c(0.2, -0.7);
        let direct = a_n_extremal(p, zeta, 3).unwrap() - a_n_extremal(p, zeta, 2).unwrap().powi(2);
        assert!((direct - lambda1_extremal(p, zeta)).norm() < 1e-12);
        assert!((lambda1_h_form(p, zeta).unwrap() - direct).norm() < 1e-12);
        assert!((hankel2_extremal(p, zeta).unwrap() - direct).norm() < 1e-12);
    }

    #[test]
    fn omega_membership_examples() {
        for &p in &[0.3, 0.5, 0.8] {
            let q = pp(p);
            let s = q.big_p() * q.big_p();
            assert!(omega_contains(q, c(0.0, 0.0), 0.0));
            let sig = omega_preimage(q, -ONE);
            assert!((sig + ONE).norm() < 1e-12);
            assert!(omega_contains(q, -ONE, 1e-9));
            let right = c(1.0 - 4.0 / s, 0.0);
            assert!((omega_preimage(q, right) - ONE).norm() < 1e-9);
            assert!(omega_contains(q, right, 1e-9));
            assert!(!omega_contains(q, right + 0.01, 1e-9));
        }
    }

    #[test]
    fn omega_boundary_properties() {
        let q = pp(0.4);
        let b = omega_boundary(q, 64);
        let s = q.big_p() * q.big_p();
        assert!((b.points[32] + ONE).norm() < 1e-12);
        assert!((b.points[0] - c(1.0 - 4.0 / s, 0.0)).norm() < 1e-12);
        for &w in &b.points {
            assert!(omega_contains(q, w, 1e-9));
            assert!(w.norm() <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn delta_examples() {
        let q = pp(0.7);
        let s = q.big_p() * q.big_p();
        assert_eq!(delta_r(q, 1.0).unwrap(), 0.0);
        assert!((delta_r(q, 0.0).unwrap() - (s - 3.0)).abs() < 1e-15);
        assert!((delta_r(q, 0.75).unwrap() - 0.195204).abs() < 1e-6);
        assert!(delta_r(q, 1.5).is_err() && delta_r(q, -0.1).is_err());
    }

    #[test]
    fn witness_examples() {
        let q = pp(0.7);
        let s = q.big_p() * q.big_p();
        let v = witness_value(q, 0.75);
        assert!((v - 0.14259).abs() < 1e-5);
        assert!(v > 1.0 - 4.0 / s);
        let w = wp_witness(q).unwrap();
        assert!(w.r > 0.0 && w.r < 1.0);
        assert!(!omega_contains(q, w.value, 1e-9));
        assert!(wp_witness(pp(0.5)).is_none());
    }

    #[test]
    fn constants() {
        assert!((p0_constant() - 0.553175).abs() < 1e-6);
        assert!((big_p0_constant() - 2.36092).abs() < 1e-5);
        let p0 = p0_constant();
        assert!((p0 + 1.0 / p0 - big_p0_constant()).abs() < 1e-12);
    }

    #[test]
    fn wp_sample_contents() {
        let q = pp(0.7);
        let cloud = wp_sample(q, 32, 64, 16);
        assert!(cloud.points.iter().any(|w| (w + ONE).norm() < 1e-12));
        let w = wp_witness(q).unwrap();
        assert!(cloud.points.iter().any(|z| (z - w.value).norm() < 1e-12));
        assert!(cloud.points.iter().all(|z| z.norm() <= 1.0 + 1e-9));
    }

    #[test]
    fn cardioid_examples() {
        let card = cardioid_boundary(64);
        assert!((card.points[0] + ONE).norm() < 1e-15);
        assert!(card.points[32].norm() < 1e-15);
        for &p in &[0.3, 0.5, 0.7, 0.9] {
            assert!(card.points.iter().all(|&w| omega_contains(pp(p), w, 1e-9)));
        }
    }

    #[test]
    fn tag_names_round_trip() {
        for t in [
            RegionTag::OmegaBoundary,
            RegionTag::WpCloud,
            RegionTag::Cardioid,
            RegionTag::UnitCircle,
        ] {
            assert_eq!(RegionTag::from_name(t.name()), Some(t));
        }
    }
}
