//! Disk automorphisms `T_a(z) = (a - z)/(1 - āz)`, degree-2 Blaschke
//! products fixing the origin, and maps fixing `p` built by conjugation.

use crate::numeric::{modulus, DISK_TOL};
use crate::series::{Compose, PowerSeries};
use crate::{Error, Result, C64};

const POLE_EPS: f64 = 1e-15;
const ONE: C64 = C64::new(1.0, 0.0);

/// `T_a(z) = (a - z)/(1 - āz)`: the involution of the disk swapping 0 and `a`.
pub fn t_a(a: C64, z: C64) -> Result<C64> {
    let den = ONE - a.conj() * z;
    if modulus(den) < POLE_EPS {
        return Err(Error::Pole);
    }
    Ok((a - z) / den)
}

/// `T_a'(z) = (|a|² - 1)/(1 - āz)²`.
pub fn t_a_derivative(a: C64, z: C64) -> Result<C64> {
    let den = ONE - a.conj() * z;
    if modulus(den) < POLE_EPS {
        return Err(Error::Pole);
    }
    Ok((a.norm_sqr() - 1.0) / (den * den))
}

/// Taylor coefficients of `T_a` at 0: `a`, then `(|a|² - 1)·āⁿ⁻¹`.
pub fn t_a_series(a: C64, order: usize) -> Result<PowerSeries> {
    if modulus(a) >= 1.0 {
        return Err(Error::Domain("T_a needs |a| < 1"));
    }
    let k = a.norm_sqr() - 1.0;
    let ab = a.conj();
    let mut pow = ONE;
    Ok(PowerSeries::from_fn(order, |n| {
        if n == 0 {
            a
        } else {
            let c = pow * k;
            pow *= ab;
            c
        }
    }))
}

/// `z ↦ (αz + β)/(γz + δ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub alpha: C64,
    pub beta: C64,
    pub gamma: C64,
    pub delta: C64,
}

impl Mobius {
    pub fn eval(&self, z: C64) -> Result<C64> {
        let den = self.gamma * z + self.delta;
        if modulus(den) < POLE_EPS {
            return Err(Error::Pole);
        }
        Ok((self.alpha * z + self.beta) / den)
    }
}

impl Compose for Mobius {
    /// Re-expands the Möbius map around `inner(0)`, so a nonzero inner
    /// constant term is fine as long as the denominator does not vanish there.
    fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        let num = &inner.scale(self.alpha) + self.beta;
        let den = &inner.scale(self.gamma) + self.delta;
        if den.order() > 0 && modulus(den[0]) < POLE_EPS {
            return Err(Error::Pole);
        }
        num.div(&den)
    }
}

/// `z ↦ T_a(ρz)` with `|a| < 1` and `|ρ| = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskAutomorphism {
    a: C64,
    rotation: C64,
}

impl DiskAutomorphism {
    pub fn new(a: C64, rotation: C64) -> Result<Self> {
        if modulus(a) >= 1.0 - DISK_TOL {
            return Err(Error::Domain("automorphism point must satisfy |a| < 1"));
        }
        if (modulus(rotation) - 1.0).abs() > DISK_TOL {
            return Err(Error::Domain("rotation must be unimodular"));
        }
        Ok(DiskAutomorphism { a, rotation })
    }

    pub fn a(&self) -> C64 {
        self.a
    }

    pub fn rotation(&self) -> C64 {
        self.rotation
    }

    pub fn to_mobius(&self) -> Mobius {
        Mobius {
            alpha: -self.rotation,
            beta: self.a,
            gamma: -self.a.conj() * self.rotation,
            delta: ONE,
        }
    }

    pub fn eval(&self, z: C64) -> Result<C64> {
        t_a(self.a, self.rotation * z)
    }

    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        self.to_mobius().compose(&PowerSeries::identity(order))
    }
}

impl Compose for DiskAutomorphism {
    fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        self.to_mobius().compose(inner)
    }
}

/// `g(z) = z·T_ω(ζ·T_{z₀}(z))`, the extremal map of Dieudonné's lemma: a
/// degree-2 Blaschke product with `g(0) = 0` and `g(z₀) = z₀ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Blaschke2 {
    z0: C64,
    omega: C64,
    zeta: C64,
}

/// The Blaschke product attaining equality in Dieudonné's lemma for the
/// data `g(z₀) = w₀`, with `ω₀ = w₀/z₀` and boundary parameter `ζ`.
pub fn blaschke2_dieudonne(z0: C64, w0: C64, zeta: C64) -> Result<Blaschke2> {
    let r0 = modulus(z0);
    if !(r0 > 0.0 && r0 < 1.0) {
        return Err(Error::Domain("need 0 < |z0| < 1"));
    }
    if !(modulus(w0) < r0) {
        return Err(Error::Domain("need |w0| < |z0|"));
    }
    if (modulus(zeta) - 1.0).abs() > DISK_TOL {
        return Err(Error::Domain("zeta must be unimodular"));
    }
    Ok(Blaschke2 {
        z0,
        omega: w0 / z0,
        zeta,
    })
}

impl Blaschke2 {
    pub fn z0(&self) -> C64 {
        self.z0
    }

    /// `ω₀ = w₀/z₀`.
    pub fn omega(&self) -> C64 {
        self.omega
    }

    pub fn zeta(&self) -> C64 {
        self.zeta
    }

    pub fn eval(&self, z: C64) -> Result<C64> {
        Ok(z * t_a(self.omega, self.zeta * t_a(self.z0, z)?)?)
    }

    /// `g'(z) = T_ω(u) + z·ζ·T_ω'(u)·T_{z₀}'(z)` with `u = ζT_{z₀}(z)`.
    pub fn derivative(&self, z: C64) -> Result<C64> {
        let u = self.zeta * t_a(self.z0, z)?;
        Ok(t_a(self.omega, u)? + z * self.zeta * t_a_derivative(self.omega, u)? * t_a_derivative(self.z0, z)?)
    }

    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        self.compose(&PowerSeries::identity(order))
    }
}

impl Compose for Blaschke2 {
    /// `inner · (T_ω ∘ ζT_{z₀} ∘ inner)`; each factor is a Möbius map, so
    /// any inner constant term in the disk is allowed.
    fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        let t_z0 = DiskAutomorphism {
            a: self.z0,
            rotation: ONE,
        };
        let t_omega = DiskAutomorphism {
            a: self.omega,
            rotation: self.zeta,
        };
        let w = t_omega.compose(&t_z0.compose(inner)?)?;
        Ok(inner * &w)
    }
}

/// Center and radius of the closed disk of values of `g'(z₀)` over
/// self-maps with `g(0) = 0`, `g(z₀) = w₀`.
pub fn dieudonne_disk(z0: C64, w0: C64) -> Result<(C64, f64)> {
    let r0 = modulus(z0);
    if !(r0 > 0.0) {
        return Err(Error::Domain("z0 must be nonzero"));
    }
    if !(r0 < 1.0) {
        return Err(Error::Domain("need |z0| < 1"));
    }
    let rw = modulus(w0);
    if rw > r0 + DISK_TOL {
        return Err(Error::Domain("need |w0| <= |z0|"));
    }
    let radius = ((r0 * r0 - rw * rw) / (r0 * (1.0 - r0 * r0))).max(0.0);
    Ok((w0 / z0, radius))
}

/// A self-map of the disk fixing the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OriginMap {
    /// `z ↦ ζz`
    Rotation(C64),
    Blaschke(Blaschke2),
}

impl OriginMap {
    pub fn eval(&self, z: C64) -> Result<C64> {
        match self {
            OriginMap::Rotation(zeta) => Ok(zeta * z),
            OriginMap::Blaschke(g) => g.eval(z),
        }
    }
}

impl Compose for OriginMap {
    fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        match self {
            OriginMap::Rotation(zeta) => Ok(inner.scale(*zeta)),
            OriginMap::Blaschke(g) => g.compose(inner),
        }
    }
}

/// `φ = T_p ∘ ψ ∘ T_p`, a self-map fixing `p` whenever `ψ` fixes 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatedMap {
    p: f64,
    psi: OriginMap,
}

impl ConjugatedMap {
    pub fn new(p: f64, psi: OriginMap) -> Result<Self> {
        if !(0.0..1.0).contains(&p) {
            return Err(Error::Domain("fixed point must satisfy 0 <= p < 1"));
        }
        Ok(ConjugatedMap { p, psi })
    }

    pub fn psi(&self) -> OriginMap {
        self.psi
    }

    pub fn eval(&self, z: C64) -> Result<C64> {
        let tp = C64::new(self.p, 0.0);
        t_a(tp, self.psi.eval(t_a(tp, z)?)?)
    }

    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        let tp = DiskAutomorphism {
            a: C64::new(self.p, 0.0),
            rotation: ONE,
        };
        let inner = t_a_series(tp.a, order)?;
        tp.compose(&self.psi.compose(&inner)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    const ZERO: C64 = C64::new(0.0, 0.0);

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn cis(t: f64) -> C64 {
        C64::from_polar(1.0, t)
    }

    #[test]
    fn t_a_swaps_and_involutes() {
        let a = c(0.3, -0.4);
        assert!((t_a(a, ZERO).unwrap() - a).norm() < 1e-15);
        assert!(t_a(a, a).unwrap().norm() < 1e-15);
        for &z in &[c(0.1, 0.2), c(-0.9, 0.1), cis(2.0)] {
            let back = t_a(a, t_a(a, z).unwrap()).unwrap();
            assert!((back - z).norm() < 1e-14);
        }
    }

    #[test]
    fn t_a_pole() {
        assert_eq!(t_a(c(0.5, 0.0), c(2.0, 0.0)), Err(Error::Pole));
    }

    #[test]
    fn t_a_series_coefficients() {
        let s = t_a_series(ZERO, 6).unwrap();
        assert_eq!(s.coeffs(), &[ZERO, -ONE, ZERO, ZERO, ZERO, ZERO]);
        let a = c(0.2, 0.5);
        let s = t_a_series(a, 40).unwrap();
        assert!((s[1] - c(a.norm_sqr() - 1.0, 0.0)).norm() < 1e-15);
        assert!((s[1] - t_a_derivative(a, ZERO).unwrap()).norm() < 1e-15);
        let z = c(0.3, 0.0);
        let tail = crate::series::geometric_tail(0.3 * a.norm(), 40);
        assert!((s.eval(z) - t_a(a, z).unwrap()).norm() <= tail + 1e-15);
        assert!(t_a_series(c(1.0, 0.0), 4).is_err());
    }

    #[test]
    fn t_p_is_an_involution_as_series() {
        let tp = DiskAutomorphism::new(c(0.5, 0.0), ONE).unwrap();
        let s = tp.series(12).unwrap();
        let id = crate::series::compose_series(&tp, &s).unwrap();
        assert!(id.max_abs_diff(&PowerSeries::identity(12)) < 1e-14);
    }

    #[test]
    fn rotation_one_gives_identity() {
        let phi = ConjugatedMap::new(0.5, OriginMap::Rotation(ONE)).unwrap();
        let s = phi.series(16).unwrap();
        assert!(s.max_abs_diff(&PowerSeries::identity(16)) < 1e-14);
    }

    #[test]
    fn conjugated_map_fixes_p() {
        let g = blaschke2_dieudonne(c(0.2, 0.6), c(0.1, -0.3), cis(1.0)).unwrap();
        let phi = ConjugatedMap::new(0.4, OriginMap::Blaschke(g)).unwrap();
        assert!((phi.eval(c(0.4, 0.0)).unwrap() - c(0.4, 0.0)).norm() < 1e-14);
        let s = phi.series(64).unwrap();
        let z = c(0.1, -0.2);
        assert!((s.eval(z) - phi.eval(z).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn dieudonne_interpolates_and_attains_boundary() {
        let z0 = c(0.5, 0.0);
        let w0 = c(0.2, 0.0);
        let g = blaschke2_dieudonne(z0, w0, ONE).unwrap();
        assert!(g.eval(ZERO).unwrap().norm() < 1e-15);
        assert!((g.eval(z0).unwrap() - w0).norm() < 1e-12);
        let (center, radius) = dieudonne_disk(z0, w0).unwrap();
        let d = g.derivative(z0).unwrap();
        assert!(((d - center).norm() - radius).abs() < 1e-12);
    }

    #[test]
    fn dieudonne_w0_zero_finite_difference() {
        let z0 = c(0.3, 0.4);
        let g = blaschke2_dieudonne(z0, ZERO, ONE).unwrap();
        // g(z) = z·T_0(T_{z0}(z)) = -z·T_{z0}(z)
        let z = c(0.1, 0.7);
        assert!((g.eval(z).unwrap() + z * t_a(z0, z).unwrap()).norm() < 1e-14);
        let h = 1e-6;
        let fd = (g.eval(z0 + h).unwrap() - g.eval(z0 - h).unwrap()) / (2.0 * h);
        let (center, radius) = dieudonne_disk(z0, ZERO).unwrap();
        assert!(((fd - center).norm() - radius).abs() < 1e-8);
        assert!((fd - g.derivative(z0).unwrap()).norm() < 1e-8);
    }

    #[test]
    fn dieudonne_disk_values() {
        let (center, radius) = dieudonne_disk(c(0.5, 0.0), ZERO).unwrap();
        assert_eq!(center, ZERO);
        assert!((radius - 2.0 / 3.0).abs() < 1e-15);
        let z0 = c(0.3, 0.2);
        let (_, r) = dieudonne_disk(z0, z0 * cis(0.7)).unwrap();
        assert!(r.abs() < 1e-12);
        let (center, r) = dieudonne_disk(z0, z0).unwrap();
        assert!((center - ONE).norm() < 1e-15 && r.abs() < 1e-12);
        assert!(dieudonne_disk(ZERO, ZERO).is_err());
        assert!(dieudonne_disk(c(1.0, 0.0), ZERO).is_err());
        assert!(dieudonne_disk(c(0.3, 0.0), c(0.4, 0.0)).is_err());
    }

    #[test]
    fn blaschke_domain_errors() {
        assert!(blaschke2_dieudonne(ZERO, ZERO, ONE).is_err());
        assert!(blaschke2_dieudonne(c(0.5, 0.0), c(0.5, 0.0), ONE).is_err());
        assert!(blaschke2_dieudonne(c(0.5, 0.0), ZERO, c(0.5, 0.0)).is_err());
    }

    #[test]
    fn blaschke_is_inner() {
        let g = blaschke2_dieudonne(c(-0.3, 0.5), c(0.2, 0.1), cis(PI / 3.0)).unwrap();
        for k in 0..64 {
            let w = g.eval(cis(2.0 * PI * k as f64 / 64.0)).unwrap();
            assert!((w.norm() - 1.0).abs() < 1e-10);
        }
    }
}
