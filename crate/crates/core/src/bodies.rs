//! The coefficient bodies `X₀` and `X₁` of self-maps of the disk fixing `p`:
//! membership, the Schur parameterization `(σ₀, σ₁)`, and which maps sit
//! on the boundary.

use crate::disk_maps::{blaschke2_dieudonne, t_a, ConjugatedMap, OriginMap};
use crate::numeric::{modulus, DISK_TOL};
use crate::{Error, PoleParam, Result, C64};

/// Tolerance on the inequality residual used by [`classify_boundary`].
pub const BOUNDARY_TOL: f64 = 1e-9;

/// `|σ₀|` at or above this leaves `σ₁` undetermined.
pub const DEGENERATE_TOL: f64 = 1e-9;

/// First two Taylor coefficients `φ(z) = c₀ + c₁z + …`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoeffPair {
    pub c0: C64,
    pub c1: C64,
}

/// A point of the closed unit bidisk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchurPair {
    pub sigma0: C64,
    pub sigma1: C64,
}

impl SchurPair {
    pub fn new(sigma0: C64, sigma1: C64) -> Result<Self> {
        let s = SchurPair { sigma0, sigma1 };
        s.check()?;
        Ok(s)
    }

    fn check(&self) -> Result<()> {
        if modulus(self.sigma0) > 1.0 + DISK_TOL || modulus(self.sigma1) > 1.0 + DISK_TOL {
            return Err(Error::Domain("Schur parameters must lie in the closed unit disk"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryClass {
    Interior,
    /// `c₀ ∈ ∂X₀`: the map is an automorphism of the disk.
    Automorphism,
    /// `c₀` interior, `(c₀, c₁) ∈ ∂X₁`: a degree-2 Blaschke product.
    Blaschke2,
}

/// `X₀ = {|c₀ - 1/P| <= 1/P}` as `(center, radius)`.
pub fn x0_disk(pp: PoleParam) -> (f64, f64) {
    let r = 1.0 / pp.big_p();
    (r, r)
}

/// `(lhs, rhs)` of `|c₁ - (1 - Pc₀ + c₀²)| <= P(P⁻² - |c₀ - 1/P|²)`.
fn x1_sides(pp: PoleParam, c: CoeffPair) -> (f64, f64) {
    let big_p = pp.big_p();
    let inv = 1.0 / big_p;
    let centre = C64::new(1.0, 0.0) - c.c0 * big_p + c.c0 * c.c0;
    let lhs = modulus(c.c1 - centre);
    let rhs = big_p * (inv * inv - (c.c0 - inv).norm_sqr());
    (lhs, rhs)
}

pub fn x1_contains(pp: PoleParam, c: CoeffPair, tol: f64) -> bool {
    let (lhs, rhs) = x1_sides(pp, c);
    if rhs < -tol {
        return false;
    }
    lhs <= rhs.max(0.0) + tol
}

/// `c₀ = (1 - σ₀)/P`,
/// `c₁ = P⁻²[1 + (P² - 2)σ₀ + σ₀²] + P⁻¹(1 - |σ₀|²)σ₁`.
pub fn c_from_sigma(pp: PoleParam, s: SchurPair) -> Result<CoeffPair> {
    s.check()?;
    let big_p = pp.big_p();
    let inv = 1.0 / big_p;
    let s0 = s.sigma0;
    let c0 = (C64::new(1.0, 0.0) - s0) * inv;
    let c1 = (s0 * (big_p * big_p - 2.0) + s0 * s0 + 1.0) * (inv * inv) + s.sigma1 * (inv * (1.0 - s0.norm_sqr()));
    Ok(CoeffPair { c0, c1 })
}

/// Inverse of [`c_from_sigma`] on the part of the body where `|σ₀| < 1`.
pub fn sigma_from_c(pp: PoleParam, c: CoeffPair) -> Result<SchurPair> {
    let big_p = pp.big_p();
    let s0 = C64::new(1.0, 0.0) - c.c0 * big_p;
    let r2 = s0.norm_sqr();
    if modulus(s0) >= 1.0 - DEGENERATE_TOL {
        return Err(Error::Degenerate);
    }
    let base = (s0 * (big_p * big_p - 2.0) + s0 * s0 + 1.0) / (big_p * big_p);
    let s1 = (c.c1 - base) * big_p / (1.0 - r2);
    Ok(SchurPair { sigma0: s0, sigma1: s1 })
}

pub fn classify_boundary(pp: PoleParam, c: CoeffPair, tol: f64) -> Result<BoundaryClass> {
    if !x1_contains(pp, c, tol) {
        return Err(Error::NotMember);
    }
    let inv = 1.0 / pp.big_p();
    if (modulus(c.c0 - inv) - inv).abs() <= tol {
        return Ok(BoundaryClass::Automorphism);
    }
    let (lhs, rhs) = x1_sides(pp, c);
    if (lhs - rhs).abs() <= tol {
        Ok(BoundaryClass::Blaschke2)
    } else {
        Ok(BoundaryClass::Interior)
    }
}

/// The map realizing a boundary pair of `X₁`: `T_p ∘ ψ ∘ T_p` with `ψ` a
/// rotation (automorphism case) or a degree-2 Blaschke product fixing 0.
pub fn boundary_realization(pp: PoleParam, c: CoeffPair, tol: f64) -> Result<ConjugatedMap> {
    let p = pp.p();
    let pc = C64::new(p, 0.0);
    // ψ(p) = T_p(c₀) and ψ'(p) = c₁/(1 - pc₀)².
    let w0 = t_a(pc, c.c0)?;
    let psi = match classify_boundary(pp, c, tol)? {
        BoundaryClass::Interior => return Err(Error::Domain("pair is interior to X1")),
        BoundaryClass::Automorphism => {
            let zeta = w0 / p;
            OriginMap::Rotation(zeta / modulus(zeta))
        }
        BoundaryClass::Blaschke2 => {
            let d = 1.0 - pc * c.c0;
            let slope = c.c1 / (d * d);
            let omega = w0 / p;
            // g'(p) = ω + p·ζ·(|ω|² - 1)/(p² - 1)
            let zeta = (slope - omega) * (p * p - 1.0) / (p * (omega.norm_sqr() - 1.0));
            if (modulus(zeta) - 1.0).abs() > tol.max(1e-8) {
                return Err(Error::Internal("boundary pair produced non-unimodular zeta"));
            }
            OriginMap::Blaschke(blaschke2_dieudonne(pc, w0, zeta / modulus(zeta))?)
        }
    };
    ConjugatedMap::new(p, psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn pp3() -> PoleParam {
        PoleParam::from_big_p(3.0).unwrap()
    }

    #[test]
    fn x0_examples() {
        let pp = PoleParam::from_big_p(2.5).unwrap();
        assert_eq!(x0_disk(pp), (0.4, 0.4));
        let (centre, radius) = x0_disk(pp);
        assert!(((0.0 - centre).abs() - radius).abs() < 1e-15);
        assert!(((2.0 / 2.5 - centre).abs() - radius).abs() < 1e-15);
    }

    #[test]
    fn identity_map_pair() {
        let pp = pp3();
        let id = CoeffPair {
            c0: c(0.0, 0.0),
            c1: c(1.0, 0.0),
        };
        assert!(x1_contains(pp, id, 1e-12));
        let (lhs, rhs) = x1_sides(pp, id);
        assert!(lhs.abs() < 1e-15 && rhs.abs() < 1e-15);
        assert_eq!(classify_boundary(pp, id, BOUNDARY_TOL), Ok(BoundaryClass::Automorphism));
        assert_eq!(sigma_from_c(pp, id), Err(Error::Degenerate));
        let from = c_from_sigma(pp, SchurPair::new(c(1.0, 0.0), c(0.3, -0.9)).unwrap()).unwrap();
        assert!((from.c0 - id.c0).norm() < 1e-15 && (from.c1 - id.c1).norm() < 1e-15);
    }

    #[test]
    fn centre_pair() {
        let pp = pp3();
        let centre = CoeffPair {
            c0: c(1.0 / 3.0, 0.0),
            c1: c(1.0 / 9.0, 0.0),
        };
        assert!(x1_contains(pp, centre, 0.0));
        assert_eq!(classify_boundary(pp, centre, BOUNDARY_TOL), Ok(BoundaryClass::Interior));
        let s = sigma_from_c(pp, centre).unwrap();
        assert!(s.sigma0.norm() < 1e-15 && s.sigma1.norm() < 1e-15);
        let back = c_from_sigma(pp, SchurPair::new(c(0.0, 0.0), c(0.0, 0.0)).unwrap()).unwrap();
        assert!((back.c0 - centre.c0).norm() < 1e-15 && (back.c1 - centre.c1).norm() < 1e-15);
    }

    #[test]
    fn sigma_minus_one() {
        let pp = pp3();
        let got = c_from_sigma(pp, SchurPair::new(c(-1.0, 0.0), c(0.0, 0.0)).unwrap()).unwrap();
        assert!((got.c0 - c(2.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((got.c1 - c((4.0 - 9.0) / 9.0, 0.0)).norm() < 1e-15);
        let (lhs, rhs) = x1_sides(pp, got);
        assert!((lhs - rhs).abs() < 1e-14);
    }

    #[test]
    fn blaschke_boundary_class() {
        let pp = pp3();
        let s = SchurPair::new(c(0.3, 0.0), C64::from_polar(1.0, core::f64::consts::FRAC_PI_4)).unwrap();
        let pair = c_from_sigma(pp, s).unwrap();
        assert_eq!(classify_boundary(pp, pair, BOUNDARY_TOL), Ok(BoundaryClass::Blaschke2));
    }

    #[test]
    fn outside_is_rejected() {
        let pp = pp3();
        let far = CoeffPair {
            c0: c(1.0, 0.0),
            c1: c(0.0, 0.0),
        };
        assert!(!x1_contains(pp, far, 1e-9));
        assert_eq!(classify_boundary(pp, far, BOUNDARY_TOL), Err(Error::NotMember));
        assert!(SchurPair::new(c(1.1, 0.0), c(0.0, 0.0)).is_err());
        let bad = SchurPair {
            sigma0: c(0.0, 0.0),
            sigma1: c(0.0, 2.0),
        };
        assert!(c_from_sigma(pp, bad).is_err());
    }

    #[test]
    fn pc_identity() {
        for &p in &[0.2, 0.5, 0.8] {
            for &z in &[c(0.1, 0.3), c(0.5, -0.2), c(-0.4, 0.0), c(0.9, 0.9)] {
                let lhs = (1.0 - z * p).norm_sqr() - (1.0 - z / p).norm_sqr();
                let q = p / (1.0 + p * p);
                let rhs = (1.0 - p.powi(4)) / (p * p) * (q * q - (z - q).norm_sqr());
                assert!((lhs - rhs).abs() < 1e-12, "p={p} z={z}");
            }
        }
    }
}
