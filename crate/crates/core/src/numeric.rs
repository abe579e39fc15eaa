//! Pole parameterization, bracketed bisection and the special polynomials
//! whose roots fix the threshold constants.

use crate::{Error, Result, C64};

/// `|z| <= 1 + DISK_TOL` counts as inside the closed unit disk.
pub const DISK_TOL: f64 = 1e-12;

/// Default bracket width for [`find_root_bracketed`].
pub const ROOT_TOL: f64 = 1e-13;

const ROOT_MAX_ITER: usize = 200;

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// `|z|` without the overflow guards of `hypot`; all our values are O(1..1e3).
#[inline]
pub(crate) fn modulus(z: C64) -> f64 {
    libm::sqrt(z.re * z.re + z.im * z.im)
}

#[inline]
pub fn in_closed_disk(z: C64) -> bool {
    modulus(z) <= 1.0 + DISK_TOL
}

/// The pair `(p, P)` with `0 < p < 1` and `P = p + 1/p > 2`.
///
/// `P` is canonical: constructing from `P` keeps it bit-exact and derives `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleParam {
    p: f64,
    big_p: f64,
}

impl PoleParam {
    pub fn from_p(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain("pole p must satisfy 0 < p < 1"));
        }
        Ok(PoleParam { p, big_p: p + 1.0 / p })
    }

    pub fn from_big_p(big_p: f64) -> Result<Self> {
        if !(big_p > 2.0) || !big_p.is_finite() {
            return Err(Error::Domain("P = p + 1/p must exceed 2"));
        }
        // Root of x² - Px + 1 in (0, 1), written to avoid cancellation.
        let p = 2.0 / (big_p + sqrt(big_p * big_p - 4.0));
        Ok(PoleParam { p, big_p })
    }

    #[inline]
    pub fn p(&self) -> f64 {
        self.p
    }

    /// `P = p + 1/p`.
    #[inline]
    pub fn big_p(&self) -> f64 {
        self.big_p
    }
}

/// Bisection on `[lo, hi]` until the bracket is narrower than `tol`
/// (at most 200 halvings). Deterministic; no derivatives.
pub fn find_root_bracketed<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if !(f_lo * f_hi < 0.0) {
        return Err(Error::Bracket { lo, hi });
    }
    for _ in 0..ROOT_MAX_ITER {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Horner evaluation, coefficients from highest degree down.
#[inline]
pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// `U(P) = 6P⁴ - P³ - 38P² - 28P + 4`; its root in `(2, ∞)` is `P*`.
pub fn u_poly(big_p: f64) -> f64 {
    horner(&[6.0, -1.0, -38.0, -28.0, 4.0], big_p)
}

/// `V(P) = P⁸ - 16P⁶ + 84P⁴ - 176P² + 132`; its largest root is `P₂`.
pub fn v_poly(big_p: f64) -> f64 {
    horner(&[1.0, -16.0, 84.0, -176.0, 132.0], big_p * big_p)
}

/// The quadratics in `μ` and the two polynomials in `P` that govern the
/// branch structure of the Fekete-Szego bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialPoly {
    U,
    V,
    /// `H(μ) = -36μ² + (4 + P² + 4P⁴)μ - 4P²(P² - 2)`
    H,
    /// `F(μ) = 2(P²-1)(P²-2)²μ² - P²(3P⁴-12P²+14)μ + P⁴(P²-2)`
    F,
    /// `G(μ) = 2P²(P²-1)μ² - (3P⁴-4P²-2)μ + P²(P²-2)`
    G,
}

impl SpecialPoly {
    /// Coefficients `[μ², μ, 1]` of the quadratics; `None` for `U`, `V`.
    pub fn mu_coeffs(self, pp: PoleParam) -> Option<[f64; 3]> {
        let s = pp.big_p() * pp.big_p();
        match self {
            SpecialPoly::U | SpecialPoly::V => None,
            SpecialPoly::H => Some([-36.0, 4.0 + s + 4.0 * s * s, -4.0 * s * (s - 2.0)]),
            SpecialPoly::F => Some([
                2.0 * (s - 1.0) * (s - 2.0) * (s - 2.0),
                -s * (3.0 * s * s - 12.0 * s + 14.0),
                s * s * (s - 2.0),
            ]),
            SpecialPoly::G => Some([2.0 * s * (s - 1.0), -(3.0 * s * s - 4.0 * s - 2.0), s * (s - 2.0)]),
        }
    }
}

/// Evaluates `which` at `pp`; `mu` is read only by `H`, `F`, `G`.
pub fn eval_special_poly(which: SpecialPoly, pp: PoleParam, mu: f64) -> f64 {
    match which {
        SpecialPoly::U => u_poly(pp.big_p()),
        SpecialPoly::V => v_poly(pp.big_p()),
        _ => {
            let c = which.mu_coeffs(pp).expect("quadratic in mu");
            horner(&c, mu)
        }
    }
}

/// `P* ≈ 2.88965`, the unique root of `U` in `(2, ∞)`.
pub fn big_p_star() -> f64 {
    find_root_bracketed(u_poly, 2.0, 4.0, ROOT_TOL).expect("U changes sign on [2, 4]")
}

/// `P₂ ≈ 2.82343`, the largest root of `V`.
pub fn big_p_two() -> f64 {
    find_root_bracketed(v_poly, 2.5, 3.0, ROOT_TOL).expect("V changes sign on [2.5, 3]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_from_small_p() {
        let pp = PoleParam::from_p(0.5).unwrap();
        assert_eq!(pp.big_p(), 2.5);
        for &p in &[0.01, 0.3, 0.7, 0.999] {
            let pp = PoleParam::from_p(p).unwrap();
            assert!((pp.big_p() * p - (1.0 + p * p)).abs() < 1e-14);
        }
    }

    #[test]
    fn pole_domain_errors() {
        assert!(PoleParam::from_p(0.0).is_err());
        assert!(PoleParam::from_p(1.0).is_err());
        assert!(PoleParam::from_p(-0.2).is_err());
        assert!(PoleParam::from_p(f64::NAN).is_err());
        assert!(PoleParam::from_big_p(2.0).is_err());
        assert!(PoleParam::from_big_p(1.5).is_err());
    }

    #[test]
    fn p_from_big_p_examples() {
        assert!((PoleParam::from_big_p(2.5).unwrap().p() - 0.5).abs() < 1e-15);
        assert!((PoleParam::from_big_p(2.82343).unwrap().p() - 0.415252).abs() < 1e-6);
        assert!((PoleParam::from_p(0.401984).unwrap().big_p() - 2.88965).abs() < 1e-5);
    }

    #[test]
    fn round_trip_on_grid() {
        let mut big_p = 2.001;
        while big_p <= 20.0 {
            let back = PoleParam::from_p(PoleParam::from_big_p(big_p).unwrap().p()).unwrap();
            assert!((back.big_p() - big_p).abs() < 1e-12, "P = {big_p}");
            big_p += 0.0137;
        }
    }

    #[test]
    fn bisection_known_root() {
        let r = find_root_bracketed(|x| x * x - 4.0, 0.0, 3.0, 1e-12).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
        assert!(matches!(
            find_root_bracketed(|x| x * x + 1.0, 0.0, 3.0, 1e-12),
            Err(Error::Bracket { .. })
        ));
    }

    #[test]
    fn threshold_constants() {
        assert!((big_p_star() - 2.88965).abs() < 1e-5);
        assert!((big_p_two() - 2.82343).abs() < 1e-5);
        let pp = PoleParam::from_big_p(big_p_star()).unwrap();
        assert!(eval_special_poly(SpecialPoly::U, pp, 0.0).abs() < 1e-8);
    }

    fn sign_changes(f: impl Fn(f64) -> f64, lo: f64, hi: f64, step: f64) -> usize {
        let n = ((hi - lo) / step) as usize;
        let mut prev = f(lo + step);
        let mut count = 0;
        for i in 2..n {
            let cur = f(lo + i as f64 * step);
            if (cur < 0.0) != (prev < 0.0) {
                count += 1;
            }
            prev = cur;
        }
        count
    }

    #[test]
    fn single_sign_changes() {
        assert_eq!(sign_changes(u_poly, 2.0, 10.0, 1e-3), 1);
        assert_eq!(sign_changes(v_poly, 2.5, 3.0, 1e-3), 1);
    }

    #[test]
    fn quadratic_values() {
        let pp = PoleParam::from_big_p(3.0).unwrap();
        let h = eval_special_poly(SpecialPoly::H, pp, 2.0 / 3.0);
        assert!((h - (-2.0 * 5.0 * 13.0 / 3.0)).abs() < 1e-12);
        let f = eval_special_poly(SpecialPoly::F, pp, 1.0);
        assert!((f - 10.0).abs() < 1e-12);
    }

    #[test]
    fn h_positive_at_mu_a() {
        let mut big_p = 2.01;
        while big_p < 20.0 {
            let pp = PoleParam::from_big_p(big_p).unwrap();
            let q = big_p - 1.0 / big_p;
            let mu_a = (big_p * big_p - 2.0) / (q * q);
            let s = big_p * big_p;
            let expected = 9.0 * s * s * (s - 3.0) * (s - 3.0) * (s - 2.0) / libm::pow(s - 1.0, 4.0);
            let h = eval_special_poly(SpecialPoly::H, pp, mu_a);
            assert!(h > 0.0);
            assert!((h - expected).abs() < 1e-9 * expected.max(1.0));
            big_p += 0.1;
        }
    }
}
