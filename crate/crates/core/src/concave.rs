//! Concave functions with a pole at `p` from their associated self-map `φ`:
//!
//! ```text
//! f'(z) = (1 - Pz + z²)⁻² · exp ∫₀ᶻ -2φ(ζ)/(1 - ζφ(ζ)) dζ
//! ```
//!
//! evaluated in truncated power-series arithmetic, plus the closed forms of
//! `a₂`, `a₃` and the Fekete-Szego functional `a₃ - μa₂²`.

use alloc::vec::Vec;

use crate::bodies::{c_from_sigma, x1_contains, CoeffPair, SchurPair, BOUNDARY_TOL};
use crate::numeric::modulus;
use crate::series::PowerSeries;
use crate::{Error, PoleParam, Result, C64};

/// Default order for representation checks.
pub const REP_ORDER: usize = 96;

/// `f(z) = z + a₂z² + a₃z³ + …`; `higher` holds `a₄, a₅, …` when known.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcaveCoeffs {
    pub a2: C64,
    pub a3: C64,
    pub higher: Vec<C64>,
}

/// Series of `f'` to `order` terms for the map with Taylor series `phi`.
pub fn fprime_series(pp: PoleParam, phi: &PowerSeries, order: usize) -> Result<PowerSeries> {
    if phi.order() < order {
        return Err(Error::OrderMismatch {
            left: phi.order(),
            right: order,
        });
    }
    let phi = phi.clone().truncate(order);
    let one = C64::new(1.0, 0.0);
    let denom = &(-&phi.shift_up()) + one;
    let u = phi.scale(C64::new(-2.0, 0.0)).div(&denom)?;
    let e = u.integrate().exp();
    let q_coeffs = [one, C64::new(-pp.big_p(), 0.0), one];
    let q = PowerSeries::from_fn(order, |n| q_coeffs.get(n).copied().unwrap_or_default());
    let r = q.recip()?;
    Ok(&e * &(&r * &r))
}

/// `aₙ = (coefficient n-1 of f')/n`.
pub fn coeffs_from_fprime(fprime: &PowerSeries) -> ConcaveCoeffs {
    let a = |n: usize| fprime.coeff(n - 1) / n as f64;
    ConcaveCoeffs {
        a2: a(2),
        a3: a(3),
        higher: (4..=fprime.order()).map(a).collect(),
    }
}

/// `S_f(0)` from the series of `f'`: with `L = f''/f'`, `S_f(0) = L'(0) - L(0)²/2`.
pub fn schwarzian_at_zero(fprime: &PowerSeries) -> Result<C64> {
    let l = fprime.derivative().div(fprime)?;
    Ok(l.coeff(1) - l.coeff(0) * l.coeff(0) * 0.5)
}

/// Whether the series takes the value `p` at `p` within `tol`.
pub fn series_fixes_pole(pp: PoleParam, phi: &PowerSeries, tol: f64) -> bool {
    let p = C64::new(pp.p(), 0.0);
    modulus(phi.eval(p) - p) <= tol
}

/// `a₂ = P - c₀`, `a₃ = P² - (c₁ - c₀² + 4Pc₀ + 2)/3`.
pub fn a23_from_c(pp: PoleParam, c: CoeffPair) -> Result<ConcaveCoeffs> {
    if !x1_contains(pp, c, BOUNDARY_TOL) {
        return Err(Error::NotMember);
    }
    let big_p = pp.big_p();
    let a2 = C64::new(big_p, 0.0) - c.c0;
    let a3 = big_p * big_p - (c.c1 - c.c0 * c.c0 + c.c0 * (4.0 * big_p) + 2.0) / 3.0;
    Ok(ConcaveCoeffs {
        a2,
        a3,
        higher: Vec::new(),
    })
}

/// `Λ_μ = a₃ - μa₂²`.
pub fn lambda_mu(a: &ConcaveCoeffs, mu: f64) -> C64 {
    a.a3 - a.a2 * a.a2 * mu
}

/// `Λ_μ` directly in Schur parameters:
///
/// `P² - 2 - μ(P - 1/P)² + (1 - 2μ(1 - P⁻²))σ₀ - μP⁻²σ₀² - (1 - |σ₀|²)σ₁/(3P)`.
pub fn lambda_mu_from_sigma(pp: PoleParam, s: SchurPair, mu: f64) -> C64 {
    lambda_mu_sigma0_part(pp, s.sigma0, mu) - s.sigma1 * ((1.0 - s.sigma0.norm_sqr()) / (3.0 * pp.big_p()))
}

/// The `σ₁`-free part of [`lambda_mu_from_sigma`].
pub fn lambda_mu_sigma0_part(pp: PoleParam, sigma0: C64, mu: f64) -> C64 {
    let big_p = pp.big_p();
    let inv2 = 1.0 / (big_p * big_p);
    let q = big_p - 1.0 / big_p;
    let k0 = big_p * big_p - 2.0 - mu * q * q;
    let k1 = 1.0 - 2.0 * mu * (1.0 - inv2);
    let k2 = -mu * inv2;
    (sigma0 * k2 + k1) * sigma0 + k0
}

/// `Λ_μ` through `c_from_sigma` and the `a₂`, `a₃` closed forms.
pub fn lambda_mu_via_coeffs(pp: PoleParam, s: SchurPair, mu: f64) -> Result<C64> {
    let c = c_from_sigma(pp, s)?;
    Ok(lambda_mu(&a23_from_c(pp, c)?, mu))
}
