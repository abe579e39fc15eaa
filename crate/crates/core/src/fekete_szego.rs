//! Sharp bound `Φ(P, μ) = max |a₃ - μa₂²|` over concave functions with a
//! pole at `p`, its `μ`-thresholds, and two independent routes to the same
//! value: the reduction to [`y_closed`] and a grid search over `σ₀`.

use alloc::vec::Vec;

use crate::concave::lambda_mu_sigma0_part;
use crate::grid::disk_max;
use crate::numeric::{big_p_star, big_p_two, modulus, sqrt, v_poly};
use crate::quad_max::{y_closed, QuadCoeffs};
use crate::{Error, PoleParam, Result};

/// Every `μ`-threshold at a given `P`.
///
/// `mu3_minus`/`mu3_plus` are present iff `P >= P₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub big_p: f64,
    /// `1/2 - 1/(3P)`
    pub mu1: f64,
    /// `P(3P + 2)/(6(P² - 2))`
    pub mu1_prime: f64,
    /// Roots of `H`.
    pub mu0_minus: f64,
    pub mu0_plus: f64,
    /// `min(μ₀⁻, μ₁')`
    pub mu2: f64,
    /// Roots of `F`.
    pub mu3_minus: Option<f64>,
    pub mu3_plus: Option<f64>,
    /// Roots of `G`; the bound uses `μ₄ = μ₄⁺`.
    pub mu4_minus: f64,
    pub mu4_plus: f64,
    /// Sign change of `a`: `(P² - 2)/(P - 1/P)²`.
    pub mu_a: f64,
    /// Sign change of `b`: `P/(2(P - 1/P))`.
    pub mu_b: f64,
    pub big_p_star: f64,
    pub big_p_two: f64,
}

impl Thresholds {
    #[inline]
    pub fn mu4(&self) -> f64 {
        self.mu4_plus
    }
}

pub fn thresholds(pp: PoleParam) -> Thresholds {
    let big_p = pp.big_p();
    let s = big_p * big_p;
    let q = big_p - 1.0 / big_p;
    let p_star = big_p_star();
    let p_two = big_p_two();

    let mu1 = 0.5 - 1.0 / (3.0 * big_p);
    let mu1_prime = big_p * (3.0 * big_p + 2.0) / (6.0 * (s - 2.0));

    // Smaller roots via Vieta to avoid cancellation at large P.
    let h_disc = 16.0 * s * s * s * s + 8.0 * s * s * s - 543.0 * s * s + 1160.0 * s + 16.0;
    let mu0_plus = (4.0 + s + 4.0 * s * s + sqrt(h_disc)) / 72.0;
    let mu0_minus = s * (s - 2.0) / (9.0 * mu0_plus);
    let mu2 = if big_p <= p_star { mu0_minus } else { mu1_prime };

    let (mu3_minus, mu3_plus) = if big_p >= p_two {
        let disc = v_poly(big_p).max(0.0);
        let den = 4.0 * (s - 1.0) * (s - 2.0) * (s - 2.0);
        let plus = s * (3.0 * s * s - 12.0 * s + 14.0 + sqrt(disc)) / den;
        let minus = s * s / (2.0 * (s - 1.0) * (s - 2.0) * plus);
        (Some(minus), Some(plus))
    } else {
        (None, None)
    };

    let g_disc = s * s * s * s - 12.0 * s * s + 16.0 * s + 4.0;
    let mu4_plus = (3.0 * s * s - 4.0 * s - 2.0 + sqrt(g_disc)) / (4.0 * s * (s - 1.0));
    let mu4_minus = (s - 2.0) / (2.0 * (s - 1.0) * mu4_plus);

    Thresholds {
        big_p,
        mu1,
        mu1_prime,
        mu0_minus,
        mu0_plus,
        mu2,
        mu3_minus,
        mu3_plus,
        mu4_minus,
        mu4_plus,
        mu_a: (s - 2.0) / (q * q),
        mu_b: big_p / (2.0 * q),
        big_p_star: p_star,
        big_p_two: p_two,
    }
}

/// Which closed form of `Φ` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiBranch {
    /// `μ <= μ₁`: `(1 - μ)P² - 1`
    LinearLow,
    /// `μ₁ <= μ <= μ₂`: `-(P³ - 2P + 3)/3 + (P + 2)²(2P - 1)²/(12(P + 3μ))`
    RationalMid,
    /// `P² - 3 - μ(P² - 4 + 4P⁻²)`
    PsiLinear,
    /// `(1 - μ)P(P² - 2)·sqrt((P² - 4μ)/(4μ((1 - μ)(P² - 1)² - 1)))`
    PsiSqrt,
    /// `μ >= μ₄`: `(μ - 1)P² + 1`
    LinearHigh,
}

impl PhiBranch {
    pub const ALL: [PhiBranch; 5] = [
        PhiBranch::LinearLow,
        PhiBranch::RationalMid,
        PhiBranch::PsiLinear,
        PhiBranch::PsiSqrt,
        PhiBranch::LinearHigh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PhiBranch::LinearLow => "LinearLow",
            PhiBranch::RationalMid => "RationalMid",
            PhiBranch::PsiLinear => "PsiLinear",
            PhiBranch::PsiSqrt => "PsiSqrt",
            PhiBranch::LinearHigh => "LinearHigh",
        }
    }
}

/// Evaluates one branch formula regardless of whether it is the active one.
pub fn branch_formula(pp: PoleParam, mu: f64, branch: PhiBranch) -> Result<f64> {
    let big_p = pp.big_p();
    let s = big_p * big_p;
    Ok(match branch {
        PhiBranch::LinearLow => (1.0 - mu) * s - 1.0,
        PhiBranch::RationalMid => {
            let k = (big_p + 2.0) * (2.0 * big_p - 1.0);
            -(s * big_p - 2.0 * big_p + 3.0) / 3.0 + k * k / (12.0 * (big_p + 3.0 * mu))
        }
        PhiBranch::PsiLinear => s - 3.0 - mu * (s - 4.0 + 4.0 / s),
        PhiBranch::PsiSqrt => {
            let den = 4.0 * mu * ((1.0 - mu) * (s - 1.0) * (s - 1.0) - 1.0);
            let num = s - 4.0 * mu;
            if !(den > 0.0) || num < 0.0 {
                return Err(Error::Internal("PsiSqrt radicand is not positive"));
            }
            (1.0 - mu) * big_p * (s - 2.0) * sqrt(num / den)
        }
        PhiBranch::LinearHigh => (mu - 1.0) * s + 1.0,
    })
}

/// The active branch at `mu`. Ties go to the earlier branch.
pub fn phi_branch(th: &Thresholds, mu: f64) -> PhiBranch {
    if mu <= th.mu1 {
        PhiBranch::LinearLow
    } else if mu <= th.mu2 {
        PhiBranch::RationalMid
    } else if mu <= th.mu4() {
        let linear = match (th.mu3_minus, th.mu3_plus) {
            (Some(lo), Some(hi)) => {
                (th.big_p <= th.big_p_star && lo <= mu && mu <= hi)
                    || (th.big_p >= th.big_p_star && th.mu2 <= mu && mu <= hi)
            }
            _ => false,
        };
        if linear {
            PhiBranch::PsiLinear
        } else {
            PhiBranch::PsiSqrt
        }
    } else {
        PhiBranch::LinearHigh
    }
}

/// `Φ(P, μ)` from the piecewise closed form.
pub fn phi_closed(pp: PoleParam, mu: f64) -> Result<(f64, PhiBranch)> {
    phi_closed_with(pp, &thresholds(pp), mu)
}

/// As [`phi_closed`] with precomputed thresholds.
pub fn phi_closed_with(pp: PoleParam, th: &Thresholds, mu: f64) -> Result<(f64, PhiBranch)> {
    let branch = phi_branch(th, mu);
    Ok((branch_formula(pp, mu, branch)?, branch))
}

/// `a = 3P[P² - 2 - μ(P - 1/P)²]`, `b = 3P - 6μ(P - 1/P)`, `c = -3μ/P`.
pub fn abc_from(pp: PoleParam, mu: f64) -> QuadCoeffs {
    let big_p = pp.big_p();
    let q = big_p - 1.0 / big_p;
    QuadCoeffs {
        a: 3.0 * big_p * (big_p * big_p - 2.0 - mu * q * q),
        b: 3.0 * big_p - 6.0 * mu * q,
        c: -3.0 * mu / big_p,
    }
}

/// `Φ = Y(a, b, c)/(3P)`.
pub fn phi_via_y(pp: PoleParam, mu: f64) -> f64 {
    y_closed(abc_from(pp, mu)).0 / (3.0 * pp.big_p())
}

/// Grid maximum over `σ₀` of `|Λ_μ(σ₀, σ₁ = 0)| + (1 - |σ₀|²)/(3P)`, which is
/// `max |Λ_μ|` once `σ₁` is rotated onto the unit circle.
pub fn phi_oracle(pp: PoleParam, mu: f64, n_radial: usize, n_angular: usize) -> f64 {
    assert!(n_radial >= 101 && n_angular >= 256, "grid too small for phi_oracle");
    let w = 1.0 / (3.0 * pp.big_p());
    disk_max(
        |s0| modulus(lambda_mu_sigma0_part(pp, s0, mu)) + (1.0 - s0.norm_sqr()) * w,
        n_radial,
        n_angular,
    )
    .value
}

/// A threshold where the active branch changes, with the branches on each side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchJoin {
    pub name: &'static str,
    pub mu: f64,
    pub left: PhiBranch,
    pub right: PhiBranch,
}

/// The branch changes along the `μ` axis at fixed `P`, in increasing `μ`.
pub fn branch_joins(th: &Thresholds) -> Vec<BranchJoin> {
    use PhiBranch::*;
    let mut joins = Vec::with_capacity(5);
    let join = |name, mu, left, right| BranchJoin { name, mu, left, right };
    joins.push(join("mu1", th.mu1, LinearLow, RationalMid));
    let after_mu2 = if th.big_p >= th.big_p_star && th.mu3_plus.is_some() {
        PsiLinear
    } else {
        PsiSqrt
    };
    joins.push(join("mu2", th.mu2, RationalMid, after_mu2));
    if let (Some(lo), Some(hi)) = (th.mu3_minus, th.mu3_plus) {
        if th.big_p < th.big_p_star {
            joins.push(join("mu3m", lo, PsiSqrt, PsiLinear));
        }
        joins.push(join("mu3p", hi, PsiLinear, PsiSqrt));
    }
    joins.push(join("mu4", th.mu4(), PsiSqrt, LinearHigh));
    joins
}

/// One row of the threshold table: `P, μ₁, μ₂, μ₃⁻, μ₃⁺, μ₄`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdRow {
    pub big_p: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub mu3_minus: Option<f64>,
    pub mu3_plus: Option<f64>,
    pub mu4: f64,
}

/// Thresholds at `P = P_min + k·step` for every such `P <= P_max`.
pub fn scan_thresholds(p_min: f64, p_max: f64, step: f64) -> Result<Vec<ThresholdRow>> {
    if !(p_min > 2.0 && p_min < p_max) {
        return Err(Error::Domain("need 2 < P_min < P_max"));
    }
    if !(step > 0.0) {
        return Err(Error::Domain("step must be positive"));
    }
    let n = libm::floor((p_max - p_min) / step + 1e-9) as usize + 1;
    (0..n)
        .map(|k| {
            let pp = PoleParam::from_big_p(p_min + k as f64 * step)?;
            let th = thresholds(pp);
            Ok(ThresholdRow {
                big_p: pp.big_p(),
                mu1: th.mu1,
                mu2: th.mu2,
                mu3_minus: th.mu3_minus,
                mu3_plus: th.mu3_plus,
                mu4: th.mu4(),
            })
        })
        .collect()
}
