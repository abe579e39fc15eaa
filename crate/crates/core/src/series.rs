//! Truncated Taylor series with complex coefficients.
//!
//! A series of order `N` stores the coefficients of `z⁰ … z^{N-1}`. Every
//! operation computes its result's coefficients exactly (up to rounding)
//! from the operands' stored coefficients, and binary operations truncate
//! to the smaller order.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, Mul, Neg, Sub};

use crate::numeric::modulus;
use crate::{Error, Result, C64};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<C64>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![ZERO; order],
        }
    }

    pub fn constant(c: C64, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// The series of `z`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = ONE;
        }
        s
    }

    /// Takes `coeffs` as the first `coeffs.len()` coefficients.
    pub fn from_coeffs(coeffs: Vec<C64>) -> Self {
        PowerSeries { coeffs }
    }

    /// Builds an order-`order` series from a coefficient function.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C64) -> Self {
        PowerSeries {
            coeffs: (0..order).map(f).collect(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    #[inline]
    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of `zⁿ`; zero beyond the truncation order.
    #[inline]
    pub fn coeff(&self, n: usize) -> C64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order);
        self
    }

    pub fn scale(&self, k: C64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Multiplies by `z`, dropping the top coefficient.
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| if i == 0 { ZERO } else { self.coeffs[i - 1] })
    }

    /// Horner evaluation of the stored partial sum.
    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// `f / g`, requires `g(0) != 0`.
    pub fn div(&self, g: &PowerSeries) -> Result<Self> {
        let n = self.order().min(g.order());
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let g0 = g.coeffs[0];
        if g0 == ZERO {
            return Err(Error::SeriesDivision);
        }
        let mut q = vec![ZERO; n];
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= g.coeffs[j] * q[k - j];
            }
            q[k] = acc / g0;
        }
        Ok(PowerSeries { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::constant(ONE, self.order()).div(self)
    }

    /// Termwise antiderivative vanishing at 0, kept at the same order.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| if i == 0 { ZERO } else { self.coeffs[i - 1] / i as f64 })
    }

    /// Termwise derivative; the result has order `order - 1`.
    pub fn derivative(&self) -> Self {
        let n = self.order().saturating_sub(1);
        Self::from_fn(n, |i| self.coeffs[i + 1] * (i + 1) as f64)
    }

    /// `exp(s)` from the recurrence `E' = E·s'`.
    pub fn exp(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        let mut e = vec![ZERO; n];
        e[0] = self.coeffs[0].exp();
        for m in 1..n {
            let mut acc = ZERO;
            for k in 1..=m {
                acc += self.coeffs[k] * (k as f64) * e[m - k];
            }
            e[m] = acc / m as f64;
        }
        PowerSeries { coeffs: e }
    }

    /// `max_n |c_n|`.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|&c| modulus(c)).fold(0.0, f64::max)
    }

    /// `max_n |self_n - other_n|` over the common order.
    pub fn max_abs_diff(&self, other: &PowerSeries) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| modulus(a - b))
            .fold(0.0, f64::max)
    }
}

/// `Σ_{n >= order} |z|ⁿ`, the truncation error bound for series whose
/// coefficients are bounded by 1.
pub fn geometric_tail(abs_z: f64, order: usize) -> f64 {
    assert!(abs_z < 1.0);
    libm::pow(abs_z, order as f64) / (1.0 - abs_z)
}

impl Index<usize> for PowerSeries {
    type Output = C64;
    fn index(&self, n: usize) -> &C64 {
        &self.coeffs[n]
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |i| self.coeffs[i] + rhs.coeffs[i])
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |i| self.coeffs[i] - rhs.coeffs[i])
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(-ONE)
    }
}

impl Add<C64> for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, k: C64) -> PowerSeries {
        let mut out = self.clone();
        if let Some(c0) = out.coeffs.first_mut() {
            *c0 += k;
        }
        out
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |k| {
            (0..=k).fold(ZERO, |acc, j| acc + self.coeffs[j] * rhs.coeffs[k - j])
        })
    }
}

/// Composition `outer ∘ inner` of truncated series.
pub trait Compose {
    fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries>;
}

impl Compose for PowerSeries {
    /// Horner in series arithmetic; needs `inner(0) = 0` so that only the
    /// stored coefficients of `self` contribute below the truncation order.
    fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        if self.order() != inner.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: inner.order(),
            });
        }
        let n = self.order();
        if n == 0 {
            return Ok(PowerSeries::zero(0));
        }
        if inner.coeffs[0] != ZERO {
            return Err(Error::UnsupportedComposition);
        }
        let mut acc = PowerSeries::zero(n);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + c;
        }
        Ok(acc)
    }
}

/// `outer ∘ inner`; see the [`Compose`] impls for what each outer map allows.
pub fn compose_series<O: Compose + ?Sized>(outer: &O, inner: &PowerSeries) -> Result<PowerSeries> {
    outer.compose(inner)
}
