//! Brute-force maximization over the closed unit disk: a polar grid scan
//! followed by one coordinate-wise golden-section pass around the best node.
//!
//! This is the oracle side of every closed-form check; it shares no code
//! with the closed forms it verifies.

use core::f64::consts::TAU;

use crate::C64;

const GOLDEN_ITERS: usize = 50;
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Result of [`disk_max`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskMax {
    pub value: f64,
    pub argmax: C64,
}

/// Maximizes `f` over `{r e^{iθ} : 0 <= r <= 1}`.
///
/// The grid is `r_i = i/(n_radial-1)`, `θ_j = 2πj/n_angular`. The first
/// (lexicographically smallest) index attaining the grid maximum seeds a
/// golden-section pass in `r` and then in `θ`, 50 iterations each.
pub fn disk_max<F>(f: F, n_radial: usize, n_angular: usize) -> DiskMax
where
    F: Fn(C64) -> f64,
{
    assert!(n_radial >= 2 && n_angular >= 1, "grid too small");
    let dr = 1.0 / (n_radial - 1) as f64;
    let dt = TAU / n_angular as f64;
    let point = |r: f64, t: f64| C64::new(r * libm::cos(t), r * libm::sin(t));

    // Unit vectors once; the scan is the hot loop.
    let dirs: alloc::vec::Vec<C64> = (0..n_angular).map(|j| point(1.0, j as f64 * dt)).collect();

    let mut best = f64::NEG_INFINITY;
    let mut best_idx = (0usize, 0usize);
    for i in 0..n_radial {
        let r = i as f64 * dr;
        if i == 0 {
            let v = f(C64::new(0.0, 0.0));
            if v > best {
                best = v;
                best_idx = (0, 0);
            }
            continue;
        }
        for (j, d) in dirs.iter().enumerate() {
            let v = f(d * r);
            if v > best {
                best = v;
                best_idx = (i, j);
            }
        }
    }

    let (i, j) = best_idx;
    let r0 = i as f64 * dr;
    let t0 = j as f64 * dt;
    let mut out = DiskMax {
        value: best,
        argmax: point(r0, t0),
    };

    let r_lo = if i == 0 { 0.0 } else { r0 - dr };
    let r_hi = if i + 1 >= n_radial { 1.0 } else { r0 + dr };
    let (r1, v1) = golden_max(|r| f(point(r, t0)), r_lo, r_hi, r0, best);
    if v1 > out.value {
        out = DiskMax {
            value: v1,
            argmax: point(r1, t0),
        };
    }
    let (t1, v2) = golden_max(|t| f(point(r1, t)), t0 - dt, t0 + dt, t0, v1);
    if v2 > out.value {
        out = DiskMax {
            value: v2,
            argmax: point(r1, t1),
        };
    }
    out
}

/// Golden-section search for a maximum on `[lo, hi]`, returning the best
/// point seen (never worse than the seed `(x0, f0)`).
fn golden_max<G>(g: G, lo: f64, hi: f64, x0: f64, f0: f64) -> (f64, f64)
where
    G: Fn(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let mut best = (x0, f0);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = g(c);
    let mut fd = g(d);
    for _ in 0..GOLDEN_ITERS {
        if fc > best.1 {
            best = (c, fc);
        }
        if fd > best.1 {
            best = (d, fd);
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = g(d);
        }
    }
    if fc > best.1 {
        best = (c, fc);
    }
    if fd > best.1 {
        best = (d, fd);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_one_minus_r2() {
        let m = disk_max(|z| 1.0 - z.norm_sqr(), 101, 256);
        assert_eq!(m.value, 1.0);
        assert_eq!(m.argmax, C64::new(0.0, 0.0));
    }

    #[test]
    fn refinement_finds_off_grid_peak() {
        let target = C64::new(0.123_456, -0.345_678);
        let m = disk_max(|z| -(z - target).norm_sqr(), 21, 32);
        assert!(m.value > -1e-5, "{}", m.value);
    }

    #[test]
    fn golden_on_parabola() {
        let (x, v) = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 0.0, -0.09);
        assert!((x - 0.3).abs() < 1e-8);
        assert!(v > -1e-15);
    }
}
