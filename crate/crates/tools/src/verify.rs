//! Seeded verification suites comparing closed forms against independent
//! computations.

use std::fmt;

use clap::ValueEnum;
use concave_fs_core::bodies::{
    boundary_realization, c_from_sigma, classify_boundary, sigma_from_c, x1_contains, BoundaryClass, CoeffPair,
    SchurPair, BOUNDARY_TOL,
};
use concave_fs_core::concave::{
    a23_from_c, coeffs_from_fprime, fprime_series, lambda_mu, schwarzian_at_zero, REP_ORDER,
};
use concave_fs_core::fekete_szego::{phi_closed, phi_oracle, phi_via_y};
use concave_fs_core::quad_max::{y_closed, y_oracle};
use concave_fs_core::regions::{
    a_n_extremal, hankel2_extremal, lambda1_extremal, lambda1_h_form, omega_contains, p0_constant, wp_witness,
};
use concave_fs_core::C64;
use rand::Rng;
use rayon::prelude::*;

use crate::format::sig9;
use crate::sampling::{self, sample_rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Quadmax,
    Phi,
    Rep,
    Bodies,
    Regions,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Quadmax => "quadmax",
            Suite::Phi => "phi",
            Suite::Rep => "rep",
            Suite::Bodies => "bodies",
            Suite::Regions => "regions",
            Suite::All => "all",
        }
    }
}

/// One measured quantity: a deviation against a tolerance, or a count of
/// failed yes/no checks when `tol` is `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Metric {
    pub label: &'static str,
    pub samples: usize,
    pub max_dev: f64,
    pub tol: Option<f64>,
    pub failures: usize,
}

impl Metric {
    pub fn deviations(label: &'static str, devs: &[f64], tol: f64) -> Self {
        // NaN counts as a failure and poisons the maximum.
        let failures = devs.iter().filter(|d| d.is_nan() || **d > tol).count();
        let max_dev = devs.iter().fold(
            0.0f64,
            |m, &d| if d.is_nan() || m.is_nan() { f64::NAN } else { m.max(d) },
        );
        Metric {
            label,
            samples: devs.len(),
            max_dev,
            tol: Some(tol),
            failures,
        }
    }

    pub fn flags(label: &'static str, ok: &[bool]) -> Self {
        let failures = ok.iter().filter(|b| !**b).count();
        Metric {
            label,
            samples: ok.len(),
            max_dev: 0.0,
            tol: None,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        match self.tol {
            Some(tol) => write!(
                f,
                "{} samples={} max_dev={} tol={tol:e} failures={} {verdict}",
                self.label,
                self.samples,
                sig9(self.max_dev),
                self.failures
            ),
            None => write!(
                f,
                "{} samples={} failures={} {verdict}",
                self.label, self.samples, self.failures
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub metrics: Vec<Metric>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.metrics.iter().all(Metric::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.metrics {
            writeln!(f, "{}: {m}", self.suite.name())?;
        }
        write!(
            f,
            "{}: {}",
            self.suite.name(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

pub fn run_suite(suite: Suite, samples: usize, seed: u64) -> Vec<SuiteReport> {
    match suite {
        Suite::Quadmax => vec![quadmax(samples, seed, 801, 2048)],
        Suite::Phi => vec![phi(samples, seed)],
        Suite::Rep => vec![rep(samples, seed)],
        Suite::Bodies => vec![bodies(samples, seed)],
        Suite::Regions => vec![regions(samples, seed)],
        Suite::All => [Suite::Quadmax, Suite::Phi, Suite::Rep, Suite::Bodies, Suite::Regions]
            .into_iter()
            .flat_map(|s| run_suite(s, samples, seed))
            .collect(),
    }
}

fn par_samples<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

/// `Y(a, b, c)` against the grid oracle for `(a, b, c)` uniform on `[-5, 5]³`.
pub fn quadmax(samples: usize, seed: u64, n_radial: usize, n_angular: usize) -> SuiteReport {
    let rows = par_samples(samples, |i| {
        let q = sampling::triple(&mut sample_rng(seed, i), 5.0);
        let (y, _) = y_closed(q);
        let lb = (q.a.abs() + 1.0)
            .max((q.a + q.b + q.c).abs())
            .max((q.a - q.b + q.c).abs());
        ((y - y_oracle(q, n_radial, n_angular)).abs(), y >= lb - 1e-12)
    });
    let (devs, lbs): (Vec<f64>, Vec<bool>) = rows.into_iter().unzip();
    SuiteReport {
        suite: Suite::Quadmax,
        metrics: vec![
            Metric::deviations("closed-vs-oracle", &devs, 1e-4),
            Metric::flags("lower-bounds", &lbs),
        ],
    }
}

/// `Φ` closed form against the `Y` reduction and the disk oracle for
/// `P ∈ (2, 8]`, `μ ∈ [-0.5, 1.5]`.
pub fn phi(samples: usize, seed: u64) -> SuiteReport {
    let rows = par_samples(samples, |i| {
        let mut rng = sample_rng(seed, i);
        let pp = sampling::big_p(&mut rng, 8.0);
        let mu = rng.random_range(-0.5..=1.5);
        match phi_closed(pp, mu) {
            Ok((v, _)) => ((v - phi_via_y(pp, mu)).abs(), (v - phi_oracle(pp, mu, 401, 1024)).abs()),
            Err(_) => (f64::NAN, f64::NAN),
        }
    });
    let (ys, os): (Vec<f64>, Vec<f64>) = rows.into_iter().unzip();
    SuiteReport {
        suite: Suite::Phi,
        metrics: vec![
            Metric::deviations("closed-vs-reduction", &ys, 1e-10),
            Metric::deviations("closed-vs-oracle", &os, 1e-4),
        ],
    }
}

/// Representation-formula coefficients against the closed forms, for maps
/// `T_p ∘ ψ ∘ T_p`, alternating rotations and Blaschke products.
pub fn rep(samples: usize, seed: u64) -> SuiteReport {
    let rows = par_samples(samples, |i| {
        let mut rng = sample_rng(seed, i);
        let pp = sampling::pole_p(&mut rng, 0.05, 0.9);
        let map = sampling::conjugated_map(&mut rng, pp, i % 2 == 1);
        let run = || -> Option<(f64, f64)> {
            let phi = map.series(REP_ORDER).ok()?;
            let fp = fprime_series(pp, &phi, REP_ORDER).ok()?;
            let series = coeffs_from_fprime(&fp);
            let closed = a23_from_c(
                pp,
                CoeffPair {
                    c0: phi.coeff(0),
                    c1: phi.coeff(1),
                },
            )
            .ok()?;
            let dev = (series.a2 - closed.a2).norm().max((series.a3 - closed.a3).norm());
            let s = schwarzian_at_zero(&fp).ok()?;
            Some((dev, (lambda_mu(&series, 1.0) - s / 6.0).norm()))
        };
        run().unwrap_or((f64::NAN, f64::NAN))
    });
    let (coeffs, schwarz): (Vec<f64>, Vec<f64>) = rows.into_iter().unzip();
    SuiteReport {
        suite: Suite::Rep,
        metrics: vec![
            Metric::deviations("series-vs-closed-a2-a3", &coeffs, 1e-8),
            Metric::deviations("lambda1-vs-schwarzian", &schwarz, 1e-8),
        ],
    }
}

pub struct BodySample {
    pub member: bool,
    pub round_trip: f64,
    /// `|a₃ - P² + 2|`.
    pub a3_offset: f64,
    pub class_ok: bool,
    pub realization: f64,
}

/// Checks on one seeded Schur pair: membership of its coefficient pair,
/// the round trip on an interior pair, the `a₃` disk, and classification
/// plus realization of a boundary pair.
pub fn body_sample(seed: u64, i: usize) -> BodySample {
    let mut rng = sample_rng(seed, i);
    let pp = sampling::pole_p(&mut rng, 0.02, 0.98);
    let s = sampling::schur_pair(&mut rng);
    let c = c_from_sigma(pp, s);
    let member = c.as_ref().is_ok_and(|c| x1_contains(pp, *c, BOUNDARY_TOL));
    let interior = SchurPair {
        sigma0: sampling::in_disk(&mut rng, 0.99),
        ..s
    };
    let round_trip = c_from_sigma(pp, interior)
        .and_then(|c| Ok((c, sigma_from_c(pp, c)?)))
        .and_then(|(c, back)| Ok((c, c_from_sigma(pp, back)?)))
        .map(|(c, c2)| (c.c0 - c2.c0).norm().max((c.c1 - c2.c1).norm()))
        .unwrap_or(f64::NAN);
    let big_p = pp.big_p();
    let a3_offset = c
        .and_then(|c| a23_from_c(pp, c))
        .map(|a| (a.a3 - C64::new(big_p * big_p - 2.0, 0.0)).norm())
        .unwrap_or(f64::NAN);
    let (boundary, expected) = if i.is_multiple_of(2) {
        (
            SchurPair {
                sigma0: sampling::on_circle(&mut rng),
                ..s
            },
            BoundaryClass::Automorphism,
        )
    } else {
        (
            SchurPair {
                sigma0: sampling::in_disk(&mut rng, 0.95),
                sigma1: sampling::on_circle(&mut rng),
            },
            BoundaryClass::Blaschke2,
        )
    };
    let (class_ok, realization) = match c_from_sigma(pp, boundary) {
        Ok(bc) => {
            let class_ok = matches!(classify_boundary(pp, bc, 1e-9), Ok(k) if k == expected);
            let realization = boundary_realization(pp, bc, 1e-9)
                .and_then(|m| m.series(4))
                .map(|g| (g.coeff(0) - bc.c0).norm().max((g.coeff(1) - bc.c1).norm()))
                .unwrap_or(f64::NAN);
            (class_ok, realization)
        }
        Err(_) => (false, f64::NAN),
    };
    BodySample {
        member,
        round_trip,
        a3_offset,
        class_ok,
        realization,
    }
}

pub fn bodies(samples: usize, seed: u64) -> SuiteReport {
    let rows = par_samples(samples, |i| body_sample(seed, i));
    let excess: Vec<f64> = rows.iter().map(|r| (r.a3_offset - 1.0).max(0.0)).collect();
    SuiteReport {
        suite: Suite::Bodies,
        metrics: vec![
            Metric::flags("x1-membership", &rows.iter().map(|r| r.member).collect::<Vec<_>>()),
            Metric::deviations(
                "round-trip",
                &rows.iter().map(|r| r.round_trip).collect::<Vec<_>>(),
                1e-10,
            ),
            Metric::deviations("a3-disk-excess", &excess, 1e-9),
            Metric::flags("boundary-class", &rows.iter().map(|r| r.class_ok).collect::<Vec<_>>()),
            Metric::deviations(
                "boundary-realization",
                &rows.iter().map(|r| r.realization).collect::<Vec<_>>(),
                1e-8,
            ),
        ],
    }
}

/// Relative deviations between the coefficient, Koebe and `h` forms of
/// `Λ₁(f_ζ)`, and between it and the Hankel determinant.
pub fn lambda1_forms(pp: concave_fs_core::PoleParam, zeta: C64) -> (f64, f64) {
    let run = || -> concave_fs_core::Result<(f64, f64)> {
        let a2 = a_n_extremal(pp, zeta, 2)?;
        let coeff = a_n_extremal(pp, zeta, 3)? - a2 * a2;
        let scale = coeff.norm().max(1.0);
        let koebe = (coeff - lambda1_extremal(pp, zeta)).norm();
        let h = (coeff - lambda1_h_form(pp, zeta)?).norm();
        let hankel = (coeff - hankel2_extremal(pp, zeta)?).norm();
        Ok((koebe.max(h) / scale, hankel / scale.max(a2.norm_sqr())))
    };
    run().unwrap_or((f64::NAN, f64::NAN))
}

pub fn regions(samples: usize, seed: u64) -> SuiteReport {
    let p0 = p0_constant();
    let rows = par_samples(samples, |i| {
        let mut rng = sample_rng(seed, i);
        let pp = sampling::pole_p(&mut rng, 0.2, 0.98);
        let zeta = sampling::in_disk(&mut rng, 1.0);
        let (identity, hankel) = lambda1_forms(pp, zeta);
        let witness_ok = match wp_witness(pp) {
            Some(w) => pp.p() > p0 && !omega_contains(pp, w.value, 1e-9),
            None => pp.p() <= p0,
        };
        (identity, hankel, witness_ok)
    });
    SuiteReport {
        suite: Suite::Regions,
        metrics: vec![
            Metric::deviations(
                "lambda1-three-forms",
                &rows.iter().map(|r| r.0).collect::<Vec<_>>(),
                1e-12,
            ),
            Metric::deviations(
                "hankel-coincidence",
                &rows.iter().map(|r| r.1).collect::<Vec<_>>(),
                1e-12,
            ),
            Metric::flags("witness", &rows.iter().map(|r| r.2).collect::<Vec<_>>()),
        ],
    }
}
