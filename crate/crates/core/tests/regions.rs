mod common;

use concave_fs_core::regions::{
    a_n_extremal, cardioid_boundary, delta_r, hankel2_extremal, lambda1_extremal, lambda1_h_form, omega_boundary,
    omega_contains, p0_constant, unit_circle, wp_sample, wp_witness, HQuad,
};
use concave_fs_core::{PoleParam, C64};
use rand::Rng;

#[test]
fn lambda1_three_forms_agree() {
    let mut rng = common::rng(51);
    for _ in 0..500 {
        let pp = PoleParam::from_p(rng.random_range(0.2..0.98)).unwrap();
        let zeta = common::in_disk(&mut rng, 1.0);
        let a2 = a_n_extremal(pp, zeta, 2).unwrap();
        let a3 = a_n_extremal(pp, zeta, 3).unwrap();
        let coeff = a3 - a2 * a2;
        let koebe = lambda1_extremal(pp, zeta);
        let h = lambda1_h_form(pp, zeta).unwrap();
        let scale = coeff.norm().max(1.0);
        assert!((coeff - koebe).norm() <= 1e-12 * scale, "{coeff} vs {koebe}");
        assert!((coeff - h).norm() <= 1e-12 * scale, "{coeff} vs {h}");
        let hankel = hankel2_extremal(pp, zeta).unwrap();
        assert!(
            (hankel - coeff).norm() <= 1e-12 * scale.max(a2.norm_sqr()),
            "{hankel} vs {coeff}"
        );
    }
}

#[test]
fn containment_chain_around_p0() {
    let p0 = p0_constant();
    let below = PoleParam::from_p(p0 - 1e-3).unwrap();
    let cloud = wp_sample(below, 48, 128, 16);
    assert!(cloud.points.iter().all(|&w| omega_contains(below, w, 1e-9)));
    let above = PoleParam::from_p(p0 + 1e-3).unwrap();
    let w = wp_witness(above).expect("witness above p0");
    assert!(!omega_contains(above, w.value, 1e-9));
    assert!(wp_witness(below).is_none());
}

#[test]
fn omega_nesting() {
    for &p in &[0.35, 0.5, 0.7, 0.9] {
        let outer = omega_boundary(PoleParam::from_p(p).unwrap(), 720);
        for q in [p - 0.1, p - 0.2] {
            let qq = PoleParam::from_p(q).unwrap();
            assert!(outer.points.iter().all(|&w| omega_contains(qq, w, 1e-9)), "p={p} q={q}");
        }
    }
}

#[test]
fn figure_containments() {
    let card = cardioid_boundary(720);
    for &p in &[0.3, 0.5, 0.7, 0.9] {
        let pp = PoleParam::from_p(p).unwrap();
        assert!(card.points.iter().all(|&w| omega_contains(pp, w, 1e-9)));
        assert!(omega_boundary(pp, 720).points.iter().all(|w| w.norm() <= 1.0 + 1e-9));
    }
    assert!(unit_circle(64).points.iter().all(|w| (w.norm() - 1.0).abs() < 1e-15));
}

#[test]
fn distance_sharpness() {
    let mut rng = common::rng(52);
    for _ in 0..50 {
        let pp = PoleParam::from_p(rng.random_range(0.05..0.95)).unwrap();
        let h = HQuad::new(pp);
        let r = rng.random_range(0.0..1.0);
        let d = delta_r(pp, r).unwrap();
        let mut min = f64::INFINITY;
        for i in 0..90 {
            let zeta = C64::from_polar(1.0, std::f64::consts::TAU * i as f64 / 90.0);
            for j in 0..90 {
                let w = C64::from_polar(r, std::f64::consts::TAU * j as f64 / 90.0);
                min = min.min((h.eval(zeta) - h.eval(w)).norm());
            }
        }
        assert!(min >= d - 1e-9, "r={r}: {min} < {d}");
        let at_zero = (h.eval(C64::new(1.0, 0.0)) - h.eval(C64::new(r, 0.0))).norm();
        assert!((at_zero - d).abs() < 1e-12 * d.max(1.0));
    }
}
