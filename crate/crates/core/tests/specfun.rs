mod common;

use common::oracles::{I_NORM, J_NORM, LAGUERRE, LOG_GAMMA};
use common::rel_err;
use fka::specfun::*;
use fka::C64;
use std::f64::consts::PI;

#[test]
fn log_gamma_examples() {
    assert!(log_gamma(1.0).abs() < 1e-15);
    assert!((log_gamma(0.5) - 0.5 * PI.ln()).abs() < 1e-14);
    assert!(rel_err(log_gamma(5.0), 24f64.ln()) < 1e-13);
    assert!(try_log_gamma(0.0).is_err());
    assert!(try_log_gamma(-1.5).is_err());
}

#[test]
fn log_gamma_matches_oracle() {
    for &(x, want) in LOG_GAMMA {
        let got = log_gamma(x);
        let err = if want.abs() < 1.0 { (got - want).abs() } else { rel_err(got, want) };
        assert!(err < 1e-13, "lnGamma({x}) = {got}, want {want}");
    }
}

#[test]
fn laguerre_examples() {
    for &(lam, t) in &[(0.3, 2.0), (5.0, -1.0), (-0.5, 40.0)] {
        assert_eq!(laguerre(0, lam, t).unwrap(), 1.0);
        assert!((laguerre(1, lam, t).unwrap() - (lam + 1.0 - t)).abs() < 1e-14);
        let l2 = laguerre(2, 0.0, t).unwrap();
        assert!((l2 - (1.0 - 2.0 * t + 0.5 * t * t)).abs() < 1e-12 * (1.0 + t * t));
    }
    assert!(laguerre(3, -1.0, 0.5).is_err());
    assert!(laguerre(65, 0.0, 0.5).is_err());
}

#[test]
fn laguerre_matches_oracle_and_sum() {
    for &(ell, lam, t, want) in LAGUERRE {
        let got = laguerre(ell, lam, t).unwrap();
        // near a root only absolute accuracy is meaningful
        let scale = laguerre(ell, lam, -t.abs()).unwrap().abs();
        assert!((got - want).abs() <= 1e-12 * scale.max(want.abs()), "L_{ell}^{lam}({t})");
    }
    for ell in 0..=8 {
        for &t in &[0.0, 0.7, 3.0, 9.5] {
            let a = laguerre(ell, 1.3, t).unwrap();
            let b = laguerre_sum(ell, 1.3, t).unwrap();
            assert!((a - b).abs() < 1e-10 * (1.0 + b.abs()));
        }
    }
}

#[test]
fn bessel_j_examples() {
    for &nu in &[-0.7, 0.0, 1.5, 10.0] {
        let want = (-log_gamma(nu + 1.0)).exp();
        assert!(rel_err(bessel_j_norm(nu, 0.0).unwrap(), want) < 1e-14);
    }
    for &w in &[0.3f64, 5.0, 13.0, 20.0, 31.0, 400.0, 9000.0] {
        let half = 2.0 / PI.sqrt() * w.sin() / w;
        let mhalf = w.cos() / PI.sqrt();
        assert!((bessel_j_norm(0.5, w).unwrap() - half).abs() < 1e-12 * (1.0 / w).max(1e-3));
        assert!((bessel_j_norm(-0.5, w).unwrap() - mhalf).abs() < 1e-12);
    }
    assert!(bessel_j_norm(-1.0, 1.0).is_err());
}

#[test]
fn bessel_j_matches_oracle() {
    for &(nu, w, want) in J_NORM {
        let got = bessel_j_norm(nu, w).unwrap();
        // scale: envelope of J~ near w, so zeros of J do not blow up the relative error
        let env = (0.5 * w).powf(-nu) * (2.0 / (PI * w.max(1.0))).sqrt();
        let scale = want.abs().max(env.min(1.0 / (nu + 1.0).max(1.0)) * 1e-3);
        assert!((got - want).abs() <= 1e-10 * scale.max(want.abs()), "J~_{nu}({w}) = {got}, want {want}");
    }
}

#[test]
fn bessel_i_examples() {
    for &lam in &[-0.6, 0.0, 2.5] {
        let want = (-log_gamma(lam + 1.0)).exp();
        assert!(rel_err(bessel_i_norm(lam, C64::new(0.0, 0.0)).unwrap().re, want) < 1e-14);
    }
    for &w in &[C64::new(0.5, 0.2), C64::new(30.0, 5.0), C64::new(-60.0, 40.0), C64::new(3.0, -90.0)] {
        let want = 2.0 / PI.sqrt() * w.sinh() / w;
        let got = bessel_i_norm(0.5, w).unwrap();
        assert!((got - want).norm() <= 1e-10 * want.norm().max(w.re.abs().exp() / w.norm()));
    }
    assert!(bessel_i_norm(-1.2, C64::new(1.0, 0.0)).is_err());
}

#[test]
fn bessel_i_matches_oracle_and_bound() {
    for &(lam, re, im, vr, vi) in I_NORM {
        let w = C64::new(re, im);
        let got = bessel_i_norm(lam, w).unwrap();
        let want = C64::new(vr, vi);
        let bound = re.abs().exp() * (-log_gamma(lam + 1.0)).exp();
        assert!((got - want).norm() <= 1e-10 * bound, "I~_{lam}({w}) = {got}, want {want}");
        assert!(got.norm() <= bound * (1.0 + 1e-12));
    }
}
