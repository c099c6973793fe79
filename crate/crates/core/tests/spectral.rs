use std::f64::consts::PI;

use fka::geometry::*;
use fka::spectral::*;
use fka::transform::*;
use fka::C64;

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn params() -> Vec<DeformationParams> {
    vec![
        DeformationParams::new(1, 0.0, 2.0).unwrap(),
        DeformationParams::new(1, 0.5, 1.0).unwrap(),
        DeformationParams::new(1, 1.5, 0.5).unwrap(),
        DeformationParams::new(3, 1.0, 2.0 / 3.0).unwrap(),
    ]
}

#[test]
fn mode_examples() {
    let p = DeformationParams::new(1, 0.5, 1.0).unwrap();
    let f = laguerre_mode(&p, 0, 1).bind(&p).unwrap();
    let lam = p.lambda(0);
    for r in [0.0, 0.3, 1.7, 4.0] {
        let want = (lam + 1.0 - 2.0 * r) * (-r).exp();
        assert!((f.eval(r).re - want).abs() < 1e-13);
    }
    let g = laguerre_mode(&p, 2, 0).bind(&p).unwrap();
    assert!((g.eval(2.0).re - (-2.0f64).exp()).abs() < 1e-15);
}

#[test]
fn mode_norms_against_quadrature() {
    let p = DeformationParams::new(1, 0.0, 2.0).unwrap();
    assert!((mode_norm_sq(&p, 0, 0) - PI.sqrt() / 2.0).abs() < 1e-14);
    for p in params() {
        let big_k = p.big_k();
        for m in 0..3 {
            let lam = p.lambda(m);
            for l in 0..=10 {
                let q = lp_norm_fn(&p, &laguerre_mode(&p, m, l).bind(&p).unwrap(), 2.0).unwrap();
                let n = mode_norm_sq(&p, m, l);
                assert!((q * q / big_k / n - 1.0).abs() < 1e-9, "{p} m={m} l={l}");
                let ratio = mode_norm_sq(&p, m, l + 1) / n;
                assert!((ratio - (l as f64 + lam + 1.0) / (l as f64 + 1.0)).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn modes_are_orthogonal() {
    for p in params() {
        // <mode_i, mode_j> through projection of mode_j
        for j in 0..=4 {
            let c = project(&p, &laguerre_mode(&p, 1, j), 8).unwrap();
            for (i, v) in c.coeffs.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((v - want).norm() < 1e-10, "{p} i={i} j={j}: {v}");
            }
            assert!(c.residual < 1e-8);
        }
    }
}

#[test]
fn ground_state_projection() {
    for p in params() {
        let a = p.a();
        let c = project(&p, &RadialProfile::exppow(1.0 / a), DEFAULT_L_MAX).unwrap();
        assert!((c.coeffs[0] - 1.0).norm() < 1e-12);
        assert!(c.coeffs[1..].iter().all(|v| v.norm() < 1e-12));
        assert!(c.residual <= 1e-8, "{p}: {}", c.residual);
    }
}

#[test]
fn parseval_with_residual() {
    for p in params() {
        for prof in
            [RadialProfile::gaussian(0.7), RadialProfile::exppow(0.5).with_m(1), RadialProfile::power_cutoff(0.2, 1.5)]
        {
            let c = project(&p, &prof, DEFAULT_L_MAX).unwrap();
            let n = lp_norm(&p, &prof, 2.0).unwrap();
            let lhs = c.energy(&p) + c.residual * c.residual;
            assert!((lhs / (n * n) - 1.0).abs() < 1e-6, "{p} {prof}: {lhs} vs {}", n * n);
        }
    }
}

#[test]
fn diagonal_transform() {
    let c = SpectralCoeffs {
        m: 0,
        coeffs: (0..6).map(|l| C64::new(l as f64 + 1.0, 0.5)).collect(),
        lambda_m: -0.5,
        a: 2.0,
        residual: 0.0,
    };
    let t = spectral_fka(&c);
    for (l, (u, v)) in c.coeffs.iter().zip(&t.coeffs).enumerate() {
        let s = if l % 2 == 0 { 1.0 } else { -1.0 };
        assert!((u * s - v).norm() < 1e-15);
    }
    let c1 = SpectralCoeffs { a: 1.0, ..c.clone() };
    assert!((spectral_fka(&c1).coeffs[0] - c1.coeffs[0]).norm() < 1e-15);
    // order 2q for a = q/q'
    for (a, q) in [(2.0, 2), (1.0, 1), (2.0 / 3.0, 2), (0.5, 1)] {
        for m in 0..3 {
            let mut x = SpectralCoeffs { a, m, ..c.clone() };
            let orig = x.clone();
            for _ in 0..2 * q {
                x = spectral_fka(&x);
            }
            for (u, v) in orig.coeffs.iter().zip(&x.coeffs) {
                assert!((u - v).norm() < 1e-12 * u.norm(), "a={a} m={m}");
            }
        }
    }
}

#[test]
fn laplacian_spectrum() {
    let p = DeformationParams::new(3, 0.5, 1.0).unwrap();
    // 2a l + 2m + 2k + N - 2 + a with k = 0.5, N = 3, a = 1
    assert_eq!(laplacian_eigenvalue(&p, 0, 0), 3.0);
    assert_eq!(laplacian_eigenvalue(&p, 2, 1), 9.0);
    assert_eq!(laplacian_eigenvalue(&p, 0, 1) - laplacian_eigenvalue(&p, 0, 0), 2.0);
}

#[test]
fn spectral_matches_hankel() {
    let spec = QuadratureSpec::default();
    let xi = grid(0.0, 5.0, 21);
    for p in params() {
        for m in 0..2 {
            let prof = RadialProfile::mixture(vec![
                C64::new(0.4, 0.0),
                C64::new(-0.3, 0.2),
                C64::new(0.0, 0.0),
                C64::new(0.1, -0.05),
            ])
            .with_m(m);
            let s = spectral_transform(&p, &prof, &xi, 8).unwrap();
            let h = fka_radial(&p, &prof, &xi, &spec).unwrap();
            let sup = h.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
            for (u, v) in s.values.iter().zip(&h.values) {
                assert!((u - v).norm() <= 1e-6 * sup, "{p} m={m}: {u} vs {v}");
            }
        }
        let err = spectral_transform(&p, &RadialProfile::gaussian(3.0), &xi, 8);
        assert!(err.is_err());
    }
}

#[test]
fn synthesize_roundtrip() {
    let p = DeformationParams::new(1, 0.5, 1.0).unwrap();
    let prof = RadialProfile::gaussian(0.4);
    let c = project(&p, &prof, DEFAULT_L_MAX).unwrap();
    let r = grid(0.0, 6.0, 31);
    let s = synthesize_on(&p, &c, &r).unwrap();
    let f = prof.bind(&p).unwrap();
    let err: f64 = r.iter().zip(&s).map(|(&x, v)| (f.eval(x) - v).norm()).fold(0.0, f64::max);
    assert!(err < 1e-2 && c.residual < 1e-2, "{err} {}", c.residual);
    let one = SpectralCoeffs { coeffs: vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)], ..c.clone() };
    let m1 = laguerre_mode(&p, 0, 1).bind(&p).unwrap();
    for (&x, v) in r.iter().zip(synthesize_on(&p, &one, &r).unwrap()) {
        assert!((m1.eval(x) - v).norm() < 1e-15);
    }
}
