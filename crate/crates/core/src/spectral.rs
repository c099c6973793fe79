//! Laguerre eigenbasis of the deformed oscillator and the diagonal transform.

use std::f64::consts::PI;

use crate::geometry::{lp_norm, moment_norm, DeformationParams, RadialFn, RadialProfile, Shape};
use crate::quad::gauss_laguerre;
use crate::specfun::{laguerre_all, log_gamma, LAGUERRE_MAX_DEGREE};
use crate::transform::{Path, TransformResult};
use crate::{FkaError, Result, C64};

pub const DEFAULT_L_MAX: usize = 32;
/// Residual below which an input counts as band-limited in ell.
pub const BAND_LIMIT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCoeffs {
    pub m: u32,
    pub coeffs: Vec<C64>,
    pub lambda_m: f64,
    /// a is kept so that the transform needs no parameters.
    pub a: f64,
    /// L^2 norm of the part of the input not captured by the coefficients.
    pub residual: f64,
}

impl SpectralCoeffs {
    /// K sum |c_l|^2 mode_norm_sq(l).
    pub fn energy(&self, params: &DeformationParams) -> f64 {
        let big_k = params.big_k();
        self.coeffs.iter().enumerate().map(|(l, c)| big_k * c.norm_sqr() * norm_sq(self.a, self.lambda_m, l)).sum()
    }

    pub fn is_band_limited(&self) -> bool {
        self.residual <= BAND_LIMIT_TOL
    }
}

fn check_lambda(params: &DeformationParams, m: u32) -> Result<f64> {
    let lam = params.lambda(m);
    if lam > -1.0 {
        Ok(lam)
    } else {
        Err(FkaError::Domain(format!("lambda(m) = {lam} must exceed -1")))
    }
}

/// Radial factor L_ell^{(lambda(m))}((2/a) r^a) e^{-r^a/a} with degree m.
pub fn laguerre_mode(_params: &DeformationParams, m: u32, ell: usize) -> RadialProfile {
    RadialProfile::laguerre_mode(ell).with_m(m)
}

fn norm_sq(a: f64, lam: f64, ell: usize) -> f64 {
    let l = ell as f64;
    ((lam + 1.0) * (a / 2.0).ln() - a.ln() + log_gamma(l + lam + 1.0) - log_gamma(l + 1.0)).exp()
}

/// int_0^inf mode^2 r^{a(lambda+1)-1} dr.
pub fn mode_norm_sq(params: &DeformationParams, m: u32, ell: usize) -> f64 {
    norm_sq(params.a(), params.lambda(m), ell)
}

/// F-eigenvalue of mode (ell, m).
pub fn eigenvalue(a: f64, m: u32, ell: usize) -> C64 {
    // reduce the phase mod 2 before multiplying by pi
    let t = (ell as f64 + m as f64 / a).rem_euclid(2.0);
    C64::from_polar(1.0, -PI * t)
}

/// Eigenvalue of -Delta_{k,a} on mode (ell, m).
pub fn laplacian_eigenvalue(params: &DeformationParams, m: u32, ell: usize) -> f64 {
    2.0 * params.a() * ell as f64 + 2.0 * m as f64 + 2.0 * params.k() + params.n() as f64 - 2.0 + params.a()
}

/// Coefficients c_l = <psi, mode_l> / mode_norm_sq(l) for l <= l_max.
pub fn project(params: &DeformationParams, profile: &RadialProfile, l_max: usize) -> Result<SpectralCoeffs> {
    if l_max > LAGUERRE_MAX_DEGREE {
        return Err(FkaError::Domain(format!("L_max above {LAGUERRE_MAX_DEGREE}")));
    }
    let m = profile.m;
    let lam = check_lambda(params, m)?;
    let a = params.a();
    let f = profile.bind(params)?;
    // u = (2/a) r^a turns the weight into u^lambda e^{-u}
    let rule = gauss_laguerre(2 * l_max + 8, lam);
    let mut acc = vec![C64::new(0.0, 0.0); l_max + 1];
    for (&u, &w) in rule.nodes.iter().zip(&rule.weights) {
        let r = (a * u / 2.0).powf(1.0 / a);
        let g = f.eval(r) * (0.5 * u).exp() * w;
        for (c, l) in acc.iter_mut().zip(laguerre_all(l_max, lam, u)) {
            *c += g * l;
        }
    }
    // <psi, mode_l> = (1/a)(a/2)^{lambda+1} sum w g L_l; dividing by the norm leaves l!/Gamma(l+lam+1)
    let coeffs: Vec<C64> = acc
        .into_iter()
        .enumerate()
        .map(|(l, c)| c * (log_gamma(l as f64 + 1.0) - log_gamma(l as f64 + lam + 1.0)).exp())
        .collect();
    let mut out = SpectralCoeffs { m, coeffs, lambda_m: lam, a, residual: 0.0 };
    out.residual = residual(params, profile, &out)?;
    Ok(out)
}

/// ||f - synthesize(c)||_2, directly when psi is regular at the origin.
fn residual(params: &DeformationParams, profile: &RadialProfile, c: &SpectralCoeffs) -> Result<f64> {
    let f = profile.bind(params)?;
    if f.power() == 0.0 {
        let g = synthesize(c).bind(params)?;
        let diff = Remainder { f, g };
        return moment_norm(params, &diff, 0.0, 2.0);
    }
    let total = lp_norm(params, profile, 2.0)?;
    Ok((total * total - c.energy(params)).max(0.0).sqrt())
}

struct Remainder<A: RadialFn, B: RadialFn> {
    f: A,
    g: B,
}

impl<A: RadialFn, B: RadialFn> RadialFn for Remainder<A, B> {
    fn degree(&self) -> u32 {
        self.f.degree()
    }

    fn eval(&self, r: f64) -> C64 {
        self.f.eval(r) - self.g.eval(r)
    }

    fn breakpoints(&self) -> Vec<f64> {
        let mut b = self.f.breakpoints();
        b.extend(self.g.breakpoints());
        b
    }

    fn cutoff(&self, p: f64, e: f64, tol: f64) -> Result<f64> {
        Ok(self.f.cutoff(p, e, tol)?.max(self.g.cutoff(p, e, tol)?))
    }

    // the difference is mostly rounding noise, so zero detection is skipped
    fn is_real(&self) -> bool {
        false
    }

    fn describe(&self) -> String {
        format!("{} - {}", self.f.describe(), self.g.describe())
    }
}

/// Apply F diagonally. The residual is carried over unchanged.
pub fn spectral_fka(c: &SpectralCoeffs) -> SpectralCoeffs {
    let coeffs = c.coeffs.iter().enumerate().map(|(l, v)| v * eigenvalue(c.a, c.m, l)).collect();
    SpectralCoeffs { coeffs, ..c.clone() }
}

/// sum c_l mode_l as a profile of degree m.
pub fn synthesize(c: &SpectralCoeffs) -> RadialProfile {
    RadialProfile::mixture(c.coeffs.clone()).with_m(c.m)
}

pub fn synthesize_on(params: &DeformationParams, c: &SpectralCoeffs, grid: &[f64]) -> Result<Vec<C64>> {
    if (params.lambda(c.m) - c.lambda_m).abs() > 1e-12 {
        return Err(FkaError::Domain("coefficients belong to other parameters".into()));
    }
    Ok(synthesize(c).bind(params)?.eval_many(grid))
}

/// Radial factor of F f through the eigenbasis; fails unless f is band-limited.
pub fn spectral_transform(
    params: &DeformationParams,
    profile: &RadialProfile,
    grid: &[f64],
    l_max: usize,
) -> Result<TransformResult> {
    let c = project(params, profile, l_max)?;
    let scale = lp_norm(params, profile, 2.0)?;
    if c.residual > BAND_LIMIT_TOL * scale.max(f64::MIN_POSITIVE) {
        return Err(FkaError::Unsupported(format!(
            "spectral path needs a band-limited input (residual {:.3e})",
            c.residual
        )));
    }
    let values = synthesize_on(params, &spectral_fka(&c), grid)?;
    let phase_prefactor = C64::from_polar(1.0, -PI * c.m as f64 / params.a());
    Ok(TransformResult { grid: grid.to_vec(), values, m: c.m, phase_prefactor, path: Path::Spectral })
}

/// True when the profile is a finite combination of modes.
pub fn is_mode_expansion(profile: &RadialProfile) -> bool {
    profile.scale == 1.0 && matches!(profile.shape, Shape::LaguerreMode { .. } | Shape::Mixture { .. })
}
