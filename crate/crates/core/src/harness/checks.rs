//! Left and right sides of each catalog inequality.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{run_prepared, CheckId, CheckOptions, Direction, Exponents, Prepared};
use crate::geometry::{
    ball_measure, entropy_of_square, lp_norm, moment_norm, DeformationParams, RadialFn, RadialProfile, Shape,
    SphereWeight,
};
use crate::quad::PanelLayout;
use crate::rearrange::{jt_check, pitt_b1, pitt_b2, pitt_bracket, Distribution, Slabs};
use crate::specfun::{log_gamma, LAGUERRE_MAX_DEGREE};
use crate::spectral::{eigenvalue, project, spectral_fka, synthesize};
use crate::transform::{inversion_parity, QuadratureSpec, Transformed};
use crate::{FkaError, Result, C64};

pub(super) struct Outcome {
    pub lhs: f64,
    pub rhs: f64,
    pub notes: String,
    pub values: BTreeMap<String, f64>,
    pub exponents: Exponents,
    pub function: Option<String>,
}

fn conj(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

fn constraint<T>(msg: String) -> Result<T> {
    Err(FkaError::Constraint(msg))
}

/// Radial factor of F f: exact through the eigenbasis for mode expansions,
/// by Hankel quadrature otherwise.
pub fn transform_of(
    params: &DeformationParams,
    profile: &RadialProfile,
    spec: &QuadratureSpec,
) -> Result<Arc<dyn RadialFn>> {
    if let Some(p) = spectral_image(params, profile) {
        return Ok(Arc::new(p.bind(params)?));
    }
    if let Some(p) = projected_image(params, profile) {
        return Ok(Arc::new(p.bind(params)?));
    }
    Ok(Arc::new(Transformed::of_profile(params, profile, spec)?))
}

/// Relative L^2 residual below which a projected smooth profile stands in for its Hankel transform.
const PROJECTION_TOL: f64 = 1e-12;

/// Smooth profiles whose Laguerre series has converged to rounding level.
fn projected_image(params: &DeformationParams, profile: &RadialProfile) -> Option<RadialProfile> {
    if !matches!(profile.shape, Shape::Gaussian { .. } | Shape::ExpPow { .. }) {
        return None;
    }
    let c = project(params, profile, LAGUERRE_MAX_DEGREE).ok()?;
    let norm = lp_norm(params, profile, 2.0).ok()?;
    if !(c.residual <= PROJECTION_TOL * norm) {
        return None;
    }
    Some(synthesize(&spectral_fka(&c)))
}

fn spectral_image(params: &DeformationParams, profile: &RadialProfile) -> Option<RadialProfile> {
    if profile.scale != 1.0 {
        return None;
    }
    let coeffs: Vec<C64> = match &profile.shape {
        Shape::LaguerreMode { ell } => {
            let mut c = vec![C64::new(0.0, 0.0); ell + 1];
            c[*ell] = C64::new(1.0, 0.0);
            c
        }
        Shape::Mixture { coeffs } => coeffs.clone(),
        _ => return None,
    };
    let a = params.a();
    let m = profile.m;
    let out = coeffs.iter().enumerate().map(|(l, c)| c * eigenvalue(a, m, l) * profile.amp).collect();
    Some(RadialProfile::mixture(out).with_m(m))
}

/// psi restricted to lo <= r <= hi.
struct Window<'a> {
    f: &'a dyn RadialFn,
    lo: f64,
    hi: f64,
}

impl Window<'_> {
    fn mask(&self, r: &[f64], mut v: Vec<C64>) -> Vec<C64> {
        for (x, &rr) in v.iter_mut().zip(r) {
            if rr < self.lo || rr > self.hi {
                *x = C64::new(0.0, 0.0);
            }
        }
        v
    }
}

impl RadialFn for Window<'_> {
    fn degree(&self) -> u32 {
        self.f.degree()
    }

    fn eval(&self, r: f64) -> C64 {
        self.eval_many(&[r])[0]
    }

    fn eval_many(&self, r: &[f64]) -> Vec<C64> {
        self.mask(r, self.f.eval_many(r))
    }

    fn power(&self) -> f64 {
        if self.lo > 0.0 {
            0.0
        } else {
            self.f.power()
        }
    }

    fn reduced_many(&self, r: &[f64]) -> Vec<C64> {
        if self.lo > 0.0 {
            self.eval_many(r)
        } else {
            self.mask(r, self.f.reduced_many(r))
        }
    }

    fn breakpoints(&self) -> Vec<f64> {
        let mut b = self.f.breakpoints();
        b.push(self.lo);
        if self.hi.is_finite() {
            b.push(self.hi);
        }
        b.retain(|&x| x > 0.0);
        b
    }

    fn cutoff(&self, p: f64, e: f64, tol: f64) -> Result<f64> {
        if self.hi.is_finite() {
            return Ok(self.hi);
        }
        self.f.cutoff(p, e, tol)
    }

    fn is_real(&self) -> bool {
        self.f.is_real()
    }

    fn layout(&self, r_max: f64) -> PanelLayout {
        self.f.layout(r_max)
    }

    fn describe(&self) -> String {
        format!("{} on [{}, {}]", self.f.describe(), self.lo, self.hi)
    }
}

/// psi(r) e^{-t r^a}.
struct Damped<'a> {
    f: &'a dyn RadialFn,
    t: f64,
    a: f64,
}

impl RadialFn for Damped<'_> {
    fn degree(&self) -> u32 {
        self.f.degree()
    }

    fn eval(&self, r: f64) -> C64 {
        self.f.eval(r) * (-self.t * r.powf(self.a)).exp()
    }

    fn eval_many(&self, r: &[f64]) -> Vec<C64> {
        self.f.eval_many(r).into_iter().zip(r).map(|(v, &x)| v * (-self.t * x.powf(self.a)).exp()).collect()
    }

    fn power(&self) -> f64 {
        self.f.power()
    }

    fn reduced_many(&self, r: &[f64]) -> Vec<C64> {
        self.f.reduced_many(r).into_iter().zip(r).map(|(v, &x)| v * (-self.t * x.powf(self.a)).exp()).collect()
    }

    fn breakpoints(&self) -> Vec<f64> {
        self.f.breakpoints()
    }

    fn cutoff(&self, p: f64, e: f64, tol: f64) -> Result<f64> {
        // e^{-p t r^a} < 1e-22 past this radius
        let own = (50.0 / (p * self.t)).powf(1.0 / self.a);
        match self.f.cutoff(p, e, tol) {
            Ok(r) => Ok(r.min(own)),
            Err(_) => Ok(own),
        }
    }

    fn is_real(&self) -> bool {
        self.f.is_real()
    }

    fn layout(&self, r_max: f64) -> PanelLayout {
        self.f.layout(r_max)
    }

    fn describe(&self) -> String {
        format!("exp(-{} r^a) {}", self.t, self.f.describe())
    }
}

/// Cases with a uniformly bounded kernel: N = 1 with (2k-1)/a >= -1/2; a in {1, 2}; or k = 0 with a = 2/n.
pub fn kernel_bounded_case(params: &DeformationParams) -> bool {
    let a = params.a();
    let two_over = 2.0 / a;
    if params.n() == 1 {
        return (2.0 * params.k() - 1.0) / a >= -0.5;
    }
    a == 1.0
        || a == 2.0
        || (params.k() == 0.0 && (two_over - two_over.round()).abs() < 1e-12 && two_over.round() >= 1.0)
}

fn require_bounded_kernel(params: &DeformationParams, what: &str) -> Result<()> {
    if kernel_bounded_case(params) {
        Ok(())
    } else {
        Err(FkaError::Inadmissible(format!(
            "{what} needs a uniformly bounded kernel (N = 1, a in {{1, 2}}, or k = 0 and a = 2/n)"
        )))
    }
}

struct Ctx<'p, 'a> {
    prep: &'p Prepared<'a>,
    given: &'p Exponents,
    used: RefCell<Exponents>,
}

impl Ctx<'_, '_> {
    fn params(&self) -> &DeformationParams {
        self.prep.params
    }

    fn d(&self) -> f64 {
        self.prep.params.d()
    }

    fn a(&self) -> f64 {
        self.prep.params.a()
    }

    fn x(&self, name: &str, default: f64) -> f64 {
        let v = self.given.get(name).copied().unwrap_or(default);
        self.used.borrow_mut().insert(name.to_string(), v);
        v
    }

    fn f(&self) -> &dyn RadialFn {
        self.prep.f.as_ref()
    }

    fn norm(&self, g: &dyn RadialFn, gamma: f64, p: f64) -> Result<f64> {
        moment_norm(self.prep.params, g, gamma, p)
    }

    fn fnorm(&self, gamma: f64, p: f64) -> Result<f64> {
        self.norm(self.f(), gamma, p)
    }

    fn ffnorm(&self, gamma: f64, p: f64) -> Result<f64> {
        let ff = self.prep.ff()?;
        self.norm(ff.as_ref(), gamma, p)
    }

    fn kernel_const(&self) -> Result<f64> {
        self.params().kernel_const()
    }
}

#[derive(Default)]
struct Sides {
    lhs: f64,
    rhs: f64,
    notes: String,
    values: BTreeMap<String, f64>,
    function: Option<String>,
}

fn sides(lhs: f64, rhs: f64) -> Sides {
    Sides { lhs, rhs, ..Default::default() }
}

impl Sides {
    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes = s.into();
        self
    }

    fn value(mut self, k: &str, v: f64) -> Self {
        self.values.insert(k.to_string(), v);
        self
    }
}

pub(super) fn evaluate(id: CheckId, prep: &Prepared<'_>, given: &Exponents) -> Result<Outcome> {
    let cx = Ctx { prep, given, used: RefCell::new(Exponents::new()) };
    let s = match id {
        CheckId::Hy => hy(&cx),
        CheckId::HyPaley => hy_paley(&cx),
        CheckId::HlWeighted => hl_weighted(&cx),
        CheckId::HlYoung => hl_young(&cx),
        CheckId::HlDual => hl_dual(&cx),
        CheckId::Pitt => pitt(&cx),
        CheckId::WeightedGen => weighted_gen(&cx),
        CheckId::HpwSharp => hpw_sharp(&cx),
        CheckId::HpwAb => hpw_ab(&cx),
        CheckId::HpwFrac => hpw_frac(&cx),
        CheckId::HpwLp => hpw_lp(&cx),
        CheckId::GaussDamp => gauss_damp(&cx),
        CheckId::Nash => nash(&cx),
        CheckId::Clarkson => clarkson(&cx),
        CheckId::L1L2 => l1l2(&cx),
        CheckId::Entropy => entropy(&cx, true),
        CheckId::EntropyGen => entropy(&cx, false),
        CheckId::EntropyVar => entropy_var(&cx),
        CheckId::GlobalUp => global_up(&cx),
        CheckId::Ds => ds(&cx),
        CheckId::Ms => ms(&cx),
        CheckId::Bab => bab(&cx),
        CheckId::HyFailProbe => hy_fail(&cx),
    }?;
    Ok(Outcome {
        lhs: s.lhs,
        rhs: s.rhs,
        notes: s.notes,
        values: s.values,
        exponents: cx.used.into_inner(),
        function: s.function,
    })
}

fn hy(cx: &Ctx) -> Result<Sides> {
    let p = cx.x("p", 1.5);
    if !(1.0..=2.0).contains(&p) {
        return constraint(format!("HY needs 1 <= p <= 2, got {p}"));
    }
    let c = cx.kernel_const()?;
    let lhs = cx.ffnorm(0.0, conj(p))?;
    let rhs = c.powf(2.0 / p - 1.0) * cx.fnorm(0.0, p)?;
    Ok(sides(lhs, rhs).value("kernel_const", c).note(format!("unitary transform, bound C'^(2/p-1) with C' = {c:.6e}")))
}

fn hy_paley(cx: &Ctx) -> Result<Sides> {
    let p = cx.x("p", 1.5);
    if !(p > 1.0 && p < 2.0) {
        return constraint(format!("Lorentz-space extension needs 1 < p < 2, got {p}"));
    }
    let ff = cx.prep.ff()?;
    let lhs = Slabs::new(cx.params(), ff.as_ref())?.lorentz(conj(p), p)?;
    let rhs = cx.fnorm(0.0, p)?;
    Ok(sides(lhs, rhs).note("lhs is ||Ff||*_{p',p}; ratio bounds the constant B_p from below"))
}

fn hl_weighted(cx: &Ctx) -> Result<Sides> {
    let p = cx.x("p", 1.5);
    if !(p > 1.0 && p <= 2.0) {
        return constraint(format!("weighted Hardy–Littlewood needs 1 < p <= 2, got {p}"));
    }
    let d = cx.d();
    let lhs = cx.ffnorm(d * (p - 2.0) / p, p)?;
    let rhs = cx.fnorm(0.0, p)?;
    Ok(sides(lhs, rhs).note("lhs = (int |Ff|^p |xi|^{D(p-2)} dmu)^{1/p}"))
}

fn hl_young(cx: &Ctx) -> Result<Sides> {
    let q = cx.x("q", 3.0);
    if !(q > 2.0 && q.is_finite()) {
        return constraint(format!("Young-weighted Hardy–Littlewood needs 2 < q < inf, got {q}"));
    }
    let d = cx.d();
    let lhs = cx.ffnorm(0.0, q)?;
    let rhs = cx.fnorm(d * (q - 2.0) / q, q)?;
    Ok(sides(lhs, rhs).note("Young function psi = |x|^D; rhs = (int |f|^q |x|^{D(q-2)} dmu)^{1/q}"))
}

fn hl_dual(cx: &Ctx) -> Result<Sides> {
    let p = cx.x("p", 1.5);
    let q = cx.x("q", 1.75);
    if !(p > 1.0 && p <= q && q <= 2.0) {
        return constraint(format!("needs 1 < p <= q <= 2 (p = {p}, q = {q})"));
    }
    let params = cx.params();
    let (pp, qq) = (conj(p), conj(q));
    let r = 1.0 / (1.0 - (qq - 1.0) / pp);
    let e = r / pp - 1.0;
    // |xi| theta(xi) = |xi|^{2k+a-1} times the spherical factor of the weight
    let radial = 2.0 * params.k() + params.a() - 1.0;
    let sphere = match params.weight() {
        SphereWeight::Supplied(_) if e != 0.0 => {
            return Err(FkaError::Unsupported("weight powers need a reflection weight".into()))
        }
        _ => params.sphere_moment(1.0 + e)?,
    };
    let base = cx.ffnorm(radial * e / r, r)?;
    let lhs = base * (sphere / params.big_k()).powf(1.0 / r);
    let rhs = cx.fnorm(0.0, p)?;
    Ok(sides(lhs, rhs).value("r", r).note(format!("weight (|xi| theta)^{{r/p'-1}} with r = {r:.6}")))
}

/// Pitt exponents with defaults alpha = -h/2, l = h - alpha where h = D(1/p' - 1/q).
fn pitt_exponents(cx: &Ctx, p: f64, q: f64) -> (f64, f64) {
    let h = cx.d() * (1.0 / conj(p) - 1.0 / q);
    let alpha = cx.x("alpha", -0.5 * h);
    let l = cx.x("l", h - alpha);
    (alpha, l)
}

fn pitt(cx: &Ctx) -> Result<Sides> {
    let p = cx.x("p", 1.5);
    let q = cx.x("q", 4.0);
    if !(p > 1.0 && p <= 2.0 && q >= p && q.is_finite()) {
        return constraint(format!("Pitt's inequality needs 1 < p <= 2 and p <= q < inf (p = {p}, q = {q})"));
    }
    let (alpha, l) = pitt_exponents(cx, p, q);
    let b1 = pitt_b1(cx.params(), p, q, alpha, l)?;
    let (lo, hi) = pitt_bracket(b1, p, q);
    let lhs = cx.ffnorm(alpha, q)?;
    let rhs = cx.fnorm(l, p)?;
    Ok(sides(lhs, rhs)
        .value("b1", b1)
        .value("bracket_hi", hi)
        .note(format!("B_1 = {lo:.6e}, best constant <= K_q * {hi:.6e}")))
}

fn weighted_gen(cx: &Ctx) -> Result<Sides> {
    let p = cx.x("p", 1.5);
    let q = cx.x("q", 4.0);
    let h = cx.d() * (1.0 / conj(p) - 1.0 / q);
    let u = cx.x("u", -0.5 * h * q);
    let v = cx.x("v", (h + 0.5 * h) * p);
    let (alpha, l) = (u / q, v / p);
    let (b, hi) = if p <= q {
        let b1 = pitt_b1(cx.params(), p, q, alpha, l).map_err(|e| match e {
            FkaError::Domain(m) => FkaError::Constraint(m),
            e => e,
        })?;
        (b1, pitt_bracket(b1, p, q).1)
    } else {
        let b2 = pitt_b2(cx.params(), p, q, alpha, l).map_err(|e| FkaError::Constraint(e.to_string()))?;
        (b2, b2 * q.powf(1.0 / q) * conj(p).powf(1.0 / conj(q)))
    };
    let lhs = cx.ffnorm(alpha, q)?;
    let rhs = cx.fnorm(l, p)?;
    Ok(sides(lhs, rhs).value("b", b).value("bracket_hi", hi).note("power weights u = |xi|^u, v = |x|^v"))
}

fn hpw_sharp(cx: &Ctx) -> Result<Sides> {
    let h = cx.a() / 2.0;
    let lhs = cx.fnorm(h, 2.0)? * cx.ffnorm(h, 2.0)?;
    let n = cx.fnorm(0.0, 2.0)?;
    Ok(sides(lhs, 0.5 * cx.d() * n * n))
}

/// (|| |x|^{alpha a/2} f ||^{beta/(alpha+beta)} || |xi|^{beta a/2} Ff ||^{alpha/(alpha+beta)}, ||f||).
fn hpw_pair(cx: &Ctx, alpha: f64, beta: f64) -> Result<(f64, f64)> {
    let h = cx.a() / 2.0;
    let s = alpha + beta;
    let lhs = cx.fnorm(alpha * h, 2.0)?.powf(beta / s) * cx.ffnorm(beta * h, 2.0)?.powf(alpha / s);
    Ok((lhs, cx.fnorm(0.0, 2.0)?))
}

fn hpw_ab(cx: &Ctx) -> Result<Sides> {
    let alpha = cx.x("alpha", 2.0);
    let beta = cx.x("beta", 1.5);
    if !(alpha >= 1.0 && beta >= 1.0) {
        return constraint(format!("needs alpha, beta >= 1 (alpha = {alpha}, beta = {beta})"));
    }
    let (l, n) = hpw_pair(cx, alpha, beta)?;
    let c = (0.5 * cx.d()).powf(alpha * beta / (alpha + beta));
    // squared, so that alpha = beta = 1 gives the sharp form verbatim
    Ok(sides(l * l, c * c * n * n).note("both sides squared"))
}

fn hpw_frac(cx: &Ctx) -> Result<Sides> {
    let alpha = cx.x("alpha", 0.5);
    let beta = cx.x("beta", 0.5);
    if !(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0) {
        return constraint(format!("needs 0 < alpha, beta < 1 (alpha = {alpha}, beta = {beta})"));
    }
    require_bounded_kernel(cx.params(), "the fractional form")?;
    let (l, n) = hpw_pair(cx, alpha, beta)?;
    Ok(sides(l, n).note("ratio is an upper estimate of c(alpha, beta)"))
}

/// Lemma exponents: 1 < p <= 2, q = p', 0 < alpha < D/q.
fn damping_exponents(cx: &Ctx) -> Result<(f64, f64, f64)> {
    let p = cx.x("p", 1.5);
    if !(p > 1.0 && p <= 2.0) {
        return constraint(format!("needs 1 < p <= 2, got {p}"));
    }
    let q = conj(p);
    let alpha = cx.x("alpha", 0.5 * cx.d() / q);
    if !(alpha > 0.0 && alpha < cx.d() / q) {
        return constraint(format!("needs 0 < alpha < D/q = {} (alpha = {alpha})", cx.d() / q));
    }
    Ok((p, q, alpha))
}

fn hpw_lp(cx: &Ctx) -> Result<Sides> {
    let (p, q, alpha) = damping_exponents(cx)?;
    let beta = cx.x("beta", cx.a() / 2.0);
    if !(beta > 0.0) {
        return constraint(format!("needs beta > 0, got {beta}"));
    }
    let lhs = cx.ffnorm(0.0, q)?;
    let s = alpha + beta;
    let rhs = cx.fnorm(alpha, p)?.powf(beta / s) * cx.ffnorm(beta, q)?.powf(alpha / s);
    Ok(sides(lhs, rhs).note("ratio is a lower estimate of c(alpha, beta)"))
}

/// Constant G with ||e^{-t|.|^a} Ff||_q <= G t^{-alpha/a} || |x|^alpha f ||_p.
fn damping_constant(params: &DeformationParams, p: f64, alpha: f64) -> Result<f64> {
    let c = params.kernel_const()?;
    let q = conj(p);
    let (d, a, big_k) = (params.d(), params.a(), params.big_k());
    let near = (2.0 * big_k.ln() + log_gamma(d / a) - a.ln() - (d / a) * q.ln() - (d - alpha * q).ln()) / q;
    Ok(c.powf(2.0 / p - 1.0) + c * near.exp())
}

fn gauss_damp(cx: &Ctx) -> Result<Sides> {
    let (p, q, alpha) = damping_exponents(cx)?;
    let t = cx.x("t", 1.0);
    if !(t > 0.0) {
        return constraint(format!("needs t > 0, got {t}"));
    }
    let g = damping_constant(cx.params(), p, alpha)?;
    let ff = cx.prep.ff()?;
    let damped = Damped { f: ff.as_ref(), t, a: cx.a() };
    let lhs = cx.norm(&damped, 0.0, q)?;
    let rhs = g * t.powf(-alpha / cx.a()) * cx.fnorm(alpha, p)?;
    Ok(sides(lhs, rhs).value("constant", g).note("damping exp(-t|xi|^a), unitary transform"))
}

fn nash(cx: &Ctx) -> Result<Sides> {
    let s = cx.x("s", 1.0);
    if !(s > 0.0) {
        return constraint(format!("needs s > 0, got {s}"));
    }
    let (d, big_k) = (cx.d(), cx.params().big_k());
    let c = nash_constant(big_k, d, s);
    let kc = cx.kernel_const()?;
    let x = kc.max(1.0) * cx.fnorm(0.0, 1.0)?;
    let y = cx.ffnorm(s, 2.0)?;
    let n = cx.fnorm(0.0, 2.0)?;
    let den = 0.5 * d + s;
    let rhs = c * x.powf(2.0 * s / den) * y.powf(d / den);
    Ok(sides(n * n, rhs).value("constant", c).note(format!("||Ff||_inf <= max(1, C')||f||_1 with C' = {kc:.6e}")))
}

/// (K/D)(2s/K)^{D/(D+2s)} + (2s/K)^{-2s/(D+2s)}.
pub(crate) fn nash_constant(big_k: f64, d: f64, s: f64) -> f64 {
    let u = 2.0 * s / big_k;
    big_k / d * u.powf(d / (d + 2.0 * s)) + u.powf(-2.0 * s / (d + 2.0 * s))
}

/// A rho^{D/(2 sigma)} + rho^{-2s/sigma}, sigma = D/2 + 2s, A = (K/D)^{1/2}, rho = 4s/(D A).
pub(crate) fn clarkson_constant(big_k: f64, d: f64, s: f64) -> f64 {
    let sigma = 0.5 * d + 2.0 * s;
    let a = (big_k / d).sqrt();
    let rho = 4.0 * s / (d * a);
    a * rho.powf(d / (2.0 * sigma)) + rho.powf(-2.0 * s / sigma)
}

fn clarkson(cx: &Ctx) -> Result<Sides> {
    let s = cx.x("s", 1.0);
    if !(s > 0.0) {
        return constraint(format!("needs s > 0, got {s}"));
    }
    let (d, big_k) = (cx.d(), cx.params().big_k());
    let sigma = 0.5 * d + 2.0 * s;
    let c = clarkson_constant(big_k, d, s);
    let lhs = cx.fnorm(0.0, 1.0)?;
    let rhs = c * cx.fnorm(0.0, 2.0)?.powf(2.0 * s / sigma) * cx.fnorm(2.0 * s, 1.0)?.powf(d / (2.0 * sigma));
    Ok(sides(lhs, rhs).value("constant", c).note("exponents normalized by D/2 + 2s"))
}

fn l1l2(cx: &Ctx) -> Result<Sides> {
    let s = cx.x("s", 1.0);
    if !(s > 0.0) {
        return constraint(format!("needs s > 0, got {s}"));
    }
    let y = cx.ffnorm(s, 2.0)?;
    let lhs = cx.fnorm(2.0 * s, 1.0)? * y * y;
    let n = cx.fnorm(0.0, 2.0)?;
    let rhs = cx.fnorm(0.0, 1.0)? * n * n;
    Ok(sides(lhs, rhs).note("ratio is an upper estimate of C'"))
}

struct Entropies {
    ef: f64,
    eff: f64,
    nf: f64,
    nff: f64,
}

fn entropies(cx: &Ctx) -> Result<Entropies> {
    let params = cx.params();
    let ff = cx.prep.ff()?;
    Ok(Entropies {
        ef: entropy_of_square(params, cx.f())?,
        eff: entropy_of_square(params, ff.as_ref())?,
        nf: cx.fnorm(0.0, 2.0)?,
        nff: cx.ffnorm(0.0, 2.0)?,
    })
}

fn entropy(cx: &Ctx, normalized: bool) -> Result<Sides> {
    let e = entropies(cx)?;
    let kc = cx.kernel_const()?;
    let bound = -2.0 * kc.ln();
    let (nf2, nff2) = (e.nf * e.nf, e.nff * e.nff);
    let out = if normalized {
        // E(|c h|^2) = c^2 E(|h|^2) - c^2 ln(c^2) ||h||^2 with c = 1/||f||
        let sf = e.ef / nf2 + nf2.ln();
        let sff = e.eff / nf2 + nf2.ln() * nff2 / nf2;
        sides(sf + sff, bound).value("entropy_f", sf).value("entropy_ff", sff).value("sum", sf + sff)
    } else {
        let l = e.ef / nf2 + e.eff / nff2;
        sides(l, bound - nf2.ln() - nff2.ln()).value("entropy_f", e.ef).value("entropy_ff", e.eff)
    };
    Ok(out.value("kernel_const", kc).note(format!("unitary transform; bound -2 ln C' with C' = {kc:.6e}")))
}

fn entropy_var(cx: &Ctx) -> Result<Sides> {
    let alpha = cx.x("alpha", cx.a());
    let c = cx.x("c", 1.0);
    if !(alpha > 0.0 && c > 0.0) {
        return constraint(format!("needs alpha, c > 0 (alpha = {alpha}, c = {c})"));
    }
    let params = cx.params();
    let (d, big_k) = (params.d(), params.big_k());
    let n2 = cx.fnorm(0.0, 2.0)?.powi(2);
    let lhs = entropy_of_square(params, cx.f())? / n2 + n2.ln();
    let sigma = big_k * (log_gamma(d / alpha) - alpha.ln()).exp();
    let ln_k = sigma.ln() - d * c.ln();
    let rhs = ln_k + c.powf(alpha) * cx.fnorm(alpha / 2.0, 2.0)?.powi(2) / n2;
    Ok(sides(lhs, rhs).value("sigma_alpha", sigma).note("density |f|^2/||f||^2; k = sigma_alpha c^{-D}"))
}

fn global_up(cx: &Ctx) -> Result<Sides> {
    let s = cx.x("s", 1.0);
    let beta = cx.x("beta", 1.0);
    if !(s > 0.0 && beta > 0.0) {
        return constraint(format!("needs s, beta > 0 (s = {s}, beta = {beta})"));
    }
    require_bounded_kernel(cx.params(), "the global uncertainty principle")?;
    let t = s + beta;
    let lhs = cx.fnorm(s, 2.0)?.powf(2.0 * beta / t) * cx.ffnorm(beta, 2.0)?.powf(2.0 * s / t);
    let n = cx.fnorm(0.0, 2.0)?;
    Ok(sides(lhs, n * n).note("ratio is an upper estimate of c_{s,beta}"))
}

/// || g 1_{r > radius} ||_2.
fn tail_norm(params: &DeformationParams, g: &dyn RadialFn, radius: f64) -> Result<f64> {
    if radius.is_infinite() {
        return Ok(0.0);
    }
    moment_norm(params, &Window { f: g, lo: radius, hi: f64::INFINITY }, 0.0, 2.0)
}

fn radii(cx: &Ctx, s0: f64, v0: f64) -> Result<(f64, f64)> {
    let s = cx.x("s_radius", s0);
    let v = cx.x("v_radius", v0);
    if !(s > 0.0 && v > 0.0) {
        return constraint(format!("radii must be positive (S = {s}, V = {v})"));
    }
    Ok((s, v))
}

fn ds(cx: &Ctx) -> Result<Sides> {
    let (s_r, v_r) = radii(cx, 3.0, 3.0)?;
    let params = cx.params();
    let kc = cx.kernel_const()?;
    let ff = cx.prep.ff()?;
    let n = cx.fnorm(0.0, 2.0)?;
    let eps = tail_norm(params, cx.f(), s_r)? / n;
    // Plancherel: ||f - F^{-1}(1_V Ff)|| = ||Ff 1_{V^c}||
    let delta = tail_norm(params, ff.as_ref(), v_r)? / n;
    let spread = (eps * eps + delta * delta).sqrt();
    if !(spread < 1.0) {
        return constraint(format!("vacuous case: eps^2 + delta^2 >= 1 (eps = {eps:.6}, delta = {delta:.6})"));
    }
    let lhs = ball_measure(params, s_r) * ball_measure(params, v_r);
    let lhs = if s_r.is_infinite() || v_r.is_infinite() { f64::INFINITY } else { lhs };
    let rhs = (1.0 - spread).powi(2) / (kc * kc);
    Ok(sides(lhs, rhs)
        .value("eps", eps)
        .value("delta", delta)
        .value("kernel_const", kc)
        .note("balls S, V centred at 0"))
}

/// mu{ |g| > tau * peak } from samples on a geometric radial grid.
fn thresholded_measure(params: &DeformationParams, g: &dyn RadialFn, r_lo: f64, r_hi: f64, tau: f64) -> (f64, f64) {
    let steps = ((r_hi / r_lo).ln() / 1.01f64.ln()).ceil().max(2.0) as usize;
    let rs: Vec<f64> = (0..=steps).map(|i| r_lo * (r_hi / r_lo).powf(i as f64 / steps as f64)).collect();
    let m = g.degree() as i32;
    let vals: Vec<f64> = g.eval_many(&rs).iter().zip(&rs).map(|(v, r)| v.norm() * r.powi(m)).collect();
    let peak = vals.iter().cloned().filter(|v| v.is_finite()).fold(0.0, f64::max);
    let mut total = 0.0;
    let mut last: f64 = 0.0;
    for i in 0..rs.len() {
        if vals[i].is_finite() && vals[i] > tau * peak {
            let lo = if i == 0 { 0.0 } else { (rs[i - 1] * rs[i]).sqrt() };
            let hi = if i + 1 == rs.len() { rs[i] } else { (rs[i] * rs[i + 1]).sqrt() };
            total += ball_measure(params, hi) - ball_measure(params, lo);
            last = rs[i];
        }
    }
    (total, last)
}

fn ms(cx: &Ctx) -> Result<Sides> {
    let tau = cx.x("tau", 1e-10);
    if !(tau > 0.0 && tau < 1.0) {
        return constraint(format!("needs 0 < tau < 1, got {tau}"));
    }
    let params = cx.params();
    let kc = cx.kernel_const()?;
    let f = cx.f();
    let r_f = f.cutoff(2.0, params.d() - 1.0, 1e-30).unwrap_or(50.0) * 2.0;
    let (mf, _) = thresholded_measure(params, f, r_f * 1e-6, r_f, tau);
    // scan Ff outward until the oscillation budget is exhausted
    let spec = QuadratureSpec { max_nodes: 20_000, ..QuadratureSpec::default() };
    let ff: Arc<dyn RadialFn> = match spectral_image(params, &cx.prep.profile) {
        Some(p) => Arc::new(p.bind(params)?),
        None => Arc::new(Transformed::of_profile(params, &cx.prep.profile, &spec)?),
    };
    let mut hi = 1.0;
    while hi < 1e6 && ff.eval(hi * 2.0).re.is_finite() {
        hi *= 2.0;
    }
    let (mff, reach) = thresholded_measure(params, ff.as_ref(), 1e-6, hi, tau);
    let lhs = mf * mff;
    Ok(sides(lhs, 1.0 / (kc * kc))
        .value("measure_f", mf)
        .value("measure_ff", mff)
        .note(format!("relative threshold {tau:e}; transform scanned to r = {hi:.3e}, last exceedance at {reach:.3e}")))
}

fn bab(cx: &Ctx) -> Result<Sides> {
    let (s_r, v_r) = radii(cx, 1.0, 1.0)?;
    require_bounded_kernel(cx.params(), "the Benedicks–Amrein–Berthier bound")?;
    let params = cx.params();
    let ff = cx.prep.ff()?;
    let n = cx.fnorm(0.0, 2.0)?;
    let a = tail_norm(params, cx.f(), s_r)?;
    let b = tail_norm(params, ff.as_ref(), v_r)?;
    Ok(sides(n * n, a * a + b * b).note("ratio is a lower estimate of C(k, a, S, V)"))
}

fn hy_fail(cx: &Ctx) -> Result<Sides> {
    let p = cx.x("p", 3.0);
    let n = cx.x("n", 8.0);
    if !(n >= 1.0 && n.fract() == 0.0) {
        return constraint(format!("n must be a positive integer, got {n}"));
    }
    let ratios = hy_failure_probe(cx.params(), p, n as usize)?;
    let hi = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let lo = ratios.iter().cloned().fold(f64::MAX, f64::min);
    let mut out = sides(hi, lo).note(format!("ratios ||Ff_n||_{{p'}}/||f_n||_p for n = 1..{n}; lhs max, rhs min"));
    out.function = Some(format!("chirped modes l <= n, n <= {n}"));
    for (i, r) in ratios.iter().enumerate() {
        out = out.value(&format!("n{:02}", i + 1), *r);
    }
    Ok(out)
}

/// sum_{l <= n} e^{i pi l^2/(n+1)} mode_l.
fn chirp(n: usize) -> RadialProfile {
    let coeffs = (0..=n).map(|l| C64::from_polar(1.0, PI * (l * l) as f64 / (n + 1) as f64)).collect();
    RadialProfile::mixture(coeffs)
}

/// Ratios ||F f_n||_{p'} / ||f_n||_p for the chirped mode sums f_1..f_{n_max}.
pub fn hy_failure_probe(params: &DeformationParams, p: f64, n_max: usize) -> Result<Vec<f64>> {
    if !(p >= 2.0 && p.is_finite()) {
        return constraint(format!("the probe needs 2 <= p < inf, got {p}"));
    }
    inversion_parity(params.a())?;
    let pp = conj(p);
    (1..=n_max)
        .map(|n| {
            let f = chirp(n);
            let ff = spectral_image(params, &f).expect("mixtures are mode expansions");
            let num = moment_norm(params, &ff.bind(params)?, 0.0, pp)?;
            let den = moment_norm(params, &f.bind(params)?, 0.0, p)?;
            Ok(num / den)
        })
        .collect()
}

/// Entropy check; `normalized` selects the unit-norm form over the general one.
pub fn check_entropy(
    params: &DeformationParams,
    profile: &RadialProfile,
    normalized: bool,
    opts: &CheckOptions,
) -> Result<super::CheckReport> {
    let id = if normalized { CheckId::Entropy } else { CheckId::EntropyGen };
    super::run_check(id, params, profile, &Exponents::new(), opts)
}

/// Donoho–Stark check with balls of the given radii.
pub fn check_donoho_stark(
    params: &DeformationParams,
    profile: &RadialProfile,
    s_radius: f64,
    v_radius: f64,
    opts: &CheckOptions,
) -> Result<super::CheckReport> {
    let e = Exponents::from([("s_radius".to_string(), s_radius), ("v_radius".to_string(), v_radius)]);
    super::run_check(CheckId::Ds, params, profile, &e, opts)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalEstimate {
    /// inf of the ratios for lower bounds, sup for upper bounds
    pub value: f64,
    pub ratios: Vec<f64>,
    /// index of the extremal family member
    pub arg: usize,
}

pub const MIN_FAMILY: usize = 10;

fn extremum(ratios: Vec<f64>, dir: Direction) -> EmpiricalEstimate {
    let mut arg = 0;
    for (i, r) in ratios.iter().enumerate() {
        let better = match dir {
            Direction::Ge => *r < ratios[arg],
            Direction::Le => *r > ratios[arg],
        };
        if better {
            arg = i;
        }
    }
    EmpiricalEstimate { value: ratios[arg], ratios, arg }
}

/// One-sided estimate of a constant the theory asserts but does not display.
pub fn estimate_empirical_constant(
    id: CheckId,
    params: &DeformationParams,
    family: &[RadialProfile],
    exponents: &Exponents,
    opts: &CheckOptions,
) -> Result<EmpiricalEstimate> {
    if family.len() < MIN_FAMILY {
        return Err(FkaError::FamilyTooSmall { got: family.len(), need: MIN_FAMILY });
    }
    let def = id.def();
    if def.mode != super::Mode::EmpiricalConstant {
        return Err(FkaError::Config(format!("{id} does not have an empirical constant")));
    }
    let ratios = family
        .iter()
        .map(|f| {
            let prep = Prepared::new(params, f, &opts.spec)?;
            Ok(run_prepared(id, &prep, exponents, opts)?.ratio)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(extremum(ratios, def.direction))
}

/// sup over the family of the rearranged type constant K_q.
pub fn estimate_jt_constant(
    params: &DeformationParams,
    family: &[RadialProfile],
    q: f64,
    s_grid: &[f64],
    spec: &QuadratureSpec,
) -> Result<EmpiricalEstimate> {
    if family.len() < MIN_FAMILY {
        return Err(FkaError::FamilyTooSmall { got: family.len(), need: MIN_FAMILY });
    }
    let ratios = family.iter().map(|f| Ok(jt_check(params, f, q, s_grid, spec)?.k_q)).collect::<Result<Vec<f64>>>()?;
    Ok(extremum(ratios, Direction::Le))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayFit {
    pub t: Vec<f64>,
    pub norms: Vec<f64>,
    /// least-squares slope of ln ||gamma_t Ff||_q against ln t
    pub slope: f64,
    /// -alpha/a, the rate in the damping bound
    pub bound_slope: f64,
    /// -D/(a q), the rate when Ff(0) != 0
    pub floor_slope: f64,
}

/// Decay of ||e^{-t|.|^a} Ff||_q in t.
pub fn gauss_damp_decay(
    params: &DeformationParams,
    profile: &RadialProfile,
    p: f64,
    alpha: f64,
    ts: &[f64],
    spec: &QuadratureSpec,
) -> Result<DecayFit> {
    if ts.len() < 2 {
        return Err(FkaError::Domain("need at least two values of t".into()));
    }
    let q = conj(p);
    let a = params.a();
    let ff = transform_of(params, profile, spec)?;
    let norms = ts
        .iter()
        .map(|&t| moment_norm(params, &Damped { f: ff.as_ref(), t, a }, 0.0, q))
        .collect::<Result<Vec<f64>>>()?;
    let xs: Vec<f64> = ts.iter().map(|t| t.ln()).collect();
    let ys: Vec<f64> = norms.iter().map(|v| v.ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    Ok(DecayFit {
        t: ts.to_vec(),
        norms,
        slope: sxy / sxx,
        bound_slope: -alpha / a,
        floor_slope: -params.d() / (a * q),
    })
}

/// Ratios of a check on f(t .) across the dilation family.
pub fn dilation_ratios(
    id: CheckId,
    params: &DeformationParams,
    profile: &RadialProfile,
    exponents: &Exponents,
    ts: &[f64],
    opts: &CheckOptions,
) -> Result<Vec<f64>> {
    ts.iter().map(|&t| Ok(super::run_check(id, params, &profile.clone().dilated(t), exponents, opts)?.ratio)).collect()
}

/// Seeded mode mixtures sum_{l <= L} e^{i theta_l} mode_l with L drawn from 0..=l_max.
pub fn random_mixtures(seed: u64, count: usize, l_max: usize, m: u32) -> Vec<RadialProfile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=l_max) + 1;
            let coeffs = (0..len).map(|_| C64::from_polar(1.0, 2.0 * PI * rng.gen::<f64>())).collect();
            RadialProfile::mixture(coeffs).with_m(m)
        })
        .collect()
}
