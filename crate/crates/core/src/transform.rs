//! The transform by quadrature: deformed Hankel path for p(x)psi(|x|), the
//! one-dimensional kernel path, the semigroup kernel, and inversion.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::DMatrix;

use crate::error::{FkaError, Result};
use crate::geometry::{DeformationParams, RadialFn, RadialProfile};
use crate::par::prelude::*;
use crate::quad::{radial_rule, PanelLayout, RadialRule};
use crate::specfun::{i_norm, j_norm, log_gamma};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// truncation radius; None picks it from the profile's tail bound
    pub r_max: Option<f64>,
    /// minimum number of panels
    pub panels: usize,
    pub nodes_per_panel: usize,
    pub tail_tol: f64,
    /// largest kernel phase advance per panel
    pub oscillation_guard: f64,
    /// refuse integrals needing more nodes than this
    pub max_nodes: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            r_max: None,
            panels: 24,
            nodes_per_panel: 10,
            tail_tol: 1e-12,
            oscillation_guard: PI / 2.0,
            max_nodes: 200_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    Hankel,
    Kernel,
    Spectral,
}

#[derive(Debug, Clone)]
pub struct TransformResult {
    pub grid: Vec<f64>,
    pub values: Vec<C64>,
    pub m: u32,
    pub phase_prefactor: C64,
    pub path: Path,
}

/// Weighted panel rule for an integrand oscillating like J~((2/a) x sigma),
/// x = r^{a/2}. Panels are doubled from `spec.panels` until the phase
/// advance per panel is at most the guard.
fn panels_for(spec: &QuadratureSpec, phase: f64) -> Result<usize> {
    let need = (phase / spec.oscillation_guard).ceil() as usize;
    let mut p = spec.panels.max(1);
    while p < need {
        p *= 2;
    }
    let nodes = p * spec.nodes_per_panel;
    if nodes > spec.max_nodes {
        return Err(FkaError::Oscillation { needed: nodes, budget: spec.max_nodes });
    }
    Ok(p)
}

struct HankelRule {
    x: Vec<f64>,
    wg: Vec<C64>,
}

/// H_{a,nu}(psi)(s) = int psi(r) J~_nu((2/a)(rs)^{a/2}) r^{a(nu+1)-1} dr.
struct HankelCore {
    a: f64,
    nu: f64,
    input: Arc<dyn RadialFn>,
    e_rule: f64,
    r_max: f64,
    spec: QuadratureSpec,
    rules: Mutex<HashMap<usize, Arc<HankelRule>>>,
}

impl HankelCore {
    fn new(a: f64, nu: f64, input: Arc<dyn RadialFn>, spec: QuadratureSpec) -> Result<Self> {
        if !(nu > -1.0) {
            return Err(FkaError::Domain(format!("Hankel order must exceed -1, got {nu}")));
        }
        let e_rule = a * (nu + 1.0) - 1.0 + input.power();
        if !(e_rule > -1.0) {
            return Err(FkaError::Divergent(format!("Hankel integrand ~ r^{e_rule:.6} at the origin")));
        }
        let r_max = match spec.r_max {
            Some(r) => r,
            None => input.cutoff(1.0, e_rule, spec.tail_tol)?,
        };
        Ok(HankelCore { a, nu, input, e_rule, r_max, spec, rules: Mutex::new(HashMap::new()) })
    }

    fn x_max(&self) -> f64 {
        self.r_max.powf(self.a / 2.0)
    }

    fn phase(&self, s: f64) -> f64 {
        (2.0 / self.a) * self.x_max() * s.powf(self.a / 2.0)
    }

    fn rule(&self, panels: usize) -> Result<Arc<HankelRule>> {
        if let Some(r) = self.rules.lock().unwrap().get(&panels) {
            return Ok(r.clone());
        }
        let layout = PanelLayout { panels, nodes_per_panel: self.spec.nodes_per_panel };
        let rr: RadialRule = radial_rule(self.a, self.e_rule, self.r_max, &self.input.breakpoints(), layout)?;
        let vals = self.input.reduced_many(&rr.r);
        if vals.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(FkaError::Tail("input samples are not finite".into()));
        }
        let x = rr.r.iter().map(|r| r.powf(self.a / 2.0)).collect();
        let wg = rr.w.iter().zip(&vals).map(|(w, v)| v * *w).collect();
        let rule = Arc::new(HankelRule { x, wg });
        Ok(self.rules.lock().unwrap().entry(panels).or_insert(rule).clone())
    }

    fn value(&self, s: f64) -> Result<C64> {
        let p = panels_for(&self.spec, self.phase(s))?;
        let rule = self.rule(p)?;
        let sig = (2.0 / self.a) * s.powf(self.a / 2.0);
        let mut acc = C64::new(0.0, 0.0);
        for (x, wg) in rule.x.iter().zip(&rule.wg) {
            acc += wg * j_norm(self.nu, sig * x);
        }
        Ok(acc)
    }

    fn values(&self, s: &[f64]) -> Result<Vec<C64>> {
        // build the needed rules first so parallel workers only read them
        let mut ps: Vec<usize> = s.iter().map(|&x| panels_for(&self.spec, self.phase(x))).collect::<Result<_>>()?;
        ps.sort_unstable();
        ps.dedup();
        for p in ps {
            self.rule(p)?;
        }
        s.par_iter().map(|&x| self.value(x)).collect()
    }
}

/// Deformed Hankel transform of psi of order nu on s_grid.
pub fn hankel(
    params: &DeformationParams,
    psi: &RadialProfile,
    nu: f64,
    s_grid: &[f64],
    spec: &QuadratureSpec,
) -> Result<Vec<C64>> {
    let core = HankelCore::new(params.a(), nu, Arc::new(psi.bind(params)?), *spec)?;
    core.values(s_grid)
}

/// Radial factor of F_{k,a}(p psi): a^{-lambda} e^{-i pi m/a} H_{a,lambda}(psi).
pub struct Transformed {
    m: u32,
    a: f64,
    d: f64,
    prefactor: C64,
    core: HankelCore,
    memo: Mutex<HashMap<u64, C64>>,
    s_cut: OnceLock<Result<f64>>,
}

pub fn radial_prefactor(params: &DeformationParams, m: u32) -> C64 {
    let a = params.a();
    let lam = params.lambda(m);
    C64::from_polar((-lam * a.ln()).exp(), -PI * m as f64 / a)
}

impl Transformed {
    pub fn new(params: &DeformationParams, input: Arc<dyn RadialFn>, spec: &QuadratureSpec) -> Result<Self> {
        let m = input.degree();
        let core = HankelCore::new(params.a(), params.lambda(m), input, *spec)?;
        Ok(Transformed {
            m,
            a: params.a(),
            d: params.d(),
            prefactor: radial_prefactor(params, m),
            core,
            memo: Mutex::new(HashMap::new()),
            s_cut: OnceLock::new(),
        })
    }

    pub fn of_profile(params: &DeformationParams, profile: &RadialProfile, spec: &QuadratureSpec) -> Result<Self> {
        Self::new(params, Arc::new(profile.bind(params)?), spec)
    }

    pub fn prefactor(&self) -> C64 {
        self.prefactor
    }

    pub fn input_cutoff(&self) -> f64 {
        self.core.r_max
    }

    /// Values with errors propagated.
    pub fn try_eval_many(&self, s: &[f64]) -> Result<Vec<C64>> {
        let missing: Vec<f64> = {
            let memo = self.memo.lock().unwrap();
            let mut v: Vec<f64> = s.iter().copied().filter(|x| !memo.contains_key(&x.to_bits())).collect();
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            v.dedup();
            v
        };
        if !missing.is_empty() {
            let vals = self.core.values(&missing)?;
            let mut memo = self.memo.lock().unwrap();
            for (x, v) in missing.iter().zip(vals) {
                memo.insert(x.to_bits(), self.prefactor * v);
            }
        }
        let memo = self.memo.lock().unwrap();
        Ok(s.iter().map(|x| memo[&x.to_bits()]).collect())
    }

    /// Output radius past which the transform is negligible in L^2.
    pub fn output_cutoff(&self) -> Result<f64> {
        self.s_cut.get_or_init(|| self.probe_cutoff()).clone()
    }

    fn probe_cutoff(&self) -> Result<f64> {
        let a = self.a;
        let e = 2.0 * self.m as f64 + self.d;
        // start well inside the main lobe, sigma ~ 1/x_max
        let s0 = (0.05 * a / (2.0 * self.core.x_max())).powf(2.0 / a);
        let mut s = s0;
        let mut peak = 0.0f64;
        let mut vmax = 0.0f64;
        let mut below = 0;
        // h is a squared density, so the energy dropped is about thr relative
        let tol = self.core.spec.tail_tol * 1e-2;
        let thr = tol;
        for _ in 0..600 {
            let v = match self.try_eval_many(&[s]) {
                Ok(v) => v[0],
                Err(FkaError::Oscillation { .. }) => {
                    return Err(FkaError::Tail(format!(
                        "transform has not decayed by s = {s:.4e} within the node budget"
                    )))
                }
                Err(e) => return Err(e),
            };
            let h = v.norm_sqr() * s.powf(e);
            peak = peak.max(h);
            vmax = vmax.max(v.norm());
            // the second test stops at the rounding floor of the quadrature
            if peak > 0.0 && (h < thr * peak || v.norm() < tol * vmax) {
                below += 1;
                if below >= 4 {
                    return Ok(s * 1.2);
                }
            } else {
                below = 0;
            }
            s *= 1.15;
        }
        Err(FkaError::Tail("transform cutoff not found".into()))
    }
}

impl RadialFn for Transformed {
    fn degree(&self) -> u32 {
        self.m
    }

    fn eval(&self, r: f64) -> C64 {
        self.eval_many(&[r])[0]
    }

    fn eval_many(&self, r: &[f64]) -> Vec<C64> {
        match self.try_eval_many(r) {
            Ok(v) => v,
            Err(_) => vec![C64::new(f64::NAN, f64::NAN); r.len()],
        }
    }

    fn cutoff(&self, _p: f64, _e: f64, _tol: f64) -> Result<f64> {
        self.output_cutoff()
    }

    fn layout(&self, r_max: f64) -> PanelLayout {
        let phase = self.core.phase(r_max);
        // 16 Gauss nodes resolve a full period per panel to ~1e-20
        let guard = 4.0 * self.core.spec.oscillation_guard;
        let spec = QuadratureSpec { panels: 8, oscillation_guard: guard, max_nodes: usize::MAX, ..self.core.spec };
        PanelLayout { panels: panels_for(&spec, phase).unwrap_or(8), nodes_per_panel: 16 }
    }

    fn describe(&self) -> String {
        format!("F[{}]", self.core.input.describe())
    }
}

/// Radial factor of F f on xi_grid (xi >= 0).
pub fn fka_radial(
    params: &DeformationParams,
    profile: &RadialProfile,
    xi_grid: &[f64],
    spec: &QuadratureSpec,
) -> Result<TransformResult> {
    let t = Transformed::of_profile(params, profile, spec)?;
    let values = t.try_eval_many(xi_grid)?;
    Ok(TransformResult {
        grid: xi_grid.to_vec(),
        values,
        m: profile.m,
        phase_prefactor: t.prefactor(),
        path: Path::Hankel,
    })
}

/// f(x) = even(|x|) + x odd(|x|) on the line.
#[derive(Debug, Clone, Default)]
pub struct Fn1d {
    pub even: Option<RadialProfile>,
    pub odd: Option<RadialProfile>,
}

impl Fn1d {
    pub fn eval(&self, params: &DeformationParams, x: f64) -> Result<C64> {
        let mut v = C64::new(0.0, 0.0);
        if let Some(e) = &self.even {
            v += e.bind(params)?.eval(x.abs());
        }
        if let Some(o) = &self.odd {
            v += x * o.bind(params)?.eval(x.abs());
        }
        Ok(v)
    }
}

/// Transforms of the even (m = 0) and odd (m = 1) parts; radial factors on |xi|.
pub fn fka_1d(
    params: &DeformationParams,
    even_psi: &RadialProfile,
    odd_psi: &RadialProfile,
    xi_grid: &[f64],
    spec: &QuadratureSpec,
) -> Result<(TransformResult, TransformResult)> {
    if params.n() != 1 {
        return Err(FkaError::Unsupported("fka_1d needs N = 1".into()));
    }
    let abs: Vec<f64> = xi_grid.iter().map(|x| x.abs()).collect();
    let e = fka_radial(params, &even_psi.clone().with_m(0), &abs, spec)?;
    let o = fka_radial(params, &odd_psi.clone().with_m(1), &abs, spec)?;
    Ok((e, o))
}

/// Full values F f(xi) = E(|xi|) + xi O(|xi|) from the two parity results.
pub fn combine_1d(xi_grid: &[f64], even: &TransformResult, odd: &TransformResult) -> Vec<C64> {
    xi_grid.iter().zip(&even.values).zip(&odd.values).map(|((&x, e), o)| e + x * o).collect()
}

/// B_{k,a}(x, y) for N = 1.
pub fn kernel_b_1d(params: &DeformationParams, x: f64, y: f64) -> Result<C64> {
    if params.n() != 1 {
        return Err(FkaError::Unsupported("kernel_b_1d needs N = 1".into()));
    }
    let (k, a) = (params.k(), params.a());
    let nu = (2.0 * k - 1.0) / a;
    if !(nu > -1.0) {
        return Err(FkaError::Domain(format!("kernel order (2k-1)/a = {nu} must exceed -1")));
    }
    Ok(kernel_b_unchecked(k, a, x * y))
}

fn kernel_b_unchecked(k: f64, a: f64, t: f64) -> C64 {
    let nu = (2.0 * k - 1.0) / a;
    let g = log_gamma((2.0 * k + a - 1.0) / a).exp();
    let w = (2.0 / a) * t.abs().powf(a / 2.0);
    // 1/(ia)^{2/a} with the principal branch
    let f = C64::from_polar(a.powf(-2.0 / a), -PI / a);
    g * (j_norm(nu, w) + t * f * j_norm(nu + 2.0 / a, w))
}

/// sup |B_{k,a}|: scanned for N = 1, equal to 1 for N >= 2 with a in {1, 2}.
pub(crate) fn estimate_kernel_sup(params: &DeformationParams) -> Result<f64> {
    let (k, a) = (params.k(), params.a());
    if params.n() >= 2 {
        if a == 1.0 || a == 2.0 {
            return Ok(1.0);
        }
        return Err(FkaError::Inadmissible(format!("no kernel bound known for N = {} and a = {a}", params.n())));
    }
    let nu = (2.0 * k - 1.0) / a;
    if nu < -0.5 - 1e-12 {
        return Err(FkaError::Inadmissible(format!("kernel unbounded for N = 1 when (2k-1)/a < -1/2 (here {nu:.6})")));
    }
    let b = |w: f64, sign: f64| kernel_b_unchecked(k, a, sign * (0.5 * a * w).powf(2.0 / a)).norm();
    let mut best = 1.0f64;
    let mut arg = (0.0, 1.0);
    let h = 0.01;
    for i in 0..=40_000 {
        let w = i as f64 * h;
        for sign in [1.0, -1.0] {
            let v = b(w, sign);
            if v > best {
                best = v;
                arg = (w, sign);
            }
        }
    }
    let (mut lo, mut hi) = ((arg.0 - h).max(0.0), arg.0 + h);
    let g = 0.618_033_988_749_894_9;
    for _ in 0..60 {
        let x1 = hi - g * (hi - lo);
        let x2 = lo + g * (hi - lo);
        if b(x1, arg.1) > b(x2, arg.1) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    Ok(best.max(b(0.5 * (lo + hi), arg.1)))
}

/// Kernel-path transform c * int B(xi, x) f(x) |x|^{2k+a-2} dx on a signed grid.
pub fn fka_1d_via_kernel(
    params: &DeformationParams,
    f: &Fn1d,
    xi_grid: &[f64],
    c_ka: C64,
    spec: &QuadratureSpec,
) -> Result<TransformResult> {
    let raw = kernel_integrals(params, f, xi_grid, spec)?;
    Ok(TransformResult {
        grid: xi_grid.to_vec(),
        values: raw.into_iter().map(|v| v * c_ka).collect(),
        m: 0,
        phase_prefactor: c_ka,
        path: Path::Kernel,
    })
}

fn kernel_integrals(params: &DeformationParams, f: &Fn1d, xi_grid: &[f64], spec: &QuadratureSpec) -> Result<Vec<C64>> {
    if params.n() != 1 {
        return Err(FkaError::Unsupported("kernel path needs N = 1".into()));
    }
    let (k, a) = (params.k(), params.a());
    kernel_b_1d(params, 0.0, 0.0)?;
    let even = f.even.as_ref().map(|p| p.bind(params)).transpose()?;
    let odd = f.odd.as_ref().map(|p| p.bind(params)).transpose()?;
    let e = params.d() - 1.0;
    let mut r_max: f64 = 0.0;
    let mut breaks = Vec::new();
    for g in even.iter() {
        if g.power() != 0.0 {
            return Err(FkaError::Unsupported("kernel path needs bounded profiles".into()));
        }
        r_max = r_max.max(spec.r_max.map_or_else(|| g.cutoff(1.0, e, spec.tail_tol), Ok)?);
        breaks.extend(g.breakpoints());
    }
    for g in odd.iter() {
        if g.power() != 0.0 {
            return Err(FkaError::Unsupported("kernel path needs bounded profiles".into()));
        }
        r_max = r_max.max(spec.r_max.map_or_else(|| g.cutoff(1.0, e + 1.0, spec.tail_tol), Ok)?);
        breaks.extend(g.breakpoints());
    }
    if r_max == 0.0 {
        return Ok(vec![C64::new(0.0, 0.0); xi_grid.len()]);
    }
    let x_max = r_max.powf(a / 2.0);
    xi_grid
        .par_iter()
        .map(|&xi| {
            let phase = (2.0 / a) * x_max * xi.abs().powf(a / 2.0);
            let p = panels_for(spec, phase)?;
            let rule =
                radial_rule(a, e, r_max, &breaks, PanelLayout { panels: p, nodes_per_panel: spec.nodes_per_panel })?;
            let mut acc = C64::new(0.0, 0.0);
            for (&r, &w) in rule.r.iter().zip(&rule.w) {
                let ev = even.as_ref().map_or(C64::new(0.0, 0.0), |g| g.eval(r));
                let od = odd.as_ref().map_or(C64::new(0.0, 0.0), |g| r * g.eval(r));
                let bp = kernel_b_unchecked(k, a, xi * r);
                let bm = kernel_b_unchecked(k, a, -xi * r);
                acc += w * (bp * (ev + od) + bm * (ev - od));
            }
            Ok(acc)
        })
        .collect()
}

/// Scalar making the kernel path fix the ground state e^{-|x|^a/a}.
pub fn calibrate_c(params: &DeformationParams) -> Result<C64> {
    calibrate_c_with(params, &QuadratureSpec::default())
}

pub fn calibrate_c_with(params: &DeformationParams, spec: &QuadratureSpec) -> Result<C64> {
    let a = params.a();
    let ground = Fn1d { even: Some(RadialProfile::exppow(1.0 / a)), odd: None };
    let xs = [0.7, 0.2, 0.5, 1.1, 1.6, 2.3];
    let raw = kernel_integrals(params, &ground, &xs, spec)?;
    let want = |x: f64| (-x.powf(a) / a).exp();
    let c = want(xs[0]) / raw[0];
    for (&x, v) in xs.iter().zip(&raw).skip(1) {
        let err = (c * v - want(x)).norm() / want(x);
        if !(err <= 1e-8) {
            return Err(FkaError::Calibration(format!("relative mismatch {err:.3e} at xi = {x}")));
        }
    }
    Ok(c)
}

/// Lambda_{k,a}(x, y; z) for N = 1, normalized by c_{k,a}.
pub fn semigroup_kernel_1d(params: &DeformationParams, x: f64, y: f64, z: C64) -> Result<C64> {
    if params.n() != 1 {
        return Err(FkaError::Unsupported("semigroup kernel needs N = 1".into()));
    }
    if z.re < 0.0 {
        return Err(FkaError::Domain("semigroup kernel needs Re z >= 0".into()));
    }
    let sh = z.sinh();
    if sh.norm() < 1e-14 {
        return Err(FkaError::Pole);
    }
    let (k, a) = (params.k(), params.a());
    let d_a = (2.0 * k + a - 1.0) / a;
    let lead = log_gamma(d_a).exp() * params.c_ka();
    let coth = z.cosh() / sh;
    let t = x * y;
    let w = (2.0 / a) * t.abs().powf(a / 2.0) / sh;
    let damp = (-(x.abs().powf(a) + y.abs().powf(a)) / a * coth).exp();
    let bracket =
        i_norm((2.0 * k - 1.0) / a, w) + a.powf(-2.0 / a) * t / sh.powf(2.0 / a) * i_norm((2.0 * k + 1.0) / a, w);
    Ok(lead * damp / sh.powf(d_a) * bracket)
}

/// Symmetric grid on the line for discretizing 1-D kernels: `half` nodes on
/// (0, R) mirrored, with weights for |x|^{D-1} dx.
pub fn line_grid(params: &DeformationParams, half: usize, r_max: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let per = 16.min(half).max(1);
    let layout = PanelLayout { panels: half.div_ceil(per), nodes_per_panel: per };
    let rule = radial_rule(params.a(), params.d() - 1.0, r_max, &[], layout)?;
    let mut xs = Vec::with_capacity(2 * rule.len());
    let mut ws = Vec::with_capacity(2 * rule.len());
    for (r, w) in rule.r.iter().zip(&rule.w).rev() {
        xs.push(-r);
        ws.push(*w);
    }
    for (r, w) in rule.r.iter().zip(&rule.w) {
        xs.push(*r);
        ws.push(*w);
    }
    Ok((xs, ws))
}

/// Default truncation for the semigroup discretization: ground state below e^{-30}.
pub fn semigroup_radius(params: &DeformationParams) -> f64 {
    (30.0 * params.a()).powf(1.0 / params.a())
}

/// Matrix W^{1/2} Lambda W^{1/2} on the grid; its spectral norm approximates
/// the operator norm on L^2.
pub fn semigroup_matrix(params: &DeformationParams, xs: &[f64], ws: &[f64], z: C64) -> Result<DMatrix<C64>> {
    let n = xs.len();
    let rows: Vec<Vec<C64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| Ok(semigroup_kernel_1d(params, xs[i], xs[j], z)? * (ws[i] * ws[j]).sqrt()))
                .collect::<Result<Vec<C64>>>()
        })
        .collect::<Result<_>>()?;
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}

/// Largest singular value of the discretized semigroup operator.
pub fn semigroup_operator_norm(params: &DeformationParams, points: usize, z: C64) -> Result<f64> {
    let (xs, ws) = line_grid(params, points / 2, semigroup_radius(params))?;
    let m = semigroup_matrix(params, &xs, &ws, z)?;
    let sv = m.singular_values();
    Ok(sv.iter().cloned().fold(0.0, f64::max))
}

/// Hilbert–Schmidt norm of the discretized kernel.
pub fn semigroup_hs_norm(params: &DeformationParams, points: usize, z: C64) -> Result<f64> {
    let (xs, ws) = line_grid(params, points / 2, semigroup_radius(params))?;
    let m = semigroup_matrix(params, &xs, &ws, z)?;
    Ok(m.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt())
}

/// sigma_a in F^{-1} = sigma_a F: Some(true) for the parity flip, Some(false)
/// for the identity.
pub fn inversion_parity(a: f64) -> Result<bool> {
    let inv = 1.0 / a;
    if (inv - inv.round()).abs() < 1e-9 && inv.round() >= 1.0 {
        return Ok(false);
    }
    let two = 2.0 / a;
    let r = two.round();
    if (two - r).abs() < 1e-9 && r >= 1.0 && (r as i64) % 2 == 1 {
        return Ok(true);
    }
    Err(FkaError::UnsupportedA(a))
}

/// F^{-1} g on a grid for radial factors of degree m.
pub fn inverse_fka(
    params: &DeformationParams,
    g: Arc<dyn RadialFn>,
    grid: &[f64],
    spec: &QuadratureSpec,
) -> Result<TransformResult> {
    let flip = inversion_parity(params.a())?;
    let m = g.degree();
    let t = Transformed::new(params, g, spec)?;
    let sign = if flip && m % 2 == 1 { -1.0 } else { 1.0 };
    let values = t.try_eval_many(grid)?.into_iter().map(|v| v * sign).collect();
    Ok(TransformResult { grid: grid.to_vec(), values, m, phase_prefactor: t.prefactor() * sign, path: Path::Hankel })
}
