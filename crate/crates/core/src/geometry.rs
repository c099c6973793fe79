//! Deformation parameters, the weighted measure, radial profiles, norms and
//! entropy.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{FkaError, Result};
use crate::quad::{radial_rule, PanelLayout, RadialRule};
use crate::specfun::{laguerre_all, laguerre_unchecked, log_gamma};
use crate::C64;

/// Spherical part of the weight on S^{N-1}.
#[derive(Debug, Clone, PartialEq)]
pub enum SphereWeight {
    /// prod_j |w_j|^{2 k_j}, the Z_2^N weight (rank-one when one k_j is nonzero)
    Reflection(Vec<f64>),
    /// integral supplied by the caller; only K itself is known
    Supplied(f64),
}

#[derive(Debug)]
pub struct DeformationParams {
    n: usize,
    k: f64,
    a: f64,
    weight: SphereWeight,
    big_k: f64,
    kernel_sup: OnceLock<Result<f64>>,
}

impl Clone for DeformationParams {
    fn clone(&self) -> Self {
        let kernel_sup = OnceLock::new();
        if let Some(v) = self.kernel_sup.get() {
            let _ = kernel_sup.set(v.clone());
        }
        DeformationParams {
            n: self.n,
            k: self.k,
            a: self.a,
            weight: self.weight.clone(),
            big_k: self.big_k,
            kernel_sup,
        }
    }
}

impl PartialEq for DeformationParams {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.a == other.a && self.weight == other.weight
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamsSummary {
    #[serde(rename = "N")]
    pub n: usize,
    pub k: f64,
    pub a: f64,
}

impl DeformationParams {
    /// N = 1 uses the two-point sphere; N >= 2 uses the rank-one weight
    /// |w_1|^{2k}.
    pub fn new(n: usize, k: f64, a: f64) -> Result<Self> {
        let mut ks = vec![0.0; n.max(1)];
        ks[0] = k;
        Self::reflection(n, ks, a)
    }

    /// Z_2^N weight with per-coordinate multiplicities.
    pub fn z2n(ks: Vec<f64>, a: f64) -> Result<Self> {
        Self::reflection(ks.len(), ks, a)
    }

    pub fn with_sphere_integral(n: usize, k: f64, a: f64, big_k: f64) -> Result<Self> {
        if !(big_k > 0.0) || !big_k.is_finite() {
            return Err(FkaError::Domain(format!("sphere integral must be positive, got {big_k}")));
        }
        Self::validate(n, k, a)?;
        Ok(DeformationParams { n, k, a, weight: SphereWeight::Supplied(big_k), big_k, kernel_sup: OnceLock::new() })
    }

    fn reflection(n: usize, ks: Vec<f64>, a: f64) -> Result<Self> {
        if ks.iter().any(|&k| !(k >= 0.0) || !k.is_finite()) {
            return Err(FkaError::Domain("multiplicities must be finite and >= 0".into()));
        }
        let k: f64 = ks.iter().sum();
        Self::validate(n, k, a)?;
        let big_k = sphere_moment_z2n(&ks, 1.0);
        Ok(DeformationParams { n, k, a, weight: SphereWeight::Reflection(ks), big_k, kernel_sup: OnceLock::new() })
    }

    fn validate(n: usize, k: f64, a: f64) -> Result<()> {
        if n == 0 {
            return Err(FkaError::Domain("dimension N must be positive".into()));
        }
        if !(k >= 0.0) || !k.is_finite() {
            return Err(FkaError::Domain(format!("<k> must be finite and >= 0, got {k}")));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(FkaError::NonPositiveD(2.0 * k + n as f64 + a - 2.0));
        }
        let d = 2.0 * k + n as f64 + a - 2.0;
        if !(d > 0.0) {
            return Err(FkaError::NonPositiveD(d));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The index <k>.
    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn weight(&self) -> &SphereWeight {
        &self.weight
    }

    pub fn nu_a(&self) -> f64 {
        (2.0 * self.k + self.n as f64 - 2.0) / self.a
    }

    /// Homogeneous dimension D = 2<k> + N + a - 2.
    pub fn d(&self) -> f64 {
        2.0 * self.k + self.n as f64 + self.a - 2.0
    }

    pub fn lambda(&self, m: u32) -> f64 {
        (2.0 * m as f64 + 2.0 * self.k + self.n as f64 - 2.0) / self.a
    }

    /// K = integral of the weight over the unit sphere.
    pub fn big_k(&self) -> f64 {
        self.big_k
    }

    /// int_S theta(w)^s dsigma(w); s = 1 gives K.
    pub fn sphere_moment(&self, s: f64) -> Result<f64> {
        match &self.weight {
            SphereWeight::Reflection(ks) => Ok(sphere_moment_z2n(ks, s)),
            SphereWeight::Supplied(k) if s == 1.0 => Ok(*k),
            SphereWeight::Supplied(_) => {
                Err(FkaError::Unsupported("sphere moments other than K need a reflection weight".into()))
            }
        }
    }

    /// Constant c_{k,a} of the unitary transform, with B(0, y) = 1.
    pub fn c_ka(&self) -> f64 {
        let d = self.d();
        let a = self.a;
        (-(self.big_k.ln() + (d / a - 1.0) * a.ln() + log_gamma(d / a))).exp()
    }

    /// sup |B_{k,a}|, computed once.
    pub fn kernel_sup(&self) -> Result<f64> {
        self.kernel_sup.get_or_init(|| crate::transform::estimate_kernel_sup(self)).clone()
    }

    /// (1, inf) operator-norm constant of the unitary transform: c_{k,a} sup|B|.
    pub fn kernel_const(&self) -> Result<f64> {
        Ok(self.c_ka() * self.kernel_sup()?)
    }

    pub fn summary(&self) -> ParamsSummary {
        ParamsSummary { n: self.n, k: self.k, a: self.a }
    }

    /// Harmonic factor |p(x)| = |x|^m is known only for N = 1 or m = 0.
    pub(crate) fn require_scalar_modulus(&self, m: u32, what: &str) -> Result<()> {
        if self.n >= 2 && m >= 1 {
            Err(FkaError::Unsupported(format!("{what} of degree-{m} functions needs N = 1")))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for DeformationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={},k={},a={}", self.n, self.k, self.a)
    }
}

fn sphere_moment_z2n(ks: &[f64], s: f64) -> f64 {
    let n = ks.len() as f64;
    let mut l = std::f64::consts::LN_2;
    for &k in ks {
        l += log_gamma(k * s + 0.5);
    }
    let total: f64 = ks.iter().sum();
    (l - log_gamma(total * s + 0.5 * n)).exp()
}

/// mu_{k,a}(B_r) = K r^D / D.
pub fn ball_measure(params: &DeformationParams, r: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    params.big_k() * r.powf(params.d()) / params.d()
}

/// Radius of the ball of measure t.
pub fn ball_radius(params: &DeformationParams, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    (params.d() * t / params.big_k()).powf(1.0 / params.d())
}

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    /// e^{-t r^2}
    Gaussian { t: f64 },
    /// e^{-c r^a}
    ExpPow { c: f64 },
    /// r^{-alpha} on [0, r0]
    PowerCutoff { alpha: f64, r0: f64 },
    /// L_ell^{(lambda(m))}((2/a) r^a) e^{-r^a/a}
    LaguerreMode { ell: usize },
    /// sum_ell c_ell times the mode above
    Mixture { coeffs: Vec<C64> },
    /// linear interpolation, zero beyond the last radius
    Sampled { grid: Vec<f64>, values: Vec<C64> },
}

/// psi(r) = amp * shape(scale * r), carried with harmonic degree m.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    pub m: u32,
    pub shape: Shape,
    pub scale: f64,
    pub amp: C64,
}

impl RadialProfile {
    fn of(shape: Shape) -> Self {
        RadialProfile { m: 0, shape, scale: 1.0, amp: C64::new(1.0, 0.0) }
    }

    pub fn gaussian(t: f64) -> Self {
        Self::of(Shape::Gaussian { t })
    }

    pub fn exppow(c: f64) -> Self {
        Self::of(Shape::ExpPow { c })
    }

    pub fn power_cutoff(alpha: f64, r0: f64) -> Self {
        Self::of(Shape::PowerCutoff { alpha, r0 })
    }

    pub fn laguerre_mode(ell: usize) -> Self {
        Self::of(Shape::LaguerreMode { ell })
    }

    pub fn mixture(coeffs: Vec<C64>) -> Self {
        Self::of(Shape::Mixture { coeffs })
    }

    pub fn sampled(grid: Vec<f64>, values: Vec<C64>) -> Result<Self> {
        if grid.len() != values.len() || grid.len() < 2 {
            return Err(FkaError::Domain("sampled profile needs matching grid/values of length >= 2".into()));
        }
        if grid[0] < 0.0 || grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(FkaError::Domain("sampled grid must be strictly increasing from r >= 0".into()));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) || !grid[grid.len() - 1].is_finite() {
            return Err(FkaError::Domain("sampled values must be finite".into()));
        }
        Ok(Self::of(Shape::Sampled { grid, values }))
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = m;
        self
    }

    /// psi(t r) in place of psi(r).
    pub fn dilated(mut self, t: f64) -> Self {
        self.scale *= t;
        self
    }

    pub fn scaled(mut self, c: C64) -> Self {
        self.amp *= c;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(FkaError::Domain(s.to_string()));
        if !(self.scale > 0.0) || !self.scale.is_finite() {
            return bad("profile scale must be positive");
        }
        match &self.shape {
            Shape::Gaussian { t } if !(*t > 0.0) => bad("Gaussian needs t > 0"),
            Shape::ExpPow { c } if !(*c > 0.0) => bad("ExpPow needs c > 0"),
            Shape::PowerCutoff { alpha, r0 } if !(*r0 > 0.0) || !alpha.is_finite() => {
                bad("PowerCutoff needs r0 > 0 and finite alpha")
            }
            Shape::Mixture { coeffs } if coeffs.is_empty() => bad("empty mixture"),
            _ if self.max_ell() > crate::specfun::LAGUERRE_MAX_DEGREE => bad("Laguerre degree above 64"),
            _ => Ok(()),
        }
    }

    fn max_ell(&self) -> usize {
        match &self.shape {
            Shape::LaguerreMode { ell } => *ell,
            Shape::Mixture { coeffs } => coeffs.len().saturating_sub(1),
            _ => 0,
        }
    }

    /// Bind to parameters (the Laguerre order depends on lambda(m)).
    pub fn bind(&self, params: &DeformationParams) -> Result<AnalyticFn> {
        self.validate()?;
        Ok(AnalyticFn { profile: self.clone(), a: params.a(), lambda: params.lambda(self.m) })
    }

    /// Parse `gaussian:t=0.5`, `exppow:c=1`, `cutoff:alpha=0.5,r0=1`, `mode:l=2`.
    pub fn parse(s: &str) -> Result<Self> {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut kv = std::collections::HashMap::new();
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (k, v) =
                part.split_once('=').ok_or_else(|| FkaError::Config(format!("bad profile field '{part}' in '{s}'")))?;
            let v: f64 = v.trim().parse().map_err(|_| FkaError::Config(format!("bad number in '{part}'")))?;
            kv.insert(k.trim().to_string(), v);
        }
        let get = |k: &str, d: Option<f64>| -> Result<f64> {
            kv.get(k).copied().or(d).ok_or_else(|| FkaError::Config(format!("profile '{s}' needs {k}=")))
        };
        let mut p = match kind.trim() {
            "gaussian" => Self::gaussian(get("t", Some(1.0))?),
            "exppow" => Self::exppow(get("c", None)?),
            "cutoff" => Self::power_cutoff(get("alpha", Some(0.0))?, get("r0", Some(1.0))?),
            "mode" => Self::laguerre_mode(get("l", Some(0.0))? as usize),
            other => return Err(FkaError::Config(format!("unknown profile kind '{other}'"))),
        };
        if let Some(&m) = kv.get("m") {
            p.m = m as u32;
        }
        if let Some(&sc) = kv.get("scale") {
            p.scale = sc;
        }
        p.validate()?;
        Ok(p)
    }
}

impl fmt::Display for RadialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::Gaussian { t } => write!(f, "gaussian:t={t}")?,
            Shape::ExpPow { c } => write!(f, "exppow:c={c}")?,
            Shape::PowerCutoff { alpha, r0 } => write!(f, "cutoff:alpha={alpha},r0={r0}")?,
            Shape::LaguerreMode { ell } => write!(f, "mode:l={ell}")?,
            Shape::Mixture { coeffs } => {
                write!(f, "mixture[")?;
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{:.6}{:+.6}i", c.re, c.im)?;
                }
                write!(f, "]")?
            }
            Shape::Sampled { grid, .. } => write!(f, "sampled[{}]", grid.len())?,
        }
        if self.m != 0 {
            write!(f, ",m={}", self.m)?;
        }
        if self.scale != 1.0 {
            write!(f, ",scale={}", self.scale)?;
        }
        if self.amp != C64::new(1.0, 0.0) {
            write!(f, ",amp={:.6}{:+.6}i", self.amp.re, self.amp.im)?;
        }
        Ok(())
    }
}

/// A radial factor psi of a function p(x) psi(|x|) with deg p = m.
pub trait RadialFn: Send + Sync {
    fn degree(&self) -> u32;

    fn eval(&self, r: f64) -> C64;

    fn eval_many(&self, r: &[f64]) -> Vec<C64> {
        r.iter().map(|&x| self.eval(x)).collect()
    }

    /// psi(r) behaves like r^power times a smooth factor near 0.
    fn power(&self) -> f64 {
        0.0
    }

    /// psi(r) r^{-power}.
    fn reduced_many(&self, r: &[f64]) -> Vec<C64> {
        let p = self.power();
        let v = self.eval_many(r);
        if p == 0.0 {
            v
        } else {
            v.into_iter().zip(r).map(|(x, &rr)| x * rr.powf(-p)).collect()
        }
    }

    /// Radii where psi is not smooth.
    fn breakpoints(&self) -> Vec<f64> {
        Vec::new()
    }

    /// Radius R with int_R^inf |psi|^p r^e dr below tol times the total.
    fn cutoff(&self, p: f64, e: f64, tol: f64) -> Result<f64>;

    fn is_real(&self) -> bool {
        false
    }

    /// Interior radii where |psi| dips close to zero without a sign change.
    fn near_zeros(&self, _r_max: f64) -> Vec<f64> {
        Vec::new()
    }

    /// Panel layout for non-oscillatory integrals over [0, r_max].
    fn layout(&self, _r_max: f64) -> PanelLayout {
        NORM_LAYOUT
    }

    fn describe(&self) -> String;
}

/// A profile bound to parameters.
#[derive(Debug, Clone)]
pub struct AnalyticFn {
    pub profile: RadialProfile,
    pub a: f64,
    pub lambda: f64,
}

impl AnalyticFn {
    fn shape_at(&self, rho: f64) -> C64 {
        let a = self.a;
        match &self.profile.shape {
            Shape::Gaussian { t } => C64::new((-t * rho * rho).exp(), 0.0),
            Shape::ExpPow { c } => C64::new((-c * rho.powf(a)).exp(), 0.0),
            Shape::PowerCutoff { alpha, r0 } => {
                if rho <= *r0 {
                    C64::new(rho.powf(-alpha), 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            }
            Shape::LaguerreMode { ell } => {
                let u = (2.0 / a) * rho.powf(a);
                C64::new(laguerre_unchecked(*ell, self.lambda, u) * (-0.5 * u).exp(), 0.0)
            }
            Shape::Mixture { coeffs } => {
                let u = (2.0 / a) * rho.powf(a);
                let ls = laguerre_all(coeffs.len() - 1, self.lambda, u);
                let e = (-0.5 * u).exp();
                coeffs.iter().zip(&ls).map(|(c, l)| c * (l * e)).sum()
            }
            Shape::Sampled { grid, values } => {
                let n = grid.len();
                if rho < grid[0] || rho > grid[n - 1] {
                    return C64::new(0.0, 0.0);
                }
                let i = grid.partition_point(|&g| g <= rho).clamp(1, n - 1);
                let (r0, r1) = (grid[i - 1], grid[i]);
                let s = (rho - r0) / (r1 - r0);
                values[i - 1] * (1.0 - s) + values[i] * s
            }
        }
    }

    /// Upper envelope of |shape(rho)|; None for compact shapes.
    fn envelope(&self, rho: f64) -> Option<f64> {
        let a = self.a;
        let lag_env = |ell: usize, u: f64| -> f64 {
            // |L_ell^lambda(u)| <= sum_j |C(ell+lambda, ell-j)| u^j / j!
            let mut s = 0.0;
            for j in 0..=ell {
                let lb = log_gamma(ell as f64 + self.lambda + 1.0)
                    - log_gamma((ell - j) as f64 + 1.0)
                    - log_gamma(self.lambda + j as f64 + 1.0);
                let t = if u > 0.0 {
                    lb + j as f64 * u.ln() - log_gamma(j as f64 + 1.0)
                } else if j == 0 {
                    lb
                } else {
                    f64::NEG_INFINITY
                };
                s += t.exp();
            }
            s * (-0.5 * u).exp()
        };
        match &self.profile.shape {
            Shape::Gaussian { t } => Some((-t * rho * rho).exp()),
            Shape::ExpPow { c } => Some((-c * rho.powf(a)).exp()),
            Shape::LaguerreMode { ell } => Some(lag_env(*ell, (2.0 / a) * rho.powf(a))),
            Shape::Mixture { coeffs } => {
                let u = (2.0 / a) * rho.powf(a);
                Some(coeffs.iter().enumerate().map(|(l, c)| c.norm() * lag_env(l, u)).sum())
            }
            _ => None,
        }
    }

    fn support_end(&self) -> Option<f64> {
        match &self.profile.shape {
            Shape::PowerCutoff { r0, .. } => Some(r0 / self.profile.scale),
            Shape::Sampled { grid, .. } => Some(grid[grid.len() - 1] / self.profile.scale),
            _ => None,
        }
    }
}

impl RadialFn for AnalyticFn {
    fn degree(&self) -> u32 {
        self.profile.m
    }

    fn eval(&self, r: f64) -> C64 {
        self.profile.amp * self.shape_at(self.profile.scale * r)
    }

    fn power(&self) -> f64 {
        match &self.profile.shape {
            Shape::PowerCutoff { alpha, .. } => -alpha,
            _ => 0.0,
        }
    }

    fn breakpoints(&self) -> Vec<f64> {
        match &self.profile.shape {
            Shape::Sampled { grid, .. } => grid.iter().map(|g| g / self.profile.scale).collect(),
            Shape::PowerCutoff { r0, .. } => vec![r0 / self.profile.scale],
            _ => Vec::new(),
        }
    }

    fn cutoff(&self, p: f64, e: f64, tol: f64) -> Result<f64> {
        if let Some(r) = self.support_end() {
            return Ok(r);
        }
        let lam = self.profile.scale;
        let h = |r: f64| -> f64 {
            let env = self.envelope(lam * r).unwrap_or(0.0);
            if env == 0.0 {
                0.0
            } else {
                (p * env.ln() + (e + 1.0) * r.ln()).exp()
            }
        };
        envelope_cutoff(h, 1e-4 / lam, tol)
    }

    fn is_real(&self) -> bool {
        if self.profile.amp.im != 0.0 {
            return false;
        }
        match &self.profile.shape {
            Shape::Mixture { coeffs } => coeffs.iter().all(|c| c.im == 0.0),
            Shape::Sampled { values, .. } => values.iter().all(|c| c.im == 0.0),
            _ => true,
        }
    }

    fn near_zeros(&self, r_max: f64) -> Vec<f64> {
        if self.is_real() || !matches!(self.profile.shape, Shape::Mixture { .. }) {
            return Vec::new();
        }
        let n = 800;
        let rs: Vec<f64> = (0..=n).map(|i| r_max * i as f64 / n as f64).collect();
        let vs: Vec<f64> = rs.iter().map(|&r| self.eval(r).norm()).collect();
        let top = vs.iter().cloned().fold(0.0, f64::max);
        let mut out = Vec::new();
        for i in 1..n {
            if vs[i] <= vs[i - 1] && vs[i] < vs[i + 1] && vs[i] < 0.05 * top {
                let (mut l, mut u) = (rs[i - 1], rs[i + 1]);
                let g = 0.618_033_988_749_894_9;
                for _ in 0..80 {
                    let x1 = u - g * (u - l);
                    let x2 = l + g * (u - l);
                    if self.eval(x1).norm() < self.eval(x2).norm() {
                        u = x2;
                    } else {
                        l = x1;
                    }
                }
                out.push(0.5 * (l + u));
            }
        }
        out
    }

    fn describe(&self) -> String {
        self.profile.to_string()
    }
}

/// Scan r geometrically past the peak of h until h falls below tol * 1e-3 * peak.
pub(crate) fn envelope_cutoff(h: impl Fn(f64) -> f64, r_start: f64, tol: f64) -> Result<f64> {
    let mut r = r_start;
    let mut peak = 0.0f64;
    let mut below = 0;
    for _ in 0..2000 {
        let v = h(r);
        if !v.is_finite() {
            return Err(FkaError::Tail(format!("envelope not finite at r = {r}")));
        }
        peak = peak.max(v);
        if peak > 0.0 && v < tol * 1e-3 * peak {
            below += 1;
            if below >= 3 {
                return Ok(r);
            }
        } else {
            below = 0;
        }
        r *= 1.05;
    }
    Err(FkaError::Tail("profile does not decay fast enough for truncation".into()))
}

/// Defaults for non-oscillatory radial integrals.
pub const NORM_LAYOUT: PanelLayout = PanelLayout { panels: 32, nodes_per_panel: 16 };
pub const NORM_TOL: f64 = 1e-14;

/// Rule and reduced samples for integrands of the form G(psi) r^e, where the
/// singular power of psi is folded into the rule weight.
pub(crate) struct Sampling {
    pub rule: RadialRule,
    pub vals: Vec<C64>,
}

/// Sample psi for an integral of |psi|^p r^e dr. Returns the rule built for
/// r^{e + p * power} and psi r^{-power} at its nodes.
pub(crate) fn sample_for(a: f64, f: &dyn RadialFn, p: f64, e: f64, graded: bool) -> Result<Sampling> {
    let pw = f.power();
    let e_rule = e + p * pw;
    if !(e_rule > -1.0) {
        return Err(FkaError::Divergent(format!("integrand ~ r^{e_rule:.6} near 0 (need exponent > -1)")));
    }
    let r_max = f.cutoff(p, e_rule, NORM_TOL)?;
    let mut breaks = f.breakpoints();
    if f.is_real() {
        breaks.extend(real_zeros(a, f, r_max));
    } else if p != 2.0 {
        // |psi|^p has a near-kink at a deep minimum of |psi|
        let w = r_max / 400.0;
        for z in f.near_zeros(r_max) {
            breaks.push(z);
            for j in 0..14 {
                let h = w * 0.25f64.powi(j);
                breaks.extend([z - h, z + h]);
            }
        }
    }
    if graded {
        let first = r_max * (1.0 / f.layout(r_max).panels as f64).powf(2.0 / a);
        for j in 1..=8 {
            breaks.push(first * 0.2f64.powi(j).powf(2.0 / a));
        }
    }
    let rule = radial_rule(a, e_rule, r_max, &breaks, f.layout(r_max))?;
    let vals = f.reduced_many(&rule.r);
    if vals.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(FkaError::Tail(format!("samples of {} are not finite", f.describe())));
    }
    Ok(Sampling { rule, vals })
}

/// Sign changes of a real profile on (0, r_max), refined by bisection.
pub(crate) fn real_zeros(a: f64, f: &dyn RadialFn, r_max: f64) -> Vec<f64> {
    let n = 800;
    let xmax = r_max.powf(a / 2.0);
    let rs: Vec<f64> = (1..=n).map(|i| (xmax * i as f64 / (n + 1) as f64).powf(2.0 / a)).collect();
    let vs = f.eval_many(&rs);
    let mut out = Vec::new();
    for i in 1..n {
        let (v0, v1) = (vs[i - 1].re, vs[i].re);
        if v0 == 0.0 {
            out.push(rs[i - 1]);
            continue;
        }
        if v0 * v1 < 0.0 {
            let (mut lo, mut hi) = (rs[i - 1], rs[i]);
            let s0 = v0.signum();
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if f.eval(mid).re.signum() == s0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push(0.5 * (lo + hi));
        }
    }
    out
}

fn check_p(p: f64) -> Result<()> {
    if p >= 1.0 || p.is_infinite() {
        Ok(())
    } else {
        Err(FkaError::Domain(format!("p must be >= 1, got {p}")))
    }
}

/// ||f||_p against mu_{k,a}; closed form when available.
pub fn lp_norm(params: &DeformationParams, profile: &RadialProfile, p: f64) -> Result<f64> {
    match lp_norm_closed(params, profile, p)? {
        Some(v) => Ok(v),
        None => lp_norm_fn(params, &profile.bind(params)?, p),
    }
}

/// Closed forms for Gaussian, ExpPow and PowerCutoff descriptors.
pub fn lp_norm_closed(params: &DeformationParams, profile: &RadialProfile, p: f64) -> Result<Option<f64>> {
    check_p(p)?;
    profile.validate()?;
    let m = profile.m as f64;
    if p.is_infinite() {
        return Ok(None);
    }
    if profile.m > 0 && p != 2.0 {
        params.require_scalar_modulus(profile.m, "L^p norm")?;
    }
    let e_tot = m * p + params.d();
    let lam = profile.scale;
    let a = params.a();
    let integral = match profile.shape {
        Shape::Gaussian { t } => {
            (log_gamma(e_tot / 2.0) - std::f64::consts::LN_2 - 0.5 * e_tot * (p * t).ln() - e_tot * lam.ln()).exp()
        }
        Shape::ExpPow { c } => (log_gamma(e_tot / a) - a.ln() - (e_tot / a) * (p * c).ln() - e_tot * lam.ln()).exp(),
        Shape::PowerCutoff { alpha, r0 } => {
            let ex = e_tot - alpha * p;
            if !(ex > 0.0) {
                return Err(FkaError::Divergent(format!(
                    "PowerCutoff needs alpha < m + D/p = {} (alpha = {alpha})",
                    m + params.d() / p
                )));
            }
            lam.powf(-alpha * p) * (r0 / lam).powf(ex) / ex
        }
        _ => return Ok(None),
    };
    Ok(Some(profile.amp.norm() * (params.big_k() * integral).powf(1.0 / p)))
}

/// ||f||_p by quadrature for any radial factor.
pub fn lp_norm_fn(params: &DeformationParams, f: &dyn RadialFn, p: f64) -> Result<f64> {
    moment_norm(params, f, 0.0, p)
}

/// || |x|^gamma f ||_p.
pub fn moment_norm(params: &DeformationParams, f: &dyn RadialFn, gamma: f64, p: f64) -> Result<f64> {
    check_p(p)?;
    let m = f.degree();
    if p.is_infinite() {
        params.require_scalar_modulus(m, "sup norm")?;
        return sup_norm(params, f, gamma);
    }
    if m > 0 && p != 2.0 {
        params.require_scalar_modulus(m, "L^p norm")?;
    }
    let e = (gamma + m as f64) * p + params.d() - 1.0;
    let s = sample_for(params.a(), f, p, e, false)?;
    let total: f64 = s.rule.w.iter().zip(&s.vals).map(|(w, v)| w * v.norm().powf(p)).sum();
    Ok((params.big_k() * total).powf(1.0 / p))
}

fn sup_norm(params: &DeformationParams, f: &dyn RadialFn, gamma: f64) -> Result<f64> {
    let ex = gamma + f.degree() as f64 + f.power();
    let r_max = f.cutoff(1.0, ex.max(0.0), NORM_TOL)?;
    let a = params.a();
    let n = 4000;
    let xmax = r_max.powf(a / 2.0);
    let rs: Vec<f64> = (1..=n).map(|i| (xmax * i as f64 / n as f64).powf(2.0 / a)).collect();
    let vs = f.eval_many(&rs);
    let h = |r: f64, v: C64| v.norm() * r.powf(gamma + f.degree() as f64);
    let mut best = 0.0f64;
    let mut arg = 0;
    for (i, (&r, &v)) in rs.iter().zip(&vs).enumerate() {
        let x = h(r, v);
        if x > best {
            best = x;
            arg = i;
        }
    }
    if ex < 0.0 {
        return Ok(f64::INFINITY);
    }
    // golden-section refinement around the best sample
    let lo = if arg == 0 { 0.0 } else { rs[arg - 1] };
    let hi = rs[(arg + 1).min(n - 1)];
    let (mut l, mut u) = (lo, hi);
    let g = 0.618_033_988_749_894_9;
    for _ in 0..60 {
        let x1 = u - g * (u - l);
        let x2 = l + g * (u - l);
        if h(x1, f.eval(x1)) > h(x2, f.eval(x2)) {
            u = x2;
        } else {
            l = x1;
        }
    }
    let mid = 0.5 * (l + u);
    let at0 = if ex == 0.0 { h(0.0, f.eval(0.0)) } else { 0.0 };
    Ok(best.max(h(mid, f.eval(mid))).max(at0))
}

/// E[h] = -int h ln h dmu for the density h(x) = |x|^m |psi(|x|)|.
pub fn entropy(params: &DeformationParams, density: &dyn RadialFn) -> Result<f64> {
    let m = density.degree();
    params.require_scalar_modulus(m, "entropy")?;
    entropy_core(params, density, 1.0, m as f64)
}

/// E[|f|^2] for f = p(x) psi(|x|).
pub fn entropy_of_square(params: &DeformationParams, f: &dyn RadialFn) -> Result<f64> {
    let m = f.degree();
    params.require_scalar_modulus(m, "entropy")?;
    entropy_core(params, f, 2.0, 2.0 * m as f64)
}

/// -K int h ln h r^{D-1} dr with h = r^{mm} |psi|^q.
fn entropy_core(params: &DeformationParams, f: &dyn RadialFn, q: f64, mm: f64) -> Result<f64> {
    let e = mm + params.d() - 1.0;
    if !(e + q * f.power() > -1.0) {
        return Err(FkaError::Divergent("density is not integrable at the origin".into()));
    }
    let s = sample_for(params.a(), f, q, e, true)?;
    let pw = f.power();
    let mut pos = 0.0;
    let mut neg = 0.0;
    for ((w, v), &r) in s.rule.w.iter().zip(&s.vals).zip(&s.rule.r) {
        let red = v.norm().powf(q); // h r^{-mm - q pw}
        if red == 0.0 {
            continue;
        }
        let ln_h = red.ln() + (mm + q * pw) * r.ln();
        let term = -w * red * ln_h;
        if term >= 0.0 {
            pos += term;
        } else {
            neg += term;
        }
    }
    let val = params.big_k() * (pos + neg);
    if !val.is_finite() {
        return Err(FkaError::Divergent("entropy integral does not converge".into()));
    }
    Ok(val)
}
