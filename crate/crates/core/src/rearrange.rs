//! Distribution functions, decreasing rearrangements and Lorentz functionals
//! against mu_{k,a}, plus closed-form weight constants for power weights.

use crate::geometry::{sample_for, DeformationParams, RadialFn, RadialProfile, Shape, NORM_LAYOUT, NORM_TOL};
use crate::quad::{gauss_legendre, radial_rule};
use crate::{FkaError, Result};

/// f* sampled on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RearrangedFn {
    pub t_grid: Vec<f64>,
    pub values: Vec<f64>,
    /// int |f| dmu
    pub source_mass: f64,
}

/// Common interface of the exact level-set and the slab representations.
pub trait Distribution {
    /// mu{|f| > s}
    fn distribution(&self, s: f64) -> f64;
    /// inf{s >= 0 : D_f(s) <= t}
    fn fstar(&self, t: f64) -> f64;
    /// int_0^inf q s^{q-1} D_f(s)^expo ds
    fn layer_integral(&self, q: f64, expo: f64) -> f64;
    /// int_0^inf phi(f*(t)) dt
    fn fstar_integral(&self, phi: &dyn Fn(f64) -> f64) -> f64;
    /// sup_s s D_f(s)^{1/p}
    fn weak_printed(&self, p: f64) -> f64;
    /// sup_t t^{1/p} f*(t)
    fn weak_standard(&self, p: f64) -> f64;

    /// ||f||*_{p,q}; q = inf gives the printed weak form.
    fn lorentz(&self, p: f64, q: f64) -> Result<f64> {
        if !(p > 1.0 && p.is_finite()) || !(q >= 1.0) {
            return Err(FkaError::Domain(format!("Lorentz norm needs 1 < p < inf and q >= 1 (p = {p}, q = {q})")));
        }
        if q.is_infinite() {
            return Ok(self.weak_printed(p));
        }
        let v = self.layer_integral(q, q / p);
        if !v.is_finite() {
            return Err(FkaError::Divergent(format!("Lorentz ({p},{q}) functional diverges")));
        }
        Ok(v.powf(1.0 / q))
    }
}

fn modulus(f: &dyn RadialFn, r: f64) -> f64 {
    let m = f.degree();
    let v = f.eval(r).norm();
    if m == 0 {
        v
    } else {
        v * r.powi(m as i32)
    }
}

/// Root of a monotone h on [lo, hi] with h(lo) - target and h(hi) - target of
/// opposite signs (Illinois variant of regula falsi).
fn solve_monotone(h: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, target: f64) -> f64 {
    let mut flo = h(lo) - target;
    let mut fhi = h(hi) - target;
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    let mut side = 0;
    for it in 0..200 {
        let width = hi - lo;
        if width <= 1e-15 * hi.abs().max(lo.abs()) || width == 0.0 {
            break;
        }
        let mut x = if flo.is_finite() && fhi.is_finite() && it % 4 != 3 {
            (lo * fhi - hi * flo) / (fhi - flo)
        } else {
            0.5 * (lo + hi)
        };
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = h(x) - target;
        if fx == 0.0 {
            return x;
        }
        if (fx < 0.0) == (flo < 0.0) {
            lo = x;
            flo = fx;
            if side == -1 {
                fhi *= 0.5;
            }
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if side == 1 {
                flo *= 0.5;
            }
            side = 1;
        }
    }
    0.5 * (lo + hi)
}

/// Gauss-Legendre over [lo, hi] on panels graded geometrically toward both ends.
fn graded_integral(lo: f64, hi: f64, levels_lo: usize, levels_hi: usize, f: &dyn Fn(f64) -> f64) -> f64 {
    if !(hi > lo) {
        return 0.0;
    }
    let w = hi - lo;
    let mut cuts = vec![lo, hi];
    for j in 1..=levels_lo {
        cuts.push(lo + 0.5 * w * 0.25f64.powi(j as i32 - 1));
    }
    for j in 1..=levels_hi {
        cuts.push(hi - 0.5 * w * 0.25f64.powi(j as i32));
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let rule = gauss_legendre(10);
    let panel = |a: f64, b: f64| {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        rule.nodes.iter().zip(&rule.weights).map(|(x, wt)| wt * half * f(mid + half * x)).sum::<f64>()
    };
    let first: Vec<f64> = cuts.windows(2).map(|c| panel(c[0], c[1])).collect();
    let tol = 1e-12 * first.iter().map(|v| v.abs()).sum::<f64>();
    cuts.windows(2).zip(first).map(|(c, v)| adaptive(&panel, c[0], c[1], v, tol, 0)).sum()
}

/// Halve a panel until the halves agree with the whole to tol. Level-set
/// functions are smooth on the real line but can have complex singularities
/// close by.
fn adaptive(panel: &dyn Fn(f64, f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (l, r) = (panel(a, m), panel(m, b));
    let split = l + r;
    if depth >= 12 || (split - whole).abs() <= tol {
        return split;
    }
    adaptive(panel, a, m, l, 0.5 * tol, depth + 1) + adaptive(panel, m, b, r, 0.5 * tol, depth + 1)
}

/// Grading depth for the lower end: enough levels to reach lo when it is tiny.
fn levels_toward(lo: f64, hi: f64) -> usize {
    if lo <= 0.0 {
        return 30;
    }
    let ratio = hi / lo;
    ((ratio.ln() / 4f64.ln()).ceil() as usize).clamp(10, 30)
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    g_lo: f64,
    g_hi: f64,
}

/// Exact superlevel sets of g(r) = r^m |psi(r)|, split into monotone pieces.
pub struct LevelSets<'a> {
    f: &'a dyn RadialFn,
    big_k: f64,
    d: f64,
    segs: Vec<Segment>,
    /// distinct knot values, ascending, starting at 0
    levels: Vec<f64>,
    /// D_f at each level (strict superlevel)
    d_at: Vec<f64>,
    /// mu{g >= level}
    d_minus: Vec<f64>,
}

impl<'a> LevelSets<'a> {
    pub fn new(params: &DeformationParams, f: &'a dyn RadialFn) -> Result<Self> {
        let m = f.degree();
        params.require_scalar_modulus(m, "rearrangement")?;
        if m as f64 + f.power() < 0.0 {
            return Err(FkaError::Unsupported("level sets need a profile bounded near the origin".into()));
        }
        let a = params.a();
        let d = params.d();
        let r_end = f.cutoff(1.0, m as f64 + d - 1.0, NORM_TOL)?;
        let n = 2000;
        let xmax = r_end.powf(a / 2.0);
        let mut rs: Vec<f64> = (0..=n).map(|i| (xmax * i as f64 / n as f64).powf(2.0 / a)).collect();
        for b in f.breakpoints() {
            if b > 0.0 && b < r_end {
                rs.push(b);
                rs.push(b * (1.0 + 1e-12));
            }
        }
        rs.sort_by(f64::total_cmp);
        rs.dedup();
        let mut knots: Vec<(f64, f64)> = rs.iter().map(|&r| (r, modulus(f, r))).collect();
        if knots.iter().any(|k| !k.1.is_finite()) {
            return Err(FkaError::Tail(format!("non-finite values of {}", f.describe())));
        }
        // refine interior extrema and keep only turning points and ends
        let dir = |u: f64, v: f64| (v - u).partial_cmp(&0.0).map(|o| o as i8).unwrap_or(0);
        let mut keep = vec![(knots[0].0, knots[0].1)];
        let mut prev_dir = dir(knots[0].1, knots[1].1);
        for i in 1..knots.len() - 1 {
            let nd = dir(knots[i].1, knots[i + 1].1);
            if nd != prev_dir {
                let (lo, hi) = (knots[i - 1].0, knots[i + 1].0);
                let turn = if prev_dir > 0 && nd < 0 {
                    Some(golden(|r| -modulus(f, r), lo, hi))
                } else if prev_dir < 0 && nd > 0 {
                    Some(golden(|r| modulus(f, r), lo, hi))
                } else {
                    None
                };
                let k = match turn {
                    Some(r) => {
                        let g = modulus(f, r);
                        let better = if prev_dir > 0 { g >= knots[i].1 } else { g <= knots[i].1 };
                        if better {
                            (r, g)
                        } else {
                            knots[i]
                        }
                    }
                    None => knots[i],
                };
                knots[i] = k;
                keep.push(k);
                prev_dir = nd;
            }
        }
        keep.push(*knots.last().unwrap());
        let segs: Vec<Segment> =
            keep.windows(2).map(|w| Segment { lo: w[0].0, hi: w[1].0, g_lo: w[0].1, g_hi: w[1].1 }).collect();
        let mut levels: Vec<f64> = keep.iter().map(|k| k.1).chain([0.0]).collect();
        levels.sort_by(f64::total_cmp);
        levels.dedup();
        let mut out = LevelSets { f, big_k: params.big_k(), d, segs, levels, d_at: Vec::new(), d_minus: Vec::new() };
        out.d_at = out.levels.iter().map(|&s| out.measure_above(s, true)).collect();
        out.d_minus = out.levels.iter().map(|&s| out.measure_above(s, false)).collect();
        Ok(out)
    }

    fn shell(&self, lo: f64, hi: f64) -> f64 {
        self.big_k / self.d * (hi.powf(self.d) - lo.powf(self.d))
    }

    /// mu{g > s} (strict) or mu{g >= s}.
    fn measure_above(&self, s: f64, strict: bool) -> f64 {
        let above = |v: f64| if strict { v > s } else { v >= s };
        let mut total = 0.0;
        for sg in &self.segs {
            let (in_lo, in_hi) = (above(sg.g_lo), above(sg.g_hi));
            total += match (in_lo, in_hi) {
                (true, true) => self.shell(sg.lo, sg.hi),
                (false, false) => 0.0,
                _ => {
                    let c = solve_monotone(|r| modulus(self.f, r), sg.lo, sg.hi, s);
                    if in_hi {
                        self.shell(c, sg.hi)
                    } else {
                        self.shell(sg.lo, c)
                    }
                }
            };
        }
        total
    }

    pub fn sup(&self) -> f64 {
        *self.levels.last().unwrap()
    }

    /// Quadrature nodes in s, graded at every level.
    fn s_nodes(&self) -> Vec<f64> {
        let nodes = std::cell::RefCell::new(Vec::new());
        for w in self.levels.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            graded_integral(lo, hi, levels_toward(lo, hi), 10, &|s| {
                nodes.borrow_mut().push(s);
                0.0
            });
        }
        nodes.into_inner()
    }
}

fn golden(h: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let g = 0.618_033_988_749_894_9;
    let (mut l, mut u) = (lo, hi);
    let mut x1 = u - g * (u - l);
    let mut x2 = l + g * (u - l);
    let (mut h1, mut h2) = (h(x1), h(x2));
    for _ in 0..80 {
        if h1 < h2 {
            u = x2;
            x2 = x1;
            h2 = h1;
            x1 = u - g * (u - l);
            h1 = h(x1);
        } else {
            l = x1;
            x1 = x2;
            h1 = h2;
            x2 = l + g * (u - l);
            h2 = h(x2);
        }
    }
    0.5 * (l + u)
}

impl Distribution for LevelSets<'_> {
    fn distribution(&self, s: f64) -> f64 {
        if s < 0.0 {
            return f64::INFINITY;
        }
        self.measure_above(s, true)
    }

    fn fstar(&self, t: f64) -> f64 {
        // d_at is nonincreasing along levels
        let n = self.levels.len();
        for j in (0..n).rev() {
            if self.d_at[j] > t {
                // f* lies in [levels[j], levels[j + 1]]
                if j + 1 >= n {
                    return self.levels[j];
                }
                if self.d_minus[j + 1] <= t {
                    let (lo, hi) = (self.levels[j], self.levels[j + 1]);
                    return solve_monotone(|s| -self.measure_above(s, true), lo, hi, -t);
                }
                return self.levels[j + 1];
            }
        }
        0.0
    }

    fn layer_integral(&self, q: f64, expo: f64) -> f64 {
        let mut total = 0.0;
        for w in self.levels.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            total += graded_integral(lo, hi, levels_toward(lo, hi), 10, &|s| {
                q * s.powf(q - 1.0) * self.distribution(s).powf(expo)
            });
        }
        total
    }

    fn fstar_integral(&self, phi: &dyn Fn(f64) -> f64) -> f64 {
        let n = self.levels.len();
        let mut total = 0.0;
        for j in (1..n).rev() {
            let (s_lo, s_hi) = (self.levels[j - 1], self.levels[j]);
            // plateau at s_hi
            total += (self.d_minus[j] - self.d_at[j]) * phi(s_hi);
            let (t_lo, t_hi) = (self.d_minus[j], self.d_at[j - 1]);
            if t_hi > t_lo {
                let lv_lo = if t_lo <= 0.0 { 30 } else { 10 };
                total += graded_integral(t_lo, t_hi, lv_lo, 10, &|t| {
                    phi(solve_monotone(|s| -self.measure_above(s, true), s_lo, s_hi, -t))
                });
            }
        }
        total
    }

    fn weak_printed(&self, p: f64) -> f64 {
        let mut best = (0.0f64, 0.0f64);
        for s in self.s_nodes() {
            let v = s * self.distribution(s).powf(1.0 / p);
            if v > best.0 {
                best = (v, s);
            }
        }
        // refine around the best node
        let s0 = best.1;
        let h = |s: f64| -(s * self.distribution(s).powf(1.0 / p));
        let s = golden(h, s0 * 0.9, (s0 * 1.1).min(self.sup()));
        best.0.max(-h(s))
    }

    fn weak_standard(&self, p: f64) -> f64 {
        let mut best = (0.0f64, 0.0f64);
        let total = *self.d_at.first().unwrap();
        let n = 400;
        for i in 1..=n {
            let t = total * (1e-12f64).powf(1.0 - i as f64 / n as f64);
            let v = t.powf(1.0 / p) * self.fstar(t);
            if v > best.0 {
                best = (v, t);
            }
        }
        let t0 = best.1;
        let h = |t: f64| -(t.powf(1.0 / p) * self.fstar(t));
        let t = golden(h, t0 * 0.9, t0 * 1.1);
        best.0.max(-h(t))
    }
}

/// Measure-weighted level slabs: each node of a radial rule (or each sample
/// of a sampled profile) owns the mu-measure of its shell.
#[derive(Debug, Clone)]
pub struct Slabs {
    /// values sorted nonincreasing
    pub values: Vec<f64>,
    /// cumulative measure after each slab
    pub cum: Vec<f64>,
}

impl Slabs {
    fn from_pairs(mut pairs: Vec<(f64, f64)>) -> Self {
        pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
        let mut cum = Vec::with_capacity(pairs.len());
        let mut acc = 0.0;
        for p in &pairs {
            acc += p.1;
            cum.push(acc);
        }
        Slabs { values: pairs.into_iter().map(|p| p.0).collect(), cum }
    }

    /// Slabs from the norm quadrature of f.
    pub fn new(params: &DeformationParams, f: &dyn RadialFn) -> Result<Self> {
        let m = f.degree();
        params.require_scalar_modulus(m, "rearrangement")?;
        let s = sample_for(params.a(), f, 1.0, params.d() - 1.0, false)?;
        let pw = f.power();
        let big_k = params.big_k();
        let pairs = s
            .rule
            .r
            .iter()
            .zip(&s.rule.w)
            .zip(&s.vals)
            .map(|((&r, &w), v)| (v.norm() * r.powf(pw + m as f64), big_k * w * r.powf(-pw)))
            .collect();
        Ok(Self::from_pairs(pairs))
    }

    /// Shells between midpoints of a sampled profile; the first shell starts at 0.
    pub fn from_samples(params: &DeformationParams, grid: &[f64], values: &[f64]) -> Result<Self> {
        if grid.len() != values.len() || grid.is_empty() {
            return Err(FkaError::Domain("grid and values differ in length".into()));
        }
        let ball = |r: f64| crate::geometry::ball_measure(params, r);
        let n = grid.len();
        let pairs = (0..n)
            .map(|i| {
                let lo = if i == 0 { 0.0 } else { 0.5 * (grid[i - 1] + grid[i]) };
                let hi = if i + 1 == n { grid[i] } else { 0.5 * (grid[i] + grid[i + 1]) };
                (values[i].abs(), ball(hi) - ball(lo))
            })
            .collect();
        Ok(Self::from_pairs(pairs))
    }

    pub fn total_measure(&self) -> f64 {
        self.cum.last().copied().unwrap_or(0.0)
    }

    /// int_0^s (f*)^q dt
    pub fn partial_power(&self, s: f64, q: f64) -> f64 {
        let mut acc = 0.0;
        let mut prev = 0.0;
        for (v, &c) in self.values.iter().zip(&self.cum) {
            if prev >= s {
                break;
            }
            acc += v.powf(q) * (c.min(s) - prev);
            prev = c;
        }
        acc
    }

    /// int_0^tau f* dt
    pub fn cumulative(&self, tau: f64) -> f64 {
        self.partial_power(tau, 1.0)
    }
}

impl Distribution for Slabs {
    fn distribution(&self, s: f64) -> f64 {
        // values sorted descending: count those above s
        let i = self.values.partition_point(|&v| v > s);
        if i == 0 {
            0.0
        } else {
            self.cum[i - 1]
        }
    }

    fn fstar(&self, t: f64) -> f64 {
        let i = self.cum.partition_point(|&c| c <= t);
        self.values.get(i).copied().unwrap_or(0.0)
    }

    fn layer_integral(&self, q: f64, expo: f64) -> f64 {
        // D_f is constant W_j on [g_{j+1}, g_j)
        let n = self.values.len();
        (0..n)
            .map(|j| {
                let next = if j + 1 < n { self.values[j + 1] } else { 0.0 };
                self.cum[j].powf(expo) * (self.values[j].powf(q) - next.powf(q))
            })
            .sum()
    }

    fn fstar_integral(&self, phi: &dyn Fn(f64) -> f64) -> f64 {
        let mut prev = 0.0;
        let mut acc = 0.0;
        for (v, &c) in self.values.iter().zip(&self.cum) {
            acc += phi(*v) * (c - prev);
            prev = c;
        }
        acc
    }

    fn weak_printed(&self, p: f64) -> f64 {
        self.values.iter().zip(&self.cum).map(|(v, c)| v * c.powf(1.0 / p)).fold(0.0, f64::max)
    }

    fn weak_standard(&self, p: f64) -> f64 {
        // t^{1/p} f*(t) peaks at the right end of each step
        self.weak_printed(p)
    }

    fn lorentz(&self, p: f64, q: f64) -> Result<f64> {
        if !(p > 1.0 && p.is_finite()) || !(q >= 1.0) {
            return Err(FkaError::Domain(format!("Lorentz norm needs 1 < p < inf and q >= 1 (p = {p}, q = {q})")));
        }
        if q.is_infinite() {
            return Ok(self.weak_printed(p));
        }
        let mut prev = 0.0;
        let mut acc = 0.0;
        for (v, &c) in self.values.iter().zip(&self.cum) {
            let cq = c.powf(q / p);
            acc += v.powf(q) * (cq - prev);
            prev = cq;
        }
        Ok(acc.powf(1.0 / q))
    }
}

/// Level sets for analytic profiles, slabs for sampled ones.
pub enum ProfileLevels<'a> {
    Exact(LevelSets<'a>),
    Slabs(Slabs),
}

impl ProfileLevels<'_> {
    fn get(&self) -> &dyn Distribution {
        match self {
            ProfileLevels::Exact(l) => l,
            ProfileLevels::Slabs(s) => s,
        }
    }
}

fn with_levels<T>(
    params: &DeformationParams,
    profile: &RadialProfile,
    op: impl FnOnce(&dyn Distribution) -> Result<T>,
) -> Result<T> {
    let f = profile.bind(params)?;
    let lv = match &profile.shape {
        Shape::Sampled { grid, values } => {
            params.require_scalar_modulus(profile.m, "rearrangement")?;
            let radii: Vec<f64> = grid.iter().map(|g| g / profile.scale).collect();
            let vals: Vec<f64> =
                radii.iter().zip(values).map(|(r, v)| (profile.amp * v).norm() * r.powi(profile.m as i32)).collect();
            ProfileLevels::Slabs(Slabs::from_samples(params, &radii, &vals)?)
        }
        _ => ProfileLevels::Exact(LevelSets::new(params, &f)?),
    };
    op(lv.get())
}

/// mu{|f| > s}
pub fn distribution_fn(params: &DeformationParams, profile: &RadialProfile, s: f64) -> Result<f64> {
    with_levels(params, profile, |d| Ok(d.distribution(s)))
}

pub fn decreasing_rearrangement(
    params: &DeformationParams,
    profile: &RadialProfile,
    t_grid: &[f64],
) -> Result<RearrangedFn> {
    if t_grid.windows(2).any(|w| !(w[1] > w[0])) || t_grid.first().is_some_and(|&t| t < 0.0) {
        return Err(FkaError::Domain("t grid must be increasing and nonnegative".into()));
    }
    with_levels(params, profile, |d| {
        let values = t_grid.iter().map(|&t| d.fstar(t)).collect();
        let source_mass = d.layer_integral(1.0, 1.0);
        Ok(RearrangedFn { t_grid: t_grid.to_vec(), values, source_mass })
    })
}

/// ||f||*_{p,q}; for q = inf the printed form sup_s s D_f(s)^{1/p}.
pub fn lorentz_norm(params: &DeformationParams, profile: &RadialProfile, p: f64, q: f64) -> Result<f64> {
    with_levels(params, profile, |d| d.lorentz(p, q))
}

/// sup_t t^{1/p} f*(t).
pub fn lorentz_weak_standard(params: &DeformationParams, profile: &RadialProfile, p: f64) -> Result<f64> {
    with_levels(params, profile, |d| Ok(d.weak_standard(p)))
}

/// (int |f g| dmu, int f* g* dt) on a rule shared by both factors.
pub fn hardy_littlewood_pair(params: &DeformationParams, f: &dyn RadialFn, g: &dyn RadialFn) -> Result<(f64, f64)> {
    for h in [f, g] {
        params.require_scalar_modulus(h.degree(), "rearrangement")?;
        if h.degree() as f64 + h.power() < 0.0 {
            return Err(FkaError::Unsupported("pairs with factors unbounded at the origin".into()));
        }
    }
    let e = params.d() - 1.0;
    let r_max = f.cutoff(1.0, e, NORM_TOL)?.max(g.cutoff(1.0, e, NORM_TOL)?);
    let mut breaks = f.breakpoints();
    breaks.extend(g.breakpoints());
    let rule = radial_rule(params.a(), e, r_max, &breaks, NORM_LAYOUT)?;
    let big_k = params.big_k();
    let mut lhs = 0.0;
    let mut fp = Vec::with_capacity(rule.len());
    let mut gp = Vec::with_capacity(rule.len());
    for (&r, &w) in rule.r.iter().zip(&rule.w) {
        let (a, b) = (modulus(f, r), modulus(g, r));
        lhs += big_k * w * a * b;
        fp.push((a, big_k * w));
        gp.push((b, big_k * w));
    }
    let (fs, gs) = (Slabs::from_pairs(fp), Slabs::from_pairs(gp));
    // merge the two step functions
    let (mut i, mut j, mut t, mut rhs) = (0, 0, 0.0, 0.0);
    while i < fs.cum.len() && j < gs.cum.len() {
        let next = fs.cum[i].min(gs.cum[j]);
        rhs += fs.values[i] * gs.values[j] * (next - t);
        t = next;
        if fs.cum[i] <= t {
            i += 1;
        }
        if gs.cum[j] <= t {
            j += 1;
        }
    }
    Ok((lhs, rhs))
}

/// Weights offered as Young functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum YoungWeight {
    /// |x|^m
    NormPower(f64),
    /// the density of mu_{k,a} (N = 1)
    Density,
}

/// mu{|psi| <= t} as a closed form, or None for infinite measure.
fn sublevel_measure(params: &DeformationParams, w: YoungWeight, t: f64) -> Result<Option<f64>> {
    let (big_k, d) = (params.big_k(), params.d());
    let expo = match w {
        YoungWeight::NormPower(m) => m,
        YoungWeight::Density => {
            if params.n() != 1 {
                return Err(FkaError::Unsupported("density weight is implemented for N = 1".into()));
            }
            2.0 * params.k() + params.a() - 2.0
        }
    };
    if expo > 0.0 {
        Ok(Some(big_k / d * t.powf(d / expo)))
    } else if expo == 0.0 {
        Ok(if t >= 1.0 { None } else { Some(0.0) })
    } else {
        Ok(None)
    }
}

/// sup_{t > 0} mu{|psi| <= t} / t; infinite suprema are reported as errors.
pub fn young_constant(params: &DeformationParams, w: YoungWeight) -> Result<f64> {
    let not_young = |why: String| Err(FkaError::Inadmissible(format!("not a Young function: {why}")));
    match sublevel_measure(params, w, 1.0)? {
        None => not_young("sublevel sets have infinite measure".into()),
        Some(c) => {
            // mu{psi <= t} = c t^{beta}
            let expo = match w {
                YoungWeight::NormPower(m) => m,
                YoungWeight::Density => 2.0 * params.k() + params.a() - 2.0,
            };
            let beta = params.d() / expo;
            if (beta - 1.0).abs() < 1e-12 {
                Ok(c)
            } else {
                not_young(format!("mu(sublevel) / t ~ t^{:.6}", beta - 1.0))
            }
        }
    }
}

/// sup over 0 < t <= t_max of mu{|psi| <= t} / t.
pub fn young_constant_on(params: &DeformationParams, w: YoungWeight, t_max: f64) -> Result<f64> {
    let expo = match w {
        YoungWeight::NormPower(m) => m,
        YoungWeight::Density => 2.0 * params.k() + params.a() - 2.0,
    };
    match sublevel_measure(params, w, t_max)? {
        None => Err(FkaError::Inadmissible("sublevel sets have infinite measure".into())),
        Some(c) => {
            let beta = params.d() / expo;
            // c t^{beta - 1} is monotone, so the sup sits at an end
            if beta >= 1.0 {
                Ok(c / t_max)
            } else {
                Err(FkaError::Inadmissible(format!("mu(sublevel) / t ~ t^{:.6} blows up at 0", beta - 1.0)))
            }
        }
    }
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

/// B_1 for u = |xi|^{alpha q}, 1/v = |x|^{-l p}.
pub fn pitt_b1(params: &DeformationParams, p: f64, q: f64, alpha: f64, l: f64) -> Result<f64> {
    if !(p > 1.0 && p <= 2.0) || !(q >= p) || !q.is_finite() {
        return Err(FkaError::Domain(format!("need 1 < p <= 2 and p <= q < inf (p = {p}, q = {q})")));
    }
    let d = params.d();
    let pp = conj(p);
    let fail = |s: String| Err(FkaError::Constraint(s));
    if !(alpha > -d / q) {
        return fail(format!("alpha > -D/q violated: alpha = {alpha}, -D/q = {}", -d / q));
    }
    if !(l < d / pp) {
        return fail(format!("l < D/p' violated: l = {l}, D/p' = {}", d / pp));
    }
    if !(l < d / p) {
        return fail(format!("l < D/p violated: l = {l}, D/p = {}", d / p));
    }
    let homo = (alpha + l) / d - (1.0 / pp - 1.0 / q);
    if homo.abs() > 1e-9 {
        return fail(format!(
            "homogeneity condition (alpha + l)/D = 1/p' - 1/q violated: {} vs {}",
            (alpha + l) / d,
            1.0 / pp - 1.0 / q
        ));
    }
    if alpha > 0.0 || l < 0.0 {
        return fail(format!("rearranged power weights need alpha <= 0 <= l (alpha = {alpha}, l = {l})"));
    }
    let big_k = params.big_k();
    Ok((d / big_k).powf((alpha - l) / d) * (1.0 + alpha * q / d).powf(-1.0 / q) * (1.0 - l * pp / d).powf(-1.0 / pp))
}

/// Bracket around the best constant implied by B_1.
pub fn pitt_bracket(b1: f64, p: f64, q: f64) -> (f64, f64) {
    let (pp, qq) = (conj(p), conj(q));
    let hi = if q >= 2.0 { b1 * qq.powf(1.0 / pp) * q.powf(1.0 / q) } else { b1 * p.powf(1.0 / q) * pp.powf(1.0 / pp) };
    (b1, hi)
}

/// A_1 = sup_s (int_s^inf u)^{1/q} (int_0^s v^{1-p'})^{1/p'} for u = t^beta, v = t^gamma.
pub fn hardy_a1(u_power: f64, v_power: f64, p: f64, q: f64) -> Result<f64> {
    if !(p > 1.0 && q >= p && q.is_finite()) {
        return Err(FkaError::Domain(format!("need 1 < p <= q < inf (p = {p}, q = {q})")));
    }
    if !(u_power < -1.0) {
        return Err(FkaError::Divergent(format!("int_s^inf t^{u_power} dt diverges")));
    }
    let pp = conj(p);
    let ev = v_power * (1.0 - pp) + 1.0;
    if !(ev > 0.0) {
        return Err(FkaError::Divergent(format!("int_0^s t^{} dt diverges", ev - 1.0)));
    }
    let s_expo = (u_power + 1.0) / q + ev / pp;
    if s_expo.abs() > 1e-12 {
        return Err(FkaError::Divergent(format!("the product grows like s^{s_expo:.6}")));
    }
    Ok((-u_power - 1.0).powf(-1.0 / q) * ev.powf(-1.0 / pp))
}

/// A_1 <= C <= A_1 (q')^{1/p'} q^{1/q}.
pub fn hardy_bracket(a1: f64, p: f64, q: f64) -> (f64, f64) {
    (a1, a1 * conj(q).powf(1.0 / conj(p)) * q.powf(1.0 / q))
}

/// B_2 for power weights: the defining supremum is infinite.
pub fn pitt_b2(params: &DeformationParams, p: f64, q: f64, alpha: f64, l: f64) -> Result<f64> {
    let d = params.d();
    let r = 1.0 / (1.0 / q - 1.0 / p).abs().max(f64::MIN_POSITIVE);
    Err(FkaError::Divergent(format!(
        "B_2 for |xi|^{alpha} and |x|^{l} is an integral of a pure power over (0, inf) (D = {d}, r = {r}) and diverges"
    )))
}

/// Samples of the rearranged type estimate for one input.
#[derive(Debug, Clone, PartialEq)]
pub struct JtResult {
    pub s: Vec<f64>,
    /// int_0^s [(Ff)*]^q / int_0^s (int_0^{1/t} f*)^q
    pub ratios: Vec<f64>,
    /// sup of ratio^{1/q}
    pub k_q: f64,
}

/// Ratios of the two sides for input slabs of f and output slabs of Ff.
pub fn jt_ratios(f: &Slabs, ff: &Slabs, q: f64, s_grid: &[f64]) -> Result<JtResult> {
    if !(q >= 2.0) {
        return Err(FkaError::Domain(format!("q must be >= 2, got {q}")));
    }
    let mass = f.cumulative(f64::INFINITY);
    let mut ratios = Vec::with_capacity(s_grid.len());
    for &s in s_grid {
        if !(s > 0.0) {
            return Err(FkaError::Domain("s grid must be positive".into()));
        }
        let lhs = ff.partial_power(s, q);
        if mass == 0.0 {
            ratios.push(0.0);
            continue;
        }
        // Phi(1/t) is constant (= mass) for t <= 1/W_total, smooth between kinks 1/W_j
        let w_tot = f.total_measure();
        let mut kinks: Vec<f64> = f.cum.iter().map(|c| 1.0 / c).filter(|&t| t < s).collect();
        kinks.push(s);
        kinks.push(1.0 / w_tot);
        kinks.retain(|&t| t <= s);
        kinks.sort_by(f64::total_cmp);
        kinks.dedup();
        let t0 = kinks[0];
        let mut rhs = mass.powf(q) * t0;
        let rule = gauss_legendre(6);
        for w in kinks.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (h, c) = (0.5 * (b - a), 0.5 * (a + b));
            for (x, wt) in rule.nodes.iter().zip(&rule.weights) {
                rhs += wt * h * f.cumulative(1.0 / (c + h * x)).powf(q);
            }
        }
        ratios.push(lhs / rhs);
    }
    let k_q = ratios.iter().fold(0.0f64, |m, r| m.max(r.powf(1.0 / q)));
    Ok(JtResult { s: s_grid.to_vec(), ratios, k_q })
}

/// Type estimate for F on one profile, with f and Ff rearranged from their quadrature slabs.
pub fn jt_check(
    params: &DeformationParams,
    profile: &RadialProfile,
    q: f64,
    s_grid: &[f64],
    spec: &crate::transform::QuadratureSpec,
) -> Result<JtResult> {
    let f = std::sync::Arc::new(profile.bind(params)?);
    let fs = Slabs::new(params, f.as_ref())?;
    if fs.values.iter().all(|&v| v == 0.0) {
        return Ok(JtResult { s: s_grid.to_vec(), ratios: vec![0.0; s_grid.len()], k_q: 0.0 });
    }
    let t = crate::transform::Transformed::new(params, f, spec)?;
    let ts = Slabs::new(params, &t)?;
    jt_ratios(&fs, &ts, q, s_grid)
}
