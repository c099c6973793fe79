//! Gauss rules from the Golub–Welsch eigenproblem, and radial panel rules
//! in the variable x = r^{a/2}.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{FkaError, Result};
use crate::specfun::log_gamma;

/// Nodes and weights on the reference interval of the family.
#[derive(Debug, Clone)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

#[derive(Hash, PartialEq, Eq, Clone, Copy)]
enum Family {
    Jacobi(u64, u64),
    Laguerre(u64),
}

type Cache = Mutex<HashMap<(Family, usize), Arc<Rule>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss–Jacobi rule for weight (1-x)^alpha (1+x)^beta on [-1, 1].
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Arc<Rule> {
    let key = (Family::Jacobi(alpha.to_bits(), beta.to_bits()), n);
    if let Some(r) = cache().lock().unwrap().get(&key) {
        return r.clone();
    }
    let (diag, off, mu0) = jacobi_coeffs(n, alpha, beta);
    let rule = Arc::new(golub_welsch(&diag, &off, mu0));
    cache().lock().unwrap().insert(key, rule.clone());
    rule
}

pub fn gauss_legendre(n: usize) -> Arc<Rule> {
    gauss_jacobi(n, 0.0, 0.0)
}

/// Generalized Gauss–Laguerre rule for weight x^alpha e^{-x} on (0, inf).
pub fn gauss_laguerre(n: usize, alpha: f64) -> Arc<Rule> {
    let key = (Family::Laguerre(alpha.to_bits()), n);
    if let Some(r) = cache().lock().unwrap().get(&key) {
        return r.clone();
    }
    // one extra coefficient so the polish step can evaluate p_n
    let diag: Vec<f64> = (0..=n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let off: Vec<f64> = (0..=n).map(|k| if k == 0 { 0.0 } else { (k as f64 * (k as f64 + alpha)).sqrt() }).collect();
    let mu0 = log_gamma(alpha + 1.0).exp();
    let rule = Arc::new(golub_welsch(&diag, &off, mu0));
    cache().lock().unwrap().insert(key, rule.clone());
    rule
}

fn jacobi_coeffs(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>, f64) {
    let ab = a + b;
    let mut diag = Vec::with_capacity(n + 1);
    let mut off = vec![0.0; n + 1];
    for k in 0..=n {
        let kf = k as f64;
        let d = if k == 0 { (b - a) / (ab + 2.0) } else { (b * b - a * a) / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0)) };
        diag.push(d);
        if k == 1 {
            off[1] = (4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))).sqrt();
        } else if k > 1 {
            let s = 2.0 * kf + ab;
            off[k] = (4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))).sqrt();
        }
    }
    let mu0 =
        ((ab + 1.0) * std::f64::consts::LN_2 + log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(ab + 2.0)).exp();
    (diag, off, mu0)
}

/// `diag` and `off` carry n+1 entries; the first n define the Jacobi matrix.
fn golub_welsch(diag: &[f64], off: &[f64], mu0: f64) -> Rule {
    let n = diag.len() - 1;
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
        if i + 1 < n {
            m[(i, i + 1)] = off[i + 1];
            m[(i + 1, i)] = off[i + 1];
        }
    }
    let eig = SymmetricEigen::new(m);
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut weights = Vec::with_capacity(n);
    for x in nodes.iter_mut() {
        // Newton polish on p_n, then Christoffel weight 1/sum p_k^2
        for _ in 0..2 {
            let (pn, dpn, _) = orthonormal_eval(diag, off, mu0, *x, n);
            if dpn != 0.0 && dpn.is_finite() {
                let step = pn / dpn;
                if step.is_finite() && step.abs() < 1e-6 * (1.0 + x.abs()) {
                    *x -= step;
                }
            }
        }
        let (_, _, s) = orthonormal_eval(diag, off, mu0, *x, n);
        weights.push(1.0 / s);
    }
    Rule { nodes, weights }
}

/// Returns (p_n, p_n', sum_{k<n} p_k^2) for the orthonormal family.
fn orthonormal_eval(diag: &[f64], off: &[f64], mu0: f64, x: f64, n: usize) -> (f64, f64, f64) {
    let mut p_prev = 0.0;
    let mut p = 1.0 / mu0.sqrt();
    let mut d_prev = 0.0;
    let mut d = 0.0;
    let mut sum = 0.0;
    for k in 0..n {
        sum += p * p;
        let bk = if k == 0 { 0.0 } else { off[k] };
        let p_next = ((x - diag[k]) * p - bk * p_prev) / off[k + 1];
        let d_next = (p + (x - diag[k]) * d - bk * d_prev) / off[k + 1];
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    (p, d, sum)
}

/// Nodes r_i and weights w_i with sum w_i g(r_i) ~ int_0^R g(r) r^e dr.
#[derive(Debug, Clone, Default)]
pub struct RadialRule {
    pub r: Vec<f64>,
    pub w: Vec<f64>,
}

impl RadialRule {
    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }
}

/// Panel layout for `radial_rule`, in the variable x = r^{a/2}.
#[derive(Debug, Clone, Copy)]
pub struct PanelLayout {
    /// minimum number of panels across [0, R]
    pub panels: usize,
    pub nodes_per_panel: usize,
}

/// Build a rule for int_0^{r_max} g(r) r^e dr. The first panel absorbs the
/// power x^beta exactly; breakpoints (radii) become panel edges.
pub fn radial_rule(a: f64, e: f64, r_max: f64, breaks: &[f64], layout: PanelLayout) -> Result<RadialRule> {
    if !(e > -1.0) {
        return Err(FkaError::Divergent(format!("radial weight r^{e} is not integrable at 0")));
    }
    if !(r_max > 0.0) || !r_max.is_finite() {
        return Ok(RadialRule::default());
    }
    let beta = (2.0 / a) * (e + 1.0) - 1.0;
    let xmax = r_max.powf(a / 2.0);
    let mut edges = vec![0.0];
    let mut bx: Vec<f64> = breaks.iter().filter(|&&b| b > 0.0 && b < r_max).map(|b| b.powf(a / 2.0)).collect();
    bx.sort_by(|x, y| x.partial_cmp(y).unwrap());
    bx.dedup();
    edges.extend(bx);
    edges.push(xmax);
    let h = xmax / layout.panels.max(1) as f64;
    let n = layout.nodes_per_panel.max(2);
    let leg = gauss_legendre(n);
    let jac = gauss_jacobi(n, 0.0, beta);
    let scale = 2.0 / a;
    let mut rule = RadialRule::default();
    let mut first = true;
    for seg in edges.windows(2) {
        let (u, v) = (seg[0], seg[1]);
        if v <= u {
            continue;
        }
        let np = ((v - u) / h).ceil().max(1.0) as usize;
        let hp = (v - u) / np as f64;
        for j in 0..np {
            let lo = u + j as f64 * hp;
            let half = 0.5 * hp;
            if first {
                let f = half.powf(beta + 1.0) * scale;
                for (t, wt) in jac.nodes.iter().zip(&jac.weights) {
                    let x = half * (1.0 + t);
                    rule.r.push(x.powf(2.0 / a));
                    rule.w.push(f * wt);
                }
                first = false;
            } else {
                for (t, wt) in leg.nodes.iter().zip(&leg.weights) {
                    let x = lo + half * (1.0 + t);
                    rule.r.push(x.powf(2.0 / a));
                    rule.w.push(scale * half * wt * x.powf(beta));
                }
            }
        }
    }
    Ok(rule)
}
