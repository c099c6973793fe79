//! Laguerre polynomials, normalized Bessel functions and log-gamma.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{FkaError, Result};
use crate::quad::gauss_jacobi;

#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];

/// ln Gamma(x) for x > 0 (NaN otherwise; see `try_log_gamma`).
pub fn log_gamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x < 0.5 {
        // the Lanczos sum loses relative accuracy near the pole
        return log_gamma(x + 1.0) - x.ln();
    }
    let mut y = x;
    let tmp = x + 5.242_187_5;
    let tmp = (x + 0.5) * tmp.ln() - tmp;
    let mut ser = 0.999_999_999_999_997_1;
    for c in LANCZOS {
        y += 1.0;
        ser += c / y;
    }
    tmp + (2.506_628_274_631_000_5 * ser / x).ln()
}

pub fn try_log_gamma(x: f64) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(log_gamma(x))
    } else {
        Err(FkaError::Domain(format!("log_gamma needs x > 0, got {x}")))
    }
}

/// 1/Gamma(x) for x > 0.
pub fn rgamma(x: f64) -> f64 {
    (-log_gamma(x)).exp()
}

pub const LAGUERRE_MAX_DEGREE: usize = 64;

/// L_ell^{(lambda)}(t) by the three-term recurrence.
pub fn laguerre(ell: usize, lambda: f64, t: f64) -> Result<f64> {
    check_laguerre(ell, lambda)?;
    Ok(laguerre_unchecked(ell, lambda, t))
}

fn check_laguerre(ell: usize, lambda: f64) -> Result<()> {
    if !(lambda > -1.0) {
        return Err(FkaError::Domain(format!("Laguerre parameter must exceed -1, got {lambda}")));
    }
    if ell > LAGUERRE_MAX_DEGREE {
        return Err(FkaError::Domain(format!("Laguerre degree {ell} above {LAGUERRE_MAX_DEGREE}")));
    }
    Ok(())
}

pub(crate) fn laguerre_unchecked(ell: usize, lambda: f64, t: f64) -> f64 {
    let mut prev = 1.0;
    if ell == 0 {
        return prev;
    }
    let mut cur = 1.0 + lambda - t;
    for j in 1..ell {
        let jf = j as f64;
        let next = ((2.0 * jf + lambda + 1.0 - t) * cur - (jf + lambda) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// All of L_0..L_ell at t.
pub fn laguerre_all(ell: usize, lambda: f64, t: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(ell + 1);
    out.push(1.0);
    if ell == 0 {
        return out;
    }
    out.push(1.0 + lambda - t);
    for j in 1..ell {
        let jf = j as f64;
        let next = ((2.0 * jf + lambda + 1.0 - t) * out[j] - (jf + lambda) * out[j - 1]) / (jf + 1.0);
        out.push(next);
    }
    out
}

/// Explicit alternating sum; kept as a cross-check for small degrees.
pub fn laguerre_sum(ell: usize, lambda: f64, t: f64) -> Result<f64> {
    check_laguerre(ell, lambda)?;
    let mut s = 0.0;
    for j in 0..=ell {
        let lb = log_binom(ell as f64 + lambda, (ell - j) as f64);
        let mag = (lb - log_gamma(j as f64 + 1.0)).exp();
        let sign = if j % 2 == 1 { -1.0 } else { 1.0 };
        s += sign * mag * t.powi(j as i32);
    }
    Ok(s)
}

/// ln C(x, j) for x > j - 1, j a nonnegative integer.
fn log_binom(x: f64, j: f64) -> f64 {
    log_gamma(x + 1.0) - log_gamma(j + 1.0) - log_gamma(x - j + 1.0)
}

/// J~_nu(omega) = (omega/2)^{-nu} J_nu(omega).
pub fn bessel_j_norm(nu: f64, omega: f64) -> Result<f64> {
    if !(nu > -1.0) {
        return Err(FkaError::Domain(format!("Bessel order must exceed -1, got {nu}")));
    }
    if !(omega >= 0.0) || !omega.is_finite() {
        return Err(FkaError::Domain(format!("Bessel argument must be finite and >= 0, got {omega}")));
    }
    Ok(j_norm(nu, omega))
}

pub(crate) fn j_norm(nu: f64, w: f64) -> f64 {
    if w <= 12.0 || w < 0.5 * nu {
        j_series(nu, w)
    } else if w >= 25.0 && nu <= w {
        j_asymptotic(nu, w)
    } else {
        j_miller(nu, w)
    }
}

fn j_series(nu: f64, w: f64) -> f64 {
    let q = 0.25 * w * w;
    let mut term = rgamma(nu + 1.0);
    let mut sum = term;
    let mut l = 0.0;
    loop {
        l += 1.0;
        term *= -q / (l * (nu + l));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && l > 0.5 * w {
            break;
        }
        if l > 500.0 {
            break;
        }
    }
    sum
}

/// Hankel expansion of J_mu(w) for moderate mu and large w.
fn j_hankel(mu: f64, w: f64) -> f64 {
    let m4 = 4.0 * mu * mu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut t = 1.0f64;
    for j in 1..60 {
        let odd = (2 * j - 1) as f64;
        let nt = t * (m4 - odd * odd) / (8.0 * j as f64 * w);
        if nt.abs() > t.abs() {
            break;
        }
        t = nt;
        match j % 4 {
            1 => q += t,
            2 => p -= t,
            3 => q -= t,
            _ => p += t,
        }
        if t.abs() < 1e-17 {
            break;
        }
    }
    let phi = (0.5 * mu + 0.25) * PI;
    let (sw, cw) = w.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let cos_chi = cw * cp + sw * sp;
    let sin_chi = sw * cp - cw * sp;
    (2.0 / (PI * w)).sqrt() * (p * cos_chi - q * sin_chi)
}

fn j_asymptotic(nu: f64, w: f64) -> f64 {
    let jnu = if nu < 0.0 {
        j_hankel(nu, w)
    } else {
        let n = nu.floor();
        let nu0 = nu - n;
        let mut jm = j_hankel(nu0, w);
        if n == 0.0 {
            jm
        } else {
            let mut j = j_hankel(nu0 + 1.0, w);
            let mut mu = nu0 + 1.0;
            while mu < nu - 0.5 {
                let next = 2.0 * mu / w * j - jm;
                jm = j;
                j = next;
                mu += 1.0;
            }
            j
        }
    };
    jnu * (-nu * (0.5 * w).ln()).exp()
}

/// Backward recurrence normalized by the Neumann series
/// (w/2)^{nu0} = sum_j (nu0+2j) Gamma(nu0+j)/j! J_{nu0+2j}(w).
fn j_miller(nu: f64, w: f64) -> f64 {
    let (nu0, n): (f64, i64) = if nu > 0.0 {
        let n = nu.ceil() as i64 - 1;
        (nu - n as f64, n)
    } else {
        (nu + 1.0, -1)
    };
    let top = (n.max(0) as f64).max(w);
    let mut m = (top + 40.0 + 2.0 * top.sqrt()).ceil() as i64;
    if m % 2 == 1 {
        m += 1;
    }
    let mut y_next = 0.0; // y_{k+1}
    let mut y = 1e-280; // y_k
    let mut sum = 0.0;
    let mut target = 0.0;
    let lg0 = log_gamma(nu0);
    let mut k = m;
    loop {
        if k % 2 == 0 {
            let j = (k / 2) as f64;
            let c = (nu0 + k as f64) * (log_gamma(nu0 + j) - log_gamma(j + 1.0)).exp();
            let c = if k == 0 { nu0 * lg0.exp() } else { c };
            sum += c * y;
        }
        if k == n {
            target = y;
        }
        if k == 0 {
            break;
        }
        let y_prev = 2.0 * (nu0 + k as f64) / w * y - y_next;
        y_next = y;
        y = y_prev;
        k -= 1;
        if y.abs() > 1e250 {
            y *= 1e-250;
            y_next *= 1e-250;
            sum *= 1e-250;
            target *= 1e-250;
        }
    }
    if n == -1 {
        // J_{nu0-1} = (2 nu0 / w) J_{nu0} - J_{nu0+1}
        target = 2.0 * nu0 / w * y - y_next;
    }
    // J_nu = target (w/2)^{nu0} / sum;  J~ = J_nu (w/2)^{-nu}
    target / sum * (-(n as f64) * (0.5 * w).ln()).exp()
}

/// I~_lambda(w) = (w/2)^{-lambda} I_lambda(w) for complex w.
pub fn bessel_i_norm(lambda: f64, w: C64) -> Result<C64> {
    if !(lambda > -1.0) {
        return Err(FkaError::Domain(format!("Bessel order must exceed -1, got {lambda}")));
    }
    if !w.re.is_finite() || !w.im.is_finite() {
        return Err(FkaError::Domain("non-finite Bessel argument".into()));
    }
    Ok(i_norm(lambda, w))
}

pub(crate) fn i_norm(lambda: f64, w: C64) -> C64 {
    let aw = w.norm();
    if aw <= 12.0 || aw - w.re.abs() <= 9.0 {
        i_series(lambda, w)
    } else if lambda > -0.5 {
        i_integral(lambda, w)
    } else {
        (lambda + 1.0) * i_norm(lambda + 1.0, w) + 0.25 * w * w * i_norm(lambda + 2.0, w)
    }
}

fn i_series(lambda: f64, w: C64) -> C64 {
    let q = 0.25 * w * w;
    let mut term = C64::new(rgamma(lambda + 1.0), 0.0);
    let mut sum = term;
    let mut l = 0.0;
    let aw = w.norm();
    loop {
        l += 1.0;
        term *= q / (l * (lambda + l));
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() && l > 0.5 * aw {
            break;
        }
        if l > 1000.0 {
            break;
        }
    }
    sum
}

/// I~_lambda(w) = 1/(sqrt(pi) Gamma(lambda+1/2)) int_{-1}^{1} e^{wt}(1-t^2)^{lambda-1/2} dt.
fn i_integral(lambda: f64, w: C64) -> C64 {
    let n = (((0.8 * w.norm() + 32.0) / 8.0).ceil() * 8.0) as usize;
    let rule = gauss_jacobi(n, lambda - 0.5, lambda - 0.5);
    let mut s = C64::new(0.0, 0.0);
    for (t, wt) in rule.nodes.iter().zip(&rule.weights) {
        s += wt * (w * t).exp();
    }
    s * (-(0.5 * PI.ln()) - log_gamma(lambda + 0.5)).exp()
}
