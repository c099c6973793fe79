"""Generate frozen reference values for the special-function tests.

Run from the repository root:  python3 tools/oracles.py
Writes crates/core/tests/common/oracles.rs.
"""
import random
import mpmath as mp

mp.mp.dps = 40
rng = random.Random(20240611)


def jnorm(nu, w):
    if w == 0:
        return 1 / mp.gamma(nu + 1)
    return (w / 2) ** (-nu) * mp.besselj(nu, w)


def inorm(lam, w):
    if w == 0:
        return 1 / mp.gamma(lam + 1)
    return (w / 2) ** (-lam) * mp.besseli(lam, w)


def f(x):
    return repr(float(x))


def big_k(n, k):
    # rank-one Z_2^N weight |x_1|^{2k}
    ks = [k] + [0] * (n - 1)
    num = 2 * mp.fprod(mp.gamma(mp.mpf(kj) + mp.mpf(1) / 2) for kj in ks)
    return num / mp.gamma(sum(ks) + mp.mpf(n) / 2)


def psi(shape, u, v, r):
    if shape == 0:
        return mp.exp(-u * r * r)
    if shape == 1:
        return mp.exp(-u * r ** A)
    return r ** (-u) if r <= v else mp.mpf(0)


A = None


def radial_integral(n, k, a, shape, u, v, p, m, extra=lambda r: 1):
    global A
    A = mp.mpf(a)
    e = m * p + 2 * k + n + a - 3
    g = lambda r: abs(psi(shape, u, v, r) * r ** m) ** p / r ** (m * p) * r ** e * extra(r)
    if shape == 2:
        # r = v x^4 removes the algebraic endpoint singularity
        h = lambda x: g(v * x ** 4) * 4 * v * x ** 3
        return big_k(n, k) * mp.quad(h, [0, 1])
    return big_k(n, k) * mp.quad(g, [0, 1, 4, mp.inf])


def norm_rows():
    cases = [
        (1, 0.0, 2.0, 0, 1.0, 0, 2.0, 0),
        (1, 0.0, 2.0, 0, 0.5, 0, 1.0, 0),
        (1, 0.5, 1.0, 0, 0.3, 0, 1.5, 0),
        (1, 1.5, 0.5, 0, 2.0, 0, 3.0, 0),
        (3, 0.0, 2.0, 0, 1.0, 0, 2.0, 0),
        (3, 1.0, 1.0, 0, 0.7, 0, 4.0, 0),
        (2, 0.5, 1.0, 0, 1.0, 0, 1.25, 0),
        (1, 0.0, 2.0, 0, 1.0, 0, 2.0, 1),
        (1, 0.5, 1.0, 1, 1.0, 0, 2.0, 0),
        (1, 0.0, 2.0, 1, 0.5, 0, 1.0, 0),
        (1, 1.5, 0.5, 1, 2.0, 0, 1.5, 0),
        (3, 1.0, 2.0, 1, 0.3, 0, 3.0, 0),
        (3, 0.0, 1.0, 1, 1.0, 0, 2.0, 0),
        (2, 0.25, 0.5, 1, 1.0, 0, 2.0, 0),
        (1, 0.5, 1.0, 1, 1.0, 0, 2.0, 1),
        (1, 0.0, 2.0, 2, 0.2, 1.0, 2.0, 0),
        (1, 0.5, 1.0, 2, 0.5, 2.0, 1.5, 0),
        (3, 0.0, 2.0, 2, 1.0, 1.0, 2.0, 0),
        (3, 1.0, 1.0, 2, -0.5, 0.5, 4.0, 0),
        (2, 0.5, 2.0, 2, 0.75, 3.0, 1.0, 0),
        (1, 1.5, 0.5, 2, 0.3, 1.0, 3.0, 0),
        (1, 0.0, 2.0, 2, 0.1, 1.0, 1.0, 1),
    ]
    rows = []
    for (n, k, a, shape, u, v, p, m) in cases:
        val = radial_integral(n, k, a, shape, mp.mpf(u), mp.mpf(v), mp.mpf(p), m) ** (1 / mp.mpf(p))
        rows.append((n, k, a, shape, u, v, p, m, val))
    return rows


def entropy_rows():
    # -int |psi|^2 ln |psi|^2 dmu for psi = e^{-c r^a}, m = 0
    rows = []
    for (n, k, a, c) in [(1, 0.0, 2.0, 0.5), (1, 0.0, 2.0, 1.0), (1, 0.5, 1.0, 1.0), (3, 0.0, 2.0, 0.5), (2, 0.5, 1.0, 0.3)]:
        global A
        A = mp.mpf(a)
        cc = mp.mpf(c)
        e = 2 * k + n + a - 3
        g = lambda r: mp.exp(-2 * cc * r ** A) * 2 * cc * r ** A * r ** e
        rows.append((n, k, a, c, big_k(n, k) * mp.quad(g, [0, 1, 4, mp.inf])))
    return rows


def lag(ell, lam, x):
    return sum((-1) ** j * mp.binomial(ell + lam, ell - j) * x ** j / mp.factorial(j) for j in range(ell + 1))


def golden(h, lo, hi):
    g = (mp.sqrt(5) - 1) / 2
    for _ in range(200):
        x1, x2 = hi - g * (hi - lo), lo + g * (hi - lo)
        if h(x1) < h(x2):
            hi = x2
        else:
            lo = x1
    return (lo + hi) / 2


def mixture_norm(n, k, a, coeffs, p):
    a = mp.mpf(a)
    lam = (2 * mp.mpf(k) + n - 2) / a
    cs = [mp.mpc(re, im) for re, im in coeffs]
    g = lambda r: abs(sum(c * lag(l, lam, 2 / a * r ** a) for l, c in enumerate(cs)) * mp.exp(-(r ** a) / a))
    e = 2 * k + n + a - 3
    # split at the deep minima of |f| so the quadrature sees the near-kinks
    xs = mp.linspace(0, 60, 6001)
    vs = [g(x) for x in xs]
    cuts = [xs[i] for i in range(1, len(xs) - 1) if vs[i] <= vs[i - 1] and vs[i] < vs[i + 1]]
    pts = [mp.mpf(x) for x in (0, 1, 5, 20, 60)]
    for c in cuts:
        z = golden(g, c - mp.mpf("0.01"), c + mp.mpf("0.01"))
        pts += [z] + [z + sgn * mp.mpf(10) ** -j for j in range(1, 9) for sgn in (-1, 1)]
    pts = sorted(set(x for x in pts if x >= 0))
    return (big_k(n, k) * mp.quad(lambda r: g(r) ** p * r ** e, pts)) ** (1 / mp.mpf(p))


def mixture_rows():
    deep = [(0.024402571703833923, -0.4204935829669999), (-0.11235297887399412, -0.4789202697307985),
            (-0.29642451005912385, -0.9161552087468082), (0.6150577577822378, 0.49530365798090725),
            (0.7559329669122433, -0.35473057091084564)]
    shallow = [(-0.29642451005912385, -0.9161552087468082), (0.7559329669122433, 0.0)]
    cases = [(1, 0.5, 1.0, deep, 1.0), (1, 0.5, 1.0, deep, 3.0), (1, 0.5, 1.0, shallow, 1.0), (3, 1.0, 2.0, deep, 1.5)]
    return [(n, k, a, cs, p, mixture_norm(n, k, a, cs, p)) for n, k, a, cs, p in cases]


def main():
    jrows = []
    for _ in range(100):
        nu = rng.uniform(-0.99, 30.0)
        w = 10 ** rng.uniform(-2, 4)
        jrows.append((nu, w, jnorm(mp.mpf(nu), mp.mpf(w))))
    for nu in (-0.5, 0.0, 0.5, 1.0, 2.5, 7.0):
        for w in (11.9, 12.1, 24.9, 25.1, 60.0):
            jrows.append((nu, w, jnorm(mp.mpf(nu), mp.mpf(w))))

    irows = []
    for _ in range(100):
        lam = rng.uniform(-0.99, 20.0)
        r = rng.uniform(0.0, 100.0)
        th = rng.uniform(-mp.pi, mp.pi)
        w = mp.mpc(r * mp.cos(th), r * mp.sin(th))
        v = inorm(mp.mpf(lam), w)
        irows.append((lam, float(w.real), float(w.imag), v))

    grows = []
    for _ in range(60):
        x = 10 ** rng.uniform(-3, 2.5)
        grows.append((x, mp.loggamma(mp.mpf(x))))

    lrows = []
    for _ in range(60):
        ell = rng.randint(0, 32)
        lam = rng.uniform(-0.9, 10.0)
        t = rng.uniform(-20.0, 200.0)
        lrows.append((ell, lam, t, mp.laguerre(ell, mp.mpf(lam), mp.mpf(t))))

    out = ["// Generated by tools/oracles.py (mpmath, 40 digits). Do not edit.", ""]
    out.append("/// (nu, omega, J~_nu(omega))")
    out.append("pub const J_NORM: &[(f64, f64, f64)] = &[")
    out += [f"    ({f(a)}, {f(b)}, {f(c)})," for a, b, c in jrows]
    out.append("];\n")
    out.append("/// (lambda, re w, im w, re I~, im I~)")
    out.append("pub const I_NORM: &[(f64, f64, f64, f64, f64)] = &[")
    out += [f"    ({f(a)}, {f(b)}, {f(c)}, {f(v.real)}, {f(v.imag)})," for a, b, c, v in irows]
    out.append("];\n")
    out.append("/// (x, ln Gamma(x))")
    out.append("pub const LOG_GAMMA: &[(f64, f64)] = &[")
    out += [f"    ({f(a)}, {f(b)})," for a, b in grows]
    out.append("];\n")
    out.append("/// (ell, lambda, t, L_ell^lambda(t))")
    out.append("pub const LAGUERRE: &[(usize, f64, f64, f64)] = &[")
    out += [f"    ({a}, {f(b)}, {f(c)}, {f(d)})," for a, b, c, d in lrows]
    out.append("];\n")
    out.append("/// (N, k, a, shape, u, v, p, m, ||f||_p); shape 0 = e^{-u r^2}, 1 = e^{-u r^a}, 2 = r^{-u} on [0, v]")
    out.append("pub const NORMS: &[(usize, f64, f64, u8, f64, f64, f64, u32, f64)] = &[")
    out += [f"    ({n}, {f(k)}, {f(a)}, {sh}, {f(u)}, {f(v)}, {f(p)}, {m}, {f(val)})," for n, k, a, sh, u, v, p, m, val in norm_rows()]
    out.append("];\n")
    out.append("/// (N, k, a, mode coefficients, p, ||f||_p) for complex mode mixtures")
    out.append("pub const MIXTURE_NORMS: &[(usize, f64, f64, &[(f64, f64)], f64, f64)] = &[")
    for n, k, a, cs, p, val in mixture_rows():
        body = ", ".join(f"({f(re)}, {f(im)})" for re, im in cs)
        out.append(f"    ({n}, {f(k)}, {f(a)}, &[{body}], {f(p)}, {f(val)}),")
    out.append("];\n")
    out.append("/// (N, k, a, c, E(|e^{-c r^a}|^2))")
    out.append("pub const ENTROPY: &[(usize, f64, f64, f64, f64)] = &[")
    out += [f"    ({n}, {f(k)}, {f(a)}, {f(c)}, {f(v)})," for n, k, a, c, v in entropy_rows()]
    out.append("];")
    with open("crates/core/tests/common/oracles.rs", "w") as fh:
        fh.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
