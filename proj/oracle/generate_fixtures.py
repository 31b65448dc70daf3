"""Golden values for the C++ conformance test, computed with mpmath.

Run from the repo root:  python3 oracle/generate_fixtures.py [suite ...]
Writes fixtures/<suite>.json with cases sorted by case_id. Output is
deterministic; rerunning gives byte-identical files.
"""

import json
import sys
from pathlib import Path

import mpmath as mp

DPS = 60
DIGITS = 50
OUT = Path(__file__).resolve().parent.parent / "fixtures"


def s(x):
    return mp.nstr(mp.mpf(x), DIGITS, min_fixed=-mp.inf, max_fixed=mp.inf) if x != 0 else "0"


def cval(z):
    z = mp.mpc(z)
    return {"re": s(z.real), "im": s(z.imag)}


def inp(v):
    if isinstance(v, (complex, mp.mpc)) or (isinstance(v, tuple)):
        if isinstance(v, tuple):
            v = mp.mpc(mp.mpf(v[0]), mp.mpf(v[1]))
        return cval(v)
    return repr(v) if isinstance(v, float) else str(v)


def record(case_id, inputs, expected, ref, digits=DIGITS):
    return {
        "case_id": case_id,
        "inputs": {k: inp(v) for k, v in sorted(inputs.items())},
        "expected": cval(expected),
        "digits": digits,
        "formula_ref": ref,
    }


def lam(re, im):
    return mp.mpc(mp.mpf(str(re)), mp.mpf(str(im)))


def rho(p, q):
    return mp.mpf(p + q - 2) / 2


# ---------------------------------------------------------------- series

def gamma_direct(p, q, k, l, lm, n):
    """Gamma_m, m = 0..n, from substituting e^{(lambda-rho)t} sum a_j x^j,
    x = e^{-2t}, into f'' + ((p-1)tanh + (q-1)coth) f' + V f = (lambda^2-rho^2) f
    with V = k(k+p-2) sech^2 - l(l+q-2) csch^2."""
    r = rho(p, q)
    jmax = n // 2
    g = [2 * r] + [2 * (p - 1) * (-1) ** m + 2 * (q - 1) for m in range(1, jmax + 1)]
    kk = k * (k + p - 2)
    ll = l * (l + q - 2)
    V = [0] + [4 * kk * (-1) ** (m - 1) * m - 4 * ll * m for m in range(1, jmax + 1)]
    a = [mp.mpc(1)]
    for j in range(1, jmax + 1):
        acc = mp.mpc(0)
        for m in range(1, j + 1):
            acc += (g[m] * (lm - r - 2 * (j - m)) + V[m]) * a[j - m]
        a.append(-acc / (2 * j * (2 * j - 2 * lm)))
    out = [mp.mpc(0)] * (n + 1)
    for j in range(jmax + 1):
        out[2 * j] = a[j]
    return out


def b_series(p, q, n):
    alpha = mp.mpf(p - 1) / 2
    beta = mp.mpf(q - 1) / 2
    tay = mp.taylor(lambda x: (1 + x) ** (-alpha) * (1 - x) ** (-beta), 0, n // 2)
    out = [mp.mpf(0)] * (n + 1)
    for j, v in enumerate(tay):
        out[2 * j] = v
    return out


def gamma_tilde_direct(p, q, k, l, lm, n):
    G = gamma_direct(p, q, k, l, lm, n)
    b = b_series(p, q, n)
    T = []
    for m in range(n + 1):
        T.append(G[m] - sum(b[i] * T[m - i] for i in range(1, m + 1)))
    return T


def phi_sum(p, q, k, l, lm, t, terms=None):
    t = mp.mpf(t)
    if terms is None:
        terms = int(2 * (DPS * mp.log(10) / (2 * t))) + 40
    G = gamma_direct(p, q, k, l, lm, terms)
    x = mp.exp(-t)
    return mp.exp((lm - rho(p, q)) * t) * mp.fsum(G[m] * x ** m for m in range(0, terms + 1, 2))


# ---------------------------------------------------------------- closed forms

def c_fn(p, q, k, l, lm):
    r = rho(p, q)
    K, L = abs(k), abs(l)
    num = mp.gamma((lm + r + K + L) / 2) * mp.gamma(-lm) * mp.gamma((lm - r + q - K + L) / 2)
    den = mp.gamma((-lm + r + K + L) / 2) * mp.gamma(lm) * mp.gamma((-lm - r + q - K + L) / 2)
    return 2 ** (2 * lm) * num / den


def e_closed(p, q, k, l, lm, t):
    r = rho(p, q)
    K, L = abs(k), abs(l)
    t = mp.mpf(t)
    a = (lm + r + K + L) / 2
    b = (-lm + r + K + L) / 2
    c = mp.mpf(q) / 2 + L
    pre = 2 ** (lm - r) * mp.cosh(t) ** K * mp.sinh(t) ** L
    pre *= mp.gamma(a) * mp.gamma((lm - r + q - K + L) / 2) / (mp.gamma(lm) * mp.gamma(c))
    return pre * mp.hyp2f1(a, b, c, -mp.sinh(t) ** 2)


def pR_roots(p, q, k, l, R):
    r = rho(p, q)
    top = int(mp.floor(R))
    if k == 0 and l == 0:
        out = []
        for j in range(top + 1):
            out += [-r - 2 * j, r - q - 2 * j]
        return out
    K, L = abs(k), abs(l)
    out = []
    for start in (-r - K - L, r - q + K - L):
        x = start
        while x >= -R:
            out.append(x)
            x -= 2
    return out


def regularized(p, q, k, l, R, lm0, t):
    eps = mp.mpf(10) ** -(DPS // 2 + 10)
    with mp.workdps(2 * DPS):
        vals = []
        for d in (eps, -eps):
            z = mp.mpc(lm0) + d
            pr = mp.fprod(z - x for x in pR_roots(p, q, k, l, R))
            vals.append(pr * e_closed(p, q, k, l, z, t))
        return (vals[0] + vals[1]) / 2


def bump(a, b):
    a, b = mp.mpf(a), mp.mpf(b)
    return lambda t: mp.exp(-1 / ((t - a) * (b - t))) if a < t < b else mp.mpf(0)


def fourier(p, q, k, l, a, b, lm):
    f = bump(a, b)
    J = lambda t: mp.cosh(t) ** (p - 1) * mp.sinh(t) ** (q - 1)
    g = lambda t: f(t) * J(t) * e_closed(p, q, k, l, -lm, t)
    return mp.quad(g, mp.linspace(a, b, 9))


# ---------------------------------------------------------------- checks

def agree(x, y, digits, what):
    err = abs(x - y) / max(abs(y), mp.mpf(10) ** -DPS)
    if err > mp.mpf(10) ** -digits:
        raise SystemExit(f"oracle self-check failed: {what}: rel err {mp.nstr(err, 5)}")


def stable(fn, what, digits=DIGITS):
    """Evaluates fn at DPS and DPS + 20 and insists they agree to `digits`."""
    v1 = fn()
    with mp.workdps(DPS + 20):
        v2 = fn()
    agree(v1, v2, digits, what)
    return v2


# ---------------------------------------------------------------- suites

def suite_log_gamma():
    out = []
    for i, (re, im) in enumerate([(0.5, 1.0), (3.7, -2.2), (-4.3, 0.1), (20, 15), (0.01, 0.01), (-0.5, -7.5)]):
        z = lam(re, im)
        v = stable(lambda: mp.loggamma(z), "loggamma")
        out.append(record(f"log_gamma_{i:02d}", {"z": z}, v, "principal log Gamma"))
    return out


def suite_hyp2f1():
    cases = [
        ((1.25, 0.5), (0.25, -0.5), 1.5, -10),
        ((1.25, 0.5), (0.25, -0.5), 1.5, -0.3),
        ((0.7, 2.0), (1.9, -1.0), 2.5, -1.2),
        ((2.5, 0.0), (0.5, 3.0), 1.0, -3.5),
        ((0.3, -4.0), (1.1, 4.0), 3.0, -100),
        ((1.5, 0.2), (0.5, 0.2), 2.0, -5),
    ]
    out = []
    for i, (a, b, c, z) in enumerate(cases):
        A, B = lam(*a), lam(*b)
        v = stable(lambda: mp.hyp2f1(A, B, c, z), "hyp2f1")
        # direct summation after Pfaff, a separate path through mpmath
        w = mp.mpf(z) / (mp.mpf(z) - 1)
        alt = (1 - mp.mpf(z)) ** (-A) * mp.hyp2f1(A, c - B, c, w)
        agree(v, alt, 40, "hyp2f1 pfaff")
        out.append(record(f"hyp2f1_{i:02d}", {"a": A, "b": B, "c": mp.mpc(c), "z": z}, v, "Gauss 2F1, z <= 0"))
    return out


def suite_b_coeffs():
    out = []
    for p, q, m in [(3, 3, 2), (3, 2, 6), (5, 3, 10), (7, 2, 8), (2, 1, 4)]:
        v = b_series(p, q, m)[m]
        out.append(record(f"b_p{p}q{q}_m{m:02d}", {"p": p, "q": q, "m": m}, v,
                          "expansion of 2^-rho J^-1/2 e^{rho t} in e^-t"))
    return out


def suite_cs_series():
    out = []
    for t, n in [(1, 60), (0.5, 200)]:
        t = mp.mpf(t)
        v = mp.fsum(4 * (-1) ** j * j * mp.exp(-2 * j * t) for j in range(1, n // 2 + 1))
        agree(v, -mp.sech(t) ** 2, 20, "cs series vs -sech^2")
        out.append(record(f"cs_t{s(t)[:3]}_n{n}", {"t": t, "n_max": n}, v, "partial sum of c_m e^-mt"))
    return out


KT_CASES = [
    (3, 2, None, (0.7, 0.3), [4, 5, 10]),
    (5, 3, None, (2, 0), [2]),
    (5, 3, (2, 1), (0.3, 0.4), [6]),
    (7, 2, (1, 0), (1.3, -0.6), [8]),
    (2, 1, None, (-1.7, 2.1), [12]),
]


def kt_inputs(p, q, kt, lm):
    d = {"p": p, "q": q, "lambda": lm}
    if kt:
        d["k"], d["l"] = kt
    return d


def kt_tag(p, q, kt):
    return f"p{p}q{q}" + (f"_k{kt[0]}l{kt[1]}" if kt else "")


def suite_gamma(kind):
    out = []
    for p, q, kt, lmv, ms in KT_CASES:
        lm = lam(*lmv)
        k, l = kt or (0, 0)
        n = max(ms)
        tab = (gamma_tilde_direct if kind == "tilde" else gamma_direct)(p, q, k, l, lm, n)
        for m in ms:
            out.append(record(f"{kind}_{kt_tag(p, q, kt)}_l{lmv[0]}_{lmv[1]}_m{m:02d}",
                              dict(kt_inputs(p, q, kt, lm), m=m), tab[m],
                              "Harish-Chandra coefficients" + (" (tilde)" if kind == "tilde" else "")))
    return out


def suite_phi_series():
    out = []
    for p, q, kt, lmv, t in [(3, 2, None, (1, 1), 1.5), (5, 3, None, (0.4, 0.9), 2), (5, 3, (2, 1), (2.2, 0.5), 1),
                             (2, 1, None, (-0.6, 3.3), 0.8)]:
        lm = lam(*lmv)
        k, l = kt or (0, 0)
        v = stable(lambda: phi_sum(p, q, k, l, lm, t), "phi")
        out.append(record(f"phi_{kt_tag(p, q, kt)}_l{lmv[0]}_{lmv[1]}_t{t}", dict(kt_inputs(p, q, kt, lm), t=t), v,
                          "Harish-Chandra series"))
    return out


def suite_c_function():
    out = []
    for p, q, kt, lmv in [(3, 2, None, (0.8, 1.1)), (5, 3, (2, 1), (0.3, 2)), (2, 1, None, (1.7, 0.2)),
                          (7, 2, None, (0, 5)), (3, 3, (1, 2), (-2.4, 0.7))]:
        lm = lam(*lmv)
        k, l = kt or (0, 0)
        v = c_fn(p, q, k, l, lm)
        agree(v * c_fn(p, q, k, l, -lm), mp.mpf(1), 40, "c(l)c(-l) = 1")
        out.append(record(f"c_{kt_tag(p, q, kt)}_l{lmv[0]}_{lmv[1]}", kt_inputs(p, q, kt, lm), v, "c-function"))
    return out


def suite_eisenstein():
    out = []
    for p, q, kt, lmv, t in [(3, 2, None, (1, 0.5), 1), (5, 3, None, (0.4, 0.9), 2), (5, 3, (2, 1), (0.6, -0.3), 0.7),
                             (2, 1, None, (2.5, 3), 0.3), (7, 2, None, (0.2, 12), 1.5), (3, 3, (1, 2), (1.1, 1.4), 2.5)]:
        lm = lam(*lmv)
        k, l = kt or (0, 0)
        v = e_closed(p, q, k, l, lm, t)
        if t >= 0.5:
            alt = phi_sum(p, q, k, l, lm, t) + c_fn(p, q, k, l, lm) * phi_sum(p, q, k, l, -lm, t)
            agree(v, alt, 40, "closed form vs series")
        out.append(record(f"eis_{kt_tag(p, q, kt)}_l{lmv[0]}_{lmv[1]}_t{t}", dict(kt_inputs(p, q, kt, lm), t=t), v,
                          "normalized Eisenstein integral, closed form"))
    return out


def suite_regularized():
    out = []
    for p, q, kt, l0, R, t in [(7, 3, None, 1, 3, 1), (7, 2, None, 1.5, 2, 0.8), (5, 3, (2, 1), 1, 2, 1.2),
                               (9, 2, None, 0.5, 1, 2), (7, 2, None, -0.5, 3, 1.3)]:
        k, l = kt or (0, 0)
        v = regularized(p, q, k, l, R, l0, t)
        d = {"p": p, "q": q, "lambda0": mp.mpc(l0), "R": R, "t": t}
        if kt:
            d["k"], d["l"] = kt
        out.append(record(f"reg_{kt_tag(p, q, kt)}_l{l0}_R{R}_t{t}", d, v, "p_R E° limit at an E° pole", digits=30))
    return out


def suite_fourier():
    out = []
    with mp.workdps(40):
        for p, q, kt, lmv in [(3, 2, None, (0.5, 2)), (5, 3, None, (-0.8, 4.2)), (7, 2, None, (1.3, 9.5)),
                              (2, 1, None, (0.2, -1.4)), (5, 3, (2, 1), (0.7, 1.9))]:
            lm = lam(*lmv)
            k, l = kt or (0, 0)
            v = fourier(p, q, k, l, 1, 2, lm)
            with mp.workdps(50):
                v2 = fourier(p, q, k, l, 1, 2, lm)
            agree(v, v2, 30, "fourier quadrature")
            out.append(record(f"fourier_{kt_tag(p, q, kt)}_l{lmv[0]}_{lmv[1]}",
                              dict(kt_inputs(p, q, kt, lm), a=1, b=2), v2, "spherical transform, smooth bump [1,2]",
                              digits=30))
    return out


SUITES = {
    "log_gamma": suite_log_gamma,
    "hyp2f1": suite_hyp2f1,
    "b_coeffs": suite_b_coeffs,
    "cs_series": suite_cs_series,
    "gamma_tilde": lambda: suite_gamma("tilde"),
    "gamma_coeffs": lambda: suite_gamma("gamma"),
    "phi_series": suite_phi_series,
    "c_function": suite_c_function,
    "eisenstein": suite_eisenstein,
    "regularized": suite_regularized,
    "fourier": suite_fourier,
}


def main(argv):
    mp.mp.dps = DPS
    names = argv or sorted(SUITES)
    OUT.mkdir(exist_ok=True)
    for name in names:
        cases = sorted(SUITES[name](), key=lambda c: c["case_id"])
        ids = [c["case_id"] for c in cases]
        if len(set(ids)) != len(ids):
            raise SystemExit(f"duplicate case ids in {name}")
        (OUT / f"{name}.json").write_text(json.dumps({"suite": name, "cases": cases}, indent=1) + "\n")
        print(f"{name}: {len(cases)} cases")


if __name__ == "__main__":
    main(sys.argv[1:])
