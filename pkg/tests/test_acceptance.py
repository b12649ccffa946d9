"""The nine acceptance criteria, each at its stated tolerance.

Every test records one line in RESULTS; conftest prints them after the run.
"""
import itertools
import math
import time

import numpy as np
import pytest
from scipy import optimize
from scipy import special as sp

from sneddon import report
from sneddon.closedform import LIMIT_CASES, S1_closed, S_closed
from sneddon.kstheory import resolvent_pde_residual, resolvent_taylor_match
from sneddon.partialfrac import xi_pde_residual
from sneddon.series import SeriesParams, sum_S, sum_S1
from sneddon.sonin import power_spec, power_target, sonin_spec, t_transform
from sneddon.zeros import bessel_zeros

RESULTS = {}


def record(k, ok, detail):
    RESULTS[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(RESULTS[k])
    assert ok, RESULTS[k]


def test_criterion_1_closed_vs_numeric():
    t0 = time.perf_counter()
    worst, count, bad = 0.0, 0, []
    for kind, p in report.closed_rows():
        if kind != "S" or float(p["nu"]).is_integer():
            continue
        c = S_closed(p["n"], p["alpha"], p["beta"], p["nu"], p["x"], p["y"])
        r = sum_S(SeriesParams(p["n"], p["alpha"], p["beta"], p["nu"]), p["x"], p["y"], tol=1e-9, max_terms=2 * 10**5)
        rel = abs(r.value - c) / abs(c)
        worst, count = max(worst, rel), count + 1
        if not (rel <= 1e-7 and r.terms_used <= 2 * 10**5):
            bad.append(p)
    wall = time.perf_counter() - t0
    record(1, count >= 150 and not bad and wall < 120,
           f"{count} tuples, max rel err {worst:.2e}, {len(bad)} failures, {wall:.1f} s")


def trig_oracle(x, y, M=10**6):
    # sum sin(m pi x) sin(m pi y) / (m pi)^2: the oscillating remainder is O(1/M^2);
    # on the diagonal the non-oscillating part 1/(2 m^2 pi^2) has the exact tail psi'(M+1)/(2 pi^2)
    m = np.arange(1, M + 1, dtype=float)
    s = math.fsum(np.sin(m * np.pi * x) * np.sin(m * np.pi * y) / (m * np.pi) ** 2)
    if x == y:
        s += sp.polygamma(1, M + 1) / (2 * np.pi**2)
    return s / math.sqrt(x * y)


def test_criterion_2_half_order():
    errs = []
    for x, y in [(0.8, 0.4), (0.6, 0.6), (0.99, 0.5)]:
        v = sum_S(SeriesParams(0, 0.5, 0.5, 0.5), x, y, tol=1e-12).value
        closed = math.sqrt(x * y) * (1 - x) / (2 * x)
        errs.append(max(abs(v - closed), abs(v - trig_oracle(x, y))))
    record(2, max(errs) <= 1e-10, f"max abs err {max(errs):.2e} against the closed form and direct trig summation")


def test_criterion_3_zeros():
    t = bessel_zeros(0.5, 100).zeros
    e1 = float(np.max(np.abs(t - np.pi * np.arange(1, 101))))
    j10 = optimize.bisect(lambda u: sp.j0(u), 2.0, 3.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    e2 = abs(float(bessel_zeros(0.0, 1).zeros[0]) - j10)
    inter, wmax = True, 0.0
    for nu in (-0.4, 0.0, 0.25, 0.5, 1.3):
        a = bessel_zeros(nu, 201).zeros
        b = bessel_zeros(nu + 1, 200).zeros
        inter &= bool(np.all(a[:200] < b) and np.all(b < a[1:201]))
        j = a[49:200]
        wmax = max(wmax, float(np.max(np.abs(np.pi * j * sp.jv(nu + 1, j) ** 2 - 2))))
    ok = e1 <= 1e-12 and e2 <= 1e-12 and inter and wmax <= 0.05
    record(3, ok, f"m*pi err {e1:.1e}, j_1,0 err {e2:.1e}, interlacing {inter}, weight dev {wmax:.1e}")


def test_criterion_4_partial_fractions():
    worst_b, worst_0, bad = 0.0, 0.0, 0
    for kind, p in report.pfrac_rows():
        lhs, rhs, _ = report._pf_cell(kind, p, 1e-12, report.PFRAC_M)
        if kind == "pf_bessel" and not (p["t"] == 0.0 and p["n"] % 2):
            scale = max(abs(lhs), abs(rhs), 1e-300)
            rel = abs(lhs - rhs) / scale
            worst_b = max(worst_b, rel)
            bad += rel > 1e-6
        else:
            # Phi_nu^2 rows, and odd n at t = 0 where f/Phi_nu^2 is even: both sides are exactly 0
            worst_0 = max(worst_0, abs(lhs), abs(rhs))
            bad += max(abs(lhs), abs(rhs)) > 1e-12
    record(4, bad == 0, f"bessel products max rel err {worst_b:.2e}, exact-zero rows max |side| {worst_0:.1e}")


def test_criterion_5_kneser_sommerfeld():
    worst, worst0, bad, n = 0.0, 0.0, 0, 0
    for kind, p in report.ks_rows():
        lhs, rhs, _ = report._ks_cell(kind, p, 1e-12, 2 * 10**5)
        n += 1
        if p["x"] == 1.0 and kind != "ks1re":
            worst0 = max(worst0, abs(lhs), abs(rhs))
            bad += max(abs(lhs), abs(rhs)) > 1e-10
            continue
        rel = abs(lhs - rhs) / max(abs(lhs), abs(rhs))
        worst = max(worst, rel)
        bad += rel > 1e-8
    record(5, bad == 0, f"{n} rows, max rel err {worst:.2e}, x=1 rows max |side| {worst0:.1e}")


BRIDGE = [
    ("ks", dict(nu=-0.4, x=0.9, y=0.3)), ("ks", dict(nu=0.25, x=0.7, y=0.7)), ("ks", dict(nu=1.3, x=0.8, y=0.5)),
    ("ksee", dict(nu=0.25, x=0.9, y=0.3, order=1.7)), ("ksee", dict(nu=1.3, x=0.8, y=0.5, order=2.5)),
    ("ks1", dict(nu=-0.4, x=0.3)), ("ks1", dict(nu=0.25, x=0.9)),
    ("ks1re", dict(nu=0.25, x=1.5, order=1.7)), ("ks1re", dict(nu=1.3, x=0.6, order=2.5)),
]


def test_criterion_6_taylor_bridge():
    worst = 0.0
    for kind, p in BRIDGE:
        for closed, fitted in resolvent_taylor_match(kind, n_max=4, **p):
            worst = max(worst, abs(fitted - closed) / abs(closed))
    record(6, worst <= 1e-6, f"{len(BRIDGE)} cases, n = 0..4, max rel err {worst:.2e}")


def test_criterion_7_sonin():
    worst = 0.0
    for (mu, eta), x in itertools.product([(1.3, 0.2), (2.5, 0.5), (0.7, -0.4)], (0.5, 1.5, 5.0)):
        worst = max(worst, abs(t_transform(sonin_spec(mu, eta), x) - sp.jv(mu, x) / x**mu))
        for r in (0.0, 1.0, 2.5, -0.5):
            if 2 * eta + r + 2 > 0:
                worst = max(worst, abs(t_transform(power_spec(mu, eta, r), x) - power_target(mu, eta, r, x)))
    record(7, worst <= 1e-8, f"max abs err {worst:.2e}")


def test_criterion_8_limits():
    worst = 0.0
    for (n, k), a, (x, y) in itertools.product(sorted(LIMIT_CASES), (0.3, 1.7), report.GRID_XY):
        c = S_closed(n, a, a, float(k), x, y)
        worst = max(worst, abs(sum_S(SeriesParams(n, a, a, float(k)), x, y, tol=1e-11).value - c) / abs(c))
    for (n, k), a, x in itertools.product(sorted(LIMIT_CASES), (0.3, 1.7), (0.5, 1.3, 1.9)):
        c = S1_closed(n, a, float(k), x)
        worst = max(worst, abs(sum_S1(n, a, float(k), x, tol=1e-11).value - c) / abs(c))
    straddle = 0.0
    for (n, k), a in itertools.product(sorted(LIMIT_CASES), (0.3, 1.7)):
        lim = S_closed(n, a, a, float(k), 0.9, 0.3)
        mid = 0.5 * (S_closed(n, a, a, k - 1e-4, 0.9, 0.3, branch="generic") + S_closed(n, a, a, k + 1e-4, 0.9, 0.3, branch="generic"))
        straddle = max(straddle, abs(mid - lim) / abs(lim))
    record(8, worst <= 1e-7 and straddle <= 1e-3, f"max rel err {worst:.2e}, straddle midpoint dev {straddle:.1e}")


def test_criterion_9_pde_residuals():
    rng = np.random.default_rng(20261014)
    e_res, k_res = [], []
    for _ in range(10):
        n = int(rng.integers(0, 3))
        a, b = rng.uniform(-0.4, 2.4, 2)
        nu = rng.uniform(-0.4, 1.4)
        if not 2 * nu < 2 * n + a + b:
            nu = (2 * n + a + b) / 2 - 0.3
        x = rng.uniform(0.4, 0.95)
        y = rng.uniform(0.1, x - 0.05)
        e_res.append(abs(xi_pde_residual(n, a, b, nu, x, y)))
        z = rng.uniform(0.1, 0.8) * float(bessel_zeros(nu, 1).zeros[0])
        k_res.append(abs(resolvent_pde_residual(nu, x, y, z)))
    record(9, max(e_res) <= 1e-4 and max(k_res) <= 1e-4,
           f"xi PDE max {max(e_res):.1e}, resolvent PDE max {max(k_res):.1e} over 10 points each")
