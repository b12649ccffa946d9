"""Closed-form values of the Sneddon-Bessel series.

For n >= 0 the two-variable series is

    Gamma(nu+1)**2 x**alpha y**beta / (2**q0 Gamma(alpha+1) Gamma(beta+1))
      * (x**(2n-2nu) phi_n(y/x) - sum_{j+k<=n} A_jk x**(2j) y**(2k) / (j+k+nu-n))

with A_jk the coefficients of the polynomial delta_n and phi_n built by a
two-term recursion from a 2F1. Negative n reduces to a single 2F1. The integer
orders nu in {0, ..., n} are removable singularities of this expression; the
explicit limits are available for (n, nu) in {(0, 0), (1, 0), (1, 1)}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np
from scipy import special as _sp

from .errors import (
    BoundaryNotAllowed,
    DivergentAtOne,
    DivergentParameters,
    PoleProximity,
    SlowConvergence,
    UnsupportedLimitCase,
)
from .fnkernel import EPS_POLE, binom, check_order_pole, check_pole, harmonic_number, hyp2f1, hyp3f2, phi_taylor_coeffs
from .psalg import BivarEvenPoly, cauchy_product, horner, reciprocal

EPS_LIMIT = 1e-3
GUARD_TERMS = 8

LIMIT_CASES = frozenset({(0, 0), (1, 0), (1, 1)})


@dataclass(frozen=True)
class PhiFunctionSpec:
    n: int
    alpha: float
    beta: float
    nu: float
    t: float


@dataclass(frozen=True)
class DeltaCoeff1V:
    """Coefficients of the one-variable polynomial sum_j A[j] x**(2j)."""

    n: int
    A: np.ndarray

    def __post_init__(self):
        A = np.array(self.A, dtype=float, copy=True)
        if A.shape != (self.n + 1,):
            raise ValueError(f"expected {self.n + 1} coefficients, got {A.shape}")
        A.setflags(write=False)
        object.__setattr__(self, "A", A)

    def __call__(self, x):
        return horner(self.A, np.asarray(x, dtype=float) ** 2)


# -- generating-function coefficients -------------------------------------


def _inverse_phi_squared(nu, K):
    c = phi_taylor_coeffs(nu, K).coeffs
    return reciprocal(cauchy_product(c, c))


def delta2_poly(n, alpha, beta, nu) -> BivarEvenPoly:
    """delta_n(x, y): z**(2n) coefficient of Phi_alpha(xz) Phi_beta(yz) / Phi_nu(z)**2."""
    n = _nonneg(n)
    K = n + GUARD_TERMS
    a = phi_taylor_coeffs(alpha, K).coeffs
    b = phi_taylor_coeffs(beta, K).coeffs
    r = _inverse_phi_squared(nu, K)
    A = np.zeros((n + 1, n + 1))
    for j in range(n + 1):
        for k in range(n + 1 - j):
            A[j, k] = a[j] * b[k] * r[n - j - k]
    return BivarEvenPoly(n, A)


def delta2(n, alpha, beta, nu, x, y):
    """Return the polynomial and its value at (x, y)."""
    poly = delta2_poly(n, alpha, beta, nu)
    return poly, float(poly(x, y))


def delta1(n, alpha, nu) -> DeltaCoeff1V:
    """Coefficients of the z**(2n) term of Phi_alpha(xz) / Phi_nu(z)**2."""
    n = _nonneg(n)
    K = n + GUARD_TERMS
    a = phi_taylor_coeffs(alpha, K).coeffs
    r = _inverse_phi_squared(nu, K)
    return DeltaCoeff1V(n, np.array([a[j] * r[n - j] for j in range(n + 1)]))


def _nonneg(n):
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    return int(n)


# -- phi_n -------------------------------------------------------------------


def _gauss_regular_part(a, b, c):
    """Finite part at t = 1 of 2F1(a, b; c; t).

    For c - a - b > 0 this is Gauss's sum. For non-integer c - a - b < 0 it is
    the analytic (non-singular) branch of the connection formula, and for
    c - a - b = 0 the constant left after removing the logarithm. In the phi_n
    recursion the singular branches of the leaves cancel, so the finite parts
    add up to the value of the t -> 1 limit.
    """
    for p, other in ((a, b), (b, a)):
        if p <= 0 and p == round(p):
            # terminating series: Chu-Vandermonde
            return float(_sp.poch(c - other, -p) / _sp.poch(c, -p))
    e = c - a - b
    if abs(e) <= EPS_POLE:
        psi = lambda u: _sp.psi(u)
        for u in (a, b):
            check_pole(u, "2F1 parameter")
        return float(_sp.gamma(c) * _sp.rgamma(a) * _sp.rgamma(b) * (2 * psi(1.0) - psi(a) - psi(b)))
    if e < 0 and abs(e - round(e)) <= EPS_POLE:
        raise DivergentAtOne(f"c-a-b = {e:g} is a negative integer; the t=1 limit is not available")
    return float(_sp.gamma(c) * _sp.gamma(e) * _sp.rgamma(c - a) * _sp.rgamma(c - b))


def _phi0(alpha, beta, nu, t):
    pref = binom(alpha, nu) / nu
    a, b, c = nu - alpha, nu, beta + 1.0
    if t == 1.0:
        return pref * _gauss_regular_part(a, b, c)
    return pref * hyp2f1(a, b, c, t * t)


@lru_cache(maxsize=4096)
def _phi_rec(n, alpha, beta, nu, t):
    if n == 0:
        return _phi0(alpha, beta, nu, t)
    left = _phi_rec(n - 1, alpha + 1.0, beta, nu, t) / (2.0 * (alpha + 1.0))
    right = t * t * _phi_rec(n - 1, alpha, beta + 1.0, nu, t) / (2.0 * (beta + 1.0))
    return (left + right) / (2.0 * nu - 2.0 * n)


def phi_rec(spec: PhiFunctionSpec) -> float:
    n = _nonneg(spec.n)
    nu = float(spec.nu)
    for k in range(n + 1):
        if abs(nu - k) <= EPS_POLE:
            raise PoleProximity(f"phi_{n} has a pole at nu = {k}")
    t = float(spec.t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"phi_n needs t = y/x in [0, 1], got {t!r}")
    if t == 1.0 and n == 0 and spec.beta + 1.0 - (nu - spec.alpha) - nu <= 0:
        raise DivergentAtOne("2F1 at t=1 needs beta + 1 - (nu - alpha) - nu > 0")
    return _phi_rec(n, float(spec.alpha), float(spec.beta), nu, t)


def d_coeff(n, alpha, nu) -> float:
    """phi_n(0) = Gamma(alpha+1) Gamma(nu-n) / (4**n Gamma(nu+1)**2 Gamma(n+1+alpha-nu))."""
    n = _nonneg(n)
    check_pole(alpha + 1.0, "alpha + 1")
    check_pole(nu - n, "nu - n")
    check_pole(nu + 1.0, "nu + 1")
    return float(
        _sp.gamma(alpha + 1.0) * _sp.gamma(nu - n) * _sp.rgamma(n + 1.0 + alpha - nu) / (4.0**n * _sp.gamma(nu + 1.0) ** 2)
    )


# -- two-variable closed form -------------------------------------------------


def _hyp3f2(a1, a2, a3, b1, b2, t):
    try:
        return hyp3f2(a1, a2, a3, b1, b2, t)
    except SlowConvergence:
        if t > 1.0 or b1 + b2 - a1 - a2 - a3 <= 0:
            raise
        return float(mpmath.hyp3f2(a1, a2, a3, b1, b2, t))


def _integer_order(n, nu):
    """Return k if nu sits within EPS_LIMIT of k in {0..n}, else None."""
    for k in range(n + 1):
        if abs(nu - k) <= EPS_LIMIT:
            return k
    return None


def _check_region(n, alpha, beta, nu, x, y):
    if not (x > 0 and y > 0):
        raise ValueError("x and y must be positive")
    if not 2 * nu < 2 * n + 1 + alpha + beta:
        raise DivergentParameters("2*nu < 2n + 1 + alpha + beta fails")
    s = x + y
    if s > 2.0 + 1e-12:
        raise DivergentParameters(f"x + y = {s!r} exceeds 2")
    if abs(s - 2.0) <= 1e-12 and not 2 * nu < 2 * n + alpha + beta:
        raise BoundaryNotAllowed("x + y = 2 needs 2*nu < 2n + alpha + beta")


def S_closed(n, alpha, beta, nu, x, y, branch="auto") -> float:
    """Closed form of sum_m J_alpha(x j) J_beta(y j) / (j**q_n J_{nu+1}(j)**2).

    ``branch='generic'`` skips the EPS_LIMIT guard near integer nu (used for
    continuity checks); ``'auto'`` switches to the explicit limit formulas.
    """
    n = int(n)
    alpha, beta, nu, x, y = map(float, (alpha, beta, nu, x, y))
    for v, name in ((alpha, "alpha"), (beta, "beta"), (nu, "nu")):
        check_order_pole(v, name)
    _check_region(n, alpha, beta, nu, x, y)
    if y > x:
        alpha, beta, x, y = beta, alpha, y, x
    if n < 0:
        return _S_negative(n, alpha, beta, nu, x, y)
    k = _integer_order(n, nu)
    if k is not None and branch != "generic":
        if abs(nu - k) > EPS_POLE:
            raise UnsupportedLimitCase(
                f"nu = {nu!r} is within {EPS_LIMIT:g} of {k}; use nu = {k} exactly or move away"
            )
        if (n, k) not in LIMIT_CASES:
            raise UnsupportedLimitCase(f"no closed form for n = {n} at integer nu = {k}")
        return _S_limit(n, k, alpha, beta, x, y)
    return _S_generic(n, alpha, beta, nu, x, y)


def _S_negative(n, alpha, beta, nu, x, y):
    q = 2 * n + alpha + beta - 2 * nu + 2
    t2 = (y / x) ** 2
    pref = (
        x ** (alpha - 2 * nu + 2 * n)
        * y**beta
        * _sp.gamma(nu - n)
        * _sp.rgamma(beta + 1.0)
        * _sp.rgamma(n + alpha - nu + 1.0)
        / 2.0**q
    )
    if pref == 0.0:
        return 0.0
    a, b, c = nu - n, nu - alpha - n, beta + 1.0
    F = hyp2f1(a, b, c, t2) if t2 < 1.0 else _gauss_regular_part(a, b, c)
    return float(pref * F)


def _S_generic(n, alpha, beta, nu, x, y):
    q0 = alpha + beta - 2 * nu + 2
    pref = _sp.gamma(nu + 1.0) ** 2 * x**alpha * y**beta * _sp.rgamma(alpha + 1.0) * _sp.rgamma(beta + 1.0) / 2.0**q0
    phi_n = phi_rec(PhiFunctionSpec(n, alpha, beta, nu, y / x))
    poly = delta2_poly(n, alpha, beta, nu)
    # smallest |j + k + nu - n| first
    terms = sorted(poly.terms(), key=lambda jk: abs(jk[0] + jk[1] + nu - n))
    poly_part = math.fsum(A / (j + k + nu - n) * x ** (2 * j) * y ** (2 * k) for j, k, A in terms)
    return float(pref * math.fsum([x ** (2 * n - 2 * nu) * phi_n, -poly_part]))


def _S_limit(n, k, a, b, x, y):
    t = (y / x) ** 2
    H = harmonic_number(a)
    L = math.log(x)
    base = x**a * y**b * _sp.rgamma(a + 1.0) * _sp.rgamma(b + 1.0)
    if (n, k) == (0, 0):
        q0 = a + b + 2
        inner = -2 * L + H - a / (b + 1) * t * _hyp3f2(1, 1, 1 - a, 2, b + 2, t)
        return float(base / 2.0**q0 * inner)
    q1 = a + b + 4 - 2 * k
    if (n, k) == (1, 0):
        inner = (
            2.0
            - x * x / (a + 1) ** 2
            - ((a + 1) * y * y + (b + 1) * x * x) * (1 + H - 2 * L) / ((a + 1) * (b + 1))
            + y * y / (b + 1) * _hyp3f2(1, 1, -a, 2, b + 2, t)
            + a * y**4 / ((b + 1) * (b + 2) * x * x) * _hyp3f2(1, 1, 1 - a, 2, b + 3, t)
        )
        return float(base / 2.0**q1 * inner)
    inner = (
        x * x / (a + 1)
        + y * y / (b + 1)
        + (-3 + 2 * H - 4 * L) / 2
        - a / (b + 1) * t * _hyp3f2(1, 1, 1 - a, 2, b + 2, t)
    )
    return float(base / 2.0**q1 * inner)


# -- one-variable closed form ----------------------------------------------


def S1_closed(n, alpha, nu, x, branch="auto") -> float:
    """Closed form of sum_m J_alpha(x j) / (j**(2n+alpha-2nu+2) J_{nu+1}(j)**2)."""
    n = int(n)
    alpha, nu, x = float(alpha), float(nu), float(x)
    check_order_pole(alpha, "alpha")
    check_order_pole(nu, "nu")
    if not 0 < x <= 2.0 + 1e-12:
        raise DivergentParameters(f"x must lie in (0, 2], got {x!r}")
    if not 2 * nu < 2 * n + 0.5 + alpha:
        raise DivergentParameters("2*nu < 2n + 1/2 + alpha fails")
    if abs(x - 2.0) <= 1e-12 and not 2 * nu < 2 * n - 0.5 + alpha:
        raise BoundaryNotAllowed("x = 2 needs 2*nu < 2n - 1/2 + alpha")
    if n < 0:
        return float(
            _sp.gamma(nu - n)
            * _sp.rgamma(n + alpha - nu + 1.0)
            * x ** (alpha - 2 * nu + 2 * n)
            / 2.0 ** (2 * n + alpha - 2 * nu + 2)
        )
    k = _integer_order(n, nu)
    if k is not None and branch != "generic":
        if abs(nu - k) > EPS_POLE:
            raise UnsupportedLimitCase(
                f"nu = {nu!r} is within {EPS_LIMIT:g} of {k}; use nu = {k} exactly or move away"
            )
        if (n, k) not in LIMIT_CASES:
            raise UnsupportedLimitCase(f"no closed form for n = {n} at integer nu = {k}")
        return _S1_limit(n, k, alpha, x)
    for j in range(n + 1):
        if abs(nu - j) <= EPS_POLE:
            raise PoleProximity(f"the generic formula has a pole at nu = {j}")
    pref = _sp.gamma(nu + 1.0) ** 2 * x**alpha * _sp.rgamma(alpha + 1.0) / 2.0 ** (alpha - 2 * nu + 2)
    A = delta1(n, alpha, nu).A
    terms = sorted(range(n + 1), key=lambda j: abs(j + nu - n))
    poly_part = math.fsum(A[j] / (j + nu - n) * x ** (2 * j) for j in terms)
    return float(pref * math.fsum([d_coeff(n, alpha, nu) * x ** (2 * n - 2 * nu), -poly_part]))


def _S1_limit(n, k, a, x):
    H = harmonic_number(a)
    L = math.log(x)
    if (n, k) == (0, 0):
        return float(x**a * _sp.rgamma(a + 1.0) / 2.0 ** (a + 1) * (-L + 0.5 * H))
    if (n, k) == (1, 0):
        H1 = harmonic_number(a + 1)
        return float(x**a * _sp.rgamma(a + 2.0) / 2.0 ** (a + 3) * (x * x * L - 0.5 * (1 + H1) * x * x + a + 1))
    return float(x**a * _sp.rgamma(a + 1.0) / 2.0 ** (a + 1) * (-L + (-3 + 2 * H) / 4 + x * x / (2 * (a + 1))))
