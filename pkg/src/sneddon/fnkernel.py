"""Scalar special functions: Gamma, harmonic numbers, Bessel J/Y, Phi_nu and
hypergeometric series.

Gamma, digamma and the Bessel functions at moderate arguments come from
:mod:`scipy.special`. The large-argument Hankel expansion is evaluated here
because the non-oscillatory Bessel combinations needed by the series tails
must stay accurate for arguments far beyond what AMOS guarantees.
"""
from __future__ import annotations

import math

import mpmath
import numpy as np
from scipy import special as _sp

from .errors import DivergentAtOne, OrderOutOfRange, PoleProximity, SlowConvergence
from .psalg import EvenSeries, horner

EPS_POLE = 1e-6
EULER_GAMMA = 0.57721566490153286061
MAX_ORDER = 30.0

# Hankel expansion is used above this argument (and above 4*nu**2).
_HANKEL_MIN_ARG = 1e3
_PHI_SERIES_RADIUS = 3.0
_PHI_SERIES_TERMS = 34


def _nearest_nonpositive_integer(x):
    x = np.asarray(x, dtype=float)
    return np.minimum(np.round(x), 0.0)


def check_pole(x, what="argument", eps=EPS_POLE):
    """Raise PoleProximity if any ``x`` is within ``eps`` of 0, -1, -2, ..."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError(f"{what} must be finite, got {x!r}")
    bad = np.abs(x - _nearest_nonpositive_integer(x)) <= eps
    if np.any(bad):
        raise PoleProximity(f"{what} {x[bad] if x.ndim else float(x)!r} is within {eps:g} of a pole")


def check_order_pole(v, what="order"):
    """Orders must avoid -1, -2, ... (the poles of Gamma(v + 1))."""
    check_pole(np.asarray(v, dtype=float) + 1.0, f"{what} + 1")


def check_order(nu):
    nu = np.asarray(nu, dtype=float)
    if not np.all(np.isfinite(nu)):
        raise ValueError("Bessel order must be finite")
    if np.any(np.abs(nu) > MAX_ORDER):
        raise OrderOutOfRange(f"order {nu!r} outside the supported window |nu| <= {MAX_ORDER:g}")


def _scalar(out):
    return float(out) if np.ndim(out) == 0 else out


def gamma(x):
    check_pole(x, "Gamma argument")
    return _scalar(_sp.gamma(x))


def rgamma(x):
    """1/Gamma(x); exactly zero at the poles, so no proximity check."""
    return _scalar(_sp.rgamma(x))


def digamma(x):
    check_pole(x, "digamma argument")
    return _scalar(_sp.psi(x))


def harmonic_number(alpha):
    """Harmonic number of real order, ``H_alpha = gamma + psi(alpha + 1)``."""
    alpha = np.asarray(alpha, dtype=float)
    if np.any(alpha <= -1 + EPS_POLE):
        raise PoleProximity(f"harmonic number needs alpha > -1, got {alpha!r}")
    return _scalar(EULER_GAMMA + _sp.psi(alpha + 1.0))


def binom(a, b):
    """Generalised binomial coefficient Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1))."""
    check_pole(np.asarray(a) + 1.0, "binomial upper index + 1")
    return _scalar(_sp.gamma(np.asarray(a) + 1.0) * _sp.rgamma(np.asarray(b) + 1.0) * _sp.rgamma(np.asarray(a) - b + 1.0))


def _check_argument(x):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or not np.all(np.isfinite(x)):
        raise ValueError("Bessel argument must be finite and non-negative")
    return x


def bessel_j(nu, x):
    check_order(nu)
    x = _check_argument(x)
    return _scalar(_sp.jv(nu, x))


def bessel_y(nu, x):
    check_order(nu)
    x = _check_argument(x)
    if np.any(x == 0):
        raise ValueError("Y_nu is singular at x = 0")
    return _scalar(_sp.yv(nu, x))


def bessel_jp(nu, x):
    """Derivative J_nu'(x) = J_{nu-1}(x) - (nu/x) J_nu(x), written via J_{nu+1}."""
    x = _check_argument(x)
    return _scalar(nu / x * _sp.jv(nu, x) - _sp.jv(nu + 1.0, x))


def bessel_yp(nu, x):
    x = _check_argument(x)
    return _scalar(nu / x * _sp.yv(nu, x) - _sp.yv(nu + 1.0, x))


def hankel_pq(nu, z, deriv=False):
    """Hankel's asymptotic amplitudes ``P_nu(z), Q_nu(z)`` for large ``z``.

    ``J = sqrt(2/(pi z)) (P cos chi - Q sin chi)`` and
    ``Y = sqrt(2/(pi z)) (P sin chi + Q cos chi)``, with
    ``chi = z - nu*pi/2 - pi/4``. The series is summed until the terms
    reach rounding level or stop decreasing. With ``deriv`` the z-derivatives
    dP, dQ are returned as well.
    """
    z = np.asarray(z, dtype=float)
    mu = 4.0 * float(nu) ** 2
    P = np.ones_like(z)
    Q = np.zeros_like(z)
    dP = np.zeros_like(z)
    dQ = np.zeros_like(z)
    term = np.ones_like(z)
    prev = np.full_like(z, np.inf)
    active = np.ones(z.shape, dtype=bool)
    for k in range(1, 80):
        term = term * (mu - (2 * k - 1) ** 2) / (8.0 * k * z)
        mag = np.abs(term)
        active &= mag < prev
        # term is c_k z**-k, so its derivative is -k term / z
        add = np.where(active, term, 0.0)
        dadd = -k * add / z
        if k % 2:
            sgn = (-1) ** ((k - 1) // 2)
            Q = Q + sgn * add
            dQ = dQ + sgn * dadd
        else:
            sgn = (-1) ** (k // 2)
            P = P + sgn * add
            dP = dP + sgn * dadd
        active &= mag > 1e-17
        prev = mag
        if not np.any(active):
            break
    if deriv:
        return P, Q, dP, dQ
    return P, Q


def _use_hankel(nu, u):
    return u > max(_HANKEL_MIN_ARG, 4.0 * float(nu) ** 2)


def bessel_modulus_sq(nu, x):
    """``J_nu(x)**2 + Y_nu(x)**2``, a monotone non-oscillatory function."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    big = _use_hankel(nu, x)
    if np.any(~big):
        xs = x[~big]
        out[~big] = _sp.jv(nu, xs) ** 2 + _sp.yv(nu, xs) ** 2
    if np.any(big):
        xb = x[big]
        P, Q = hankel_pq(nu, xb)
        out[big] = 2.0 / (np.pi * xb) * (P * P + Q * Q)
    return _scalar(out)


def bessel_mean_product(a, b, u, deriv=0):
    """Non-oscillatory part ``(J_a J_b + Y_a Y_b)/2`` of ``J_a(u) J_b(u)``.

    ``deriv=1`` gives its u-derivative, computed from the amplitude series so
    that the leading orders of the two Bessel products never cancel.
    """
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    big = _use_hankel(max(abs(a), abs(b)), u)
    if np.any(~big):
        us = u[~big]
        if deriv:
            Ja, Jb, Ya, Yb = _sp.jv(a, us), _sp.jv(b, us), _sp.yv(a, us), _sp.yv(b, us)
            dJa, dJb = a / us * Ja - _sp.jv(a + 1, us), b / us * Jb - _sp.jv(b + 1, us)
            dYa, dYb = a / us * Ya - _sp.yv(a + 1, us), b / us * Yb - _sp.yv(b + 1, us)
            out[~big] = 0.5 * (dJa * Jb + Ja * dJb + dYa * Yb + Ya * dYb)
        else:
            out[~big] = 0.5 * (_sp.jv(a, us) * _sp.jv(b, us) + _sp.yv(a, us) * _sp.yv(b, us))
    if np.any(big):
        ub = u[big]
        Pa, Qa, dPa, dQa = hankel_pq(a, ub, deriv=True)
        Pb, Qb, dPb, dQb = hankel_pq(b, ub, deriv=True)
        ph = (b - a) * np.pi / 2.0
        c, s_ = math.cos(ph), math.sin(ph)
        A = (Pa * Pb + Qa * Qb) * c + (Pa * Qb - Qa * Pb) * s_
        if deriv:
            dA = (dPa * Pb + Pa * dPb + dQa * Qb + Qa * dQb) * c + (dPa * Qb + Pa * dQb - dQa * Pb - Qa * dPb) * s_
            out[big] = (dA - A / ub) / (np.pi * ub)
        else:
            out[big] = A / (np.pi * ub)
    return _scalar(out)


def phi_taylor_coeffs(nu, K):
    """Coefficients of Phi_nu in powers of z**2, up to z**(2K)."""
    check_pole(nu + 1.0, "Phi order + 1")
    c = np.empty(K + 1)
    c[0] = 1.0
    for k in range(1, K + 1):
        c[k] = c[k - 1] * (-0.25) / (k * (k + nu))
    return EvenSeries(c)


def phi(nu, z):
    """Normalised entire Bessel function ``2**nu Gamma(nu+1) J_nu(z) / z**nu``."""
    check_pole(nu + 1.0, "Phi order + 1")
    check_order(nu)
    z = np.abs(np.asarray(z, dtype=float))
    out = np.empty_like(z)
    small = z <= _PHI_SERIES_RADIUS
    if np.any(small):
        c = phi_taylor_coeffs(nu, _PHI_SERIES_TERMS).coeffs
        out[small] = horner(c, z[small] ** 2)
    if np.any(~small):
        zb = z[~small]
        log_pref = nu * math.log(2.0) + _sp.gammaln(nu + 1.0)
        sign = np.sign(_sp.gamma(nu + 1.0))
        out[~small] = sign * np.exp(log_pref - nu * np.log(zb)) * _sp.jv(nu, zb)
    return _scalar(out)


def phi_prime(nu, z):
    """Phi_nu'(z) = -z/(2(nu+1)) Phi_{nu+1}(z)."""
    return -np.asarray(z) / (2.0 * (nu + 1.0)) * phi(nu + 1.0, z)


# -- hypergeometric series -------------------------------------------------

_HYP_REL_EPS = 2e-17
_HYP_MAX_TERMS = 200_000
_SLOW_ONE = 1e-3


def _pfq_series(a_list, b_list, t):
    if t == 0:
        return 1.0
    total = 1.0
    comp = 0.0
    term = 1.0
    p, q = len(a_list), len(b_list)
    for k in range(_HYP_MAX_TERMS):
        num = 1.0
        for a in a_list:
            num *= a + k
        den = float(k + 1)
        for b in b_list:
            den *= b + k
        term *= num / den * t
        if term == 0.0:
            return total + comp
        # Neumaier summation
        s = total + term
        if abs(total) >= abs(term):
            comp += (total - s) + term
        else:
            comp += (term - s) + total
        total = s
        ratio = abs(num / den * t)
        if k > 2 and ratio < 1.0:
            # for p == q+1 the ratio tends to |t|, possibly from above
            r = ratio if p <= q else min(max(ratio, abs(t)), 1.0 - 1e-15)
            bound = abs(term) * r / (1.0 - r)
            if bound <= _HYP_REL_EPS * abs(total + comp):
                return total + comp
    raise SlowConvergence(f"hypergeometric series did not converge in {_HYP_MAX_TERMS} terms (t={t!r})")


def hyp2f1_at_one(a, b, c, continued=False):
    """Gauss's value ``Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b))``.

    With ``continued=True`` the formula is also used for ``c - a - b < 0``
    (non-integer), where it is the regular part of the connection formula at 1.
    """
    check_pole(c, "2F1 lower parameter")
    e = c - a - b
    if e <= 0 and not continued:
        raise DivergentAtOne(f"2F1 diverges at t=1 when c-a-b={e:g} <= 0")
    if abs(e - round(e)) <= EPS_POLE and e <= 0:
        raise DivergentAtOne(f"c-a-b={e:g} is a non-positive integer; logarithmic case")
    return float(_sp.gamma(c) * _sp.gamma(e) * _sp.rgamma(c - a) * _sp.rgamma(c - b))


def hyp2f1(a, b, c, t):
    """Gauss hypergeometric function by its defining series, or Gauss at t=1."""
    check_pole(c, "2F1 lower parameter")
    t = float(t)
    if t == 1.0:
        if a == 0 or b == 0:
            return 1.0
        return hyp2f1_at_one(a, b, c)
    if not -1.0 < t < 1.0:
        raise ValueError(f"2F1 series needs |t| < 1, got {t!r}")
    if t > 1.0 - _SLOW_ONE and not _terminates(a) and not _terminates(b):
        # the defining series needs ~1/(1-t) terms here; mpmath applies the
        # 1 - t transformation instead
        return float(mpmath.hyp2f1(a, b, c, t))
    return _pfq_series((a, b), (c,), t)


def _terminates(a):
    return a <= 0 and abs(a - round(a)) == 0


def hyp_pfq(a_list, b_list, t):
    """Generalised hypergeometric function pFq(a_list; b_list; t) for real data."""
    a_list = [float(a) for a in a_list]
    b_list = [float(b) for b in b_list]
    for b in b_list:
        check_pole(b, "pFq lower parameter")
    t = float(t)
    if any(_terminates(a) for a in a_list):
        return _pfq_series(a_list, b_list, t)
    p, q = len(a_list), len(b_list)
    if p > q + 1:
        raise SlowConvergence("pFq with p > q + 1 diverges for every t != 0")
    if p == q + 1:
        if abs(t) >= 1.0:
            raise SlowConvergence(f"{p}F{q} series needs |t| < 1, got {t!r}")
        if abs(t) > 1.0 - _SLOW_ONE:
            raise SlowConvergence(f"{p}F{q} series at t={t!r} is too close to 1")
    return _pfq_series(a_list, b_list, t)


def hyp1f2(a, b1, b2, t):
    return hyp_pfq([a], [b1, b2], t)


def hyp3f2(a1, a2, a3, b1, b2, t):
    return hyp_pfq([a1, a2, a3], [b1, b2], t)
