"""Summation engine for series over the zeros of J_nu.

Two strategies are provided.

``windowed``: the terms are multiplied by a C-infinity cutoff that equals 1 up
to N/4 and vanishes at N. For terms of the form smooth(m) * exp(i*omega*m)
with 0 < |omega| < 2*pi the Poisson images of the cut sum decay faster than
any power of N, so the cut sum converges super-algebraically. A term that
does not oscillate (the diagonal x == y) is handled by adding the integral of
its smooth part against ``1 - window`` over [N/4, inf).

``extrapolated``: on the boundary x + y = 2 an oscillation frequency aliases
to 0, so part of each term is a smooth function of m with an expansion
m**-sigma (a0 + a1/m + ...). The windowed sum then misses a tail with an
expansion in N**(1-sigma-k), k = 0, 1, ..., which Richardson extrapolation over
N, 2N, 4N, ... removes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergentParameters
from .fnkernel import bessel_modulus_sq
from .zeros import bessel_zeros, mcmahon

DEFAULT_MAX_TERMS = 10**6
MIN_TERMS = 1024
_EPS = np.finfo(float).eps
_GL_X, _GL_W = np.polynomial.legendre.leggauss(96)


@dataclass(frozen=True)
class SumResult:
    value: float
    terms_used: int
    tail_estimate: float
    converged: bool

    def __float__(self):
        return float(self.value)


def window(m, N):
    """Smooth cutoff: 1 on [0, N/4], 0 beyond N, C-infinity in between."""
    m = np.asarray(m, dtype=float)
    a = 0.25 * N
    t = np.clip((m - a) / (N - a), 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        e1 = np.where(t > 0, np.exp(-1.0 / np.where(t > 0, t, 1.0)), 0.0)
        e2 = np.where(t < 1, np.exp(-1.0 / np.where(t < 1, 1.0 - t, 1.0)), 0.0)
    return 1.0 - e1 / (e1 + e2)


def _gauss(f, lo, hi):
    s = 0.5 * (hi - lo) * _GL_X + 0.5 * (hi + lo)
    return 0.5 * (hi - lo) * math.fsum(_GL_W * f(s))


def smooth_inverse_weight(nu, j):
    """Interpolant of 1/J_{nu+1}(j_m)**2 in j: exact at the zeros by the Wronskian."""
    return 0.25 * np.pi**2 * j * j * bessel_modulus_sq(nu, j)


def decay_exponent(F0, s0):
    r = F0(np.array([s0, 2.0 * s0]))
    if r[0] == 0 or r[1] == 0 or np.sign(r[0]) != np.sign(r[1]):
        return None
    return -math.log2(abs(r[1] / r[0]))


def mean_correction(F0, N, decay=None):
    """Integral of F0 * (1 - window) over [N/4, inf).

    ``F0(s)`` is a function of the continuous index s; it must decay like
    s**(-p) with p > 1. On [N, inf) the substitution s = N u**(-1/(p-1))
    turns the integrand into a smooth bounded function on (0, 1].
    """
    a = 0.25 * N
    head = _gauss(lambda s: F0(s) * (1.0 - window(s, N)), a, float(N))
    p = decay if decay is not None else decay_exponent(F0, 4.0 * N)
    if p is None:
        p = 2.0
    if p <= 1.0:
        raise DivergentParameters(f"non-oscillatory part decays like s^-{p:.3g}; the series diverges")
    e = 1.0 / (p - 1.0)

    def h(u):
        s = N * u ** (-e)
        return F0(s) * N * e * u ** (-e - 1.0)

    return head + _gauss(h, 0.0, 1.0)


def windowed_sum(nu, terms, tol, max_terms=DEFAULT_MAX_TERMS, smooth=None, decay=None, min_terms=MIN_TERMS):
    """Sum ``terms(j, inv_w)`` over the zeros of J_nu with the smooth cutoff.

    ``terms`` receives the zeros and 1/J_{nu+1}(j)**2 and returns the terms.
    ``smooth`` (optional) receives a continuous index s and returns the
    non-oscillatory part of the term there.
    """
    max_terms = int(max_terms)
    N = min(int(min_terms), max_terms)
    prev = None
    tail = math.inf
    while True:
        table = bessel_zeros(nu, N)
        g = terms(table.zeros, 1.0 / table.weights)
        m = np.arange(1, N + 1)
        gw = g * window(m, N)
        value = math.fsum(gw)
        # two sums can agree to the last bit; the estimate never goes below rounding level
        floor = _EPS * math.fsum(np.abs(gw))
        if smooth is not None:
            value += mean_correction(smooth, N, decay)
        if not math.isfinite(value):
            raise DivergentParameters("series terms are not finite")
        if prev is not None:
            tail = max(abs(value - prev), floor)
            if tail <= tol * max(1.0, abs(value)):
                return SumResult(value, N, tail, True)
        if N >= max_terms:
            return SumResult(value, N, tail, False)
        prev = value
        N = min(2 * N, max_terms)


def extrapolated_sum(nu, terms, sigma, tol, max_terms=DEFAULT_MAX_TERMS, min_terms=MIN_TERMS, levels=6):
    """Windowed sums at doubling N followed by Richardson extrapolation in N."""
    if sigma <= 1.0:
        raise DivergentParameters(f"terms decay like m^-{sigma:.3g}: no absolute convergence")
    max_terms = int(max_terms)
    N = min(int(min_terms), max_terms)
    rows = []  # rows[i][k]: k-fold extrapolated value ending at level i
    tail = math.inf
    while True:
        table = bessel_zeros(nu, N)
        g = terms(table.zeros, 1.0 / table.weights)
        gw = g * window(np.arange(1, N + 1), N)
        v = math.fsum(gw)
        if not math.isfinite(v):
            raise DivergentParameters("series terms are not finite")
        row = [v]
        if rows:
            prev = rows[-1]
            for k in range(1, min(len(prev) + 1, levels)):
                r = 2.0 ** (sigma - 1.0 + (k - 1))
                row.append(row[k - 1] + (row[k - 1] - prev[k - 1]) / (r - 1.0))
            tail = max(abs(row[-1] - prev[-1]), _EPS * math.fsum(np.abs(gw)))
            if tail <= tol * max(1.0, abs(row[-1])):
                return SumResult(row[-1], N, tail, True)
        rows.append(row)
        # the extrapolation needs exact doubling
        if 2 * N > max_terms:
            return SumResult(row[-1], N, tail, False)
        N *= 2


def continuous_zero(nu, s):
    return mcmahon(nu, s)
