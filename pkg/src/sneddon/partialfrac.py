"""Partial-fraction expansion of f(t)/Phi_nu(t)**2 over the zeros of J_nu.

For an entire f with |f(z)| <= c (1+|z|)**N exp(kappa |Im z|), kappa <= 2,

    (1/n!) d^n/dt^n [f/Phi_nu**2](t)
      = sum_{m != 0} 4(nu+1)**2 [((2nu+1)t - (2nu-n)j) f(j) - j(j-t) f'(j)]
                     / ((j-t)**(n+2) j**3 Phi_{nu+1}(j)**2),   j = j_m,

provided N + 1 + 2nu < n (kappa = 2) or N + 2nu < n (kappa < 2). Here j_{-m} = -j_m.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy import special as _sp

from ._summation import SumResult, continuous_zero, extrapolated_sum, smooth_inverse_weight, windowed_sum
from .errors import GrowthConditionViolated, NumericDifferentiationUnstable, PoleProximity
from .fnkernel import bessel_mean_product, check_order_pole, phi, phi_taylor_coeffs
from .psalg import EvenSeries, cauchy_product, horner, reciprocal, scale_argument, series_mul
from .zeros import bessel_zeros

DEFAULT_TAYLOR_ORDER = 60  # in powers of z**2
_CONTOUR_POINTS = 64
_RECENTER_FRACTION = 0.5
_VALIDATE_AT = (0.05, 0.2, 0.5)


def _taylor_check(taylor, evaluator):
    xs = np.array(_VALIDATE_AT)
    f, _ = evaluator(xs)
    ref = horner(taylor, xs)
    if not np.allclose(f, ref, rtol=1e-8, atol=1e-8):
        raise ValueError("Taylor coefficients disagree with the evaluator")


@dataclass(frozen=True)
class EntireFnSpec:
    """An entire function with its growth certificate.

    ``taylor`` holds coefficients in powers of z. ``evaluator(x)`` returns
    ``(f(x), f'(x))`` for real arrays. ``smooth_part`` (optional) returns the
    non-oscillatory part of the same pair, needed only when f has a
    zero-frequency component on the real axis.
    """

    taylor: np.ndarray
    growth_N: float
    growth_kappa: float
    evaluator: Callable
    smooth_part: Optional[Callable] = None
    even: bool = False
    label: str = field(default="f", compare=False)

    def __post_init__(self):
        t = np.array(self.taylor, dtype=float, copy=True)
        t.setflags(write=False)
        object.__setattr__(self, "taylor", t)
        if self.growth_kappa > 2:
            raise GrowthConditionViolated(f"kappa = {self.growth_kappa!r} exceeds 2")
        _taylor_check(t, self.evaluator)

    def values(self, x):
        return self.evaluator(np.asarray(x, dtype=float))

    def complex_value(self, z):
        return horner(self.taylor, z)

    @classmethod
    def bessel_product(cls, alpha, beta, x, y, order=DEFAULT_TAYLOR_ORDER):
        """f(z) = Phi_alpha(x z) Phi_beta(y z)."""
        check_order_pole(alpha, "alpha")
        check_order_pole(beta, "beta")
        alpha, beta, x, y = float(alpha), float(beta), float(x), float(y)
        ser = series_mul(
            scale_argument(phi_taylor_coeffs(alpha, order), x),
            scale_argument(phi_taylor_coeffs(beta, order), y),
        )

        def ev(j):
            u, v = phi(alpha, x * j), phi(beta, y * j)
            du = -x * x * j / (2 * (alpha + 1)) * phi(alpha + 1, x * j)
            dv = -y * y * j / (2 * (beta + 1)) * phi(beta + 1, y * j)
            return u * v, du * v + u * dv

        smooth = None
        if x == y:
            c = 2.0 ** (alpha + beta) * _sp.gamma(alpha + 1) * _sp.gamma(beta + 1)
            p = alpha + beta

            def smooth(j):
                s = np.sign(j)
                u = x * np.abs(j)
                M = bessel_mean_product(alpha, beta, u)
                dM = bessel_mean_product(alpha, beta, u, deriv=1)
                f = c * u**-p * M
                df = c * x * (-p * u ** (-p - 1) * M + u**-p * dM)
                return f, s * df

        return cls(ser.to_full(), -alpha - beta - 1.0, x + y, ev, smooth, True, f"Phi_{alpha:g}({x:g}z)Phi_{beta:g}({y:g}z)")

    @classmethod
    def phi_squared(cls, nu, order=DEFAULT_TAYLOR_ORDER):
        nu = float(nu)
        c = phi_taylor_coeffs(nu, order)
        ser = series_mul(c, c)

        def ev(j):
            u = phi(nu, j)
            du = -j / (2 * (nu + 1)) * phi(nu + 1, j)
            return u * u, 2 * u * du

        return cls(ser.to_full(), -2 * nu - 1.0, 2.0, ev, None, True, f"Phi_{nu:g}^2")

    @classmethod
    def polynomial(cls, coeffs):
        """f(z) = sum coeffs[k] z**k; it does not oscillate, so it is its own smooth part."""
        c = np.trim_zeros(np.asarray(coeffs, dtype=float), "b")
        if c.size == 0:
            c = np.zeros(1)
        dc = c[1:] * np.arange(1, len(c))

        def ev(j):
            return horner(c, j), horner(dc, j) if len(dc) else np.zeros_like(j)

        even = not np.any(c[1::2])
        return cls(c, float(len(c) - 1), 0.0, ev, ev, even, "polynomial")


def _check_growth(f: EntireFnSpec, nu, n):
    N, kappa = f.growth_N, f.growth_kappa
    bound = N + 1 + 2 * nu if kappa >= 2 else N + 2 * nu
    # strict with a margin: for f = Phi_nu**2 the bound is exactly 0 and rounding must not admit n = 0
    if not n - bound > 1e-9:
        need = "N + 1 + 2nu < n" if kappa >= 2 else "N + 2nu < n"
        raise GrowthConditionViolated(f"{need} fails for N={N:g}, kappa={kappa:g}, nu={nu:g}, n={n}")


def _term_builder(f: EntireFnSpec, nu, n, t, values):
    c2 = (2.0**(nu + 1) * _sp.gamma(nu + 2)) ** 2
    k = 4 * (nu + 1) ** 2

    def build(j, inv_w):
        # 1/Phi_{nu+1}(j)**2 is even in j
        inv_phi = inv_w * j ** (2 * nu + 2) / c2
        fp, dfp = values(j)
        if f.even:
            fm, dfm = fp, -dfp
        else:
            fm, dfm = values(-j)
        plus = (((2 * nu + 1) * t - (2 * nu - n) * j) * fp - j * (j - t) * dfp) / ((j - t) ** (n + 2) * j**3)
        minus = (((2 * nu + 1) * t + (2 * nu - n) * j) * fm - j * (j + t) * dfm) / ((-j - t) ** (n + 2) * (-j) ** 3)
        return k * inv_phi * (plus + minus)

    return build


def pf_rhs(f: EntireFnSpec, nu, n, t, M=10**4, tol=1e-12) -> SumResult:
    """Right-hand side, summed over m = +-1, ..., +-M (symmetrised)."""
    nu, t = float(nu), float(t)
    n = int(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_growth(f, nu, n)
    z = bessel_zeros(nu, 64).zeros
    if np.min(np.abs(np.abs(t) - z)) <= 1e-6:
        raise PoleProximity(f"t = {t!r} is within 1e-6 of a zero of J_nu")
    build = _term_builder(f, nu, n, t, f.values)
    if f.growth_kappa >= 2:
        sigma = n - f.growth_N - 2 * nu
        return extrapolated_sum(nu, build, sigma, tol, max_terms=M)
    smooth = None
    if f.smooth_part is not None:
        sbuild = _term_builder(f, nu, n, t, f.smooth_part)

        def smooth(s):
            j = continuous_zero(nu, s)
            return sbuild(j, smooth_inverse_weight(nu, j))

    return windowed_sum(nu, build, tol, max_terms=M, smooth=smooth, min_terms=min(1024, M))


def _ratio_series(f: EntireFnSpec, nu):
    """Full power-series coefficients of f / Phi_nu**2.

    A short (polynomial) Taylor array is padded to the default order first.
    """
    K = max(len(f.taylor), 2 * DEFAULT_TAYLOR_ORDER + 1) - 1
    ft = np.concatenate([f.taylor, np.zeros(K + 1 - len(f.taylor))])
    c = phi_taylor_coeffs(nu, K // 2 + 1)
    inv = EvenSeries(reciprocal(cauchy_product(c.coeffs, c.coeffs))).to_full()
    return cauchy_product(ft, inv[: K + 1], order=K)


def double_bessel_numbers(f: EntireFnSpec, nu, count) -> list:
    """First ``count`` Taylor coefficients of f/Phi_nu**2 at 0."""
    g = _ratio_series(f, nu)
    if len(g) < count + 8:
        raise ValueError(f"at most {len(g) - 8} coefficients are available")
    return [float(v) for v in g[:count]]


def pf_lhs(f: EntireFnSpec, nu, n, t) -> float:
    """(1/n!) d^n/dt^n [f / Phi_nu**2] at real t."""
    nu, t, n = float(nu), float(t), int(n)
    g = _ratio_series(f, nu)
    if t == 0.0:
        return float(g[n])
    zs = bessel_zeros(nu, 64).zeros
    j1 = zs[0]
    if abs(t) <= _RECENTER_FRACTION * j1:
        # re-expand the series about t
        k = np.arange(n, len(g))
        return float(math.fsum(_sp.binom(k, n) * g[n:] * t ** (k - n)))
    dist = np.min(np.abs(np.abs(t) - zs))
    r = 0.5 * dist
    if r < 1e-4:
        raise NumericDifferentiationUnstable(f"t = {t!r} is {dist:.3g} from a zero of J_nu")
    theta = 2 * np.pi * np.arange(_CONTOUR_POINTS) / _CONTOUR_POINTS
    w = r * np.exp(1j * theta)
    zeta = t + w
    ph = horner(phi_taylor_coeffs(nu, DEFAULT_TAYLOR_ORDER).coeffs, zeta * zeta)
    vals = f.complex_value(zeta) / ph**2
    return float(np.mean(vals * w ** (-n)).real)


def xi_pde_residual(n, alpha, beta, nu, x, y, h=1e-4, tol=1e-12):
    """Residual of (2nu-2n) xi + x xi_x + y xi_y + delta_n / (8 (nu+1)**2),
    with xi from direct summation and its derivatives by central differences."""
    from .closedform import delta2
    from .series import sum_xi

    xi = lambda a, b: sum_xi(n, alpha, beta, nu, a, b, tol=tol).value
    xi_x = (xi(x + h, y) - xi(x - h, y)) / (2 * h)
    xi_y = (xi(x, y + h) - xi(x, y - h)) / (2 * h)
    _, d = delta2(n, alpha, beta, nu, x, y)
    return (2 * nu - 2 * n) * xi(x, y) + x * xi_x + y * xi_y + d / (8 * (nu + 1) ** 2)
