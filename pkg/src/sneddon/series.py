"""Direct summation of Sneddon-Bessel type series over the zeros of J_nu."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

from ._summation import (
    DEFAULT_MAX_TERMS,
    SumResult,
    continuous_zero,
    extrapolated_sum,
    smooth_inverse_weight,
    windowed_sum,
)
from .errors import BoundaryNotAllowed, DivergentParameters, PoleProximity
from .fnkernel import EPS_POLE, bessel_mean_product, check_order_pole
from .zeros import bessel_zeros

__all__ = [
    "SeriesParams",
    "SumResult",
    "Resolvent",
    "sum_S",
    "sum_xi",
    "sum_S1",
    "sum_resolvent",
]

DEFAULT_TOL = 1e-8
# x + y this close to 2 counts as the boundary
_BOUNDARY_EPS = 1e-12


@dataclass(frozen=True)
class SeriesParams:
    n: int
    alpha: float
    beta: float
    nu: float

    def __post_init__(self):
        if int(self.n) != self.n:
            raise ValueError(f"n must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        for name in ("alpha", "beta", "nu"):
            v = float(getattr(self, name))
            check_order_pole(v, name)
            object.__setattr__(self, name, v)
        if self.nu <= -1.0:
            raise DivergentParameters(f"nu must exceed -1 for real positive zeros, got {self.nu!r}")

    @property
    def q(self) -> float:
        return 2 * self.n + self.alpha + self.beta - 2 * self.nu + 2

    @property
    def convergent(self) -> bool:
        """Absolute convergence for x + y < 2."""
        return 2 * self.nu < 2 * self.n + 1 + self.alpha + self.beta

    @property
    def boundary_ok(self) -> bool:
        """Convergence also on x + y = 2 (and termwise differentiability)."""
        return 2 * self.nu < 2 * self.n + self.alpha + self.beta

    def with_(self, **kw) -> "SeriesParams":
        d = dict(n=self.n, alpha=self.alpha, beta=self.beta, nu=self.nu)
        d.update(kw)
        return SeriesParams(**d)


def _check_xy(x, y):
    x, y = float(x), float(y)
    if not (x > 0 and y > 0):
        raise ValueError(f"x and y must be positive, got {(x, y)!r}")
    if x + y > 2.0 + _BOUNDARY_EPS:
        raise DivergentParameters(f"x + y = {x + y!r} exceeds 2")
    return x, y, abs(x + y - 2.0) <= _BOUNDARY_EPS


def _bessel_products(x, y):
    def prod(a, b, j):
        return _sp.jv(a, x * j) * _sp.jv(b, y * j)

    return prod


def _mean_products(x):
    def prod(a, b, j):
        return bessel_mean_product(a, b, x * j)

    return prod


def _run(nu, build, x, y, tol, max_terms, boundary, sigma):
    """Dispatch a two-variable term builder ``build(j, inv_w, prod)`` to the engine."""
    prod = _bessel_products(x, y)
    terms = lambda j, inv_w: build(j, inv_w, prod)
    if boundary:
        return extrapolated_sum(nu, terms, sigma, tol, max_terms)
    smooth = None
    if x == y:
        mean = _mean_products(x)

        def smooth(s):
            j = continuous_zero(nu, s)
            return build(j, smooth_inverse_weight(nu, j), mean)

    return windowed_sum(nu, terms, tol, max_terms, smooth=smooth, decay=sigma)


def _require(p: SeriesParams, boundary):
    if not p.convergent:
        raise DivergentParameters(
            f"2*nu < 2n + 1 + alpha + beta fails for {p}: the series does not converge absolutely"
        )
    if boundary and not p.boundary_ok:
        raise BoundaryNotAllowed(f"x + y = 2 needs 2*nu < 2n + alpha + beta, which fails for {p}")


def sum_S(p: SeriesParams, x, y, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS) -> SumResult:
    """sum_m J_alpha(x j_m) J_beta(y j_m) / (j_m**q J_{nu+1}(j_m)**2)."""
    x, y, boundary = _check_xy(x, y)
    _require(p, boundary)
    a, b, q = p.alpha, p.beta, p.q

    def build(j, inv_w, prod):
        return prod(a, b, j) * inv_w / j**q

    return _run(p.nu, build, x, y, tol, max_terms, boundary, q)


def xi_scale(p: SeriesParams, x, y):
    """Factor c with S = c * xi."""
    return (
        _sp.gamma(p.nu + 2) ** 2
        * x**p.alpha
        * y**p.beta
        / (2.0 ** (p.alpha + p.beta - 2 * p.nu - 2) * _sp.gamma(p.alpha + 1) * _sp.gamma(p.beta + 1))
    )


def sum_xi(n, alpha, beta, nu, x, y, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS) -> SumResult:
    """sum_m Phi_alpha(x j) Phi_beta(y j) / (j**(2n+4) Phi_{nu+1}(j)**2)."""
    p = SeriesParams(n, alpha, beta, nu)
    x, y, boundary = _check_xy(x, y)
    _require(p, boundary)
    c = 1.0 / xi_scale(p, x, y)
    a, b, q = p.alpha, p.beta, p.q

    def build(j, inv_w, prod):
        return c * prod(a, b, j) * inv_w / j**q

    return _run(p.nu, build, x, y, tol, max_terms, boundary, q)


def sum_S1(n, alpha, nu, x, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS) -> SumResult:
    """One-variable series sum_m J_alpha(x j_m) / (j_m**(2n+alpha-2nu+2) J_{nu+1}(j_m)**2)."""
    n = int(n)
    alpha, nu = float(alpha), float(nu)
    check_order_pole(alpha, "alpha")
    check_order_pole(nu, "nu")
    x = float(x)
    if not 0 < x <= 2.0 + _BOUNDARY_EPS:
        raise DivergentParameters(f"x must lie in (0, 2], got {x!r}")
    boundary = abs(x - 2.0) <= _BOUNDARY_EPS
    if not 2 * nu < 2 * n + 0.5 + alpha:
        raise DivergentParameters("2*nu < 2n + 1/2 + alpha fails: the series does not converge absolutely")
    if boundary and not 2 * nu < 2 * n - 0.5 + alpha:
        raise BoundaryNotAllowed("x = 2 needs 2*nu < 2n - 1/2 + alpha")
    q = 2 * n + alpha - 2 * nu + 2

    def terms(j, inv_w):
        return _sp.jv(alpha, x * j) * inv_w / j**q

    if boundary:
        return extrapolated_sum(nu, terms, q - 0.5, tol, max_terms)
    return windowed_sum(nu, terms, tol, max_terms)


class Resolvent(str, enum.Enum):
    KS = "ks"
    KSEE = "ksee"
    KS1 = "ks1"
    KS1RE = "ks1re"


def _check_z(nu, z):
    z = float(z)
    j1 = bessel_zeros(nu, 1).zeros[0]
    if abs(z) >= j1 - EPS_POLE:
        raise PoleProximity(f"|z| = {abs(z)!r} must stay below the first zero {j1!r}")
    return z


def sum_resolvent(kind, nu, x, y=None, z=0.0, order=None, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS) -> SumResult:
    """Left-hand side of the Kneser-Sommerfeld type identities.

    ``order`` is beta for KSEE and alpha for KS1RE; ``y`` is only used by the
    two-variable kinds.
    """
    kind = Resolvent(kind)
    nu = float(nu)
    check_order_pole(nu, "nu")
    z = _check_z(nu, z)
    z2 = z * z
    x = float(x)

    if kind in (Resolvent.KS, Resolvent.KSEE):
        if y is None:
            raise ValueError(f"{kind.value} needs y")
        x, y, boundary = _check_xy(x, y)
        beta = nu if kind is Resolvent.KS else float(order)
        check_order_pole(beta, "beta")
        if not nu < beta + 1:
            raise DivergentParameters("the extended expansion needs nu < beta + 1")
        shift = nu - beta
        sigma = 2.0 - shift
        if boundary and not sigma > 2.0:
            raise BoundaryNotAllowed("x + y = 2 needs nu < beta for this series")

        def build(j, inv_w, prod):
            return j**shift * prod(nu, beta, j) * inv_w / (j * j - z2)

        return _run(nu, build, x, y, tol, max_terms, boundary, sigma)

    if not 0 < x <= 2.0 + _BOUNDARY_EPS:
        raise DivergentParameters(f"x must lie in (0, 2], got {x!r}")
    boundary = abs(x - 2.0) <= _BOUNDARY_EPS
    alpha = nu if kind is Resolvent.KS1 else float(order)
    check_order_pole(alpha, "alpha")
    power = 2 * nu - alpha
    sigma = 2.0 - power - 0.5
    if not sigma > 1.0:
        raise DivergentParameters("the one-variable expansion needs 2*nu < alpha + 1/2")
    if boundary and not sigma > 2.0:
        raise BoundaryNotAllowed("x = 2 needs 2*nu < alpha - 1/2")

    def terms(j, inv_w):
        return j**power * _sp.jv(alpha, x * j) * inv_w / (j * j - z2)

    if boundary:
        return extrapolated_sum(nu, terms, sigma, tol, max_terms)
    return windowed_sum(nu, terms, tol, max_terms)
