"""Closed-form sides of the Kneser-Sommerfeld expansion and its extensions.

Every right-hand side is even in z; negative z is folded onto |z|. Each
function accepts ``dps``: when given, the value is computed with mpmath at
that many decimal digits and returned as an ``mpmath.mpf``. The Taylor bridge
needs this, since the z**(2n) coefficients for n ~ 4 sit twenty orders of
magnitude below the value itself on the fitting interval.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import mpmath
from scipy import special as _sp

from .closedform import S1_closed, S_closed
from .errors import FitIllConditioned, IntegerOrderUnsupported, ParameterConditionViolated, PoleProximity
from .fnkernel import EPS_POLE, check_order_pole, hyp1f2
from .series import Resolvent
from .zeros import bessel_zeros

INTEGER_ORDER_EPS = 1e-3
# below SMALL_Z the Y_nu forms cancel catastrophically in doubles; below
# ZERO_Z the z = 0 value is exact to rounding (the correction is O(z**2))
SMALL_Z = 1e-2
ZERO_Z = 1e-9
FIT_NODES = 12
FIT_INTERVAL = (0.01, 0.12)
FIT_DPS = 40


@dataclass(frozen=True)
class ResolventPoint:
    """Evaluation point (x, y, z) for order nu; ``order`` is beta (KSEE) or alpha (KS1RE)."""

    x: float
    z: float
    nu: float
    y: Optional[float] = None
    order: Optional[float] = None

    def __post_init__(self):
        for name in ("x", "z", "nu"):
            object.__setattr__(self, name, float(getattr(self, name)))
        check_order_pole(self.nu, "nu")
        if self.y is not None:
            object.__setattr__(self, "y", float(self.y))
        if self.order is not None:
            object.__setattr__(self, "order", float(self.order))
            check_order_pole(self.order, "order")
        if not self.x > 0:
            raise ValueError(f"x must be positive, got {self.x!r}")
        j1 = bessel_zeros(self.nu, 1).zeros[0]
        if abs(self.z) >= j1 - EPS_POLE:
            raise PoleProximity(f"|z| = {abs(self.z)!r} must stay below j_1 = {j1!r}")

    def two_variable(self):
        if self.y is None:
            raise ValueError("this identity needs y")
        if not 0 < self.y <= self.x <= 1.0:
            raise ParameterConditionViolated(f"need 0 < y <= x <= 1, got x={self.x!r}, y={self.y!r}")


class _Float:
    jv = staticmethod(_sp.jv)
    yv = staticmethod(_sp.yv)
    gamma = staticmethod(_sp.gamma)
    rgamma = staticmethod(_sp.rgamma)
    sin = staticmethod(math.sin)
    pi = math.pi
    hyp1f2 = staticmethod(hyp1f2)

    @staticmethod
    def num(v):
        return float(v)


class _Mp:
    jv = staticmethod(mpmath.besselj)
    yv = staticmethod(mpmath.bessely)
    gamma = staticmethod(mpmath.gamma)
    rgamma = staticmethod(mpmath.rgamma)
    sin = staticmethod(mpmath.sin)
    hyp1f2 = staticmethod(mpmath.hyp1f2)

    @staticmethod
    def num(v):
        return mpmath.mpf(v)

    @property
    def pi(self):
        return mpmath.pi


def _evaluate(fn, dps, *args):
    # args end with z > 0
    if dps is None:
        z = args[-1]
        if z >= SMALL_Z:
            return float(fn(_Float, *args))
        # terms of size z**(-2|order|) cancel down to O(1)
        m = max(abs(a) for a in args[:-1])
        dps = 20 + math.ceil(2 * (m + 1) * math.log10(1 / z))
        with mpmath.workdps(dps):
            return float(fn(_Mp(), *args))
    with mpmath.workdps(int(dps)):
        return +fn(_Mp(), *args)


def _bracket(L, nu, x, z):
    # Y_nu(z) J_nu(xz) - J_nu(z) Y_nu(xz); vanishes at x = 1
    return L.yv(nu, z) * L.jv(nu, x * z) - L.jv(nu, z) * L.yv(nu, x * z)


def _fold(p: ResolventPoint):
    if abs(p.z) < ZERO_Z:
        return None
    return abs(p.z)


def _ks(L, nu, beta, x, y, z):
    nu, beta, x, y, z = map(L.num, (nu, beta, x, y, z))
    return L.pi * L.jv(beta, y * z) * _bracket(L, nu, x, z) / (4 * z ** (beta - nu) * L.jv(nu, z))


def ks_rhs(p: ResolventPoint, dps=None):
    """pi J_nu(yz) (Y_nu(z)J_nu(xz) - J_nu(z)Y_nu(xz)) / (4 J_nu(z))."""
    p.two_variable()
    z = _fold(p)
    if z is None:
        return S_closed(0, p.nu, p.nu, p.nu, p.x, p.y)
    return _evaluate(_ks, dps, p.nu, p.nu, p.x, p.y, z)


def ksee_rhs(p: ResolventPoint, dps=None):
    """Extension with J_beta(yz) / z**(beta - nu) in place of J_nu(yz)."""
    p.two_variable()
    if p.order is None:
        raise ValueError("ksee needs beta (order)")
    beta = p.order
    if not p.nu < beta + 1:
        raise ParameterConditionViolated(f"need nu < beta + 1, got nu={p.nu!r}, beta={beta!r}")
    z = _fold(p)
    if z is None:
        return S_closed(0, p.nu, beta, p.nu, p.x, p.y)
    return _evaluate(_ks, dps, p.nu, beta, p.x, p.y, z)


def _one_variable(p: ResolventPoint):
    if not 0 < p.x <= 1.0:
        raise ParameterConditionViolated(f"need 0 < x <= 1, got {p.x!r}")
    if not p.nu < 0.5:
        raise ParameterConditionViolated(f"the one-variable expansion needs nu < 1/2, got {p.nu!r}")


def _non_integer(nu):
    if abs(nu - round(nu)) <= INTEGER_ORDER_EPS:
        raise IntegerOrderUnsupported(f"nu = {nu!r} is within {INTEGER_ORDER_EPS:g} of an integer")


def _ks1(L, nu, x, z):
    nu, x, z = map(L.num, (nu, x, z))
    return L.pi * z**nu * _bracket(L, nu, x, z) / (4 * L.jv(nu, z))


def ks1_rhs(p: ResolventPoint, dps=None):
    _one_variable(p)
    z = _fold(p)
    if z is None:
        return S1_closed(0, p.nu, p.nu, p.x)
    return _evaluate(_ks1, dps, p.nu, p.x, z)


def _ks1r(L, nu, x, z):
    nu, x, z = map(L.num, (nu, x, z))
    br = L.jv(nu, z) * L.jv(-nu, x * z) - L.jv(-nu, z) * L.jv(nu, x * z)
    return L.pi * z**nu * br / (4 * L.sin(L.pi * nu) * L.jv(nu, z))


def ks1r_rhs(p: ResolventPoint, dps=None):
    """Form of ks1_rhs with J_{-nu} in place of Y_nu; nu must not be an integer."""
    _one_variable(p)
    _non_integer(p.nu)
    z = _fold(p)
    if z is None:
        return S1_closed(0, p.nu, p.nu, p.x)
    return _evaluate(_ks1r, dps, p.nu, p.x, z)


def _ks1re(L, nu, alpha, x, z):
    nu, alpha, x, z = map(L.num, (nu, alpha, x, z))
    w = -((x * z) ** 2) / 4
    first = (
        x ** (alpha - 2 * nu)
        * L.jv(nu, z)
        * L.hyp1f2(1, 1 - nu, alpha - nu + 1, w)
        * L.rgamma(1 - nu)
        * L.rgamma(alpha - nu + 1)
        / 2 ** (alpha - 2 * nu)
    )
    second = z ** (2 * nu - alpha) * L.jv(-nu, z) * L.jv(alpha, x * z)
    return L.pi * (first - second) / (4 * L.sin(L.pi * nu) * L.jv(nu, z))


def ks1re_rhs(p: ResolventPoint, dps=None):
    """One-variable extension with J_alpha(xz), 0 < x <= 2."""
    if p.order is None:
        raise ValueError("ks1re needs alpha (order)")
    nu, alpha = p.nu, p.order
    _non_integer(nu)
    if not 2 * nu < alpha + 0.5:
        raise ParameterConditionViolated(f"need 2 nu < alpha + 1/2, got nu={nu!r}, alpha={alpha!r}")
    c = alpha - nu + 1
    if c <= EPS_POLE and abs(c - round(c)) <= EPS_POLE:
        raise ParameterConditionViolated(f"alpha - nu + 1 = {c!r} is a non-positive integer")
    if not 0 < p.x <= 2.0:
        raise ParameterConditionViolated(f"need 0 < x <= 2, got {p.x!r}")
    z = _fold(p)
    if z is None:
        return S1_closed(0, alpha, nu, p.x)
    return _evaluate(_ks1re, dps, nu, alpha, p.x, z)


_RHS = {
    Resolvent.KS: ks_rhs,
    Resolvent.KSEE: ksee_rhs,
    Resolvent.KS1: ks1_rhs,
    Resolvent.KS1RE: ks1re_rhs,
}


def rhs(kind, p: ResolventPoint, dps=None):
    return _RHS[Resolvent(kind)](p, dps)


def closed_coefficient(kind, nu, n, x, y=None, order=None):
    """The z**(2n) Taylor coefficient of the rhs, from the Sneddon-Bessel closed forms."""
    kind = Resolvent(kind)
    if kind is Resolvent.KS:
        return S_closed(n, nu, nu, nu, x, y)
    if kind is Resolvent.KSEE:
        return S_closed(n, nu, order, nu, x, y)
    if kind is Resolvent.KS1:
        return S1_closed(n, nu, nu, x)
    return S1_closed(n, order, nu, x)


def _chebyshev_nodes(a, b, k):
    return [
        (a + b) / 2 + (b - a) / 2 * mpmath.cos((2 * i + 1) * mpmath.pi / (2 * k))
        for i in range(k)
    ]


def fit_even_coefficients(fn, n_max, nodes=FIT_NODES, interval=FIT_INTERVAL, dps=FIT_DPS):
    """Least-squares fit of fn(z) by a polynomial in z**2; returns its first n_max+1 coefficients.

    ``fn`` must return mpmath numbers accurate to about ``dps`` digits.
    """
    deg = n_max + 4
    if deg + 1 > nodes:
        raise FitIllConditioned(f"degree {deg} needs more than {nodes} nodes")
    with mpmath.workdps(dps):
        # nodes rounded to doubles so fn sees exactly the abscissae of the matrix
        zs = [mpmath.mpf(float(z)) for z in _chebyshev_nodes(mpmath.mpf(interval[0]), mpmath.mpf(interval[1]), nodes)]
        wmax = mpmath.mpf(interval[1]) ** 2
        # basis in the scaled variable w / wmax keeps the columns comparable
        A = mpmath.matrix(nodes, deg + 1)
        b = mpmath.matrix(nodes, 1)
        for i, z in enumerate(zs):
            s = z * z / wmax
            for k in range(deg + 1):
                A[i, k] = s**k
            b[i] = fn(z)
        cond = mpmath.cond(A.T * A)
        if cond > mpmath.mpf(10) ** (dps - 12):
            raise FitIllConditioned(f"normal matrix condition {float(cond):.3g} exceeds the working precision")
        c, _ = mpmath.qr_solve(A, b)
        return [float(c[k] / wmax**k) for k in range(n_max + 1)]


def resolvent_taylor_match(kind, nu, x, y=None, order=None, n_max=4):
    """Pairs (closed-form coefficient, fitted coefficient of the rhs) for n = 0..n_max."""
    if not 0 <= n_max <= 6:
        raise ValueError("n_max must lie in 0..6")
    kind = Resolvent(kind)
    fn = _RHS[kind]

    def exact(z):
        return fn(ResolventPoint(x=x, z=float(z), nu=nu, y=y, order=order), dps=FIT_DPS)

    fitted = fit_even_coefficients(exact, n_max)
    return [(closed_coefficient(kind, nu, n, x, y, order), fitted[n]) for n in range(n_max + 1)]


def resolvent_pde_residual(nu, x, y, z, h=1e-4):
    """Residual of 2nu U - z U_z + x U_x + y U_y + Phi_nu(xz)Phi_nu(yz)/(8(nu+1)^2 Phi_nu(z)^2)
    for U = ks_rhs / (4 (nu+1)^2 (xy)^nu), by central differences at 40 digits."""
    from .fnkernel import phi

    def U(a, b, c):
        v = ks_rhs(ResolventPoint(x=float(a), z=float(c), nu=nu, y=float(b)), dps=FIT_DPS)
        return v / (4 * (nu + 1) ** 2 * (mpmath.mpf(a) * b) ** nu)

    d = lambda g, v: (g(v + h) - g(v - h)) / (2 * h)
    Ux = d(lambda a: U(a, y, z), x)
    Uy = d(lambda b: U(x, b, z), y)
    Uz = d(lambda c: U(x, y, c), z)
    src = phi(nu, x * z) * phi(nu, y * z) / (8 * (nu + 1) ** 2 * phi(nu, z) ** 2)
    return float(2 * nu * U(x, y, z) - z * Uz + x * Ux + y * Uy + src)
