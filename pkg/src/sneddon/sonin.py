"""The integral transform T_{mu,eta} and the two identities it satisfies.

    T(f)(x) = 1/(2**(mu-eta-1) Gamma(mu-eta)) * int_0^1 f(xs) s**(2eta+1) (1-s**2)**(mu-eta-1) ds

maps J_eta(x)/x**eta to J_mu(x)/x**mu and x**r to a multiple of x**r.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate
from scipy import special as _sp

from .errors import ParameterConditionViolated, QuadratureFailure
from .fnkernel import phi

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class TransformSpec:
    """Orders mu > eta > -1 and the input f(u) = u**power * g(u).

    ``f`` here is g; splitting off a power lets the quadrature weight absorb a
    singular or fractional factor at u = 0.
    """

    mu: float
    eta: float
    f: Callable
    power: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "eta", float(self.eta))
        if not self.eta > -1:
            raise ParameterConditionViolated(f"eta must exceed -1, got {self.eta!r}")
        if not self.mu > self.eta:
            raise ParameterConditionViolated(f"need mu > eta, got mu={self.mu!r}, eta={self.eta!r}")
        object.__setattr__(self, "power", float(self.power))
        if not 2 * self.eta + self.power + 2 > 0:
            raise ParameterConditionViolated(f"need 2 eta + power + 2 > 0, got eta={self.eta!r}, power={self.power!r}")


def t_transform(spec: TransformSpec, x, tol=DEFAULT_TOL) -> float:
    """T_{mu,eta}(f)(x) by adaptive quadrature.

    Both endpoint factors go into the weight: QUADPACK's algebraic-weight rule
    integrates s**a (1-s)**b exactly, and (1+s)**(mu-eta-1) stays in the
    smooth part of the integrand.
    """
    x = float(x)
    if not x > 0:
        raise ValueError(f"x must be positive, got {x!r}")
    mu, eta = spec.mu, spec.eta
    e = mu - eta - 1.0
    g = lambda s: spec.f(x * s) * (1.0 + s) ** e
    # the tolerance applies to T itself
    tol = tol * 2.0**e * _sp.gamma(mu - eta) / x**spec.power
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            val, err = integrate.quad(
                g, 0.0, 1.0, weight="alg", wvar=(2 * eta + 1 + spec.power, e), epsabs=tol, epsrel=0, limit=200
            )
        except integrate.IntegrationWarning as exc:
            raise QuadratureFailure(str(exc)) from None
    if not np.isfinite(val) or err > tol:
        raise QuadratureFailure(f"quadrature error estimate {err:.3g} exceeds tol {tol:.3g}")
    return float(x**spec.power * val / (2.0**e * _sp.gamma(mu - eta)))


def bessel_ratio(eta):
    """x -> J_eta(x)/x**eta, regular at 0."""
    eta = float(eta)
    c = 1.0 / (2.0**eta * _sp.gamma(eta + 1.0))
    return lambda u: c * phi(eta, u)


def sonin_spec(mu, eta) -> TransformSpec:
    return TransformSpec(mu, eta, bessel_ratio(eta))


def sonin_target(mu, x):
    """J_mu(x)/x**mu."""
    return float(bessel_ratio(mu)(x))


def power_spec(mu, eta, r) -> TransformSpec:
    return TransformSpec(mu, eta, lambda u: np.ones_like(u), power=r)


def power_target(mu, eta, r, x):
    """Gamma(eta + r/2 + 1) x**r / (2**(mu-eta) Gamma(mu + r/2 + 1))."""
    return float(_sp.gamma(eta + r / 2 + 1) * x**r / (2.0 ** (mu - eta) * _sp.gamma(mu + r / 2 + 1)))
