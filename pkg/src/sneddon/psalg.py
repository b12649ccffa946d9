"""Truncated power-series arithmetic.

Coefficient arrays are plain 1-d float arrays in some series variable ``w``.
:class:`EvenSeries` fixes ``w = z**2``; the bare array helpers are reused for
full power series in ``z`` by :mod:`sneddon.partialfrac`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroConstantTerm

RECIPROCAL_MIN_CONSTANT = 1e-14


def cauchy_product(a, b, order=None):
    """Coefficients of ``a*b`` truncated to ``order`` (default min of both)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if order is None:
        order = min(len(a), len(b)) - 1
    return np.convolve(a[: order + 1], b[: order + 1])[: order + 1]


def reciprocal(a, order=None):
    a = np.asarray(a, dtype=float)
    if order is None:
        order = len(a) - 1
    if abs(a[0]) <= RECIPROCAL_MIN_CONSTANT:
        raise ZeroConstantTerm(f"constant term {a[0]!r} is too small to invert")
    a = np.concatenate([a, np.zeros(max(0, order + 1 - len(a)))])
    b = np.zeros(order + 1)
    b[0] = 1.0 / a[0]
    for k in range(1, order + 1):
        # a[1..k] against b[k-1..0]
        b[k] = -np.dot(a[1 : k + 1], b[k - 1 :: -1]) / a[0]
    return b


def horner(coeffs, w):
    """Evaluate sum coeffs[k] * w**k; ``w`` may be complex or an array."""
    w = np.asarray(w)
    out = np.zeros_like(w, dtype=np.result_type(w, float))
    for c in coeffs[::-1]:
        out = out * w + c
    return out


@dataclass(frozen=True)
class EvenSeries:
    """Truncated Taylor series in ``z**2``: ``coeffs[k]`` multiplies ``z**(2k)``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float, copy=True).reshape(-1)
        if c.size == 0:
            raise ValueError("an EvenSeries needs at least the constant term")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        z = np.asarray(z)
        return horner(self.coeffs, z * z)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def truncate(self, order: int) -> "EvenSeries":
        return EvenSeries(self.coeffs[: order + 1])

    def to_full(self) -> np.ndarray:
        """Coefficients in powers of ``z`` (odd entries are zero)."""
        full = np.zeros(2 * self.order + 1)
        full[::2] = self.coeffs
        return full


def series_mul(a: EvenSeries, b: EvenSeries) -> EvenSeries:
    return EvenSeries(cauchy_product(a.coeffs, b.coeffs))


def series_reciprocal(a: EvenSeries) -> EvenSeries:
    return EvenSeries(reciprocal(a.coeffs))


def scale_argument(a: EvenSeries, s: float) -> EvenSeries:
    """Series of ``z -> a(s*z)``."""
    powers = (float(s) ** 2) ** np.arange(len(a))
    return EvenSeries(a.coeffs * powers)


@dataclass(frozen=True)
class BivarEvenPoly:
    """Polynomial ``sum A[j, k] x**(2j) y**(2k)`` restricted to ``j + k <= degree``."""

    degree: int
    A: np.ndarray

    def __post_init__(self):
        A = np.array(self.A, dtype=float, copy=True)
        n = self.degree
        if A.shape != (n + 1, n + 1):
            raise ValueError(f"coefficient table must be {(n + 1, n + 1)}, got {A.shape}")
        j, k = np.indices(A.shape)
        if np.any(A[j + k > n] != 0):
            raise ValueError("entries with j + k > degree must vanish")
        if not np.all(np.isfinite(A)):
            raise ValueError("non-finite polynomial coefficient")
        A.setflags(write=False)
        object.__setattr__(self, "A", A)

    def __call__(self, x, y):
        x2 = np.asarray(x, dtype=float) ** 2
        y2 = np.asarray(y, dtype=float) ** 2
        total = 0.0
        for j in range(self.degree + 1):
            total = total + x2**j * horner(self.A[j, : self.degree + 1 - j], y2)
        return total

    def terms(self):
        """Yield ``(j, k, A[j, k])`` over the admissible triangle."""
        for j in range(self.degree + 1):
            for k in range(self.degree + 1 - j):
                yield j, k, float(self.A[j, k])
