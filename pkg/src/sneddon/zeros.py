"""Positive zeros j_{m,nu} of J_nu and the weights J_{nu+1}(j_m)**2.

Small zeros are bracketed by a sign scan and polished with Brent's method;
the remaining ones start from McMahon's expansion and are refined by a
vectorised Newton iteration. Tables are cached per order and grown lazily.
"""
from __future__ import annotations

import json
import threading
from dataclasses import dataclass

import numpy as np
from scipy import optimize
from scipy import special as _sp

from .errors import ConvergenceFailure, IndexOutOfRange, PoleProximity
from .fnkernel import EPS_POLE, MAX_ORDER

MAX_ZEROS = 10**6
NEWTON_MAX_ITER = 50
_SCAN_STEP = 0.05


@dataclass(frozen=True)
class ZeroTable:
    nu: float
    zeros: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        z = np.array(self.zeros, dtype=float, copy=True)
        w = np.array(self.weights, dtype=float, copy=True)
        if z.shape != w.shape or z.ndim != 1:
            raise ValueError("zeros and weights must be 1-d arrays of equal length")
        if z.size and (z[0] <= 0 or np.any(np.diff(z) <= 0)):
            raise ValueError("zeros must be positive and strictly increasing")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        z.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "nu", float(self.nu))
        object.__setattr__(self, "zeros", z)
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.zeros)

    def head(self, M: int) -> "ZeroTable":
        if M > len(self):
            raise IndexOutOfRange(f"table holds {len(self)} zeros, {M} requested")
        return ZeroTable(self.nu, self.zeros[:M], self.weights[:M])


def mcmahon(nu, s):
    """McMahon's expansion of the s-th zero, usable for real (non-integer) s."""
    b = (np.asarray(s, dtype=float) + 0.5 * nu - 0.25) * np.pi
    mu = 4.0 * nu * nu
    b8 = 8.0 * b
    return (
        b
        - (mu - 1) / b8
        - 4 * (mu - 1) * (7 * mu - 31) / (3 * b8**3)
        - 32 * (mu - 1) * (83 * mu**2 - 982 * mu + 3779) / (15 * b8**5)
    )


def _check_nu(nu):
    nu = float(nu)
    if not np.isfinite(nu) or nu <= -1.0 + EPS_POLE or nu > MAX_ORDER:
        if -1.0 - EPS_POLE < nu <= -1.0 + EPS_POLE:
            raise PoleProximity(f"order {nu!r} is too close to -1")
        raise ValueError(f"zero tables need nu in (-1, {MAX_ORDER:g}], got {nu!r}")
    return nu


def _scan_zeros(nu, X):
    f = lambda x: _sp.jv(nu, x)
    # geometric grid near 0 catches the small first zero when nu is close to -1
    grid = np.concatenate([np.geomspace(1e-6, _SCAN_STEP, 40, endpoint=False), np.arange(_SCAN_STEP, X, _SCAN_STEP)])
    vals = f(grid)
    idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    return np.array([optimize.brentq(f, grid[i], grid[i + 1], xtol=1e-15, rtol=9e-16, maxiter=200) for i in idx])


def _newton(nu, seeds):
    j = seeds.copy()
    for _ in range(NEWTON_MAX_ITER):
        J = _sp.jv(nu, j)
        dJ = nu / j * J - _sp.jv(nu + 1.0, j)
        step = J / dJ
        j -= step
        if np.all(np.abs(step) <= 4e-16 * j):
            # one more Newton step costs nothing and removes the last ulps
            J = _sp.jv(nu, j)
            j -= J / (nu / j * J - _sp.jv(nu + 1.0, j))
            return j
    raise ConvergenceFailure(f"Newton iteration for zeros of J_{nu:g} did not converge in {NEWTON_MAX_ITER} steps")


def _bracketed(nu, lo, hi):
    f = lambda x: _sp.jv(nu, x)
    return optimize.brentq(f, lo, hi, xtol=1e-15, rtol=9e-16, maxiter=200)


def _extend(nu, known: np.ndarray, M: int) -> np.ndarray:
    if len(known) >= M:
        return known
    start = len(known) + 1
    m = np.arange(start, M + 1, dtype=float)
    seeds = mcmahon(nu, m)
    j = _newton(nu, seeds)
    # guard against Newton hopping to a neighbouring zero
    bad = np.abs(j - seeds) > 0.5
    if np.any(bad):
        for i in np.nonzero(bad)[0]:
            j[i] = _bracketed(nu, seeds[i] - 0.5 * np.pi, seeds[i] + 0.5 * np.pi)
    out = np.concatenate([known, j])
    gaps = np.diff(out)
    if np.any(gaps <= 0.5 * np.pi) or np.any(gaps >= 1.5 * np.pi):
        # only the first few seeded zeros can misbehave; refine them by continuation
        out = _continue_by_brackets(nu, known, M)
    return out


def _continue_by_brackets(nu, known, M):
    zs = list(known)
    while len(zs) < M:
        lo = zs[-1] + 1e-9
        hi = lo + 0.1
        while np.sign(_sp.jv(nu, lo)) == np.sign(_sp.jv(nu, hi)):
            lo, hi = hi, hi + 0.1
        zs.append(_bracketed(nu, lo, hi))
        if len(zs) > len(known) + 64:
            break
    if len(zs) < M:
        rest = _newton(nu, mcmahon(nu, np.arange(len(zs) + 1, M + 1, dtype=float)))
        zs = np.concatenate([zs, rest])
        if np.any(np.diff(zs) <= 0.5 * np.pi):
            raise ConvergenceFailure(f"could not isolate the zeros of J_{nu:g}")
    return np.asarray(zs, dtype=float)


def _compute(nu, M, known=None):
    if known is None or len(known) == 0:
        X = max(30.0, 4.0 * abs(nu) + 30.0)
        known = _scan_zeros(nu, X)
        # drop the last scanned zero: it may sit at the scan edge
        known = known[:-1]
    zs = _extend(nu, known, M) if len(known) < M else known
    return zs


_CACHE: dict[float, ZeroTable] = {}
_LOCK = threading.Lock()


def bessel_zeros(nu, M: int) -> ZeroTable:
    """First ``M`` positive zeros of J_nu with their weights (cached)."""
    nu = _check_nu(nu)
    M = int(M)
    if M < 1:
        raise ValueError("M must be a positive integer")
    if M > MAX_ZEROS:
        raise ValueError(f"at most {MAX_ZEROS} zeros are supported, got {M}")
    with _LOCK:
        table = _CACHE.get(nu)
        if table is None or len(table) < M:
            known = None if table is None else table.zeros
            # grow geometrically so doubling callers do not recompute often
            target = M if table is None else max(M, min(MAX_ZEROS, 2 * len(table)))
            zs = _compute(nu, target, known)
            if table is None:
                w = _sp.jv(nu + 1.0, zs) ** 2
            else:
                w = np.concatenate([table.weights, _sp.jv(nu + 1.0, zs[len(table):]) ** 2])
            table = ZeroTable(nu, zs, w)
            _CACHE[nu] = table
    return table if len(table) == M else table.head(M)


def zero_weight(table: ZeroTable, m: int) -> float:
    """``J_{nu+1}(j_m)**2`` for 1-based ``m``."""
    if not 1 <= m <= len(table):
        raise IndexOutOfRange(f"m={m} outside 1..{len(table)}")
    return float(table.weights[m - 1])


def clear_cache():
    with _LOCK:
        _CACHE.clear()


def save_tables(path, tables):
    data = [{"nu": t.nu, "zeros": t.zeros.tolist(), "weights": t.weights.tolist()} for t in tables]
    with open(path, "w") as fh:
        json.dump(data, fh)


def load_tables(path, install=False):
    """Read a JSON cache file; with ``install`` the tables seed the cache."""
    with open(path) as fh:
        data = json.load(fh)
    tables = [ZeroTable(d["nu"], d["zeros"], d["weights"]) for d in data]
    if install:
        with _LOCK:
            for t in tables:
                cur = _CACHE.get(t.nu)
                if cur is None or len(cur) < len(t):
                    _CACHE[t.nu] = t
    return tables
