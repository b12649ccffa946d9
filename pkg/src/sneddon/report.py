"""Verification grids and bit-stable JSON/CSV reports.

Each suite walks a fixed parameter grid and compares a closed form (rhs)
against a direct evaluation (lhs). Rows outside an identity's admissible region
are skipped, never reported as failures.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import time
from dataclasses import dataclass, field

from .closedform import LIMIT_CASES, S1_closed, S_closed
from .errors import SneddonError
from .kstheory import ResolventPoint, rhs as ks_rhs_of
from .partialfrac import EntireFnSpec, pf_lhs, pf_rhs
from .series import Resolvent, SeriesParams, sum_resolvent, sum_S, sum_S1
from .sonin import power_spec, power_target, sonin_spec, sonin_target, t_transform
from .zeros import bessel_zeros

SUITES = ("closed_vs_numeric", "ks_suite", "pfrac_suite", "sonin_suite")
ABS_FLOOR = 1e-12
CSV_HEADER = ["identity", "params", "lhs", "rhs", "abs_err", "rel_err", "tail", "status"]

GRID_N = (-2, -1, 0, 1, 2, 3)
GRID_AB = (-0.5, 0.3, 1.7, 2.5)
GRID_NU = (-0.4, 0.25, 1.3)
GRID_XY = ((0.9, 0.3), (1.2, 0.5), (0.7, 0.7))


@dataclass(frozen=True)
class ReportEntry:
    identity: str
    params: dict
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tail: float
    status: str

    def as_dict(self):
        return {k: getattr(self, k) for k in CSV_HEADER}


@dataclass(frozen=True)
class VerificationReport:
    entries: tuple = ()
    summary: dict = field(default_factory=dict)

    @property
    def failures(self):
        return sum(e.status != "pass" for e in self.entries)

    def as_dict(self):
        return {"entries": [e.as_dict() for e in self.entries], "summary": dict(self.summary)}


def make_entry(identity, params, lhs, rhs, tail, tol, floor=ABS_FLOOR) -> ReportEntry:
    lhs, rhs, tail = float(lhs), float(rhs), float(tail)
    abs_err = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel_err = abs_err / scale if scale > 0 else 0.0
    ok = math.isfinite(abs_err) and (rel_err <= tol or abs_err <= floor)
    return ReportEntry(identity, dict(params), lhs, rhs, abs_err, rel_err, tail, "pass" if ok else "fail")


def _error_entry(identity, params, exc) -> ReportEntry:
    p = dict(params)
    p["error"] = f"{type(exc).__name__}: {exc}"
    nan = float("nan")
    return ReportEntry(identity, p, nan, nan, nan, nan, nan, "fail")


# -- suites ------------------------------------------------------------------


def closed_rows():
    """Two-variable grid, then the integer-order limit rows, then one-variable rows."""
    for n, a, b, nu, (x, y) in itertools.product(GRID_N, GRID_AB, GRID_AB, GRID_NU, GRID_XY):
        if 2 * nu < 2 * n + 1 + a + b:
            yield "S", dict(n=n, alpha=a, beta=b, nu=nu, x=x, y=y)
    for (n, k), a, (x, y) in itertools.product(sorted(LIMIT_CASES), (0.3, 1.7), GRID_XY):
        yield "S", dict(n=n, alpha=a, beta=a, nu=float(k), x=x, y=y)
    for n, a, nu, x in itertools.product((-1, 0, 1, 2), (-0.5, 0.3, 1.7), (-0.4, 0.0, 0.25, 1.0), (0.5, 1.3, 1.9)):
        if not 2 * nu < 2 * n + 0.5 + a:
            continue
        if nu in (0.0, 1.0) and n >= 0 and (n, int(nu)) not in LIMIT_CASES:
            continue
        if nu == 1.0 and n == 0:
            continue
        yield "S1", dict(n=n, alpha=a, nu=nu, x=x)


def _closed_cell(kind, p, series_tol, max_terms):
    if kind == "S":
        c = S_closed(p["n"], p["alpha"], p["beta"], p["nu"], p["x"], p["y"])
        r = sum_S(SeriesParams(p["n"], p["alpha"], p["beta"], p["nu"]), p["x"], p["y"], tol=series_tol, max_terms=max_terms)
    else:
        c = S1_closed(p["n"], p["alpha"], p["nu"], p["x"])
        r = sum_S1(p["n"], p["alpha"], p["nu"], p["x"], tol=series_tol, max_terms=max_terms)
    return r.value, c, r.tail_estimate


def ks_rows():
    two = [(0.9, 0.3), (0.7, 0.7), (0.8, 0.5), (1.0, 0.5)]
    one = (0.3, 0.9, 1.0)
    for nu in GRID_NU + (0.5,):
        j1 = float(bessel_zeros(nu, 1).zeros[0])
        zs = (0.0, 0.3, 0.8 * j1)
        for (x, y), z in itertools.product(two, zs):
            yield "ks", dict(nu=nu, x=x, y=y, z=z)
            for beta in GRID_AB:
                if nu < beta + 1 and not (x == y == 1.0):
                    yield "ksee", dict(nu=nu, beta=beta, x=x, y=y, z=z)
        for x, z in itertools.product(one, zs):
            if nu < 0.5:
                yield "ks1", dict(nu=nu, x=x, z=z)
                yield "ks1r", dict(nu=nu, x=x, z=z)
        for alpha, x, z in itertools.product(GRID_AB, (0.6, 1.5, 2.0), zs):
            if 2 * nu < alpha + 0.5 and not (x == 2.0 and not 2 * nu < alpha - 0.5):
                yield "ks1re", dict(nu=nu, alpha=alpha, x=x, z=z)


def _ks_cell(kind, p, series_tol, max_terms):
    order = p.get("beta", p.get("alpha"))
    point = ResolventPoint(x=p["x"], z=p["z"], nu=p["nu"], y=p.get("y"), order=order)
    if kind == "ks1r":
        from .kstheory import ks1r_rhs

        r = ks1r_rhs(point)
        kind_l = "ks1"
    else:
        r = ks_rhs_of(kind, point)
        kind_l = kind
    s = sum_resolvent(kind_l, p["nu"], p["x"], p.get("y"), p["z"], order=order, tol=series_tol, max_terms=max_terms)
    return s.value, r, s.tail_estimate


def _growth_n(N, kappa, nu):
    n = 0
    while not n - (N + 1 + 2 * nu if kappa >= 2 else N + 2 * nu) > 1e-9:
        n += 1
    return n


def pfrac_rows():
    for a, b, nu, (x, y), t in itertools.product(GRID_AB, GRID_AB, GRID_NU, GRID_XY, (0.0, 0.37, 2.1)):
        n0 = _growth_n(-a - b - 1, x + y, nu)
        for n in (n0, n0 + 1):
            yield "pf_bessel", dict(alpha=a, beta=b, nu=nu, x=x, y=y, n=n, t=t)
    for nu, n, t in itertools.product(GRID_NU, (1, 2, 3), (0.0, 0.37, 2.1)):
        if n >= 1:
            yield "pf_phi2", dict(nu=nu, n=n, t=t)


PFRAC_M = 10**4


def _pf_cell(kind, p, series_tol, max_terms):
    if kind == "pf_bessel":
        f = EntireFnSpec.bessel_product(p["alpha"], p["beta"], p["x"], p["y"])
    else:
        f = EntireFnSpec.phi_squared(p["nu"])
    r = pf_rhs(f, p["nu"], p["n"], p["t"], M=min(PFRAC_M, max_terms), tol=min(series_tol, 1e-12))
    lhs_v = pf_lhs(f, p["nu"], p["n"], p["t"])
    return lhs_v, r.value, r.tail_estimate


def sonin_rows():
    for (mu, eta), x in itertools.product(((1.3, 0.2), (2.5, 0.5), (0.7, -0.4)), (0.5, 1.5, 5.0)):
        yield "sonin", dict(mu=mu, eta=eta, x=x)
        for r in (0.0, 1.5, -0.5, 3.0):
            if 2 * eta + r + 2 > 0:
                yield "power_law", dict(mu=mu, eta=eta, r=r, x=x)


def _sonin_cell(kind, p, series_tol, max_terms):
    tol = 1e-13
    if kind == "sonin":
        return t_transform(sonin_spec(p["mu"], p["eta"]), p["x"], tol), sonin_target(p["mu"], p["x"]), tol
    spec = power_spec(p["mu"], p["eta"], p["r"])
    return t_transform(spec, p["x"], tol), power_target(p["mu"], p["eta"], p["r"], p["x"]), tol


# (rows, cell, absolute floor); the floor only matters where both sides vanish
_SUITE_TABLE = {
    "closed_vs_numeric": (closed_rows, _closed_cell, 0.0),
    "ks_suite": (ks_rows, _ks_cell, ABS_FLOOR),
    "pfrac_suite": (pfrac_rows, _pf_cell, ABS_FLOOR),
    "sonin_suite": (sonin_rows, _sonin_cell, 0.0),
}


def suite_cells(suite):
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in _SUITE_TABLE:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    for name in names:
        rows, cell, floor = _SUITE_TABLE[name]
        for kind, params in rows():
            yield name, kind, params, cell, floor


def verify_grid(suite="all", tol=1e-7, series_tol=1e-9, max_terms=2 * 10**5, timing=False) -> VerificationReport:
    """Run ``suite`` and return the report; failures are entries, never exceptions."""
    t0 = time.perf_counter()
    entries = []
    for name, kind, params, cell, floor in suite_cells(suite):
        try:
            lhs, rhs, tail = cell(kind, params, series_tol, max_terms)
            entries.append(make_entry(kind, params, lhs, rhs, tail, tol, floor))
        except (SneddonError, ValueError, ArithmeticError) as exc:
            entries.append(_error_entry(kind, params, exc))
    # entries that pass only on the absolute floor (both sides ~0) carry meaningless relative errors
    rels = [e.rel_err for e in entries if math.isfinite(e.rel_err) and (e.rel_err <= tol or e.status == "fail")]
    summary = {
        "suite": suite,
        "tol": float(tol),
        "count": len(entries),
        "failures": sum(e.status != "pass" for e in entries),
        "max_rel_err": max(rels) if rels else 0.0,
        "wall_time": round(time.perf_counter() - t0, 3) if timing else None,
    }
    return VerificationReport(tuple(entries), summary)


# -- serialisation -----------------------------------------------------------


def format_float(v) -> str:
    v = float(v)
    if math.isnan(v):
        return "NaN"
    if math.isinf(v):
        return "Infinity" if v > 0 else "-Infinity"
    s = f"{v:.17g}"
    # keep the JSON type a float on reload
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def dumps(obj) -> str:
    """Compact JSON with sorted keys and 17-significant-digit floats."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{dumps(obj[k])}" for k in sorted(obj)) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if hasattr(obj, "item"):
        return dumps(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def report_to_json(report: VerificationReport) -> str:
    d = report.as_dict()
    # entries keep the schema order; everything nested is key-sorted
    body = ",".join(
        "{" + ",".join(f'"{k}":{dumps(e[k])}' for k in CSV_HEADER) + "}" for e in d["entries"]
    )
    return '{"entries":[' + body + '],"summary":' + dumps(d["summary"]) + "}\n"


def report_to_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for e in report.entries:
        w.writerow([e.identity, dumps(e.params)] + [format_float(getattr(e, k)) for k in CSV_HEADER[2:7]] + [e.status])
    return buf.getvalue()


def emit_report(report: VerificationReport, format="json", path=None) -> str:
    """Serialise the report; write it to ``path`` when given. Returns the text."""
    if format == "json":
        text = report_to_json(report)
    elif format == "csv":
        text = report_to_csv(report)
    else:
        raise ValueError(f"unknown format {format!r}")
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text


def _entry_from(d) -> ReportEntry:
    return ReportEntry(
        d["identity"], dict(d["params"]), float(d["lhs"]), float(d["rhs"]),
        float(d["abs_err"]), float(d["rel_err"]), float(d["tail"]), d["status"],
    )


def parse_report(text, format="json") -> VerificationReport:
    if format == "json":
        d = json.loads(text)
        return VerificationReport(tuple(_entry_from(e) for e in d["entries"]), d["summary"])
    rows = list(csv.DictReader(io.StringIO(text)))
    entries = []
    for r in rows:
        r = dict(r)
        r["params"] = json.loads(r["params"])
        entries.append(_entry_from(r))
    return VerificationReport(tuple(entries), {})


def load_report(path, format=None) -> VerificationReport:
    if format is None:
        format = "csv" if str(path).endswith(".csv") else "json"
    with open(path) as fh:
        return parse_report(fh.read(), format)
