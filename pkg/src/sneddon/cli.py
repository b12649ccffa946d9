"""Command-line front end.

    sneddon zeros --nu 0 --count 5
    sneddon sum --n 0 --alpha 0.5 --beta 0.5 --nu 0.5 --x 0.8 --y 0.4 --tol 1e-9
    sneddon verify --suite all --tol 1e-7 --out report.json

Exit status: 0 on success, 1 when a verification entry fails, 2 on a usage
error (bad flags or parameters outside an identity's domain).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import closedform, kstheory, partialfrac, report, series, sonin
from .errors import SneddonError
from .zeros import bessel_zeros

DEFAULTS = {
    "tol": 1e-8,
    "max_terms": 10**6,
    "format": "json",
    "count": 10,
    "n": 0,
    "alpha": None,
    "beta": None,
    "nu": 0.0,
    "x": None,
    "y": None,
    "z": 0.0,
    "t": 0.0,
    "mu": None,
    "eta": None,
    "r": None,
    "suite": "all",
    "series": "S",
    "kind": "ks",
    "f": "bessel",
    "out": None,
    "timing": False,
}


class UsageError(Exception):
    pass


def _common(p):
    p.add_argument("--nu", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--y", type=float, default=None)
    p.add_argument("--z", type=float, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--max-terms", dest="max_terms", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv"], default=None)
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--config", default=None, metavar="PATH", help="JSON file of defaults; flags override it")


def build_parser():
    parser = argparse.ArgumentParser(prog="sneddon", description="Sneddon-Bessel series over Bessel zeros.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="positive zeros of J_nu and the weights J_{nu+1}(j)^2")
    _common(p)
    p.add_argument("--count", type=int, default=None)

    p = sub.add_parser("sum", help="direct summation of a series")
    _common(p)
    p.add_argument("--series", choices=["S", "S1", "xi"], default=None)

    p = sub.add_parser("closed", help="closed-form value")
    _common(p)
    p.add_argument("--series", choices=["S", "S1", "delta"], default=None)

    p = sub.add_parser("verify", help="run a verification grid")
    _common(p)
    p.add_argument("--suite", choices=list(report.SUITES) + ["all"], default=None)
    p.add_argument("--timing", action="store_true", default=None, help="record wall time (makes output non-reproducible)")

    p = sub.add_parser("ks", help="both sides of a Kneser-Sommerfeld type identity")
    _common(p)
    p.add_argument("--kind", choices=["ks", "ksee", "ks1", "ks1r", "ks1re"], default=None)

    p = sub.add_parser("sonin", help="the transform T_{mu,eta} against Sonin's formula or a power law")
    _common(p)
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--eta", type=float, default=None)
    p.add_argument("--r", type=float, default=None, help="transform x**r instead of J_eta(x)/x**eta")

    p = sub.add_parser("pfrac", help="both sides of the partial-fraction expansion")
    _common(p)
    p.add_argument("--f", choices=["bessel", "phi2"], default=None)
    p.add_argument("--t", type=float, default=None)
    return parser


def resolve(args) -> dict:
    """Merge built-in defaults < config file < explicit flags."""
    opts = dict(DEFAULTS)
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(cfg, dict):
            raise UsageError("config file must hold a JSON object")
        opts.update({k.replace("-", "_"): v for k, v in cfg.items()})
    for k, v in vars(args).items():
        if v is not None and k not in ("command", "config"):
            opts[k] = v
    return opts


def _need(o, *names):
    missing = [n for n in names if o.get(n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _write(o, records, fields=None):
    """Print (or write to --out) a list of flat dicts."""
    if o["format"] == "json":
        text = report.dumps(records) + "\n"
    else:
        buf = io.StringIO()
        fields = fields or list(records[0])
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for r in records:
            w.writerow([report.format_float(r[k]) if isinstance(r[k], float) else r[k] for k in fields])
        text = buf.getvalue()
    if o["out"]:
        with open(o["out"], "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sum_record(res):
    return {"value": res.value, "tail_estimate": res.tail_estimate, "terms_used": res.terms_used, "converged": res.converged}


def cmd_zeros(o):
    t = bessel_zeros(o["nu"], o["count"])
    if o["format"] == "json":
        _write(o, [float(v) for v in t.zeros])
    else:
        _write(o, [{"m": i + 1, "zero": float(z), "weight": float(w)} for i, (z, w) in enumerate(zip(t.zeros, t.weights))])
    return 0


def cmd_sum(o):
    kind = o["series"]
    if kind == "S1":
        _need(o, "alpha", "x")
        res = series.sum_S1(o["n"], o["alpha"], o["nu"], o["x"], tol=o["tol"], max_terms=o["max_terms"])
    else:
        _need(o, "alpha", "beta", "x", "y")
        if kind == "xi":
            res = series.sum_xi(o["n"], o["alpha"], o["beta"], o["nu"], o["x"], o["y"], tol=o["tol"], max_terms=o["max_terms"])
        else:
            p = series.SeriesParams(o["n"], o["alpha"], o["beta"], o["nu"])
            res = series.sum_S(p, o["x"], o["y"], tol=o["tol"], max_terms=o["max_terms"])
    _write(o, [_sum_record(res)])
    return 0


def cmd_closed(o):
    kind = o["series"]
    if kind == "S1":
        _need(o, "alpha", "x")
        v = closedform.S1_closed(o["n"], o["alpha"], o["nu"], o["x"])
    else:
        _need(o, "alpha", "beta", "x", "y")
        if kind == "delta":
            _, v = closedform.delta2(o["n"], o["alpha"], o["beta"], o["nu"], o["x"], o["y"])
        else:
            v = closedform.S_closed(o["n"], o["alpha"], o["beta"], o["nu"], o["x"], o["y"])
    _write(o, [{"value": float(v)}])
    return 0


def cmd_verify(o):
    if o["suite"] not in report.SUITES + ("all",):
        raise UsageError(f"unknown suite {o['suite']!r}")
    # the grid's own series tolerance is tighter than the comparison tolerance
    rep = report.verify_grid(o["suite"], tol=o["tol"], series_tol=min(1e-9, o["tol"] / 10), timing=bool(o["timing"]))
    text = report.emit_report(rep, o["format"], o["out"])
    if not o["out"]:
        sys.stdout.write(text)
    s = rep.summary
    print(f"{s['count']} entries, {s['failures']} failures, max rel err {s['max_rel_err']:.3g}", file=sys.stderr)
    return 1 if s["failures"] else 0


def cmd_ks(o):
    kind = o["kind"]
    _need(o, "x")
    order = o["beta"] if kind == "ksee" else o["alpha"] if kind == "ks1re" else None
    if kind in ("ksee", "ks1re") and order is None:
        raise UsageError(f"{kind} needs --{'beta' if kind == 'ksee' else 'alpha'}")
    if kind in ("ks", "ksee"):
        _need(o, "y")
    pt = kstheory.ResolventPoint(x=o["x"], z=o["z"], nu=o["nu"], y=o["y"] if kind in ("ks", "ksee") else None, order=order)
    rhs = kstheory.ks1r_rhs(pt) if kind == "ks1r" else kstheory.rhs(kind, pt)
    lkind = "ks1" if kind == "ks1r" else kind
    lhs = series.sum_resolvent(lkind, o["nu"], o["x"], pt.y, o["z"], order=order, tol=o["tol"], max_terms=o["max_terms"])
    rec = {"lhs": lhs.value, "rhs": float(rhs), "abs_err": abs(lhs.value - rhs), "tail_estimate": lhs.tail_estimate}
    _write(o, [rec])
    return 0


def cmd_sonin(o):
    _need(o, "mu", "eta", "x")
    if o["r"] is None:
        spec = sonin.sonin_spec(o["mu"], o["eta"])
        target = sonin.sonin_target(o["mu"], o["x"])
    else:
        spec = sonin.power_spec(o["mu"], o["eta"], o["r"])
        target = sonin.power_target(o["mu"], o["eta"], o["r"], o["x"])
    v = sonin.t_transform(spec, o["x"], tol=min(o["tol"], 1e-10))
    _write(o, [{"transform": v, "target": target, "abs_err": abs(v - target)}])
    return 0


def cmd_pfrac(o):
    if o["f"] == "phi2":
        f = partialfrac.EntireFnSpec.phi_squared(o["nu"])
    else:
        _need(o, "alpha", "beta", "x", "y")
        f = partialfrac.EntireFnSpec.bessel_product(o["alpha"], o["beta"], o["x"], o["y"])
    M = min(o["max_terms"], 10**4)
    rhs = partialfrac.pf_rhs(f, o["nu"], o["n"], o["t"], M=M)
    lhs = partialfrac.pf_lhs(f, o["nu"], o["n"], o["t"])
    _write(o, [{"lhs": lhs, "rhs": rhs.value, "abs_err": abs(lhs - rhs.value), "tail_estimate": rhs.tail_estimate}])
    return 0


COMMANDS = {
    "zeros": cmd_zeros,
    "sum": cmd_sum,
    "closed": cmd_closed,
    "verify": cmd_verify,
    "ks": cmd_ks,
    "sonin": cmd_sonin,
    "pfrac": cmd_pfrac,
}


def cmd_dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](resolve(args))
    except (UsageError, SneddonError, ValueError) as exc:
        print(f"sneddon {args.command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"sneddon {args.command}: {exc}", file=sys.stderr)
        return 2


def main(argv=None):
    sys.exit(cmd_dispatch(argv))


if __name__ == "__main__":
    main()
