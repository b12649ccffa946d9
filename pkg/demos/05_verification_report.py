"""Run two of the verification grids and write a reproducible report.

The same thing is available from the shell as
    sneddon verify --suite ks_suite --out ks.json
"""
import sys
import tempfile
from pathlib import Path

from sneddon import emit_report, load_report, verify_grid

for suite in ("sonin_suite", "ks_suite"):
    rep = verify_grid(suite, tol=1e-7)
    s = rep.summary
    print(f"{suite}: {s['count']} entries, {s['failures']} failures, max rel err {s['max_rel_err']:.2e}")

out = Path(tempfile.mkdtemp()) / "ks.csv"
emit_report(rep, "csv", out)
print(f"\nwrote {out}; the first rows:")
sys.stdout.write("".join(out.read_text().splitlines(keepends=True)[:4]))
assert load_report(out).entries == rep.entries
