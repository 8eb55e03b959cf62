"""Run every scenario pipeline and export plot-ready CSV files.

Equivalent to calling ``qmass-lab <scenario> --out demo_output/<scenario>``
for each scenario.  Each output directory holds the data CSVs plus a
``summary.json`` of predicted-vs-measured metrics.

Run:  python3 demos/04_scenario_exports.py
"""

from pathlib import Path

from qmasslab import scenarios

out_root = Path("demo_output")

for kind in scenarios.SCENARIOS:
    out = out_root / kind
    summary = scenarios.run(kind, {}, out)
    status = "PASS" if summary.passed else "FAIL"
    print(f"{status} {kind:20s} -> {out}  ({', '.join(summary.files)})")
    for m in summary.metrics:
        print(f"       {m.name}: rel_error {m.rel_error:.3g} (tol {m.tolerance:g})")
