"""
Reading the reproduction results
================================

``python -m ntm_dyck.reproduce --out results`` leaves a ``summary.json``;
this prints its AUC table next to the figures it produced.
"""
import json
import sys
from pathlib import Path

out = Path(sys.argv[1] if len(sys.argv) > 1 else "results")
summary = json.loads((out / "summary.json").read_text())

rows = {f"NTM seed {s}": v["sweep"] for s, v in summary["ntm"]["seeds"].items()}
rows[f"LSTM h={summary['lstm']['best_hidden']}"] = summary["lstm"]["sweep"]
ns = sorted({int(n) for sweep in rows.values() for n in sweep})

print(f"{'':14s}" + "".join(f"{2 * n:>7d}" for n in ns))
for name, sweep in rows.items():
    print(f"{name:14s}" + "".join(f"{sweep[str(n)]:7.3f}" for n in ns))

print("\nselected NTM seed:", summary["ntm"]["selected_seed"])
print("stack alignment:", summary["stack"])
print("write activity:", summary["write_activity"])
print("figures:", *sorted(p.name for p in out.glob("*.svg")))
