#!/usr/bin/env python3
"""Desk-scale benchmark: GA3 vs CXGA on eil51 with a reduced budget.

Uses the same harness as the `cxga bench` command, then prints the
baseline-vs-challenger comparison. Results land in demos/results/.

Run: python3 demos/mini_benchmark.py
"""

from pathlib import Path

import cxga

HERE = Path(__file__).resolve().parent

spec = cxga.ExperimentSpec(
    instances=(str(HERE.parent / "data" / "eil51.tsp"),),
    algorithms=(cxga.preset("GA3"), cxga.preset("CXGA")),
    repeats=5,
    base_seed=42,
    budget=100_000,
    output_dir=str(HERE / "results"),
)

report = cxga.run_experiment(spec)

print()
deltas = cxga.compare(report, baseline="GA3", challenger="CXGA")
for instance, d in deltas.items():
    print(f"{instance}: CXGA vs GA3  mean {d['mean_delta_pct']:+.2f}%  "
          f"min {d['min_delta_pct']:+.2f}%  (positive = CXGA better)")

print("\nevery run is reproducible from its row in results/runs.csv; e.g.")
row = report.rows[0]
print(f"  cxga solve data/eil51.tsp --algo {row.algorithm} "
      f"--seed {row.seed} --budget {spec.budget}")
