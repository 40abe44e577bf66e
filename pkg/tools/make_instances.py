#!/usr/bin/env python3
"""Regenerate the synthetic benchmark instances in data/.

rnd76 and rnd99 are seeded uniform-random Euclidean instances standing in for
TSPLIB's pr76 and rat99 at the same city counts; drop the canonical files
into data/ as pr76.tsp and rat99.tsp and the acceptance suite will prefer
them automatically.
"""

from pathlib import Path

import numpy as np

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

SYNTHETIC = [
    ("rnd76", 76, 760001),
    ("rnd99", 99, 990001),
]


def main() -> None:
    for name, n, seed in SYNTHETIC:
        rng = np.random.default_rng(seed)
        coords = rng.integers(0, 1001, size=(n, 2))
        lines = [
            f"NAME : {name}",
            f"COMMENT : seeded uniform random instance (seed {seed})",
            "TYPE : TSP",
            f"DIMENSION : {n}",
            "EDGE_WEIGHT_TYPE : EUC_2D",
            "NODE_COORD_SECTION",
        ]
        lines += [f"{i} {x} {y}" for i, (x, y) in enumerate(coords, start=1)]
        lines.append("EOF")
        path = DATA_DIR / f"{name}.tsp"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
