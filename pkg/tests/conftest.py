from pathlib import Path

import numpy as np
import pytest

import cxga

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def eil51():
    return cxga.parse_instance_file(DATA_DIR / "eil51.tsp")


@pytest.fixture(scope="session")
def unit_square():
    return cxga.instance_from_coords(
        [(0, 0), (1, 0), (1, 1), (0, 1)], name="square4", rounding="exact")


@pytest.fixture(scope="session")
def triangle_345_text():
    return (
        "NAME : tri3\n"
        "TYPE : TSP\n"
        "DIMENSION : 3\n"
        "EDGE_WEIGHT_TYPE : EUC_2D\n"
        "NODE_COORD_SECTION\n"
        "1 0 0\n"
        "2 3 0\n"
        "3 0 4\n"
        "EOF\n"
    )


def acceptance_instance(stem: str, surrogate: str) -> "cxga.Instance":
    """Prefer the canonical TSPLIB file when it is present in data/,
    otherwise fall back to the bundled seeded surrogate of the same size."""
    canonical = DATA_DIR / f"{stem}.tsp"
    if canonical.exists():
        return cxga.parse_instance_file(canonical)
    return cxga.parse_instance_file(DATA_DIR / f"{surrogate}.tsp")


def random_parents(n: int, rng: np.random.Generator):
    return cxga.random_tour(n, rng), cxga.random_tour(n, rng)
