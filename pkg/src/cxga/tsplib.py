"""TSPLIB instance handling: parsing, distance matrices, serialization.

Only the EUC_2D subset of the format is supported (NAME, TYPE, DIMENSION,
EDGE_WEIGHT_TYPE, NODE_COORD_SECTION, EOF keywords with whitespace-separated
``index x y`` coordinate lines). City labels are assigned 1..n in file order;
the index column is only checked for count, so nonconsecutive indices are
tolerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InvalidInstanceError, TsplibParseError

ROUNDING_MODES = ("nint", "exact")


@dataclass(frozen=True)
class Instance:
    """A symmetric Euclidean TSP instance.

    ``cost[i, j]`` is the edge cost between the cities labelled ``i+1`` and
    ``j+1``; the matrix is symmetric with a zero diagonal. Instances are
    immutable after construction and safe to share across threads.
    """

    name: str
    n: int
    coords: np.ndarray  # shape (n, 2), float64
    cost: np.ndarray    # shape (n, n), float64
    _cost1: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        coords = np.ascontiguousarray(np.asarray(self.coords, dtype=np.float64))
        cost = np.ascontiguousarray(np.asarray(self.cost, dtype=np.float64))
        if self.n < 3:
            raise InvalidInstanceError(f"need at least 3 cities, got {self.n}")
        if coords.shape != (self.n, 2):
            raise InvalidInstanceError(
                f"coords shape {coords.shape} does not match n={self.n}")
        if cost.shape != (self.n, self.n):
            raise InvalidInstanceError(
                f"cost shape {cost.shape} does not match n={self.n}")
        if not np.array_equal(cost, cost.T):
            raise InvalidInstanceError("cost matrix is not symmetric")
        if np.any(np.diag(cost) != 0.0):
            raise InvalidInstanceError("cost matrix has a nonzero diagonal")
        if np.any(cost < 0.0):
            raise InvalidInstanceError("cost matrix has negative entries")
        # Padded copy indexed directly by 1-based labels; row/col 0 unused.
        cost1 = np.zeros((self.n + 1, self.n + 1), dtype=np.float64)
        cost1[1:, 1:] = cost
        for a in (coords, cost, cost1):
            a.setflags(write=False)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "cost", cost)
        object.__setattr__(self, "_cost1", cost1)

    def edge_cost(self, a: int, b: int) -> float:
        """Cost between cities with 1-based labels ``a`` and ``b``."""
        return float(self._cost1[a, b])


def build_cost_matrix(coords, rounding: str = "nint") -> np.ndarray:
    """Pairwise Euclidean distances for a list of (x, y) points.

    ``nint`` rounds each distance to the nearest integer (the TSPLIB
    convention, implemented as floor(d + 0.5)); ``exact`` keeps full floats.
    Note that nint rounding can violate the triangle inequality by up to one
    unit per edge pair.
    """
    if rounding not in ROUNDING_MODES:
        raise ValueError(f"rounding must be one of {ROUNDING_MODES}, got {rounding!r}")
    pts = np.asarray(coords, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InvalidInstanceError(f"expected (n, 2) coordinates, got shape {pts.shape}")
    if pts.shape[0] < 3:
        raise InvalidInstanceError(f"need at least 3 cities, got {pts.shape[0]}")
    diff = pts[:, None, :] - pts[None, :, :]
    d = np.sqrt((diff * diff).sum(axis=-1))
    if rounding == "nint":
        d = np.floor(d + 0.5)
    np.fill_diagonal(d, 0.0)
    return d


def instance_from_coords(coords, name: str = "unnamed",
                         rounding: str = "nint") -> Instance:
    """Build an Instance directly from coordinates."""
    pts = np.asarray(coords, dtype=np.float64)
    cost = build_cost_matrix(pts, rounding=rounding)
    return Instance(name=name, n=pts.shape[0], coords=pts, cost=cost)


def random_euclidean_instance(n: int, seed: int, name: str | None = None,
                              rounding: str = "exact",
                              box: float = 1000.0) -> Instance:
    """Seeded uniform-random instance on a ``box`` x ``box`` square."""
    if n < 3:
        raise InvalidInstanceError(f"need at least 3 cities, got {n}")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.0, box, size=(n, 2))
    return instance_from_coords(pts, name=name or f"rnd{n}-s{seed}", rounding=rounding)


def _header_value(line: str) -> str:
    return line.split(":", 1)[1].strip()


def parse_instance(text: str, rounding: str = "nint") -> Instance:
    """Parse TSPLIB-format text (EUC_2D only) into an Instance."""
    name = "unnamed"
    dimension = None
    edge_weight_type = None
    coords: list[tuple[float, float]] = []
    in_coords = False
    coord_line_count = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        upper = line.upper()
        if not in_coords:
            if upper.startswith("NODE_COORD_SECTION"):
                if dimension is None:
                    raise TsplibParseError("NODE_COORD_SECTION before DIMENSION", line_no)
                in_coords = True
                continue
            if upper.startswith("EOF"):
                raise TsplibParseError("EOF before NODE_COORD_SECTION", line_no)
            if ":" not in line:
                raise TsplibParseError(f"malformed header line: {raw!r}", line_no)
            key = line.split(":", 1)[0].strip().upper()
            if key == "NAME":
                name = _header_value(line)
            elif key == "DIMENSION":
                try:
                    dimension = int(_header_value(line))
                except ValueError:
                    raise TsplibParseError(f"bad DIMENSION value: {raw!r}", line_no) from None
            elif key == "EDGE_WEIGHT_TYPE":
                edge_weight_type = _header_value(line).upper()
                if edge_weight_type != "EUC_2D":
                    raise TsplibParseError(
                        f"unsupported edge weight type {edge_weight_type!r} "
                        "(only EUC_2D is supported)", line_no)
            # TYPE, COMMENT and other headers are accepted and ignored.
        else:
            if upper.startswith("EOF"):
                break
            parts = line.split()
            if len(parts) < 3:
                raise TsplibParseError(f"malformed coordinate line: {raw!r}", line_no)
            try:
                x, y = float(parts[1]), float(parts[2])
            except ValueError:
                raise TsplibParseError(f"malformed coordinate line: {raw!r}", line_no) from None
            coords.append((x, y))
            coord_line_count += 1
            if coord_line_count > dimension:
                raise TsplibParseError(
                    f"more than DIMENSION={dimension} coordinate lines", line_no)

    if dimension is None:
        raise TsplibParseError("missing DIMENSION header")
    if edge_weight_type is None:
        raise TsplibParseError("missing EDGE_WEIGHT_TYPE header")
    if not in_coords:
        raise TsplibParseError("missing NODE_COORD_SECTION")
    if len(coords) != dimension:
        raise TsplibParseError(
            f"expected {dimension} coordinate lines, found {len(coords)}")
    return instance_from_coords(coords, name=name, rounding=rounding)


def parse_instance_file(path, rounding: str = "nint") -> Instance:
    """Read and parse a TSPLIB file from disk."""
    return parse_instance(Path(path).read_text(), rounding=rounding)


def format_instance(instance: Instance) -> str:
    """Serialize an Instance back to TSPLIB text.

    Coordinates are written with full precision so that re-parsing yields an
    identical cost matrix.
    """
    lines = [
        f"NAME : {instance.name}",
        "TYPE : TSP",
        f"DIMENSION : {instance.n}",
        "EDGE_WEIGHT_TYPE : EUC_2D",
        "NODE_COORD_SECTION",
    ]
    for i, (x, y) in enumerate(instance.coords, start=1):
        lines.append(f"{i} {float(x)!r} {float(y)!r}")
    lines.append("EOF")
    return "\n".join(lines) + "\n"
