"""Benchmark harness: multi-seed runs of the GA1/GA2/GA3/CXGA presets over
instance sets, with per-run CSV rows, aggregate CSV/JSON files, and
baseline-vs-challenger comparisons.

Run-level seeds are derived as ``base_seed XOR hash(algorithm, instance,
repeat)`` with a stable hash, so every run is independent yet reproducible
from its CSV row alone.
"""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import json
import os
import statistics

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .engine import GaConfig, run_ga
from .errors import ConfigError
from .hrx import HrxConfig, run_cxga
from .operators import CrossoverKind
from .tsplib import Instance, parse_instance_file

RUN_CSV_FIELDS = ("instance", "algorithm", "seed", "best_cost",
                  "evaluations", "wall_seconds")
AGGREGATE_CSV_FIELDS = ("instance", "n_city", "algorithm", "min_cost",
                        "mean_cost", "std_cost", "mean_runtime_seconds")
OUTPUT_DIR_ENV = "CXGA_OUTPUT_DIR"


@dataclass(frozen=True)
class AlgorithmConfig:
    """A named algorithm: the engine crossover plus an optional HRX part."""

    name: str
    crossover: CrossoverKind
    hrx: HrxConfig | None = None

    def run(self, instance: Instance, seed: int, budget: int, ps: int = 100,
            pc: float = 0.9, pm: float | None = None):
        ga = GaConfig(ps=ps, pc=pc, pm=pm, budget=budget,
                      crossover=self.crossover, seed=seed)
        if self.hrx is not None:
            return run_cxga(instance, ga, self.hrx)
        return run_ga(instance, ga)


def preset(name: str) -> AlgorithmConfig:
    """The four tuned presets: GA1 = MSCX_Radius(r=2), GA2 = RX(pr=10),
    GA3 = MSCX, CXGA = MSCX with the HRX step (first part 90%, prx=40,
    pr=30, r=5, fired at 15% of generations)."""
    key = name.upper()
    if key == "GA1":
        return AlgorithmConfig("GA1", CrossoverKind.mscx_radius(2))
    if key == "GA2":
        return AlgorithmConfig("GA2", CrossoverKind.rx(10.0))
    if key == "GA3":
        return AlgorithmConfig("GA3", CrossoverKind.mscx())
    if key == "CXGA":
        return AlgorithmConfig("CXGA", CrossoverKind.mscx(), HrxConfig())
    raise ConfigError(f"unknown algorithm preset {name!r}; "
                      "available: GA1, GA2, GA3, CXGA")


@dataclass(frozen=True)
class ExperimentSpec:
    """One benchmark campaign: every algorithm runs ``repeats`` times on
    every instance."""

    instances: tuple[str, ...]
    algorithms: tuple[AlgorithmConfig, ...]
    repeats: int = 10
    base_seed: int = 1
    budget: int = 1_000_000
    output_dir: str = "results"
    ps: int = 100
    pc: float = 0.9
    jobs: int | None = None

    def validate(self) -> None:
        if self.repeats < 1:
            raise ConfigError(f"repeats must be >= 1, got {self.repeats}")
        if not self.instances:
            raise ConfigError("no instances given")
        if not self.algorithms:
            raise ConfigError("no algorithms given")
        names = [a.name for a in self.algorithms]
        if len(set(names)) != len(names):
            raise ConfigError(f"duplicate algorithm names: {names}")


def derive_seed(base_seed: int, algorithm: str, instance_name: str,
                repeat: int) -> int:
    """Stable per-run seed: reproducible across processes and platforms."""
    digest = hashlib.blake2b(
        f"{algorithm}|{instance_name}|{repeat}".encode(), digest_size=8
    ).digest()
    return (base_seed ^ int.from_bytes(digest, "little")) & (2**63 - 1)


@dataclass
class RunRow:
    instance: str
    algorithm: str
    seed: int
    best_cost: float
    evaluations: int
    wall_seconds: float


@dataclass
class AggregateReport:
    """Per-(instance, algorithm) statistics plus every underlying run row.
    ``std_cost`` is the sample standard deviation (0 for a single run)."""

    rows: list[RunRow]
    instance_sizes: dict[str, int] = field(default_factory=dict)

    def key_rows(self, instance: str, algorithm: str) -> list[RunRow]:
        return [r for r in self.rows
                if r.instance == instance and r.algorithm == algorithm]

    def instances(self) -> list[str]:
        seen = dict.fromkeys(r.instance for r in self.rows)
        return list(seen)

    def algorithms(self) -> list[str]:
        seen = dict.fromkeys(r.algorithm for r in self.rows)
        return list(seen)

    def stats(self, instance: str, algorithm: str) -> dict:
        rows = self.key_rows(instance, algorithm)
        if not rows:
            raise ConfigError(
                f"no runs for ({instance!r}, {algorithm!r}); available "
                f"algorithms: {self.algorithms()}")
        costs = [r.best_cost for r in rows]
        return {
            "instance": instance,
            "n_city": self.instance_sizes.get(instance),
            "algorithm": algorithm,
            "min_cost": min(costs),
            "mean_cost": statistics.fmean(costs),
            "std_cost": statistics.stdev(costs) if len(costs) > 1 else 0.0,
            "mean_runtime_seconds": statistics.fmean(
                r.wall_seconds for r in rows),
            "runs": [dataclasses.asdict(r) for r in rows],
        }

    def to_json_dict(self) -> dict:
        return {
            "instance_sizes": self.instance_sizes,
            "results": [self.stats(i, a)
                        for i in self.instances()
                        for a in self.algorithms()
                        if self.key_rows(i, a)],
        }


def _run_one(instance_path: str, algorithm: AlgorithmConfig, seed: int,
             budget: int, ps: int, pc: float) -> RunRow:
    instance = _load_instance(instance_path)
    report = algorithm.run(instance, seed=seed, budget=budget, ps=ps, pc=pc)
    return RunRow(
        instance=instance.name,
        algorithm=algorithm.name,
        seed=seed,
        best_cost=report.best_cost,
        evaluations=report.evaluations_used,
        wall_seconds=report.wall_time,
    )


_INSTANCE_CACHE: dict[str, Instance] = {}


def _load_instance(path: str) -> Instance:
    cached = _INSTANCE_CACHE.get(path)
    if cached is None:
        cached = _INSTANCE_CACHE[path] = parse_instance_file(path)
    return cached


def run_experiment(spec: ExperimentSpec, quiet: bool = False) -> AggregateReport:
    """Execute every (instance, algorithm, repeat) run, write the report
    files, and print a summary table.

    Files written to the output directory (overridable via the
    CXGA_OUTPUT_DIR environment variable): ``runs.csv`` with one row per run,
    ``aggregate.csv`` and ``aggregate.json`` with per-(instance, algorithm)
    statistics. Cost columns are identical across reruns of the same spec.
    """
    spec.validate()
    out_dir = Path(os.environ.get(OUTPUT_DIR_ENV) or spec.output_dir)

    instances: dict[str, Instance] = {}
    for path in spec.instances:
        try:
            instances[path] = parse_instance_file(path)
        except OSError as exc:
            raise OSError(f"cannot read instance file {path}: {exc}") from exc
    out_dir.mkdir(parents=True, exist_ok=True)

    tasks = [
        (path, algo,
         derive_seed(spec.base_seed, algo.name, instances[path].name, k),
         spec.budget, spec.ps, spec.pc)
        for path in spec.instances
        for algo in spec.algorithms
        for k in range(spec.repeats)
    ]

    jobs = spec.jobs if spec.jobs is not None else (os.cpu_count() or 1)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_one_star, tasks, chunksize=1))
    else:
        rows = [_run_one(*task) for task in tasks]

    report = AggregateReport(
        rows=rows,
        instance_sizes={inst.name: inst.n for inst in instances.values()},
    )
    write_report_files(report, out_dir)
    if not quiet:
        print(format_summary(report))
        print(f"report files written to {out_dir}/")
    return report


def _run_one_star(task) -> RunRow:
    return _run_one(*task)


def write_report_files(report: AggregateReport, out_dir: Path) -> None:
    with open(out_dir / "runs.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(RUN_CSV_FIELDS)
        for r in report.rows:
            writer.writerow([r.instance, r.algorithm, r.seed,
                             repr(r.best_cost), r.evaluations,
                             f"{r.wall_seconds:.3f}"])
    float_fields = ("min_cost", "mean_cost", "std_cost")
    with open(out_dir / "aggregate.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(AGGREGATE_CSV_FIELDS)
        for entry in report.to_json_dict()["results"]:
            writer.writerow([repr(entry[k]) if k in float_fields else entry[k]
                             for k in AGGREGATE_CSV_FIELDS])
    with open(out_dir / "aggregate.json", "w") as fh:
        json.dump(report.to_json_dict(), fh, indent=2)
        fh.write("\n")


def read_report(path) -> AggregateReport:
    """Load an AggregateReport back from an aggregate.json file."""
    with open(path) as fh:
        payload = json.load(fh)
    rows = [RunRow(**run) for entry in payload["results"]
            for run in entry["runs"]]
    return AggregateReport(rows=rows,
                           instance_sizes=payload.get("instance_sizes", {}))


def format_summary(report: AggregateReport) -> str:
    header = (f"{'instance':<12} {'n':>5} {'algorithm':<10} {'min':>12} "
              f"{'mean':>12} {'std':>10} {'time[s]':>9}")
    lines = [header, "-" * len(header)]
    for entry in report.to_json_dict()["results"]:
        lines.append(
            f"{entry['instance']:<12} {entry['n_city'] or '?':>5} "
            f"{entry['algorithm']:<10} {entry['min_cost']:>12.2f} "
            f"{entry['mean_cost']:>12.2f} {entry['std_cost']:>10.2f} "
            f"{entry['mean_runtime_seconds']:>9.2f}")
    return "\n".join(lines)


def compare(report: AggregateReport, baseline: str,
            challenger: str) -> dict[str, dict[str, float]]:
    """Per-instance percentage improvements of ``challenger`` over
    ``baseline``: 100*(baseline - challenger)/baseline for the mean and min
    best costs; positive means the challenger is better."""
    deltas: dict[str, dict[str, float]] = {}
    for instance in report.instances():
        base = report.stats(instance, baseline)
        chal = report.stats(instance, challenger)
        deltas[instance] = {
            "mean_delta_pct":
                100.0 * (base["mean_cost"] - chal["mean_cost"]) / base["mean_cost"],
            "min_delta_pct":
                100.0 * (base["min_cost"] - chal["min_cost"]) / base["min_cost"],
        }
    return deltas


def _algorithm_from_table(table: dict) -> AlgorithmConfig:
    if "preset" in table:
        base = preset(table["preset"])
        return AlgorithmConfig(table.get("name", base.name), base.crossover,
                               base.hrx)
    try:
        name = table["name"]
        kind = table["crossover"]
    except KeyError as exc:
        raise ConfigError(f"algorithm table needs a {exc.args[0]!r} key") from None
    crossover = CrossoverKind(kind, r=int(table.get("r", 1)),
                              pr=float(table.get("pr", 0.0)))
    hrx = None
    if "hrx" in table:
        h = table["hrx"]
        hrx = HrxConfig(
            first_part_pct=float(h.get("first_part_pct", 90.0)),
            prx=float(h.get("prx", 40.0)),
            pr=float(h.get("pr", 30.0)),
            r=int(h.get("r", 5)),
            ng=int(h.get("ng", 1)),
            pc_hrx=float(h.get("pc_hrx", 15.0)),
            stochastic_schedule=bool(h.get("stochastic_schedule", False)),
            pn=h.get("pn"),
        )
    return AlgorithmConfig(name, crossover, hrx)


def load_spec(path) -> ExperimentSpec:
    """Read an experiment description from a TOML file.

    Keys: ``instances`` (list of file paths, resolved relative to the TOML
    file), ``algorithms`` (preset names or inline tables), ``repeats``,
    ``base_seed``, ``budget``, ``output_dir``, ``ps``, ``pc``, ``jobs``.
    """
    path = Path(path)
    with open(path, "rb") as fh:
        try:
            data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"cannot parse {path}: {exc}") from exc
    try:
        instance_paths = tuple(
            str(p) if os.path.isabs(p) else str(path.parent / p)
            for p in data["instances"])
        raw_algos = data["algorithms"]
    except KeyError as exc:
        raise ConfigError(f"{path} is missing the {exc.args[0]!r} key") from None
    algorithms = tuple(
        preset(a) if isinstance(a, str) else _algorithm_from_table(a)
        for a in raw_algos)
    return ExperimentSpec(
        instances=instance_paths,
        algorithms=algorithms,
        repeats=int(data.get("repeats", 10)),
        base_seed=int(data.get("base_seed", 1)),
        budget=int(data.get("budget", 1_000_000)),
        output_dir=str(data.get("output_dir",
                                path.parent / "results")),
        ps=int(data.get("ps", 100)),
        pc=float(data.get("pc", 0.9)),
        jobs=int(data["jobs"]) if "jobs" in data else None,
    )
