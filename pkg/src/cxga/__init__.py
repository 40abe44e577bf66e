"""Genetic-algorithm toolkit for the symmetric Euclidean TSP.

Building blocks: TSPLIB (EUC_2D) instance handling, permutation tours with
cached costs, the MSCX / MSCX_Radius / RX crossover operators, a seeded
generational GA engine, the HRX split-population combination step with the
CXGA loop around it, a brute-force oracle for tiny instances, and a
multi-seed benchmark harness.
"""

from .bench import (AggregateReport, AlgorithmConfig, ExperimentSpec, compare,
                    derive_seed, load_spec, preset, read_report,
                    run_experiment)
from .engine import GaConfig, RunReport, run_ga, select_parents
from .errors import (ConfigError, CxgaError, InvalidInstanceError,
                     InvalidTourError, TsplibParseError)
from .exact import MAX_EXACT_N, brute_force_optimum
from .hrx import HrxConfig, hrx, num_in_rx, run_cxga, split_population
from .operators import CrossoverKind, mscx, mscx_radius, mutate, rx
from .tour import Individual, random_tour, tour_cost, validate_tour
from .tsplib import (Instance, build_cost_matrix, format_instance,
                     instance_from_coords, parse_instance,
                     parse_instance_file, random_euclidean_instance)

__version__ = "0.1.0"

__all__ = [
    "AggregateReport", "AlgorithmConfig", "ConfigError", "CrossoverKind",
    "CxgaError", "ExperimentSpec", "GaConfig", "HrxConfig", "Individual",
    "Instance", "InvalidInstanceError", "InvalidTourError", "MAX_EXACT_N",
    "RunReport", "TsplibParseError", "brute_force_optimum",
    "build_cost_matrix", "compare", "derive_seed", "format_instance", "hrx",
    "instance_from_coords", "load_spec", "mscx", "mscx_radius", "mutate",
    "num_in_rx", "parse_instance", "parse_instance_file", "preset",
    "random_euclidean_instance", "random_tour", "read_report", "run_cxga",
    "run_experiment", "run_ga", "rx", "select_parents", "split_population",
    "tour_cost", "validate_tour",
]
