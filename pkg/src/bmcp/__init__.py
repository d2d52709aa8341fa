"""Budgeted maximum coverage: solvers, generators, oracle, and harness."""

from .core import (Instance, InstanceFormatError, Solution, empty_solution,
                   evaluate, flip, flip_feasible, flip_in_place,
                   format_instance, format_instance_json, gain, load_instance,
                   make_instance, parse_instance, parse_instance_json,
                   save_instance, solution_from_items)
from .greedy import greedy_construct
from .harness import (BenchResult, BenchSpec, config_summary, expand_grid,
                      flag_inversions, load_bench_spec, run_bench, summarize)
from .instgen import GenParams, gen_grouped, gen_uniform, generate, instance_name
from .neighbours import (InstanceStats, NeighbourGraph, build_neighbour_graph,
                         instance_stats)
from .oracle import OracleResult, exact_opt
from .vdls import (RunReport, SearchConfig, TreeStats, branch_candidates,
                   local_search, run_vdls)

__all__ = [
    "Instance", "InstanceFormatError", "Solution", "empty_solution",
    "evaluate", "flip", "flip_feasible", "flip_in_place", "format_instance",
    "format_instance_json", "gain", "load_instance", "make_instance",
    "parse_instance", "parse_instance_json", "save_instance",
    "solution_from_items", "greedy_construct", "BenchResult", "BenchSpec",
    "config_summary", "expand_grid", "flag_inversions", "load_bench_spec",
    "run_bench", "summarize", "GenParams", "gen_grouped", "gen_uniform",
    "generate", "instance_name", "InstanceStats", "NeighbourGraph",
    "build_neighbour_graph", "instance_stats", "OracleResult", "exact_opt",
    "RunReport", "SearchConfig", "TreeStats", "branch_candidates",
    "local_search", "run_vdls",
]
