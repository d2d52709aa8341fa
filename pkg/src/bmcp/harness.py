"""Batch experiment runner: multi-seed timed runs over instance sets.

Each (instance, config) pair is run `runs` times with seeds base_seed,
base_seed+1, ... and every run becomes one CSV row. Per-run W is checked
against a from-scratch evaluation before anything is written. A summary
table aggregates best/average per (instance, config), and config_summary
averages the per-instance bests per config, the shape used for parameter
grids and ablation comparisons.
"""

from __future__ import annotations

import csv
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .core import Instance, evaluate, load_instance
from .greedy import greedy_construct
from .instgen import GenParams, generate, instance_name
from .neighbours import build_neighbour_graph
from .vdls import RunReport, SearchConfig, run_vdls

ROW_FIELDS = ["instance", "algo", "d", "k", "branch_pool", "branch_pick",
              "init", "seed", "W", "C", "time_to_best", "terminated_by"]
SUMMARY_FIELDS = ["instance", "algo", "d", "k", "branch_pool", "branch_pick",
                  "init", "runs", "best_W", "avg_W", "avg_time_to_best"]

DEFAULT_CONFIG = {"algo": "vdls", "d": 8, "k": 7, "branch_pool": "neighbours",
                  "branch_pick": "top_gain", "init": "greedy"}


@dataclass
class BenchSpec:
    instances: list = field(default_factory=list)   # paths
    generate: list = field(default_factory=list)    # GenParams
    configs: list = field(default_factory=lambda: [dict(DEFAULT_CONFIG)])
    runs: int = 10
    cutoff_seconds: float = 600.0
    base_seed: int = 0

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.cutoff_seconds <= 0:
            raise ValueError("cutoff_seconds must be > 0")


@dataclass
class BenchResult:
    rows: list
    summary: list
    errors: list


def expand_grid(grid: dict, base: dict | None = None) -> list[dict]:
    """Cartesian product of {field: [values...]} into config dicts."""
    keys = sorted(grid)
    out = []
    for combo in itertools.product(*(grid[k] for k in keys)):
        cfg = dict(DEFAULT_CONFIG if base is None else base)
        cfg.update(zip(keys, combo))
        out.append(cfg)
    return out


def load_bench_spec(path) -> BenchSpec:
    """Read the JSON bench description (schema documented in the README)."""
    with open(path, "r", encoding="utf-8") as f:
        obj = json.load(f)
    configs = [dict(DEFAULT_CONFIG, **c) for c in obj.get("configs", [])]
    if "grid" in obj:
        configs.extend(expand_grid(obj["grid"]))
    if not configs:
        configs = [dict(DEFAULT_CONFIG)]
    gens = []
    for g in obj.get("generate", []):
        g = dict(g)
        for rng_key in ("cost_range", "weight_range"):
            if rng_key in g:
                g[rng_key] = tuple(g[rng_key])
        gens.append(GenParams(**g))
    return BenchSpec(instances=list(obj.get("instances", [])),
                     generate=gens,
                     configs=configs,
                     runs=int(obj.get("runs", 10)),
                     cutoff_seconds=float(obj.get("cutoff_seconds", 600.0)),
                     base_seed=int(obj.get("base_seed", 0)))


def config_label(cfg: dict) -> str:
    if cfg.get("algo") == "greedy":
        return "greedy"
    return (f"vdls:d{cfg['d']},k{cfg['k']},{cfg['branch_pool']},"
            f"{cfg['branch_pick']},{cfg['init']}")


def _search_config(cfg: dict, seed: int, cutoff: float) -> SearchConfig:
    return SearchConfig(max_depth=cfg["d"], max_width=cfg["k"],
                        cutoff_seconds=cutoff, seed=seed,
                        branch_pool=cfg["branch_pool"],
                        branch_pick=cfg["branch_pick"], init=cfg["init"])


def _run_one(task) -> dict:
    label, inst, cfg, seed, cutoff = task
    if cfg.get("algo") == "greedy":
        sol = greedy_construct(inst)
        report = RunReport(best_weight=sol.total_weight, best_cost=sol.total_cost,
                           time_to_best=0.0, root_iterations=0, improvements=0,
                           nodes_expanded=0, terminated_by="stagnation")
    else:
        gamma = build_neighbour_graph(inst)
        sol, report = run_vdls(inst, gamma, _search_config(cfg, seed, cutoff))
    w, c = evaluate(inst, sol.selected)
    if w != report.best_weight or c != report.best_cost or c > inst.budget:
        raise RuntimeError(f"row failed from-scratch validation on {label}")
    return {"instance": label, "algo": cfg.get("algo", "vdls"),
            "d": cfg.get("d", ""), "k": cfg.get("k", ""),
            "branch_pool": cfg.get("branch_pool", ""),
            "branch_pick": cfg.get("branch_pick", ""),
            "init": cfg.get("init", ""),
            "seed": seed if cfg.get("algo") != "greedy" else "",
            "W": report.best_weight, "C": report.best_cost,
            "time_to_best": round(report.time_to_best, 3),
            "terminated_by": report.terminated_by}


def _load_instances(spec: BenchSpec, errors: list) -> list[tuple[str, Instance]]:
    loaded = []
    for path in spec.instances:
        try:
            loaded.append((Path(path).name, load_instance(path)))
        except (OSError, ValueError) as exc:
            errors.append({"instance": str(path), "error": str(exc)})
    for params in spec.generate:
        loaded.append((instance_name(params), generate(params)))
    return loaded


def run_bench(spec: BenchSpec, jobs: int = 1, out=None) -> BenchResult:
    """Run the whole spec; optionally write <out> and <out stem>.summary.csv."""
    errors: list[dict] = []
    instances = _load_instances(spec, errors)

    tasks = []
    for label, inst in instances:
        for cfg in spec.configs:
            n_runs = 1 if cfg.get("algo") == "greedy" else spec.runs
            for r in range(n_runs):
                tasks.append((label, inst, cfg, spec.base_seed + r,
                              spec.cutoff_seconds))

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_one, tasks))
    else:
        rows = [_run_one(t) for t in tasks]

    summary = summarize(rows)
    if out is not None:
        write_csv(out, rows, summary, errors)
    return BenchResult(rows=rows, summary=summary, errors=errors)


def summarize(rows: list) -> list:
    """Best/average W and average time-to-best per (instance, config)."""
    groups: dict[tuple, list] = {}
    for row in rows:
        key = (row["instance"], config_label(row))
        groups.setdefault(key, []).append(row)
    out = []
    for (_, _), grp in sorted(groups.items(), key=lambda kv: kv[0]):
        first = grp[0]
        ws = [r["W"] for r in grp]
        out.append({"instance": first["instance"], "algo": first["algo"],
                    "d": first["d"], "k": first["k"],
                    "branch_pool": first["branch_pool"],
                    "branch_pick": first["branch_pick"], "init": first["init"],
                    "runs": len(grp), "best_W": max(ws),
                    "avg_W": sum(ws) / len(ws),
                    "avg_time_to_best": round(
                        sum(r["time_to_best"] for r in grp) / len(grp), 3)})
    return out


def config_summary(summary: list) -> list:
    """Mean of per-instance best W per config, across all instances."""
    groups: dict[str, list] = {}
    for row in summary:
        groups.setdefault(config_label(row), []).append(row)
    out = []
    for label, grp in sorted(groups.items()):
        out.append({"label": label, "instances": len(grp),
                    "mean_best_W": sum(r["best_W"] for r in grp) / len(grp)})
    return out


def flag_inversions(config_rows: list, reference_label: str) -> list[str]:
    """Config labels whose mean best W beats the reference config's."""
    ref = next(r for r in config_rows if r["label"] == reference_label)
    return [r["label"] for r in config_rows
            if r["label"] != reference_label
            and r["mean_best_W"] > ref["mean_best_W"]]


def write_csv(out, rows: list, summary: list, errors: list | None = None) -> None:
    out = Path(out)
    with open(out, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=ROW_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
        if errors:
            for err in errors:
                f.write(f"# error: {err['instance']}: {err['error']}\n")
    with open(out.with_suffix(".summary.csv"), "w", newline="",
              encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=SUMMARY_FIELDS)
        writer.writeheader()
        writer.writerows(summary)
