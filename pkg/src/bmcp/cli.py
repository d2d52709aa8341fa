"""Command line front end: stats, solve, generate, oracle, bench."""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .core import load_instance, save_instance
from .greedy import greedy_construct
from .harness import load_bench_spec, run_bench
from .instgen import GenParams, generate
from .neighbours import build_neighbour_graph, instance_stats
from .oracle import exact_opt
from .vdls import SearchConfig, run_vdls

_POOLS = {"neighbours": "neighbours", "all": "all_items"}
_PICKS = {"top": "top_gain", "random": "random_k"}


def _int_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b, got {text!r}") from None


def _items_1based(items) -> str:
    return " ".join(str(i + 1) for i in sorted(items))


def cmd_stats(args) -> int:
    inst = load_instance(args.instance)
    stats = instance_stats(inst)
    print(json.dumps(dataclasses.asdict(stats)))
    return 0


def cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    if args.algo == "greedy":
        sol = greedy_construct(inst)
        report = None
    else:
        cfg = SearchConfig(max_depth=args.depth, max_width=args.width,
                           cutoff_seconds=args.time, seed=args.seed,
                           branch_pool=_POOLS[args.branch_pool],
                           branch_pick=_PICKS[args.branch_pick],
                           init=args.init)
        gamma = build_neighbour_graph(inst)
        sol, report = run_vdls(inst, gamma, cfg)
    print(f"W {sol.total_weight}")
    print(f"C {sol.total_cost}")
    print(f"items {_items_1based(sol.selected)}")
    if report is not None and args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            json.dump(dataclasses.asdict(report), f, indent=2)
    return 0


def cmd_generate(args) -> int:
    params = GenParams(n=args.n, m=args.m, budget=args.budget,
                       family=args.family, density=args.density,
                       groups=args.groups, repeats=args.repeats,
                       cost_range=args.cost_range,
                       weight_range=args.weight_range, seed=args.seed)
    save_instance(generate(params), args.out)
    print(args.out)
    return 0


def cmd_oracle(args) -> int:
    inst = load_instance(args.instance)
    res = exact_opt(inst, limit=args.limit)
    print(f"W {res.weight}")
    print(f"exact {'yes' if res.exact else 'no'}")
    print(f"items {_items_1based(res.items)}")
    return 0


def cmd_bench(args) -> int:
    spec = load_bench_spec(args.spec)
    result = run_bench(spec, jobs=args.jobs, out=args.out)
    print(f"rows {len(result.rows)}")
    print(f"errors {len(result.errors)}")
    print(args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bmcp",
                                     description="Budgeted maximum coverage toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="print instance statistics as JSON")
    p.add_argument("instance")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("solve", help="run the greedy or local search solver")
    p.add_argument("instance")
    p.add_argument("--algo", choices=["greedy", "vdls"], default="vdls")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--width", type=int, default=7)
    p.add_argument("--time", type=float, default=600.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--branch-pool", choices=sorted(_POOLS), default="neighbours")
    p.add_argument("--branch-pick", choices=sorted(_PICKS), default="top")
    p.add_argument("--init", choices=["greedy", "empty", "random"],
                   default="greedy")
    p.add_argument("--report", help="write the run report as JSON here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write a random instance file")
    p.add_argument("--family", choices=["uniform", "grouped"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--groups", type=int, default=25)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--cost-range", type=_int_range, default=(1, 100))
    p.add_argument("--weight-range", type=_int_range, default=(1, 100))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="exact optimum for small instances")
    p.add_argument("instance")
    p.add_argument("--limit", type=int, default=2_000_000)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="run a benchmark spec, write CSV results")
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
