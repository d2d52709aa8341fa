"""Variable depth local search over item flips.

The search repeatedly grows a bounded depth-first tree of flips from a
root item drawn from a random permutation. Each tree node flips one item;
a node stops the whole tree as soon as the running solution strictly beats
the solution the tree started from. Branches are limited to the best (or a
random sample of) `max_width` unvisited feasible moves, drawn from the
flipped item's neighbours by default, and the tree never goes deeper than
`max_depth`. A run ends at the cutoff time or after a full pass over all
roots without improvement.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .core import (Instance, Solution, empty_solution, flip_feasible,
                   flip_in_place, gain)
from .greedy import greedy_construct
from .neighbours import NeighbourGraph

BRANCH_POOLS = ("neighbours", "all_items")
BRANCH_PICKS = ("top_gain", "random_k")
INITS = ("greedy", "empty", "random")


@dataclass
class SearchConfig:
    """Knobs for one search run; defaults follow the tuned configuration."""

    max_depth: int = 8          # d: deepest flip chain explored per tree
    max_width: int = 7          # k: branch candidates kept per node
    cutoff_seconds: float = 600.0
    seed: int = 0
    branch_pool: str = "neighbours"   # or "all_items"
    branch_pick: str = "top_gain"     # or "random_k"
    init: str = "greedy"              # or "empty" / "random"

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if self.max_width < 1:
            raise ValueError("max_width must be >= 1")
        if self.cutoff_seconds <= 0:
            raise ValueError("cutoff_seconds must be > 0")
        if self.branch_pool not in BRANCH_POOLS:
            raise ValueError(f"branch_pool must be one of {BRANCH_POOLS}")
        if self.branch_pick not in BRANCH_PICKS:
            raise ValueError(f"branch_pick must be one of {BRANCH_PICKS}")
        if self.init not in INITS:
            raise ValueError(f"init must be one of {INITS}")


@dataclass
class RunReport:
    best_weight: int
    best_cost: int
    time_to_best: float
    root_iterations: int
    improvements: int
    nodes_expanded: int
    terminated_by: str   # "cutoff" or "stagnation"


@dataclass
class TreeStats:
    """Per-tree node counter and cutoff state, shared down the recursion."""

    nodes: int = 0
    deadline: float | None = None
    aborted: bool = False


def branch_candidates(inst: Instance, gamma: NeighbourGraph, cfg: SearchConfig,
                      sol: Solution, p: int, visited: set[int],
                      rng: random.Random | None = None) -> list[int]:
    """Ordered branch items after flipping p into state `sol`.

    Pool is gamma[p] (or all other items), minus visited items, keeping only
    feasible flips. top_gain sorts by descending gain with index ties;
    random_k returns a uniform sample instead. At most max_width items.
    """
    pool = gamma.gamma[p] if cfg.branch_pool == "neighbours" else range(inst.n)
    selected = sol.selected
    cost = inst.cost
    slack = inst.budget - sol.total_cost
    feasible = [i for i in pool
                if i != p and i not in visited
                and (i in selected or cost[i] <= slack)]
    if cfg.branch_pick == "random_k":
        if rng is None:
            rng = random.Random(cfg.seed)
        rng.shuffle(feasible)
        return feasible[:cfg.max_width]
    scored = sorted((-gain(inst, sol, i), i) for i in feasible)
    return [i for _, i in scored[:cfg.max_width]]


def local_search(inst: Instance, gamma: NeighbourGraph, cfg: SearchConfig,
                 s_in: Solution, sol: Solution, p: int, depth: int,
                 visited: set[int], rng: random.Random | None = None,
                 stats: TreeStats | None = None) -> Solution | None:
    """One depth-first tree rooted at flipping p in `sol`.

    Returns the first state found that strictly beats s_in, with `sol`
    left holding that state (the flip chain stays applied). Returns None
    when the bounded tree has no improvement, in which case `sol` is
    restored to exactly its entry state. `visited` is shared by the whole
    tree: every explored branch item enters it and is never branched again
    under this root. `s_in` must not alias `sol`.
    """
    if stats is None:
        stats = TreeStats()
    stats.nodes += 1
    if (stats.deadline is not None and stats.nodes & 1023 == 0
            and time.monotonic() >= stats.deadline):
        stats.aborted = True
        return None
    flip_in_place(inst, sol, p)
    if sol.total_weight > s_in.total_weight:
        return sol
    if depth >= cfg.max_depth:
        flip_in_place(inst, sol, p)
        return None
    for q in branch_candidates(inst, gamma, cfg, sol, p, visited, rng):
        visited.add(q)
        found = local_search(inst, gamma, cfg, s_in, sol, q, depth + 1,
                             visited, rng, stats)
        if found is not None:
            return found
        if stats.aborted:
            break
    flip_in_place(inst, sol, p)
    return None


def _initial_solution(inst: Instance, cfg: SearchConfig,
                      rng: random.Random) -> Solution:
    if cfg.init == "greedy":
        return greedy_construct(inst)
    if cfg.init == "empty":
        return empty_solution(inst)
    # random: add items in random order, stopping at the first one that
    # would break the budget
    sol = empty_solution(inst)
    order = list(range(inst.n))
    rng.shuffle(order)
    for i in order:
        if sol.total_cost + inst.cost[i] > inst.budget:
            break
        flip_in_place(inst, sol, i)
    return sol


def run_vdls(inst: Instance, gamma: NeighbourGraph,
             cfg: SearchConfig) -> tuple[Solution, RunReport]:
    """Full search run: build the initial solution, then improve it with
    local-search trees rooted at a cyclic random permutation of the items.

    The permutation is drawn once per run. The visited set is reset for
    every root and seeded with the root item. Deterministic for a fixed
    (instance, config, seed) up to wall-clock effects.
    """
    start = time.monotonic()
    deadline = start + cfg.cutoff_seconds
    rng = random.Random(cfg.seed)
    sol = _initial_solution(inst, cfg, rng)

    n = inst.n
    root_iterations = improvements = nodes_total = 0
    time_to_best = 0.0
    terminated = "stagnation"
    if n > 0:
        perm = list(range(n))
        rng.shuffle(perm)
        s_in = sol.copy()
        step = 0
        idx = 0
        terminated = "cutoff"
        while time.monotonic() < deadline:
            p = perm[idx]
            root_iterations += 1
            improved = False
            if flip_feasible(inst, sol, p):
                stats = TreeStats(deadline=deadline)
                found = local_search(inst, gamma, cfg, s_in, sol, p, 0, {p},
                                     rng=rng, stats=stats)
                nodes_total += stats.nodes
                if found is not None:
                    sol = found
                    s_in = sol.copy()
                    improvements += 1
                    improved = True
                    time_to_best = time.monotonic() - start
            idx = (idx + 1) % n
            # stagnation = n consecutive non-improving passes; an improving
            # pass restarts the window so its root gets revisited
            step = 0 if improved else step + 1
            if step >= n:
                terminated = "stagnation"
                break

    report = RunReport(best_weight=sol.total_weight, best_cost=sol.total_cost,
                       time_to_best=time_to_best, root_iterations=root_iterations,
                       improvements=improvements, nodes_expanded=nodes_total,
                       terminated_by=terminated)
    return sol, report
