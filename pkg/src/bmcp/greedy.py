"""Greedy construction: density accumulation vs best single item.

Builds two candidates and keeps the better one. The first repeatedly adds
the feasible item with the highest marginal weight per unit cost until no
item fits the remaining budget; the second is the single feasible item of
maximum weight, which wins on instances where one expensive item beats any
cheap accumulation.
"""

from __future__ import annotations

from .core import Instance, Solution, empty_solution, flip_in_place, gain


def _ratio_better(g_new: int, c_new: int, i_new: int,
                  g_best: int, c_best: int, i_best: int) -> bool:
    # Exact ratio comparison by cross-multiplication; a zero-cost item with
    # positive gain compares as +inf. Ties: larger gain, then smaller index.
    lhs, rhs = g_new * c_best, g_best * c_new
    if lhs != rhs:
        return lhs > rhs
    if g_new != g_best:
        return g_new > g_best
    return i_new < i_best


def greedy_construct(inst: Instance) -> Solution:
    """Deterministic feasible initial solution.

    Never worse than the best single feasible item; returns the empty
    solution when nothing fits the budget.
    """
    acc = empty_solution(inst)
    while True:
        best = -1
        g_best = c_best = 0
        for i in range(inst.n):
            if i in acc.selected or acc.total_cost + inst.cost[i] > inst.budget:
                continue
            g = gain(inst, acc, i)
            if best < 0 or _ratio_better(g, inst.cost[i], i, g_best, c_best, best):
                best, g_best, c_best = i, g, inst.cost[i]
        if best < 0:
            break
        flip_in_place(inst, acc, best)

    single = -1
    w_single = -1
    for i in range(inst.n):
        if inst.cost[i] > inst.budget:
            continue
        w = sum(inst.weight[j] for j in inst.cover[i])
        if w > w_single:
            single, w_single = i, w
    if single >= 0 and acc.total_weight < w_single:
        sol = empty_solution(inst)
        flip_in_place(inst, sol, single)
        return sol
    return acc
