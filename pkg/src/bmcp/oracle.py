"""Exact optimum for small instances via depth-first branch and bound.

Ground truth for tests: independent of the greedy and local-search code
paths. The bound at a node adds the weight of every still-uncovered
element reachable through any undecided item, ignoring costs, so it never
underestimates. Intended for n up to ~30.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance


@dataclass(frozen=True)
class OracleResult:
    weight: int
    items: list[int]
    exact: bool      # False when the node budget ran out first
    nodes: int


def exact_opt(inst: Instance, limit: int = 2_000_000) -> OracleResult:
    """Best feasible W and one witness set; exact unless `limit` is hit."""
    weight = inst.weight
    cost = inst.cost
    budget = inst.budget

    masks = []
    for elems in inst.cover:
        mask = 0
        for j in elems:
            mask |= 1 << j
        masks.append(mask)

    def mask_weight(mask: int) -> int:
        w = 0
        while mask:
            low = mask & -mask
            w += weight[low.bit_length() - 1]
            mask ^= low
        return w

    # Cheap value-per-cost ordering tightens the bound early on.
    order = sorted(range(inst.n),
                   key=lambda i: mask_weight(masks[i]) / (cost[i] + 0.5),
                   reverse=True)
    suffix = [0] * (inst.n + 1)
    for idx in range(inst.n - 1, -1, -1):
        suffix[idx] = suffix[idx + 1] | masks[order[idx]]

    best_w = 0
    best_items: list[int] = []
    chosen: list[int] = []
    nodes = 0
    truncated = False

    def dfs(idx: int, covered: int, w: int, c: int) -> None:
        nonlocal best_w, best_items, nodes, truncated
        nodes += 1
        if nodes > limit:
            truncated = True
            return
        if w > best_w:
            best_w = w
            best_items = chosen.copy()
        if idx == inst.n:
            return
        if w + mask_weight(suffix[idx] & ~covered) <= best_w:
            return
        i = order[idx]
        if c + cost[i] <= budget:
            chosen.append(i)
            dfs(idx + 1, covered | masks[i], w + mask_weight(masks[i] & ~covered),
                c + cost[i])
            chosen.pop()
            if truncated:
                return
        dfs(idx + 1, covered, w, c)

    dfs(0, 0, 0, 0)
    return OracleResult(weight=best_w, items=sorted(best_items),
                        exact=not truncated, nodes=nodes)
