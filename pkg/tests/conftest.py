"""Shared fixtures and independent reference computations.

The reference helpers here deliberately avoid the library's solver code
paths: subset values are recomputed from raw instance fields and optima
come from plain enumeration, so they can act as oracles for everything
else.
"""

from __future__ import annotations

import itertools
import random

import pytest

from bmcp import Instance, make_instance, parse_instance

INSTANCE_X_TEXT = """\
# canonical hand fixture
3 3 5
2 3 4
5 7 9
1 1
2 1 2
2 2 3
"""

# 5 elements, 6 items; realizes the neighbour lists
# {2,6} {1,3,6} {2,4} {3} {6} {1,2,5} (1-based)
FIG_COVERS = [[0], [0, 1], [1, 2], [2, 4], [3], [0, 3]]
FIG_GAMMA = [[1, 5], [0, 2, 5], [1, 3], [2], [5], [0, 1, 4]]


@pytest.fixture
def instance_x() -> Instance:
    return parse_instance(INSTANCE_X_TEXT)


@pytest.fixture
def fig_instance() -> Instance:
    return make_instance(6, 5, 10, [1] * 6, [1] * 5, FIG_COVERS)


@pytest.fixture
def two_item_instance() -> Instance:
    # one cheap light item vs one expensive heavy item; the accumulation
    # heuristic picks the first, the best single item is the second
    return make_instance(2, 2, 10, [1, 10], [1, 9], [[0], [1]])


def subset_value(inst: Instance, items) -> tuple[int, int]:
    """(W, C) of an item set straight from the raw fields."""
    covered = set()
    cost = 0
    for i in items:
        covered.update(inst.cover[i])
        cost += inst.cost[i]
    return sum(inst.weight[j] for j in covered), cost


def brute_force_opt(inst: Instance) -> tuple[int, list[int]]:
    """Optimum by full enumeration; only for small n."""
    best_w, best_items = 0, []
    for r in range(inst.n + 1):
        for combo in itertools.combinations(range(inst.n), r):
            w, c = subset_value(inst, combo)
            if c <= inst.budget and w > best_w:
                best_w, best_items = w, list(combo)
    return best_w, best_items


def random_instance(rng: random.Random, n_max: int = 10, m_max: int = 10,
                    value_max: int = 15, allow_zero: bool = True) -> Instance:
    """Small random instance with Bernoulli incidence for property tests."""
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    density = rng.uniform(0.1, 0.7)
    low = 0 if allow_zero and rng.random() < 0.3 else 1
    cost = [rng.randint(low, value_max) for _ in range(n)]
    weight = [rng.randint(low, value_max) for _ in range(m)]
    cover = [[j for j in range(m) if rng.random() < density] for _ in range(n)]
    budget = rng.randint(0, max(1, int(0.6 * sum(cost))))
    return make_instance(n, m, budget, cost, weight, cover)


def random_feasible_items(rng: random.Random, inst: Instance) -> set[int]:
    """Random feasible subset built by greedy random insertion."""
    items: set[int] = set()
    cost = 0
    for i in rng.sample(range(inst.n), inst.n):
        if rng.random() < 0.5 and cost + inst.cost[i] <= inst.budget:
            items.add(i)
            cost += inst.cost[i]
    return items
