"""Seeded random instance generators.

Two families. `uniform` scatters floor(density*n*m) element-item edges
uniformly with replacement over the whole incidence matrix, so duplicates
collapse and the realized density lands a little under the nominal one.
`grouped` repeats `repeats` times: shuffle items and elements, split each
into `groups` contiguous groups, and scatter floor(density*n_l*m_l) edges
inside each aligned group pair. The union over repeats hides a block
structure that is invisible in the flat incidence. Costs and weights are
uniform integers from the configured inclusive ranges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Instance, make_instance

FAMILIES = ("uniform", "grouped")


@dataclass(frozen=True)
class GenParams:
    n: int
    m: int
    budget: int
    family: str
    density: float
    groups: int = 25
    repeats: int = 3
    cost_range: tuple[int, int] = (1, 100)
    weight_range: tuple[int, int] = (1, 100)
    seed: int = 0

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("zero dimensions")
        if self.budget < 0:
            raise ValueError("negative budget")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if not 0.0 < self.density <= 1.0:
            raise ValueError("density must be in (0, 1]")
        for lo, hi in (self.cost_range, self.weight_range):
            if lo < 0 or hi < lo:
                raise ValueError(f"bad range {lo}:{hi}")
        if self.family == "grouped":
            if not 1 <= self.groups <= min(self.n, self.m):
                raise ValueError("groups must be in [1, min(n, m)]")
            if self.repeats < 1:
                raise ValueError("repeats must be >= 1")


def instance_name(p: GenParams) -> str:
    """Conventional file-stem: bmcp_<n>_<m>_<density>_<budget>."""
    return f"bmcp_{p.n}_{p.m}_{p.density:g}_{p.budget}"


def _draw_count(density: float, rows: int, cols: int) -> int:
    # floor, nudged so exact integer products survive float rounding
    return int(density * rows * cols + 1e-9)


def _build(p: GenParams, elems: np.ndarray, items: np.ndarray,
           rng: np.random.Generator) -> Instance:
    cost = rng.integers(p.cost_range[0], p.cost_range[1] + 1, p.n).tolist()
    weight = rng.integers(p.weight_range[0], p.weight_range[1] + 1, p.m).tolist()
    keys = np.unique(items.astype(np.int64) * p.m + elems.astype(np.int64))
    cover: list[list[int]] = [[] for _ in range(p.n)]
    for key in keys.tolist():
        cover[key // p.m].append(key % p.m)
    return make_instance(p.n, p.m, p.budget, cost, weight, cover)


def _group_sizes(total: int, groups: int) -> list[int]:
    base, extra = divmod(total, groups)
    return [base + 1 if l < extra else base for l in range(groups)]


def gen_uniform(p: GenParams) -> Instance:
    """Flat family; deterministic under p.seed."""
    if p.family != "uniform":
        raise ValueError("gen_uniform needs family='uniform'")
    rng = np.random.default_rng(p.seed)
    draws = _draw_count(p.density, p.n, p.m)
    elems = rng.integers(0, p.m, draws)
    items = rng.integers(0, p.n, draws)
    return _build(p, elems, items, rng)


def gen_grouped(p: GenParams, return_partitions: bool = False):
    """Block-structured family; deterministic under p.seed.

    With return_partitions=True also returns, per repeat, the pair of
    arrays mapping each item and each element to its group id under that
    repeat's partition (edges drawn in a repeat join equal group ids).
    """
    if p.family != "grouped":
        raise ValueError("gen_grouped needs family='grouped'")
    rng = np.random.default_rng(p.seed)
    all_elems = []
    all_items = []
    partitions = []
    item_sizes = _group_sizes(p.n, p.groups)
    elem_sizes = _group_sizes(p.m, p.groups)
    for _ in range(p.repeats):
        item_perm = rng.permutation(p.n)
        elem_perm = rng.permutation(p.m)
        item_group = np.empty(p.n, dtype=np.int64)
        elem_group = np.empty(p.m, dtype=np.int64)
        i0 = j0 = 0
        for l in range(p.groups):
            n_l, m_l = item_sizes[l], elem_sizes[l]
            block_items = item_perm[i0:i0 + n_l]
            block_elems = elem_perm[j0:j0 + m_l]
            item_group[block_items] = l
            elem_group[block_elems] = l
            draws = _draw_count(p.density, n_l, m_l)
            all_items.append(block_items[rng.integers(0, n_l, draws)])
            all_elems.append(block_elems[rng.integers(0, m_l, draws)])
            i0 += n_l
            j0 += m_l
        partitions.append((item_group, elem_group))
    elems = np.concatenate(all_elems) if all_elems else np.empty(0, dtype=np.int64)
    items = np.concatenate(all_items) if all_items else np.empty(0, dtype=np.int64)
    inst = _build(p, elems, items, rng)
    if return_partitions:
        return inst, partitions
    return inst


def generate(p: GenParams) -> Instance:
    """Dispatch on p.family."""
    return gen_uniform(p) if p.family == "uniform" else gen_grouped(p)
