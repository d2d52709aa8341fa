"""Item neighbour graph and incidence statistics.

Two items are neighbours when they cover at least one common element.
The local search branches only into neighbours of the item it just
flipped, so the graph is built once per instance and shared read-only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance


@dataclass(frozen=True)
class NeighbourGraph:
    """gamma[i]: sorted items sharing >=1 covered element with item i."""

    gamma: list[list[int]]

    def __len__(self) -> int:
        return len(self.gamma)


@dataclass(frozen=True)
class InstanceStats:
    alpha: float       # realized incidence density
    sigma: float       # 1 - (1 - alpha^2)^m
    mean_gamma: float
    max_gamma: int


def build_neighbour_graph(inst: Instance) -> NeighbourGraph:
    """Pair covering items element by element; no all-pairs intersection."""
    sets: list[set[int]] = [set() for _ in range(inst.n)]
    for items in inst.covered_by:
        for a_idx, a in enumerate(items):
            sa = sets[a]
            for b in items[a_idx + 1:]:
                sa.add(b)
                sets[b].add(a)
    return NeighbourGraph(gamma=[sorted(s) for s in sets])


def instance_stats(inst: Instance, graph: NeighbourGraph | None = None) -> InstanceStats:
    """Density alpha, pair-overlap probability sigma, and gamma degree stats."""
    if inst.n * inst.m == 0:
        raise ValueError("empty instance")
    alpha = inst.edge_count / (inst.n * inst.m)
    sigma = 1.0 - (1.0 - alpha * alpha) ** inst.m
    if graph is None:
        graph = build_neighbour_graph(inst)
    degrees = [len(g) for g in graph.gamma]
    return InstanceStats(alpha=alpha, sigma=sigma,
                         mean_gamma=sum(degrees) / inst.n,
                         max_gamma=max(degrees))
