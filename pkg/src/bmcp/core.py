"""Instance and solution model for budgeted maximum coverage.

An instance has n items with nonnegative integer costs, m elements with
nonnegative integer weights, an item->element incidence, and a budget L.
A solution is a set of items; its value W is the total weight of elements
covered by at least one selected item, its cost C the total cost of the
selected items. Indices are 1-based in files and 0-based everywhere else.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


class InstanceFormatError(ValueError):
    """Malformed instance data; carries the offending line number if known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Instance:
    """Immutable problem instance; safe to share across threads."""

    n: int
    m: int
    budget: int
    cost: list[int]
    weight: list[int]
    cover: list[list[int]]       # cover[i]: sorted elements covered by item i
    covered_by: list[list[int]]  # covered_by[j]: sorted items covering element j

    @property
    def edge_count(self) -> int:
        return sum(len(c) for c in self.cover)


def make_instance(n: int, m: int, budget: int,
                  cost: Sequence[int], weight: Sequence[int],
                  cover: Sequence[Iterable[int]]) -> Instance:
    """Validate 0-based incidence data and build both incidence directions."""
    if n < 0 or m < 0:
        raise InstanceFormatError(f"negative dimensions n={n} m={m}")
    if budget < 0:
        raise InstanceFormatError(f"negative budget {budget}")
    if len(cost) != n:
        raise InstanceFormatError(f"expected {n} costs, got {len(cost)}")
    if len(weight) != m:
        raise InstanceFormatError(f"expected {m} weights, got {len(weight)}")
    if len(cover) != n:
        raise InstanceFormatError(f"expected {n} cover lists, got {len(cover)}")
    for i, c in enumerate(cost):
        if c < 0:
            raise InstanceFormatError(f"negative cost {c} for item {i + 1}")
    for j, w in enumerate(weight):
        if w < 0:
            raise InstanceFormatError(f"negative weight {w} for element {j + 1}")
    cover_lists = []
    covered_by: list[list[int]] = [[] for _ in range(m)]
    for i, elems in enumerate(cover):
        elems = list(elems)
        for j in elems:
            if not 0 <= j < m:
                raise InstanceFormatError(
                    f"element index {j + 1} out of range for item {i + 1}")
        if len(set(elems)) != len(elems):
            raise InstanceFormatError(f"duplicate element in cover of item {i + 1}")
        elems.sort()
        cover_lists.append(elems)
        for j in elems:
            covered_by[j].append(i)
    return Instance(n=n, m=m, budget=budget, cost=list(cost),
                    weight=list(weight), cover=cover_lists, covered_by=covered_by)


def parse_instance(text: str) -> Instance:
    """Parse the canonical whitespace-separated instance format.

    Layout: line 1 "n m L"; line 2 the n item costs; line 3 the m element
    weights; then n lines "k e_1 ... e_k" listing the elements covered by
    each item, 1-based. Lines starting with '#' and blank lines are skipped.
    """
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    pos = 0

    def next_line(what: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 1
            raise InstanceFormatError(f"truncated file, missing {what}", line=last)
        no, ln = lines[pos]
        pos += 1
        return no, ln.split()

    def ints(tokens: list[str], no: int) -> list[int]:
        try:
            return [int(t) for t in tokens]
        except ValueError:
            raise InstanceFormatError("non-integer token", line=no) from None

    no, header = next_line("header")
    if len(header) != 3:
        raise InstanceFormatError("header must be 'n m L'", line=no)
    n, m, budget = ints(header, no)
    if n < 1 or m < 1:
        raise InstanceFormatError("n and m must be >= 1", line=no)
    if budget < 0:
        raise InstanceFormatError(f"negative budget {budget}", line=no)

    no, toks = next_line("cost line")
    cost = ints(toks, no)
    if len(cost) != n:
        raise InstanceFormatError(f"expected {n} costs, got {len(cost)}", line=no)
    if any(c < 0 for c in cost):
        raise InstanceFormatError("negative cost", line=no)

    no, toks = next_line("weight line")
    weight = ints(toks, no)
    if len(weight) != m:
        raise InstanceFormatError(f"expected {m} weights, got {len(weight)}", line=no)
    if any(w < 0 for w in weight):
        raise InstanceFormatError("negative weight", line=no)

    cover = []
    for i in range(n):
        no, toks = next_line(f"cover line for item {i + 1}")
        vals = ints(toks, no)
        if not vals:
            raise InstanceFormatError("empty cover line", line=no)
        k, elems = vals[0], vals[1:]
        if k < 0 or len(elems) != k:
            raise InstanceFormatError(
                f"cover line announces {k} elements, lists {len(elems)}", line=no)
        seen = set()
        for e in elems:
            if not 1 <= e <= m:
                raise InstanceFormatError(f"element index {e} out of range", line=no)
            if e in seen:
                raise InstanceFormatError(f"duplicate element {e}", line=no)
            seen.add(e)
        cover.append([e - 1 for e in elems])

    if pos != len(lines):
        raise InstanceFormatError("trailing data after cover lines", line=lines[pos][0])
    return make_instance(n, m, budget, cost, weight, cover)


def parse_instance_json(text: str) -> Instance:
    """Parse the JSON mirror: n, m, budget, costs, weights, cover (1-based)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON: {exc}") from None
    try:
        n, m, budget = int(obj["n"]), int(obj["m"]), int(obj["budget"])
        cost = [int(c) for c in obj["costs"]]
        weight = [int(w) for w in obj["weights"]]
        cover_1 = [[int(e) for e in row] for row in obj["cover"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceFormatError(f"bad JSON instance: {exc}") from None
    for i, row in enumerate(cover_1):
        for e in row:
            if not 1 <= e <= m:
                raise InstanceFormatError(
                    f"element index {e} out of range for item {i + 1}")
    return make_instance(n, m, budget, cost, weight,
                         [[e - 1 for e in row] for row in cover_1])


def format_instance(inst: Instance) -> str:
    """Render the canonical text format (1-based, cover lists ascending)."""
    out = [f"{inst.n} {inst.m} {inst.budget}",
           " ".join(str(c) for c in inst.cost),
           " ".join(str(w) for w in inst.weight)]
    for elems in inst.cover:
        out.append(" ".join([str(len(elems))] + [str(e + 1) for e in elems]))
    return "\n".join(out) + "\n"


def format_instance_json(inst: Instance) -> str:
    return json.dumps({
        "n": inst.n, "m": inst.m, "budget": inst.budget,
        "costs": inst.cost, "weights": inst.weight,
        "cover": [[e + 1 for e in elems] for elems in inst.cover],
    })


def load_instance(path) -> Instance:
    """Read an instance file; '.json' selects the JSON mirror format."""
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    if str(path).endswith(".json"):
        return parse_instance_json(text)
    return parse_instance(text)


def save_instance(inst: Instance, path) -> None:
    text = format_instance_json(inst) if str(path).endswith(".json") \
        else format_instance(inst)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


class Solution:
    """Selected item set with cached coverage counts, W and C.

    cov_count[j] is the number of selected items covering element j, so a
    flip touches only the elements covered by the flipped item. Owned by a
    single search; copy() before sharing.
    """

    __slots__ = ("selected", "cov_count", "total_weight", "total_cost")

    def __init__(self, selected: set[int], cov_count: list[int],
                 total_weight: int, total_cost: int):
        self.selected = selected
        self.cov_count = cov_count
        self.total_weight = total_weight
        self.total_cost = total_cost

    def copy(self) -> "Solution":
        return Solution(set(self.selected), self.cov_count.copy(),
                        self.total_weight, self.total_cost)

    def items(self) -> list[int]:
        return sorted(self.selected)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Solution):
            return NotImplemented
        return (self.selected == other.selected
                and self.cov_count == other.cov_count
                and self.total_weight == other.total_weight
                and self.total_cost == other.total_cost)

    def __repr__(self) -> str:
        return (f"Solution(items={self.items()}, W={self.total_weight}, "
                f"C={self.total_cost})")


def empty_solution(inst: Instance) -> Solution:
    return Solution(set(), [0] * inst.m, 0, 0)


def evaluate(inst: Instance, items: Iterable[int]) -> tuple[int, int]:
    """From-scratch (W, C) of an item set; the oracle for incremental state.

    Does not check the budget: C may exceed L.
    """
    items = set(items)
    for i in items:
        if not 0 <= i < inst.n:
            raise IndexError(f"item index {i} out of range")
    covered = [False] * inst.m
    total_cost = 0
    for i in items:
        total_cost += inst.cost[i]
        for j in inst.cover[i]:
            covered[j] = True
    total_weight = sum(w for j, w in enumerate(inst.weight) if covered[j])
    return total_weight, total_cost


def solution_from_items(inst: Instance, items: Iterable[int]) -> Solution:
    """Build a Solution with caches populated from scratch."""
    sol = empty_solution(inst)
    for i in set(items):
        flip_in_place(inst, sol, i)
    return sol


def flip_in_place(inst: Instance, sol: Solution, i: int) -> None:
    """Toggle item i, updating caches by touching only cover[i]."""
    cov_count = sol.cov_count
    weight = inst.weight
    dw = 0
    if i in sol.selected:
        sol.selected.discard(i)
        sol.total_cost -= inst.cost[i]
        for j in inst.cover[i]:
            c = cov_count[j] - 1
            cov_count[j] = c
            if c == 0:
                dw -= weight[j]
    else:
        sol.selected.add(i)
        sol.total_cost += inst.cost[i]
        for j in inst.cover[i]:
            c = cov_count[j]
            cov_count[j] = c + 1
            if c == 0:
                dw += weight[j]
    sol.total_weight += dw


def flip(inst: Instance, sol: Solution, i: int) -> Solution:
    """Return a copy of sol with item i toggled; sol is left untouched."""
    if not 0 <= i < inst.n:
        raise IndexError(f"item index {i} out of range")
    out = sol.copy()
    flip_in_place(inst, out, i)
    return out


def gain(inst: Instance, sol: Solution, i: int) -> int:
    """Objective change W(flip(sol, i)) - W(sol), without flipping.

    Adding i gains the weights of its elements that are currently uncovered;
    removing i loses the weights of its elements covered only by i.
    """
    cov_count = sol.cov_count
    weight = inst.weight
    g = 0
    if i in sol.selected:
        for j in inst.cover[i]:
            if cov_count[j] == 1:
                g -= weight[j]
    else:
        for j in inst.cover[i]:
            if cov_count[j] == 0:
                g += weight[j]
    return g


def flip_feasible(inst: Instance, sol: Solution, i: int) -> bool:
    """Removal is always feasible; addition must keep C within the budget."""
    if i in sol.selected:
        return True
    return sol.total_cost + inst.cost[i] <= inst.budget
