import math
import random

from bmcp import evaluate, greedy_construct, make_instance

from conftest import brute_force_opt, random_instance, subset_value

GREEDY_FLOOR = (1 - 1 / math.e) / 2


def test_best_single_item_beats_accumulation(two_item_instance):
    # the ratio loop picks the cheap item; the single heavy item wins
    sol = greedy_construct(two_item_instance)
    assert sorted(sol.selected) == [1]
    assert (sol.total_weight, sol.total_cost) == (9, 10)


def test_instance_x_reaches_optimum(instance_x):
    sol = greedy_construct(instance_x)
    assert sorted(sol.selected) == [2]
    assert sol.total_weight == 16


def test_nothing_fits_returns_empty():
    inst = make_instance(2, 2, 3, [4, 5], [10, 10], [[0], [1]])
    sol = greedy_construct(inst)
    assert sol.selected == set()
    assert sol.total_weight == 0


def test_zero_cost_item_with_positive_gain_always_added():
    # item 2 is free and covers an element nobody else covers; the
    # accumulation loop can never stop while it is unselected
    inst = make_instance(3, 3, 4, [4, 0, 3], [9, 5, 6], [[0], [1], [2]])
    sol = greedy_construct(inst)
    assert 1 in sol.selected


def test_feasible_and_dominates_best_single():
    rng = random.Random(301)
    for _ in range(300):
        inst = random_instance(rng)
        sol = greedy_construct(inst)
        w, c = evaluate(inst, sol.selected)
        assert (w, c) == (sol.total_weight, sol.total_cost)
        assert c <= inst.budget
        best_single = max((subset_value(inst, [i])[0]
                           for i in range(inst.n) if inst.cost[i] <= inst.budget),
                          default=0)
        assert w >= best_single


def test_approximation_floor_against_enumeration():
    rng = random.Random(302)
    for _ in range(200):
        inst = random_instance(rng)
        opt, _ = brute_force_opt(inst)
        sol = greedy_construct(inst)
        assert sol.total_weight >= GREEDY_FLOOR * opt - 1e-9


def test_deterministic():
    rng = random.Random(303)
    for _ in range(50):
        inst = random_instance(rng)
        assert greedy_construct(inst) == greedy_construct(inst)
