import random

from bmcp import (SearchConfig, build_neighbour_graph, exact_opt,
                  greedy_construct, make_instance, run_vdls)

from conftest import brute_force_opt, random_instance


def test_instance_x(instance_x):
    res = exact_opt(instance_x)
    assert res.weight == 16
    assert res.items == [2]
    assert res.exact


def test_two_item_fixture(two_item_instance):
    res = exact_opt(two_item_instance)
    assert res.weight == 9
    assert res.items == [1]


def test_all_items_infeasible():
    inst = make_instance(3, 2, 1, [2, 3, 4], [5, 5], [[0], [1], [0, 1]])
    res = exact_opt(inst)
    assert res.weight == 0
    assert res.items == []
    assert res.exact


def test_node_budget_marks_truncation(instance_x):
    res = exact_opt(instance_x, limit=2)
    assert not res.exact
    assert res.weight <= 16


def test_matches_enumeration():
    rng = random.Random(401)
    for _ in range(150):
        inst = random_instance(rng, n_max=12, m_max=12)
        res = exact_opt(inst)
        opt_w, _ = brute_force_opt(inst)
        assert res.exact
        assert res.weight == opt_w
        # the witness set must actually achieve the reported weight
        w = sum(inst.weight[j]
                for j in {e for i in res.items for e in inst.cover[i]})
        assert w == res.weight
        assert sum(inst.cost[i] for i in res.items) <= inst.budget


def test_dominates_heuristics():
    rng = random.Random(402)
    for _ in range(60):
        inst = random_instance(rng, n_max=9, m_max=9)
        opt = exact_opt(inst).weight
        assert opt >= greedy_construct(inst).total_weight >= 0
        gamma = build_neighbour_graph(inst)
        best, _ = run_vdls(inst, gamma, SearchConfig(cutoff_seconds=2.0, seed=7))
        assert opt >= best.total_weight
