import random

import pytest

from bmcp import (InstanceFormatError, empty_solution, evaluate, flip,
                  flip_feasible, flip_in_place, format_instance,
                  format_instance_json, gain, parse_instance,
                  parse_instance_json, solution_from_items)

from conftest import random_instance, subset_value


class TestParse:
    def test_canonical_fixture(self, instance_x):
        x = instance_x
        assert (x.n, x.m, x.budget) == (3, 3, 5)
        assert x.cost == [2, 3, 4]
        assert x.weight == [5, 7, 9]
        assert x.cover == [[0], [0, 1], [1, 2]]
        assert x.covered_by == [[0, 1], [1, 2], [2]]

    def test_degenerate_uncovering_item(self):
        inst = parse_instance("1 1 0\n0\n0\n0\n")
        assert (inst.n, inst.m, inst.budget) == (1, 1, 0)
        assert inst.cover == [[]]
        assert inst.covered_by == [[]]

    def test_element_out_of_range(self):
        text = "3 3 5\n2 3 4\n5 7 9\n1 1\n2 1 2\n2 2 4\n"
        with pytest.raises(InstanceFormatError, match="out of range") as exc:
            parse_instance(text)
        assert exc.value.line == 6

    @pytest.mark.parametrize("text,msg,line", [
        ("3 3 5\n2 3 4\n5 7 9\n1 1\n2 1 1\n2 2 3\n", "duplicate element", 5),
        ("3 3 5\n2 -3 4\n5 7 9\n1 1\n2 1 2\n2 2 3\n", "negative cost", 2),
        ("3 3 5\n2 3 4\n5 7 -9\n1 1\n2 1 2\n2 2 3\n", "negative weight", 3),
        ("3 3 -5\n2 3 4\n5 7 9\n1 1\n2 1 2\n2 2 3\n", "negative budget", 1),
        ("3 3 5\n2 3 4\n5 7 9\n1 1\n2 1 2\n", "truncated file", 5),
        ("3 3 5\n2 3 4\n5 7 9\n1 1\n2 1 2\n2 2 3\n1 1\n", "trailing data", 7),
        ("3 3\n2 3 4\n5 7 9\n1 1\n2 1 2\n2 2 3\n", "header", 1),
        ("3 3 5\n2 3\n5 7 9\n1 1\n2 1 2\n2 2 3\n", "expected 3 costs", 2),
        ("3 3 5\n2 3 4\n5 7 9\n2 1\n2 1 2\n2 2 3\n", "announces 2", 4),
        ("3 3 5\n2 x 4\n5 7 9\n1 1\n2 1 2\n2 2 3\n", "non-integer", 2),
        ("0 3 5\n\n5 7 9\n", ">= 1", 1),
    ])
    def test_rejects_malformed(self, text, msg, line):
        with pytest.raises(InstanceFormatError, match=msg) as exc:
            parse_instance(text)
        assert exc.value.line == line

    def test_comments_and_blank_lines_skipped(self, instance_x):
        text = "# c\n\n3 3 5\n# c\n2 3 4\n5 7 9\n\n1 1\n2 1 2\n2 2 3\n# tail\n"
        assert parse_instance(text) == instance_x

    def test_unsorted_cover_accepted(self):
        inst = parse_instance("1 3 5\n2\n5 7 9\n2 3 1\n")
        assert inst.cover == [[0, 2]]

    def test_text_round_trip(self, instance_x):
        assert parse_instance(format_instance(instance_x)) == instance_x

    def test_json_round_trip(self, instance_x):
        assert parse_instance_json(format_instance_json(instance_x)) == instance_x

    def test_json_rejects_garbage(self):
        with pytest.raises(InstanceFormatError, match="invalid JSON"):
            parse_instance_json("{nope")
        with pytest.raises(InstanceFormatError, match="bad JSON"):
            parse_instance_json('{"n": 1}')
        with pytest.raises(InstanceFormatError, match="out of range"):
            parse_instance_json('{"n":1,"m":1,"budget":0,"costs":[0],'
                                '"weights":[0],"cover":[[2]]}')


class TestEvaluate:
    def test_empty_set(self, instance_x):
        assert evaluate(instance_x, []) == (0, 0)

    def test_single_item(self, instance_x):
        assert evaluate(instance_x, [1]) == (12, 3)

    def test_does_not_enforce_budget(self, instance_x):
        # C=6 exceeds L=5; evaluate reports it anyway
        assert evaluate(instance_x, [0, 2]) == (21, 6)

    def test_index_error(self, instance_x):
        with pytest.raises(IndexError):
            evaluate(instance_x, [3])


class TestFlip:
    def test_add(self, instance_x):
        sol = solution_from_items(instance_x, [1])
        out = flip(instance_x, sol, 2)
        assert sorted(out.selected) == [1, 2]
        assert (out.total_weight, out.total_cost) == (21, 7)
        # input untouched
        assert sorted(sol.selected) == [1]

    def test_add_from_empty(self, instance_x):
        out = flip(instance_x, empty_solution(instance_x), 0)
        assert sorted(out.selected) == [0]
        assert (out.total_weight, out.total_cost) == (5, 2)

    def test_double_flip_is_identity(self, instance_x):
        sol = solution_from_items(instance_x, [0, 1])
        again = flip(instance_x, flip(instance_x, sol, 2), 2)
        assert again == sol

    def test_index_error(self, instance_x):
        with pytest.raises(IndexError):
            flip(instance_x, empty_solution(instance_x), -4)


class TestGain:
    def test_add_gain(self, instance_x):
        assert gain(instance_x, solution_from_items(instance_x, [1]), 2) == 9

    def test_remove_gain(self, instance_x):
        assert gain(instance_x, solution_from_items(instance_x, [1, 2]), 1) == -5

    def test_empty_base_nonnegative(self, instance_x):
        sol = empty_solution(instance_x)
        for i in range(instance_x.n):
            g = gain(instance_x, sol, i)
            assert g >= 0
            assert g == subset_value(instance_x, [i])[0]


class TestFlipFeasible:
    def test_addition_over_budget(self, instance_x):
        assert not flip_feasible(instance_x, solution_from_items(instance_x, [1]), 2)

    def test_removal_always_feasible(self, instance_x):
        assert flip_feasible(instance_x, solution_from_items(instance_x, [1]), 1)

    def test_addition_within_budget(self, instance_x):
        assert flip_feasible(instance_x, empty_solution(instance_x), 2)


class TestProperties:
    def test_flip_involution(self):
        rng = random.Random(101)
        for _ in range(300):
            inst = random_instance(rng)
            sol = solution_from_items(inst, [i for i in range(inst.n)
                                             if rng.random() < 0.5])
            i = rng.randrange(inst.n)
            assert flip(inst, flip(inst, sol, i), i) == sol

    def test_incremental_matches_scratch_after_flip_sequence(self):
        rng = random.Random(102)
        for _ in range(50):
            inst = random_instance(rng)
            sol = empty_solution(inst)
            for _ in range(1000):
                flip_in_place(inst, sol, rng.randrange(inst.n))
            assert (sol.total_weight, sol.total_cost) == evaluate(inst, sol.selected)
            assert sol.cov_count == [
                sum(1 for i in sol.selected if j in inst.cover[i])
                for j in range(inst.m)]

    def test_gain_matches_flip_delta(self):
        rng = random.Random(103)
        for _ in range(300):
            inst = random_instance(rng)
            sol = solution_from_items(inst, [i for i in range(inst.n)
                                             if rng.random() < 0.5])
            i = rng.randrange(inst.n)
            assert gain(inst, sol, i) == flip(inst, sol, i).total_weight - sol.total_weight

    def test_gain_antisymmetry(self):
        rng = random.Random(104)
        for _ in range(300):
            inst = random_instance(rng)
            sol = solution_from_items(inst, [i for i in range(inst.n)
                                             if rng.random() < 0.5])
            i = rng.randrange(inst.n)
            assert gain(inst, flip(inst, sol, i), i) == -gain(inst, sol, i)

    def test_monotone_coverage(self):
        rng = random.Random(105)
        for _ in range(300):
            inst = random_instance(rng)
            sol = solution_from_items(inst, [i for i in range(inst.n)
                                             if rng.random() < 0.5])
            i = rng.randrange(inst.n)
            flipped = flip(inst, sol, i)
            if i in sol.selected:  # removal never increases W
                assert flipped.total_weight <= sol.total_weight
            else:
                assert flipped.total_weight >= sol.total_weight
