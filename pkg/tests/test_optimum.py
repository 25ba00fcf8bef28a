from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from limloc.core import Placement, contains
from limloc.mechanisms import EndPointStar, run
from limloc.objectives import OBJECTIVES, Objective, evaluate
from limloc.optimum import candidate_points, grid_optimal, grid_points, optimal, optimal_single, optimal_two

from conftest import inst, instances, pts

O = Objective
THREE = inst(["1/4", "1/4", "1"], pts("0", "2/3"))
GRID3 = pts("0", "1/2", "1")


class TestCandidates:
    def test_examples(self):
        assert candidate_points(THREE, O.MAX_DISTANCE) == [0, F(2, 3)]
        assert F(1, 2) in candidate_points(inst(["0", "1"], [(0, 1)]), O.MAX_DISTANCE)
        assert F(1, 2) in candidate_points(inst(["0", "1"], [(0, 1)]), O.MIN_SATISFACTION)

    def test_min_sat_crossing_off_center(self):
        # agents 0 (dmax 1) and 3/4 (dmax 3/4): 1 - y = 1 - (3/4 - y)/(3/4) at y = 3/7
        assert F(3, 7) in candidate_points(inst(["0", "3/4"], [(0, 1)]), O.MIN_SATISFACTION)

    @given(instances())
    def test_all_feasible_and_sorted(self, i):
        for o in OBJECTIVES:
            c = candidate_points(i, o)
            assert c == sorted(set(c))
            assert all(contains(i.region, p) for p in c)
            assert set(i.region.endpoints()) <= set(c)


class TestSingle:
    def test_examples(self):
        r = optimal_single(THREE, O.MAX_DISTANCE)
        assert (r.placement, r.value) == (Placement.of("2/3"), F(5, 12))
        r = optimal_single(inst(["1/2", "1/2", "1", "1"], pts("0", "1")), O.UTILITARIAN_WELFARE)
        assert (r.placement, r.value) == (Placement.of(1), 3)
        r = optimal_single(inst(["0", "0", "1"], GRID3), O.EGALITARIAN_WELFARE)
        assert (r.placement, r.value) == (Placement.of("1/2"), F(1, 2))

    def test_ties_toward_smallest(self):
        r = optimal_single(inst(["0", "1"], [(0, 1)]), O.TOTAL_DISTANCE)
        assert r.placement == Placement.of(0) and r.value == 1

    @given(instances())
    def test_util_total_identity(self, i):
        u = optimal_single(i, O.UTILITARIAN_WELFARE)
        t = optimal_single(i, O.TOTAL_DISTANCE)
        assert u.value == i.n - t.value
        assert u.placement == t.placement

    @given(instances())
    def test_value_and_bounds(self, i):
        for o in OBJECTIVES:
            r = optimal_single(i, o)
            assert r.placement.is_within(i.region)
            assert r.value == evaluate(i, r.placement, o)
            cap = i.n if o in (O.TOTAL_DISTANCE, O.UTILITARIAN_WELFARE, O.SOCIAL_SATISFACTION) else 1
            assert 0 <= r.value <= cap

    @given(instances())
    def test_never_worse_than_grid(self, i):
        for o in OBJECTIVES:
            assert not o.better(grid_optimal(i, o, 7).value, optimal_single(i, o).value)


class TestTwo:
    def test_examples(self):
        r = optimal_two(inst(["0", "1"], [(0, 1)], 2), O.TOTAL_DISTANCE)
        assert (r.placement, r.value) == (Placement.of(0, 1), 0)
        r = optimal_two(inst(["0", "1/2", "1"], pts("0", "1/4", "1"), 2), O.EGALITARIAN_WELFARE)
        assert (r.placement, r.value) == (Placement.of("1/4", 1), F(3, 4))

    def test_soc_sat_beats_endpoint(self):
        i = inst(["1/5", "1/2", "1/2", "1/2", "4/5"], GRID3, 2)
        r = optimal_two(i, O.SOCIAL_SATISFACTION)
        # {0, 1/2} and {1/2, 1} tie by symmetry; the smaller placement wins
        assert r.placement == Placement.of(0, "1/2")
        h_out = 1 - F(1, 5) / F(4, 5)  # agent at 1/5 served at 0
        h_far = 1 - F(3, 10) / F(4, 5)  # agent at 4/5 served at 1/2
        assert r.value == 3 + h_out + h_far
        assert r.value == grid_optimal(i, O.SOCIAL_SATISFACTION, 200).value
        assert r.value > evaluate(i, run(EndPointStar(), i), O.SOCIAL_SATISFACTION)

    @settings(max_examples=60)
    @given(instances(m=2))
    def test_not_worse_than_duplicated_single(self, i):
        one = i.with_region(i.region)
        for o in OBJECTIVES:
            y = optimal_single(type(i)(i.agents, i.region, 1), o)
            two = optimal_two(i, o)
            assert not o.better(evaluate(one, (y.placement[0],) * 2, o), two.value)
            assert two.value == evaluate(i, two.placement, o)
            assert two.placement.is_within(i.region)


class TestGrid:
    def test_examples(self):
        assert grid_optimal(THREE, O.MAX_DISTANCE, 12) == optimal_single(THREE, O.MAX_DISTANCE)
        assert grid_optimal(inst(["0", "1"], [(0, 1)]), O.TOTAL_DISTANCE, 2).value == 1
        r = grid_optimal(inst(["0", "1/2", "1"], GRID3, 2), O.MIN_SATISFACTION, 100)
        assert r.value == F(1, 2) and F(1, 2) in r.placement

    def test_grid_points_include_endpoints(self):
        region = inst(["0"], [("1/7", "2/7"), ("1/2", "1/2")]).region
        assert grid_points(region, 4) == [F(1, 7), F(1, 4), F(2, 7), F(1, 2)]

    def test_bad_resolution(self):
        with pytest.raises(ValueError):
            grid_optimal(THREE, O.MAX_DISTANCE, 0)

    def test_dispatch(self):
        assert optimal(THREE, O.MAX_DISTANCE) == optimal_single(THREE, O.MAX_DISTANCE)
