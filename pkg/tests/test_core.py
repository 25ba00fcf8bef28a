from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from limloc.core import (
    FeasibleRegion,
    Instance,
    Placement,
    TieBreak,
    contains,
    format_rational,
    nearest_feasible,
    normalize_instance,
    parse_rational,
)
from limloc.errors import (
    BadFacilityCount,
    CoordinateOutOfRange,
    EmptyAgents,
    EmptyRegion,
    InstanceSyntaxError,
    InvalidInterval,
)

from conftest import grid_rationals, pts, regions

L, R = TieBreak.LEFT, TieBreak.RIGHT


class TestRationals:
    @pytest.mark.parametrize("text, value", [("0", F(0)), ("1", F(1)), ("2/3", F(2, 3)), ("4/8", F(1, 2)), ("-1/2", F(-1, 2))])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("bad", ["0.5", "1/0", "", "a", "1/2/3", "1e3", " / 2"])
    def test_rejects(self, bad):
        with pytest.raises(InstanceSyntaxError):
            parse_rational(bad)

    def test_format(self):
        assert format_rational(F(6, 8)) == "3/4"
        assert format_rational(F(2)) == "2"

    @given(st.fractions())
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q
        assert format_rational(parse_rational(format_rational(q))) == format_rational(q)


class TestNormalize:
    def test_sorts_agents(self):
        inst = normalize_instance([F(1, 2), F(0), F(1)], FeasibleRegion.unit(), 1)
        assert inst.agents == (0, F(1, 2), 1)

    def test_merges_touching(self):
        region = FeasibleRegion.from_pairs([("0", "1/4"), ("1/4", "1")])
        assert region.intervals == ((0, 1),)
        assert normalize_instance([F(1, 4)], region).region.is_unit

    def test_merges_overlap_and_sorts(self):
        region = FeasibleRegion.from_pairs([("1/2", "3/4"), ("0", "0"), ("1/3", "2/3")])
        assert region.intervals == ((0, 0), (F(1, 3), F(3, 4)))

    def test_empty_region(self):
        with pytest.raises(EmptyRegion):
            FeasibleRegion.from_pairs([])

    def test_errors(self):
        with pytest.raises(EmptyAgents):
            normalize_instance([], FeasibleRegion.unit())
        with pytest.raises(CoordinateOutOfRange):
            normalize_instance([F(3, 2)], FeasibleRegion.unit())
        with pytest.raises(CoordinateOutOfRange):
            FeasibleRegion.from_pairs([("0", "2")])
        with pytest.raises(InvalidInterval):
            FeasibleRegion.from_pairs([("1/2", "0")])
        with pytest.raises(BadFacilityCount):
            normalize_instance([F(0)], FeasibleRegion.unit(), 3)

    def test_constructor_validates(self):
        with pytest.raises(InvalidInterval):
            FeasibleRegion(((F(0), F(1, 2)), (F(1, 2), F(1))))
        with pytest.raises(ValueError):
            Instance((F(1), F(0)), FeasibleRegion.unit())

    def test_str(self):
        assert str(pts("0", "2/3")) == "{0} u {2/3}"
        assert str(FeasibleRegion.from_pairs([("0", "1/4"), ("1/2", "1/2")])) == "[0, 1/4] u {1/2}"
        assert str(Placement.of("0", "1/2")) == "{0, 1/2}"


class TestContains:
    def test_examples(self):
        r = pts("0", "2/3")
        assert contains(r, F(2, 3))
        assert not contains(r, F(1, 3))
        assert contains(FeasibleRegion.unit(), F(1, 2))

    @given(regions(), grid_rationals())
    def test_matches_definition(self, region, p):
        assert contains(region, p) == any(lo <= p <= hi for lo, hi in region)


class TestNearestFeasible:
    def test_examples(self):
        assert nearest_feasible(pts("0", "2/3"), F(1, 4), L) == 0
        split = FeasibleRegion.from_pairs([("0", "1/4"), ("3/4", "1")])
        assert nearest_feasible(split, F(1, 2), L) == F(1, 4)
        assert nearest_feasible(split, F(1, 2), R) == F(3, 4)
        assert nearest_feasible(FeasibleRegion.unit(), F(1, 2), L) == F(1, 2)

    def test_outside_all_intervals(self):
        r = FeasibleRegion.from_pairs([("1/3", "1/2")])
        assert nearest_feasible(r, F(0)) == F(1, 3)
        assert nearest_feasible(r, F(1)) == F(1, 2)

    @given(regions(), grid_rationals(), st.sampled_from([L, R]))
    def test_idempotent(self, region, p, tie):
        y = nearest_feasible(region, p, tie)
        assert contains(region, y)
        assert nearest_feasible(region, y, tie) == y

    @given(regions(), grid_rationals(), st.sampled_from([L, R]))
    def test_optimal_by_enumeration(self, region, p, tie):
        y = nearest_feasible(region, p, tie)
        candidates = [q for q in region.endpoints()] + ([p] if contains(region, p) else [])
        best = min(abs(p - q) for q in candidates)
        assert abs(p - y) == best
        ties = sorted(q for q in candidates if abs(p - q) == best)
        assert y == (ties[0] if tie is L else ties[-1])

    @given(regions(), grid_rationals(), st.sampled_from([L, R]))
    def test_mirror_symmetry(self, region, p, tie):
        y = nearest_feasible(region, p, tie)
        assert nearest_feasible(region.mirrored(), 1 - p, tie.flipped()) == 1 - y


class TestInstance:
    def test_with_agent_resorts(self):
        inst = normalize_instance([F(0), F(1, 2)], FeasibleRegion.unit())
        assert inst.with_agent(0, F(1)).agents == (F(1, 2), 1)

    def test_mirrored(self):
        inst = normalize_instance([F(0), F(1, 4)], pts("0", "1/3"))
        m = inst.mirrored()
        assert m.agents == (F(3, 4), 1)
        assert m.region == pts("2/3", "1")
