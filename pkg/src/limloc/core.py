"""Exact domain model: rational coordinates, feasible regions and instances.

Every coordinate is a :class:`fractions.Fraction` in ``[0, 1]``. Floating point
is never used here because the interesting facility-location instances hinge
on exact ties (an agent exactly halfway between two feasible points).
"""

from __future__ import annotations

import bisect
import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from limloc.errors import (
    BadFacilityCount,
    CoordinateOutOfRange,
    EmptyAgents,
    EmptyRegion,
    InstanceSyntaxError,
    InvalidInterval,
)

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` exactly. Decimal and exponent forms are rejected."""
    if not isinstance(text, str):
        raise InstanceSyntaxError(f"expected a rational string, got {text!r}")
    m = _RATIONAL_RE.fullmatch(text.strip())
    if m is None:
        raise InstanceSyntaxError(f"not a rational literal (use 'a/b' or 'a'): {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise InstanceSyntaxError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_coordinate(value: Fraction | int | str, what: str = "coordinate") -> Fraction:
    q = parse_rational(value) if isinstance(value, str) else Fraction(value)
    if not ZERO <= q <= ONE:
        raise CoordinateOutOfRange(f"{what} {format_rational(q)} outside [0, 1]")
    return q


class TieBreak(enum.Enum):
    """Which of two equidistant feasible points a projection returns."""

    LEFT = "left"
    RIGHT = "right"

    def flipped(self) -> TieBreak:
        return TieBreak.RIGHT if self is TieBreak.LEFT else TieBreak.LEFT


@dataclass(frozen=True)
class FeasibleRegion:
    """Sorted union of disjoint closed sub-intervals of [0, 1].

    Degenerate intervals ``(a, a)`` stand for isolated feasible points. Use
    :meth:`from_pairs` to build one from arbitrary input; the constructor only
    validates an already-normalized interval tuple.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if not self.intervals:
            raise EmptyRegion("feasible region has no intervals")
        prev_hi = None
        for lo, hi in self.intervals:
            if not (ZERO <= lo <= ONE and ZERO <= hi <= ONE):
                raise CoordinateOutOfRange(f"interval [{lo}, {hi}] outside [0, 1]")
            if lo > hi:
                raise InvalidInterval(f"interval [{lo}, {hi}] has lo > hi")
            if prev_hi is not None and lo <= prev_hi:
                raise InvalidInterval("intervals must be disjoint, strictly increasing and non-touching")
            prev_hi = hi

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[Fraction | int | str]]) -> FeasibleRegion:
        """Sort, validate and merge touching or overlapping intervals."""
        raw = []
        for pair in pairs:
            if len(pair) != 2:
                raise InvalidInterval(f"interval must be a [lo, hi] pair, got {pair!r}")
            lo = as_coordinate(pair[0], "interval endpoint")
            hi = as_coordinate(pair[1], "interval endpoint")
            if lo > hi:
                raise InvalidInterval(f"interval [{format_rational(lo)}, {format_rational(hi)}] has lo > hi")
            raw.append((lo, hi))
        if not raw:
            raise EmptyRegion("feasible region has no intervals")
        raw.sort()
        merged = [raw[0]]
        for lo, hi in raw[1:]:
            last_lo, last_hi = merged[-1]
            if lo <= last_hi:
                merged[-1] = (last_lo, max(last_hi, hi))
            else:
                merged.append((lo, hi))
        return cls(tuple(merged))

    @classmethod
    def points(cls, *pts: Fraction | int | str) -> FeasibleRegion:
        """Region made only of isolated feasible points."""
        return cls.from_pairs((p, p) for p in pts)

    @classmethod
    def unit(cls) -> FeasibleRegion:
        return cls(((ZERO, ONE),))

    @property
    def is_unit(self) -> bool:
        return self.intervals == ((ZERO, ONE),)

    def endpoints(self) -> list[Fraction]:
        out = []
        for lo, hi in self.intervals:
            out.append(lo)
            if hi != lo:
                out.append(hi)
        return out

    def gaps(self) -> list[tuple[Fraction, Fraction]]:
        """Open infeasible gaps strictly between consecutive intervals."""
        return [(a[1], b[0]) for a, b in zip(self.intervals, self.intervals[1:])]

    def leftmost(self) -> Fraction:
        return self.intervals[0][0]

    def mirrored(self) -> FeasibleRegion:
        return FeasibleRegion(tuple((ONE - hi, ONE - lo) for lo, hi in reversed(self.intervals)))

    def __iter__(self) -> Iterator[tuple[Fraction, Fraction]]:
        return iter(self.intervals)

    def __str__(self) -> str:
        return " u ".join(
            f"{{{format_rational(lo)}}}" if lo == hi else f"[{format_rational(lo)}, {format_rational(hi)}]"
            for lo, hi in self.intervals
        )


def contains(region: FeasibleRegion, p: Fraction) -> bool:
    # index of the last interval whose lo <= p
    k = bisect.bisect_right(region.intervals, (p, ONE + 1)) - 1
    return k >= 0 and p <= region.intervals[k][1]


def nearest_feasible(region: FeasibleRegion, p: Fraction, tie: TieBreak = TieBreak.LEFT) -> Fraction:
    """Project ``p`` onto the region; equidistant candidates are resolved by ``tie``."""
    ivs = region.intervals
    k = bisect.bisect_right(ivs, (p, ONE + 1)) - 1
    if k >= 0 and p <= ivs[k][1]:
        return p
    if k < 0:
        return ivs[0][0]
    if k == len(ivs) - 1:
        return ivs[-1][1]
    left, right = ivs[k][1], ivs[k + 1][0]
    dl, dr = p - left, right - p
    if dl < dr:
        return left
    if dr < dl:
        return right
    return left if tie is TieBreak.LEFT else right


@dataclass(frozen=True)
class Instance:
    """Sorted agent locations, a feasible region and a facility count (1 or 2)."""

    agents: tuple[Fraction, ...]
    region: FeasibleRegion
    facilities: int = 1

    def __post_init__(self):
        if not self.agents:
            raise EmptyAgents("instance needs at least one agent")
        if self.facilities not in (1, 2):
            raise BadFacilityCount(f"facility count must be 1 or 2, got {self.facilities!r}")
        for x in self.agents:
            if not ZERO <= x <= ONE:
                raise CoordinateOutOfRange(f"agent {format_rational(x)} outside [0, 1]")
        if any(a > b for a, b in zip(self.agents, self.agents[1:])):
            raise ValueError("agents must be sorted; use normalize_instance")

    @property
    def n(self) -> int:
        return len(self.agents)

    def with_agent(self, index: int, location: Fraction) -> Instance:
        """Instance where agent ``index`` reports ``location`` instead (re-sorted)."""
        agents = list(self.agents)
        agents[index] = location
        return normalize_instance(agents, self.region, self.facilities)

    def with_region(self, region: FeasibleRegion) -> Instance:
        return Instance(self.agents, region, self.facilities)

    def mirrored(self) -> Instance:
        return Instance(tuple(ONE - x for x in reversed(self.agents)), self.region.mirrored(), self.facilities)

    def sort_key(self):
        return (self.facilities, self.agents, self.region.intervals)


def normalize_instance(
    raw_agents: Iterable[Fraction | int | str],
    region: FeasibleRegion | Iterable[Sequence],
    m: int = 1,
) -> Instance:
    """Validate and sort raw input into an :class:`Instance`."""
    agents = [as_coordinate(x, "agent") for x in raw_agents]
    if not agents:
        raise EmptyAgents("instance needs at least one agent")
    if not isinstance(region, FeasibleRegion):
        region = FeasibleRegion.from_pairs(region)
    if isinstance(m, bool) or m not in (1, 2):
        raise BadFacilityCount(f"facility count must be 1 or 2, got {m!r}")
    return Instance(tuple(sorted(agents)), region, m)


@dataclass(frozen=True)
class Placement:
    """Sorted facility locations.

    ``feasible`` is False only for outputs of oracle mechanisms that ignore the
    region; everything the starred mechanisms return is feasible.
    """

    locations: tuple[Fraction, ...]
    feasible: bool = True

    @classmethod
    def of(cls, *locations: Fraction | int | str, feasible: bool = True) -> Placement:
        return cls(tuple(sorted(as_coordinate(y, "facility") for y in locations)), feasible)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.locations)

    def __len__(self) -> int:
        return len(self.locations)

    def __getitem__(self, i: int) -> Fraction:
        return self.locations[i]

    def is_within(self, region: FeasibleRegion) -> bool:
        return all(contains(region, y) for y in self.locations)

    def __str__(self) -> str:
        return "{" + ", ".join(format_rational(y) for y in self.locations) + "}"
