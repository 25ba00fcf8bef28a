"""Strategy-proof facility location mechanisms.

Single facility: generalized medians over agents plus ``n - 1`` phantom
values, optionally projected onto the feasible region (the "starred"
variants). Two facilities: EndPoint*, which projects the two extreme agents
inward.

Every mechanism object exposes ``facilities`` (its arity), ``name`` (the CLI
spelling) and ``place(instance) -> Placement``. Use :func:`run` for checked
dispatch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, ClassVar, Sequence

from limloc.core import (
    HALF,
    ONE,
    ZERO,
    Instance,
    Placement,
    TieBreak,
    as_coordinate,
    contains,
    format_rational,
    nearest_feasible,
    parse_rational,
)
from limloc.errors import ArityMismatch, EmptyList, InfeasibleMechanismOutput, LimlocError


class ProfileKind(enum.Enum):
    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"
    MEDIAN = "median"
    MID_OR_NEAREST = "midornearest"
    CUSTOM = "custom"


@dataclass(frozen=True)
class PhantomProfile:
    kind: ProfileKind
    values: tuple[Fraction, ...] = ()

    @classmethod
    def custom(cls, values: Sequence[Fraction | int | str]) -> PhantomProfile:
        return cls(ProfileKind.CUSTOM, tuple(as_coordinate(v, "phantom") for v in values))

    def expand(self, n: int) -> list[Fraction]:
        """The ``n - 1`` phantom values for ``n`` agents."""
        k = self.kind
        if k is ProfileKind.LEFTMOST:
            return [ZERO] * (n - 1)
        if k is ProfileKind.RIGHTMOST:
            return [ONE] * (n - 1)
        if k is ProfileKind.MEDIAN:
            return [ZERO] * (n // 2) + [ONE] * (n - 1 - n // 2)
        if k is ProfileKind.MID_OR_NEAREST:
            return [HALF] * (n - 1)
        if len(self.values) != n - 1:
            raise ArityMismatch(f"custom phantom profile has {len(self.values)} values, need {n - 1} for {n} agents")
        return list(self.values)

    @property
    def label(self) -> tuple[str, str | None]:
        if self.kind is ProfileKind.CUSTOM:
            return "genmedian", ",".join(format_rational(v) for v in self.values)
        return self.kind.value, None


LEFTMOST = PhantomProfile(ProfileKind.LEFTMOST)
RIGHTMOST = PhantomProfile(ProfileKind.RIGHTMOST)
MEDIAN = PhantomProfile(ProfileKind.MEDIAN)
MID_OR_NEAREST = PhantomProfile(ProfileKind.MID_OR_NEAREST)


def median_of(values: Sequence[Fraction]) -> Fraction:
    """Lower median: the element at 1-based sorted position ceil(p/2)."""
    if not values:
        raise EmptyList("median of an empty list")
    ordered = sorted(values)
    return ordered[(len(ordered) + 1) // 2 - 1]


def gen_median(instance: Instance, profile: PhantomProfile = MEDIAN) -> Fraction:
    return median_of(list(instance.agents) + profile.expand(instance.n))


def run_single_star(instance: Instance, profile: PhantomProfile = MEDIAN, tie: TieBreak = TieBreak.LEFT) -> Placement:
    _require_facilities(instance, 1)
    y = nearest_feasible(instance.region, gen_median(instance, profile), tie)
    return Placement((y,))


def run_endpoint_star(instance: Instance) -> Placement:
    # inward tie-breaking is part of the mechanism's definition
    _require_facilities(instance, 2)
    left = nearest_feasible(instance.region, instance.agents[0], TieBreak.RIGHT)
    right = nearest_feasible(instance.region, instance.agents[-1], TieBreak.LEFT)
    return Placement(tuple(sorted((left, right))))


def _require_facilities(instance: Instance, m: int) -> None:
    if instance.facilities != m:
        raise ArityMismatch(f"mechanism locates {m} facilities, instance asks for {instance.facilities}")


@dataclass(frozen=True)
class GenMedianStar:
    profile: PhantomProfile = MEDIAN
    tie: TieBreak = TieBreak.LEFT
    facilities: ClassVar[int] = 1

    @property
    def name(self) -> str:
        base, params = self.profile.label
        name = f"{base}*:{params}" if params is not None else f"{base}*"
        return name if self.tie is TieBreak.LEFT else f"{name}[right]"

    def place(self, instance: Instance) -> Placement:
        return run_single_star(instance, self.profile, self.tie)


@dataclass(frozen=True)
class EndPointStar:
    facilities: ClassVar[int] = 2
    name: ClassVar[str] = "endpoint*"

    def place(self, instance: Instance) -> Placement:
        return run_endpoint_star(instance)


@dataclass(frozen=True)
class UnrestrictedGenMedian:
    """Generalized median that ignores the region; an oracle baseline only."""

    profile: PhantomProfile = MEDIAN
    facilities: ClassVar[int] = 1

    @property
    def name(self) -> str:
        base, params = self.profile.label
        return f"{base}:{params}" if params is not None else base

    def place(self, instance: Instance) -> Placement:
        _require_facilities(instance, 1)
        y = gen_median(instance, self.profile)
        return Placement((y,), feasible=contains(instance.region, y))


@dataclass(frozen=True)
class CustomMechanism:
    """Wraps an arbitrary ``Instance -> Placement`` (or sequence of locations) callable."""

    fn: Callable[[Instance], Placement | Sequence[Fraction]] = field(compare=False)
    facilities: int = 1
    name: str = "custom"

    def place(self, instance: Instance) -> Placement:
        out = self.fn(instance)
        if not isinstance(out, Placement):
            out = Placement(tuple(sorted(Fraction(y) for y in out)))
        return out


Mechanism = GenMedianStar | EndPointStar | UnrestrictedGenMedian | CustomMechanism


def run(mech: Mechanism, instance: Instance) -> Placement:
    """Checked dispatch: arity, placement length, and feasibility of restricted outputs."""
    if mech.facilities != instance.facilities:
        raise ArityMismatch(f"{mech.name} locates {mech.facilities} facilities, instance asks for {instance.facilities}")
    placement = mech.place(instance)
    if len(placement) != instance.facilities:
        raise ArityMismatch(f"{mech.name} returned {len(placement)} locations for m={instance.facilities}")
    if isinstance(mech, UnrestrictedGenMedian):
        return placement
    if not placement.is_within(instance.region):
        raise InfeasibleMechanismOutput(f"{mech.name} placed a facility outside the region: {placement}")
    return placement


def mean_projection(tie: TieBreak = TieBreak.LEFT) -> CustomMechanism:
    """Nearest feasible point to the agents' mean. Deliberately manipulable."""

    def place(instance: Instance) -> Placement:
        mean = sum(instance.agents, ZERO) / instance.n
        return Placement((nearest_feasible(instance.region, mean, tie),))

    return CustomMechanism(place, 1, "mean*")


class UnknownMechanism(LimlocError, ValueError):
    pass


def parse_mechanism(name: str, tie: TieBreak = TieBreak.LEFT) -> Mechanism:
    """Resolve a CLI mechanism name such as ``median*`` or ``genmedian*:0,1/2``."""
    key = name.strip().lower()
    starred = {
        "median*": MEDIAN,
        "leftmost*": LEFTMOST,
        "rightmost*": RIGHTMOST,
        "midornearest*": MID_OR_NEAREST,
    }
    if key in starred:
        return GenMedianStar(starred[key], tie)
    if key.startswith("genmedian*:"):
        body = key.split(":", 1)[1]
        values = [parse_rational(v) for v in body.split(",")] if body else []
        return GenMedianStar(PhantomProfile.custom(values), tie)
    if key == "endpoint*":
        return EndPointStar()
    if key == "median":
        return UnrestrictedGenMedian(MEDIAN)
    if key == "mean*":
        return mean_projection(tie)
    raise UnknownMechanism(f"unknown mechanism {name!r}")
