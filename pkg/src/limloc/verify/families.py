"""Parametric worst-case instance families.

Each family is a concrete instance built from ``eps`` (a small positive
rational), ``n`` (agent count, where the family scales) and ``k`` (the
min-satisfaction construction parameter). ``targets`` lists the objectives
the construction is aimed at; ``diverges`` marks families whose exact ratio
grows without bound as ``eps -> 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from limloc.core import HALF, ONE, ZERO, FeasibleRegion, Instance, normalize_instance
from limloc.objectives import Objective

O = Objective


@dataclass(frozen=True)
class Family:
    label: str
    instance: Instance
    targets: frozenset[Objective]
    diverges: bool = False

    def anywhere(self) -> Family:
        """Same agents with the facility allowed anywhere in [0, 1]."""
        return Family(self.label, self.instance.with_region(FeasibleRegion.unit()), self.targets, False)


def _fam(label, agents, points, m, targets, diverges=False) -> Family:
    inst = normalize_instance(agents, FeasibleRegion.points(*points), m)
    return Family(label, inst, frozenset(targets), diverges)


def min_sat_points(k: int) -> tuple[list[Fraction], list[Fraction]]:
    """Feasible points and agents of the k-parameterized four-agent construction."""
    if not isinstance(k, int) or k < 5:
        raise ValueError(f"k must be an integer >= 5, got {k!r}")
    q, q2 = Fraction(1, k), Fraction(1, k * k)
    feasible = [HALF - q, HALF - q + q2, HALF + q - q2, HALF + q]
    agents = [HALF - 2 * q, HALF - q + q2, HALF + q - q2, HALF + 2 * q]
    return feasible, agents


def _check_eps(eps: Fraction) -> Fraction:
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 4):
        raise ValueError(f"family epsilon must lie in (0, 1/4), got {eps}")
    return eps


def single_facility_families(eps: Fraction, n: int = 4, k: int = 10) -> list[Family]:
    e = _check_eps(eps)
    half_k = max(1, n // 2)
    third = Fraction(1, 3)
    fams = [
        _fam("max-dist:three-agents", [third - e, third - e, ONE], [ZERO, Fraction(2, 3)], 1, [O.MAX_DISTANCE]),
        _fam("max-dist:deviated-pair", [HALF - e, ONE], [Fraction(1, 4), Fraction(3, 4)], 1, [O.MAX_DISTANCE]),
        _fam(f"util:half-and-one:k={half_k}", [HALF] * half_k + [ONE] * half_k, [ZERO, ONE], 1,
             [O.UTILITARIAN_WELFARE, O.TOTAL_DISTANCE]),
        _fam(f"util:half-and-one-eps:k={half_k}", [HALF - e] * half_k + [ONE] * half_k, [ZERO, ONE], 1,
             [O.UTILITARIAN_WELFARE, O.TOTAL_DISTANCE]),
        _fam("util:deviated-pair", [HALF - e, ONE], [ZERO, ONE], 1, [O.UTILITARIAN_WELFARE, O.TOTAL_DISTANCE]),
        _fam("egal:two-at-zero", [ZERO, ZERO, ONE], [ZERO, HALF, ONE], 1,
             [O.EGALITARIAN_WELFARE, O.MIN_SATISFACTION]),
        _fam("egal:deviated-pair", [Fraction(1, 4), ONE], [ZERO, ONE], 1, [O.EGALITARIAN_WELFARE]),
        _fam("soc-sat:two-at-half", [HALF, HALF, ONE], [ZERO, ONE], 1, [O.SOCIAL_SATISFACTION]),
        _fam("soc-sat:two-near-half", [HALF - e, HALF - e, ONE], [ZERO, ONE], 1, [O.SOCIAL_SATISFACTION], True),
        _fam("soc-sat:deviated-pair", [HALF - e, ONE], [ZERO, ONE], 1, [O.SOCIAL_SATISFACTION], True),
    ]
    feasible, agents = min_sat_points(k)
    fams.append(_fam(f"min-sat:four-agents:k={k}", agents, feasible, 1, [O.MIN_SATISFACTION]))
    fams.append(_fam(f"min-sat:deviated:k={k}", [agents[0], agents[1], agents[3], ONE], feasible, 1,
                     [O.MIN_SATISFACTION]))
    return fams


def two_facility_families(eps: Fraction, n: int = 4) -> list[Family]:
    e = _check_eps(eps)
    if n < 2:
        raise ValueError("two-facility families need n >= 2")
    q = Fraction(1, 4)
    mid = [HALF] * (n - 2)
    grid3 = [ZERO, HALF, ONE]
    return [
        _fam(f"total-dist:quarter-half-one:n={n}", [q - e, *mid, ONE], grid3, 2, [O.TOTAL_DISTANCE]),
        _fam("max-dist:quarters", [q - e, HALF, 3 * q + e], grid3, 2, [O.MAX_DISTANCE]),
        _fam(f"util:ends-and-halves:n={n}", [ZERO, *mid, ONE], grid3, 2, [O.UTILITARIAN_WELFARE]),
        _fam("egal:quarter-region", [ZERO, HALF, ONE], [ZERO, q, ONE], 2, [O.EGALITARIAN_WELFARE]),
        _fam("egal:left-gap", [q - e, HALF, ONE], grid3, 2, [O.EGALITARIAN_WELFARE]),
        _fam(f"soc-sat:quarters-and-halves:n={n}", [q - e, *mid, 3 * q + e], grid3, 2, [O.SOCIAL_SATISFACTION]),
        _fam("min-sat:three-points", grid3, grid3, 2, [O.MIN_SATISFACTION]),
    ]


def families_for(facilities: int, eps: Fraction, n: int = 4, k: int = 10) -> list[Family]:
    if facilities == 1:
        return single_facility_families(eps, n, k)
    return two_facility_families(eps, n)
