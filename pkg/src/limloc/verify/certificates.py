"""Replayable lower-bound certificates.

Each certificate runs a mechanism on a small base instance, picks the agent
whose deviation the construction calls for, and reruns the mechanism on the
deviated instance. If either direction of that deviation is profitable the
mechanism is not strategy-proof and the certificate returns the witness.
Otherwise it returns the exact ratio measured on the deviated instance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from limloc.core import HALF, ONE, ZERO, FeasibleRegion, Instance, Placement, normalize_instance
from limloc.errors import InfeasibleMechanismOutput
from limloc.mechanisms import Mechanism, run
from limloc.objectives import Objective, distance_to_placement
from limloc.verify.families import min_sat_points
from limloc.verify.ratio import Ratio, RatioWitness, measure_ratio
from limloc.verify.strategyproof import SPWitness


class Theorem(enum.Enum):
    MAX_DIST_3 = "max-dist-3"
    UTIL_3 = "util-3"
    EGAL_UNBOUNDED = "egal-unbounded"
    SOC_SAT_UNBOUNDED = "soc-sat-unbounded"
    MIN_SAT_UNBOUNDED = "min-sat-unbounded"

    @classmethod
    def parse(cls, name: str) -> Theorem:
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(t.value for t in cls)
            raise ValueError(f"unknown theorem {name!r} (choose from {choices})") from None


@dataclass(frozen=True)
class SPViolation:
    witness: SPWitness


@dataclass(frozen=True)
class RatioAtLeast:
    ratio: Ratio
    witness: RatioWitness


@dataclass(frozen=True)
class CertificateResult:
    theorem: Theorem
    outcome: SPViolation | RatioAtLeast
    transcript: tuple[tuple[Instance, Placement], ...]

    def replay(self, mech: Mechanism) -> bool:
        return all(run(mech, inst) == placement for inst, placement in self.transcript)


# (feasible points, agents, objective) of the two-agent constructions
def _two_agent_setup(theorem: Theorem, eps: Fraction | None):
    if theorem is Theorem.EGAL_UNBOUNDED:
        return [ZERO, ONE], [Fraction(1, 4), Fraction(3, 4)], Objective.EGALITARIAN_WELFARE
    if eps is None:
        raise ValueError(f"{theorem.value} needs epsilon")
    eps = Fraction(eps)
    if not 0 < eps < HALF:
        raise ValueError(f"epsilon must lie in (0, 1/2), got {eps}")
    agents = [HALF - eps, HALF + eps]
    if theorem is Theorem.MAX_DIST_3:
        return [Fraction(1, 4), Fraction(3, 4)], agents, Objective.MAX_DISTANCE
    if theorem is Theorem.UTIL_3:
        return [ZERO, ONE], agents, Objective.UTILITARIAN_WELFARE
    return [ZERO, ONE], agents, Objective.SOCIAL_SATISFACTION


def _checked_run(mech: Mechanism, instance: Instance) -> Placement:
    placement = run(mech, instance)
    if not placement.feasible or not placement.is_within(instance.region):
        raise InfeasibleMechanismOutput(f"{mech.name} placed a facility outside the region: {placement}")
    return placement


def _deviation_step(
    theorem: Theorem,
    mech: Mechanism,
    base: Instance,
    base_placement: Placement,
    mover: int,
    target: Fraction,
    objective: Objective,
) -> CertificateResult:
    """Move agent ``mover`` of ``base`` to ``target``; check both directions; measure."""
    deviated = base.with_agent(mover, target)
    dev_placement = _checked_run(mech, deviated)
    transcript = ((base, base_placement), (deviated, dev_placement))

    true_loc = base.agents[mover]
    before = distance_to_placement(true_loc, base_placement)
    after = distance_to_placement(true_loc, dev_placement)
    if after < before:
        w = SPWitness(base, mover, true_loc, target, before, after)
        return CertificateResult(theorem, SPViolation(w), transcript)
    # the agent truly at ``target`` could instead report ``true_loc``
    back = deviated.agents.index(target)
    before = distance_to_placement(target, dev_placement)
    after = distance_to_placement(target, base_placement)
    if after < before:
        w = SPWitness(deviated, back, target, true_loc, before, after)
        return CertificateResult(theorem, SPViolation(w), transcript)

    witness = measure_ratio(mech, deviated, objective, f"{theorem.value}:deviated")
    return CertificateResult(theorem, RatioAtLeast(witness.ratio, witness), transcript)


def certify_lower_bound(
    theorem: Theorem | str,
    mech: Mechanism,
    epsilon: Fraction | None = None,
    k: int | None = None,
) -> CertificateResult:
    """Replay one lower-bound construction against a single-facility mechanism."""
    if isinstance(theorem, str):
        theorem = Theorem.parse(theorem)
    if mech.facilities != 1:
        raise ValueError("lower-bound certificates apply to single-facility mechanisms")
    if theorem is Theorem.MIN_SAT_UNBOUNDED:
        return _certify_min_sat(mech, k)

    points, agents, objective = _two_agent_setup(theorem, epsilon)
    left = points[0]
    base = normalize_instance(agents, FeasibleRegion.points(*points), 1)
    placement = _checked_run(mech, base)
    if placement[0] == left:
        # facility went left: the right agent pushes its report to 1
        return _deviation_step(theorem, mech, base, placement, base.n - 1, ONE, objective)
    return _deviation_step(theorem, mech, base, placement, 0, ZERO, objective)


def _certify_min_sat(mech: Mechanism, k: int | None) -> CertificateResult:
    if k is None:
        raise ValueError("min-sat-unbounded needs k")
    feasible, agents = min_sat_points(k)
    theorem = Theorem.MIN_SAT_UNBOUNDED
    objective = Objective.MIN_SATISFACTION
    base = normalize_instance(agents, FeasibleRegion.points(*feasible), 1)
    placement = _checked_run(mech, base)
    y = placement[0]
    if y == feasible[1]:
        return _deviation_step(theorem, mech, base, placement, 2, ONE, objective)
    if y == feasible[2]:
        return _deviation_step(theorem, mech, base, placement, 1, ZERO, objective)
    # outermost feasible points: the construction argues the ratio is already bad on the base instance
    witness = measure_ratio(mech, base, objective, f"{theorem.value}:base")
    return CertificateResult(theorem, RatioAtLeast(witness.ratio, witness), ((base, placement),))
