"""Strategy-proofness checking by structured misreport enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from limloc.core import ONE, ZERO, Instance
from limloc.mechanisms import Mechanism, run
from limloc.objectives import distance_to_placement


@dataclass(frozen=True)
class SPWitness:
    """Agent ``agent_index`` (0-based, in sorted order of ``instance``) gains by misreporting."""

    instance: Instance
    agent_index: int
    true_location: Fraction
    misreport: Fraction
    distance_before: Fraction
    distance_after: Fraction

    def replay(self, mech: Mechanism) -> bool:
        truthful = run(mech, self.instance)
        deviated = run(mech, self.instance.with_agent(self.agent_index, self.misreport))
        before = distance_to_placement(self.true_location, truthful)
        after = distance_to_placement(self.true_location, deviated)
        return (
            self.instance.agents[self.agent_index] == self.true_location
            and before == self.distance_before
            and after == self.distance_after
            and after < before
        )


def misreport_candidates(instance: Instance, extra: Iterable[Fraction] = ()) -> list[Fraction]:
    """Interval endpoints, agent locations, 0, 1 and gap midpoints, ascending."""
    pts = {ZERO, ONE}
    pts.update(instance.region.endpoints())
    pts.update(instance.agents)
    pts.update((a + b) / 2 for a, b in instance.region.gaps())
    pts.update(Fraction(r) for r in extra)
    return sorted(pts)


def check_strategy_proof(mech: Mechanism, instance: Instance, extra_misreports: Iterable[Fraction] = ()) -> SPWitness | None:
    """First profitable misreport (agents ascending, misreports ascending), or None."""
    truthful = run(mech, instance)
    candidates = misreport_candidates(instance, extra_misreports)
    for i, x in enumerate(instance.agents):
        before = distance_to_placement(x, truthful)
        if before == 0:
            continue
        for r in candidates:
            if r == x:
                continue
            after = distance_to_placement(x, run(mech, instance.with_agent(i, r)))
            if after < before:
                return SPWitness(instance, i, x, r, before, after)
    return None
