"""The six performance measures, evaluated exactly.

Agents are served by their nearest facility. With ``d`` that distance and
``dmax = max(x, 1 - x)`` the farthest an agent at ``x`` could ever travel,
utility is ``1 - d`` and happiness is ``1 - d / dmax``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from limloc.core import ONE, Instance, Placement
from limloc.errors import LimlocError


class Objective(enum.Enum):
    TOTAL_DISTANCE = "total-dist"
    MAX_DISTANCE = "max-dist"
    UTILITARIAN_WELFARE = "util"
    EGALITARIAN_WELFARE = "egal"
    SOCIAL_SATISFACTION = "soc-sat"
    MIN_SATISFACTION = "min-sat"

    @property
    def minimize(self) -> bool:
        return self in (Objective.TOTAL_DISTANCE, Objective.MAX_DISTANCE)

    @property
    def maximize(self) -> bool:
        return not self.minimize

    @property
    def cli_name(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> Objective:
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(o.value for o in cls)
            raise UnknownObjective(f"unknown objective {name!r} (choose from {choices})") from None

    def better(self, a: Fraction, b: Fraction) -> bool:
        """True if value ``a`` is strictly better than ``b``."""
        return a < b if self.minimize else a > b


# canonical column order of the summary tables
OBJECTIVES = tuple(Objective)


class UnknownObjective(LimlocError, ValueError):
    pass


@dataclass(frozen=True)
class AgentScore:
    distance: Fraction
    utility: Fraction
    happiness: Fraction
    dmax: Fraction


def distance_to_placement(x: Fraction, placement: Iterable[Fraction]) -> Fraction:
    return min(abs(x - y) for y in placement)


def max_travel(x: Fraction) -> Fraction:
    return max(x, ONE - x)


def score_agent(x: Fraction, placement: Iterable[Fraction]) -> AgentScore:
    d = distance_to_placement(x, placement)
    dmax = max_travel(x)
    return AgentScore(distance=d, utility=ONE - d, happiness=ONE - d / dmax, dmax=dmax)


def evaluate(instance: Instance, placement: Placement | Iterable[Fraction], objective: Objective) -> Fraction:
    """Exact value of ``objective``. Infeasible placements are accepted on purpose."""
    locations = tuple(placement)
    return evaluate_agents(instance.agents, locations, objective)


def evaluate_agents(agents: Iterable[Fraction], locations: tuple[Fraction, ...], objective: Objective) -> Fraction:
    agents = tuple(agents)
    dists = [distance_to_placement(x, locations) for x in agents]
    if objective is Objective.TOTAL_DISTANCE:
        return sum(dists, Fraction(0))
    if objective is Objective.MAX_DISTANCE:
        return max(dists)
    if objective is Objective.UTILITARIAN_WELFARE:
        return sum((ONE - d for d in dists), Fraction(0))
    if objective is Objective.EGALITARIAN_WELFARE:
        return ONE - max(dists)
    happiness = [ONE - d / max_travel(x) for x, d in zip(agents, dists)]
    if objective is Objective.SOCIAL_SATISFACTION:
        return sum(happiness, Fraction(0))
    return min(happiness)
