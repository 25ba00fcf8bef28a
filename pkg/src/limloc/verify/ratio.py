"""Exact approximation ratios.

A ratio is a :class:`~fractions.Fraction` or ``math.inf``. Both compare
correctly with each other, so ``max`` over a mix of them just works.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from limloc.core import Instance, Placement, format_rational
from limloc.errors import NegativeValue
from limloc.mechanisms import Mechanism, run
from limloc.objectives import Objective, evaluate
from limloc.optimum import OptResult, optimal

Ratio = Union[Fraction, float]
INF = math.inf


def approximation_ratio(mech_value: Fraction, opt_value: Fraction, objective: Objective) -> Ratio:
    """``mech / opt`` for distances, ``opt / mech`` for welfare and satisfaction.

    A zero denominator with a positive numerator gives ``inf``; 0/0 counts as 1.
    """
    if mech_value < 0 or opt_value < 0:
        raise NegativeValue(f"objective values must be non-negative, got mech={mech_value}, opt={opt_value}")
    num, den = (mech_value, opt_value) if objective.minimize else (opt_value, mech_value)
    if den == 0:
        return Fraction(1) if num == 0 else INF
    return Fraction(num) / Fraction(den)


def format_ratio(r: Ratio) -> str:
    return "inf" if r == INF else format_rational(r)


@dataclass(frozen=True)
class RatioWitness:
    instance: Instance
    objective: Objective
    mechanism_placement: Placement
    mechanism_value: Fraction
    optimal: OptResult
    ratio: Ratio
    label: str = ""

    def recompute(self) -> bool:
        """True if every derived field matches a fresh evaluation."""
        mv = evaluate(self.instance, self.mechanism_placement, self.objective)
        ov = evaluate(self.instance, self.optimal.placement, self.objective)
        return (
            mv == self.mechanism_value
            and ov == self.optimal.value
            and approximation_ratio(mv, ov, self.objective) == self.ratio
        )

    def sort_key(self):
        """Worse ratio first, then the lexicographically smallest instance."""
        return (-self.ratio, self.instance.sort_key())


def measure_ratio(mech: Mechanism, instance: Instance, objective: Objective, label: str = "") -> RatioWitness:
    placement = run(mech, instance)
    value = evaluate(instance, placement, objective)
    opt = optimal(instance, objective)
    return RatioWitness(
        instance=instance,
        objective=objective,
        mechanism_placement=placement,
        mechanism_value=value,
        optimal=opt,
        ratio=approximation_ratio(value, opt.value, objective),
        label=label,
    )
