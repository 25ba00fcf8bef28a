"""Adversarial search for bad approximation ratios.

Sweeps the structured families first, then samples random instances on a
rational grid. The result is deterministic for a given configuration: ties
on the ratio go to the lexicographically smallest instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from limloc.core import FeasibleRegion, Instance, normalize_instance
from limloc.mechanisms import Mechanism
from limloc.objectives import Objective
from limloc.verify.families import families_for
from limloc.verify.ratio import RatioWitness, measure_ratio

REGION_KINDS = ("points", "intervals", "mixed")


@dataclass(frozen=True)
class SearchConfig:
    agent_counts: tuple[int, ...] = (1, 2, 3, 4, 5, 6)
    coordinate_denominator: int = 24
    region_menu: tuple[str | FeasibleRegion, ...] = REGION_KINDS
    budget: int = 200
    seed: int = 0
    include_families: bool = True


def random_region(rng: random.Random, denominator: int, kind: str = "mixed", max_intervals: int = 4) -> FeasibleRegion:
    """Up to ``max_intervals`` disjoint intervals with endpoints on ``1/denominator``."""
    if kind not in REGION_KINDS:
        raise ValueError(f"unknown region kind {kind!r}")
    k = rng.randint(1, min(max_intervals, (denominator + 1) // 2))
    cuts = sorted(rng.sample(range(denominator + 1), 2 * k))
    pairs = []
    for lo, hi in zip(cuts[::2], cuts[1::2]):
        if kind == "points" or (kind == "mixed" and rng.random() < 0.5):
            hi = lo
        pairs.append((Fraction(lo, denominator), Fraction(hi, denominator)))
    return FeasibleRegion.from_pairs(pairs)


def random_instance(
    rng: random.Random,
    n: int,
    denominator: int,
    facilities: int,
    region: str | FeasibleRegion = "mixed",
) -> Instance:
    agents = [Fraction(rng.randint(0, denominator), denominator) for _ in range(n)]
    if not isinstance(region, FeasibleRegion):
        region = random_region(rng, denominator, region)
    return normalize_instance(agents, region, facilities)


def random_instances(
    count: int,
    seed: int,
    agent_counts: Sequence[int],
    denominator: int,
    facilities: int,
    region_menu: Sequence[str | FeasibleRegion] = REGION_KINDS,
) -> list[Instance]:
    rng = random.Random(seed)
    return [
        random_instance(rng, rng.choice(list(agent_counts)), denominator, facilities, rng.choice(list(region_menu)))
        for _ in range(count)
    ]


def _worse(a: RatioWitness | None, b: RatioWitness) -> RatioWitness:
    if a is None or b.sort_key() < a.sort_key():
        return b
    return a


def adversarial_search(mech: Mechanism, objective: Objective, config: SearchConfig = SearchConfig()) -> RatioWitness:
    if config.budget < 1:
        raise ValueError("budget must be >= 1")
    m = mech.facilities
    worst: RatioWitness | None = None
    if config.include_families:
        denom = config.coordinate_denominator
        eps = Fraction(1, max(denom, 5))
        k = max(denom, 5)
        counts = set(config.agent_counts)
        seen = set()
        for n in sorted(counts):
            if m == 2 and n < 2:
                continue
            for fam in families_for(m, eps, n, k):
                # fixed-size families only count when their size is searched
                if fam.instance.n not in counts or fam.instance in seen:
                    continue
                seen.add(fam.instance)
                worst = _worse(worst, measure_ratio(mech, fam.instance, objective, fam.label))
    for i, inst in enumerate(
        random_instances(
            config.budget, config.seed, config.agent_counts, config.coordinate_denominator, m, config.region_menu
        )
    ):
        worst = _worse(worst, measure_ratio(mech, inst, objective, f"random:{i}"))
    return worst
