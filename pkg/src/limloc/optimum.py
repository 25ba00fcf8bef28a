"""Exact optimal placements inside the feasible region.

Restricted to one feasible interval, every objective is piecewise linear in
the facility position, so an optimum sits at an interval endpoint or at a
breakpoint. :func:`candidate_points` enumerates those; the optimizers simply
score every candidate. Two facilities reduce to one by trying every split of
the sorted agents into a prefix (served by the left facility) and a suffix.

:func:`grid_optimal` is an independent brute-force oracle over a uniform grid.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from limloc.core import ONE, FeasibleRegion, Instance, Placement, contains
from limloc.objectives import Objective, evaluate, evaluate_agents, max_travel


@dataclass(frozen=True)
class OptResult:
    placement: Placement
    value: Fraction


def _happiness_crossings(agents: Sequence[Fraction]) -> set[Fraction]:
    # 1 - |xi - y|/di = 1 - |xj - y|/dj  <=>  si (xi - y) dj = sj (xj - y) di
    out = set()
    ds = [max_travel(x) for x in agents]
    for (xi, di), (xj, dj) in itertools.combinations(zip(agents, ds), 2):
        for si, sj in ((1, 1), (1, -1)):
            coef = sj * di - si * dj
            if coef == 0:
                continue
            y = (sj * xj * di - si * xi * dj) / coef
            if 0 <= y <= 1:
                out.add(y)
    return out


def group_candidates(agents: Sequence[Fraction], region: FeasibleRegion, objective: Objective) -> list[Fraction]:
    """Breakpoints of the single-facility landscape for ``agents``, clipped to ``region``."""
    pts = set(region.endpoints())
    pts.update(agents)
    if objective in (Objective.MAX_DISTANCE, Objective.EGALITARIAN_WELFARE) and agents:
        pts.add((min(agents) + max(agents)) / 2)
    if objective is Objective.MIN_SATISFACTION:
        pts |= _happiness_crossings(agents)
    return sorted(p for p in pts if contains(region, p))


def candidate_points(instance: Instance, objective: Objective) -> list[Fraction]:
    return group_candidates(instance.agents, instance.region, objective)


def _best_single(agents: Sequence[Fraction], region: FeasibleRegion, objective: Objective) -> tuple[Fraction, Fraction]:
    best_y = best_v = None
    for y in group_candidates(agents, region, objective):
        v = evaluate_agents(agents, (y,), objective)
        # strict improvement only: ties keep the smaller location
        if best_v is None or objective.better(v, best_v):
            best_y, best_v = y, v
    return best_y, best_v


def optimal_single(instance: Instance, objective: Objective) -> OptResult:
    y, v = _best_single(instance.agents, instance.region, objective)
    return OptResult(Placement((y,)), v)


def optimal_two(instance: Instance, objective: Objective) -> OptResult:
    agents, region = instance.agents, instance.region
    best: tuple[Fraction, tuple[Fraction, ...]] | None = None
    cache: dict[tuple[int, int], Fraction] = {}

    def solve(lo: int, hi: int) -> Fraction:
        if lo == hi:
            return region.leftmost()
        if (lo, hi) not in cache:
            cache[(lo, hi)] = _best_single(agents[lo:hi], region, objective)[0]
        return cache[(lo, hi)]

    n = len(agents)
    for k in range(n + 1):
        locs = tuple(sorted((solve(0, k), solve(k, n))))
        v = evaluate_agents(agents, locs, objective)
        if best is None or objective.better(v, best[0]) or (v == best[0] and locs < best[1]):
            best = (v, locs)
    return OptResult(Placement(best[1]), best[0])


def optimal(instance: Instance, objective: Objective) -> OptResult:
    if instance.facilities == 1:
        return optimal_single(instance, objective)
    return optimal_two(instance, objective)


def grid_points(region: FeasibleRegion, resolution: int) -> list[Fraction]:
    """Feasible points of ``{k / resolution}`` together with every interval endpoint."""
    pts = set(region.endpoints())
    for lo, hi in region.intervals:
        first = -((-lo * resolution) // 1)  # ceil
        last = (hi * resolution) // 1
        pts.update(Fraction(k, resolution) for k in range(int(first), int(last) + 1))
    return sorted(pts)


def grid_optimal(instance: Instance, objective: Objective, resolution: int) -> OptResult:
    """Brute force over all m-tuples of grid points.

    Scores come from a float pass over exact integer distances; every tuple
    whose float score is within a small margin of the best is then re-scored
    exactly, so the returned value is exact.
    """
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    pts = grid_points(instance.region, resolution)
    m = instance.facilities
    if m == 1:
        best_y, best_v = None, None
        for y in pts:
            v = evaluate(instance, (y,), objective)
            if best_v is None or objective.better(v, best_v):
                best_y, best_v = y, v
        return OptResult(Placement((best_y,)), best_v)
    return _grid_pairs(instance, objective, pts)


def _grid_pairs(instance: Instance, objective: Objective, pts: list[Fraction]) -> OptResult:
    agents = instance.agents
    scale = math.lcm(*(q.denominator for q in (*pts, *agents)))
    if scale * 2 > _EXACT_FLOAT_LIMIT:
        return _grid_pairs_exact(instance, objective, pts)
    P = np.array([int(q * scale) for q in pts], dtype=np.int64)
    X = np.array([int(x * scale) for x in agents], dtype=np.int64)
    dmax = np.maximum(X, scale - X).astype(np.float64)
    # dist[i, p] = |x_i - pts_p| in units of 1/scale
    dist = np.abs(X[:, None] - P[None, :])
    best_score = None
    shortlist: list[tuple[int, int]] = []
    sign = 1.0 if objective.minimize else -1.0
    chunk = max(1, 2_000_000 // max(1, len(agents) * len(P)))
    for start in range(0, len(P), chunk):
        rows = np.arange(start, min(start + chunk, len(P)))
        d = np.minimum(dist[:, rows, None], dist[:, None, :]).astype(np.float64)
        score = sign * _float_score(d, dmax, objective, scale)
        # only unordered pairs p <= q
        score[np.arange(len(rows))[:, None] + start > np.arange(len(P))[None, :]] = np.inf
        low = score.min()
        if best_score is None or low < best_score - 1e-9:
            best_score = low
            shortlist = []
        sel = np.argwhere(score <= best_score + 1e-9)
        shortlist.extend((int(rows[a]), int(b)) for a, b in sel)
    best = None
    for a, b in shortlist:
        locs = (pts[a], pts[b])
        v = evaluate(instance, locs, objective)
        if best is None or objective.better(v, best[0]) or (v == best[0] and locs < best[1]):
            best = (v, locs)
    return OptResult(Placement(best[1]), best[0])


_EXACT_FLOAT_LIMIT = 2**52


def _grid_pairs_exact(instance: Instance, objective: Objective, pts: list[Fraction]) -> OptResult:
    best = None
    for locs in itertools.combinations_with_replacement(pts, 2):
        v = evaluate(instance, locs, objective)
        if best is None or objective.better(v, best[0]) or (v == best[0] and locs < best[1]):
            best = (v, locs)
    return OptResult(Placement(best[1]), best[0])


def _float_score(d: np.ndarray, dmax: np.ndarray, objective: Objective, scale: int) -> np.ndarray:
    n = d.shape[0]
    if objective is Objective.TOTAL_DISTANCE:
        return d.sum(axis=0) / scale
    if objective is Objective.MAX_DISTANCE:
        return d.max(axis=0) / scale
    if objective is Objective.UTILITARIAN_WELFARE:
        return n - d.sum(axis=0) / scale
    if objective is Objective.EGALITARIAN_WELFARE:
        return 1 - d.max(axis=0) / scale
    h = 1 - d / dmax[:, None, None]
    if objective is Objective.SOCIAL_SATISFACTION:
        return h.sum(axis=0)
    return h.min(axis=0)
