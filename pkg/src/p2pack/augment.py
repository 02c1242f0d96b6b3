"""Iterative augmentation: grow a maximal packing by one path.

A size-(j+1) packing, when one exists, can be chosen to reuse at least
2.5j of the current packing's 3j vertices, so at most 0.5j+3 of its
vertices lie outside. The search therefore splits into a midpoint phase
(few outside midpoints) and an endpoint phase (few outside endpoints),
each resolved by a reconstruction matching. Enumeration order is fixed
and the first success wins, so the result is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .errors import InputError
from .graph import Graph, Packing
from .reconstruct import packing_from_endpoint_pairs, packing_from_midpoints

MIDPOINT_RATE = Fraction(3251, 10000)
ENDPOINT_RATE = Fraction(1749, 10000)


@dataclass(frozen=True)
class AugmentBudget:
    """Phase caps for augmenting a packing of size j."""

    j: int
    midpoint_cap: int
    endpoint_cap: int

    @classmethod
    def for_size(cls, j: int) -> "AugmentBudget":
        if j < 0:
            raise InputError("packing size must be nonnegative")
        return cls(j,
                   math.floor(MIDPOINT_RATE * j),
                   math.floor(ENDPOINT_RATE * j + 3))


def binomial_growth_check(j: int) -> bool:
    """Exact-arithmetic monotonicity of the two enumeration bounds.

    For every integer z up to 0.5j - 1, moving one more choice from the
    inside pool (3j vertices) to the outside pool (4j vertices) must
    strictly grow both products of binomials. Checked with arbitrary
    precision integers.
    """
    if j < 2:
        raise InputError("defined for j >= 2")
    comb = math.comb
    for z in range((j - 2) // 2 + 1):
        if not (comb(3 * j, j - z) * comb(4 * j, z)
                < comb(3 * j, j - (z + 1)) * comb(4 * j, z + 1)):
            return False
        if not (comb(3 * j, 2 * j - z) * comb(4 * j, z)
                < comb(3 * j, 2 * j - (z + 1)) * comb(4 * j, z + 1)):
            return False
    return True


def _endpoint_pairings(g: Graph, verts: tuple[int, ...]
                       ) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect pairings of `verts`, smallest unpaired vertex first.

    Pairs whose common neighborhood lies entirely inside the endpoint set
    can never receive a midpoint and are pruned during generation.
    """
    bmask = 0
    for v in verts:
        bmask |= 1 << v
    masks = g.adj_mask
    chosen: list[tuple[int, int]] = []

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not remaining:
            yield tuple(chosen)
            return
        a = remaining[0]
        rest = remaining[1:]
        for i, b in enumerate(rest):
            if masks[a] & masks[b] & ~bmask == 0:
                continue
            chosen.append((a, b))
            yield from rec(rest[:i] + rest[i + 1:])
            chosen.pop()

    return rec(verts)


def augment(g: Graph, p: Packing) -> Packing | None:
    """Find a packing of size |p|+1 or report that the search failed.

    Midpoint phase: choose how many of the j+1 midpoints sit outside the
    current packing (up to the midpoint cap), pick the concrete sets, and
    reconstruct. Endpoint phase: the same for the 2(j+1) endpoints with
    the endpoint cap, trying every pairing of the chosen endpoint set.
    Vertices that cannot serve (midpoints need degree >= 2, endpoints
    degree >= 1) are excluded from the candidate pools up front.
    """
    j = p.size
    target = j + 1
    if g.n < 3 * target:
        return None
    budget = AugmentBudget.for_size(j)
    inside = sorted(p.covered)
    outside = [v for v in range(g.n) if v not in p.covered]

    mid_inside = tuple(v for v in inside if len(g.adj[v]) >= 2)
    mid_outside = tuple(v for v in outside if len(g.adj[v]) >= 2)
    for take_out in range(budget.midpoint_cap + 1):
        take_in = target - take_out
        if take_in < 0 or take_in > len(mid_inside) or take_out > len(mid_outside):
            continue
        for chosen_in in combinations(mid_inside, take_in):
            for chosen_out in combinations(mid_outside, take_out):
                found = packing_from_midpoints(g, chosen_in + chosen_out)
                if found is not None:
                    return found

    end_inside = tuple(v for v in inside if g.adj[v])
    end_outside = tuple(v for v in outside if g.adj[v])
    midpoint_pool_mask = 0
    for v in range(g.n):
        if len(g.adj[v]) >= 2:
            midpoint_pool_mask |= 1 << v
    for take_out in range(budget.endpoint_cap + 1):
        take_in = 2 * target - take_out
        if take_in < 0 or take_in > len(end_inside) or take_out > len(end_outside):
            continue
        for chosen_in in combinations(end_inside, take_in):
            for chosen_out in combinations(end_outside, take_out):
                verts = tuple(sorted(chosen_in + chosen_out))
                bmask = 0
                for v in verts:
                    bmask |= 1 << v
                # Need j+1 distinct midpoints outside the endpoint set.
                if (midpoint_pool_mask & ~bmask).bit_count() < target:
                    continue
                for pairing in _endpoint_pairings(g, verts):
                    found = packing_from_endpoint_pairs(g, pairing)
                    if found is not None:
                        return found
    return None
