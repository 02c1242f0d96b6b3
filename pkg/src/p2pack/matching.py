"""Maximum bipartite matching with alternating-path reachability.

This is the computational substrate for crown construction and for
rebuilding packings from midpoints or endpoint pairs. Augmentation order
is fixed (ascending left id, ascending neighbor id) so results are
deterministic across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    edges: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, left_count: int, right_count: int,
              neighbors: Iterable[Iterable[int]]) -> "BipartiteGraph":
        rows = []
        for row in neighbors:
            cleaned = tuple(sorted(set(row)))
            for v in cleaned:
                if not (0 <= v < right_count):
                    raise InputError(f"right vertex {v} out of range")
            rows.append(cleaned)
        if len(rows) != left_count:
            raise InputError("adjacency rows do not match left_count")
        return cls(left_count, right_count, tuple(rows))


@dataclass
class Matching:
    """Partial injective map from left vertices to right vertices."""

    pairs: dict[int, int]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def right_owner(self) -> dict[int, int]:
        return {r: l for l, r in self.pairs.items()}


def max_matching(b: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching via augmenting paths (Kuhn).

    Left vertices are processed in ascending order and neighbors tried in
    ascending order, so the output is a deterministic function of the
    input.
    """
    pair_left: dict[int, int] = {}
    pair_right: dict[int, int] = {}

    def try_augment(u: int, seen: set[int]) -> bool:
        for v in b.edges[u]:
            if v in seen:
                continue
            seen.add(v)
            w = pair_right.get(v)
            if w is None or try_augment(w, seen):
                pair_left[u] = v
                pair_right[v] = u
                return True
        return False

    for u in range(b.left_count):
        if u not in pair_left:
            try_augment(u, set())
    return Matching(pair_left)


def alternating_reachable(b: BipartiteGraph, m: Matching,
                          sources: Iterable[int]) -> tuple[set[int], set[int]]:
    """Vertices reachable from `sources` by alternating paths.

    Paths start at left-side sources with an unmatched edge and then
    alternate matched/unmatched. Returns (left set, right set); sources
    are included in the left set.
    """
    src = list(sources)
    for u in src:
        if not (0 <= u < b.left_count):
            raise InputError(f"left vertex {u} out of range")
    owner = m.right_owner()
    left = set(src)
    right: set[int] = set()
    stack = list(left)
    while stack:
        u = stack.pop()
        matched_to = m.pairs.get(u)
        for v in b.edges[u]:
            if v == matched_to or v in right:
                continue
            right.add(v)
            w = owner.get(v)
            if w is not None and w not in left:
                left.add(w)
                stack.append(w)
    return left, right
