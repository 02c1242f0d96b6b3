"""Exact reference algorithms and machine checks of the extremal claims.

Everything here is brute force on purpose: subset DP for maximum
packings, full enumeration of fixed-size packings, and exhaustive search
for minimum total edge covers. Size caps are refusal errors rather than
silent truncation; the lab must never return an approximate answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .errors import ContractViolation, InputError, SizeCapExceeded
from .graph import Graph, P2Path, Packing, components_outside

DEFAULT_ORACLE_CAP = 20
DEFAULT_ENUMERATION_CAP = 14
DEFAULT_COVER_EDGE_CAP = 20


def _all_paths(g: Graph) -> list[tuple[P2Path, int]]:
    """Every P2 of the graph with its vertex bitmask, in sorted order."""
    out = []
    for mid in range(g.n):
        nbrs = g.adj[mid]
        for i in range(len(nbrs)):
            for k in range(i + 1, len(nbrs)):
                p = P2Path(nbrs[i], mid, nbrs[k])
                out.append((p, (1 << p.e1) | (1 << p.mid) | (1 << p.e2)))
    out.sort(key=lambda pair: pair[0])
    return out


def max_packing_dp(g: Graph, cap: int | None = None) -> tuple[int, Packing]:
    """Exact maximum packing size and one witness via subset DP.

    best(S) considers the lowest-id vertex v of S: either v is skipped or
    it is used by one of the P2s lying inside S. The witness backtrack
    prefers skipping, then the first usable path in sorted order, so the
    witness is deterministic.
    """
    cap = DEFAULT_ORACLE_CAP if cap is None else cap
    if g.n > cap:
        raise SizeCapExceeded(f"n={g.n} exceeds oracle cap {cap}")
    n = g.n
    by_vertex_masks: list[list[int]] = [[] for _ in range(n)]
    by_vertex_paths: list[list[P2Path]] = [[] for _ in range(n)]
    for path, mask in _all_paths(g):
        for v in path.vertices:
            by_vertex_masks[v].append(mask)
            by_vertex_paths[v].append(path)
    full = (1 << n) - 1
    best = bytearray(full + 1)
    for mask in range(1, full + 1):
        v = (mask & -mask).bit_length() - 1
        b = best[mask ^ (1 << v)]
        for pm in by_vertex_masks[v]:
            if pm & mask == pm:
                c = best[mask ^ pm] + 1
                if c > b:
                    b = c
        best[mask] = b

    chosen: list[P2Path] = []
    mask = full
    while mask:
        v = (mask & -mask).bit_length() - 1
        if best[mask] == best[mask ^ (1 << v)]:
            mask ^= 1 << v
            continue
        for pm, path in zip(by_vertex_masks[v], by_vertex_paths[v]):
            if pm & mask == pm and best[mask] == best[mask ^ pm] + 1:
                chosen.append(path)
                mask ^= pm
                break
        else:
            raise ContractViolation("witness backtrack lost the optimum")
    return best[full], Packing.build(chosen)


def enumerate_packings(g: Graph, size: int, cap: int | None = None
                       ) -> Iterator[Packing]:
    """All packings of exactly `size` paths, in a fixed order."""
    cap = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if g.n > cap:
        raise SizeCapExceeded(f"n={g.n} exceeds enumeration cap {cap}")
    if size < 0:
        raise InputError("size must be nonnegative")
    paths = _all_paths(g)

    def rec(start: int, used: int, acc: list[P2Path]) -> Iterator[Packing]:
        if len(acc) == size:
            yield Packing.build(acc)
            return
        need = size - len(acc)
        for idx in range(start, len(paths) - need + 1):
            path, mask = paths[idx]
            if mask & used:
                continue
            acc.append(path)
            yield from rec(idx + 1, used | mask, acc)
            acc.pop()

    return rec(0, 0, [])


class ExtremalFamilies(NamedTuple):
    """(j+1)-packings ranked by reuse of the reference packing.

    `path_reuse` maximizes the number of wholly reused paths;
    `edge_reuse` is its subset additionally maximizing reused edges.
    """

    path_reuse: tuple[Packing, ...]
    edge_reuse: tuple[Packing, ...]


def extremal_family(g: Graph, p: Packing) -> ExtremalFamilies:
    """Compute both reuse-maximal families of (|p|+1)-packings."""
    bigger = list(enumerate_packings(g, p.size + 1))
    if not bigger:
        return ExtremalFamilies((), ())
    base_paths = p.path_set
    base_edges = frozenset(e for q in p.paths for e in q.edge_set)

    def shared_paths(q: Packing) -> int:
        return len(base_paths & q.path_set)

    def shared_edges(q: Packing) -> int:
        return len(base_edges & {e for r in q.paths for e in r.edge_set})

    best1 = max(shared_paths(q) for q in bigger)
    family1 = tuple(q for q in bigger if shared_paths(q) == best1)
    best2 = max(shared_edges(q) for q in family1)
    family2 = tuple(q for q in family1 if shared_edges(q) == best2)
    return ExtremalFamilies(family1, family2)


@dataclass
class ExtremalReport:
    """Violations found while checking the reuse claims, keyed by check."""

    violations: dict[str, list[str]] = field(default_factory=dict)
    vacuous: bool = False

    CHECKS = ("min_overlap", "two_path_contact", "no_fold", "cut_endpoint",
              "reuse_bound")

    def record(self, check: str, detail: str) -> None:
        self.violations.setdefault(check, []).append(detail)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self, label: str) -> list[str]:
        out = []
        for check in self.CHECKS:
            bad = self.violations.get(check, [])
            if bad:
                out.append(f"{label} {check} VIOLATION {bad[0]}")
            else:
                suffix = " (vacuous)" if self.vacuous else ""
                out.append(f"{label} {check} ok{suffix}")
        return out


def _foldable(q: P2Path, p: P2Path, packing_vertices: frozenset[int]) -> bool:
    """Can q's midpoint, sitting on p, pull an endpoint onto p?

    True when q's midpoint equals some vertex of p that has a neighbor
    along p not used by the larger packing.
    """
    seq = p.vertices
    if q.mid not in seq:
        return False
    s = seq.index(q.mid)
    for t in (s - 1, s + 1):
        if 0 <= t < 3 and seq[t] not in packing_vertices:
            return True
    return False


def verify_extremal_properties(g: Graph, p: Packing,
                               families: ExtremalFamilies | None = None
                               ) -> ExtremalReport:
    """Machine-check the vertex-reuse claims against one maximal packing.

    Runs, over the appropriate reuse-maximal family: (a) every old path
    keeps at least two vertices in the new packing, (b) every non-reused
    old path touches at least two new paths, (c) no new path is foldable,
    (d) when an old path keeps exactly two vertices one of the cut
    vertices is an endpoint of its new path, and (e) some new packing in
    the refined family reuses at least ceil(2.5 j) old vertices. Any
    violation indicates an implementation bug and is reported with its
    witness.
    """
    report = ExtremalReport()
    if families is None:
        families = extremal_family(g, p)
    if not families.path_reuse:
        report.vacuous = True
        return report
    j = p.size

    for q_pack in families.path_reuse:
        q_vertices = frozenset(q_pack.covered)
        q_paths = q_pack.path_set
        for old in p.paths:
            overlap = len(old.vertex_set & q_vertices)
            if overlap < 2:
                report.record("min_overlap",
                              f"path {old.vertices} keeps {overlap} vertices")
            if old not in q_paths:
                touched = sum(1 for q in q_pack.paths
                              if old.vertex_set & q.vertex_set)
                if touched < 2:
                    report.record("two_path_contact",
                                  f"path {old.vertices} touches {touched} paths")

    best_reuse = 0
    for q_pack in families.edge_reuse:
        q_vertices = frozenset(q_pack.covered)
        best_reuse = max(best_reuse, len(p.covered & q_vertices))
        for q in q_pack.paths:
            for old in p.paths:
                if _foldable(q, old, q_vertices):
                    report.record("no_fold",
                                  f"path {q.vertices} foldable on {old.vertices}")
        for old in p.paths:
            cut = old.vertex_set & q_vertices
            if len(cut) != 2:
                continue
            hosts = [q for q in q_pack.paths if q.vertex_set & cut]
            by_vertex = {v: q for q in q_pack.paths for v in cut
                         if v in q.vertex_set}
            if len(hosts) < 2 or len(by_vertex) != 2:
                report.record("cut_endpoint",
                              f"cut vertices of {old.vertices} not on two paths")
                continue
            if not any(v != q.mid for v, q in by_vertex.items()):
                report.record("cut_endpoint",
                              f"no cut vertex of {old.vertices} is an endpoint")
    if j >= 1 and families.edge_reuse:
        needed = (5 * j + 1) // 2  # ceil(2.5 j); intersections are integers
        if best_reuse < needed:
            report.record("reuse_bound",
                          f"max reuse {best_reuse} below {needed}")
    return report


def min_total_edge_cover_bruteforce(g: Graph, cap: int | None = None
                                    ) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Minimum edge set covering all vertices with >= 2 edges per component.

    Pure exhaustive search by ascending subset size. Feasibility requires
    every component of the graph to have at least three vertices.
    """
    cap = DEFAULT_COVER_EDGE_CAP if cap is None else cap
    if g.m > cap:
        raise SizeCapExceeded(f"m={g.m} exceeds cover cap {cap}")
    for comp in components_outside(g, ()):
        if len(comp) < 3:
            raise InputError(f"component {comp} too small for a total cover")
    edges = list(g.edges())
    full = (1 << g.n) - 1
    edge_masks = [(1 << u) | (1 << v) for u, v in edges]

    def is_total(subset: tuple[int, ...]) -> bool:
        covered = 0
        for i in subset:
            covered |= edge_masks[i]
        if covered != full:
            return False
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count: dict[int, int] = {}
        for i in subset:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        for i in subset:
            root = find(edges[i][0])
            count[root] = count.get(root, 0) + 1
        return all(c >= 2 for c in count.values())

    from itertools import combinations
    lower = math.ceil(g.n / 2)  # each edge covers at most two vertices
    for size in range(lower, len(edges) + 1):
        for subset in combinations(range(len(edges)), size):
            if is_total(subset):
                return size, tuple(edges[i] for i in subset)
    raise ContractViolation("no total cover found despite feasible components")
