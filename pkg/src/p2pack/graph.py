"""Immutable simple graph and the P2 path/packing value types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError


class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Adjacency is stored twice: as sorted tuples (deterministic iteration
    order) and as per-vertex bitmasks (fast set algebra in the inner
    loops). Instances are immutable after construction and safe to share
    between concurrent solver runs.
    """

    __slots__ = ("n", "adj", "adj_mask", "m")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...],
                 adj_mask: tuple[int, ...], m: int):
        self.n = n
        self.adj = adj
        self.adj_mask = adj_mask
        self.m = m

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, deduplicating edges and rejecting self-loops."""
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
        masks = []
        for s in neighbor_sets:
            mask = 0
            for v in s:
                mask |= 1 << v
            masks.append(mask)
        m = sum(len(s) for s in neighbor_sets) // 2
        return cls(n, adj, tuple(masks), m)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool((self.adj_mask[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in ascending order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def without_vertices(self, removed: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on V minus `removed`, re-indexed densely.

        Returns the new graph and the tuple mapping new ids to old ids.
        """
        removed_set = set(removed)
        for v in removed_set:
            self.check_vertex(v)
        kept = tuple(v for v in range(self.n) if v not in removed_set)
        index = {old: new for new, old in enumerate(kept)}
        edges = [(index[u], index[v]) for u, v in self.edges()
                 if u in index and v in index]
        return Graph.from_edges(len(kept), edges), kept

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def neighbors_of_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """All vertices outside `s` adjacent to at least one vertex of `s`."""
    s_set = set(s)
    out: set[int] = set()
    for v in s_set:
        g.check_vertex(v)
        out.update(g.adj[v])
    return frozenset(out - s_set)


def components_outside(g: Graph, removed: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of the subgraph induced on V minus `removed`.

    Components are listed in ascending order of their minimum vertex id,
    each as a sorted vertex tuple.
    """
    removed_set = set(removed)
    for v in removed_set:
        g.check_vertex(v)
    seen = set(removed_set)
    comps: list[tuple[int, ...]] = []
    for start in range(g.n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


@dataclass(frozen=True, order=True)
class P2Path:
    """A path on three vertices with a designated midpoint.

    Stored in canonical orientation e1 < e2; equality therefore matches
    equality of the underlying edge set.
    """

    e1: int
    mid: int
    e2: int

    def __post_init__(self):
        if len({self.e1, self.mid, self.e2}) != 3:
            raise InputError(f"degenerate path ({self.e1}, {self.mid}, {self.e2})")
        if self.e1 > self.e2:
            a, b = self.e1, self.e2
            object.__setattr__(self, "e1", b)
            object.__setattr__(self, "e2", a)

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.e1, self.mid, self.e2)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset((self.e1, self.mid, self.e2))

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        a = (min(self.e1, self.mid), max(self.e1, self.mid))
        b = (min(self.mid, self.e2), max(self.mid, self.e2))
        return frozenset((a, b))


@dataclass(frozen=True)
class Packing:
    """A set of pairwise vertex-disjoint P2 paths."""

    paths: tuple[P2Path, ...]
    covered: frozenset[int]

    @classmethod
    def build(cls, paths: Iterable[P2Path]) -> "Packing":
        unique = tuple(sorted(set(paths)))
        covered: set[int] = set()
        for p in unique:
            trio = p.vertex_set
            if covered & trio:
                raise InputError(f"paths overlap at {sorted(covered & trio)}")
            covered |= trio
        return cls(unique, frozenset(covered))

    @classmethod
    def empty(cls) -> "Packing":
        return cls((), frozenset())

    @property
    def size(self) -> int:
        return len(self.paths)

    @property
    def path_set(self) -> frozenset[P2Path]:
        return frozenset(self.paths)

    def covered_mask(self) -> int:
        mask = 0
        for v in self.covered:
            mask |= 1 << v
        return mask


def ensure_valid_packing(g: Graph, packing: Packing) -> None:
    """Raise InputError unless every path uses real edges of `g`.

    Disjointness is already enforced by Packing.build; this re-checks it
    so arbitrary hand-made values fail loudly too.
    """
    covered: set[int] = set()
    for p in packing.paths:
        for v in p.vertices:
            g.check_vertex(v)
        if not g.has_edge(p.e1, p.mid) or not g.has_edge(p.mid, p.e2):
            raise InputError(f"path {p.vertices} uses a non-edge")
        trio = p.vertex_set
        if covered & trio:
            raise InputError(f"paths overlap at {sorted(covered & trio)}")
        covered |= trio
    if len(covered) != 3 * packing.size or covered != set(packing.covered):
        raise InputError("covered vertex set inconsistent with paths")
