"""Rebuild full packings from midpoint sets or endpoint pairs.

Both reconstructions are single bipartite matchings: the packing exists
iff the matching saturates every slot, which makes the two "partial
information suffices" facts directly machine-checkable against
exhaustive enumeration on small graphs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InputError
from .graph import Graph, P2Path, Packing
from .matching import BipartiteGraph, max_matching


def packing_from_midpoints(g: Graph, mids: Iterable[int]) -> Packing | None:
    """A packing whose midpoint set is exactly `mids`, or None.

    Each midpoint gets two endpoint slots matched into its non-midpoint
    neighbors; a saturating matching is exactly a system of distinct
    endpoints.
    """
    mid_list = sorted(set(mids))
    for v in mid_list:
        g.check_vertex(v)
    mid_set = set(mid_list)
    others = [v for v in range(g.n) if v not in mid_set]
    pos = {v: i for i, v in enumerate(others)}
    rows = []
    for v in mid_list:
        nbrs = [pos[u] for u in g.adj[v] if u not in mid_set]
        rows.append(nbrs)
        rows.append(list(nbrs))
    b = BipartiteGraph.build(2 * len(mid_list), len(others), rows)
    m = max_matching(b)
    if m.size < 2 * len(mid_list):
        return None
    paths = []
    for i, v in enumerate(mid_list):
        a = others[m.pairs[2 * i]]
        c = others[m.pairs[2 * i + 1]]
        paths.append(P2Path(a, v, c))
    return Packing.build(paths)


def packing_from_endpoint_pairs(g: Graph, pairs: Sequence[tuple[int, int]]
                                ) -> Packing | None:
    """A packing where pair i forms the endpoints of path i, or None.

    Midpoint candidates are common neighbors outside the endpoint set; a
    matching of pairs to candidates that saturates every pair picks the
    midpoints.
    """
    endpoints: list[int] = []
    for a, b in pairs:
        g.check_vertex(a)
        g.check_vertex(b)
        endpoints.extend((a, b))
    if len(set(endpoints)) != len(endpoints):
        raise InputError("endpoint vertices must be pairwise distinct")
    endpoint_set = set(endpoints)
    candidates = [v for v in range(g.n) if v not in endpoint_set]
    pos = {v: i for i, v in enumerate(candidates)}
    rows = []
    for a, b in pairs:
        common = set(g.adj[a]) & set(g.adj[b])
        rows.append(sorted(pos[v] for v in common if v not in endpoint_set))
    b_graph = BipartiteGraph.build(len(pairs), len(candidates), rows)
    m = max_matching(b_graph)
    if m.size < len(pairs):
        return None
    paths = []
    for i, (a, b) in enumerate(pairs):
        mid = candidates[m.pairs[i]]
        paths.append(P2Path(a, mid, b))
    return Packing.build(paths)
