"""Greedy maximal packings, leftover classification and local rules.

After deleting a maximal packing's vertices, every remaining component is
a single vertex or a single edge. Rule 1 rewires a path so that two such
lone vertices collapse into one leftover edge; rule 2 consumes two
leftover edges and grows the packing by one. Exhausting both rules yields
the structural properties that crown detection relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation
from .graph import Graph, P2Path, Packing, components_outside, ensure_valid_packing


@dataclass(frozen=True)
class LeftoverClassification:
    """Components of G minus the packing: lone vertices and lone edges."""

    singletons: frozenset[int]
    pair_edges: tuple[tuple[int, int], ...]


def greedy_maximal(g: Graph, base: Packing) -> Packing:
    """Extend `base` to a maximal packing.

    Scans vertices in ascending order; an uncovered vertex with two
    uncovered neighbors becomes the midpoint of a new path on its two
    smallest such neighbors. One ascending pass suffices: coverage only
    grows, so a vertex rejected once can never become a usable midpoint.
    """
    ensure_valid_packing(g, base)
    covered = set(base.covered)
    paths = list(base.paths)
    for v in range(g.n):
        if v in covered:
            continue
        free = [u for u in g.adj[v] if u not in covered]
        if len(free) >= 2:
            a, b = free[0], free[1]
            paths.append(P2Path(a, v, b))
            covered.update((a, v, b))
    return Packing.build(paths)


def classify_leftover(g: Graph, p: Packing) -> LeftoverClassification:
    """Split the components of G minus V(p) into lone vertices and edges.

    A component with three or more vertices would contain another P2, so
    it signals a non-maximal packing and raises ContractViolation.
    """
    singles: set[int] = set()
    pairs: list[tuple[int, int]] = []
    for comp in components_outside(g, p.covered):
        if len(comp) == 1:
            singles.add(comp[0])
        elif len(comp) == 2:
            pairs.append(comp)
        else:
            raise ContractViolation(
                f"component {comp} has {len(comp)} vertices; packing not maximal")
    return LeftoverClassification(frozenset(singles), tuple(sorted(pairs)))


def _paths_by_min_vertex(p: Packing) -> list[P2Path]:
    return sorted(p.paths, key=lambda path: (min(path.vertices), path.vertices))


def _path_adjacent(path: P2Path, a: int, b: int) -> bool:
    # Within a P2 two distinct vertices are adjacent iff one is the midpoint.
    return a == path.mid or b == path.mid


def apply_rule1(g: Graph, p: Packing, lc: LeftoverClassification
                ) -> tuple[Packing, LeftoverClassification] | None:
    """Rewire one path that touches two distinct lone vertices.

    If a path L has lone vertices u != w attached at distinct vertices of
    L, the path is replaced so that one attachment pair joins the packing
    and the other leaves it (the packing size is unchanged). The result
    is re-maximalized and re-classified. Returns None when no path
    qualifies.
    """
    singles = sorted(lc.singletons)
    for path in _paths_by_min_vertex(p):
        verts = sorted(path.vertices)
        attached = {x: [q for q in singles if g.has_edge(q, x)] for x in verts}
        found = None
        for pa in verts:
            for u in attached[pa]:
                for pb in verts:
                    if pb == pa:
                        continue
                    for w in attached[pb]:
                        if w != u:
                            found = (u, pa, w, pb)
                            break
                    if found:
                        break
                if found:
                    break
            if found:
                break
        if not found:
            continue
        u, pa, w, pb = found
        third = next(x for x in path.vertices if x not in (pa, pb))
        # Keep the first witness pair when its attachment vertex still has a
        # path edge to the third vertex; otherwise keep the second pair.
        if _path_adjacent(path, pa, third):
            kept_single, kept_attach = u, pa
        else:
            kept_single, kept_attach = w, pb
        new_path = P2Path(kept_single, kept_attach, third)
        replaced = [q for q in p.paths if q != path] + [new_path]
        remaxed = greedy_maximal(g, Packing.build(replaced))
        return remaxed, classify_leftover(g, remaxed)
    return None


def apply_rule2(g: Graph, p: Packing, lc: LeftoverClassification
                ) -> tuple[Packing, LeftoverClassification] | None:
    """Split one path between two leftover edges, growing the packing.

    If a path L has distinct leftover edges attached at distinct vertices
    of L, both edges are absorbed into new paths through their attachment
    vertices and L's third vertex leaves the packing: a net gain of one
    path before re-maximalization.
    """

    def attachment(edge: tuple[int, int], x: int) -> int | None:
        for cand in edge:
            if g.has_edge(cand, x):
                return cand
        return None

    for path in _paths_by_min_vertex(p):
        verts = sorted(path.vertices)
        found = None
        for pa in verts:
            for edge1 in lc.pair_edges:
                u1 = attachment(edge1, pa)
                if u1 is None:
                    continue
                for pb in verts:
                    if pb == pa:
                        continue
                    for edge2 in lc.pair_edges:
                        if edge2 == edge1:
                            continue
                        w1 = attachment(edge2, pb)
                        if w1 is None:
                            continue
                        found = (edge1, u1, pa, edge2, w1, pb)
                        break
                    if found:
                        break
                if found:
                    break
            if found:
                break
        if not found:
            continue
        edge1, u1, pa, edge2, w1, pb = found
        u2 = edge1[0] if edge1[1] == u1 else edge1[1]
        w2 = edge2[0] if edge2[1] == w1 else edge2[1]
        replaced = [q for q in p.paths if q != path]
        replaced.append(P2Path(u2, u1, pa))
        replaced.append(P2Path(w2, w1, pb))
        remaxed = greedy_maximal(g, Packing.build(replaced))
        return remaxed, classify_leftover(g, remaxed)
    return None


def reduce_exhaustive(g: Graph, p: Packing, stats=None, trace: list | None = None
                      ) -> tuple[Packing, LeftoverClassification]:
    """Apply rules 1 and 2 until neither fires.

    Rule 1 is tried before rule 2 each round. Terminates because each
    application either grows the packing or trades two lone vertices for
    a leftover edge; the iteration guard only exists to turn a broken
    rule implementation into a loud failure.
    """
    lc = classify_leftover(g, p)
    guard = 2 * (g.n + 1) * (g.n // 3 + 2)
    for _ in range(guard):
        out = apply_rule1(g, p, lc)
        if out is not None:
            p, lc = out
            if stats is not None:
                stats.rule1 += 1
            if trace is not None:
                trace.append("rule1")
            continue
        out = apply_rule2(g, p, lc)
        if out is not None:
            p, lc = out
            if stats is not None:
                stats.rule2 += 1
            if trace is not None:
                trace.append("rule2")
            continue
        return p, lc
    raise ContractViolation("reduction rules failed to reach a fixpoint")


def check_properties(g: Graph, p: Packing, lc: LeftoverClassification) -> bool:
    """True iff every path satisfies the four fixpoint properties.

    For each path L: multiple lone-vertex neighbors attach at one unique
    vertex of L; multiple attachment vertices see one unique lone vertex;
    and the same two statements for leftover edges.
    """
    for path in p.paths:
        verts = path.vertices
        single_attach: dict[int, set[int]] = {}
        for q in lc.singletons:
            spots = {x for x in verts if g.has_edge(q, x)}
            if spots:
                single_attach[q] = spots
        if len(single_attach) >= 2:
            union = set().union(*single_attach.values())
            if len(union) != 1:
                return False
        attach_vertices = set().union(*single_attach.values()) if single_attach else set()
        if len(attach_vertices) >= 2 and len(single_attach) != 1:
            return False

        edge_attach: dict[tuple[int, int], set[int]] = {}
        for edge in lc.pair_edges:
            spots = {x for x in verts
                     if g.has_edge(edge[0], x) or g.has_edge(edge[1], x)}
            if spots:
                edge_attach[edge] = spots
        if len(edge_attach) >= 2:
            union = set().union(*edge_attach.values())
            if len(union) != 1:
                return False
        attach_vertices = set().union(*edge_attach.values()) if edge_attach else set()
        if len(attach_vertices) >= 2 and len(edge_attach) != 1:
            return False
    return True
