"""Top-level drivers: decision solver, standalone kernelization, dual cover.

The solve loop alternates three phases: grow a maximal packing greedily,
exhaust the local rules, and strip crowns while the leftover counts stay
above their thresholds. Once the instance is crown-free the packing is
grown one path at a time by the augmentation search; a failed
augmentation is a proof that no larger packing exists, hence NO.
"""

from __future__ import annotations

from dataclasses import dataclass

from .augment import augment
from .crowns import (LiftRecord, apply_crown, detect_crown_opportunity,
                     lift_through_chain)
from .errors import ContractViolation, InputError
from .graph import Graph, Packing, components_outside
from .instances import Instance, SolveResult, SolveStats
from .reduce import classify_leftover, greedy_maximal, reduce_exhaustive


def _drop_small_components(g: Graph) -> tuple[Graph, LiftRecord | None, int]:
    """Delete components with fewer than three vertices.

    Such components can never host a P2, so removing them is always safe;
    it also guarantees that every leftover vertex or edge keeps at least
    one neighbor, which the crown constructions rely on.
    """
    small = [c for c in components_outside(g, ()) if len(c) < 3]
    if not small:
        return g, None, 0
    removed = {v for comp in small for v in comp}
    reduced, kept = g.without_vertices(removed)
    return reduced, LiftRecord(kept, ()), len(removed)


def solve(inst: Instance, crown_audit: list | None = None) -> SolveResult:
    """Decide whether the instance has k disjoint P2s; certify YES answers.

    The returned certificate always lives in the original input graph
    (crown lifts applied) and has size at least k. When `crown_audit` is
    given, every applied crown is appended as (graph, k, crown) for
    external soundness checks.
    """
    k0 = inst.k
    stats = SolveStats()
    trace: list[str] = []
    if k0 <= 0:
        return SolveResult(True, k0, Packing.empty(), (), stats)
    chain: list[LiftRecord] = []
    g, k = inst.graph, k0
    g, rec, dropped = _drop_small_components(g)
    if rec is not None:
        chain.append(rec)
        trace.append(f"clean {dropped}")
    packing = Packing.empty()
    while True:
        if g.n < 3 * k:
            # k disjoint paths need 3k vertices; nothing left to search
            return SolveResult(False, k0, None, tuple(trace), stats)
        packing = greedy_maximal(g, packing)
        packing, leftover = reduce_exhaustive(g, packing, stats=stats, trace=trace)
        if packing.size >= k:
            certificate = lift_through_chain(chain, packing)
            return SolveResult(True, k0, certificate, tuple(trace), stats)
        crown = detect_crown_opportunity(g, packing, leftover, packing.size,
                                         strict=False)
        if crown is not None:
            stats.crowns += 1
            trace.append(f"crown {crown.kind} {len(crown.head)}")
            if crown_audit is not None:
                crown_audit.append((g, k, crown))
            reduced, rec = apply_crown(Instance(g, k), crown)
            chain.append(rec)
            g, k = reduced.graph, reduced.k
            g, rec2, dropped = _drop_small_components(g)
            if rec2 is not None:
                chain.append(rec2)
                trace.append(f"clean {dropped}")
            if k <= 0:
                certificate = lift_through_chain(chain, Packing.empty())
                return SolveResult(True, k0, certificate, tuple(trace), stats)
            packing = Packing.empty()
            continue
        bigger = augment(g, packing)
        if bigger is None:
            return SolveResult(False, k0, None, tuple(trace), stats)
        stats.augmentations += 1
        trace.append(f"augment {bigger.size}")
        packing = bigger


@dataclass
class KernelResult:
    """Outcome of standalone kernelization.

    Either `certificate` is set (a packing of size >= the original k was
    found during reduction, already lifted to original ids) or `instance`
    holds the reduced instance together with the lift chain needed to map
    its solutions back.
    """

    instance: Instance | None
    lift_chain: tuple[LiftRecord, ...]
    certificate: Packing | None
    kernel_trace: tuple[str, ...]
    stats: SolveStats
    internal_packing_size: int

    @property
    def early_yes(self) -> bool:
        return self.certificate is not None


def kernelize(inst: Instance) -> KernelResult:
    """Shrink the instance until neither rules nor crowns apply.

    On return without an early YES the graph has at most
    max(0, 7k' - 8) vertices: at most k'-1 packing paths, 2k'-3 lone
    vertices and k'-1 leftover edges survive the thresholds.
    """
    k0 = inst.k
    stats = SolveStats()
    trace: list[str] = []
    if k0 <= 0:
        return KernelResult(None, (), Packing.empty(), (), stats, 0)
    chain: list[LiftRecord] = []
    g, k = inst.graph, k0
    g, rec, dropped = _drop_small_components(g)
    if rec is not None:
        chain.append(rec)
        trace.append(f"clean {dropped}")
    while True:
        packing = greedy_maximal(g, Packing.empty())
        packing, leftover = reduce_exhaustive(g, packing, stats=stats, trace=trace)
        if packing.size >= k:
            certificate = lift_through_chain(chain, packing)
            return KernelResult(None, tuple(chain), certificate, tuple(trace),
                                stats, packing.size)
        crown = detect_crown_opportunity(g, packing, leftover, k, strict=True)
        if crown is None:
            return KernelResult(Instance(g, k), tuple(chain), None, tuple(trace),
                                stats, packing.size)
        stats.crowns += 1
        trace.append(f"crown {crown.kind} {len(crown.head)}")
        reduced, rec = apply_crown(Instance(g, k), crown)
        chain.append(rec)
        g, k = reduced.graph, reduced.k
        g, rec2, dropped = _drop_small_components(g)
        if rec2 is not None:
            chain.append(rec2)
            trace.append(f"clean {dropped}")
        if k <= 0:
            certificate = lift_through_chain(chain, Packing.empty())
            return KernelResult(None, tuple(chain), certificate, tuple(trace),
                                stats, 0)


def solve_total_edge_cover(g: Graph, kd: int
                           ) -> tuple[bool, tuple[tuple[int, int], ...] | None]:
    """Decide whether a total edge cover of size at most kd exists.

    k edges cover at most 1.5k vertices, so any graph with more than
    1.5 kd vertices is rejected outright. Otherwise the answer reduces to
    finding n - kd disjoint P2s; a YES is turned into a concrete cover by
    taking a maximal packing's edges and attaching every leftover vertex
    to a covered neighbor.
    """
    if kd < 0:
        raise InputError("cover budget must be nonnegative")
    for comp in components_outside(g, ()):
        if len(comp) < 3:
            raise InputError(
                f"component {comp} has under 3 vertices; no total cover exists")
    n = g.n
    if 2 * n > 3 * kd:
        return False, None
    need = n - kd
    result = solve(Instance(g, max(0, need)))
    if not result.answer:
        return False, None
    packing = greedy_maximal(g, result.certificate)
    cover: set[tuple[int, int]] = set()
    for path in packing.paths:
        a = (min(path.e1, path.mid), max(path.e1, path.mid))
        b = (min(path.mid, path.e2), max(path.mid, path.e2))
        cover.update((a, b))
    leftover = classify_leftover(g, packing)
    for v in sorted(leftover.singletons):
        anchor = g.adj[v][0]  # all neighbors of a lone vertex are covered
        cover.add((min(v, anchor), max(v, anchor)))
    for u, v in leftover.pair_edges:
        # Attach the pair through whichever endpoint sees the packing.
        u_anchors = [x for x in g.adj[u] if x != v]
        if u_anchors:
            x, anchor = u, u_anchors[0]
        else:
            x, anchor = v, next(y for y in g.adj[v] if y != u)
        cover.add((u, v))
        cover.add((min(x, anchor), max(x, anchor)))
    if len(cover) > kd:
        raise ContractViolation(
            f"constructed cover has {len(cover)} edges, budget {kd}")
    return True, tuple(sorted(cover))
