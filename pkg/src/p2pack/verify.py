"""Deterministic corpora and the cross-checking property suite.

The suite replays the solver against the brute-force lab on every corpus
instance: exact agreement for all feasible k, the kernel size bound, the
vertex-reuse claims, and the packing/cover duality. It is used both by
the `verify` CLI subcommand and by the acceptance tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import InputError
from .graph import Graph, Packing, components_outside, ensure_valid_packing
from .instances import Instance, gen_gnp, gen_planted
from .oracle import (max_packing_dp, min_total_edge_cover_bruteforce,
                     verify_extremal_properties)
from .reduce import greedy_maximal, reduce_exhaustive
from .solver import kernelize, solve, solve_total_edge_cover

GNP_COUNT = 500
PLANTED_COUNT = 200
GNP_SIZES = tuple(range(6, 17))
GNP_PROBS = (0.15, 0.3, 0.5)


@dataclass(frozen=True)
class CorpusInstance:
    label: str
    graph: Graph
    planted_k: int | None = None


def default_corpus() -> list[CorpusInstance]:
    """500 G(n, p) graphs plus 200 planted instances, fully deterministic."""
    out: list[CorpusInstance] = []
    for i in range(GNP_COUNT):
        n = GNP_SIZES[i % len(GNP_SIZES)]
        p = GNP_PROBS[(i // len(GNP_SIZES)) % len(GNP_PROBS)]
        seed = 1000 + i
        out.append(CorpusInstance(f"gnp-n{n}-p{p}-s{seed}", gen_gnp(n, p, seed)))
    for i in range(PLANTED_COUNT):
        k = 1 + (i % 4)
        extra = (i // 4) % (2 * k)  # capacity for k=1 is a single extra edge
        seed = 2000 + i
        inst = gen_planted(k, extra, seed)
        out.append(CorpusInstance(f"planted-k{k}-x{extra}-s{seed}",
                                  inst.graph, planted_k=k))
    return out


def quick_corpus() -> list[CorpusInstance]:
    """A small prefix-style corpus for smoke runs."""
    out: list[CorpusInstance] = []
    for i in range(40):
        n = GNP_SIZES[i % len(GNP_SIZES)]
        p = GNP_PROBS[i % len(GNP_PROBS)]
        seed = 500 + i
        out.append(CorpusInstance(f"gnp-n{n}-p{p}-s{seed}", gen_gnp(n, p, seed)))
    for i in range(20):
        k = 1 + (i % 3)
        extra = i % (2 * k)
        inst = gen_planted(k, extra, 700 + i)
        out.append(CorpusInstance(f"planted-k{k}-x{extra}-s{700 + i}",
                                  inst.graph, planted_k=k))
    return out


def get_corpus(name: str) -> list[CorpusInstance]:
    if name == "default":
        return default_corpus()
    if name == "quick":
        return quick_corpus()
    raise InputError(f"unknown corpus {name!r}; use 'default' or 'quick'")


def check_oracle_agreement(g: Graph, opt: int,
                           crown_audit: list | None = None) -> list[str]:
    """solve must answer exactly opt >= k for every feasible k."""
    problems = []
    for k in range(1, g.n // 3 + 1):
        result = solve(Instance(g, k), crown_audit=crown_audit)
        expected = opt >= k
        if result.answer != expected:
            problems.append(f"k={k}: solver says {result.answer}, oracle {expected}")
            continue
        if result.answer:
            try:
                ensure_valid_packing(g, result.certificate)
            except Exception as exc:  # surfaced as a violation, not a crash
                problems.append(f"k={k}: bad certificate: {exc}")
                continue
            if result.certificate.size < k:
                problems.append(f"k={k}: certificate too small")
    return problems


def check_kernel_bound(g: Graph) -> list[str]:
    """Kernelization must shrink below 7k'-8 vertices or certify YES."""
    problems = []
    for k in range(1, g.n // 3 + 2):
        kr = kernelize(Instance(g, k))
        if kr.early_yes:
            try:
                ensure_valid_packing(g, kr.certificate)
            except Exception as exc:
                problems.append(f"k={k}: bad early certificate: {exc}")
                continue
            if kr.certificate.size < k:
                problems.append(f"k={k}: early certificate below k")
            continue
        k_ = kr.instance.k
        bound = max(0, 7 * k_ - 8)
        if kr.internal_packing_size >= k_:
            problems.append(f"k={k}: internal packing not below k'")
        if kr.instance.graph.n > bound:
            problems.append(
                f"k={k}: kernel has {kr.instance.graph.n} vertices > {bound}")
    return problems


def reduced_packing(g: Graph) -> Packing:
    """The canonical rule-exhausted maximal packing used by the suite."""
    packing = greedy_maximal(g, Packing.empty())
    packing, _ = reduce_exhaustive(g, packing)
    return packing


def check_extremal(g: Graph, opt: int) -> dict[str, list[str]] | None:
    """Reuse-claim checks; None when the instance is out of scope."""
    if g.n > 12:
        return None
    packing = reduced_packing(g)
    if packing.size < 1 or opt < packing.size + 1:
        return None
    report = verify_extremal_properties(g, packing)
    return report.violations


def cover_eligible(g: Graph) -> bool:
    return g.m <= 20 and all(len(c) >= 3 for c in components_outside(g, ()))


def check_cover_duality(g: Graph, opt: int) -> list[str]:
    """Packing/cover identity plus full agreement of the dual solver."""
    problems = []
    cover_size, _cover = min_total_edge_cover_bruteforce(g)
    if opt + cover_size != g.n:
        problems.append(
            f"packing {opt} + cover {cover_size} != n {g.n}")
    for kd in range(0, g.m + 2):
        answer, cover = solve_total_edge_cover(g, kd)
        expected = cover_size <= kd
        if answer != expected:
            problems.append(f"kd={kd}: dual solver {answer}, brute {expected}")
            continue
        if 2 * g.n > 3 * kd and answer:
            problems.append(f"kd={kd}: rejection bound missed")
        if answer:
            problems.extend(_cover_problems(g, cover, kd))
    return problems


def _cover_problems(g: Graph, cover, kd: int) -> list[str]:
    problems = []
    if len(cover) > kd:
        problems.append(f"kd={kd}: emitted cover too large")
    covered = set()
    for u, v in cover:
        if not g.has_edge(u, v):
            problems.append(f"kd={kd}: cover uses non-edge ({u}, {v})")
        covered.update((u, v))
    if covered != set(range(g.n)):
        problems.append(f"kd={kd}: cover misses vertices")
    sub = Graph.from_edges(g.n, cover)
    for comp in components_outside(sub, ()):
        if len(comp) == 1:
            continue  # counted via the coverage check above
        comp_edges = sum(1 for u, v in cover if u in comp and v in comp)
        if comp_edges < 2:
            problems.append(f"kd={kd}: cover component {comp} has < 2 edges")
    return problems


def run_suite(corpus: Iterable[CorpusInstance], oracle_cap: int = 20,
              emit: Callable[[str], None] | None = None) -> tuple[list[str], int]:
    """Run all suite groups; returns (lines, violation count)."""
    lines: list[str] = []
    violations = 0

    def put(line: str, bad: bool) -> None:
        nonlocal violations
        if bad:
            violations += 1
        lines.append(line)
        if emit is not None:
            emit(line)

    for ci in corpus:
        g = ci.graph
        opt, witness = max_packing_dp(g, cap=oracle_cap)
        ensure_valid_packing(g, witness)
        if ci.planted_k is not None and opt < ci.planted_k:
            put(f"{ci.label} planted_floor VIOLATION opt={opt}", True)

        problems = check_oracle_agreement(g, opt)
        put(f"{ci.label} oracle_agreement " +
            ("ok" if not problems else f"VIOLATION {problems[0]}"), bool(problems))

        problems = check_kernel_bound(g)
        put(f"{ci.label} kernel_bound " +
            ("ok" if not problems else f"VIOLATION {problems[0]}"), bool(problems))

        extremal = check_extremal(g, opt)
        if extremal is None:
            put(f"{ci.label} reuse_claims skipped", False)
        else:
            for check in ("min_overlap", "two_path_contact", "no_fold",
                          "cut_endpoint", "reuse_bound"):
                bad = extremal.get(check, [])
                put(f"{ci.label} {check} " +
                    ("ok" if not bad else f"VIOLATION {bad[0]}"), bool(bad))

        if cover_eligible(g):
            problems = check_cover_duality(g, opt)
            put(f"{ci.label} cover_duality " +
                ("ok" if not problems else f"VIOLATION {problems[0]}"),
                bool(problems))
        else:
            put(f"{ci.label} cover_duality skipped", False)
    return lines, violations
