"""Instance parsing/serialization, result formatting and test corpora.

External text formats are line oriented UTF-8: the DIMACS edge format for
graphs (1-based labels) and a key-value result format with `p2` lines for
certificates.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from .errors import InputError, ParseError
from .graph import Graph, Packing

logger = logging.getLogger("p2pack")


@dataclass(frozen=True)
class Instance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise InputError("parameter k must be nonnegative")


@dataclass
class SolveStats:
    rule1: int = 0
    rule2: int = 0
    crowns: int = 0
    augmentations: int = 0


@dataclass
class SolveResult:
    answer: bool
    k: int
    certificate: Packing | None
    kernel_trace: tuple[str, ...]
    stats: SolveStats = field(default_factory=SolveStats)


def parse_dimacs(data: str | bytes) -> Graph:
    """Parse a DIMACS edge-format graph.

    Duplicate edge lines and both orientations are tolerated and
    deduplicated; if the deduplicated edge count differs from the declared
    one, the actual count wins and a warning is logged.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    n: int | None = None
    declared_m: int | None = None
    raw_edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer counts in problem line", lineno)
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in problem line", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("non-integer vertex label", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex label out of [1, {n}]", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            raw_edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("no 'p edge' line found")
    g = Graph.from_edges(n, raw_edges)
    if len(raw_edges) != g.m:
        logger.warning("dropped %d duplicate edge line(s)", len(raw_edges) - g.m)
    if declared_m != g.m:
        logger.warning("declared m=%d but graph has %d edges; using %d",
                       declared_m, g.m, g.m)
    return g


def to_dimacs(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or []]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def gen_planted(k: int, extra_edges: int, rng_seed: int) -> Instance:
    """Instance on 3k vertices with k planted disjoint P2s plus noise edges.

    Vertices 3i, 3i+1, 3i+2 form planted path i. Extra edges are drawn
    uniformly without replacement from the non-planted pairs, so the
    planted packing survives and the answer for parameter k is YES by
    construction. Deterministic for a fixed seed.
    """
    if k < 1:
        raise InputError("planted instances need k >= 1")
    if extra_edges < 0:
        raise InputError("extra_edges must be nonnegative")
    n = 3 * k
    planted = set()
    for i in range(k):
        planted.add((3 * i, 3 * i + 1))
        planted.add((3 * i + 1, 3 * i + 2))
    capacity = n * (n - 1) // 2 - len(planted)
    if extra_edges > capacity:
        raise InputError(f"extra_edges={extra_edges} exceeds capacity {capacity}")
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n)
                  if (u, v) not in planted]
    rng = random.Random(rng_seed)
    extra = rng.sample(candidates, extra_edges)
    g = Graph.from_edges(n, sorted(planted) + extra)
    return Instance(g, k)


def gen_gnp(n: int, p: float, rng_seed: int) -> Graph:
    """Erdos-Renyi G(n, p) sample, deterministic per seed."""
    if n < 0:
        raise InputError("n must be nonnegative")
    if not (0.0 <= p <= 1.0):
        raise InputError("p must lie in [0, 1]")
    rng = random.Random(rng_seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def write_result(r: SolveResult) -> str:
    """Serialize a result: key-value lines, then `p2` certificate lines."""
    lines = [f"answer {'YES' if r.answer else 'NO'}", f"k {r.k}"]
    if r.answer and r.certificate is not None:
        lines.append(f"packing_size {r.certificate.size}")
    lines.append(f"rule1 {r.stats.rule1}")
    lines.append(f"rule2 {r.stats.rule2}")
    lines.append(f"crowns {r.stats.crowns}")
    lines.append(f"augmentations {r.stats.augmentations}")
    lines.extend(f"event {e}" for e in r.kernel_trace)
    if r.answer and r.certificate is not None:
        for path in r.certificate.paths:
            lines.append(f"p2 {path.e1 + 1} {path.mid + 1} {path.e2 + 1}")
    return "\n".join(lines) + "\n"
