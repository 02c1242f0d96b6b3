"""Benchmark runner: CSV of wall times and reduction statistics.

When an output location is known the same rows are also rendered as
matplotlib figures next to the CSV (solve time against instance size and
kernel size against the 7k line).
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from pathlib import Path

from .instances import Instance, gen_gnp, gen_planted
from .solver import kernelize, solve

CSV_FIELDS = ("kind", "n", "param", "seed", "k", "answer", "time_ms",
              "rule1", "rule2", "crowns", "augmentations",
              "kernel_n", "kernel_k")


@dataclass
class BenchRow:
    kind: str
    n: int
    param: str
    seed: int
    k: int
    answer: str
    time_ms: float
    rule1: int
    rule2: int
    crowns: int
    augmentations: int
    kernel_n: int
    kernel_k: int


def _measure(kind: str, param: str, graph, k: int, seed: int) -> BenchRow:
    start = time.perf_counter()
    result = solve(Instance(graph, k))
    elapsed = (time.perf_counter() - start) * 1000.0
    kr = kernelize(Instance(graph, k))
    kernel_n = 0 if kr.early_yes else kr.instance.graph.n
    kernel_k = 0 if kr.early_yes else kr.instance.k
    return BenchRow(kind, graph.n, param, seed, k,
                    "YES" if result.answer else "NO", round(elapsed, 3),
                    result.stats.rule1, result.stats.rule2,
                    result.stats.crowns, result.stats.augmentations,
                    kernel_n, kernel_k)


def run_bench(sizes: list[int], seed: int) -> list[BenchRow]:
    rows: list[BenchRow] = []
    for idx, n in enumerate(sizes):
        k = max(1, n // 3)
        for jdx, p in enumerate((0.15, 0.3, 0.5)):
            g = gen_gnp(n, p, seed + 13 * idx + jdx)
            rows.append(_measure("gnp", f"p={p}", g, k, seed + 13 * idx + jdx))
        if n >= 3:
            inst = gen_planted(k, n, seed + 13 * idx + 7)
            rows.append(_measure("planted", f"extra={n}", inst.graph, k,
                                 seed + 13 * idx + 7))
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow([getattr(r, f) for f in CSV_FIELDS])
    return buf.getvalue()


def render_figures(rows: list[BenchRow], out_dir: Path) -> list[Path]:
    """Write the two standard figures; returns the created paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir.mkdir(parents=True, exist_ok=True)
    created: list[Path] = []

    fig, ax = plt.subplots(figsize=(6, 4))
    for kind, marker in (("gnp", "o"), ("planted", "s")):
        xs = [r.n for r in rows if r.kind == kind]
        ys = [r.time_ms for r in rows if r.kind == kind]
        if xs:
            ax.plot(xs, ys, marker, label=kind, alpha=0.7)
    ax.set_xlabel("vertices")
    ax.set_ylabel("solve time [ms]")
    ax.set_yscale("log")
    ax.legend()
    ax.set_title("solve wall time")
    fig.tight_layout()
    path = out_dir / "bench_times.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    created.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    xs = [r.k for r in rows if r.kernel_n > 0]
    ys = [r.kernel_n for r in rows if r.kernel_n > 0]
    if xs:
        ax.plot(xs, ys, "o", alpha=0.7, label="kernel size")
        span = range(1, max(xs) + 1)
        ax.plot(span, [7 * k for k in span], "--", label="7k")
    ax.set_xlabel("parameter k")
    ax.set_ylabel("kernel vertices")
    ax.legend()
    ax.set_title("kernel size against the 7k bound")
    fig.tight_layout()
    path = out_dir / "bench_kernel.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    created.append(path)
    return created
