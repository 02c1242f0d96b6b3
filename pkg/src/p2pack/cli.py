"""Command-line front end: solve, kernelize, oracle, gen, verify, bench.

Exit codes: 0 success (YES for solve), 1 NO, 2 usage or input error,
3 oracle size-cap refusal.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from .errors import InputError, SizeCapExceeded
from .instances import Instance, gen_gnp, gen_planted, parse_dimacs, to_dimacs, write_result
from .oracle import (DEFAULT_ORACLE_CAP, max_packing_dp,
                     min_total_edge_cover_bruteforce)
from .solver import kernelize, solve
from .verify import get_corpus, run_suite


def _oracle_cap() -> int:
    raw = os.environ.get("P2PACK_ORACLE_CAP")
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"P2PACK_ORACLE_CAP must be an integer, got {raw!r}")


def _read_graph(path: str | None):
    if path is None or path == "-":
        return parse_dimacs(sys.stdin.read())
    return parse_dimacs(Path(path).read_text())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p2pack",
        description="Exact solver for vertex-disjoint P2-packing and its "
                    "total edge cover dual.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_solve = sub.add_parser("solve", help="decide k disjoint P2s")
    p_solve.add_argument("-k", type=int, required=True)
    p_solve.add_argument("--file", help="DIMACS input (default: stdin)")

    p_kern = sub.add_parser("kernelize", help="emit the reduced instance")
    p_kern.add_argument("-k", type=int, required=True)
    p_kern.add_argument("--file")

    p_oracle = sub.add_parser("oracle", help="exact brute-force answers")
    p_oracle.add_argument("--tec", action="store_true",
                          help="minimum total edge cover instead of max packing")
    p_oracle.add_argument("--file")

    p_gen = sub.add_parser("gen", help="generate instances as DIMACS")
    gen_sub = p_gen.add_subparsers(dest="gen_kind", required=True)
    g_planted = gen_sub.add_parser("planted")
    g_planted.add_argument("k", type=int)
    g_planted.add_argument("extra", type=int)
    g_planted.add_argument("--seed", type=int, required=True)
    g_gnp = gen_sub.add_parser("gnp")
    g_gnp.add_argument("n", type=int)
    g_gnp.add_argument("p", type=float)
    g_gnp.add_argument("--seed", type=int, required=True)

    p_verify = sub.add_parser("verify", help="run the cross-checking suite")
    p_verify.add_argument("--corpus", default="default",
                          help="'default' (full) or 'quick'")

    p_bench = sub.add_parser("bench", help="time solves, emit CSV and figures")
    p_bench.add_argument("--sizes", required=True,
                         help="comma-separated vertex counts, e.g. 9,12,15")
    p_bench.add_argument("--seed", type=int, required=True)
    p_bench.add_argument("--out", help="CSV path; figures land next to it")
    p_bench.add_argument("--plot-dir", help="explicit directory for figures")
    return parser


def _cmd_solve(args) -> int:
    g = _read_graph(args.file)
    result = solve(Instance(g, args.k))
    sys.stdout.write(write_result(result))
    return 0 if result.answer else 1


def _cmd_kernelize(args) -> int:
    g = _read_graph(args.file)
    kr = kernelize(Instance(g, args.k))
    comments = [f"kernelize input n={g.n} m={g.m} k={args.k}"]
    comments += [f"event {e}" for e in kr.kernel_trace]
    if kr.early_yes:
        comments.append(f"early_yes true certificate_size={kr.certificate.size}")
        comments.append("k 0")
        sys.stdout.write(to_dimacs(type(g).from_edges(0, []), comments))
    else:
        comments.append("early_yes false")
        comments.append(f"k {kr.instance.k}")
        comments.append(f"internal_packing {kr.internal_packing_size}")
        sys.stdout.write(to_dimacs(kr.instance.graph, comments))
    return 0


def _cmd_oracle(args) -> int:
    g = _read_graph(args.file)
    if args.tec:
        size, cover = min_total_edge_cover_bruteforce(g)
        sys.stdout.write(f"min_total_edge_cover {size}\n")
        for u, v in cover:
            sys.stdout.write(f"edge {u + 1} {v + 1}\n")
    else:
        size, witness = max_packing_dp(g, cap=_oracle_cap())
        sys.stdout.write(f"max_packing {size}\n")
        for path in witness.paths:
            sys.stdout.write(f"p2 {path.e1 + 1} {path.mid + 1} {path.e2 + 1}\n")
    return 0


def _cmd_gen(args) -> int:
    if args.gen_kind == "planted":
        inst = gen_planted(args.k, args.extra, args.seed)
        text = to_dimacs(inst.graph, [f"planted k {inst.k} seed {args.seed}"])
    else:
        g = gen_gnp(args.n, args.p, args.seed)
        text = to_dimacs(g, [f"gnp n {args.n} p {args.p} seed {args.seed}"])
    sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    corpus = get_corpus(args.corpus)
    _lines, violations = run_suite(corpus, oracle_cap=_oracle_cap(),
                                   emit=lambda line: print(line))
    print(f"violations {violations}")
    return 0 if violations == 0 else 1


def _cmd_bench(args) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    except ValueError:
        raise InputError(f"--sizes expects integers, got {args.sizes!r}")
    rows = bench_mod.run_bench(sizes, args.seed)
    csv_text = bench_mod.rows_to_csv(rows)
    plot_dir = None
    if args.out:
        out_path = Path(args.out)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(csv_text)
        plot_dir = out_path.parent
    else:
        sys.stdout.write(csv_text)
    if args.plot_dir:
        plot_dir = Path(args.plot_dir)
    if plot_dir is not None:
        for path in bench_mod.render_figures(rows, plot_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0


_DISPATCH = {
    "solve": _cmd_solve,
    "kernelize": _cmd_kernelize,
    "oracle": _cmd_oracle,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING,
                        format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.cmd](args)
    except SizeCapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
