"""Acceptance suite: one test per criterion, each printing a PASS line.

Shares a single deterministic corpus (500 random graphs on 6..16 vertices
at three densities plus 200 planted instances) and memoizes the exact
oracle per graph so the whole file stays within its time budget.
"""

from itertools import combinations

import pytest

from p2pack import (Instance, apply_crown, binomial_growth_check,
                    ensure_valid_packing, enumerate_packings, kernelize,
                    max_packing_dp, min_total_edge_cover_bruteforce,
                    packing_from_endpoint_pairs, packing_from_midpoints,
                    solve, solve_total_edge_cover, to_dimacs, write_result)
from p2pack.cli import main as cli_main
from p2pack.verify import (check_cover_duality, check_kernel_bound,
                           check_oracle_agreement, cover_eligible,
                           default_corpus, reduced_packing)
from p2pack.oracle import extremal_family, verify_extremal_properties


@pytest.fixture(scope="module")
def corpus():
    instances = default_corpus()
    assert len(instances) == 700
    return instances


@pytest.fixture(scope="module")
def oracle(corpus):
    cache = {}

    def opt(g):
        key = hash(g)
        if key not in cache:
            cache[key] = max_packing_dp(g)[0]
        return cache[key]

    return opt


@pytest.fixture(scope="module")
def crown_log():
    """Crowns applied during criterion 1; criterion 9 replays them."""
    return []


def _report(criterion, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status} {detail}".rstrip())
    assert ok, f"{criterion} failed: {detail}"


def test_c01_oracle_agreement(corpus, oracle, crown_log):
    failures = []
    for ci in corpus:
        problems = check_oracle_agreement(ci.graph, oracle(ci.graph),
                                          crown_audit=crown_log)
        if ci.planted_k is not None and oracle(ci.graph) < ci.planted_k:
            problems.append("planted packing lost")
        if problems:
            failures.append(f"{ci.label}: {problems[0]}")
    _report("criterion-1 oracle agreement", not failures,
            failures[0] if failures else f"({len(corpus)} instances)")


def test_c02_kernel_bound(corpus):
    failures = []
    for ci in corpus:
        problems = check_kernel_bound(ci.graph)
        if problems:
            failures.append(f"{ci.label}: {problems[0]}")
    _report("criterion-2 kernel bound", not failures,
            failures[0] if failures else "")


@pytest.fixture(scope="module")
def extremal_reports(corpus, oracle):
    """Reuse-claim reports for every eligible n <= 12 instance."""
    reports = []
    for ci in corpus:
        g = ci.graph
        if g.n > 12:
            continue
        packing = reduced_packing(g)
        if packing.size < 1 or oracle(g) < packing.size + 1:
            continue
        families = extremal_family(g, packing)
        reports.append((ci.label, verify_extremal_properties(g, packing,
                                                             families)))
    assert reports, "corpus must contain eligible reuse-check instances"
    return reports


def test_c03_reuse_bound(extremal_reports):
    failures = [f"{label}: {rep.violations['reuse_bound'][0]}"
                for label, rep in extremal_reports
                if "reuse_bound" in rep.violations]
    _report("criterion-3 vertex reuse bound", not failures,
            failures[0] if failures else f"({len(extremal_reports)} instances)")


def test_c04_structural_claims(extremal_reports):
    failures = []
    for label, rep in extremal_reports:
        for check in ("min_overlap", "two_path_contact", "no_fold",
                      "cut_endpoint"):
            if check in rep.violations:
                failures.append(f"{label}: {check}: {rep.violations[check][0]}")
    _report("criterion-4 structural claims", not failures,
            failures[0] if failures else "")


def test_c05_binomial_growth():
    bad = [j for j in range(2, 201) if not binomial_growth_check(j)]
    _report("criterion-5 binomial growth", not bad,
            f"first failures {bad[:3]}" if bad else "(j = 2..200)")


@pytest.fixture(scope="module")
def cover_instances(corpus):
    eligible = [ci for ci in corpus if cover_eligible(ci.graph)]
    assert eligible, "corpus must contain cover-eligible instances"
    return eligible


def test_c06_gallai_and_dual_agreement(cover_instances, oracle):
    failures = []
    for ci in cover_instances:
        problems = check_cover_duality(ci.graph, oracle(ci.graph))
        if problems:
            failures.append(f"{ci.label}: {problems[0]}")
    _report("criterion-6 packing/cover duality", not failures,
            failures[0] if failures else f"({len(cover_instances)} instances)")


def test_c07_dual_kernel_rejection(cover_instances):
    failures = []
    for ci in cover_instances:
        g = ci.graph
        best, _ = min_total_edge_cover_bruteforce(g)
        for kd in range(g.m + 2):
            rejected = 2 * g.n > 3 * kd
            answer, _ = solve_total_edge_cover(g, kd)
            if rejected and answer:
                failures.append(f"{ci.label}: kd={kd} accepted past the bound")
            if rejected and best <= kd:
                failures.append(f"{ci.label}: kd={kd} rejection would be wrong")
    _report("criterion-7 dual kernel rejection", not failures,
            failures[0] if failures else "")


def test_c08_reconstruction_completeness(corpus):
    failures = []
    for ci in corpus:
        g = ci.graph
        if g.n > 10:
            continue
        for size in range(1, min(3, g.n // 3) + 1):
            realizable_mids = set()
            realizable_ends = set()
            for pk in enumerate_packings(g, size):
                realizable_mids.add(frozenset(q.mid for q in pk.paths))
                realizable_ends.add(
                    frozenset(frozenset((q.e1, q.e2)) for q in pk.paths))
            for mids in combinations(range(g.n), size):
                got = packing_from_midpoints(g, mids)
                if (got is not None) != (frozenset(mids) in realizable_mids):
                    failures.append(f"{ci.label}: midpoints {mids}")
                elif got is not None:
                    ensure_valid_packing(g, got)
            if size > 2:
                continue
            for pairs in combinations(combinations(range(g.n), 2), size):
                flat = [v for pr in pairs for v in pr]
                if len(set(flat)) != len(flat):
                    continue
                got = packing_from_endpoint_pairs(g, list(pairs))
                want = frozenset(frozenset(pr) for pr in pairs) in realizable_ends
                if (got is not None) != want:
                    failures.append(f"{ci.label}: pairs {pairs}")
                elif got is not None:
                    ensure_valid_packing(g, got)
    _report("criterion-8 reconstruction completeness", not failures,
            failures[0] if failures else "")


def test_c09_crown_soundness(crown_log, oracle):
    assert crown_log, "criterion 1 must run first and record crowns"
    failures = []
    for g_before, k, crown in crown_log:
        if g_before.n > 16:
            continue
        reduced, _ = apply_crown(Instance(g_before, k), crown)
        before = oracle(g_before) >= k
        after = oracle(reduced.graph) >= reduced.k
        if before != after:
            failures.append(f"{crown.kind} crown with |H|={len(crown.head)}")
    _report("criterion-9 crown soundness", not failures,
            failures[0] if failures else f"({len(crown_log)} crowns)")


def test_c10_determinism(corpus, capsys, monkeypatch):
    failures = []
    for ci in corpus[:40]:
        g = ci.graph
        k = max(1, g.n // 3)
        if write_result(solve(Instance(g, k))) != write_result(solve(Instance(g, k))):
            failures.append(f"{ci.label}: solve output differs")
        first = kernelize(Instance(g, k))
        second = kernelize(Instance(g, k))
        if first.early_yes != second.early_yes:
            failures.append(f"{ci.label}: kernel outcome differs")
        elif not first.early_yes and (to_dimacs(first.instance.graph)
                                      != to_dimacs(second.instance.graph)):
            failures.append(f"{ci.label}: kernel bytes differ")

    def cli_stdout(argv):
        cli_main(argv)
        return capsys.readouterr().out

    for argv in (["gen", "planted", "4", "3", "--seed", "11"],
                 ["gen", "gnp", "12", "0.3", "--seed", "11"]):
        if cli_stdout(argv) != cli_stdout(argv):
            failures.append(f"gen {argv} differs between runs")
    _report("criterion-10 determinism", not failures,
            failures[0] if failures else "")
