"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are also collected into the pytest terminal summary (see
conftest.py), so ``pytest tests/test_acceptance.py`` shows them without -s.
Criteria 5 and 9 read the n = 8 and n = 9 corpora, generated on first use
with pynauty and cached under ~/.cache/packnum.
"""

import io
import json
import time

import pytest

from oracles import alpha_by_enumeration, chi_rho_by_assignment
from packnum.cli import main
from packnum.enumeration import connected_corpus, enumerate_connected, enumerate_connected_upto
from packnum.families import complete_bipartite, complete_graph, cycle_graph, g_k_ell, h_class, k_n_minus_star, path_graph, star_graph
from packnum.invariants import independence_number
from packnum.mycielski import alpha_mycielskian, mycielski_power, mycielski_power_bound, mycielskian
from packnum.packing import packing_chromatic_number
from packnum.realizability import check_theorems, realize_higher, search_counterexample, triple_of
from packnum.results import Status

RESULTS: dict[int, str] = {}


def report(number: int, ok: bool, detail: str, started: float) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail} ({time.time() - started:.1f}s)"
    RESULTS[number] = line
    print(line)
    assert ok, line


def rho(g):
    return packing_chromatic_number(g)[0]


def M(g):
    return mycielskian(g).graph


def test_criterion_01_golden_values():
    t0 = time.time()
    cases = []
    cases += [(f"chi_rho(K_{n})", rho(complete_graph(n)), n) for n in range(1, 9)]
    cases.append(("chi_rho(C_5)", rho(cycle_graph(5)), 4))
    cases.append(("triple(C_5)", triple_of(cycle_graph(5)).values(), (2, 3, 4)))
    cases.append(("chi_rho(P_4)", rho(path_graph(4)), 3))
    cases.append(("chi_rho(M(P_4))", rho(M(path_graph(4))), 5))
    for n in range(1, 7):
        cases.append((f"chi_rho(K_1,{n})", rho(star_graph(n)), 2))
        cases.append((f"chi_rho(M(K_1,{n}))", rho(M(star_graph(n))), 4))
    cases += [(f"chi_rho(M(K_{n}))", rho(M(complete_graph(n))), n + 2) for n in range(2, 7)]
    for t in (2, 3, 4):
        g = complete_bipartite(t, t)
        cases.append((f"K_{t},{t} gap", rho(M(g)) - rho(g), t + 1))
    for k in (3, 4):
        for ell in (3, 4):
            m = M(g_k_ell(k, ell))
            cases.append((f"alpha(M(G_{k},{ell}))", independence_number(m), 2 * ell + k - 1))
            cases.append((f"chi_rho(M(G_{k},{ell}))", rho(m), k + 3))
    for r in (3, 4, 5):
        for s in (2, 3):
            cases.append((f"chi_rho(H_{r},{s})", rho(h_class(r, s)), r + s - 2))
    for n in range(4, 9):
        for r in range(1, n - 1):
            cases.append((f"triple(K_{n}-K_1,{r})", triple_of(k_n_minus_star(n, r)).values(), (n - 1,) * 3))
    cases.append(("triple(M^2(K_2))", triple_of(mycielski_power(complete_graph(2), 2)).values(), (2, 4, 7)))
    bad = [f"{name}: got {got}, want {want}" for name, got, want in cases if got != want]
    ok = not bad and time.time() - t0 < 60
    report(1, ok, f"{len(cases)} golden values, mismatches: {bad or 'none'}", t0)


def test_criterion_02_alpha_mycielskian_oracle():
    t0 = time.time()
    corpus = list(enumerate_connected_upto(7))
    counts = [sum(1 for _ in enumerate_connected(n)) for n in range(1, 8)]
    mismatches = [g for g in corpus if alpha_mycielskian(g).value != alpha_by_enumeration(M(g))]
    ok = len(corpus) == 996 and counts[3:] == [6, 21, 112, 853] and not mismatches and time.time() - t0 <= 300
    report(2, ok, f"{len(corpus)} graphs, {len(mismatches)} mismatches", t0)


def test_criterion_03_chi_rho_mycielskian_gap():
    t0 = time.time()
    corpus = list(enumerate_connected_upto(6, min_n=2))
    (r,) = check_theorems(corpus, ["T2.4"])
    ok = r.status == Status.VERIFIED_ON_CORPUS and not r.violations and not r.skipped and r.applicable == len(corpus)
    ok = ok and time.time() - t0 <= 600
    report(3, ok, f"{r.applicable} graphs, {len(r.violations)} violations, {len(r.skipped)} undecided", t0)


def test_criterion_04_bound_suite():
    t0 = time.time()
    corpus = list(enumerate_connected_upto(7))
    results = check_theorems(corpus, ["P1.1", "P4.1", "C2.2", "P2.3", "P2.5", "C2.7"])
    bad = [r.theorem_id for r in results if r.violations or r.skipped or r.status != Status.VERIFIED_ON_CORPUS]
    detail = ", ".join(f"{r.theorem_id} {r.applicable}/{r.scanned}" for r in results)
    report(4, not bad, f"{detail}; failing: {bad or 'none'}", t0)


def test_criterion_05_chi_equals_chi_rho_scan():
    t0 = time.time()
    corpus = connected_corpus(9)
    (r,) = check_theorems(corpus, ["T3.3"], jobs=4)
    ok = r.status == Status.VERIFIED_ON_CORPUS and not r.violations and not r.skipped
    ok = ok and r.scanned == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117 + 261080 and time.time() - t0 <= 1800
    report(5, ok, f"{r.scanned} graphs, {r.applicable} with chi >= 3, "
                  f"{len(r.violations)} violations, {len(r.skipped)} undecided", t0)


def test_criterion_06_solver_oracle():
    t0 = time.time()
    corpus = list(enumerate_connected_upto(6))
    mismatches = []
    for g in corpus:
        expected = chi_rho_by_assignment(g)
        got = {packing_chromatic_number(g, use_bounds=b)[0] for b in (False, True)}
        if got != {expected}:
            mismatches.append(g)
    report(6, not mismatches, f"{len(corpus)} graphs, {len(mismatches)} mismatches", t0)


def test_criterion_07_realize_higher():
    t0 = time.time()
    got = {}
    h = cycle_graph(5)
    for c in (5, 6, 7):
        h = realize_higher(h, c)
        got[c] = triple_of(h).values()
    ok = all(got[c] == (2, 3, c) for c in (5, 6, 7))
    report(7, ok, f"triples {sorted(got.values())}", t0)


def test_criterion_08_power_bound():
    t0 = time.time()
    rows = []
    for n, k in [(2, 1), (2, 2), (3, 1), (4, 1), (5, 1)]:
        rows.append((n, k, rho(mycielski_power(complete_graph(n), k)), mycielski_power_bound(n, k)))
    ok = all(value == bound for _, _, value, bound in rows)
    report(8, ok, " ".join(f"(n={n},k={k}) {v}<={b}" for n, k, v, b in rows), t0)


def test_criterion_09_conjecture_scan():
    t0 = time.time()
    res = search_counterexample((3, 5, 6), connected_corpus(8))
    ok = res.witness is None and not res.undecided
    report(9, ok, f"pattern (3,5,6) over {res.scanned} graphs: witness {res.witness or 'NONE'}, "
                  f"undecided {len(res.undecided)}", t0)


def test_criterion_10_determinism():
    t0 = time.time()
    outputs = []
    for jobs in ("1", "8"):
        out = io.StringIO()
        code = main(["scan", "--check", "all", "--max-n", "6", "--jobs", jobs], out)
        assert code == 0
        outputs.append(out.getvalue())
    json.loads(outputs[0])
    report(10, outputs[0] == outputs[1], f"jobs 1 vs 8: {len(outputs[0])} bytes, identical={outputs[0] == outputs[1]}", t0)
