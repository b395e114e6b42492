"""Realizable (omega, chi, chi_rho) triples: witnesses, corpus checks, m(a, b).

Corpus checks never treat a statement as proved.  A statement that holds on
every applicable corpus graph is reported VERIFIED_ON_CORPUS; a graph whose
solver ran out of budget is quarantined as undecided.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

from .budget import Budget, BudgetExceeded
from .families import H_RECOGNITION_MAX_ORDER, is_h_class
from .graph import Graph, append_leaves
from .graph6 import emit_graph6, parse_graph6
from .invariants import chromatic_number, clique_number, independence_number, is_k_critical
from .mycielski import alpha_mycielskian, mycielskian
from .packing import packing_chromatic_number
from .results import Status, TheoremCheckResult


@dataclass(frozen=True)
class Triple:
    a: int  # clique number
    b: int  # chromatic number
    c: int  # packing chromatic number
    witness: str | None = None  # graph6

    def values(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "witness": self.witness}


class GraphFacts:
    """Lazily computed exact invariants of one graph, sharing a node budget.

    ``chi_rho`` is always the plain exact search (no bound shortcuts), so the
    checks built on it never assume the bounds they test.
    """

    def __init__(self, g: Graph, budget: int | None = None):
        self.g = g
        self.budget_limit = budget

    def _budget(self) -> Budget:
        return Budget(self.budget_limit)

    @cached_property
    def graph6(self) -> str:
        return emit_graph6(self.g)

    @cached_property
    def omega(self) -> int:
        return clique_number(self.g, self._budget())

    @cached_property
    def chi(self) -> int:
        return chromatic_number(self.g, self._budget())

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g, self._budget())

    @cached_property
    def chi_rho(self) -> int:
        return packing_chromatic_number(self.g, self._budget(), use_bounds=False)[0]

    @cached_property
    def diameter(self) -> float:
        return self.g.diameter

    @cached_property
    def m(self) -> Graph:
        return mycielskian(self.g).graph

    @cached_property
    def alpha_m(self) -> int:
        return independence_number(self.m, self._budget())

    @cached_property
    def alpha_m_formula(self) -> int:
        return alpha_mycielskian(self.g, self._budget()).value

    @cached_property
    def chi_rho_m(self) -> int:
        return packing_chromatic_number(self.m, self._budget(), use_bounds=False)[0]

    def triple(self) -> Triple:
        return Triple(self.omega, self.chi, self.chi_rho, self.graph6)


def triple_of(g: Graph, budget: int | None = None) -> Triple:
    """Exact (omega, chi, chi_rho) of ``g`` with ``g`` attached as witness."""
    return GraphFacts(g, budget).triple()


def realize_higher(g: Graph, target_c: int, budget: int | None = None) -> Graph:
    """Grow ``g`` by pendant leaves until chi_rho equals ``target_c`` exactly.

    Each round snapshots the current graph H (chi_rho = c) and walks its
    vertices in index order, adding up to c leaves to each one at a time and
    re-solving after every leaf.  A leaf raises chi_rho by at most one, and
    c leaves on every vertex of H force an increase, so every round ends at
    exactly c + 1.  Leaves never change omega or chi when chi >= 2.
    """
    facts = GraphFacts(g, budget)
    a, b, c = facts.omega, facts.chi, facts.chi_rho
    if b < 2:
        raise ValueError("need chi >= 2 so appended leaves keep chi fixed")
    if target_c < c:
        raise ValueError(f"target {target_c} is below the current packing chromatic number {c}")
    h = g
    while c < target_c:
        snapshot = h.n
        raised = False
        for v in range(snapshot):
            for _ in range(c):
                h = append_leaves(h, [(v, 1)])
                rho = packing_chromatic_number(h, Budget(budget), use_bounds=False)[0]
                if rho > c:
                    assert rho == c + 1
                    c = rho
                    raised = True
                    break
            if raised:
                break
        if not raised:
            raise AssertionError("leaf augmentation failed to raise chi_rho")
    return h


# corpus checks

ALL_CHECKS = (
    "CHAIN", "P1.1", "P4.1", "T4.2",
    "T2.1", "C2.2", "P2.3", "T2.4", "P2.5", "C2.7",
    "T3.3", "T3.4", "T3.6", "S222",
)

# per-graph verdicts
PASS, FAIL, NA = "pass", "fail", "na"


def _chk_chain(f: GraphFacts):
    ok = f.omega <= f.chi <= f.chi_rho
    return (PASS if ok else FAIL), {"omega": f.omega, "chi": f.chi, "chi_rho": f.chi_rho}


def _chk_p11(f: GraphFacts):
    bound = f.g.n - f.alpha + 1
    vals = {"chi_rho": f.chi_rho, "n_minus_alpha_plus_1": bound, "diameter": _diam(f.diameter)}
    ok = f.chi_rho <= bound and (f.diameter != 2 or f.chi_rho == bound)
    return (PASS if ok else FAIL), vals


def _chk_p41(f: GraphFacts):
    bound = f.g.max_degree - f.alpha + 2
    vals = {"chi_rho": f.chi_rho, "delta_minus_alpha_plus_2": bound}
    ok = f.chi_rho >= bound and (f.g.max_degree != f.g.n - 1 or f.chi_rho == bound)
    return (PASS if ok else FAIL), vals


def _chk_t42(f: GraphFacts):
    if f.alpha != 2:
        return NA, {}
    if f.g.n > H_RECOGNITION_MAX_ORDER:
        return NA, {"reason": "order above class H recognition limit"}
    equality = f.chi_rho == f.g.max_degree - f.alpha + 2
    dominating = f.g.max_degree == f.g.n - 1
    member = is_h_class(f.g)
    vals = {"chi_rho": f.chi_rho, "equality": equality, "dominating_vertex": dominating, "in_class_h": member}
    return (PASS if equality == (dominating or member) else FAIL), vals


def _chk_t21(f: GraphFacts):
    if f.g.n < 2:
        return NA, {}
    vals = {"formula": f.alpha_m_formula, "alpha_m": f.alpha_m}
    return (PASS if f.alpha_m_formula == f.alpha_m else FAIL), vals


def _chk_c22(f: GraphFacts):
    if f.g.n < 2:
        return NA, {}
    n, a = f.g.n, f.alpha
    vals = {"alpha": a, "alpha_m": f.alpha_m, "n": n}
    return (PASS if 2 * a <= f.alpha_m <= n + a - 1 else FAIL), vals


def _chk_p23(f: GraphFacts):
    if f.g.n < 2 or f.g.is_complete() or f.g.is_star():
        return NA, {}
    n, a = f.g.n, f.alpha
    vals = {"alpha": a, "alpha_m": f.alpha_m, "n": n}
    return (PASS if f.alpha_m <= n + a - 2 else FAIL), vals


def _chk_t24(f: GraphFacts):
    if f.g.n < 2:
        return NA, {}
    vals = {"chi_rho": f.chi_rho, "chi_rho_m": f.chi_rho_m}
    ok = f.chi_rho_m >= f.chi_rho + 2 and (not f.g.is_complete() or f.chi_rho_m == f.chi_rho + 2)
    return (PASS if ok else FAIL), vals


def _chk_p25(f: GraphFacts):
    if f.g.n < 2:
        return NA, {}
    n, a = f.g.n, f.alpha
    bound = min(n + 2, 2 * (n - a + 1))
    vals = {"chi_rho_m": f.chi_rho_m, "bound": bound}
    return (PASS if f.chi_rho_m <= bound else FAIL), vals


def _chk_c27(f: GraphFacts):
    if f.diameter != 2:
        return NA, {}
    expected = 2 * f.g.n - f.alpha_m + 2
    diam_m = f.m.diameter
    vals = {"chi_rho_m": f.chi_rho_m, "formula": expected, "diameter_m": _diam(diam_m)}
    return (PASS if diam_m == 2 and f.chi_rho_m == expected else FAIL), vals


def _chk_t33(f: GraphFacts):
    vals = {"omega": f.omega, "chi": f.chi, "chi_rho": f.chi_rho}
    if f.chi < 3:
        return NA, vals
    if f.chi_rho == f.chi and f.omega != f.chi:
        return FAIL, vals
    return PASS, vals


def _chk_t34(f: GraphFacts):
    if f.omega != 2 or f.chi < 4:
        return NA, {}
    vals = {"triple": [f.omega, f.chi, f.chi_rho]}
    return (FAIL if f.chi_rho == f.chi + 1 else PASS), vals


def _chk_t36(f: GraphFacts):
    if f.omega != 2 or f.chi < 4:
        return NA, {}
    vals = {"triple": [f.omega, f.chi, f.chi_rho]}
    return (FAIL if f.chi_rho == f.chi + 2 else PASS), vals


def _chk_s222(f: GraphFacts):
    star = f.g.is_star()
    if not star and (f.omega != 2 or f.chi != 2):
        return NA, {}
    triple = (f.omega, f.chi, f.chi_rho)
    vals = {"triple": list(triple), "is_star": star}
    return (PASS if star == (triple == (2, 2, 2)) else FAIL), vals


_CHECKS: dict[str, Callable[[GraphFacts], tuple[str, dict]]] = {
    "CHAIN": _chk_chain,
    "P1.1": _chk_p11,
    "P4.1": _chk_p41,
    "T4.2": _chk_t42,
    "T2.1": _chk_t21,
    "C2.2": _chk_c22,
    "P2.3": _chk_p23,
    "T2.4": _chk_t24,
    "P2.5": _chk_p25,
    "C2.7": _chk_c27,
    "T3.3": _chk_t33,
    "T3.4": _chk_t34,
    "T3.6": _chk_t36,
    "S222": _chk_s222,
}


def _diam(d: float):
    return None if d == float("inf") else int(d)


def resolve_checks(checks: str | Sequence[str] | None) -> tuple[str, ...]:
    if checks is None or checks == "all":
        return ALL_CHECKS
    if isinstance(checks, str):
        checks = [c.strip() for c in checks.split(",") if c.strip()]
    if "all" in checks:
        return ALL_CHECKS
    unknown = [c for c in checks if c not in _CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s) {', '.join(unknown)}; known: {', '.join(ALL_CHECKS)}")
    return tuple(checks)


@dataclass
class GraphVerdict:
    """Outcome of every requested check on one corpus graph."""

    index: int
    graph6: str
    connected: bool
    outcomes: dict[str, tuple[str, dict]] = field(default_factory=dict)
    undecided: dict[str, str] = field(default_factory=dict)
    triple: tuple[int, int, int] | None = None


def evaluate_graph(index: int, g: Graph, checks: Sequence[str], budget: int | None, want_triple: bool = False) -> GraphVerdict:
    f = GraphFacts(g, budget)
    verdict = GraphVerdict(index, f.graph6, g.is_connected())
    if not verdict.connected:
        return verdict
    for cid in checks:
        try:
            verdict.outcomes[cid] = _CHECKS[cid](f)
        except BudgetExceeded as exc:
            verdict.undecided[cid] = str(exc)
    if want_triple and g.n >= 2:
        try:
            verdict.triple = f.triple().values()
        except BudgetExceeded as exc:
            verdict.undecided["triple"] = str(exc)
    return verdict


def _evaluate_batch(args) -> list[GraphVerdict]:
    items, checks, budget, want_triple = args
    return [evaluate_graph(i, parse_graph6(s), checks, budget, want_triple) for i, s in items]


def _chunks(corpus: Iterable[Graph], size: int, start: int) -> Iterator[list[tuple[int, str]]]:
    chunk: list[tuple[int, str]] = []
    for i, g in enumerate(corpus):
        if i < start:
            continue
        chunk.append((i, emit_graph6(g)))
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def evaluate_corpus(
    corpus: Iterable[Graph],
    checks: Sequence[str],
    budget: int | None = None,
    jobs: int = 1,
    want_triple: bool = False,
    start: int = 0,
    chunk_size: int = 64,
) -> Iterator[GraphVerdict]:
    """Per-graph verdicts in corpus order, fanned out over ``jobs`` processes."""
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    tasks = ((chunk, tuple(checks), budget, want_triple) for chunk in _chunks(corpus, chunk_size, start))
    if jobs == 1:
        for task in tasks:
            yield from _evaluate_batch(task)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for batch in pool.map(_evaluate_batch, tasks):
            yield from batch


class CheckAccumulator:
    """Single reducer that merges verdicts in corpus order."""

    def __init__(self, checks: Sequence[str]):
        self.checks = tuple(checks)
        self.results = {cid: TheoremCheckResult(cid) for cid in self.checks}
        self.undecided: list[dict] = []
        self.disconnected = 0

    def add(self, v: GraphVerdict) -> None:
        for cid in self.checks:
            r = self.results[cid]
            r.scanned += 1
            r.last_index = v.index
            if not v.connected:
                r.not_applicable += 1
            elif cid in v.undecided:
                r.skipped.append(v.graph6)
            else:
                verdict, values = v.outcomes[cid]
                if verdict == NA:
                    r.not_applicable += 1
                else:
                    r.applicable += 1
                    if verdict == FAIL:
                        r.add_violation(v.graph6, values)
        if not v.connected:
            self.disconnected += 1
        for what, msg in v.undecided.items():
            self.undecided.append({"graph6": v.graph6, "index": v.index, "check": what, "reason": msg})

    def finish(self) -> list[TheoremCheckResult]:
        return [self.results[cid].finish() for cid in self.checks]


def check_theorems(
    corpus: Iterable[Graph],
    checks: str | Sequence[str] | None = None,
    budget: int | None = None,
    jobs: int = 1,
    start: int = 0,
) -> list[TheoremCheckResult]:
    """Evaluate the requested statements on every corpus graph.

    Disconnected graphs count as not applicable.  ``start`` resumes a scan
    at a corpus index; each result records the last index it processed.
    """
    checks = resolve_checks(checks)
    acc = CheckAccumulator(checks)
    for v in evaluate_corpus(corpus, checks, budget, jobs, start=start):
        acc.add(v)
    return acc.finish()


# m(a, b) table

TABLE_MAX_A = 8
TABLE_MAX_B = 10


@dataclass
class MEntry:
    a: int
    b: int
    lo: int
    hi: int | None
    lo_source: str
    hi_source: str
    witness: str | None = None

    @property
    def exact(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    def as_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b, "lo": self.lo, "hi": self.hi, "exact": self.exact,
            "lo_source": self.lo_source, "hi_source": self.hi_source, "witness": self.witness,
        }


class MTable:
    """Known bounds on m(a, b), the least realizable c for given a and b."""

    def __init__(self, entries: dict[tuple[int, int], MEntry]):
        self.entries = entries
        self.conflicts: list[dict] = []

    def __getitem__(self, ab: tuple[int, int]) -> MEntry:
        return self.entries[ab]

    def __contains__(self, ab) -> bool:
        return ab in self.entries

    def value(self, a: int, b: int):
        e = self.entries[(a, b)]
        return e.lo if e.exact else (e.lo, e.hi)

    @classmethod
    def seeded(cls, max_a: int = TABLE_MAX_A, max_b: int = TABLE_MAX_B) -> MTable:
        entries = {}
        for a in range(2, max_a + 1):
            for b in range(a, max_b + 1):
                entries[(a, b)] = _seed_entry(a, b)
        return cls(entries)

    def offer(self, triple: Triple) -> bool:
        """Tighten the upper bound with a witnessed triple; returns True if it changed."""
        key = (triple.a, triple.b)
        e = self.entries.get(key)
        if e is None:
            return False
        if triple.c < e.lo:
            self.conflicts.append({"triple": list(triple.values()), "lo": e.lo, "witness": triple.witness})
            return False
        if e.hi is None or triple.c < e.hi:
            e.hi = triple.c
            e.hi_source = "corpus witness"
            e.witness = triple.witness
            return True
        if e.witness is None and triple.c == e.hi:
            e.witness = triple.witness
        return False

    def as_list(self) -> list[dict]:
        return [self.entries[k].as_dict() for k in sorted(self.entries)]

    def render(self) -> str:
        bs = sorted({b for _, b in self.entries})
        as_ = sorted({a for a, _ in self.entries})
        lines = ["a\\b " + " ".join(f"{b:>6}" for b in bs)]
        for a in as_:
            cells = []
            for b in bs:
                e = self.entries.get((a, b))
                if e is None:
                    cells.append(f"{'-':>6}")
                elif e.exact:
                    cells.append(f"{e.lo:>6}")
                else:
                    cells.append(f"{str(e.lo) + '/' + (str(e.hi) if e.hi is not None else '?'):>6}")
            lines.append(f"{a:<3} " + " ".join(cells))
        return "\n".join(lines)


def _seed_entry(a: int, b: int) -> MEntry:
    if a == b:
        return MEntry(a, b, a, a, "complete graph K_a", "complete graph K_a")
    k = b - a
    hi = 2 ** (k - 1) * (a + 1) + 1
    hi_source = f"M^{k}(K_{a}) upper bound"
    if b == a + 1:
        return MEntry(a, b, a + 2, a + 2, "chi = chi_rho forces omega = chi", "M(K_a) witness")
    # chi_rho = chi >= 3 forces omega = chi, so c >= b + 1 whenever a < b
    lo, lo_source = b + 1, "chi = chi_rho forces omega = chi"
    if a == 2 and b >= 4:
        lo, lo_source = b + 3, "(2,k,k+1) and (2,k,k+2) not realizable for k >= 4"
    return MEntry(a, b, lo, hi, lo_source, hi_source)


def build_m_table(
    corpus: Iterable[Graph] = (),
    budget: int | None = None,
    jobs: int = 1,
    table: MTable | None = None,
) -> MTable:
    """Seed the table with proven values, then tighten upper bounds from corpus witnesses."""
    table = table if table is not None else MTable.seeded()
    for v in evaluate_corpus(corpus, (), budget, jobs, want_triple=True):
        if v.triple is not None and v.triple[0] >= 2:
            table.offer(Triple(*v.triple, witness=v.graph6))
    return table


# counterexample search


@dataclass
class SearchResult:
    pattern: tuple[int, int, int]
    witness: str | None = None
    scanned: int = 0
    undecided: list[str] = field(default_factory=list)
    filtered_out: int = 0

    def as_dict(self) -> dict:
        return {
            "pattern": list(self.pattern),
            "witness": self.witness,
            "scanned": self.scanned,
            "undecided": self.undecided,
            "filtered_out": self.filtered_out,
        }


def critical_filter_justified(a: int, b: int, c: int) -> bool:
    """Whether restricting to b-critical graphs cannot hide a pattern match.

    A match G holds a b-critical subgraph H with omega(H) <= a, chi(H) = b
    and chi(H) < chi_rho(H) <= c.  H matches too whenever the only other
    possible triples for H are known to be unrealizable.
    """
    if b < 3 or not a < b < c:
        return False
    if a == 2 and c in (b + 1, b + 2):
        return c == b + 1 or b >= 4
    if a == 3 and c == b + 1 and b >= 4:
        return True
    return False


def _match(pattern, g: Graph, budget, critical: bool):
    a, b, c = pattern
    f = GraphFacts(g, budget)
    if f.omega != a or f.chi != b:
        return False, False
    if critical and not is_k_critical(g, b, Budget(budget)):
        return False, True
    return f.chi_rho == c, False


def _search_batch(args):
    items, pattern, budget, critical = args
    out = []
    for i, s in items:
        g = parse_graph6(s)
        try:
            hit, filtered = _match(pattern, g, budget, critical)
            out.append((i, s, hit, filtered, None))
        except BudgetExceeded as exc:
            out.append((i, s, False, False, str(exc)))
    return out


def search_counterexample(
    pattern: tuple[int, int, int],
    corpus: Iterable[Graph],
    budget: int | None = None,
    critical_filter: bool = False,
    jobs: int = 1,
) -> SearchResult:
    """First corpus graph realizing ``pattern`` exactly, or no witness.

    Graphs whose solvers exceed the budget are listed as undecided.
    """
    a, b, c = pattern
    result = SearchResult((a, b, c))
    if not (a <= b <= c) or a < 1:
        return result
    if critical_filter and not critical_filter_justified(a, b, c):
        raise ValueError(f"critical-graph pre-filter is not justified for pattern {pattern}")
    tasks = ((chunk, (a, b, c), budget, critical_filter) for chunk in _chunks(corpus, 64, 0))
    if jobs == 1:
        batches = map(_search_batch, tasks)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        batches = pool.map(_search_batch, tasks)
    try:
        for batch in batches:
            for i, s, hit, filtered, err in batch:
                result.scanned += 1
                if err is not None:
                    result.undecided.append(s)
                elif filtered:
                    result.filtered_out += 1
                elif hit:
                    result.witness = s
                    return result
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return result


# run reports


def corpus_digest(graph6_lines: Iterable[str]) -> str:
    h = hashlib.sha256()
    for line in graph6_lines:
        h.update(line.encode("ascii") + b"\n")
    return h.hexdigest()


def build_report(
    corpus: Sequence[Graph],
    checks: str | Sequence[str] | None = "all",
    budget: int | None = None,
    jobs: int = 1,
    with_m_table: bool = True,
    searches: Sequence[tuple[int, int, int]] = (),
    config: dict | None = None,
) -> dict:
    """One JSON-ready document for a scan run; byte-stable for fixed inputs."""
    checks = resolve_checks(checks)
    lines = [emit_graph6(g) for g in corpus]
    digest = corpus_digest(lines)
    acc = CheckAccumulator(checks)
    table = MTable.seeded() if with_m_table else None
    for v in evaluate_corpus(corpus, checks, budget, jobs, want_triple=with_m_table):
        acc.add(v)
        if table is not None and v.triple is not None and v.triple[0] >= 2:
            table.offer(Triple(*v.triple, witness=v.graph6))
    per_theorem = [r.as_dict() for r in acc.finish()]
    search_results = [search_counterexample(p, corpus, budget, jobs=jobs).as_dict() for p in searches]
    undecided = list(acc.undecided)
    for s in search_results:
        undecided += [{"graph6": g6, "check": "search " + ",".join(map(str, s["pattern"]))} for g6 in s["undecided"]]
    cfg = {"checks": list(checks), "budget": budget, "m_table": with_m_table,
           "searches": [list(p) for p in searches]}
    if config:
        cfg.update(config)
    run_id = hashlib.sha256(json.dumps({"config": cfg, "corpus": digest}, sort_keys=True).encode()).hexdigest()[:16]
    report = {
        "run_id": run_id,
        "corpus_digest": digest,
        "corpus_size": len(lines),
        "per_theorem": per_theorem,
        "m_table": table.as_list() if table is not None else [],
        "m_table_conflicts": table.conflicts if table is not None else [],
        "searches": search_results,
        "undecided": undecided,
    }
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
