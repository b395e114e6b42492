"""Mycielskian construction and its independence / packing bounds.

Index layout of M(G) for G on n vertices: base vertex ``v`` keeps index
``v``, its twin is ``v + n`` and the hub is ``2n``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .budget import Budget, as_budget
from .graph import Graph, bits, popcount
from .invariants import BoundRecord, compare, independence_number
from .packing import packing_chromatic_number

SOLVER_ORDER_LIMIT = 30


@dataclass(frozen=True)
class MycielskiLayout:
    graph: Graph
    base_order: int

    def base(self, v: int) -> int:
        return v

    def twin(self, v: int) -> int:
        return v + self.base_order

    @property
    def hub(self) -> int:
        return 2 * self.base_order


def mycielskian(g: Graph) -> MycielskiLayout:
    n = g.n
    rows = [0] * (2 * n + 1)
    hub = 2 * n
    for v in range(n):
        row = g.adj[v]
        # v is joined to its G-neighbours and to their twins
        rows[v] = row | (row << n)
        rows[v + n] = row | (1 << hub)
    rows[hub] = ((1 << n) - 1) << n
    return MycielskiLayout(Graph(2 * n + 1, tuple(rows)), n)


def mycielski_power(g: Graph, k: int) -> Graph:
    """M^k(g); warns when the result is beyond comfortable exact-solver size."""
    if k < 1:
        raise ValueError("k must be at least 1")
    h = g
    for _ in range(k):
        h = mycielskian(h).graph
    if h.n > SOLVER_ORDER_LIMIT:
        warnings.warn(f"M^{k} has order {h.n}; exact packing solvers may not finish", RuntimeWarning, stacklevel=2)
    return h


def mycielski_power_order(n: int, k: int) -> int:
    return 2 ** k * (n + 1) - 1


@dataclass
class AlphaMycielskian:
    value: int
    base_set: int  # the maximising independent set S of G, as a mask
    witness: int  # S, its twins, and twins of V(G) \ N[S], as a mask in M(G)
    covered_by_theorem: bool = True

    def witness_vertices(self) -> list[int]:
        return list(bits(self.witness))


def alpha_mycielskian(g: Graph, budget: Budget | int | None = None) -> AlphaMycielskian:
    """Maximise 2|S| + |V(G) minus N[S]| over all independent S of ``g`` (S may be empty).

    Each vertex added to S gains at most one over the current value, so
    ``2|S| + |uncovered| + |candidates|`` bounds every extension.
    """
    budget = as_budget(budget)
    n = g.n
    adj = g.adj
    full = g.full_mask
    best = n
    best_set = 0
    nodes = 0

    def search(chosen: int, size: int, uncovered: int, cand: int) -> None:
        nonlocal best, best_set, nodes
        nodes += 1
        if nodes >= 4096:
            budget.spend(nodes, "alpha(M(G)) search")
            nodes = 0
        value = 2 * size + popcount(uncovered)
        if value > best:
            best = value
            best_set = chosen
        if value + popcount(cand) <= best:
            return
        while cand:
            if 2 * size + popcount(uncovered) + popcount(cand) <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= ~low
            closed = adj[v] | low
            search(chosen | low, size + 1, uncovered & ~closed, cand & ~closed)

    search(0, 0, full, full)
    budget.spend(nodes, "alpha(M(G)) search")
    uncovered = full & ~g.closed_neighborhood(best_set)
    witness = best_set | (best_set << n) | (uncovered << n)
    return AlphaMycielskian(best, best_set, witness, covered_by_theorem=g.is_connected())


@dataclass
class MycielskiReport:
    n: int
    alpha: int
    alpha_m: int
    chi_rho: int | None
    chi_rho_m: int | None
    is_complete: bool
    is_star: bool
    diameter: float
    diameter_m: float
    applicable: bool
    bounds: list[BoundRecord] = field(default_factory=list)

    def bound(self, name: str) -> BoundRecord:
        return next(b for b in self.bounds if b.name == name)

    def as_dict(self) -> dict:
        inf = float("inf")
        return {
            "n": self.n,
            "alpha": self.alpha,
            "alpha_m": self.alpha_m,
            "chi_rho": self.chi_rho,
            "chi_rho_m": self.chi_rho_m,
            "is_complete": self.is_complete,
            "is_star": self.is_star,
            "diameter": None if self.diameter == inf else int(self.diameter),
            "diameter_m": None if self.diameter_m == inf else int(self.diameter_m),
            "applicable": self.applicable,
            "bounds": [b.as_dict() for b in self.bounds],
        }


def mycielski_bound_report(
    g: Graph,
    budget: Budget | int | None = None,
    with_packing: bool = True,
    use_bounds: bool = True,
) -> MycielskiReport:
    """Evaluate every Mycielskian bound on ``g`` with exact invariants.

    ``use_bounds`` is forwarded to the packing solver; pass False when the
    report is itself used to check those bounds.
    """
    budget = as_budget(budget)
    m = mycielskian(g).graph
    alpha = independence_number(g, budget)
    alpha_m = independence_number(m, budget)
    complete = g.is_complete()
    star = g.is_star()
    applicable = g.is_connected() and g.n >= 2
    rho = rho_m = None
    if with_packing:
        rho, _ = packing_chromatic_number(g, budget, use_bounds)
        rho_m, _ = packing_chromatic_number(m, budget, use_bounds)
    report = MycielskiReport(g.n, alpha, alpha_m, rho, rho_m, complete, star, g.diameter, m.diameter, applicable)
    n = g.n
    add = report.bounds.append
    add(compare("alpha(M) lower 2*alpha", alpha_m, ">=", 2 * alpha, applicable))
    add(compare("alpha(M) upper n+alpha-1", alpha_m, "<=", n + alpha - 1, applicable))
    add(compare("alpha(M) upper n+alpha-2", alpha_m, "<=", n + alpha - 2, applicable and not complete and not star,
                note="skipped for complete graphs and stars"))
    add(compare("alpha(M) >= n", alpha_m, ">=", n))
    if with_packing:
        rec = compare("chi_rho(M) >= chi_rho+2", rho_m, ">=", rho + 2, applicable)
        if complete and applicable and rho_m != rho + 2:
            rec.holds = False
            rec.note = "equality expected for complete graphs"
        add(rec)
        add(compare("chi_rho(M) upper min(n+2, 2(n-alpha+1))", rho_m, "<=", min(n + 2, 2 * (n - alpha + 1)), applicable))
        diam2 = g.diameter == 2
        add(compare("chi_rho(M) == 2n-alpha(M)+2", rho_m, "==", 2 * n - alpha_m + 2, diam2,
                    note="requires diam(G) = 2"))
    return report


def mycielski_power_bound(n: int, k: int) -> int:
    """Upper bound 2^(k-1)(n+1)+1 on chi_rho(M^k(K_n))."""
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    return 2 ** (k - 1) * (n + 1) + 1
