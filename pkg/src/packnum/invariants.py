"""Exact clique, chromatic and independence numbers on bitmask graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .budget import Budget, BudgetExceeded, as_budget
from .graph import Graph, bits, popcount

_BATCH = 4096


def _color_sort(adj, P: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of the candidate set; vertices listed by colour."""
    order: list[int] = []
    cols: list[int] = []
    k = 0
    uncolored = P
    while uncolored:
        k += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            cols.append(k)
    return order, cols


def _max_clique(adj, P: int, budget: Budget) -> int:
    """Maximum clique inside vertex mask ``P`` (branch and bound, colour bounds)."""
    best = 0
    best_mask = 0
    nodes = 0

    def expand(size: int, clique: int, P: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        if nodes >= _BATCH:
            budget.spend(nodes, "clique search")
            nodes = 0
        order, cols = _color_sort(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if size + cols[i] <= best:
                return
            v = order[i]
            newP = P & adj[v]
            if newP:
                expand(size + 1, clique | 1 << v, newP)
            elif size + 1 > best:
                best = size + 1
                best_mask = clique | 1 << v
            P &= ~(1 << v)

    if P:
        expand(0, 0, P)
    budget.spend(nodes, "clique search")
    return best_mask


def max_clique(g: Graph, budget: Budget | int | None = None) -> int:
    """Vertex mask of a maximum clique of ``g``."""
    return _max_clique(g.adj, g.full_mask, as_budget(budget))


def clique_number(g: Graph, budget: Budget | int | None = None) -> int:
    return popcount(max_clique(g, budget))


def max_independent_set(g: Graph, budget: Budget | int | None = None) -> int:
    """Vertex mask of a maximum independent set of ``g``."""
    return _max_clique(g.complement().adj, g.full_mask, as_budget(budget))


def independence_number(g: Graph, budget: Budget | int | None = None) -> int:
    return popcount(max_independent_set(g, budget))


def independent_sets(g: Graph) -> Iterator[int]:
    """Every independent set of ``g`` as a vertex mask, the empty set first."""
    adj = g.adj

    def grow(current: int, allowed: int) -> Iterator[int]:
        yield current
        while allowed:
            low = allowed & -allowed
            v = low.bit_length() - 1
            allowed &= ~low
            yield from grow(current | low, allowed & ~adj[v])

    yield from grow(0, g.full_mask)


# proper colourings


def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy colouring (colours from 0)."""
    n = g.n
    color = [-1] * n
    classes: list[int] = []
    uncolored = g.full_mask
    while uncolored:
        v = _most_saturated(g.adj, classes, uncolored)
        c = next((i for i, cls in enumerate(classes) if not cls & g.adj[v]), len(classes))
        if c == len(classes):
            classes.append(0)
        classes[c] |= 1 << v
        color[v] = c
        uncolored &= ~(1 << v)
    return color


def _most_saturated(adj, classes, uncolored: int) -> int:
    best_v = -1
    best_key = (-1, -1)
    for v in bits(uncolored):
        row = adj[v]
        sat = sum(1 for cls in classes if cls & row)
        key = (sat, popcount(row & uncolored))
        if key > best_key:
            best_key = key
            best_v = v
    return best_v


def k_coloring(g: Graph, k: int, budget: Budget | int | None = None) -> list[int] | None:
    """A proper ``k``-colouring of ``g`` (colours 0..k-1) or None if none exists.

    Branches on the vertex with the most distinctly coloured neighbours,
    ties broken by lowest index; a new colour is opened only as the next
    unused one.
    """
    budget = as_budget(budget)
    if k <= 0:
        return None
    adj = g.adj
    n = g.n
    classes = [0] * k
    color = [-1] * n
    nodes = 0

    def pick(uncolored: int, used: int) -> int:
        best_v = -1
        best = -1
        for v in bits(uncolored):
            row = adj[v]
            sat = 0
            for c in range(used):
                if classes[c] & row:
                    sat += 1
            if sat > best:
                best = sat
                best_v = v
        return best_v

    def solve(uncolored: int, used: int) -> bool:
        nonlocal nodes
        if not uncolored:
            return True
        nodes += 1
        if nodes >= _BATCH:
            budget.spend(nodes, "colouring search")
            nodes = 0
        v = pick(uncolored, used)
        row = adj[v]
        for c in range(min(used + 1, k)):
            if classes[c] & row:
                continue
            classes[c] |= 1 << v
            color[v] = c
            if solve(uncolored & ~(1 << v), max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
        color[v] = -1
        return False

    found = solve(g.full_mask, 0)
    budget.spend(nodes, "colouring search")
    return color if found else None


def chromatic_coloring(g: Graph, budget: Budget | int | None = None) -> list[int]:
    """An optimal proper colouring of ``g``."""
    budget = as_budget(budget)
    greedy = greedy_coloring(g)
    upper = max(greedy) + 1
    for k in range(clique_number(g, budget), upper):
        col = k_coloring(g, k, budget)
        if col is not None:
            return col
    return greedy


def chromatic_number(g: Graph, budget: Budget | int | None = None) -> int:
    return max(chromatic_coloring(g, budget)) + 1


def is_k_critical(g: Graph, k: int, budget: Budget | int | None = None) -> bool:
    """True iff chi(g) = k and every edge or vertex deletion lowers chi."""
    if k < 1:
        raise ValueError("k must be at least 1")
    budget = as_budget(budget)
    if chromatic_number(g, budget) != k:
        return False
    if g.n == 1:
        return True
    for u, v in g.edges():
        if k_coloring(g.delete_edge(u, v), k - 1, budget) is None:
            return False
    for v in range(g.n):
        if k_coloring(g.delete_vertex(v), k - 1, budget) is None:
            return False
    return True


@dataclass
class BoundRecord:
    """One inequality evaluated on a concrete graph."""

    name: str
    lhs: int
    rhs: int
    relation: str  # "<=", ">=" or "=="
    holds: bool
    tight: bool
    applicable: bool = True
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "holds": self.holds,
            "tight": self.tight,
            "applicable": self.applicable,
            "note": self.note,
        }


def compare(name: str, lhs: int, relation: str, rhs: int, applicable: bool = True, note: str = "") -> BoundRecord:
    if relation == "<=":
        holds = lhs <= rhs
    elif relation == ">=":
        holds = lhs >= rhs
    elif relation == "==":
        holds = lhs == rhs
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return BoundRecord(name, lhs, rhs, relation, holds, lhs == rhs, applicable, note)


@dataclass
class InvariantReport:
    n: int
    max_degree: int
    diameter: float
    omega: int
    chi: int
    alpha: int
    chi_rho: int | None = None
    bounds: list[BoundRecord] = field(default_factory=list)

    def as_dict(self) -> dict:
        diam = self.diameter
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "diameter": None if diam == float("inf") else int(diam),
            "omega": self.omega,
            "chi": self.chi,
            "alpha": self.alpha,
            "chi_rho": self.chi_rho,
            "bounds": [b.as_dict() for b in self.bounds],
        }


def invariant_report(g: Graph, budget: Budget | int | None = None, with_packing: bool = True) -> InvariantReport:
    """Exact (n, Delta, diam, omega, chi, alpha, chi_rho) plus the packing bounds."""
    from . import packing

    budget = as_budget(budget)
    report = InvariantReport(
        n=g.n,
        max_degree=g.max_degree,
        diameter=g.diameter,
        omega=clique_number(g, budget),
        chi=chromatic_number(g, budget),
        alpha=independence_number(g, budget),
    )
    if with_packing:
        report.chi_rho, _ = packing.packing_chromatic_number(g, budget)
        upper, tight = packing.bound_indep_upper(g)
        report.bounds.append(compare("n-alpha+1 upper", report.chi_rho, "<=", upper, note="diam 2" if tight else ""))
        lower, eq = packing.bound_delta_alpha_lower(g)
        report.bounds.append(compare("Delta-alpha+2 lower", report.chi_rho, ">=", lower, note="Delta = n-1" if eq else ""))
    return report


__all__ = [
    "BudgetExceeded",
    "BoundRecord",
    "InvariantReport",
    "chromatic_coloring",
    "chromatic_number",
    "clique_number",
    "greedy_coloring",
    "independence_number",
    "independent_sets",
    "invariant_report",
    "is_k_critical",
    "k_coloring",
    "max_clique",
    "max_independent_set",
]
