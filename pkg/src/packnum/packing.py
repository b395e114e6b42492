"""Packing colourings: verification, exact S-packing search, and chi_rho."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .budget import Budget, as_budget
from .graph import Graph, bits, popcount
from .invariants import _max_clique, chromatic_number, max_independent_set

_BATCH = 4096


@dataclass(frozen=True)
class SPackingSpec:
    """Nondecreasing sequence of positive packing distances."""

    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(int(s) for s in self.seq)
        object.__setattr__(self, "seq", seq)
        if any(s < 1 for s in seq):
            raise ValueError(f"packing distances must be positive: {seq}")
        if any(a > b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"packing distances must be nondecreasing: {seq}")

    @classmethod
    def packing(cls, k: int) -> SPackingSpec:
        """The sequence (1, 2, ..., k)."""
        return cls(tuple(range(1, k + 1)))

    def __len__(self):
        return len(self.seq)


@dataclass(frozen=True)
class PackingColoring:
    """``colors[v]`` in 1..k; class ``i`` must be an ``spec.seq[i-1]``-packing."""

    colors: tuple[int, ...]
    spec: SPackingSpec

    @property
    def k(self) -> int:
        return len(self.spec)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def verify(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        if any(not 1 <= c <= self.k for c in self.colors):
            return False
        return all(is_i_packing(g, cls, s) for cls, s in zip(self.classes(), self.spec.seq))


def is_i_packing(g: Graph, w: Iterable[int], i: int) -> bool:
    """True iff every two distinct vertices of ``w`` are more than ``i`` apart."""
    if i < 1:
        raise ValueError("i must be at least 1")
    w = sorted(set(w))
    dm = g.distances
    for a, u in enumerate(w):
        row = dm.row(u)
        for v in w[a + 1:]:
            if row[v] <= i:
                return False
    return True


def packing_number(g: Graph, s: int, budget: Budget | int | None = None) -> int:
    """Largest size of an ``s``-packing (independence number of the s-th power)."""
    budget = as_budget(budget)
    dm = g.distances
    full = g.full_mask
    # complement of the power graph: u ~ v iff d(u, v) > s
    far = tuple(full & ~dm.ball(v, s) for v in range(g.n))
    return popcount(_max_clique(far, full, budget))


def _path_or_cycle(g: Graph) -> str | None:
    if not g.is_connected():
        return None
    degs = g.degrees
    if g.n >= 3 and all(d == 2 for d in degs):
        return "cycle"
    if g.n == 1 or (g.size == g.n - 1 and max(degs) <= 2):
        return "path"
    return None


def _line_capacity(kind: str, n: int, s: int) -> int:
    if kind == "cycle":
        return max(1, n // (s + 1))
    return -(-n // (s + 1))


def s_packing_color(
    g: Graph,
    spec: SPackingSpec | Sequence[int],
    budget: Budget | int | None = None,
) -> PackingColoring | None:
    """Exact decision of S-packing colourability, with a witness.

    Vertices are assigned in descending-degree order (ties by index) and
    colours are tried in ascending order.  A branch is cut when some
    unassigned vertex has no admissible colour left, or when the remaining
    vertices exceed what the open colour classes can still absorb.  Raises
    ``BudgetExceeded`` if the node budget runs out.
    """
    if not isinstance(spec, SPackingSpec):
        spec = SPackingSpec(tuple(spec))
    budget = as_budget(budget)
    n = g.n
    seq = spec.seq
    k = len(seq)
    if k == 0:
        return None

    kind = _path_or_cycle(g)
    if kind is not None and sum(_line_capacity(kind, n, s) for s in seq) < n:
        return None

    dm = g.distances
    ball = [[dm.ball(v, s) for v in range(n)] for s in seq]
    cap_by_s: dict[int, int] = {}
    for s in seq:
        if s not in cap_by_s:
            cap_by_s[s] = packing_number(g, s, budget)
    cap = [cap_by_s[s] for s in seq]
    if sum(cap) < n:
        return None

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    forbidden = [0] * k
    count = [0] * k
    color = [0] * n
    nodes = 0
    colors = range(k)

    def feasible(unassigned: int) -> bool:
        need = popcount(unassigned)
        reachable = 0
        room = 0
        for i in colors:
            avail = unassigned & ~forbidden[i]
            if avail:
                reachable |= avail
                room += min(popcount(avail), cap[i] - count[i])
        return room >= need and reachable == unassigned

    def solve(depth: int, unassigned: int) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        nodes += 1
        if nodes >= _BATCH:
            budget.spend(nodes, "packing search")
            nodes = 0
        v = order[depth]
        bit = 1 << v
        rest = unassigned & ~bit
        for i in colors:
            if forbidden[i] & bit or count[i] >= cap[i]:
                continue
            saved = forbidden[i]
            forbidden[i] = saved | ball[i][v]
            count[i] += 1
            if (not rest or feasible(rest)) and solve(depth + 1, rest):
                color[v] = i + 1
                return True
            forbidden[i] = saved
            count[i] -= 1
        return False

    found = solve(0, g.full_mask)
    budget.spend(nodes, "packing search")
    if not found:
        return None
    return PackingColoring(tuple(color), spec)


def indep_coloring(g: Graph, budget: Budget | int | None = None) -> PackingColoring:
    """Maximum independent set gets colour 1, every other vertex its own colour."""
    ind = max_independent_set(g, budget)
    color = [0] * g.n
    nxt = 2
    for v in range(g.n):
        if ind >> v & 1:
            color[v] = 1
        else:
            color[v] = nxt
            nxt += 1
    return PackingColoring(tuple(color), SPackingSpec.packing(nxt - 1))


def packing_chromatic_number(
    g: Graph,
    budget: Budget | int | None = None,
    use_bounds: bool = True,
) -> tuple[int, PackingColoring]:
    """Smallest ``k`` admitting a k-packing colouring, with a witness.

    With ``use_bounds`` the search starts at max(chi, Delta - alpha + 2) and a
    diameter-2 graph takes n - alpha + 1 directly.  Without it the search is
    the plain increasing-k decision from k = 1.
    """
    budget = as_budget(budget)
    upper = indep_coloring(g, budget)
    if use_bounds:
        value, tight = bound_indep_upper(g, budget)
        if tight:
            return value, upper
        lower, _ = bound_delta_alpha_lower(g, budget)
        start = max(chromatic_number(g, budget), lower, 1)
    else:
        start = 1
    for k in range(start, upper.k):
        col = s_packing_color(g, SPackingSpec.packing(k), budget)
        if col is not None:
            return k, col
    if use_bounds:
        return upper.k, upper
    col = s_packing_color(g, SPackingSpec.packing(upper.k), budget)
    return upper.k, col


def bound_indep_upper(g: Graph, budget: Budget | int | None = None) -> tuple[int, bool]:
    """(n - alpha + 1, diam == 2): an upper bound on chi_rho, exact when the flag is set."""
    alpha = popcount(max_independent_set(g, budget))
    return g.n - alpha + 1, g.diameter == 2


def bound_delta_alpha_lower(g: Graph, budget: Budget | int | None = None) -> tuple[int, bool]:
    """(Delta - alpha + 2, Delta == n - 1): a lower bound on chi_rho, exact when the flag is set."""
    alpha = popcount(max_independent_set(g, budget))
    delta = g.max_degree
    return delta - alpha + 2, delta == g.n - 1


def h_class_equality_check(g: Graph, budget: Budget | int | None = None):
    """Compare both sides of the alpha = 2 equality characterisation on one graph."""
    from .families import H_RECOGNITION_MAX_ORDER, is_h_class
    from .graph6 import emit_graph6
    from .results import Status, TheoremCheckResult

    budget = as_budget(budget)
    result = TheoremCheckResult("T4.2", scanned=1)
    alpha = popcount(max_independent_set(g, budget))
    if alpha != 2:
        result.status = Status.NOT_APPLICABLE
        result.not_applicable = 1
        return result
    if g.n > H_RECOGNITION_MAX_ORDER:
        raise ValueError(f"class H recognition limited to order <= {H_RECOGNITION_MAX_ORDER}, got {g.n}")
    rho, _ = packing_chromatic_number(g, budget, use_bounds=False)
    lower, _ = bound_delta_alpha_lower(g, budget)
    lhs = rho == lower
    dominating = g.max_degree == g.n - 1
    member = is_h_class(g)
    rhs = dominating or member
    result.applicable = 1
    if lhs != rhs:
        result.add_violation(emit_graph6(g), {
            "chi_rho": rho, "delta_alpha_bound": lower,
            "dominating_vertex": dominating, "in_class_h": member,
        })
    result.details = {"equality": lhs, "dominating_vertex": dominating, "in_class_h": member}
    return result.finish()
