"""Generators for the named graph families.

Vertex conventions
------------------
complete, path, cycle
    0..n-1 in path/cycle order.
star(n)
    K_{1,n}; centre 0, leaves 1..n.
complete_bipartite(p, q)
    parts 0..p-1 and p..p+q-1.
g_k_ell(k, ell)
    K_k on 0..k-1 with the pendant vertices k..k+ell-1 all attached to 0.
h_class(r, s, extra_edges)
    w=0 (the shared vertex), a1=1, a2=2, the rest of A is 3..r-1;
    b1=r, the rest of B minus b is r+1..r+s-2; z=r+s-1.
k_n_minus_star(n, r)
    K_n without the edges 0-1, ..., 0-r.
mycielski_power(n, k)
    M^k(K_n) with the Mycielskian index layout applied k times.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .graph import Graph
from .isomorphism import invariant_key, is_isomorphic


class FamilyError(ValueError):
    """Family parameters violate the family's constraints."""


@dataclass(frozen=True)
class FamilyParams:
    family: str
    params: dict = field(default_factory=dict, hash=False)
    extra_edges: tuple[tuple[int, int], ...] = ()


FAMILIES = (
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "g_k_ell",
    "h_class",
    "k_n_minus_star",
    "mycielski_power",
)

_REQUIRED = {
    "complete": ("n",),
    "path": ("n",),
    "cycle": ("n",),
    "star": ("n",),
    "complete_bipartite": ("p", "q"),
    "g_k_ell": ("k", "ell"),
    "h_class": ("r", "s"),
    "k_n_minus_star": ("n", "r"),
    "mycielski_power": ("n", "k"),
}


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def complete_graph(n: int) -> Graph:
    _need(n >= 1, f"complete: need n >= 1, got n={n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    _need(n >= 1, f"path: need n >= 1, got n={n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, f"cycle: need n >= 3, got n={n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n}."""
    _need(n >= 1, f"star: need n >= 1, got n={n}")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    _need(p >= 1 and q >= 1, f"complete_bipartite: need p, q >= 1, got p={p}, q={q}")
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def g_k_ell(k: int, ell: int) -> Graph:
    _need(k >= 3 and ell >= 3, f"g_k_ell: need k, ell >= 3, got k={k}, ell={ell}")
    edges = list(combinations(range(k), 2))
    edges += [(0, k + j) for j in range(ell)]
    return Graph.from_edges(k + ell, edges)


def h_class_base_edges(r: int, s: int) -> list[tuple[int, int]]:
    n = r + s
    a_side = list(range(r))  # w=0, a1=1, a2=2
    b_side = [0] + list(range(r, r + s - 1))  # w=0 plays b, b1=r
    z = n - 1
    edges = set(combinations(a_side, 2)) | set(combinations(b_side, 2))
    edges |= {(v, z) for v in range(r, r + s - 1)}
    return sorted(edges)


def h_class_optional_edges(r: int, s: int) -> list[tuple[int, int]]:
    """Missing edges that may be added: not at z, not at a2, and not a1-b1."""
    _need(r >= 3 and s >= 2, f"h_class: need r >= 3 and s >= 2, got r={r}, s={s}")
    a_free = [1] + list(range(3, r))
    b_rest = list(range(r, r + s - 1))
    return [(a, b) for a in a_free for b in b_rest if (a, b) != (1, r)]


def h_class(r: int, s: int, extra_edges=()) -> Graph:
    _need(r >= 3 and s >= 2, f"h_class: need r >= 3 and s >= 2, got r={r}, s={s}")
    allowed = set(h_class_optional_edges(r, s))
    extra = []
    for u, v in extra_edges:
        e = (min(u, v), max(u, v))
        _need(e in allowed, f"h_class: extra edge {u}-{v} is not an allowed missing edge "
                            "(must avoid z and a2, must not be a1-b1, must be missing)")
        extra.append(e)
    return Graph.from_edges(r + s, h_class_base_edges(r, s) + extra)


def k_n_minus_star(n: int, r: int) -> Graph:
    _need(r >= 1 and r + 1 < n, f"k_n_minus_star: need 1 <= r and r+1 < n, got n={n}, r={r}")
    removed = {(0, i) for i in range(1, r + 1)}
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if e not in removed])


def mycielski_power_of_complete(n: int, k: int) -> Graph:
    from .mycielski import mycielski_power

    _need(n >= 1 and k >= 1, f"mycielski_power: need n >= 1 and k >= 1, got n={n}, k={k}")
    return mycielski_power(complete_graph(n), k)


_BUILDERS = {
    "complete": lambda p: complete_graph(p["n"]),
    "path": lambda p: path_graph(p["n"]),
    "cycle": lambda p: cycle_graph(p["n"]),
    "star": lambda p: star_graph(p["n"]),
    "complete_bipartite": lambda p: complete_bipartite(p["p"], p["q"]),
    "g_k_ell": lambda p: g_k_ell(p["k"], p["ell"]),
    "k_n_minus_star": lambda p: k_n_minus_star(p["n"], p["r"]),
    "mycielski_power": lambda p: mycielski_power_of_complete(p["n"], p["k"]),
}


def generate(p: FamilyParams) -> Graph:
    if p.family not in _REQUIRED:
        raise FamilyError(f"unknown family {p.family!r}; choose from {', '.join(FAMILIES)}")
    missing = [name for name in _REQUIRED[p.family] if name not in p.params]
    if missing:
        raise FamilyError(f"{p.family}: missing parameter(s) {', '.join(missing)}")
    if p.family == "h_class":
        return h_class(p.params["r"], p.params["s"], p.extra_edges)
    if p.extra_edges:
        raise FamilyError(f"{p.family}: extra edges are only meaningful for h_class")
    return _BUILDERS[p.family](p.params)


# class H recognition

H_RECOGNITION_MAX_ORDER = 9


def h_class_extra_edge_subsets(r: int, s: int):
    """Every legal extra-edge subset for the (r, s) construction."""
    opt = h_class_optional_edges(r, s)
    for size in range(len(opt) + 1):
        yield from combinations(opt, size)


@lru_cache(maxsize=None)
def h_class_members(n: int) -> dict[tuple, tuple[Graph, ...]]:
    """Class H members of order ``n`` up to isomorphism, bucketed by invariant key."""
    if n > H_RECOGNITION_MAX_ORDER:
        raise ValueError(f"class H recognition limited to order <= {H_RECOGNITION_MAX_ORDER}, got {n}")
    buckets: dict[tuple, list[Graph]] = {}
    for r in range(3, n - 1):
        s = n - r
        for extra in h_class_extra_edge_subsets(r, s):
            g = h_class(r, s, extra)
            bucket = buckets.setdefault(invariant_key(g), [])
            if not any(is_isomorphic(g, h) for h in bucket):
                bucket.append(g)
    return {k: tuple(v) for k, v in buckets.items()}


def is_h_class(g: Graph) -> bool:
    """Membership in class H by isomorphism against all generated members."""
    if g.n < 5:
        return False
    bucket = h_class_members(g.n).get(invariant_key(g), ())
    return any(is_isomorphic(g, h) for h in bucket)
