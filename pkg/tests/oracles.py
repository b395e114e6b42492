"""Slow reference implementations used only as test oracles.

None of these touch the package's solvers or distance code; graphs are
converted to networkx and everything is recomputed by exhaustive search.
"""

from __future__ import annotations

import itertools

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_distances(g) -> dict:
    return dict(nx.all_pairs_shortest_path_length(to_nx(g)))


def alpha_by_subsets(g) -> int:
    """Largest independent set by scanning every vertex subset (n <= 12)."""
    h = to_nx(g)
    n = g.n
    edges = [(u, v) for u, v in h.edges()]
    best = 0
    for mask in range(1 << n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        if all(not (mask >> u & 1 and mask >> v & 1) for u, v in edges):
            best = size
    return best


def alpha_by_enumeration(g) -> int:
    """Largest independent set by listing every independent set (no bounding)."""
    h = to_nx(g)
    nbrs = {v: set(h[v]) for v in h}
    best = 0

    def grow(size, allowed):
        nonlocal best
        best = max(best, size)
        allowed = list(allowed)
        for i, v in enumerate(allowed):
            grow(size + 1, [u for u in allowed[i + 1:] if u not in nbrs[v]])

    grow(0, sorted(h))
    return best


def clique_number_nx(g) -> int:
    return max(len(c) for c in nx.find_cliques(to_nx(g)))


def chromatic_by_assignment(g) -> int:
    """Least k with a proper colouring found by trying every assignment."""
    edges = g.edges()
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def is_packing_assignment(col, dist, n) -> bool:
    for u in range(n):
        for v in range(u + 1, n):
            if col[u] == col[v] and dist[u].get(v, float("inf")) <= col[u]:
                return False
    return True


def chi_rho_by_assignment(g) -> int:
    """Least k with a k-packing colouring, trying every map V -> [k]."""
    dist = nx_distances(g)
    n = g.n
    for k in range(1, n + 1):
        for col in itertools.product(range(1, k + 1), repeat=n):
            if is_packing_assignment(col, dist, n):
                return k
    raise AssertionError("unreachable")


def s_packing_by_assignment(g, seq) -> bool:
    dist = nx_distances(g)
    n = g.n
    for col in itertools.product(range(len(seq)), repeat=n):
        ok = True
        for u in range(n):
            for v in range(u + 1, n):
                if col[u] == col[v] and dist[u].get(v, float("inf")) <= seq[col[u]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def mycielskian_nx(g) -> nx.Graph:
    """Mycielskian straight from the edge-set definition, on labelled nodes."""
    h = to_nx(g)
    m = nx.Graph()
    m.add_nodes_from(h.nodes)
    m.add_nodes_from((v, "twin") for v in h.nodes)
    m.add_node("hub")
    for x, y in h.edges():
        m.add_edge(x, y)
        m.add_edge(x, (y, "twin"))
        m.add_edge(y, (x, "twin"))
    for v in h.nodes:
        m.add_edge("hub", (v, "twin"))
    return m
