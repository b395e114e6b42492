"""Exact isomorphism testing for small graphs.

Vertices are first split by iterated neighbourhood-degree refinement, then a
backtracking search maps vertices class by class.  Colour labels are built
from plain int tuples, so they are comparable between graphs and stable
across interpreter runs.
"""

from __future__ import annotations

from .graph import Graph, bits


def refine_colors(g: Graph, rounds: int | None = None) -> tuple[int, ...]:
    """Stable vertex colouring: degree, then repeated neighbour-colour multisets."""
    colors = list(g.degrees)
    limit = g.n if rounds is None else rounds
    nclasses = len(set(colors))
    for _ in range(limit):
        new = [hash((colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))) for v in range(g.n)]
        k = len(set(new))
        colors = new
        if k == nclasses:
            break
        nclasses = k
    return tuple(colors)


def invariant_key(g: Graph) -> tuple:
    """Isomorphism invariant: equal for isomorphic graphs."""
    return (g.n, g.size, tuple(sorted(refine_colors(g))))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    cg = refine_colors(g)
    ch = refine_colors(h)
    if sorted(cg) != sorted(ch):
        return False
    return _find_mapping(g, h, cg, ch) is not None


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return ``perm`` with ``g.relabel(perm) == h``, or None."""
    if g.n != h.n or g.size != h.size:
        return None
    cg = refine_colors(g)
    ch = refine_colors(h)
    if sorted(cg) != sorted(ch):
        return None
    return _find_mapping(g, h, cg, ch)


def _find_mapping(g: Graph, h: Graph, cg, ch) -> list[int] | None:
    n = g.n
    by_color: dict[int, int] = {}
    for v in range(n):
        by_color[ch[v]] = by_color.get(ch[v], 0) | 1 << v

    # smallest classes first, then stay adjacent to what is already placed
    order = []
    placed = 0
    remaining = set(range(n))
    class_size = {c: by_color[c].bit_count() for c in by_color}
    while remaining:
        best = min(remaining, key=lambda v: (-(g.adj[v] & placed).bit_count(), class_size[cg[v]], v))
        order.append(best)
        remaining.discard(best)
        placed |= 1 << best

    image = [-1] * n
    used = 0
    gadj, hadj = g.adj, h.adj

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        cands = by_color[cg[v]] & ~used
        for w in bits(cands):
            ok = True
            for u in order[:depth]:
                if (gadj[v] >> u & 1) != (hadj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    if extend(0):
        return image
    return None
