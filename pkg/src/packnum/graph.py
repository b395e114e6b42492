"""Simple undirected graphs stored as bitmask adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

UNREACHABLE = float("inf")


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return x.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph order must be at least 1")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric for edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    # basic queries

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @cached_property
    def size(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(r) for r in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def closed_neighborhood(self, vertices: int) -> int:
        """Closed neighbourhood of a vertex bitmask."""
        out = vertices
        for v in bits(vertices):
            out |= self.adj[v]
        return out

    def is_complete(self) -> bool:
        return self.size == self.n * (self.n - 1) // 2

    def is_star(self) -> bool:
        """True for K_{1,m} with m >= 1 (K_2 counts)."""
        if self.n < 2 or self.size != self.n - 1:
            return False
        return self.max_degree == self.n - 1

    def is_independent(self, vertices: int) -> bool:
        return all(not (self.adj[v] & vertices) for v in bits(vertices))

    def is_clique(self, vertices: int) -> bool:
        return all((self.adj[v] | 1 << v) & vertices == vertices for v in bits(vertices))

    # connectivity and distances

    @cached_property
    def components(self) -> tuple[int, ...]:
        """Vertex masks of the connected components, ordered by lowest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def balls(self, v: int) -> list[int]:
        """Layered BFS from ``v``: ``out[r]`` is the mask of vertices at distance <= r.

        The list stops once the component of ``v`` is exhausted, so its last
        entry is that component.
        """
        reach = frontier = 1 << v
        out = [reach]
        adj = self.adj
        while True:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~reach
            if not frontier:
                return out
            reach |= frontier
            out.append(reach)

    @cached_property
    def distances(self) -> DistanceMatrix:
        return distances(self)

    @property
    def diameter(self) -> float:
        return self.distances.diameter

    # derived graphs

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"{u}-{v} is not an edge")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def delete_vertex(self, v: int) -> Graph:
        """Remove ``v``; vertices above ``v`` shift down by one."""
        if self.n == 1:
            raise ValueError("cannot delete the only vertex")
        return self.induced([u for u in range(self.n) if u != v])

    def induced(self, vertices: list[int]) -> Graph:
        """Induced subgraph, relabelled in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbours: int) -> Graph:
        """Append vertex ``n`` adjacent to the vertex mask ``neighbours``."""
        n = self.n
        rows = [row | (1 << n if neighbours >> v & 1 else 0) for v, row in enumerate(self.adj)]
        rows.append(neighbours)
        return Graph(n + 1, tuple(rows))


class DistanceMatrix:
    """All-pairs shortest-path distances; ``UNREACHABLE`` across components."""

    __slots__ = ("n", "_rows", "_balls")

    def __init__(self, rows, balls):
        self.n = len(rows)
        self._rows = rows
        self._balls = balls

    def __getitem__(self, uv):
        u, v = uv
        return self._rows[u][v]

    def row(self, u: int) -> tuple:
        return self._rows[u]

    def as_lists(self) -> list[list]:
        return [list(r) for r in self._rows]

    def eccentricity(self, v: int) -> float:
        return max(self._rows[v])

    @property
    def diameter(self) -> float:
        return max(max(r) for r in self._rows)

    def ball(self, v: int, radius: int) -> int:
        """Mask of vertices within distance ``radius`` of ``v`` (``v`` included)."""
        layers = self._balls[v]
        return layers[min(radius, len(layers) - 1)]

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and self._rows == other._rows

    def __repr__(self):
        return f"DistanceMatrix({self.as_lists()})"


def distances(g: Graph) -> DistanceMatrix:
    """BFS distances for every pair of vertices of ``g``."""
    rows = []
    all_balls = []
    for v in range(g.n):
        layers = g.balls(v)
        row = [UNREACHABLE] * g.n
        prev = 0
        for r, reach in enumerate(layers):
            for u in bits(reach & ~prev):
                row[u] = r
            prev = reach
        rows.append(tuple(row))
        all_balls.append(tuple(layers))
    return DistanceMatrix(tuple(rows), tuple(all_balls))


def append_leaves(g: Graph, plan: Iterable[tuple[int, int]]) -> Graph:
    """Attach pendant vertices: ``plan`` lists ``(vertex, leaf_count)`` pairs.

    New leaves are numbered from ``g.n`` upward in plan order.
    """
    plan = list(plan)
    seen = set()
    for v, count in plan:
        if not 0 <= v < g.n:
            raise ValueError(f"invalid vertex index {v}")
        if v in seen:
            raise ValueError(f"vertex {v} appears twice in the plan")
        if count < 0:
            raise ValueError(f"negative leaf count for vertex {v}")
        seen.add(v)
    edges = g.edges()
    nxt = g.n
    for v, count in plan:
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)
