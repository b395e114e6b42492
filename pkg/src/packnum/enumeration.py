"""Connected graphs of small order, one per isomorphism class.

Orders up to 7 are generated in-process by vertex augmentation with
isomorphism dedup.  Larger corpora are written to graph6 files by
``write_connected_corpus``, which needs the optional ``pynauty`` package for
canonical certificates.
"""

from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph
from .graph6 import emit_graph6, read_graph6
from .isomorphism import invariant_key, is_isomorphic

MAX_BUILTIN_ORDER = 7


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield every connected graph of order ``n`` (1 <= n <= 7) up to isomorphism.

    Order is deterministic: by edge count, then graph6 text.
    """
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise ValueError(f"built-in enumeration supports 1 <= n <= {MAX_BUILTIN_ORDER}, got {n}")
    yield from _connected(n)


def enumerate_connected_upto(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_connected(n)


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    # every connected graph has a vertex whose removal leaves it connected
    buckets: dict[tuple, list[Graph]] = {}
    for base in _connected(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            cand = base.add_vertex(nbrs)
            key = invariant_key(cand)
            bucket = buckets.setdefault(key, [])
            if not any(is_isomorphic(cand, other) for other in bucket):
                bucket.append(cand)
    found = [g for bucket in buckets.values() for g in bucket]
    found.sort(key=lambda g: (g.size, emit_graph6(g)))
    return tuple(found)


def connected_certificates(n: int, base: Iterable[Graph] | None = None) -> Iterator[Graph]:
    """Connected graphs of order ``n`` via nauty canonical labels (needs pynauty).

    ``base`` may supply the connected graphs of order ``n - 1``.  Output
    graphs are canonically labelled and sorted by (edges, graph6).
    """
    import pynauty

    def canon(g: Graph) -> Graph:
        pg = pynauty.Graph(g.n, adjacency_dict={v: [u for u in range(g.n) if g.adj[v] >> u & 1] for v in range(g.n)})
        lab = pynauty.canon_label(pg)
        perm = [0] * g.n
        for new, old in enumerate(lab):
            perm[old] = new
        return g.relabel(perm)

    if n == 1:
        yield Graph.empty(1)
        return
    if base is None:
        base = connected_certificates(n - 1) if n - 1 > MAX_BUILTIN_ORDER else _connected(n - 1)
    prev = [canon(g) for g in base]
    seen: dict[tuple, Graph] = {}
    for base in prev:
        for nbrs in range(1, 1 << (n - 1)):
            c = canon(base.add_vertex(nbrs))
            seen.setdefault(c.adj, c)
    out = sorted(seen.values(), key=lambda g: (g.size, emit_graph6(g)))
    yield from out


def write_connected_corpus(n: int, path: str | Path, base: Iterable[Graph] | None = None) -> int:
    """Write all connected graphs of order ``n`` to ``path`` as graph6; return the count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w") as fh:
        for g in connected_certificates(n, base):
            fh.write(emit_graph6(g) + "\n")
            count += 1
    tmp.replace(path)
    return count


def cache_dir() -> Path:
    root = os.environ.get("PACKNUM_CACHE")
    if root:
        return Path(root)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "packnum"


def corpus_file(n: int, directory: str | Path | None = None) -> Path:
    """Path of the cached graph6 corpus for order ``n``, generating it if missing."""
    path = Path(directory or cache_dir()) / f"connected{n}.g6"
    if not path.exists():
        base = None
        if n - 1 > MAX_BUILTIN_ORDER:
            with open(corpus_file(n - 1, directory)) as fh:
                base = list(read_graph6(fh))
        write_connected_corpus(n, path, base)
    return path


def connected_corpus(max_n: int, min_n: int = 1, directory: str | Path | None = None) -> Iterator[Graph]:
    """All connected graphs with ``min_n <= n <= max_n``.

    Orders above 7 come from cached graph6 files (generated on first use).
    """
    for n in range(min_n, max_n + 1):
        if n <= MAX_BUILTIN_ORDER:
            yield from enumerate_connected(n)
        else:
            with open(corpus_file(n, directory)) as fh:
                yield from read_graph6(fh)
