"""graph6 encoding and decoding.

Only the one- and four-byte order headers are supported, so the largest
order handled is 258047.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 258047


class Graph6Error(ValueError):
    """Malformed graph6 record."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error(f"orders above {MAX_ORDER} are not supported")
    if len(data) < 4:
        raise Graph6Error("truncated extended order header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    if n < 63:
        raise Graph6Error(f"extended header used for small order {n}")
    return n, 4


def parse_graph6(line: str | bytes) -> Graph:
    """Decode a single graph6 record (trailing newline and header allowed)."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.rstrip(b"\r\n")
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126")
    n, offset = _decode_order(data)
    if n < 1:
        raise Graph6Error("graph6 order 0 is not a valid graph here")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != ngroups:
        raise Graph6Error(f"order {n} needs {ngroups} data bytes, found {len(body)}")

    value = 0
    for b in body:
        value = (value << 6) | (b - 63)
    pad = ngroups * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad

    rows = [0] * n
    k = nbits - 1  # bit index of x(0,1) counted from the low end
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 text for ``g`` (no newline)."""
    n = g.n
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds graph6 limit {MAX_ORDER}")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]

    out = bytearray(head)
    acc = 0
    nacc = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return out.decode("ascii")


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blanks; errors carry line numbers."""
    for number, line in enumerate(lines, 1):
        text = line.strip()
        if number == 1 and text.startswith(HEADER):
            text = text[len(HEADER):]
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except Graph6Error as exc:
            raise Graph6Error(str(exc), number) from None


def write_graph6(graphs: Iterable[Graph], fh: IO[str]) -> int:
    count = 0
    for g in graphs:
        fh.write(emit_graph6(g) + "\n")
        count += 1
    return count
