"""Text codecs: graph6 lines, a plain edge-list format, and DOT export.

graph6 layout: an order prefix N(n) followed by the upper triangle of the
adjacency matrix read column by column, x(0,1), x(0,2), x(1,2), x(0,3), ...
The bit stream is chopped into 6-bit groups, most significant bit first,
zero-padded, and each group is stored as the printable byte group+63.
N(n) is the single byte n+63 for n <= 62; larger orders use the extended
prefixes 126 (18-bit) and 126 126 (36-bit).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"

_MIN_BYTE = 63
_MAX_BYTE = 126
_SHORT_MAX = 62
_EXT4_MAX = 258047        # 2^18 - 1
_EXT8_MAX = 68719476735   # 2^36 - 1


class Graph6ParseError(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _pair_order(n: int):
    # column-major upper triangle: all pairs (u, v) with u < v, v ascending
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional '>>graph6<<' header is allowed)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 line", 0)
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not _MIN_BYTE <= b <= _MAX_BYTE:
            raise Graph6ParseError(f"byte {b} outside graph6 range [63, 126]", i)

    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6ParseError("truncated extended order prefix", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6ParseError("truncated extended order prefix", len(data))
        n = 0
        for i in range(2, 8):
            n = (n << 6) | (data[i] - 63)
        pos = 8

    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < ngroups:
        raise Graph6ParseError(
            f"truncated payload: need {ngroups} bytes, got {len(payload)}", pos + len(payload)
        )
    if len(payload) > ngroups:
        raise Graph6ParseError("payload longer than the adjacency needs", pos + ngroups)

    edges = []
    bit = 0
    pairs = _pair_order(n)
    for gi in range(ngroups):
        group = payload[gi] - 63
        for shift in range(5, -1, -1):
            set_ = (group >> shift) & 1
            if bit < nbits:
                u, v = next(pairs)
                if set_:
                    edges.append((u, v))
            elif set_:
                raise Graph6ParseError("nonzero padding bits", pos + gi)
            bit += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a canonical graph6 line (no trailing newline)."""
    n = g.n
    if n <= _SHORT_MAX:
        prefix = bytes([n + 63])
    elif n <= _EXT4_MAX:
        prefix = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    elif n <= _EXT8_MAX:
        prefix = bytes([126, 126] + [63 + ((n >> s) & 63) for s in range(30, -1, -6)])
    else:
        raise ValueError(f"order {n} exceeds the graph6 encoding range")

    have = {(u, v) for u, v in g.edges}
    out = bytearray(prefix)
    group = 0
    filled = 0
    for u, v in _pair_order(n):
        group = (group << 1) | ((u, v) in have)
        filled += 1
        if filled == 6:
            out.append(group + 63)
            group = 0
            filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return out.decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse the 'n m' header plus m 'u v' lines; whitespace is forgiven."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise EdgeListParseError("missing 'n m' header", 1)
    head = lines[idx].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise EdgeListParseError("expected header 'n m'", idx + 1)
    n, m = int(head[0]), int(head[1])

    edges = []
    seen = 0
    for off, raw in enumerate(lines[idx + 1:], start=idx + 2):
        if not raw.strip():
            continue
        toks = raw.split()
        if len(toks) != 2 or not all(tok.lstrip("-").isdigit() for tok in toks):
            raise EdgeListParseError("expected an edge 'u v'", off)
        u, v = int(toks[0]), int(toks[1])
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"edge ({u}, {v}) out of range for order {n}", off)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", off)
        edges.append((u, v))
        seen += 1
    if seen != m:
        raise EdgeListParseError(f"header promises {m} edges, found {seen}", len(lines))
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Header line 'n m' then the edges in lexicographic order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    if name and (name[0].isalpha() or name[0] == "_") and all(
        c.isalnum() or c == "_" for c in name
    ):
        return name
    if name.isdigit():
        return name
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def emit_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    """DOT source with one node statement per vertex and one edge per line."""
    if labels is not None and len(labels) != g.n:
        raise ValueError(f"got {len(labels)} labels for order {g.n}")
    ident = (lambda v: _dot_id(labels[v])) if labels is not None else (lambda v: str(v))
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {ident(v)};")
    for u, v in g.edges:
        lines.append(f"  {ident(u)} -- {ident(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str | None:
    """Guess 'graph6' or 'edges' from the first meaningful line, else None.

    A graph6 line never contains spaces or digits below byte 63, and an
    edge-list header is exactly two integers, so the two cannot collide.
    """
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(GRAPH6_HEADER):
            return "graph6"
        toks = line.split()
        if len(toks) == 2 and all(tok.isdigit() for tok in toks):
            return "edges"
        if all(_MIN_BYTE <= ord(c) <= _MAX_BYTE for c in line):
            return "graph6"
        return None
    return None


def iter_graph6_lines(lines: Iterable[str]):
    """Yield (lineno, stripped_line) for parseable stream lines.

    Blank lines and a leading '>>graph6<<' header line are skipped, matching
    the output of the usual generator tools.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line == GRAPH6_HEADER:
            continue
        yield lineno, line
