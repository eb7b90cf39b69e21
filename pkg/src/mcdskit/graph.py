"""Immutable simple graphs plus the structural predicates the toolkit runs on.

Vertices are the integers 0..n-1. Public functions take vertex sets as plain
iterables and hand back frozensets; internally every predicate is evaluated
on integer bitmasks so the subset-enumeration inner loops stay cheap.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

CANONICAL_MAX_ORDER = 8


class DisconnectedGraphError(ValueError):
    """Operation is defined only for connected graphs."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph, immutable after construction.

    Self-loops are rejected; duplicate and mirrored pairs collapse to one
    canonical edge. The order is preserved even when vertices are isolated.
    """

    __slots__ = ("n", "edges", "_adj", "_adj_masks", "_closed_masks", "_conn")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("graph order must be non-negative")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(canon))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj_masks = tuple(adj)
        self._closed_masks = tuple(m | (1 << v) for v, m in enumerate(adj))
        self._adj = tuple(tuple(iter_bits(m)) for m in adj)
        self._conn = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacency_mask(self, v: int) -> int:
        return self._adj_masks[v]

    def closed_mask(self, v: int) -> int:
        return self._closed_masks[v]

    def mask(self, vertices: Iterable[int]) -> int:
        """Bitmask of a vertex collection, validating the range."""
        mask = 0
        for v in vertices:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range for order {self.n}")
            mask |= 1 << v
        return mask

    def vertex_set(self, mask: int) -> frozenset[int]:
        return frozenset(iter_bits(mask))

    def is_connected(self) -> bool:
        if self._conn is None:
            self._conn = self.n <= 1 or _mask_connected(self._adj_masks, self.full_mask)
        return self._conn

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """New graph with vertex ``v`` renamed to ``perm[v]``."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("relabeling is not a permutation of the vertices")
        return Graph(self.n, [(p[u], p[v]) for u, v in self.edges])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# mask-level predicates, shared with the enumeration engine


def _mask_connected(adj_masks, mask: int) -> bool:
    """True iff the vertices of ``mask`` induce a connected subgraph."""
    if mask == 0:
        return False
    reach = mask & -mask
    frontier = reach
    while frontier:
        grow = 0
        mm = frontier
        while mm:
            low = mm & -mm
            grow |= adj_masks[low.bit_length() - 1]
            mm ^= low
        frontier = grow & mask & ~reach
        reach |= frontier
    return reach == mask


def _mask_dominates(closed_masks, mask: int, full: int) -> bool:
    cover = 0
    mm = mask
    while mm:
        low = mm & -mm
        cover |= closed_masks[low.bit_length() - 1]
        mm ^= low
    return cover == full


def _mask_is_cds(g: Graph, mask: int) -> bool:
    return _mask_dominates(g._closed_masks, mask, g.full_mask) and _mask_connected(
        g._adj_masks, mask
    )


def _mask_minimal_cds(g: Graph, mask: int, deletable: int) -> bool:
    """Single-deletion minimality over the ``deletable`` members of a known CDS."""
    adj = g._adj_masks
    closed = g._closed_masks
    full = g.full_mask
    dd = deletable
    while dd:
        low = dd & -dd
        dd ^= low
        sub = mask ^ low
        if sub == 0:
            continue
        if _mask_dominates(closed, sub, full) and _mask_connected(adj, sub):
            return False
    return True


# ---------------------------------------------------------------------------
# set-level predicates


def is_connected_induced(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``s`` is connected; empty sets are not."""
    return _mask_connected(g._adj_masks, g.mask(s))


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff the closed neighborhood of ``s`` covers every vertex."""
    return _mask_dominates(g._closed_masks, g.mask(s), g.full_mask)


def is_cds(g: Graph, s: Iterable[int]) -> bool:
    """Connected dominating set test. The host graph must be connected."""
    if not g.is_connected():
        raise DisconnectedGraphError("CDS predicates need a connected graph")
    return _mask_is_cds(g, g.mask(s))


def is_minimal_cds(g: Graph, s: Iterable[int]) -> bool:
    """Fast minimality test: a CDS none of whose single deletions is a CDS.

    Equivalent to the subset definition checked by
    :func:`is_minimal_cds_reference`; the test suite asserts the agreement.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("CDS predicates need a connected graph")
    mask = g.mask(s)
    return _mask_is_cds(g, mask) and _mask_minimal_cds(g, mask, mask)


def is_minimal_cds_reference(g: Graph, s: Iterable[int]) -> bool:
    """Literal minimality: a CDS with no proper subset that is also a CDS."""
    if not g.is_connected():
        raise DisconnectedGraphError("CDS predicates need a connected graph")
    mask = g.mask(s)
    if not _mask_is_cds(g, mask):
        return False
    sub = (mask - 1) & mask
    while sub:
        if _mask_is_cds(g, sub):
            return False
        sub = (sub - 1) & mask
    return True


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points, found with one lowlink sweep per component."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    preorder: list[int] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, iter(g.neighbors(root)))]
        disc[root] = timer
        timer += 1
        preorder.append(root)
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = timer
                    timer += 1
                    parent[w] = v
                    preorder.append(w)
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()

    children = [0] * n
    for v in range(n):
        if parent[v] != -1:
            children[parent[v]] += 1

    for v in reversed(preorder):
        low[v] = disc[v]
        for w in g.neighbors(v):
            if parent[w] == v:
                low[v] = min(low[v], low[w])
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])

    result = set()
    for v in range(n):
        if parent[v] == -1:
            if children[v] >= 2:
                result.add(v)
        else:
            for w in g.neighbors(v):
                if parent[w] == v and low[w] >= disc[v]:
                    result.add(v)
                    break
    return frozenset(result)


def _two_color_sweep(g: Graph):
    """BFS 2-coloring. Returns (coloring, None) or (None, odd closed walk)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    # conflict edge closes an odd walk through the BFS root
                    up_v = [v]
                    while parent[up_v[-1]] != -1:
                        up_v.append(parent[up_v[-1]])
                    up_w = [w]
                    while parent[up_w[-1]] != -1:
                        up_w.append(parent[up_w[-1]])
                    walk = list(reversed(up_v)) + up_w
                    return None, tuple(walk)
    return tuple(color), None


def two_coloring(g: Graph) -> tuple[int, ...] | None:
    """A proper 2-coloring as a tuple indexed by vertex, or None."""
    colors, _ = _two_color_sweep(g)
    return colors


def odd_closed_walk(g: Graph) -> tuple[int, ...] | None:
    """An odd closed walk certifying non-bipartiteness, or None if bipartite."""
    _, walk = _two_color_sweep(g)
    return walk


def degeneracy(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Min-degree elimination. Returns (d, order).

    In the returned order every vertex has at most d neighbors occurring
    later, which witnesses the value exactly.
    """
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    alive = [True] * n
    order: list[int] = []
    d = 0
    for _ in range(n):
        v = min((deg[u], u) for u in range(n) if alive[u])[1]
        d = max(d, deg[v])
        alive[v] = False
        order.append(v)
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
    return d, tuple(order)


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8)


@lru_cache(maxsize=None)
def _pair_table(n: int):
    rows, cols = np.triu_indices(n, 1)
    weights = 1 << np.arange(len(rows) - 1, -1, -1, dtype=np.int64)
    return rows, cols, weights


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: order byte plus the minimum adjacency bit
    pattern over all vertex permutations. Equal iff isomorphic.

    Guarded at n <= 8; the brute-force sweep is meant for the small-order
    generator, not general graphs.
    """
    n = g.n
    if n > CANONICAL_MAX_ORDER:
        raise ValueError(f"canonical_form is limited to order {CANONICAL_MAX_ORDER}")
    if n <= 1:
        return bytes([n]) + (0).to_bytes(4, "big")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = True
    perms = _perm_table(n)
    rows, cols, weights = _pair_table(n)
    relabeled = adj[perms[:, :, None], perms[:, None, :]]
    values = relabeled[:, rows, cols] @ weights
    return bytes([n]) + int(values.min()).to_bytes(4, "big")
