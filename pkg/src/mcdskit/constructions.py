"""Builders for the hub-and-block family of extremal graphs.

The base block on 2t+1 vertices has three layers: an attachment layer
X = {x_1..x_t}, an independent middle layer Y = {y_1..y_t}, and an apex z.
Each x_i is adjacent to every y_j with j != i (so X u Y carries a complete
bipartite graph minus a perfect matching, an anti-matching), z is adjacent
to all of Y, and X optionally carries a clique. The composite joins k
disjoint blocks through one hub vertex s adjacent to every x vertex; its
order is k(2t+1) + 1. Inside the composite the hub dominates X, so the
clique on X is redundant and the interesting family drops it.

Vertex labeling is part of the public contract: the hub is vertex 0 and
block b occupies 1 + b(2t+1) .. (b+1)(2t+1), laid out x-layer, y-layer, z.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

HUB = 0


def _check_t(t: int) -> None:
    if t < 2:
        raise ValueError("layer size t must be at least 2 (t = 1 has no anti-matching partner)")


def _block_edges(t: int, offset: int, clique_x: bool) -> list[tuple[int, int]]:
    xs = [offset + i for i in range(t)]
    ys = [offset + t + i for i in range(t)]
    z = offset + 2 * t
    edges = [(xs[i], ys[j]) for i in range(t) for j in range(t) if i != j]
    edges.extend((z, y) for y in ys)
    if clique_x:
        edges.extend((xs[i], xs[j]) for i in range(t) for j in range(i + 1, t))
    return edges


def base_graph(t: int, clique_x: bool = False) -> Graph:
    """The standalone block on 2t+1 vertices; X is 0..t-1, Y is t..2t-1, z is 2t."""
    _check_t(t)
    return Graph(2 * t + 1, _block_edges(t, 0, clique_x))


def base_labels(t: int) -> tuple[str, ...]:
    _check_t(t)
    return tuple(
        [f"x_{i + 1}" for i in range(t)] + [f"y_{i + 1}" for i in range(t)] + ["z"]
    )


def base_x_set(t: int) -> frozenset[int]:
    _check_t(t)
    return frozenset(range(t))


def base_y_set(t: int) -> frozenset[int]:
    _check_t(t)
    return frozenset(range(t, 2 * t))


def base_z_vertex(t: int) -> int:
    _check_t(t)
    return 2 * t


def composite_graph(t: int, k: int, clique_x: bool = False) -> Graph:
    """k blocks joined through the hub vertex 0; order k(2t+1) + 1."""
    _check_t(t)
    if k < 1:
        raise ValueError("block count k must be at least 1")
    span = 2 * t + 1
    edges: list[tuple[int, int]] = []
    for b in range(k):
        offset = 1 + b * span
        edges.extend(_block_edges(t, offset, clique_x))
        edges.extend((HUB, offset + i) for i in range(t))
    return Graph(k * span + 1, edges)


def composite_labels(t: int, k: int) -> tuple[str, ...]:
    _check_t(t)
    labels = ["s"]
    for b in range(1, k + 1):
        labels.extend(f"x_{b}_{i}" for i in range(1, t + 1))
        labels.extend(f"y_{b}_{i}" for i in range(1, t + 1))
        labels.append(f"z_{b}")
    return tuple(labels)


def block_span(t: int, b: int) -> range:
    """Vertex range of block b (0-based) inside the composite labeling."""
    span = 2 * t + 1
    return range(1 + b * span, 1 + (b + 1) * span)


def composite_x_set(t: int, k: int) -> frozenset[int]:
    """All x vertices across the k blocks of a composite."""
    span = 2 * t + 1
    return frozenset(1 + b * span + i for b in range(k) for i in range(t))


@dataclass(frozen=True)
class BlockSpec:
    """A candidate block: a graph plus the attachment set the hub will see.

    The block alone may be disconnected, but together with a hub adjacent to
    the attachment set it must be connected; that is validated here.
    """

    h: Graph
    attachment: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "attachment", frozenset(self.attachment))
        if not self.attachment:
            raise ValueError("attachment set must be nonempty")
        for v in self.attachment:
            if not 0 <= v < self.h.n:
                raise ValueError(f"attachment vertex {v} out of range for order {self.h.n}")
        aug, _ = self.augmented()
        if not aug.is_connected():
            raise ValueError("block plus hub is disconnected; unreachable vertices remain")

    def augmented(self) -> tuple[Graph, int]:
        """The block with a hub appended as vertex h.n, adjacent to the attachment set."""
        hub = self.h.n
        edges = list(self.h.edges) + [(a, hub) for a in sorted(self.attachment)]
        return Graph(hub + 1, edges), hub


def base_block(t: int) -> BlockSpec:
    """The clique-free base block with its x layer as attachment set."""
    return BlockSpec(base_graph(t, clique_x=False), base_x_set(t))


def compose_blocks(block: BlockSpec, k: int) -> Graph:
    """Hub vertex 0 plus k disjoint copies of the block, each attached via its set."""
    if k < 1:
        raise ValueError("block count k must be at least 1")
    span = block.h.n
    edges: list[tuple[int, int]] = []
    for b in range(k):
        offset = 1 + b * span
        edges.extend((offset + u, offset + v) for u, v in block.h.edges)
        edges.extend((HUB, offset + a) for a in sorted(block.attachment))
    return Graph(k * span + 1, edges)


def planar_rotation(k: int) -> tuple[tuple[int, ...], ...]:
    """Rotation system realizing a plane drawing of composite_graph(3, k, False).

    Blocks sit side by side above the hub. Within a block the middle layer is
    drawn in the order y2, y3, y1 and the chord y2-x3 is routed over the apex,
    which frees the remaining block edges to be straight lines. Validity is
    established by the Euler face count, not by a planarity algorithm.
    """
    if k < 1:
        raise ValueError("block count k must be at least 1")
    rot: list[tuple[int, ...]] = [()] * (7 * k + 1)
    hub_order: list[int] = []
    for b in reversed(range(k)):
        offset = 1 + 7 * b
        hub_order.extend((offset + 2, offset + 1, offset))
    rot[HUB] = tuple(hub_order)
    for b in range(k):
        offset = 1 + 7 * b
        x1, x2, x3, y1, y2, y3, z = range(offset, offset + 7)
        rot[x1] = (HUB, y3, y2)
        rot[x2] = (HUB, y1, y3)
        rot[x3] = (HUB, y2, y1)
        rot[y1] = (x2, x3, z)
        rot[y2] = (x1, z, x3)
        rot[y3] = (x1, x2, z)
        rot[z] = (y2, y3, y1)
    return tuple(rot)
