"""Rotation systems and face tracing for combinatorial embeddings.

A rotation system assigns each vertex a cyclic order of its neighbors. Faces
are traced with the next-edge rule: after arriving along the directed edge
(u, v), leave along (v, w) where w is the cyclic successor of u in the
rotation at v. A rotation describes a plane embedding exactly when the face
count satisfies Euler's formula.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph

Rotation = Sequence[Sequence[int]]


def validate_rotation(g: Graph, rotation: Rotation) -> None:
    """Raise ValueError unless each rotation list permutes that vertex's adjacency."""
    if len(rotation) != g.n:
        raise ValueError(f"rotation has {len(rotation)} entries for order {g.n}")
    for v in range(g.n):
        if sorted(rotation[v]) != list(g.neighbors(v)):
            raise ValueError(f"rotation at vertex {v} is not a permutation of its neighbors")


def trace_faces(g: Graph, rotation: Rotation) -> list[tuple[int, ...]]:
    """All faces of the embedding, each a closed vertex walk (start repeated implicitly).

    Every directed edge lands in exactly one face, so the face lengths total 2m.
    """
    validate_rotation(g, rotation)
    succ: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        order = rotation[v]
        d = len(order)
        for i, u in enumerate(order):
            succ[(u, v)] = order[(i + 1) % d]

    faces: list[tuple[int, ...]] = []
    seen: set[tuple[int, int]] = set()
    for u0, v0 in sorted(succ):
        if (u0, v0) in seen:
            continue
        walk: list[int] = []
        u, v = u0, v0
        while (u, v) not in seen:
            seen.add((u, v))
            walk.append(u)
            u, v = v, succ[(u, v)]
        faces.append(tuple(walk))
    return faces


def satisfies_euler(g: Graph, rotation: Rotation) -> bool:
    """True iff the traced face count F equals m - n + 2 (genus zero)."""
    return len(trace_faces(g, rotation)) == g.m - g.n + 2
