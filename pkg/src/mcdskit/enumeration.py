"""Exact enumeration and counting of minimal connected dominating sets.

The engine walks every subset of the free vertices as an ascending bitmask
counter, with forced vertices pre-set and compressed out of the counter.
Each candidate is screened with the mask predicates: closed-neighborhood
coverage, induced connectivity, then single-deletion minimality over the
non-forced members. Counts are plain Python integers, so the composite
product counts never overflow.

Minimality is taken relative to the forced set: a solution is minimal when
no proper subset that still contains every forced vertex is a CDS. With no
forced vertices, or with forced vertices that lie in every CDS (cut vertices
always do, on three or more vertices), this coincides with the absolute
definition.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .constructions import BlockSpec
from .graph import (
    DisconnectedGraphError,
    Graph,
    _mask_connected,
    _mask_dominates,
    _mask_minimal_cds,
    cut_vertices,
    iter_bits,
)

DEFAULT_GUARD = 30
DEFAULT_MATERIALIZE_CAP = 10**6


class SubsetGuardError(RuntimeError):
    """Subset space too large for brute force under the configured guard."""


@dataclass(frozen=True)
class EnumerationRequest:
    """One enumeration job.

    ``intersect_filter`` keeps only solutions meeting the given set;
    ``forced`` names vertices assumed to be in every solution. The guard
    refuses graphs with more than ``guard_limit`` vertices, since the subset
    space doubles per vertex.
    """

    graph: Graph
    collect: bool = False
    intersect_filter: frozenset[int] | None = None
    forced: frozenset[int] | None = None
    guard_limit: int = DEFAULT_GUARD
    materialize_cap: int = DEFAULT_MATERIALIZE_CAP


@dataclass
class EnumerationResult:
    count: int
    sets: list[frozenset[int]] | None
    subsets_inspected: int
    cds_found: int
    elapsed: float


def _enumerate_masks(
    g: Graph,
    forced_mask: int,
    filter_mask: int | None,
    on_minimal: Callable[[int], None] | None,
) -> tuple[int, int, int]:
    """Core loop. Returns (count, subsets_inspected, cds_found)."""
    n = g.n
    full = g.full_mask
    adj = g._adj_masks
    closed = g._closed_masks

    free = [v for v in range(n) if not (forced_mask >> v) & 1]
    free_bit = [1 << v for v in free]
    free_closed = [closed[v] for v in free]
    base_dom = 0
    mm = forced_mask
    while mm:
        low = mm & -mm
        base_dom |= closed[low.bit_length() - 1]
        mm ^= low

    count = 0
    cds_found = 0
    total = 1 << len(free)
    for counter in range(total):
        mask = forced_mask
        dom = base_dom
        mm = counter
        while mm:
            low = mm & -mm
            i = low.bit_length() - 1
            mask |= free_bit[i]
            dom |= free_closed[i]
            mm ^= low
        if dom != full or mask == 0:
            continue
        if not _mask_connected(adj, mask):
            continue
        cds_found += 1
        if filter_mask is not None and not (mask & filter_mask):
            continue
        if not _mask_minimal_cds(g, mask, mask & ~forced_mask):
            continue
        count += 1
        if on_minimal is not None:
            on_minimal(mask)
    return count, total, cds_found


def enumerate_mcds(
    request: EnumerationRequest,
    sink: Callable[[frozenset[int]], None] | None = None,
) -> EnumerationResult:
    """Enumerate minimal connected dominating sets of a connected graph.

    Solutions are visited in ascending order of their bitmask encoding. With
    ``collect`` they are materialized (up to ``materialize_cap``); a ``sink``
    receives every solution regardless of the cap. Counting is exact either
    way.
    """
    g = request.graph
    if not g.is_connected():
        raise DisconnectedGraphError("enumeration requires a connected graph")
    if g.n > request.guard_limit:
        raise SubsetGuardError(
            f"order {g.n} exceeds the brute-force guard ({request.guard_limit}); "
            "decompose hub composites with block_mcds/composite_count_via_blocks, "
            "or raise the guard explicitly"
        )
    forced_mask = g.mask(request.forced) if request.forced else 0
    filter_mask = (
        g.mask(request.intersect_filter) if request.intersect_filter is not None else None
    )

    sets: list[frozenset[int]] | None = [] if request.collect else None

    def deliver(mask: int) -> None:
        s = g.vertex_set(mask)
        if sets is not None and len(sets) < request.materialize_cap:
            sets.append(s)
        if sink is not None:
            sink(s)

    on_minimal = deliver if (request.collect or sink is not None) else None
    start = time.perf_counter()
    count, inspected, cds_found = _enumerate_masks(g, forced_mask, filter_mask, on_minimal)
    elapsed = time.perf_counter() - start
    return EnumerationResult(count, sets, inspected, cds_found, elapsed)


def count_mcds(g: Graph, guard_limit: int = DEFAULT_GUARD) -> int:
    """Exact number of minimal connected dominating sets.

    Seeds the forced set with the cut vertices (every CDS of a graph on three
    or more vertices contains all of them), which prunes the subset space
    without changing the count.
    """
    forced = cut_vertices(g) if g.n >= 3 else frozenset()
    request = EnumerationRequest(g, forced=forced, guard_limit=guard_limit)
    return enumerate_mcds(request).count


def block_mcds(
    block: BlockSpec,
    collect: bool = False,
    sink: Callable[[frozenset[int]], None] | None = None,
    guard_limit: int = DEFAULT_GUARD,
) -> EnumerationResult:
    """Per-block solutions: minimal T inside the block such that the
    attachment set plus N[T] covers the block and T plus the hub induces a
    connected subgraph. Minimality quantifies over T only; the hub is fixed.

    The empty T qualifies exactly when the attachment set is the whole block.
    """
    if block.h.n > guard_limit:
        raise SubsetGuardError(
            f"block order {block.h.n} exceeds the brute-force guard ({guard_limit})"
        )
    aug, hub = block.augmented()
    hub_mask = 1 << hub

    sets: list[frozenset[int]] | None = [] if collect else None

    def deliver(mask: int) -> None:
        s = aug.vertex_set(mask & ~hub_mask)
        if sets is not None:
            sets.append(s)
        if sink is not None:
            sink(s)

    on_minimal = deliver if (collect or sink is not None) else None
    start = time.perf_counter()
    count, inspected, cds_found = _enumerate_masks(aug, hub_mask, None, on_minimal)
    elapsed = time.perf_counter() - start
    return EnumerationResult(count, sets, inspected, cds_found, elapsed)


def composite_count_via_blocks(block: BlockSpec, k: int) -> int:
    """Closed composite count: the per-block count raised to the k-th power.

    Valid for k >= 2, where the hub is a cut vertex and solutions factor
    per block. For k = 1 the hub may be omittable, so count the composed
    graph directly with count_mcds instead.
    """
    if k < 2:
        raise ValueError(
            "the product shortcut needs k >= 2; for k = 1 run count_mcds on the composed graph"
        )
    return block_mcds(block).count ** k
