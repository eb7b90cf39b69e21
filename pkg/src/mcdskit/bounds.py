"""Closed-form block counts, growth rates, and exact improvement thresholds."""

from __future__ import annotations

from dataclasses import dataclass

REFERENCE_COUNT = 36   # per-block solutions of the best known block
REFERENCE_ORDER = 9    # its order

@dataclass(frozen=True)
class RateReport:
    t: int
    block_count: int
    block_order: int
    rate: float
    rate_4dp: str


def block_count_formula(t: int) -> int:
    """Closed form (t^3 + t^2)/2 - t for the attachable solutions of one block.

    t(t-1) solutions take one attachment vertex together with the apex and a
    connecting middle vertex; t * t(t-1)/2 take two attachment vertices plus
    one middle vertex. t^3 + t^2 = t^2(t+1) is always even, so the division
    is exact.
    """
    if t < 2:
        raise ValueError("layer size t must be at least 2")
    return (t**3 + t**2) // 2 - t


def growth_rate(t: int) -> RateReport:
    """Per-vertex growth rate of the block family at layer size t."""
    count = block_count_formula(t)
    order = 2 * t + 1
    rate = count ** (1.0 / order)
    text = f"{rate:.10f}"
    return RateReport(t, count, order, rate, text[: text.index(".") + 5])


def best_t(t_max: int) -> int:
    """Layer size maximizing the growth rate over [2, t_max].

    Compared exactly: a^(1/p) > b^(1/q) iff a^q > b^p. Ties go to smaller t.
    """
    if t_max < 2:
        raise ValueError("t_max must be at least 2")
    best = 2
    best_count = block_count_formula(2)
    best_order = 5
    for t in range(3, t_max + 1):
        count = block_count_formula(t)
        order = 2 * t + 1
        if count**best_order > best_count**order:
            best, best_count, best_order = t, count, order
    return best


def _floor_root(x: int, k: int) -> int:
    """Largest r with r^k <= x, in pure integer arithmetic."""
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    if x == 0:
        return 0
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > x:
        r -= 1
    return r


def threshold(m: int) -> int:
    """Least per-block count an order-m block needs to beat the reference rate.

    Exactly the least C with C^9 > 36^m; no floating point is involved, since
    several of the interesting values sit next to the boundary.
    """
    if m < 1:
        raise ValueError("block order m must be at least 1")
    return _floor_root(REFERENCE_COUNT**m, REFERENCE_ORDER) + 1
