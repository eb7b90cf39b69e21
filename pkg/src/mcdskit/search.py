"""Streaming search for base blocks that would improve the known growth rate.

Candidates arrive as graph6 lines (from a file or the internal small-order
generator). Each is evaluated over a policy of attachment sets, keeping the
best per-block count, and compared against an exact threshold: in beat-t4
mode a block of order m is a hit when its count C satisfies C^9 > 36^m.
Hits go out as JSON lines followed by a marked summary object; the output is
byte-identical at any parallelism width because results are merged by input
sequence number and carry no timing fields.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, TextIO

from .bounds import REFERENCE_COUNT, REFERENCE_ORDER, threshold
from .codec import Graph6ParseError, emit_graph6, iter_graph6_lines, parse_graph6
from .constructions import BlockSpec, compose_blocks
from .enumeration import block_mcds, count_mcds
from .graph import Graph, canonical_form, iter_bits

GENERATOR_MAX_ORDER = 7
POLICY_ALL_MAX_ORDER = 10
PRODUCT_CHECK_MAX_ORDER = 26

Policy = str | Sequence[Iterable[int]]


@lru_cache(maxsize=None)
def generate_connected(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs of order n.

    Each class of order n-1 is extended by a new vertex over every nonempty
    neighborhood and the results are deduplicated by canonical form. Every
    connected graph has a vertex whose removal keeps it connected, so the
    augmentation reaches every class. Deterministic order: by edge count,
    then canonical form.
    """
    if not 1 <= n <= GENERATOR_MAX_ORDER:
        raise ValueError(
            f"internal generator is limited to order {GENERATOR_MAX_ORDER}; "
            "feed larger candidates as a graph6 stream"
        )
    if n == 1:
        return (Graph(1),)
    seen: dict[bytes, Graph] = {}
    for g in generate_connected(n - 1):
        base_edges = list(g.edges)
        for nb_mask in range(1, 1 << (n - 1)):
            h = Graph(n, base_edges + [(u, n - 1) for u in iter_bits(nb_mask)])
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
    return tuple(g for _, g in sorted(seen.items(), key=lambda kv: (kv[1].m, kv[0])))


def connected_graph6_stream(max_n: int) -> Iterator[str]:
    """graph6 lines for every connected graph of order 1..max_n, generator order."""
    for n in range(1, max_n + 1):
        for g in generate_connected(n):
            yield emit_graph6(g)


@dataclass(frozen=True)
class CandidateEvaluation:
    attachment: tuple[int, ...] | None
    count: int
    skipped_attachments: int


def _policy_attachments(h: Graph, policy: Policy, max_policy_order: int):
    if policy == "all":
        if h.n > max_policy_order:
            raise ValueError(
                f"policy 'all' is capped at block order {max_policy_order}, got {h.n}"
            )
        for mask in range(1, 1 << h.n):
            yield tuple(iter_bits(mask))
    elif policy == "full":
        yield tuple(range(h.n))
    else:
        for a in policy:
            yield tuple(sorted(a))


def evaluate_candidate(
    h: Graph,
    policy: Policy = "all",
    max_policy_order: int = POLICY_ALL_MAX_ORDER,
) -> CandidateEvaluation:
    """Best (attachment, count) over the policy.

    Attachment sets whose hub-augmented graph is disconnected are skipped and
    counted. Ties break toward the lexicographically least sorted attachment.
    """
    best_a: tuple[int, ...] | None = None
    best_count = -1
    skipped = 0
    for att in _policy_attachments(h, policy, max_policy_order):
        try:
            spec = BlockSpec(h, frozenset(att))
        except ValueError:
            skipped += 1
            continue
        c = block_mcds(spec).count
        if c > best_count or (c == best_count and best_a is not None and att < best_a):
            best_a, best_count = att, c
    if best_a is None:
        return CandidateEvaluation(None, 0, skipped)
    return CandidateEvaluation(best_a, best_count, skipped)


@dataclass(frozen=True)
class SearchConfig:
    """Harness configuration.

    mode 'beat-t4' compares per-block counts against the exact reference
    threshold for the candidate's order; 'min-count' uses a fixed bar.
    """

    policy: Policy = "all"
    mode: str = "beat-t4"
    min_count: int | None = None
    jobs: int = 1
    max_policy_order: int = POLICY_ALL_MAX_ORDER
    product_check: bool = True

    def __post_init__(self):
        if self.mode not in ("beat-t4", "min-count"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "min-count" and (self.min_count is None or self.min_count < 1):
            raise ValueError("min-count mode needs min_count >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


@dataclass(frozen=True)
class SearchHit:
    seq: int
    graph6: str
    order: int
    attachment: tuple[int, ...]
    count: int
    threshold: int
    rate: float


@dataclass
class SearchOutcome:
    exit_code: int          # 0 completed, 2 completed with skips, 1 aborted
    processed: int
    hits: list[SearchHit]
    summary: dict


def _worker(item):
    seq, lineno, line, policy, max_policy_order = item
    h = parse_graph6(line)
    ev = evaluate_candidate(h, policy, max_policy_order)
    return seq, lineno, line, h.n, ev


def _rate_improves(count_a: int, order_a: int, count_b: int, order_b: int) -> bool:
    """Exact comparison count_a^(1/order_a) > count_b^(1/order_b)."""
    return count_a**order_b > count_b**order_a


def search_stream(lines: Iterable[str], config: SearchConfig, out: TextIO) -> SearchOutcome:
    """Evaluate every stream graph once; emit hit JSON lines plus a summary.

    Malformed lines are recorded as skips and processing continues; an I/O
    failure of the input aborts with a partial summary. Output order follows
    the input sequence numbers at every parallelism width.
    """
    skips: list[dict] = []

    def work_items():
        seq = 0
        for lineno, line in iter_graph6_lines(lines):
            seq += 1
            try:
                h = parse_graph6(line)
            except Graph6ParseError as exc:
                skips.append({"seq": seq, "line": lineno, "error": str(exc)})
                continue
            if config.policy == "all" and h.n > config.max_policy_order:
                skips.append(
                    {
                        "seq": seq,
                        "line": lineno,
                        "error": f"order {h.n} exceeds the policy cap {config.max_policy_order}",
                    }
                )
                continue
            yield seq, lineno, line, config.policy, config.max_policy_order

    processed = 0
    hits: list[SearchHit] = []
    skipped_attachments = 0
    product_checks = 0
    product_failures = 0
    best: SearchHit | None = None
    aborted = False
    abort_error = ""

    pool = None
    if config.jobs > 1:
        pool = multiprocessing.Pool(config.jobs)
        results = pool.imap(_worker, work_items(), chunksize=1)
    else:
        results = map(_worker, work_items())

    try:
        for seq, lineno, line, order, ev in results:
            processed += 1
            skipped_attachments += ev.skipped_attachments
            if ev.attachment is None:
                continue
            bar = threshold(order) if config.mode == "beat-t4" else config.min_count
            rate = ev.count ** (1.0 / order)
            if best is None or _rate_improves(ev.count, order, best.count, best.order):
                best = SearchHit(seq, line, order, ev.attachment, ev.count, bar, rate)
            if ev.count >= bar:
                hit = SearchHit(seq, line, order, ev.attachment, ev.count, bar, rate)
                hits.append(hit)
                out.write(
                    json.dumps(
                        {
                            "seq": hit.seq,
                            "graph6": hit.graph6,
                            "order": hit.order,
                            "attachment": list(hit.attachment),
                            "count": str(hit.count),
                            "threshold": str(hit.threshold),
                            "rate": hit.rate,
                        }
                    )
                    + "\n"
                )
                if config.product_check and 2 * order + 1 <= PRODUCT_CHECK_MAX_ORDER:
                    product_checks += 1
                    spec = BlockSpec(parse_graph6(line), frozenset(hit.attachment))
                    composed = compose_blocks(spec, 2)
                    if count_mcds(composed, guard_limit=composed.n) != hit.count**2:
                        product_failures += 1
    except OSError as exc:
        aborted = True
        abort_error = str(exc)
    finally:
        if pool is not None:
            if aborted:
                pool.terminate()
            else:
                pool.close()
            pool.join()

    status = "aborted" if aborted else ("completed-with-skips" if skips else "completed")
    summary = {
        "processed": processed,
        "hits": len(hits),
        "skips": skips,
        "skipped_attachments": skipped_attachments,
        "product_checks": product_checks,
        "product_failures": product_failures,
        "best": None
        if best is None
        else {
            "seq": best.seq,
            "graph6": best.graph6,
            "order": best.order,
            "attachment": list(best.attachment),
            "count": str(best.count),
            "rate": best.rate,
        },
        "status": status,
    }
    if aborted:
        summary["error"] = abort_error
    out.write(json.dumps({"summary": summary}) + "\n")
    exit_code = 1 if aborted else (2 if skips else 0)
    return SearchOutcome(exit_code, processed, hits, summary)
