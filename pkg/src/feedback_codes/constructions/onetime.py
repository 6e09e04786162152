"""Codes with a single feedback point, built from per-prefix suffix codes.

The first ``n1`` symbols carry a prefix ``u``; the last ``n2`` symbols carry a
codeword of a nonadaptive code ``C(u)``.  If the channel corrupts the prefix
into ``v``, the encoder learns ``v`` at the feedback point and sends a word
that is free in ``C(v)`` and reserved for ``(u, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from ..bounds import ball_volume
from ..channel import ErrorGraph, PrefixGraph, prefix_graph, symmetric_channel, word_outputs
from ..cloud import BlockPartition, Cloud, FeedbackCode, legal_branches
from ..field import BlockCode, hamming_length
from ..verify import require_certified, theorem1_condition_check
from ..words import Word, all_words, check_guard, rank, unrank

SuffixCodes = Union[BlockCode, Sequence[BlockCode], Mapping[int, BlockCode]]


class ConditionViolated(ValueError):
    """Some output prefix has fewer free suffix words than senders that can reach it."""


@dataclass(frozen=True)
class AssignmentTable:
    """For each received prefix ``v`` (by rank): ``(u, j) -> free suffix word``."""

    assignments: dict[int, dict[tuple[int, int], Word]]
    free_counts: dict[int, int]

    def demand(self, v: int) -> int:
        return len(self.assignments[v])


def _suffix_for(codes: SuffixCodes, u: int) -> BlockCode:
    if isinstance(codes, BlockCode):
        return codes
    return codes[u]


def suffix_free_words(code: BlockCode, channel: ErrorGraph) -> list[Word]:
    """Words of length ``code.n`` outside every cloud of ``code``, in rank order."""
    covered = set()
    for c in code.codewords:
        covered |= word_outputs(channel, c)
    return [w for w in all_words(code.q, code.n) if w not in covered]


def assign_free_words(graph: PrefixGraph, codes: SuffixCodes, channel: ErrorGraph) -> AssignmentTable:
    """Reserve a distinct free word of ``C(v)`` for every ``(u, j)`` with ``u -> v``.

    Senders are served in ascending ``(u, j)``, free words handed out in
    ascending rank.
    """
    size = channel.q**graph.n1
    free = {}
    for v in range(size):
        free[v] = suffix_free_words(_suffix_for(codes, v), channel)
    sizes = [len(_suffix_for(codes, u)) for u in range(size)]
    counts = [len(free[v]) for v in range(size)]
    if not theorem1_condition_check(graph, sizes, counts):
        worst = max(range(size), key=lambda v: sum(sizes[u] for u in graph.predecessors[v]) - counts[v])
        need = sum(sizes[u] for u in graph.predecessors[worst])
        raise ConditionViolated(
            f"prefix {unrank(worst, channel.q, graph.n1)} is reachable by {need} messages "
            f"but its suffix code leaves {counts[worst]} free words"
        )
    table: dict[int, dict[tuple[int, int], Word]] = {}
    for v in range(size):
        pool = iter(free[v])
        table[v] = {(u, j): next(pool) for u in graph.predecessors[v] for j in range(sizes[u])}
    return AssignmentTable(table, dict(enumerate(counts)))


def theorem2_compose(
    q: int,
    n: int,
    n1: int,
    n2: int,
    suffix_codes: SuffixCodes,
    channel: ErrorGraph | None = None,
    guard: int | None = None,
    certify: bool = True,
) -> FeedbackCode:
    """Glue prefix words to suffix codes with one feedback point after ``n1``.

    ``suffix_codes`` is one code used for every prefix, or one code per
    prefix rank.  Message ids run over ``(u, j)`` in lexicographic order.
    """
    if n1 < 1 or n2 < 1 or n1 + n2 != n:
        raise ValueError(f"bad split {n1} + {n2} of n={n}")
    channel = channel or symmetric_channel(q)
    check_guard(q**n, guard, "composed code word space")
    graph = prefix_graph(channel, n1, guard)
    table = assign_free_words(graph, suffix_codes, channel)

    for u in range(q**n1):
        c = _suffix_for(suffix_codes, u)
        if c.n != n2 or c.q != q:
            raise ValueError(f"suffix code for prefix {u} has q={c.q}, n={c.n}; expected q={q}, n={n2}")
        if c.min_distance < 3 and len(c) > 1:
            raise ValueError(f"suffix code for prefix {u} is not single-error-correcting")

    partition = BlockPartition((n1, n2))
    clouds = []
    for u in range(q**n1):
        prefix = unrank(u, q, n1)
        for j, cw in enumerate(_suffix_for(suffix_codes, u).codewords):
            root = prefix + tuple(cw)
            branches = {}
            for p, v in legal_branches(channel, root):
                if p <= n1:
                    received = rank(prefix[: p - 1] + (v,) + prefix[p:], q)
                    branches[(p, v)] = table.assignments[received][(u, j)]
                else:
                    branches[(p, v)] = ()
            clouds.append(Cloud(len(clouds), root, branches))
    code = FeedbackCode(q, channel, partition, clouds)
    return require_certified(code, guard) if certify else code


def corollary1(q: int, k: int, guard: int | None = None, certify: bool = True) -> FeedbackCode:
    """Perfect one-time-feedback code of Hamming length (q^k-1)/(q-1), any q."""
    if k < 2:
        raise ValueError("need k >= 2")
    n = hamming_length(q, k)
    zero = BlockCode(q, k, ((0,) * k,), 3)
    return theorem2_compose(q, n, n - k, k, zero, guard=guard, certify=certify)


def theorem3_rs_analog(q: int, n: int, guard: int | None = None, certify: bool = True) -> FeedbackCode:
    """q^(n-2) messages with one feedback point, for 3 <= n <= q + 1."""
    if n > q + 1:
        raise ValueError(f"need n <= q + 1, got q={q}, n={n}")
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    assert (q - 1) * (n - 2) <= q * q - ball_volume(q, 2)
    zero = BlockCode(q, 2, ((0, 0),), 3)
    return theorem2_compose(q, n, n - 2, 2, zero, guard=guard, certify=certify)
