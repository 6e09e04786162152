"""Constructions that combine nonadaptive codes, one-time feedback and doubling."""

from __future__ import annotations

from ..bounds import ball_volume, m_cf, theorem5_condition
from ..channel import symmetric_channel
from ..cloud import FeedbackCode, from_block_code
from ..field import (
    BlockCode,
    TargetUnreachable,
    greedy_gv_code,
    min_degree_greedy_code,
    hamming_code,
    hamming_length,
    is_prime_power,
    make_field,
    NotPrimePower,
)
from ..verify import require_certified
from .dada import DadaRound, dada
from .onetime import ConditionViolated, theorem2_compose, theorem3_rs_analog


def hamming_k(q: int, n: int) -> int | None:
    """k >= 2 with n == (q^k - 1)/(q - 1), if any."""
    k = 2
    while hamming_length(q, k) < n:
        k += 1
    return k if hamming_length(q, k) == n else None


def nonadaptive_hamming(q: int, k: int, guard: int | None = None) -> FeedbackCode:
    return from_block_code(hamming_code(make_field(q), k, guard), symmetric_channel(q))


def suffix_code(q: int, n2: int, size: int, guard: int | None = None) -> BlockCode:
    """A single-error-correcting code of length ``n2`` with exactly ``size`` words.

    Tries a Hamming subcode, then the lexicographic greedy code, then the
    min-degree greedy code (small spaces only).
    """
    k = hamming_k(q, n2) if is_prime_power(q) and q <= 16 else None
    if k is not None and q ** (n2 - k) >= size:
        return hamming_code(make_field(q), k, guard).subcode(size)
    try:
        return greedy_gv_code(q, n2, 3, size, guard)
    except TargetUnreachable:
        if q**n2 > 20_000:
            raise
    return min_degree_greedy_code(q, n2, 3, size).subcode(size)


def theorem2_code(q: int, n: int, n1: int, n2: int, guard: int | None = None, certify: bool = True) -> FeedbackCode:
    """One-time-feedback code of size q^n1 * floor(q^n2 / (1 + n(q-1)))."""
    size = q**n2 // ball_volume(q, n)
    if size < 1:
        raise ConditionViolated(f"no suffix words fit: q^{n2} < 1 + {n}({q}-1)")
    code = theorem2_compose(q, n, n1, n2, suffix_code(q, n2, size, guard), guard=guard, certify=False)
    return require_certified(code, guard) if certify else code


def complete_chain(
    q: int,
    n: int,
    guard: int | None = None,
    trace: list[DadaRound] | None = None,
    certify: bool = True,
) -> FeedbackCode:
    """Optimal complete-feedback-size code: the q^(q-1) code of length q+1,
    doubled one symbol at a time up to ``n``."""
    if n < q + 1:
        raise ValueError(f"need n >= q + 1, got q={q}, n={n}")
    code = theorem3_rs_analog(q, q + 1, guard, certify=False)
    while code.n < n:
        code = dada(code, trace=trace, certify=False, guard=guard)
    assert len(code) == m_cf(q, n)
    return require_certified(code, guard) if certify else code


def prop1_ham_plus_one(q: int, k: int, guard: int | None = None, certify: bool = True) -> FeedbackCode:
    """Doubling applied to the q-ary Hamming code: optimal size at Hamming
    length + 1 with one feedback point."""
    if not is_prime_power(q):
        raise NotPrimePower(f"{q} is not a prime power")
    base = nonadaptive_hamming(q, k, guard)
    out = dada(base, certify=False, guard=guard)
    assert len(out) == m_cf(q, base.n + 1)
    return require_certified(out, guard) if certify else out


def two_instance_plan(q: int, n: int, guard: int | None = None) -> tuple[int, int, BlockCode]:
    """Split ``n - 1 = n1 + n2`` and a suffix code for the one-time-feedback
    code that gets doubled.

    The Hamming split (largest Hamming length below n - 1) is used when its
    doubled size clears q^n / (1 + n(q-1)).  Otherwise every split is tried
    with the concrete inequality, smallest suffix length first, and the
    first split whose suffix code can actually be built wins.  For q = 3 this
    fallback is what covers n = 9..12.
    """
    vol_in, vol_out = ball_volume(q, n - 1), ball_volume(q, n)

    def clears(n1: int, size: int) -> bool:
        return q ** (n1 + 1) * size * vol_out > q**n

    try:
        split = theorem5_condition(q, n)
    except ValueError:
        split = None
    if split is not None and split.holds:
        size = q**split.n2 // vol_in
        return split.n1, split.n2, suffix_code(q, split.n2, size, guard)
    for n2 in range(2, n - 1):
        n1 = n - 1 - n2
        size = q**n2 // vol_in
        if size < 1 or not clears(n1, size):
            continue
        try:
            return n1, n2, suffix_code(q, n2, size, guard)
        except TargetUnreachable:
            continue
    raise ConditionViolated(f"no one-time split of length {n - 1} doubles past the Hamming range for q={q}, n={n}")


def two_instance(q: int, n: int, guard: int | None = None, certify: bool = True) -> FeedbackCode:
    """Complete-feedback-optimal size with at most two feedback points.

    Hamming lengths and Hamming lengths + 1 are served by the Hamming code
    and by :func:`prop1_ham_plus_one`; every other length uses a one-time
    feedback code of length n-1 followed by one doubling step.
    """
    if not is_prime_power(q):
        raise NotPrimePower(f"{q} is not a prime power")
    if n < q + 1:
        raise ValueError(f"need n >= q + 1, got q={q}, n={n}")
    k = hamming_k(q, n)
    if k is not None:
        code = nonadaptive_hamming(q, k, guard)
        assert len(code) == m_cf(q, n)
        return require_certified(code, guard) if certify else code
    k = hamming_k(q, n - 1)
    if k is not None:
        return prop1_ham_plus_one(q, k, guard, certify)

    n1, n2, suffix = two_instance_plan(q, n, guard)
    inner = theorem2_compose(q, n - 1, n1, n2, suffix, guard=guard, certify=False)
    out = dada(inner, certify=False, guard=guard)
    assert len(out) == m_cf(q, n)
    return require_certified(out, guard) if certify else out
