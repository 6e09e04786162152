"""Closed-form size formulas for single-error codes with feedback.

Everything is computed with Python integers; comparisons against rational
quantities are cross-multiplied, never done in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .field import hamming_length, is_prime_power


def _check(q: int, n: int) -> None:
    if q < 2 or n < 1:
        raise ValueError(f"need q >= 2 and n >= 1, got q={q}, n={n}")


def ball_volume(q: int, n: int) -> int:
    """Size of a radius-1 Hamming ball, the minimum cloud size."""
    return 1 + n * (q - 1)


def hamming_bound(q: int, n: int) -> int:
    _check(q, n)
    return q**n // ball_volume(q, n)


class DadaQuantities(NamedTuple):
    U: int
    p: int
    H: int


def dada_quantities(q: int, n: int) -> DadaQuantities:
    """Largest multiple of q not above the Hamming bound, the point deficit
    of q further clouds, and the Hamming bound itself."""
    _check(q, n)
    vol = ball_volume(q, n)
    U = q * (q**n // (q * vol))
    p = vol * (U + q) - q**n
    H = q**n // vol
    assert U % q == 0 and p % q == 0, (q, n, U, p)
    return DadaQuantities(U, p, H)


def _settle(q: int, n: int) -> int:
    U, p, _ = dada_quantities(q, n)
    r, rem = divmod(p, q)
    if rem:
        raise ArithmeticError(f"p_q(n)={p} is not a multiple of q={q}")
    if p >= q * q:
        return U
    if r < q:
        return U + q - r
    raise ArithmeticError(f"p_q(n)={p} fits neither case for q={q}, n={n}")


def m_cf(q: int, n: int) -> int:
    """Optimal size with complete feedback; defined for n >= q + 1."""
    _check(q, n)
    if n <= q:
        raise ValueError(f"m_cf requires n >= q + 1, got q={q}, n={n}")
    return _settle(q, n)


def dada_size(q: int, n: int, m_prev: int) -> int:
    """Size produced by doubling-and-deleting a code of size ``m_prev``."""
    _check(q, n)
    if n <= q:
        raise ValueError(f"doubling step requires n > q, got q={q}, n={n}")
    if m_prev < 1:
        raise ValueError("previous code must be nonempty")
    if q * m_prev < hamming_bound(q, n):
        return q * m_prev
    return _settle(q, n)


def theorem2_size(q: int, n: int, n1: int, n2: int) -> int:
    """Messages carried by the one-time-feedback split ``n = n1 + n2``."""
    _check(q, n)
    if n1 < 1 or n2 < 1 or n1 + n2 != n:
        raise ValueError(f"bad split {n1} + {n2} of n={n}")
    return q**n1 * (q**n2 // ball_volume(q, n))


def best_theorem2_size(q: int, n: int) -> tuple[int, int]:
    """``(size, n1)`` maximising the one-time-feedback split; ties take the largest n1."""
    if n < 2:
        raise ValueError("need n >= 2 for a split")
    best = max(range(1, n), key=lambda n1: (theorem2_size(q, n, n1, n - n1), n1))
    return theorem2_size(q, n, best, n - best), best


def largest_hamming_length_below(q: int, bound: int) -> tuple[int, int] | None:
    """Largest ``(length, k)`` with length = (q^k - 1)/(q - 1) < bound, k >= 2."""
    best = None
    k = 2
    while hamming_length(q, k) < bound:
        best = (hamming_length(q, k), k)
        k += 1
    return best


class TwoInstanceSplit(NamedTuple):
    n1: int
    n2: int
    holds: bool
    sufficient: bool


def theorem5_condition(q: int, n: int) -> TwoInstanceSplit:
    """Split for the two-feedback construction and whether doubling its
    one-time-feedback code of length n-1 overshoots q^n / (1 + n(q-1)).

    ``holds`` is the exact inequality; ``sufficient`` is the cruder
    ``q^n2 >= (q-1)(q n2 + 2)^2`` that implies it for large n2.
    """
    _check(q, n)
    if not is_prime_power(q):
        raise ValueError(f"q={q} is not a prime power")
    if n < q + 1:
        raise ValueError(f"need n >= q + 1, got q={q}, n={n}")
    found = largest_hamming_length_below(q, n - 1)
    if found is None:
        raise ValueError(f"no Hamming length below n - 1 = {n - 1} for q={q}")
    n2, _ = found
    n1 = n - 1 - n2
    lhs = q ** (n1 + 1) * (q**n2 // ball_volume(q, n - 1))
    holds = lhs * ball_volume(q, n) > q**n
    sufficient = q**n2 >= (q - 1) * (q * n2 + 2) ** 2
    return TwoInstanceSplit(n1, n2, holds, sufficient)


# -- swap (0 <-> 1) channel ---------------------------------------------------

def swap_n_max(q: int) -> int:
    """Largest N with 2 (q-2)^(N-1) >= q^(N-1)."""
    if q < 3:
        raise ValueError("swap channel needs q >= 3")
    N = 1
    while 2 * (q - 2) ** N >= q**N:
        N += 1
    return N


def swap_singletons(q: int, n: int) -> int:
    return (q - 2) ** n


def swap_pairs(q: int, n: int) -> int:
    return (q**n - (q - 2) ** n) // 2


def swap_capacity(q: int, n: int) -> int:
    if q < 3 or n < 1:
        raise ValueError(f"need q >= 3 and n >= 1, got q={q}, n={n}")
    N = swap_n_max(q)
    if n > N:
        raise ValueError(f"n={n} exceeds the largest admissible length {N} for q={q}")
    return (q**n + (q - 2) ** n) // 2


@dataclass(frozen=True)
class BoundsReport:
    q: int
    n: int
    H: int
    U: int
    p: int
    r: int | None
    M_cf: int | None
    hamming_bound: int
    best_M1: int | None = None
    best_n1: int | None = None
    swap_N: int | None = None
    swap_M: int | None = None


def compute_bounds(q: int, n: int) -> BoundsReport:
    U, p, H = dada_quantities(q, n)
    mcf = m_cf(q, n) if n >= q + 1 else None
    r = p // q if p < q * q else None
    best_M1 = best_n1 = None
    if n >= 2:
        best_M1, best_n1 = best_theorem2_size(q, n)
    swap_N = swap_M = None
    if q >= 3:
        swap_N = swap_n_max(q)
        if n <= swap_N:
            swap_M = swap_capacity(q, n)
    return BoundsReport(q, n, H, U, p, r, mcf, hamming_bound(q, n), best_M1, best_n1, swap_N, swap_M)
