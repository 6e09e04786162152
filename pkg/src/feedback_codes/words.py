"""Words over a q-ary alphabet.

A word is a tuple of ints in ``[0, q)``.  Tuples keep clouds readable when
printed; the integer rank (base-q value, most significant symbol first) is
used wherever a compact key is needed.
"""

from __future__ import annotations

from typing import Iterator, Sequence

Word = tuple[int, ...]

#: Operations that materialise q**n objects refuse to run above this size.
DEFAULT_GUARD = 20_000_000


class GuardExceeded(ValueError):
    """Raised when an enumeration would exceed the configured guard."""


def check_guard(count: int, guard: int | None = None, what: str = "enumeration") -> None:
    limit = DEFAULT_GUARD if guard is None else guard
    if count > limit:
        raise GuardExceeded(f"{what} of size {count} exceeds guard {limit}")


def check_alphabet(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"alphabet size must be an integer >= 2, got {q!r}")


def word(symbols: Sequence[int] | str, q: int | None = None) -> Word:
    """Build a word from a sequence of ints or a digit string like ``"012"``."""
    w = tuple(int(c) for c in symbols)
    if q is not None:
        for s in w:
            if not 0 <= s < q:
                raise ValueError(f"symbol {s} outside alphabet of size {q}")
    return w


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def rank(w: Sequence[int], q: int) -> int:
    r = 0
    for s in w:
        if not 0 <= s < q:
            raise ValueError(f"symbol {s} outside alphabet of size {q}")
        r = r * q + s
    return r


def unrank(i: int, q: int, n: int) -> Word:
    if not 0 <= i < q**n:
        raise ValueError(f"index {i} outside [0, {q}**{n})")
    out = [0] * n
    for pos in range(n - 1, -1, -1):
        i, out[pos] = divmod(i, q)
    return tuple(out)


def split(w: Word, p: int) -> tuple[Word, Word]:
    if not 0 <= p <= len(w):
        raise ValueError(f"split point {p} outside [0, {len(w)}]")
    return w[:p], w[p:]


def concat(a: Sequence[int], b: Sequence[int]) -> Word:
    return tuple(a) + tuple(b)


def all_words(q: int, n: int, guard: int | None = None) -> Iterator[Word]:
    """All q**n words in rank order."""
    check_guard(q**n, guard, "word space")
    for i in range(q**n):
        yield unrank(i, q, n)


def ball(w: Word, q: int, radius: int = 1) -> list[Word]:
    """Words within Hamming distance ``radius`` of ``w`` (symmetric alphabet)."""
    out = [w]
    frontier = [(w, -1)]
    for _ in range(radius):
        nxt = []
        for v, last in frontier:
            for p in range(last + 1, len(v)):
                for s in range(q):
                    if s != w[p]:
                        u = v[:p] + (s,) + v[p + 1:]
                        out.append(u)
                        nxt.append((u, p))
        frontier = nxt
    return out
