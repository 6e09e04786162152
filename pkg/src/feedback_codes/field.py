"""Small finite fields, q-ary Hamming codes and greedy distance-3 codes.

Elements of GF(p^m) are the integers ``0 .. p^m - 1``; the base-p digits of
an element (least significant first) are its polynomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from .words import Word, check_guard, hamming_distance, rank, unrank

MAX_FIELD_ORDER = 16

# Moduli as coefficient lists, constant term first; monic of degree m.
_MODULI = {
    4: (2, [1, 1, 1]),        # x^2 + x + 1
    8: (2, [1, 1, 0, 1]),     # x^3 + x + 1
    9: (3, [1, 0, 1]),        # x^2 + 1
    16: (2, [1, 1, 0, 0, 1]), # x^4 + x + 1
}


class NotPrimePower(ValueError):
    pass


class TargetUnreachable(ValueError):
    pass


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 and _is_prime(p) else None
    return None


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(mod):
            a[shift + i] = (a[shift + i] - f * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(mod: list[int], p: int) -> bool:
    """Exhaustive test: no monic polynomial of degree 1..m//2 divides ``mod``."""
    m = len(mod) - 1
    for d in range(1, m // 2 + 1):
        for coeffs in product(range(p), repeat=d):
            if not _poly_mod(list(mod), list(coeffs) + [1], p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class Field:
    p: int
    m: int
    modulus: tuple[int, ...]
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        return f"Field(GF({self.q}), modulus={list(self.modulus)})"


def _digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        x, d = divmod(x, p)
        out.append(d)
    return out


def _undigits(ds: list[int], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(ds))


def make_field(q: int) -> Field:
    pm = prime_power(q)
    if pm is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if q > MAX_FIELD_ORDER:
        raise ValueError(f"fields above order {MAX_FIELD_ORDER} are not supported")
    p, m = pm
    if m == 1:
        modulus = [0, 1]
    else:
        modulus = _MODULI[q][1]
        if not is_irreducible(modulus, p):
            raise AssertionError(f"hardcoded modulus for GF({q}) is reducible")

    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        da = _digits(a, p, m)
        for b in range(q):
            db = _digits(b, p, m)
            add[a, b] = _undigits([(x + y) % p for x, y in zip(da, db)], p)
            prod = [0] * (2 * m - 1)
            for i, x in enumerate(da):
                for j, y in enumerate(db):
                    prod[i + j] += x * y
            rem = _poly_mod(prod, modulus, p) if m > 1 else [prod[0] % p]
            mul[a, b] = _undigits(rem + [0] * (m - len(rem)), p)

    neg = np.array([int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)])
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        hits = np.flatnonzero(mul[a] == 1)
        if len(hits) != 1:
            raise AssertionError(f"element {a} of GF({q}) has no unique inverse")
        inv[a] = hits[0]
    return Field(p, m, tuple(modulus), add, mul, neg, inv)


@dataclass(frozen=True)
class BlockCode:
    """A nonadaptive code: a set of equal-length words with a distance floor."""

    q: int
    n: int
    codewords: tuple[Word, ...]
    min_distance: int

    def __len__(self) -> int:
        return len(self.codewords)

    def subcode(self, size: int) -> BlockCode:
        """The first ``size`` codewords in rank order."""
        if size > len(self):
            raise ValueError(f"code has only {len(self)} words, asked for {size}")
        words = sorted(self.codewords, key=lambda w: rank(w, self.q))[:size]
        return BlockCode(self.q, self.n, tuple(words), self.min_distance)

    def check(self) -> None:
        if len(set(self.codewords)) != len(self.codewords):
            raise ValueError("duplicate codewords")
        for i, a in enumerate(self.codewords):
            if len(a) != self.n or any(not 0 <= s < self.q for s in a):
                raise ValueError(f"malformed codeword {a}")
            for b in self.codewords[i + 1:]:
                if hamming_distance(a, b) < self.min_distance:
                    raise ValueError(f"codewords {a} and {b} closer than {self.min_distance}")


def parity_check_matrix(field: Field, k: int) -> np.ndarray:
    """Columns: nonzero vectors of GF(q)^k whose first nonzero entry is 1, in
    lexicographic order."""
    cols = [v for v in product(range(field.q), repeat=k) if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1]
    return np.array(cols, dtype=np.int64).T


def hamming_length(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def hamming_code(field: Field, k: int, guard: int | None = None) -> BlockCode:
    if k < 2:
        raise ValueError("Hamming codes need k >= 2")
    q = field.q
    n = hamming_length(q, k)
    check_guard(q**n, guard, f"GF({q}) Hamming word space")
    H = parity_check_matrix(field, k)
    # The unit vectors appear among the normalised columns; use them as parity
    # positions so that every information assignment has a unique completion.
    parity_pos = []
    for i in range(k):
        e = np.zeros(k, dtype=np.int64)
        e[i] = 1
        parity_pos.append(next(j for j in range(n) if np.array_equal(H[:, j], e)))
    info_pos = [j for j in range(n) if j not in parity_pos]

    words = []
    for info in product(range(q), repeat=len(info_pos)):
        syndrome = [0] * k
        for j, x in zip(info_pos, info):
            if x:
                for r in range(k):
                    syndrome[r] = field.add[syndrome[r], field.mul[H[r, j], x]]
        w = [0] * n
        for j, x in zip(info_pos, info):
            w[j] = x
        for r, j in enumerate(parity_pos):
            w[j] = int(field.neg[syndrome[r]])
        words.append(tuple(int(s) for s in w))
    words.sort(key=lambda w: rank(w, q))
    return BlockCode(q, n, tuple(words), 3)


def gv_guarantee(q: int, n: int) -> int:
    """Lower bound on the size of a greedy distance-3 code run to exhaustion."""
    vol = 1 + n * (q - 1) + comb(n, 2) * (q - 1) ** 2
    return -(-q**n // vol)


def greedy_gv_code(
    q: int,
    n: int,
    min_distance: int = 3,
    target_size: int | None = None,
    guard: int | None = None,
) -> BlockCode:
    """Lexicographic greedy code: keep a word iff it is at distance
    ``>= min_distance`` from everything kept so far."""
    total = q**n
    check_guard(total, guard, "greedy search space")
    blocked = np.zeros(total, dtype=bool)
    kept: list[Word] = []
    radius = min_distance - 1
    for i in range(total):
        if blocked[i]:
            continue
        w = unrank(i, q, n)
        kept.append(w)
        if target_size is not None and len(kept) >= target_size:
            break
        for v in _ball_ranks(w, q, radius):
            blocked[v] = True
    if target_size is not None and len(kept) < target_size:
        raise TargetUnreachable(
            f"greedy search found only {len(kept)} words of length {n} at distance {min_distance}, "
            f"target was {target_size}"
        )
    return BlockCode(q, n, tuple(kept), min_distance)


def _ball_ranks(w: Word, q: int, radius: int) -> list[int]:
    n = len(w)
    base = rank(w, q)
    weights = [q ** (n - 1 - p) for p in range(n)]
    out = [base]
    frontier = [(base, -1)]
    for _ in range(radius):
        nxt = []
        for r, last in frontier:
            for p in range(last + 1, n):
                for s in range(q):
                    if s != w[p]:
                        u = r + (s - w[p]) * weights[p]
                        out.append(u)
                        nxt.append((u, p))
        frontier = nxt
    return out


def min_degree_greedy_code(
    q: int,
    n: int,
    min_distance: int = 3,
    target_size: int | None = None,
    guard: int = 20_000,
) -> BlockCode:
    """Repeatedly keep the open word whose exclusion ball removes the fewest
    open words (ties: lowest rank).  Denser than the lexicographic code for
    nonlinear parameters such as q=3, n=5 (14 words versus 9)."""
    total = q**n
    check_guard(total, guard, "min-degree search space")
    radius = min_distance - 1
    nbrs = [np.array(_ball_ranks(unrank(i, q, n), q, radius)) for i in range(total)]
    open_ = np.ones(total, dtype=bool)
    kept: list[Word] = []
    while open_.any() and (target_size is None or len(kept) < target_size):
        cand = np.flatnonzero(open_)
        deg = np.fromiter((open_[nbrs[i]].sum() for i in cand), dtype=np.int64, count=len(cand))
        i = int(cand[np.argmin(deg)])
        kept.append(unrank(i, q, n))
        open_[nbrs[i]] = False
    if target_size is not None and len(kept) < target_size:
        raise TargetUnreachable(f"min-degree search found {len(kept)} words, target was {target_size}")
    kept.sort(key=lambda w: rank(w, q))
    return BlockCode(q, n, tuple(kept), min_distance)
