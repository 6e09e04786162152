"""Double-and-delete: grow a symmetric-channel feedback code by one symbol.

Every input cloud is copied once per leading symbol ``i``.  A copy with
leading symbol ``i`` lacks exactly the members that start with the other
``q - 1`` symbols; it is *completed* by taking one free word from each other
class.  When free words run short, whole incomplete copies are deleted (one
per class) and their words become free.  The counts in all ``q`` classes move
in lockstep until the final ``m == 1`` step.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from ..bounds import ball_volume, dada_size
from ..cloud import Cloud, FeedbackCode
from ..verify import require_certified
from ..words import rank, unrank


class DadaError(RuntimeError):
    """Bad input or a broken internal invariant; no code is emitted."""


@dataclass(frozen=True)
class DadaRound:
    phase: str
    incomplete: tuple[int, ...]
    free: tuple[int, ...]

    @property
    def symmetric(self) -> bool:
        return len(set(self.incomplete)) == 1 and len(set(self.free)) == 1


class DadaState:
    """Per-class pools for one doubling step.

    ``incomplete[i]`` holds indices of input clouds whose ``i``-prefixed copy
    is still incomplete (ascending); ``free[i]`` is a heap of suffix ranks
    ``z`` such that ``i . z`` belongs to nothing yet.
    """

    def __init__(self, code: FeedbackCode, trace: list[DadaRound] | None = None):
        q, n_in = code.q, code.n
        self.q = q
        self.n = n_in + 1
        self.code = code
        self.members = [[rank(y, q) for y in c.members(code.partition)] for c in code.clouds]
        covered = set()
        for ms in self.members:
            covered.update(ms)
        free = [z for z in range(q**n_in) if z not in covered]
        self.incomplete = [deque(range(len(code.clouds))) for _ in range(q)]
        self.free = [list(free) for _ in range(q)]
        self.completed: list[tuple[int, int, dict[int, int]]] = []
        self.trace = trace

    def counts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(len(d) for d in self.incomplete), tuple(len(f) for f in self.free)

    def record(self, phase: str, check: bool = True) -> None:
        inc, free = self.counts()
        rnd = DadaRound(phase, inc, free)
        if self.trace is not None:
            self.trace.append(rnd)
        if check and not rnd.symmetric:
            raise DadaError(f"class counts diverged in phase {phase}: incomplete={inc}, free={free}")

    def complete(self, cls: int) -> None:
        idx = self.incomplete[cls].popleft()
        points = {}
        for j in range(self.q):
            if j != cls:
                if not self.free[j]:
                    raise DadaError(f"class {j} has no free word left to complete a class-{cls} cloud")
                points[j] = heapq.heappop(self.free[j])
        self.completed.append((cls, idx, points))

    def delete(self, cls: int) -> None:
        idx = self.incomplete[cls].popleft()
        for z in self.members[idx]:
            heapq.heappush(self.free[cls], z)

    def can_complete_round(self) -> bool:
        return all(self.incomplete) and all(len(f) >= self.q - 1 for f in self.free)

    def complete_rounds(self, phase: str) -> None:
        while self.can_complete_round():
            for i in range(self.q):
                self.complete(i)
            self.record(phase)

    def per_class(self) -> tuple[int, int]:
        inc, free = self.counts()
        return inc[0], free[0]

    def run(self) -> None:
        q, n = self.q, self.n
        self.record("start")
        self.complete_rounds("complete")
        while self.per_class()[0] >= n + 1:
            for i in range(q):
                self.delete(i)
            self.record("delete")
            self.complete_rounds("refill")

        m, ell = self.per_class()
        if m == 0:
            return
        if m > n or ell > q - 2:
            raise DadaError(f"endgame reached with m={m}, l={ell} outside m <= {n}, l <= {q - 2}")
        if m >= 2:
            for i in range(q):
                self.delete(i)
            self.record("endgame-delete")
            for _ in range(m - 1):
                if not self.can_complete_round():
                    raise DadaError("endgame ran out of free words")
                for i in range(q):
                    self.complete(i)
                self.record("endgame-complete")
        else:
            r = q - 1 - ell
            for i in range(1, r + 1):
                self.delete(i)
            for i in [0] + list(range(r + 1, q)):
                self.complete(i)
            self.record("endgame-single", check=False)
        if any(self.incomplete):
            raise DadaError("incomplete clouds left after the endgame")

    def emit(self) -> FeedbackCode:
        q, n_in = self.q, self.n - 1
        src = self.code.clouds
        clouds = []
        for cls, idx, points in sorted(self.completed, key=lambda t: (t[0], src[t[1]].message)):
            base = src[idx]
            branches = {(1, j): unrank(z, q, n_in) for j, z in points.items()}
            for (p, v), tail in base.branches.items():
                branches[(p + 1, v)] = tuple(tail)
            clouds.append(Cloud(len(clouds), (cls,) + tuple(base.root), branches))
        return FeedbackCode(q, self.code.channel, self.code.partition.prepend(1), clouds)


def dada(
    code: FeedbackCode,
    *,
    trace: list[DadaRound] | None = None,
    certify: bool = True,
    guard: int | None = None,
) -> FeedbackCode:
    """Extend ``code`` (length n-1) to length n with one extra feedback point
    after the first symbol.  Output size is ``dada_size(q, n, len(code))``."""
    q, n = code.q, code.n + 1
    if code.channel_name != "symmetric":
        raise DadaError("doubling is defined for the symmetric channel only")
    if n <= q:
        raise DadaError(f"doubling needs n > q, got n={n}, q={q}")
    if not len(code):
        raise DadaError("input code is empty")
    vol = ball_volume(q, code.n)
    for c in code.clouds:
        size = len(c.members(code.partition))
        if size != vol or len(set(c.members(code.partition))) != vol:
            raise DadaError(f"input cloud {c.message} has {size} members, expected exactly {vol}")

    state = DadaState(code, trace)
    covered = sum(len(ms) for ms in state.members)
    if covered + len(state.free[0]) != q**code.n:
        raise DadaError("input clouds overlap")
    state.run()
    out = state.emit()
    want = dada_size(q, n, len(code))
    if len(out) != want:
        raise DadaError(f"doubling produced {len(out)} clouds, expected {want}")
    return require_certified(out, guard) if certify else out
