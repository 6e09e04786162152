"""Complete-feedback codes for the channel that only swaps 0 and 1."""

from __future__ import annotations

from ..bounds import swap_n_max, swap_pairs, swap_singletons
from ..channel import swap01_channel
from ..cloud import BlockPartition, Cloud, FeedbackCode
from ..verify import require_certified
from ..words import check_guard, rank


def _shift(c: Cloud, lead: int) -> Cloud:
    return Cloud(c.message, (lead,) + c.root, {(p + 1, v): t for (p, v), t in c.branches.items()})


def _step(clouds: list[Cloud], q: int, n: int) -> list[Cloud]:
    """Length n-1 -> n.  Copies led by 2..q-1 stay as they are; 0- and
    1-led copies of two-word clouds are dissolved and their words complete
    the 0- and 1-led copies of one-word clouds; what remains is paired."""
    part = BlockPartition.complete(n - 1)
    out = [_shift(c, a) for a in range(2, q) for c in clouds]
    singles = [c for c in clouds if not c.branches]
    freed = sorted({y for c in clouds if c.branches for y in c.members(part)}, key=lambda w: rank(w, q))
    if len(freed) > len(singles):
        raise ValueError(f"length {n} exceeds the admissible range for q={q}")
    for b in (0, 1):
        for c, z in zip(singles, freed):
            out.append(Cloud(0, (b,) + c.root, {(1, 1 - b): z}))
    for c0, c1 in zip(singles[len(freed):], singles[len(freed):]):
        out.append(Cloud(0, (0,) + c0.root, {(1, 1): c1.root}))
    return out


def swap_channel_build(q: int, n: int, guard: int | None = None, certify: bool = True) -> FeedbackCode:
    """(q-2)^n one-word clouds plus (q^n - (q-2)^n)/2 two-word clouds,
    covering every word; requires n <= swap_n_max(q)."""
    channel = swap01_channel(q)
    if n < 1 or n > swap_n_max(q):
        raise ValueError(f"need 1 <= n <= {swap_n_max(q)} for q={q}, got n={n}")
    check_guard(q**n, guard, "swap code word space")
    clouds = [Cloud(0, (s,)) for s in range(2, q)] + [Cloud(0, (0,), {(1, 1): ()})]
    for length in range(2, n + 1):
        clouds = _step(clouds, q, length)
    clouds.sort(key=lambda c: rank(c.root, q))
    clouds = [Cloud(i, c.root, c.branches) for i, c in enumerate(clouds)]
    code = FeedbackCode(q, channel, BlockPartition.complete(n), clouds)
    assert sum(not c.branches for c in clouds) == swap_singletons(q, n)
    assert sum(bool(c.branches) for c in clouds) == swap_pairs(q, n)
    return require_certified(code, guard) if certify else code
