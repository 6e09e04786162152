"""Exhaustive certification of feedback codes.

``game_check`` plays the encoder against every admissible single error and
checks that each received word decodes to the message that was sent.  It
drives the encoder block by block from the received prefix, so it exercises
the code the way a transmitter would, independent of how clouds expand.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

from .bounds import hamming_bound, m_cf, swap_capacity, swap_n_max
from .channel import PrefixGraph
from .cloud import Cloud, FeedbackCode, StructureReport, expand, free_census, validate_structure
from .words import Word, check_guard, rank


class _EncoderFailure(Exception):
    def __init__(self, kind: str, detail: str):
        super().__init__(detail)
        self.kind = kind
        self.detail = detail


@dataclass(frozen=True)
class GameReport:
    ok: bool
    outcomes: int
    failure: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def _encode_block(cloud: Cloud, code: FeedbackCode, block: int, received: Sequence[int]) -> Word:
    """Symbols the encoder sends in ``block`` after seeing ``received``."""
    part = code.partition
    start = part.boundaries[block - 1] if block else 0
    end = part.boundaries[block]
    first = next((i for i in range(start) if received[i] != cloud.root[i]), None)
    if first is None:
        return tuple(cloud.root[start:end])
    pos = first + 1
    key = (pos, received[first])
    if key not in cloud.branches:
        raise _EncoderFailure("MissingBranch", f"no continuation after error {key}")
    tail = tuple(cloud.branches[key])
    eob = part.end_of_block(pos)
    # Everything after the error was sent by this encoder and arrived intact.
    sent_since = tuple(cloud.root[pos:eob]) + tail[: max(0, start - eob)]
    if tuple(received[pos:start]) != sent_since[: start - pos]:
        raise _EncoderFailure("MultipleErrors", f"received prefix {tuple(received)} shows more than one error")
    offset = start - eob
    segment = tail[offset : offset + end - start]
    if len(segment) != end - start:
        raise _EncoderFailure("ShortTail", f"tail for error {key} runs out at position {start + len(segment) + 1}")
    return segment


def transmit(cloud: Cloud, code: FeedbackCode, error: tuple[int, int] | None) -> Word:
    """Received word when ``cloud.message`` is sent and ``error`` (1-based
    position, delivered symbol) hits the channel."""
    received: list[int] = []
    for block in range(len(code.partition.lengths)):
        for s in _encode_block(cloud, code, block, received):
            if error is not None and len(received) + 1 == error[0]:
                if error[1] not in code.channel.received_as(s):
                    raise _EncoderFailure("IllegalError", f"channel cannot turn {s} into {error[1]}")
                s = error[1]
            received.append(s)
    return tuple(received)


def _errors(code: FeedbackCode, sent: Word) -> list[tuple[int, int]]:
    return [(p + 1, v) for p, s in enumerate(sent) for v in code.channel.received_as(s)]


def game_check(code: FeedbackCode, guard: int | None = None) -> GameReport:
    """Play every (message, error) pair; report the first failure."""
    q, n = code.q, code.n
    check_guard(len(code) * (1 + n * (q - 1)), guard, "game outcomes")
    produced: dict[int, tuple[int, tuple[int, int] | None]] = {}
    outcomes = 0

    def fail(kind: str, m: int, err, y=None, **extra) -> GameReport:
        info = {"kind": kind, "message": m, "error": list(err) if err else None}
        if y is not None:
            info["output"] = list(y)
        info.update(extra)
        return GameReport(False, outcomes, info)

    for cloud in code.clouds:
        m = cloud.message
        try:
            members = expand(cloud, code.partition)
            sent = transmit(cloud, code, None)
        except (_EncoderFailure, ValueError) as exc:
            return fail(getattr(exc, "kind", "MalformedCloud"), m, None, detail=str(exc))
        reached = set()
        for err in [None] + _errors(code, sent):
            try:
                y = transmit(cloud, code, err)
            except _EncoderFailure as exc:
                return fail(exc.kind, m, err, detail=exc.detail)
            outcomes += 1
            if len(y) != n or any(not 0 <= s < q for s in y):
                return fail("MalformedOutput", m, err, y)
            if y not in members:
                return fail("OutsideCloud", m, err, y)
            key = rank(y, q)
            prev = produced.get(key)
            if prev is not None and prev[0] != m:
                return fail("Collision", m, err, y, other_message=prev[0],
                            other_error=list(prev[1]) if prev[1] else None)
            produced[key] = (m, err)
            decoded = code.decode(y)
            if decoded != m:
                return fail("Misdecoded", m, err, y, decoded=decoded)
            reached.add(y)
        phantom = members - reached
        if phantom:
            return fail("PhantomMember", m, None, min(phantom),
                        detail="cloud lists a word no transmission produces")
    return GameReport(True, outcomes)


def game_outputs(code: FeedbackCode) -> set[Word]:
    """Every word the adversary game can produce."""
    out = set()
    for cloud in code.clouds:
        sent = transmit(cloud, code, None)
        out.add(sent)
        for err in _errors(code, sent):
            out.add(transmit(cloud, code, err))
    return out


@dataclass(frozen=True)
class BoundReport:
    size: int
    hamming_bound: int
    m_cf: int | None = None
    swap_capacity: int | None = None
    free_points: int | None = None
    flags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def hamming_slack(self) -> int:
        return self.hamming_bound - self.size

    @property
    def m_cf_slack(self) -> int | None:
        return None if self.m_cf is None else self.m_cf - self.size

    def to_dict(self) -> dict:
        d = asdict(self)
        d["flags"] = list(self.flags)
        d["hamming_slack"] = self.hamming_slack
        d["m_cf_slack"] = self.m_cf_slack
        return d


def bound_report(code: FeedbackCode, guard: int | None = None) -> BoundReport:
    q, n, size = code.q, code.n, len(code)
    H = hamming_bound(q, n)
    flags = []
    mcf = swap = None
    if code.channel_name == "symmetric":
        flags.append("meets Hamming bound" if size == H else f"Hamming slack {H - size}")
        if size > H:
            flags.append("EXCEEDS Hamming bound")
        if n >= q + 1:
            mcf = m_cf(q, n)
            flags.append("meets M_cf" if size == mcf else f"M_cf slack {mcf - size}")
    elif code.channel_name == "swap01" and n <= swap_n_max(q):
        swap = swap_capacity(q, n)
        flags.append("meets swap capacity" if size == swap else f"swap capacity slack {swap - size}")
    free = None
    try:
        free = free_census(code, guard)
    except ValueError:
        pass
    if free == 0:
        flags.append("perfect")
    return BoundReport(size, H, mcf, swap, free, tuple(flags))


def theorem1_condition_check(
    graph: PrefixGraph, sizes: Sequence[int], free_counts: Sequence[int]
) -> bool:
    """Every output prefix has at least as many free suffix words as there are
    messages whose prefix can be corrupted into it."""
    if len(sizes) != len(graph.successors) or len(free_counts) != len(graph.predecessors):
        raise ValueError("sizes and free counts must cover every prefix")
    return all(
        sum(sizes[u] for u in graph.predecessors[v]) <= free_counts[v]
        for v in range(len(graph.predecessors))
    )


@dataclass(frozen=True)
class CodeReport:
    structure: StructureReport
    game: GameReport | None
    bounds: BoundReport

    @property
    def ok(self) -> bool:
        return self.structure.ok and self.game is not None and self.game.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "structure": self.structure.to_dict(),
            "game": None if self.game is None else {
                "ok": self.game.ok, "outcomes": self.game.outcomes, "failure": self.game.failure
            },
            "bounds": self.bounds.to_dict(),
        }


def certify(code: FeedbackCode, guard: int | None = None) -> CodeReport:
    """Structure check, exhaustive game, and bound comparison in one report."""
    structure = validate_structure(code)
    game = game_check(code, guard)
    return CodeReport(structure, game, bound_report(code, guard))


class UncertifiedCode(RuntimeError):
    pass


def require_certified(code: FeedbackCode, guard: int | None = None) -> FeedbackCode:
    report = certify(code, guard)
    if not report.ok:
        raise UncertifiedCode(f"construction emitted an invalid code: {report.to_dict()}")
    return code


def mutations(code: FeedbackCode, count: int) -> list[tuple[str, FeedbackCode]]:
    """``count`` single-symbol corruptions of ``code``, deterministic.

    Mutation ``i`` picks cloud ``i * stride``, alternates between a root
    symbol and a symbol of the longest branch tail, and adds 1 (mod q) to
    the chosen symbol.  Labels describe the edit.
    """
    q, clouds = code.q, list(code.clouds)
    out = []
    stride = max(1, len(clouds) // count) if clouds else 1
    i = 0
    while len(out) < count and clouds:
        c = clouds[(i * stride + i // len(clouds)) % len(clouds)]
        idx = clouds.index(c)
        tails = [(b, t) for b, t in sorted(c.branches.items()) if t]
        if i % 2 == 0 or not tails:
            pos = (i // 2) % len(c.root)
            root = list(c.root)
            root[pos] = (root[pos] + 1) % q
            new = Cloud(c.message, tuple(root), c.branches)
            label = f"cloud {c.message} root[{pos + 1}]"
        else:
            b, t = max(tails, key=lambda bt: (len(bt[1]), bt[0]))
            k = (i // 2) % len(t)
            tail = list(t)
            tail[k] = (tail[k] + 1) % q
            branches = dict(c.branches)
            branches[b] = tuple(tail)
            new = Cloud(c.message, c.root, branches)
            label = f"cloud {c.message} branch {b} tail[{k}]"
        mutated = clouds[:idx] + [new] + clouds[idx + 1:]
        out.append((label, FeedbackCode(code.q, code.channel, code.partition, mutated)))
        i += 1
    return out
