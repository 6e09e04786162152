"""Clouds and feedback codes.

A cloud is stored as its root (the output when nothing goes wrong) plus one
branch per legal error ``(pos, recv)``: positions are 1-based, ``recv`` is the
symbol delivered instead of ``root[pos]``.  After an error the encoder keeps
sending the root until the end of the current block; from the next feedback
point on it sends the branch tail.  So the member for ``(pos, recv)`` is::

    root[:pos-1] + (recv,) + root[pos:end_of_block(pos)] + tail
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import accumulate
from typing import Iterable, Mapping

import numpy as np

from .channel import ErrorGraph
from .field import BlockCode
from .words import Word, check_guard, rank

Branch = tuple[int, int]


@dataclass(frozen=True)
class BlockPartition:
    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.lengths)
        if not lengths or any(x < 1 for x in lengths):
            raise ValueError(f"block lengths must be positive, got {self.lengths}")
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "_ends", tuple(accumulate(lengths)))
        eob = []
        for end, length in zip(self._ends, lengths):
            eob.extend([end] * length)
        object.__setattr__(self, "_eob", tuple(eob))

    @classmethod
    def nonadaptive(cls, n: int) -> BlockPartition:
        return cls((n,))

    @classmethod
    def complete(cls, n: int) -> BlockPartition:
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return self._ends[-1]

    @property
    def instances(self) -> int:
        """Number of feedback instances (block count minus one)."""
        return len(self.lengths) - 1

    @property
    def boundaries(self) -> tuple[int, ...]:
        return self._ends

    def end_of_block(self, pos: int) -> int:
        """Smallest block boundary ``>= pos`` (1-based)."""
        if not 1 <= pos <= self.n:
            raise ValueError(f"position {pos} outside [1, {self.n}]")
        return self._eob[pos - 1]

    def prepend(self, length: int = 1) -> BlockPartition:
        return BlockPartition((length,) + self.lengths)


@dataclass(frozen=True)
class Cloud:
    message: int
    root: Word
    branches: Mapping[Branch, Word] = field(default_factory=dict)

    def member(self, partition: BlockPartition, pos: int, recv: int) -> Word:
        tail = self.branches[(pos, recv)]
        end = partition.end_of_block(pos)
        if len(tail) != partition.n - end:
            raise ValueError(
                f"cloud {self.message}: branch {(pos, recv)} tail has length {len(tail)}, "
                f"expected {partition.n - end}"
            )
        return self.root[: pos - 1] + (recv,) + self.root[pos:end] + tuple(tail)

    def members(self, partition: BlockPartition) -> list[Word]:
        """Root first, then branch members in (pos, recv) order."""
        return [self.root] + [self.member(partition, p, v) for p, v in sorted(self.branches)]


def expand(cloud: Cloud, partition: BlockPartition) -> set[Word]:
    return set(cloud.members(partition))


def legal_branches(channel: ErrorGraph, root: Word) -> list[Branch]:
    return [(p + 1, v) for p, s in enumerate(root) for v in channel.received_as(s)]


def ball_cloud(message: int, codeword: Word, channel: ErrorGraph) -> Cloud:
    """The nonadaptive cloud of ``codeword`` (every tail empty)."""
    return Cloud(message, tuple(codeword), {b: () for b in legal_branches(channel, codeword)})


@dataclass(frozen=True)
class FeedbackCode:
    q: int
    channel: ErrorGraph
    partition: BlockPartition
    clouds: tuple[Cloud, ...]

    def __post_init__(self):
        object.__setattr__(self, "clouds", tuple(self.clouds))
        if self.channel.q != self.q:
            raise ValueError("channel alphabet does not match code alphabet")

    @property
    def n(self) -> int:
        return self.partition.n

    def __len__(self) -> int:
        return len(self.clouds)

    @property
    def channel_name(self) -> str:
        return self.channel.name

    @cached_property
    def _index(self) -> dict[int, int]:
        check_guard(sum(1 + len(c.branches) for c in self.clouds), None, "decoder index")
        index: dict[int, int] = {}
        for c in self.clouds:
            for y in c.members(self.partition):
                index.setdefault(rank(y, self.q), c.message)
        return index

    def decode(self, y: Word) -> int | None:
        """Message whose cloud contains ``y``; None for a free point."""
        if len(y) != self.n:
            raise ValueError(f"word length {len(y)} != code length {self.n}")
        return self._index.get(rank(y, self.q))

    def cloud(self, message: int) -> Cloud:
        return self._by_message[message]

    @cached_property
    def _by_message(self) -> dict[int, Cloud]:
        return {c.message: c for c in self.clouds}

    def coverage(self, guard: int | None = None) -> np.ndarray:
        """How many cloud members land on each word, indexed by rank."""
        check_guard(self.q**self.n, guard, "word space")
        counts = np.zeros(self.q**self.n, dtype=np.int64)
        for c in self.clouds:
            for y in c.members(self.partition):
                counts[rank(y, self.q)] += 1
        return counts


def decode(code: FeedbackCode, y: Word) -> int | None:
    return code.decode(y)


def free_census(code: FeedbackCode, guard: int | None = None) -> int:
    check_guard(code.q**code.n, guard, "word space")
    return code.q**code.n - sum(len(expand(c, code.partition)) for c in code.clouds)


def free_points(code: FeedbackCode, guard: int | None = None) -> list[int]:
    """Ranks of words not covered by any cloud."""
    return [int(i) for i in np.flatnonzero(code.coverage(guard) == 0)]


def from_block_code(code: BlockCode, channel: ErrorGraph) -> FeedbackCode:
    """View a nonadaptive code as a feedback code with a single block."""
    clouds = [ball_cloud(i, w, channel) for i, w in enumerate(code.codewords)]
    return FeedbackCode(code.q, channel, BlockPartition.nonadaptive(code.n), clouds)


# -- structural validation ---------------------------------------------------

SYMBOL_RANGE = "SymbolRangeViolation"
ROOT_LENGTH = "RootLengthViolation"
ILLEGAL_BRANCH = "IllegalBranchViolation"
MISSING_BRANCH = "MissingBranchViolation"
TAIL_LENGTH = "TailLengthViolation"
DUPLICATE_MEMBER = "DuplicateMemberViolation"
DUPLICATE_MESSAGE = "DuplicateMessageViolation"
DISJOINTNESS = "DisjointnessViolation"


@dataclass(frozen=True)
class StructureReport:
    ok: bool
    violation: str | None = None
    message: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violation": self.violation, "message": self.message, "detail": self.detail}


def _cloud_violation(code: FeedbackCode, c: Cloud) -> StructureReport | None:
    q, n, part = code.q, code.n, code.partition

    def bad(kind: str, detail: str) -> StructureReport:
        return StructureReport(False, kind, c.message, detail)

    if len(c.root) != n:
        return bad(ROOT_LENGTH, f"root has length {len(c.root)}, expected {n}")
    if any(not 0 <= s < q for s in c.root):
        return bad(SYMBOL_RANGE, f"root {c.root} has a symbol outside [0, {q})")
    legal = set(legal_branches(code.channel, c.root))
    for b in sorted(c.branches):
        if b not in legal:
            return bad(ILLEGAL_BRANCH, f"branch {b} is not a legal error for root {c.root}")
    for b in sorted(legal):
        if b not in c.branches:
            return bad(MISSING_BRANCH, f"no branch for error {b}")
    for (p, v), tail in sorted(c.branches.items()):
        want = n - part.end_of_block(p)
        if len(tail) != want:
            return bad(TAIL_LENGTH, f"branch {(p, v)} tail has length {len(tail)}, expected {want}")
        if any(not 0 <= s < q for s in tail):
            return bad(SYMBOL_RANGE, f"branch {(p, v)} tail {tuple(tail)} has a symbol outside [0, {q})")
    members = c.members(part)
    if len(set(members)) != len(members):
        return bad(DUPLICATE_MEMBER, "cloud members are not distinct")
    return None


def validate_structure(code: FeedbackCode) -> StructureReport:
    """First structural violation found, or an OK report."""
    seen_messages: set[int] = set()
    owner: dict[Word, int] = {}
    for c in code.clouds:
        if c.message in seen_messages:
            return StructureReport(False, DUPLICATE_MESSAGE, c.message, "message id used twice")
        seen_messages.add(c.message)
        v = _cloud_violation(code, c)
        if v is not None:
            return v
        for y in c.members(code.partition):
            other = owner.setdefault(y, c.message)
            if other != c.message:
                return StructureReport(
                    False, DISJOINTNESS, c.message, f"word {y} lies in clouds {other} and {c.message}"
                )
    return StructureReport(True)


def renumber(clouds: Iterable[Cloud]) -> list[Cloud]:
    """Assign message ids 0, 1, ... in iteration order."""
    return [Cloud(i, c.root, c.branches) for i, c in enumerate(clouds)]
