"""Adversarial single-error channels described by symbol error graphs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Word, all_words, check_alphabet, check_guard, rank


@dataclass(frozen=True)
class ErrorGraph:
    """Directed graph on symbols; ``(a, b)`` means sent ``a`` may arrive as ``b``."""

    q: int
    edges: frozenset[tuple[int, int]]
    name: str = "custom"
    _out: dict[int, tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_alphabet(self.q)
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop on symbol {a}")
            if not (0 <= a < self.q and 0 <= b < self.q):
                raise ValueError(f"edge {(a, b)} outside alphabet of size {self.q}")
        out = {a: tuple(sorted(b for x, b in self.edges if x == a)) for a in range(self.q)}
        object.__setattr__(self, "_out", out)

    def received_as(self, sent: int) -> tuple[int, ...]:
        """Symbols other than ``sent`` that the channel can deliver for it."""
        return self._out[sent]


def symmetric_channel(q: int) -> ErrorGraph:
    check_alphabet(q)
    edges = frozenset((a, b) for a in range(q) for b in range(q) if a != b)
    return ErrorGraph(q, edges, "symmetric")


def swap01_channel(q: int) -> ErrorGraph:
    """Only 0 <-> 1 substitutions; every other symbol is delivered intact."""
    if q < 3:
        raise ValueError("swap01 channel needs q >= 3 (for q = 2 it is the symmetric channel)")
    return ErrorGraph(q, frozenset({(0, 1), (1, 0)}), "swap01")


CHANNELS = {"symmetric": symmetric_channel, "swap01": swap01_channel}


def channel_by_name(name: str, q: int) -> ErrorGraph:
    try:
        return CHANNELS[name](q)
    except KeyError:
        raise ValueError(f"unknown channel {name!r}") from None


def word_outputs(g: ErrorGraph, x: Word) -> set[Word]:
    """Everything a nonadaptive transmission of ``x`` can produce."""
    out = {tuple(x)}
    for p, s in enumerate(x):
        for v in g.received_as(s):
            out.add(tuple(x[:p]) + (v,) + tuple(x[p + 1:]))
    return out


@dataclass(frozen=True)
class PrefixGraph:
    """Bipartite single-error graph between input and output prefixes of
    length ``n1``; both sides are indexed by rank."""

    q: int
    n1: int
    successors: tuple[tuple[int, ...], ...]
    predecessors: tuple[tuple[int, ...], ...]

    def in_degree(self, v: int) -> int:
        return len(self.predecessors[v])

    def out_degree(self, u: int) -> int:
        return len(self.successors[u])


def prefix_graph(g: ErrorGraph, n1: int, guard: int | None = None) -> PrefixGraph:
    size = g.q**n1
    check_guard(size, guard, "prefix graph")
    succ: list[tuple[int, ...]] = []
    pred: list[list[int]] = [[] for _ in range(size)]
    for u, x in enumerate(all_words(g.q, n1, guard)):
        outs = sorted(rank(y, g.q) for y in word_outputs(g, x) if y != x)
        succ.append(tuple(outs))
        for v in outs:
            pred[v].append(u)
    return PrefixGraph(g.q, n1, tuple(succ), tuple(tuple(p) for p in pred))
