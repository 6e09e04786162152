"""JSON code files.

Layout::

    {"q": 3, "n": 5, "channel": "symmetric", "blocks": [1, 4],
     "clouds": [{"message": 0, "root": [...],
                 "branches": [{"pos": 1, "recv": 1, "tail": [...]}, ...]}, ...]}

Positions are 1-based.  Output is canonical (clouds by message id, branches
by ``(pos, recv)``, one cloud per line) so write -> read -> write is
byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .channel import channel_by_name
from .cloud import BlockPartition, Cloud, FeedbackCode


class CodeFormatError(ValueError):
    pass


def _cloud_dict(c: Cloud) -> dict:
    return {
        "message": c.message,
        "root": list(c.root),
        "branches": [{"pos": p, "recv": v, "tail": list(t)} for (p, v), t in sorted(c.branches.items())],
    }


def dumps(code: FeedbackCode) -> str:
    head = [
        f'"q": {code.q}',
        f'"n": {code.n}',
        f'"channel": {json.dumps(code.channel_name)}',
        f'"blocks": {json.dumps(list(code.partition.lengths))}',
    ]
    clouds = sorted(code.clouds, key=lambda c: c.message)
    body = ",\n".join("  " + json.dumps(_cloud_dict(c), separators=(",", ":")) for c in clouds)
    return "{\n" + ",\n".join(head) + ',\n"clouds": [\n' + body + ("\n" if body else "") + "]\n}\n"


def _int_list(x, what: str) -> tuple[int, ...]:
    if not isinstance(x, list) or not all(isinstance(s, int) and not isinstance(s, bool) for s in x):
        raise CodeFormatError(f"{what} must be an array of integers")
    return tuple(x)


def _int(x, what: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise CodeFormatError(f"{what} must be an integer")
    return x


def from_dict(doc: dict) -> FeedbackCode:
    if not isinstance(doc, dict):
        raise CodeFormatError("top level must be an object")
    missing = {"q", "n", "channel", "blocks", "clouds"} - doc.keys()
    if missing:
        raise CodeFormatError(f"missing fields: {sorted(missing)}")
    q, n = _int(doc["q"], "q"), _int(doc["n"], "n")
    try:
        channel = channel_by_name(doc["channel"], q)
        partition = BlockPartition(_int_list(doc["blocks"], "blocks"))
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from None
    if partition.n != n:
        raise CodeFormatError(f"blocks sum to {partition.n}, expected n={n}")
    if not isinstance(doc["clouds"], list):
        raise CodeFormatError("clouds must be an array")
    clouds = []
    for i, c in enumerate(doc["clouds"]):
        if not isinstance(c, dict) or not {"message", "root", "branches"} <= c.keys():
            raise CodeFormatError(f"cloud #{i} needs message, root and branches")
        branches = {}
        if not isinstance(c["branches"], list):
            raise CodeFormatError(f"cloud #{i}: branches must be an array")
        for b in c["branches"]:
            if not isinstance(b, dict) or not {"pos", "recv", "tail"} <= b.keys():
                raise CodeFormatError(f"cloud #{i}: branch needs pos, recv and tail")
            key = (_int(b["pos"], "pos"), _int(b["recv"], "recv"))
            if key in branches:
                raise CodeFormatError(f"cloud #{i}: branch {key} listed twice")
            branches[key] = _int_list(b["tail"], "tail")
        clouds.append(Cloud(_int(c["message"], "message"), _int_list(c["root"], "root"), branches))
    return FeedbackCode(q, channel, partition, clouds)


def loads(text: str) -> FeedbackCode:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFormatError(f"not valid JSON: {exc}") from None
    return from_dict(doc)


def write(code: FeedbackCode, path: str | Path) -> None:
    Path(path).write_text(dumps(code), encoding="utf-8")


def read(path: str | Path) -> FeedbackCode:
    return loads(Path(path).read_text(encoding="utf-8"))
