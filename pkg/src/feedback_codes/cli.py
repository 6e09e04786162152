"""Command-line entry point: ``feedback-codes {bounds,construct,verify,tabulate}``.

Exit status: 0 success, 2 verification failure, 3 bad input or parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as B
from . import codefile
from .constructions import (
    complete_chain,
    corollary1,
    prop1_ham_plus_one,
    swap_channel_build,
    theorem2_code,
    theorem3_rs_analog,
    two_instance,
)
from .verify import UncertifiedCode, certify
from .words import DEFAULT_GUARD

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 2, 3

METHODS = ("rs-analog", "corollary1", "theorem2", "dada-chain", "prop1", "two-instance", "swap")


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"--{name.replace('_', '-')} is required for method {args.method}")


def build(args):
    m, q, g = args.method, args.q, args.guard
    if m == "rs-analog":
        _need(args, "n")
        return theorem3_rs_analog(q, args.n, g)
    if m == "corollary1":
        _need(args, "k")
        return corollary1(q, args.k, g)
    if m == "theorem2":
        _need(args, "n", "n1")
        n2 = args.n2 if args.n2 is not None else args.n - args.n1
        return theorem2_code(q, args.n, args.n1, n2, g)
    if m == "dada-chain":
        _need(args, "n")
        return complete_chain(q, args.n, g)
    if m == "prop1":
        _need(args, "k")
        return prop1_ham_plus_one(q, args.k, g)
    if m == "two-instance":
        _need(args, "n")
        return two_instance(q, args.n, g)
    _need(args, "n")
    return swap_channel_build(q, args.n, g)


def cmd_bounds(args) -> int:
    q, n = args.q, args.n
    rep = B.compute_bounds(q, n)
    lines = [
        f"q = {q}, n = {n}",
        f"H (Hamming bound) = {rep.H}",
        f"U = {rep.U}",
        f"p = {rep.p}",
        f"r = {rep.r if rep.r is not None else '-'}",
        f"M_cf = {rep.M_cf}" if rep.M_cf is not None else "M_cf: requires n >= q+1",
    ]
    if args.n1 is not None:
        lines.append(f"M1 (n1={args.n1}, n2={n - args.n1}) = {B.theorem2_size(q, n, args.n1, n - args.n1)}")
    elif rep.best_M1 is not None:
        lines.append(f"M1 (n1={rep.best_n1}, n2={n - rep.best_n1}) = {rep.best_M1}")
    if rep.swap_N is not None:
        lines.append(f"swap N = {rep.swap_N}")
        lines.append(f"swap M = {rep.swap_M}" if rep.swap_M is not None else f"swap M: requires n <= {rep.swap_N}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        code = build(args)
    except UncertifiedCode as exc:
        print(f"refusing to write: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = certify(code, args.guard)
    if not report.ok:
        print(json.dumps(report.to_dict()), file=sys.stderr)
        return EXIT_FAIL
    if args.output:
        codefile.write(code, args.output)
        print(f"{args.method}: q={code.q} n={code.n} blocks={list(code.partition.lengths)} "
              f"clouds={len(code)} -> {args.output}")
    else:
        sys.stdout.write(codefile.dumps(code))
    return EXIT_OK


def cmd_verify(args) -> int:
    code = codefile.read(args.file)
    report = certify(code, args.guard)
    d = report.to_dict()
    if args.json:
        print(json.dumps(d, indent=2))
    else:
        print(f"{'PASS' if report.ok else 'FAIL'}: q={code.q} n={code.n} channel={code.channel_name} "
              f"blocks={list(code.partition.lengths)} clouds={len(code)}")
        print(f"structure: {'ok' if report.structure.ok else report.structure.violation} "
              f"{report.structure.detail}".rstrip())
        print(f"game: {'ok' if report.game.ok else 'FAIL'} ({report.game.outcomes} outcomes)")
        print(f"bounds: {', '.join(report.bounds.flags)}")
        if not report.ok:
            failure = report.game.failure if not report.game.ok else report.structure.to_dict()
            print(json.dumps({"counterexample": failure, "structure": report.structure.to_dict()}))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_tabulate(args) -> int:
    q = args.q
    print(f"{'n':>4} {'M_cf':>12} {'H':>12}  construction")
    for n in range(q + 1, args.n_max + 1):
        mcf, H = B.m_cf(q, n), B.hamming_bound(q, n)
        note = "-"
        if q**n <= args.construct_limit:
            code = complete_chain(q, n, args.guard)
            note = f"dada-chain {len(code)} certified" + ("" if len(code) == mcf else " MISMATCH")
        print(f"{n:>4} {mcf:>12} {H:>12}  {note}")
    return EXIT_OK


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="feedback-codes", description=__doc__.splitlines()[0])
    ap.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="enumeration size limit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="print every closed-form size for (q, n)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n1", type=int, help="report this one-time split instead of the best one")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="build, certify and write a code")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certify a code file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="print the full report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tabulate", help="M_cf(q, n) for n = q+1 .. n-max")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--construct-limit", type=int, default=200_000,
                   help="build and certify the chain when q^n is at most this")
    p.set_defaults(func=cmd_tabulate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
