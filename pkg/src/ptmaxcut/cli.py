"""Command-line front end.

Exit status: 0 for yes or success, 1 for no, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import generators
from .errors import PtMaxCutError
from .graph import edwards_erdos_quarters, msf_weight, poljak_turzik_quarters
from .io import cut_json, read_graph, trace_lines, write_graph
from .oracle import brute_max_cut
from .reduction import reduce
from .solver import decide, solve


class _UsageError(Exception):
    pass


def _add_k(p, target=True):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-k", type=int, help="excess over the bound, in whole units")
    g.add_argument("--quarters", type=int, help="excess over the bound, in quarter units")
    if target:
        g.add_argument("--target", type=int, help="absolute cut size to reach")


def _k_quarters(args, G):
    if args.quarters is not None:
        return args.quarters
    if getattr(args, "target", None) is not None:
        if args.target < 0:
            raise _UsageError("--target must be nonnegative")
        return 4 * args.target - 2 * G.total_weight - msf_weight(G)
    return 4 * args.k


def _params(tokens):
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep:
            raise _UsageError(f"generator parameter {tok!r} is not key=value")
        try:
            out[key] = int(val)
        except ValueError:
            raise _UsageError(f"generator parameter {key} needs an integer, got {val!r}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ptmaxcut", description="MaxCut above the Poljak-Turzik bound")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("decide", help="is there a cut above the bound by k?")
    _add_k(p)
    p.add_argument("file")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("solve", help="like decide, and print a witness cut")
    _add_k(p)
    p.add_argument("file")
    p.add_argument("--emit-cut", metavar="PATH")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("bound", help="print both lower bounds in quarters")
    p.add_argument("file")

    p = sub.add_parser("oracle", help="exact maximum cut by enumeration (n <= 24)")
    p.add_argument("file")

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("family", choices=generators.FAMILIES)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("trace", help="full reduction trace as JSON lines")
    _add_k(p, target=False)
    p.add_argument("file")
    return ap


def _run(args, out) -> int:
    if args.cmd == "gen":
        params = _params(args.params)
        if args.seed is not None:
            params["seed"] = args.seed
        try:
            G = generators.generate(args.family, **params)
        except (KeyError, TypeError) as exc:
            raise _UsageError(f"missing or unknown parameter for {args.family}: {exc}") from None
        desc = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
        write_graph(G, args.output, comment=f"{args.family} {desc}".strip())
        return 0

    G = read_graph(args.file)
    if args.cmd == "bound":
        print(f"PT={poljak_turzik_quarters(G)}, EE={edwards_erdos_quarters(G)}", file=out)
        return 0
    if args.cmd == "oracle":
        print(cut_json(brute_max_cut(G).cut), file=out)
        return 0
    if args.cmd == "trace":
        text = trace_lines(reduce(G, _k_quarters(args, G), "full").trace)
        if text:
            print(text, file=out)
        return 0
    k = _k_quarters(args, G)
    if args.cmd == "decide":
        verdict = decide(G, k, workers=args.workers)
        print(verdict, file=out)
        return 0 if verdict.answer else 1
    verdict = solve(G, k, workers=args.workers)
    print(verdict, file=out)
    if verdict.answer:
        record = cut_json(verdict.witness)
        print(record, file=out)
        if args.emit_cut:
            with open(args.emit_cut, "w", encoding="utf-8") as fh:
                fh.write(record + "\n")
    return 0 if verdict.answer else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args, sys.stdout)
    except (PtMaxCutError, _UsageError, OSError) as exc:
        print(f"ptmaxcut: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
