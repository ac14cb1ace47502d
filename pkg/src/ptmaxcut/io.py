"""Plain-text graph files.

Format (1-based ids, weight always given)::

    c a comment
    p edge <n> <m>
    e <u> <v> <w>

Repeated pairs are merged by summing their weights.
"""

from __future__ import annotations

import json

from .errors import BadHeader, IdOutOfRange, SelfLoopInFile, SyntaxErrorInGraph
from .graph import WeightedGraph, normalize_multigraph


def _int(tok, lineno, what):
    try:
        val = int(tok)
    except ValueError:
        raise SyntaxErrorInGraph(f"{what} {tok!r} is not an integer", lineno) from None
    if str(val) != tok.lstrip("+"):
        raise SyntaxErrorInGraph(f"{what} {tok!r} is not a plain integer", lineno)
    return val


def parse_graph(text: str) -> WeightedGraph:
    """Parse the text format into a normalized 0-based graph."""
    n = declared = None
    raw = []
    pending = []  # edges seen before a header, kept to report the earliest problem
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        kind = toks[0]
        if kind == "p":
            if n is not None:
                raise BadHeader("second header line", lineno)
            if len(toks) != 4 or toks[1] != "edge":
                raise BadHeader("expected 'p edge <n> <m>'", lineno)
            n = _int(toks[2], lineno, "vertex count")
            declared = _int(toks[3], lineno, "edge count")
            if n < 0 or declared < 0:
                raise BadHeader("counts must be nonnegative", lineno)
        elif kind == "e":
            if len(toks) != 4:
                raise SyntaxErrorInGraph("expected 'e <u> <v> <w>'", lineno)
            u = _int(toks[1], lineno, "vertex")
            v = _int(toks[2], lineno, "vertex")
            w = _int(toks[3], lineno, "weight")
            if u == v:
                raise SelfLoopInFile(u, lineno)
            if n is None:
                pending.append(lineno)
                continue
            for x in (u, v):
                if not 1 <= x <= n:
                    raise IdOutOfRange(f"vertex {x} outside 1..{n}", lineno)
            if w < 1:
                raise SyntaxErrorInGraph(f"weight {w} must be positive", lineno)
            raw.append((u - 1, v - 1, w))
        else:
            raise SyntaxErrorInGraph(f"unknown line type {kind!r}", lineno)
    if pending:
        raise BadHeader("edge line before the 'p edge' header", pending[0])
    if n is None:
        raise BadHeader("missing 'p edge <n> <m>' header")
    if declared != len(raw):
        raise BadHeader(f"header declares {declared} edges, found {len(raw)}")
    return normalize_multigraph(raw, n)


def serialize_graph(G: WeightedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"c {c}" for c in comment.splitlines()]
    edges = G.edges()
    lines.append(f"p edge {G.n} {len(edges)}")
    lines += [f"e {u + 1} {v + 1} {w}" for u, v, w in edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(G: WeightedGraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(G, comment))


def cut_json(cut) -> str:
    return json.dumps(cut.to_record(one_based=True))


def trace_lines(trace):
    """Newline-delimited records, one per reduction step, 1-based ids."""
    return "\n".join(json.dumps(step.to_record(one_based=True)) for step in trace)
