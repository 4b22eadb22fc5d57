"""Text format for digraphs.

::

    # comment
    digraph 4
    1 -- 3        # bidirected
    3 -> 2        # one direction

The header must be the first non-comment line.  Duplicate arcs, loops and
labels outside ``1..m`` are errors.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .graph import Digraph

_HEADER = re.compile(r"^\s*digraph\s+(\d+)\s*$")
_EDGE = re.compile(r"^\s*(\d+)\s*(->|--)\s*(\d+)\s*$")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _col(raw: str, token: str) -> int:
    return raw.find(token) + 1 if token in raw else 1


def parse_graph(text: str) -> Digraph:
    order = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if order is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(f"expected 'digraph <m>', got {line.strip()!r}", lineno,
                                 len(line) - len(line.lstrip()) + 1)
            order = int(m.group(1))
            continue
        m = _EDGE.match(line)
        if not m:
            bad = line.split()[0] if line.split() else line
            raise ParseError(f"unrecognized statement {line.strip()!r}", lineno, _col(raw, bad))
        u, op, v = int(m.group(1)), m.group(2), int(m.group(3))
        for x, col in ((u, m.start(1) + 1), (v, m.start(3) + 1)):
            if not 1 <= x <= order:
                raise ParseError(f"vertex {x} out of range 1..{order}", lineno, col)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, m.start(1) + 1)
        arcs = [(u, v), (v, u)] if op == "--" else [(u, v)]
        for a in arcs:
            if a in edges:
                raise ParseError(f"duplicate edge {a[0]} -> {a[1]}", lineno, m.start(1) + 1)
            edges.add(a)
    if order is None:
        raise ParseError("missing 'digraph <m>' header", max(1, len(text.splitlines())))
    return Digraph(order, frozenset(edges))


def serialize_graph(g: Digraph) -> str:
    """Canonical text: header, symmetric pairs as ``u -- v`` (u < v), then the rest as ``u -> v``."""
    out = [f"digraph {g.order}"]
    sym = sorted((u, v) for u, v in g.edges if u < v and (v, u) in g.edges)
    out += [f"{u} -- {v}" for u, v in sym]
    out += [f"{u} -> {v}" for u, v in sorted(g.edges) if (v, u) not in g.edges]
    return "\n".join(out) + "\n"


def read_graph(path) -> Digraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Digraph, path) -> None:
    Path(path).write_text(serialize_graph(g), encoding="utf-8")
