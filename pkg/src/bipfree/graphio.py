"""Plain-text graph files.

::

    # comment
    n 5
    e 0 1
    e 1 2
    black 0 2 4

``n`` comes first (after comments); an optional ``black`` line declares a
labelling, every unlisted vertex being white. Errors carry the 1-based line
number (0 when the problem is global, e.g. a missing ``n`` line).
"""
from __future__ import annotations

from pathlib import Path
from typing import Optional

from .errors import ParseError
from .graph import BWLabelling, Graph


def _int(tok: str, lineno: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(lineno, f"not an integer: {tok!r}") from None
    if val < 0 or not tok.isdigit():
        raise ParseError(lineno, f"not a non-negative integer: {tok!r}")
    return val


def parse_graph(text: str) -> tuple[Graph, Optional[BWLabelling]]:
    n: Optional[int] = None
    edges: set[tuple[int, int]] = set()
    black: Optional[frozenset] = None
    black_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *args = line.split()
        if head == "n":
            if n is not None:
                raise ParseError(lineno, "duplicate 'n' line")
            if len(args) != 1:
                raise ParseError(lineno, "'n' takes exactly one count")
            n = _int(args[0], lineno)
            continue
        if n is None:
            raise ParseError(lineno, "'n' line must come first")
        if head == "e":
            if len(args) != 2:
                raise ParseError(lineno, "'e' takes two vertices")
            u, v = (_int(a, lineno) for a in args)
            if u >= n or v >= n:
                raise ParseError(lineno, f"vertex out of range for n={n}")
            if u == v:
                raise ParseError(lineno, f"loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in edges:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            edges.add(e)
        elif head == "black":
            if black is not None:
                raise ParseError(lineno, "duplicate 'black' line")
            vs = [_int(a, lineno) for a in args]
            if any(v >= n for v in vs):
                raise ParseError(lineno, f"vertex out of range for n={n}")
            if len(set(vs)) != len(vs):
                raise ParseError(lineno, "repeated vertex in 'black' line")
            black = frozenset(vs)
            black_line = lineno
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")
    if n is None:
        raise ParseError(0, "missing 'n' line")
    g = Graph(n, frozenset(edges))
    if black is None:
        return g, None
    lab = BWLabelling(n, black)
    if not lab.is_valid_for(g):
        bad = next((u, v) for u, v in g.sorted_edges if (u in black) == (v in black))
        raise ParseError(black_line, f"labelling puts both ends of edge {bad[0]} {bad[1]} in one colour")
    return g, lab


def serialize_graph(g: Graph, lab: Optional[BWLabelling] = None) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges]
    if lab is not None:
        lines.append(" ".join(["black"] + [str(v) for v in sorted(lab.black)]))
    return "\n".join(lines) + "\n"


def read_graph(path) -> tuple[Graph, Optional[BWLabelling]]:
    return parse_graph(Path(path).read_text())


def write_graph(path, g: Graph, lab: Optional[BWLabelling] = None) -> None:
    Path(path).write_text(serialize_graph(g, lab))
