"""Generators for named graphs and the graph operations built on them."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidParameter, OutOfRange, OverlappingSets
from .graph import Graph, LabelledBipartiteGraph


def make_basic(kind: str, r: int) -> Graph:
    """``path``/``cycle``/``complete`` on r vertices, or ``star`` K_{1,r} with centre 0."""
    if r < 1:
        raise InvalidParameter(f"{kind} needs r >= 1, got {r}")
    if kind == "path":
        return Graph(r, frozenset((i, i + 1) for i in range(r - 1)))
    if kind == "cycle":
        if r < 3:
            raise InvalidParameter(f"cycle needs r >= 3, got {r}")
        return Graph(r, frozenset((i, (i + 1) % r) for i in range(r)))
    if kind == "complete":
        return Graph(r, frozenset((i, j) for i in range(r) for j in range(i + 1, r)))
    if kind == "star":
        return Graph(r + 1, frozenset((0, i) for i in range(1, r + 1)))
    raise InvalidParameter(f"unknown kind {kind!r}")


def path(r: int) -> Graph:
    return make_basic("path", r)


def cycle(r: int) -> Graph:
    return make_basic("cycle", r)


def complete(r: int) -> Graph:
    return make_basic("complete", r)


def star(r: int) -> Graph:
    return make_basic("star", r)


def make_subdivided_claw(h: int, i: int, j: int) -> Graph:
    """S_{h,i,j}: centre 0, then the three arms outward, shortest arm first."""
    if not 1 <= h <= i <= j:
        raise InvalidParameter(f"need 1 <= h <= i <= j, got ({h}, {i}, {j})")
    edges = []
    nxt = 1
    for length in (h, i, j):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, frozenset(edges))


@dataclass(frozen=True)
class WallSpec:
    h: int

    def __post_init__(self):
        if self.h < 1:
            raise InvalidParameter(f"wall height must be >= 1, got {self.h}")


def make_wall(spec: WallSpec | int) -> Graph:
    """Brick wall of height h on the grid rule, pendant vertices trimmed.

    Grid points (x, y) with 0 <= y <= h and 0 <= x <= 2h+1, horizontal edges
    along rows and vertical edges (x, y)-(x, y+1) when x + y is even. Vertices
    end up numbered row by row, left to right.
    """
    if isinstance(spec, int):
        spec = WallSpec(spec)
    h = spec.h
    width = 2 * h + 2
    nbrs: dict[tuple, set] = {(x, y): set() for y in range(h + 1) for x in range(width)}
    for (x, y) in nbrs:
        if x + 1 < width:
            nbrs[(x, y)].add((x + 1, y))
            nbrs[(x + 1, y)].add((x, y))
        if y < h and (x + y) % 2 == 0:
            nbrs[(x, y)].add((x, y + 1))
            nbrs[(x, y + 1)].add((x, y))
    while True:
        pendant = [p for p, s in nbrs.items() if len(s) <= 1]
        if not pendant:
            break
        for p in pendant:
            for q in nbrs[p]:
                nbrs[q].discard(p)
            del nbrs[p]
    order = sorted(nbrs, key=lambda p: (p[1], p[0]))
    idx = {p: i for i, p in enumerate(order)}
    return Graph(len(order), frozenset(
        (idx[p], idx[q]) for p in order for q in nbrs[p] if idx[p] < idx[q]))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.edges | frozenset((u + shift, v + shift) for u, v in g2.edges))


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def replicate(r: int, g: Graph) -> Graph:
    if r < 1:
        raise InvalidParameter(f"replicate needs r >= 1, got {r}")
    return union_all([g] * r)


def subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by a path with k new inner vertices.

    New vertices are numbered from g.n on, edge by edge in sorted edge order,
    each run ordered from the smaller endpoint to the larger.
    """
    if k < 0:
        raise InvalidParameter(f"subdivision count must be >= 0, got {k}")
    if k == 0:
        return g
    edges = []
    nxt = g.n
    for u, v in g.sorted_edges:
        prev = u
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph(nxt, frozenset(edges))


def bipartite_complement(h: LabelledBipartiteGraph) -> LabelledBipartiteGraph:
    g = h.graph
    edges = frozenset(
        (min(b, w), max(b, w))
        for b in h.black for w in h.white if not g.has_edge(b, w))
    return LabelledBipartiteGraph(Graph(g.n, edges), h.labelling)


def bipartite_complementation(g: Graph, x: Iterable[int], y: Iterable[int]) -> Graph:
    """Flip adjacency on every pair with one end in x and the other in y."""
    x, y = frozenset(x), frozenset(y)
    if x & y:
        raise OverlappingSets(f"sets share vertices {sorted(x & y)}")
    if any(not 0 <= v < g.n for v in x | y):
        raise OutOfRange("vertex set outside the graph")
    flip = {(min(a, b), max(a, b)) for a in x for b in y}
    return Graph(g.n, g.edges ^ frozenset(flip))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise OutOfRange(f"vertex {v} not in graph on {g.n} vertices")
    return g.induced(u for u in range(g.n) if u != v)


_TERM = re.compile(
    r"^(\d*)(?:P_?\{?(\d+)\}?|C_?\{?(\d+)\}?|K_?\{1,(\d+)\}|K_?\{?(\d+)\}?|S_?\{(\d+),(\d+),(\d+)\})$")


def from_name(name: str) -> Graph:
    """Build a graph from notation like ``"K_{1,3}+3P_1"`` or ``"2P_1+P_3"``.

    Terms are joined by ``+``; each is an optional multiplicity followed by
    ``P_r``, ``C_r``, ``K_r``, ``K_{1,r}`` or ``S_{h,i,j}``.
    """
    parts = []
    for term in name.replace(" ", "").split("+"):
        m = _TERM.match(term)
        if not m:
            raise InvalidParameter(f"cannot parse graph term {term!r}")
        mult = int(m.group(1) or 1)
        if m.group(2):
            g = path(int(m.group(2)))
        elif m.group(3):
            g = cycle(int(m.group(3)))
        elif m.group(4):
            g = star(int(m.group(4)))
        elif m.group(5):
            g = complete(int(m.group(5)))
        else:
            g = make_subdivided_claw(*(int(m.group(i)) for i in (6, 7, 8)))
        parts.append(replicate(mult, g))
    return union_all(parts)
