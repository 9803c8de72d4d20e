"""Graphs, black-and-white labellings, isomorphism and induced embeddings.

Vertices are always ``0..n-1``. Adjacency is kept as Python-int bitmasks so
that the backtracking searches below reduce to a few AND/NOT operations per
node; hosts in this package stay below a few hundred vertices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AmbiguousB, InvalidGraph, InvalidLabelling, NotBipartite

Embedding = tuple  # pattern vertex i -> host vertex Embedding[i]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraph(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraph(f"edge {u}-{v} out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        return cls(n, frozenset((u, v) for u in range(n) for v in _bits(adj[u]) if u < v))

    @cached_property
    def adj(self) -> tuple:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, reindexed in increasing order of ``vertices``."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), frozenset(
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.sorted_edges)})"


@dataclass(frozen=True)
class BWLabelling:
    """Black/white colouring of ``0..n-1``; validity depends on the graph."""

    n: int
    black: frozenset

    def __post_init__(self):
        black = frozenset(self.black)
        if any(not 0 <= v < self.n for v in black):
            raise InvalidLabelling(f"black vertex out of range for n={self.n}")
        object.__setattr__(self, "black", black)

    @classmethod
    def all_black(cls, n: int) -> "BWLabelling":
        return cls(n, frozenset(range(n)))

    @classmethod
    def all_white(cls, n: int) -> "BWLabelling":
        return cls(n, frozenset())

    @property
    def white(self) -> frozenset:
        return frozenset(range(self.n)) - self.black

    @cached_property
    def black_mask(self) -> int:
        return sum(1 << v for v in self.black)

    @property
    def white_mask(self) -> int:
        return ((1 << self.n) - 1) & ~self.black_mask

    def is_black(self, v: int) -> bool:
        return v in self.black

    def key(self) -> tuple:
        """Sort key: lexicographic over vertices with black < white."""
        return tuple(0 if v in self.black else 1 for v in range(self.n))

    def opposite(self) -> "BWLabelling":
        return BWLabelling(self.n, self.white)

    def is_valid_for(self, g: Graph) -> bool:
        if g.n != self.n:
            return False
        b = self.black_mask
        return all(bool(b >> u & 1) != bool(b >> v & 1) for u, v in g.edges)

    def restrict(self, vertices: Iterable[int]) -> "BWLabelling":
        """Labelling of the induced subgraph on ``vertices`` (reindexed)."""
        vs = sorted(set(vertices))
        return BWLabelling(len(vs), frozenset(i for i, v in enumerate(vs) if v in self.black))


@dataclass(frozen=True)
class LabelledBipartiteGraph:
    graph: Graph
    labelling: BWLabelling

    def __post_init__(self):
        if not self.labelling.is_valid_for(self.graph):
            raise InvalidLabelling("colour classes are not independent sets")

    @classmethod
    def from_black(cls, g: Graph, black: Iterable[int]) -> "LabelledBipartiteGraph":
        return cls(g, BWLabelling(g.n, frozenset(black)))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def black(self) -> frozenset:
        return self.labelling.black

    @property
    def white(self) -> frozenset:
        return self.labelling.white


# ---------------------------------------------------------------- bipartite

def is_bipartite(g: Graph) -> Optional[BWLabelling]:
    """Canonical 2-colouring (smallest vertex of each component black), or None."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in _bits(g.adj[u]):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return BWLabelling(g.n, frozenset(v for v in range(g.n) if colour[v] == 0))


def enumerate_labellings(g: Graph) -> list[BWLabelling]:
    """All 2^c labellings; bit i of the counter flips component i."""
    base = is_bipartite(g)
    if base is None:
        raise NotBipartite("graph has an odd cycle")
    comps = g.components()
    out = []
    for m in range(1 << len(comps)):
        black = set(base.black)
        for i, comp in enumerate(comps):
            if m >> i & 1:
                black ^= set(comp)
        out.append(BWLabelling(g.n, frozenset(black)))
    return out


# ---------------------------------------------------------------- embeddings

def _search_embedding(
    padj: Sequence[int],
    gadj: Sequence[int],
    allowed: Sequence[int],
) -> Optional[tuple]:
    """Lexicographically least induced embedding, pattern order 0..k-1."""
    k = len(padj)
    if k == 0:
        return ()
    if k > len(gadj):
        return None
    pdeg = [m.bit_count() for m in padj]
    gdeg = [m.bit_count() for m in gadj]
    allowed = [
        a & sum(1 << v for v in range(len(gadj)) if gdeg[v] >= pdeg[i])
        for i, a in enumerate(allowed)
    ]
    img = [0] * k
    # earlier[i]: (j, adjacent?) for j < i
    earlier = [[(j, bool(padj[i] >> j & 1)) for j in range(i)] for i in range(k)]

    def rec(i: int, used: int) -> bool:
        cand = allowed[i] & ~used
        for j, adjacent in earlier[i]:
            if adjacent:
                cand &= gadj[img[j]]
            else:
                cand &= ~gadj[img[j]]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            img[i] = low.bit_length() - 1
            if i + 1 == k or rec(i + 1, used | low):
                return True
            cand ^= low
        return False

    return tuple(img) if rec(0, 0) else None


def find_induced_embedding(h: Graph, g: Graph) -> Optional[Embedding]:
    full = g.full_mask
    return _search_embedding(h.adj, g.adj, [full] * h.n)


def find_labelled_embedding(
    h: LabelledBipartiteGraph, g: LabelledBipartiteGraph
) -> Optional[Embedding]:
    """Colour-preserving induced embedding of ``h`` into ``g``."""
    bm, wm = g.labelling.black_mask, g.labelling.white_mask
    allowed = [bm if h.labelling.is_black(v) else wm for v in range(h.n)]
    return _search_embedding(h.graph.adj, g.graph.adj, allowed)


def is_induced_embedding(h: Graph, g: Graph, emb: Sequence[int]) -> bool:
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in emb):
        return False
    return all(
        h.has_edge(u, v) == g.has_edge(emb[u], emb[v])
        for u in range(h.n) for v in range(u + 1, h.n)
    )


def is_labelled_embedding(
    h: LabelledBipartiteGraph, g: LabelledBipartiteGraph, emb: Sequence[int]
) -> bool:
    return is_induced_embedding(h.graph, g.graph, emb) and all(
        h.labelling.is_black(v) == g.labelling.is_black(emb[v]) for v in range(h.n))


# ---------------------------------------------------------------- isomorphism

def _refine(adjs: Sequence[Sequence[int]], init: Sequence[Sequence]) -> list[list[int]]:
    """Colour refinement run jointly on several graphs so colours are comparable."""
    colours = [list(c) for c in init]
    n_classes = len({c for cs in colours for c in cs})
    while True:
        sigs = []
        for adj, cs in zip(adjs, colours):
            sigs.append([
                (cs[v], tuple(sorted(cs[u] for u in _bits(adj[v]))))
                for v in range(len(adj))
            ])
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colours = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == n_classes:
            return colours
        n_classes = len(palette)


def _isomorphic(adj1, adj2, init1, init2) -> bool:
    n = len(adj1)
    if n != len(adj2):
        return False
    c1, c2 = _refine([adj1, adj2], [init1, init2])
    if sorted(c1) != sorted(c2):
        return False
    by_colour: dict[int, int] = {}
    for v, c in enumerate(c2):
        by_colour[c] = by_colour.get(c, 0) | 1 << v
    # map the most constrained vertices first
    order = sorted(range(n), key=lambda v: (bin(by_colour[c1[v]]).count("1"), v))
    img = [-1] * n

    def rec(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        cand = by_colour[c1[v]] & ~used
        for p in range(pos):
            u = order[p]
            if adj1[v] >> u & 1:
                cand &= adj2[img[u]]
            else:
                cand &= ~adj2[img[u]]
        while cand:
            low = cand & -cand
            img[v] = low.bit_length() - 1
            if rec(pos + 1, used | low):
                return True
            cand ^= low
        return False

    return rec(0, 0)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    return _isomorphic(g1.adj, g2.adj, [0] * g1.n, [0] * g2.n)


def are_labelled_isomorphic(h1: LabelledBipartiteGraph, h2: LabelledBipartiteGraph) -> bool:
    if h1.n != h2.n or len(h1.graph.edges) != len(h2.graph.edges):
        return False
    if len(h1.black) != len(h2.black):
        return False
    init1 = [int(h1.labelling.is_black(v)) for v in range(h1.n)]
    init2 = [int(h2.labelling.is_black(v)) for v in range(h2.n)]
    return _isomorphic(h1.graph.adj, h2.graph.adj, init1, init2)


# ---------------------------------------------------------------- labellings

def opposite(h: LabelledBipartiteGraph) -> LabelledBipartiteGraph:
    return LabelledBipartiteGraph(h.graph, h.labelling.opposite())


def canonical_b_labelling(h: Graph) -> BWLabelling:
    """The labelling maximising the number of black vertices.

    Raises AmbiguousB when two maximisers are not isomorphic; the result is
    only well defined when they all are. Ties go to the lexicographically
    least labelling (see ``BWLabelling.key``).
    """
    if h.n == 0:
        raise InvalidGraph("b-labelling needs at least one vertex")
    labellings = enumerate_labellings(h)
    best = max(len(l.black) for l in labellings)
    maxi = sorted((l for l in labellings if len(l.black) == best), key=BWLabelling.key)
    ref = LabelledBipartiteGraph(h, maxi[0])
    for other in maxi[1:]:
        if not are_labelled_isomorphic(ref, LabelledBipartiteGraph(h, other)):
            raise AmbiguousB(f"non-isomorphic maximum-black labellings of {h!r}")
    return maxi[0]


def b_labelled(h: Graph) -> LabelledBipartiteGraph:
    return LabelledBipartiteGraph(h, canonical_b_labelling(h))


def labellings_equivalent(h: Graph, l1: BWLabelling, l2: BWLabelling) -> bool:
    a = LabelledBipartiteGraph(h, l1)
    b = LabelledBipartiteGraph(h, l2)
    return are_labelled_isomorphic(a, b) or are_labelled_isomorphic(a, opposite(b))


def nonequivalent_labellings(h: Graph) -> list[BWLabelling]:
    reps: list[BWLabelling] = []
    for l in sorted(enumerate_labellings(h), key=BWLabelling.key):
        if not any(labellings_equivalent(h, r, l) for r in reps):
            reps.append(l)
    return reps
