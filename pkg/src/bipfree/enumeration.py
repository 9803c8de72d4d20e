"""Exhaustive and random small-graph generators for the verification suites."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

import networkx as nx

from .constructions import make_subdivided_claw, path, union_all
from .graph import (
    BWLabelling,
    Graph,
    LabelledBipartiteGraph,
    are_labelled_isomorphic,
    enumerate_labellings,
    is_bipartite,
)

ATLAS_MAX_N = 7


@lru_cache(maxsize=None)
def _atlas() -> tuple:
    out = []
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        out.append(Graph(n, frozenset((min(u, v), max(u, v)) for u, v in nxg.edges())))
    return tuple(out)


def all_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    """One graph per isomorphism class with min_n <= n <= max_n (max_n <= 7)."""
    if max_n > ATLAS_MAX_N:
        raise ValueError(f"exhaustive enumeration only up to {ATLAS_MAX_N} vertices")
    return [g for g in _atlas() if min_n <= g.n <= max_n]


def bipartite_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for g in all_graphs(max_n, min_n) if is_bipartite(g) is not None]


def connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for g in all_graphs(max_n, min_n) if g.is_connected()]


def labelled_graphs(graphs, distinct: bool = False) -> Iterator[LabelledBipartiteGraph]:
    """Every labelling of every graph; with ``distinct`` one per labelled-isomorphism class."""
    for g in graphs:
        reps: list[LabelledBipartiteGraph] = []
        for lab in enumerate_labellings(g):
            h = LabelledBipartiteGraph(g, lab)
            if distinct:
                if any(are_labelled_isomorphic(h, r) for r in reps):
                    continue
                reps.append(h)
            yield h


def _s_components(max_n: int) -> list[tuple]:
    comps = [("P", r) for r in range(1, max_n + 1)]
    for total in range(4, max_n + 1):
        for a in range(1, total):
            for b in range(a, total):
                c = total - 1 - a - b
                if c >= b:
                    comps.append(("S", a, b, c))
    return comps


def _component_graph(c: tuple) -> Graph:
    return path(c[1]) if c[0] == "P" else make_subdivided_claw(*c[1:])


def _size(c: tuple) -> int:
    return c[1] if c[0] == "P" else 1 + sum(c[1:])


def class_s_graphs(max_n: int) -> list[tuple[tuple, Graph]]:
    """Every graph in S with at most max_n vertices, as (component multiset, graph)."""
    comps = sorted(_s_components(max_n))
    out = []

    def rec(start: int, budget: int, chosen: list):
        if chosen:
            out.append((tuple(chosen), union_all(_component_graph(c) for c in chosen)))
        for i in range(start, len(comps)):
            c = comps[i]
            if _size(c) <= budget:
                chosen.append(c)
                rec(i, budget - _size(c), chosen)
                chosen.pop()

    rec(0, max_n, [])
    return out


def small_side_graphs(max_n: int, max_black: int, max_white: int | None = None) -> list[LabelledBipartiteGraph]:
    """Bipartite graphs with a labelling of at most ``max_black`` black vertices.

    Vertices 0..b-1 are black; each white vertex is described by its set of
    black neighbours and white vertices are taken as a multiset, so every
    such graph appears (possibly more than once up to isomorphism).
    """
    out = []
    for b in range(0, max_black + 1):
        types = list(range(1 << b))
        top_w = max_n - b if max_white is None else min(max_white, max_n - b)
        for w in range(0, top_w + 1):
            if b + w == 0:
                continue
            for combo in combinations_with_replacement(types, w):
                edges = frozenset(
                    (x, b + i) for i, t in enumerate(combo) for x in range(b) if t >> x & 1)
                g = Graph(b + w, edges)
                out.append(LabelledBipartiteGraph(g, BWLabelling(g.n, frozenset(range(b)))))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def random_bipartite(n_black: int, n_white: int, p: float, rng: random.Random) -> LabelledBipartiteGraph:
    """Random bipartite graph, blacks 0..n_black-1, labelled by that split."""
    n = n_black + n_white
    edges = frozenset(
        (b, n_black + w) for b in range(n_black) for w in range(n_white) if rng.random() < p)
    return LabelledBipartiteGraph(Graph(n, edges), BWLabelling(n, frozenset(range(n_black))))
