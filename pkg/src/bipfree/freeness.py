"""Plain, strong and weak H-freeness, and recognition of the class S.

S is the class of graphs whose components are all paths or subdivided claws.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .constructions import make_subdivided_claw, path, union_all
from .errors import EmptyH, NotBipartite
from .graph import (
    BWLabelling,
    Embedding,
    Graph,
    LabelledBipartiteGraph,
    enumerate_labellings,
    find_induced_embedding,
    find_labelled_embedding,
    is_bipartite,
)


@dataclass(frozen=True)
class FreenessResult:
    """Outcome of a freeness test; truthy iff the host is free.

    ``embedding`` is a copy of the pattern when one was found (for the weak
    test: the copy inside the first labelling). ``labelling`` is the host
    labelling backing the verdict: the one containing the copy for a failed
    strong test, the avoiding one for a passed weak test.
    """

    free: bool
    embedding: Optional[Embedding] = None
    labelling: Optional[BWLabelling] = None

    def __bool__(self) -> bool:
        return self.free


def _check_pattern(h: Graph) -> None:
    if h.n == 0:
        raise EmptyH("forbidden graph must have at least one vertex")


def is_free(g: Graph, h: Graph) -> FreenessResult:
    _check_pattern(h)
    emb = find_induced_embedding(h, g)
    return FreenessResult(emb is None, emb)


def _host_labellings(g: Graph) -> list[BWLabelling]:
    if is_bipartite(g) is None:
        raise NotBipartite("host graph must be bipartite")
    return enumerate_labellings(g)


def is_strongly_free(g: Graph, h: LabelledBipartiteGraph) -> FreenessResult:
    """Free iff no labelling of g contains h as a labelled induced subgraph."""
    _check_pattern(h.graph)
    labellings = _host_labellings(g)
    if h.n > g.n:
        return FreenessResult(True)
    for lab in labellings:
        emb = find_labelled_embedding(h, LabelledBipartiteGraph(g, lab))
        if emb is not None:
            return FreenessResult(False, emb, lab)
    return FreenessResult(True)


def is_weakly_free(g: Graph, h: LabelledBipartiteGraph) -> FreenessResult:
    """Free iff some labelling of g avoids h as a labelled induced subgraph."""
    _check_pattern(h.graph)
    labellings = _host_labellings(g)
    first_emb = None
    for lab in labellings:
        emb = find_labelled_embedding(h, LabelledBipartiteGraph(g, lab))
        if emb is None:
            return FreenessResult(True, None, lab)
        if first_emb is None:
            first_emb = emb
    return FreenessResult(False, first_emb, labellings[0])


def avoids(g: Graph, lab: BWLabelling, h: LabelledBipartiteGraph) -> bool:
    """True iff the labelled host (g, lab) has no labelled copy of h."""
    return find_labelled_embedding(h, LabelledBipartiteGraph(g, lab)) is None


# ---------------------------------------------------------------- class S

@dataclass(frozen=True)
class SComponent:
    """One component of an S-decomposition.

    ``kind`` is ``"path"`` (params ``(r,)``), ``"claw"`` (params ``(h, i, j)``)
    or ``"not-in-S"`` with params ``(obstruction,)`` where obstruction is one
    of ``"cycle"``, ``"degree>=4"``, ``"two-branch-vertices"``.
    """

    kind: str
    params: tuple
    vertices: tuple


@dataclass(frozen=True)
class SDecomposition:
    components: tuple

    @property
    def in_s(self) -> bool:
        return all(c.kind != "not-in-S" for c in self.components)

    def obstruction(self) -> Optional[str]:
        for c in self.components:
            if c.kind == "not-in-S":
                return c.params[0]
        return None

    def reconstruct(self) -> Graph:
        parts = []
        for c in self.components:
            if c.kind == "path":
                parts.append(path(c.params[0]))
            elif c.kind == "claw":
                parts.append(make_subdivided_claw(*c.params))
            else:
                raise ValueError("cannot rebuild a component outside S")
        return union_all(parts)


def _arm_length(g: Graph, centre: int, first: int) -> int:
    length, prev, cur = 1, centre, first
    while g.degree(cur) == 2:
        nxt = next(v for v in g.neighbours(cur) if v != prev)
        prev, cur = cur, nxt
        length += 1
    return length


def s_decompose(h: Graph) -> SDecomposition:
    comps = []
    for comp in h.components():
        vs = tuple(comp)
        sub_edges = sum(h.degree(v) for v in comp) // 2
        degs = [h.degree(v) for v in comp]
        if sub_edges >= len(comp):
            comps.append(SComponent("not-in-S", ("cycle",), vs))
        elif max(degs) >= 4:
            comps.append(SComponent("not-in-S", ("degree>=4",), vs))
        elif degs.count(3) >= 2:
            comps.append(SComponent("not-in-S", ("two-branch-vertices",), vs))
        elif degs.count(3) == 1:
            centre = comp[degs.index(3)]
            arms = sorted(_arm_length(h, centre, v) for v in h.neighbours(centre))
            comps.append(SComponent("claw", tuple(arms), vs))
        else:
            comps.append(SComponent("path", (len(comp),), vs))
    return SDecomposition(tuple(comps))


def in_class_s(h: Graph) -> bool:
    return s_decompose(h).in_s
