"""Boundedness of clique-width for H-free, strongly and weakly H-free bipartite graphs.

Each decider walks its list of bounded cases in a fixed order and reports the
first match together with an embedding into the case graph. Unbounded
verdicts name the obstruction that forces unboundedness.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .constructions import (
    bipartite_complement,
    bipartite_complementation,
    delete_vertex,
    from_name,
    make_wall,
    subdivide,
)
from .errors import (
    EmptyH,
    InvalidParameter,
    NotAStarForest,
    PostconditionFailed,
    PreconditionViolated,
    UnsupportedCase,
)
from .freeness import in_class_s, is_free, is_strongly_free, is_weakly_free, s_decompose
from .graph import (
    BWLabelling,
    Graph,
    LabelledBipartiteGraph,
    are_labelled_isomorphic,
    b_labelled,
    find_induced_embedding,
    find_labelled_embedding,
    is_bipartite,
    opposite,
)

BOUNDED = "bounded"
UNBOUNDED = "unbounded"

STRONG_CASE_GRAPHS = ("K_{1,3}+3P_1", "K_{1,3}+P_2", "P_1+S_{1,1,3}", "S_{1,2,3}")
WEAK_LABELLED_CASE_GRAPHS = ("2P_1+P_3", "P_1+P_5")
WEAK_UNLABELLED_CASE_GRAPHS = ("P_2+P_4", "P_6")
UNBOUNDED_PATTERNS = ("2P_1+2P_2", "2P_1+P_4", "4P_1+P_2", "3P_2", "2P_3")

SP1 = "sP1"
SP1_OPPOSITE = "sP1-opposite"
NON_BIPARTITE = "non-bipartite-H"


def orient(name: str, flipped: bool) -> str:
    return f"({name})^{'bbar' if flipped else 'b'}"


CASES_UNLABELLED = (SP1,) + STRONG_CASE_GRAPHS
CASES_STRONG = (SP1, SP1_OPPOSITE) + tuple(
    orient(x, f) for x in STRONG_CASE_GRAPHS for f in (False, True))
CASES_WEAK = (SP1, SP1_OPPOSITE) + tuple(
    orient(x, f) for x in WEAK_LABELLED_CASE_GRAPHS for f in (False, True)
) + WEAK_UNLABELLED_CASE_GRAPHS


@dataclass(frozen=True)
class Verdict:
    """``witness`` is an embedding into the case graph (bounded, ``None`` for
    the sP1 cases) or the name of the obstruction (unbounded)."""

    decision: str
    case: str
    witness: Union[tuple, str, None] = None

    @property
    def bounded(self) -> bool:
        return self.decision == BOUNDED


@lru_cache(maxsize=None)
def named(name: str) -> Graph:
    return from_name(name)


@lru_cache(maxsize=None)
def b_of(name: str) -> LabelledBipartiteGraph:
    """The case graph ``name`` with its b-labelling; raises if b is undefined."""
    return b_labelled(named(name))


# ---------------------------------------------------------------- deciders

def _obstruction_unlabelled(h: Graph) -> str:
    obs = s_decompose(h).obstruction()
    if obs is not None:
        return f"not-in-S:{obs}"
    for p in UNBOUNDED_PATTERNS:
        if not is_free(h, named(p)):
            return f"contains-{p}"
    raise PostconditionFailed(f"no obstruction found for unbounded {h!r}")


def classify_unlabelled(h: Graph) -> Verdict:
    if h.n == 0:
        raise EmptyH("H must have at least one vertex")
    if is_bipartite(h) is None:
        return Verdict(UNBOUNDED, NON_BIPARTITE, "all bipartite graphs are H-free")
    if not h.edges:
        return Verdict(BOUNDED, SP1)
    for name in STRONG_CASE_GRAPHS:
        emb = find_induced_embedding(h, named(name))
        if emb is not None:
            return Verdict(BOUNDED, name, emb)
    return Verdict(UNBOUNDED, "none", _obstruction_unlabelled(h))


def _sp1_case(h: LabelledBipartiteGraph) -> Optional[Verdict]:
    if h.graph.edges:
        return None
    if len(h.white) == 0:
        return Verdict(BOUNDED, SP1)
    if len(h.black) == 0:
        return Verdict(BOUNDED, SP1_OPPOSITE)
    return None


def _labelled_cases(h: LabelledBipartiteGraph, names) -> Optional[Verdict]:
    for name in names:
        for flipped in (False, True):
            host = b_of(name)
            if flipped:
                host = opposite(host)
            emb = find_labelled_embedding(h, host)
            if emb is not None:
                return Verdict(BOUNDED, orient(name, flipped), emb)
    return None


def classify_strong(h: LabelledBipartiteGraph) -> Verdict:
    if h.n == 0:
        raise EmptyH("H must have at least one vertex")
    v = _sp1_case(h) or _labelled_cases(h, STRONG_CASE_GRAPHS)
    if v is not None:
        return v
    plain = classify_unlabelled(h.graph)
    if not plain.bounded:
        return Verdict(UNBOUNDED, "none", f"H-free-unbounded:{plain.witness}")
    if not in_class_s(bipartite_complement(h).graph):
        return Verdict(UNBOUNDED, "none", "complement-not-in-S")
    return Verdict(UNBOUNDED, "none", "outside-case-list")


@lru_cache(maxsize=None)
def _mixed_4p1() -> tuple:
    g = named("4P_1")
    return tuple(LabelledBipartiteGraph.from_black(g, range(nb)) for nb in (1, 2, 3))


def _obstruction_weak(h: LabelledBipartiteGraph) -> str:
    g = h.graph
    if any(len(c) <= sum(g.degree(v) for v in c) // 2 for c in g.components()):
        return "contains-cycle"
    if not is_free(g, named("2P_3")):
        return "contains-2P_3"
    if g.max_degree() >= 3:
        return "degree>=3"
    if any(find_labelled_embedding(p, h) is not None for p in _mixed_4p1()):
        return "mixed-4P_1"
    if not is_free(g, named("3P_2")):
        return "contains-3P_2"
    raise PostconditionFailed(f"no obstruction found for unbounded weak {h!r}")


def classify_weak(h: LabelledBipartiteGraph) -> Verdict:
    if h.n == 0:
        raise EmptyH("H must have at least one vertex")
    v = _sp1_case(h) or _labelled_cases(h, WEAK_LABELLED_CASE_GRAPHS)
    if v is not None:
        return v
    for name in WEAK_UNLABELLED_CASE_GRAPHS:
        emb = find_induced_embedding(h.graph, named(name))
        if emb is not None:
            return Verdict(BOUNDED, name, emb)
    return Verdict(UNBOUNDED, "none", _obstruction_weak(h))


def classify(h, mode: str) -> Verdict:
    if mode in ("unlabelled", "plain"):
        return classify_unlabelled(h.graph if isinstance(h, LabelledBipartiteGraph) else h)
    if mode == "strong":
        return classify_strong(h)
    if mode == "weak":
        return classify_weak(h)
    raise InvalidParameter(f"unknown mode {mode!r}")


# ---------------------------------------------------------------- proof procedures

def is_star_forest(g: Graph) -> bool:
    for comp in g.components():
        m = sum(g.degree(v) for v in comp) // 2
        if m != len(comp) - 1:
            return False
        if len(comp) > 2 and max(g.degree(v) for v in comp) != len(comp) - 1:
            return False
    return True


def _require_labelling(g: Graph, l: BWLabelling) -> LabelledBipartiteGraph:
    if not l.is_valid_for(g):
        raise PreconditionViolated("labelling is not a bipartition of the graph")
    return LabelledBipartiteGraph(g, l)


def star_decomposition(g: Graph, l: BWLabelling) -> tuple[frozenset, Graph]:
    """Complement between B and the near-complete white vertices.

    With l avoiding (2P_1+P_3)^b, every white vertex misses at most one or
    hits at most one black vertex; flipping the first kind leaves a forest
    of stars. Returns (W', resulting graph).
    """
    host = _require_labelling(g, l)
    black = sorted(l.black)
    white = sorted(l.white)
    if len(black) < 4 or len(white) < 1:
        raise PreconditionViolated("need at least four black and one white vertex")
    if find_labelled_embedding(b_of("2P_1+P_3"), host) is not None:
        raise PreconditionViolated("labelling contains (2P_1+P_3)^b")
    bmask = l.black_mask
    w_prime = frozenset(
        w for w in white if (bmask & ~g.adj[w]).bit_count() <= 1)
    out = bipartite_complementation(g, w_prime, black)
    if not is_star_forest(out):
        raise NotAStarForest(f"complementation of {g!r} is not a star forest")
    return w_prime, out


def p1p5_reduction(g: Graph, l: BWLabelling) -> LabelledBipartiteGraph:
    """Reduce a weakly (P_1+P_5)^b-free witness to a weakly (P_1+2P_2)^b-free one.

    If |B| is even the highest black vertex is dropped, then the white
    vertices seeing fewer than half of B are complemented against B. The
    result carries the inherited labelling.
    """
    host = _require_labelling(g, l)
    if find_labelled_embedding(b_of("P_1+P_5"), host) is not None:
        raise PreconditionViolated("labelling contains (P_1+P_5)^b")
    if l.black and len(l.black) % 2 == 0:
        drop = max(l.black)
        g = delete_vertex(g, drop)
        l = l.restrict(v for v in range(l.n) if v != drop)
    bmask = l.black_mask
    nb = len(l.black)
    x = [w for w in sorted(l.white) if 2 * (g.adj[w] & bmask).bit_count() < nb]
    out = LabelledBipartiteGraph(bipartite_complementation(g, x, l.black), l)
    if find_labelled_embedding(b_of("P_1+2P_2"), out) is not None:
        raise PostconditionFailed("reduction output still contains (P_1+2P_2)^b")
    return out


# ---------------------------------------------------------------- witness families

def _claw_b() -> LabelledBipartiteGraph:
    return b_of("K_{1,3}")


def unbounded_witness_family(h, mode: str, size: int) -> Graph:
    """A member of the (unbounded) class of the given mode, growing with size.

    Supported: any H outside S (a |V(H)|-subdivided wall) and, for weak
    freeness, (K_{1,3})^b or its opposite (a 1-subdivided wall).
    """
    if size < 1:
        raise InvalidParameter("size must be >= 1")
    if mode in ("unlabelled", "plain"):
        hg = h.graph if isinstance(h, LabelledBipartiteGraph) else h
        verdict = classify_unlabelled(hg)
    elif mode in ("strong", "weak"):
        if not isinstance(h, LabelledBipartiteGraph):
            raise InvalidParameter(f"{mode} mode needs a labelled H")
        hg = h.graph
        verdict = classify_strong(h) if mode == "strong" else classify_weak(h)
    else:
        raise InvalidParameter(f"unknown mode {mode!r}")
    if verdict.bounded:
        raise PreconditionViolated(f"class is bounded ({verdict.case})")

    if not in_class_s(hg):
        g = subdivide(make_wall(size), hg.n)
    elif mode == "weak" and (are_labelled_isomorphic(h, _claw_b())
                             or are_labelled_isomorphic(h, opposite(_claw_b()))):
        g = subdivide(make_wall(size), 1)
    else:
        raise UnsupportedCase("no generator for this unbounded case")

    if mode in ("unlabelled", "plain"):
        ok = bool(is_free(g, hg))
    elif mode == "strong":
        ok = bool(is_strongly_free(g, h))
    else:
        ok = bool(is_weakly_free(g, h))
    if not ok:
        raise PostconditionFailed("generated graph is not in the claimed class")
    return g


def subdivision_white_labelling(wall: Graph, k: int = 1) -> BWLabelling:
    """Labelling of subdivide(wall, k=1) with the new vertices white."""
    if k != 1:
        raise InvalidParameter("only 1-subdivisions have a fixed subdivision colour class")
    n = wall.n + len(wall.edges)
    return BWLabelling(n, frozenset(range(wall.n)))
