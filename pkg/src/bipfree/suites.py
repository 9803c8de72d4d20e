"""Named verification batteries.

Every suite is deterministic (randomised ones draw from ``random.Random(seed)``
with ``DEFAULT_SEED`` unless overridden) and returns a ``SuiteReport`` whose
failures each carry a GraphFile reproducer.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from . import classifier as clf
from .cliquewidth import (
    certifies,
    cliquewidth_exact,
    cliquewidth_leq,
    cliquewidth_oracle,
)
from .constructions import (
    bipartite_complement,
    cycle,
    from_name,
    make_basic,
    make_wall,
    subdivide,
)
from .enumeration import (
    bipartite_graphs,
    class_s_graphs,
    connected_graphs,
    labelled_graphs,
    random_bipartite,
    random_graph,
    small_side_graphs,
)
from .errors import UnknownSuite
from .freeness import avoids, in_class_s, is_free, is_strongly_free, is_weakly_free
from .graph import (
    BWLabelling,
    Graph,
    LabelledBipartiteGraph,
    are_isomorphic,
    are_labelled_isomorphic,
    enumerate_labellings,
    find_induced_embedding,
    find_labelled_embedding,
    is_bipartite,
    labellings_equivalent,
    nonequivalent_labellings,
    opposite,
)
from .graphio import serialize_graph

DEFAULT_SEED = 1729


@dataclass
class Failure:
    check: str
    detail: str
    reproducer: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)
    duration: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, name: str, detail: str = "",
              graph: Optional[Graph] = None, lab: Optional[BWLabelling] = None) -> bool:
        self.checks += 1
        if not cond:
            repro = serialize_graph(graph, lab) if graph is not None else ""
            self.failures.append(Failure(name, detail, repro))
        return cond

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "failures": [
                {"check": f.check, "detail": f.detail, "reproducer": f.reproducer}
                for f in self.failures
            ],
        }


def _lab(g: Graph, black) -> LabelledBipartiteGraph:
    return LabelledBipartiteGraph.from_black(g, black)


# ---------------------------------------------------------------- freeness

def suite_lemma_observation(rep: SuiteReport, **_):
    # S_{1,1,3} with u1 centre, u2,u3 leaves, u4-u5-u6 long arm (u_i -> i-1)
    g = Graph(6, frozenset({(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)}))
    # K_{1,3}+P_1 with x1 centre, x2..x4 leaves, x5 isolated (x_i -> i-1)
    h = Graph(5, frozenset({(0, 1), (0, 2), (0, 3)}))
    h_l = _lab(h, {1, 2, 3})
    h_star = _lab(h, {1, 2, 3, 4})
    rep.check(not is_free(g, h), "G is not H-free", graph=g)
    rep.check(bool(is_strongly_free(g, h_l)), "G strongly H^l-free", graph=g)
    rep.check(not is_strongly_free(g, h_star), "G not strongly H^l*-free", graph=g)
    weak = is_weakly_free(g, h_star)
    rep.check(bool(weak) and weak.labelling == BWLabelling(6, frozenset({0, 4})),
              "G weakly H^l*-free via ({u1,u5},{u2,u3,u4,u6})", graph=g)


def _freeness_grid(max_n: int, pattern_n: int):
    hosts = bipartite_graphs(max_n)
    patterns = bipartite_graphs(pattern_n)
    for g in hosts:
        for h in patterns:
            yield g, h


def suite_lemma_equivalent(rep: SuiteReport, max_n: int = 6, pattern_n: int = 4, **_):
    for g, h in _freeness_grid(max_n, pattern_n):
        plain = bool(is_free(g, h))
        strong_all = all(is_strongly_free(g, LabelledBipartiteGraph(h, l))
                         for l in enumerate_labellings(h))
        rep.check(plain == strong_all, "H-free iff strongly free for every labelling",
                  f"H={h!r}", graph=g)


def suite_freeness_hierarchy(rep: SuiteReport, max_n: int = 6, pattern_n: int = 4, **_):
    for g, h in _freeness_grid(max_n, pattern_n):
        plain = bool(is_free(g, h))
        for l in enumerate_labellings(h):
            hl = LabelledBipartiteGraph(h, l)
            strong = bool(is_strongly_free(g, hl))
            weak = bool(is_weakly_free(g, hl))
            rep.check((not plain or strong) and (not strong or weak),
                      "free => strongly free => weakly free",
                      f"H={h!r} black={sorted(l.black)}", graph=g)


def suite_lemma_equivalent2(rep: SuiteReport, max_n: int = 7, **_):
    for name in ("P_6", "2P_2"):
        h = from_name(name)
        labs = enumerate_labellings(h)
        ref = LabelledBipartiteGraph(h, labs[0])
        unique = all(are_labelled_isomorphic(ref, LabelledBipartiteGraph(h, l)) for l in labs)
        rep.check(unique, f"{name} has a unique labelling up to isomorphism")
        for g in bipartite_graphs(max_n):
            rep.check(bool(is_free(g, h)) == bool(is_weakly_free(g, ref)),
                      f"{name}-free iff weakly {name}-free", graph=g)


def suite_lemma_nonequi(rep: SuiteReport, max_n: int = 6, pattern_n: int = 4, **_):
    for h in bipartite_graphs(pattern_n):
        labs = enumerate_labellings(h)
        pairs = [(a, b) for a, b in combinations(labs, 2) if labellings_equivalent(h, a, b)]
        if not pairs:
            continue
        for g in bipartite_graphs(max_n):
            for a, b in pairs:
                ha, hb = LabelledBipartiteGraph(h, a), LabelledBipartiteGraph(h, b)
                rep.check(bool(is_strongly_free(g, ha)) == bool(is_strongly_free(g, hb))
                          and bool(is_weakly_free(g, ha)) == bool(is_weakly_free(g, hb)),
                          "equivalent labellings give equal strong/weak verdicts",
                          f"H={h!r}", graph=g)


# ---------------------------------------------------------------- classification lemmas

def suite_lemma_addit(rep: SuiteReport, max_n: int = 9, **_):
    patterns = [from_name(p) for p in clf.UNBOUNDED_PATTERNS]
    for comps, h in class_s_graphs(max_n):
        five_free = all(is_free(h, p) for p in patterns)
        listed = clf.classify_unlabelled(h).bounded
        rep.check(five_free == listed, "5-pattern-free iff in the case list",
                  f"components={comps}", graph=h)


def suite_lemma_unbounded(rep: SuiteReport, **_):
    expected = {"2P_1+2P_2": 2, "2P_1+P_4": 2, "4P_1+P_2": 3, "3P_2": 1}
    for name, count in expected.items():
        h = from_name(name)
        reps = nonequivalent_labellings(h)
        rep.check(len(reps) == count, f"{name} has {count} non-equivalent labellings",
                  f"got {len(reps)}", graph=h)
        for l in reps:
            f = bipartite_complement(LabelledBipartiteGraph(h, l)).graph
            rep.check(not in_class_s(f), f"complement of {name} is outside S",
                      f"black={sorted(l.black)}", graph=h, lab=l)

    # explicit labellings (x_i -> i-1) whose complements hold a C_4 or K_{1,4}
    def comp(edges, black):
        h = Graph(6, frozenset(edges))
        return bipartite_complement(_lab(h, black)).graph

    c4 = cycle(4)
    for edges in ({(0, 1), (2, 3)}, {(0, 1), (1, 2), (2, 3)}):
        f1 = comp(edges, {0, 2, 4, 5})
        f2 = comp(edges, {0, 2, 4})
        rep.check(are_isomorphic(f1.induced([1, 3, 4, 5]), c4), "x2,x4,x5,x6 induce C4 in F1")
        rep.check(are_isomorphic(f2.induced([0, 3, 4, 5]), c4), "x1,x4,x5,x6 induce C4 in F2")
    e = {(0, 1)}
    k14 = make_basic("star", 4)
    rep.check(are_isomorphic(comp(e, {0, 2, 3, 4, 5}).induced([1, 2, 3, 4, 5]), k14),
              "x2..x6 induce K_{1,4} in F1")
    for black in ({0, 2, 3, 4}, {0, 2, 3}):
        rep.check(are_isomorphic(comp(e, black).induced([1, 2, 3, 5]), c4),
                  "x2,x3,x4,x6 induce C4 in F2 and F3")

    three_p2 = Graph(6, frozenset({(0, 1), (2, 3), (4, 5)}))
    alt = _lab(three_p2, {0, 2, 4})
    rep.check(all(are_labelled_isomorphic(alt, LabelledBipartiteGraph(three_p2, l))
                  for l in enumerate_labellings(three_p2)),
              "every labelling of 3P_2 is isomorphic to the alternating one")
    rep.check(are_isomorphic(bipartite_complement(alt).graph, cycle(6)),
              "complement of alternating 3P_2 is C_6")
    # K_{2,2} minus a perfect matching is the other perfect matching, so 2P_2
    # is its own bipartite complement under every labelling (never C_4)
    two_p2 = from_name("2P_2")
    rep.check(all(are_isomorphic(bipartite_complement(LabelledBipartiteGraph(two_p2, l)).graph, two_p2)
                  for l in enumerate_labellings(two_p2)),
              "complement of 2P_2 is 2P_2 under every labelling")
    two_p1 = from_name("2P_1")
    rep.check(are_isomorphic(bipartite_complement(_lab(two_p1, {0, 1})).graph, two_p1)
              and are_isomorphic(bipartite_complement(_lab(two_p1, {0})).graph, from_name("P_2")),
              "complements of 2P_1 are 2P_1 and P_2")


def suite_classifier_consistency(rep: SuiteReport, max_n: int = 7, pair_n: int = 6, **_):
    for h in bipartite_graphs(max_n):
        plain = clf.classify_unlabelled(h).bounded
        labs = enumerate_labellings(h)
        verdicts = {}
        for l in labs:
            hl = LabelledBipartiteGraph(h, l)
            s = clf.classify_strong(hl).bounded
            w = clf.classify_weak(hl).bounded
            verdicts[l] = (s, w)
            rep.check((not w or s) and (not s or plain), "weak => strong => unlabelled bounded",
                      graph=h, lab=l)
            op = opposite(hl)
            rep.check((clf.classify_strong(op).bounded, clf.classify_weak(op).bounded) == (s, w),
                      "verdicts invariant under opposite", graph=h, lab=l)
        for a, b in combinations(labs, 2):
            if verdicts[a] != verdicts[b]:
                rep.check(not labellings_equivalent(h, a, b),
                          "equivalent labellings share verdicts", graph=h, lab=a)
            else:
                rep.checks += 1

    graphs = bipartite_graphs(pair_n)
    plain_b = {g: clf.classify_unlabelled(g).bounded for g in graphs}
    for big in graphs:
        if not plain_b[big]:
            continue
        for small in graphs:
            if small.n <= big.n and not plain_b[small]:
                rep.check(find_induced_embedding(small, big) is None,
                          "induced subgraph of a bounded H is bounded", graph=small)
            else:
                rep.checks += 1
    labelled = list(labelled_graphs(graphs, distinct=True))
    for mode, fn in (("strong", clf.classify_strong), ("weak", clf.classify_weak)):
        bounded = {h: fn(h).bounded for h in labelled}
        for big in labelled:
            if not bounded[big]:
                continue
            for small in labelled:
                if small.n <= big.n and not bounded[small]:
                    rep.check(find_labelled_embedding(small, big) is None,
                              f"labelled subgraph of a {mode}-bounded H is {mode}-bounded",
                              graph=small.graph, lab=small.labelling)
                else:
                    rep.checks += 1


# ---------------------------------------------------------------- clique-width

def suite_cliquewidth_engine(rep: SuiteReport, max_n: int = 6, samples: int = 200,
                             seed: int = DEFAULT_SEED, **_):
    def compare(g: Graph, what: str):
        res = cliquewidth_exact(g)
        rep.check(certifies(res.certificate, g, res.width), f"{what}: certificate rebuilds G",
                  graph=g)
        o = cliquewidth_oracle(g)
        rep.check(o == res.width, f"{what}: oracle agrees", f"search={res.width} oracle={o}",
                  graph=g)

    for g in connected_graphs(max_n):
        compare(g, "connected")
    rng = random.Random(seed)
    for _ in range(samples):
        compare(random_graph(7, 0.5, rng), "random 7-vertex")
    for name, want in (("P_4", 3), ("C_7", 4), ("K_{1,5}", 2)):
        g = from_name(name)
        got = cliquewidth_exact(g).width
        rep.check(got == want, f"cwd({name}) = {want}", f"got {got}", graph=g)
    rep.check(cliquewidth_oracle(from_name("P_4")) == 3 and cliquewidth_oracle(from_name("C_7")) == 4,
              "oracle pins P_4 -> 3, C_7 -> 4")


def _dedupe(graphs: list[Graph]) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    for g in graphs:
        key = (g.n, len(g.edges), tuple(sorted(g.degrees())))
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(g, o) for o in bucket):
            bucket.append(g)
    return [g for b in buckets.values() for g in b]


def suite_cliquewidth_bounds(rep: SuiteReport, max_n: int = 8, s: int = 3, **_):
    sp1 = from_name(f"{s}P_1")
    # a bipartite sP_1-free graph has fewer than s vertices per colour class
    few = _dedupe([h.graph for h in small_side_graphs(max_n, s - 1, s - 1)])
    sp1_free = [g for g in few if is_free(g, sp1)]
    if max_n <= 7:
        rep.check(len(sp1_free) == sum(1 for g in bipartite_graphs(max_n) if is_free(g, sp1)),
                  "sP1-free corpus matches the atlas")
    for g in sp1_free:
        cert = cliquewidth_leq(g, 2 * s - 2)
        rep.check(cert is not None and certifies(cert, g, 2 * s - 2),
                  f"{s}P_1-free bipartite => cwd <= {2 * s - 2}", graph=g)
    for g in _dedupe([h.graph for h in small_side_graphs(max_n, s - 1)]):
        cert = cliquewidth_leq(g, s + 1)
        rep.check(cert is not None and certifies(cert, g, s + 1),
                  f"labelling with |B| <= {s - 1} => cwd <= {s + 1}", graph=g)


# ---------------------------------------------------------------- proof procedures

def random_star_instance(rng: random.Random, max_n: int = 14) -> tuple[Graph, BWLabelling]:
    """Random labelled graph avoiding (2P_1+P_3)^b with |B| >= 4, |W| >= 1."""
    nb = rng.randint(4, max_n - 1)
    nw = rng.randint(1, max_n - nb)
    n = nb + nw
    perm = list(range(n))
    rng.shuffle(perm)
    blacks = perm[:nb]
    edges = set()
    for w in perm[nb:]:
        k = rng.choice([0, 1, nb - 1, nb]) if rng.random() < 0.9 else rng.randint(0, nb)
        for b in rng.sample(blacks, k):
            edges.add((min(b, w), max(b, w)))
    return Graph(n, frozenset(edges)), BWLabelling(n, frozenset(blacks))


def random_p1p5_instance(rng: random.Random, max_n: int = 14) -> tuple[Graph, BWLabelling]:
    """Random labelled graph that may or may not avoid (P_1+P_5)^b."""
    while True:
        nb = rng.randint(1, max_n - 1)
        nw = rng.randint(1, max_n - nb)
        style = rng.random()
        if style < 0.4:
            h = random_bipartite(nb, nw, rng.choice([0.1, 0.3, 0.5, 0.7, 0.9]), rng)
            g, l = h.graph, h.labelling
        else:
            # whites near-empty or near-full towards B, then a few flips
            edges = set()
            for w in range(nb, nb + nw):
                k = rng.choice([0, 1, 2, nb - 2, nb - 1, nb])
                k = max(0, min(nb, k))
                for b in rng.sample(range(nb), k):
                    edges.add((b, w))
            for _ in range(rng.randint(0, 2)):
                b, w = rng.randrange(nb), rng.randrange(nb, nb + nw)
                edges ^= {(b, w)}
            g = Graph(nb + nw, frozenset(edges))
            l = BWLabelling(nb + nw, frozenset(range(nb)))
        perm = list(range(g.n))
        rng.shuffle(perm)
        g2 = Graph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))
        return g2, BWLabelling(g.n, frozenset(perm[v] for v in l.black))


def suite_proof_procedures(rep: SuiteReport, samples: int = 200, seed: int = DEFAULT_SEED,
                           max_n: int = 14, **_):
    rng = random.Random(seed)
    pattern = clf.b_of("2P_1+P_3")
    done = 0
    while done < samples:
        g, l = random_star_instance(rng, max_n)
        if not avoids(g, l, pattern):
            continue
        done += 1
        try:
            _, out = clf.star_decomposition(g, l)
            rep.check(clf.is_star_forest(out), "star decomposition yields a star forest",
                      graph=g, lab=l)
        except Exception as exc:  # noqa: BLE001 - every failure must be reported
            rep.check(False, "star decomposition raised", repr(exc), graph=g, lab=l)
    pattern = clf.b_of("P_1+P_5")
    post = clf.b_of("P_1+2P_2")
    done = attempts = 0
    while done < samples:
        attempts += 1
        g, l = random_p1p5_instance(rng, max_n)
        if not avoids(g, l, pattern):
            continue
        done += 1
        try:
            out = clf.p1p5_reduction(g, l)
            rep.check(avoids(out.graph, out.labelling, post),
                      "reduction output avoids (P_1+2P_2)^b", graph=g, lab=l)
        except Exception as exc:  # noqa: BLE001
            rep.check(False, "p1p5 reduction raised", repr(exc), graph=g, lab=l)


# ---------------------------------------------------------------- constructions

def suite_constructions(rep: SuiteReport, **_):
    for h in range(1, 6):
        w = make_wall(h)
        rep.check(is_bipartite(w) is not None and w.is_connected()
                  and w.max_degree() == (2 if h == 1 else 3),
                  f"wall({h}) bipartite, connected, max degree 3 (2 for the hexagon)", graph=w)
    rep.check(are_isomorphic(make_wall(1), cycle(6)), "wall(1) is C_6")

    claw_b = clf.b_of("K_{1,3}")
    for h in (2, 3):
        wall = make_wall(h)
        g = subdivide(wall, 1)
        white_sub = clf.subdivision_white_labelling(wall)
        rep.check(avoids(g, white_sub, claw_b),
                  f"subdivided wall({h}) avoids (K_13)^b with subdivision vertices white",
                  graph=g, lab=white_sub)
        rep.check(bool(is_weakly_free(g, claw_b)), f"subdivided wall({h}) weakly (K_13)^b-free",
                  graph=g)
        rep.check(not avoids(g, white_sub.opposite(), claw_b),
                  f"subdivision vertices black do not avoid (K_13)^b (wall {h})",
                  graph=g, lab=white_sub.opposite())
        comp = bipartite_complement(LabelledBipartiteGraph(g, white_sub))
        four_b1 = _lab(from_name("4P_1"), {0, 1, 2})
        rep.check(avoids(comp.graph, comp.labelling, four_b1),
                  f"bipartite complement of subdivided wall({h}) avoids 3-black 4P_1",
                  graph=comp.graph, lab=comp.labelling)

    h_graph = Graph(6, frozenset({(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)}))
    double_claw = Graph(8, frozenset({(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (0, 4)}))
    targets = [("C_4", cycle(4), 2), ("K_{1,4}", make_basic("star", 4), 3),
               ("two claws sharing an edge", h_graph, 2),
               ("two claws with centres joined", double_claw, 2)]
    for name, h, size in targets:
        try:
            g = clf.unbounded_witness_family(h, "unlabelled", size)
            rep.check(bool(is_free(g, h)), f"witness family for {name} is H-free", graph=g)
            hl = LabelledBipartiteGraph(h, enumerate_labellings(h)[0])
            gs = clf.unbounded_witness_family(hl, "strong", size)
            rep.check(bool(is_strongly_free(gs, hl)), f"witness family for {name} strongly free",
                      graph=gs)
        except Exception as exc:  # noqa: BLE001
            rep.check(False, f"witness family for {name} raised", repr(exc), graph=h)
    for size in (2, 3):
        g = clf.unbounded_witness_family(claw_b, "weak", size)
        rep.check(bool(is_weakly_free(g, claw_b)), f"weak (K_13)^b witness size {size}", graph=g)


SUITES: dict[str, Callable] = {
    "lemma-observation": suite_lemma_observation,
    "lemma-equivalent": suite_lemma_equivalent,
    "freeness-hierarchy": suite_freeness_hierarchy,
    "lemma-equivalent2": suite_lemma_equivalent2,
    "lemma-nonequi": suite_lemma_nonequi,
    "lemma-addit": suite_lemma_addit,
    "lemma-unbounded": suite_lemma_unbounded,
    "classifier-consistency": suite_classifier_consistency,
    "cliquewidth-engine": suite_cliquewidth_engine,
    "cliquewidth-bounds": suite_cliquewidth_bounds,
    "proof-procedures": suite_proof_procedures,
    "constructions": suite_constructions,
}


def run_suite(name: str, **params) -> SuiteReport:
    """Run suite ``name``; ``None``-valued parameters fall back to the defaults."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    rep = SuiteReport(name)
    start = time.perf_counter()
    SUITES[name](rep, **{k: v for k, v in params.items() if v is not None})
    rep.duration = time.perf_counter() - start
    return rep
