import random

import pytest
from hypothesis import given, settings

from bipfree import classifier as clf
from bipfree.classifier import (
    BOUNDED,
    UNBOUNDED,
    b_of,
    classify,
    classify_strong,
    classify_unlabelled,
    classify_weak,
    is_star_forest,
    p1p5_reduction,
    star_decomposition,
    subdivision_white_labelling,
    unbounded_witness_family,
)
from bipfree.constructions import cycle, from_name, make_wall, star, subdivide
from bipfree.errors import EmptyH, PreconditionViolated, UnsupportedCase
from bipfree.freeness import avoids, in_class_s, is_free, is_weakly_free
from bipfree.graph import (
    BWLabelling,
    Graph,
    LabelledBipartiteGraph,
    are_isomorphic,
    enumerate_labellings,
    is_induced_embedding,
    is_labelled_embedding,
    opposite,
)
from bipfree.suites import random_p1p5_instance, random_star_instance

from conftest import bipartite_graphs


def lab(g, black):
    return LabelledBipartiteGraph.from_black(g, black)


def graph(n, edges):
    return Graph(n, frozenset(edges))


class TestUnlabelled:
    def test_s123(self):
        v = classify_unlabelled(from_name("S_{1,2,3}"))
        assert (v.decision, v.case) == (BOUNDED, "S_{1,2,3}")

    def test_2p3(self):
        v = classify_unlabelled(from_name("2P_3"))
        assert v.decision == UNBOUNDED and v.witness == "contains-2P_3"

    def test_k14(self):
        v = classify_unlabelled(star(4))
        assert v.decision == UNBOUNDED and v.witness == "not-in-S:degree>=4"

    def test_sp1_any_size(self):
        assert classify_unlabelled(Graph(9)).case == clf.SP1

    def test_non_bipartite(self):
        assert classify_unlabelled(cycle(5)).case == clf.NON_BIPARTITE

    def test_empty(self):
        with pytest.raises(EmptyH):
            classify_unlabelled(Graph(0))

    @given(bipartite_graphs(min_n=1, max_n=7))
    @settings(deadline=None)
    def test_witness_reverifies(self, h):
        v = classify_unlabelled(h)
        if v.bounded and v.witness is not None:
            assert is_induced_embedding(h, clf.named(v.case), v.witness)
        assert v.case in clf.CASES_UNLABELLED + ("none",)


class TestStrong:
    def test_s123_b(self):
        assert classify_strong(b_of("S_{1,2,3}")).case == "(S_{1,2,3})^b"

    def test_k13_p1_four_black(self):
        h = lab(from_name("K_{1,3}+P_1"), {1, 2, 3, 4})
        assert classify_strong(h).case == "(K_{1,3}+3P_1)^b"

    def test_2p3_alternating(self):
        v = classify_strong(lab(from_name("2P_3"), {0, 2, 4}))
        assert v.decision == UNBOUNDED and v.witness.startswith("H-free-unbounded")

    def test_large_sp1(self):
        # the case graphs hold at most six black isolated vertices
        h = lab(Graph(8), range(8))
        assert classify_strong(h).case == clf.SP1
        assert classify_strong(opposite(h)).case == clf.SP1_OPPOSITE

    def test_mixed_sp1_unbounded(self):
        assert not classify_strong(lab(Graph(8), range(4))).bounded

    @given(bipartite_graphs(min_n=1, max_n=7))
    @settings(deadline=None)
    def test_witness_reverifies(self, h):
        for l in enumerate_labellings(h)[:4]:
            hl = LabelledBipartiteGraph(h, l)
            v = classify_strong(hl)
            assert v.case in clf.CASES_STRONG + ("none",)
            if v.bounded and v.witness is not None:
                name, flip = v.case[1:].split(")^")
                host = b_of(name) if flip == "b" else opposite(b_of(name))
                assert is_labelled_embedding(hl, host, v.witness)


class TestWeak:
    def test_2p1p3_b(self):
        assert classify_weak(b_of("2P_1+P_3")).case == "(2P_1+P_3)^b"

    def test_k13_b(self):
        v = classify_weak(b_of("K_{1,3}"))
        assert v.decision == UNBOUNDED and v.witness == "degree>=3"

    def test_mixed_4p1(self):
        v = classify_weak(lab(Graph(4), {0, 1}))
        assert v.decision == UNBOUNDED and v.witness == "mixed-4P_1"

    def test_unlabelled_cases_ignore_labelling(self):
        for l in enumerate_labellings(from_name("P_2+P_4")):
            assert classify_weak(LabelledBipartiteGraph(from_name("P_2+P_4"), l)).bounded

    def test_dispatch(self):
        assert classify(b_of("2P_1+P_3"), "weak").bounded
        assert classify(from_name("2P_3"), "unlabelled").decision == UNBOUNDED


class TestCaseGraphs:
    def test_b_defined_for_all_case_graphs(self):
        names = clf.STRONG_CASE_GRAPHS + clf.WEAK_LABELLED_CASE_GRAPHS + clf.WEAK_UNLABELLED_CASE_GRAPHS
        for name in names:
            assert b_of(name).n == from_name(name).n


class TestStarDecomposition:
    def test_single_universal_white(self):
        g = graph(5, [(b, 4) for b in range(4)])
        w, out = star_decomposition(g, BWLabelling(5, frozenset(range(4))))
        assert w == {4} and out == Graph(5)

    def test_two_whites(self):
        g = graph(6, [(b, 4) for b in range(4)] + [(0, 5)])
        w, out = star_decomposition(g, BWLabelling(6, frozenset(range(4))))
        assert w == {4} and are_isomorphic(out, from_name("P_2+4P_1"))

    def test_pattern_present(self):
        g = graph(5, [(0, 4), (1, 4)])
        with pytest.raises(PreconditionViolated):
            star_decomposition(g, BWLabelling(5, frozenset(range(4))))

    def test_too_few_blacks(self):
        with pytest.raises(PreconditionViolated):
            star_decomposition(graph(4, [(0, 3)]), BWLabelling(4, frozenset(range(3))))

    def test_random_instances(self):
        rng = random.Random(3)
        done = 0
        while done < 60:
            g, l = random_star_instance(rng, 12)
            if avoids(g, l, b_of("2P_1+P_3")):
                done += 1
                assert is_star_forest(star_decomposition(g, l)[1])

    def test_star_forest_predicate(self):
        assert is_star_forest(from_name("K_{1,4}+P_2+P_1"))
        assert not is_star_forest(from_name("P_4"))
        assert not is_star_forest(cycle(4))


class TestP1P5Reduction:
    def test_even_black_dropped(self):
        g = graph(5, [(b, 4) for b in range(4)])
        out = p1p5_reduction(g, BWLabelling(5, frozenset(range(4))))
        assert are_isomorphic(out.graph, star(3)) and out.labelling.black == {0, 1, 2}

    def test_sparse_white_flipped(self):
        g = graph(4, [(0, 3)])
        out = p1p5_reduction(g, BWLabelling(4, frozenset(range(3))))
        assert out.graph.edges == {(1, 3), (2, 3)}

    def test_small_host(self):
        g = graph(5, [(0, 3), (1, 4)])
        out = p1p5_reduction(g, BWLabelling(5, frozenset(range(3))))
        assert avoids(out.graph, out.labelling, b_of("P_1+2P_2"))

    def test_pattern_present(self):
        h = b_of("P_1+P_5")
        with pytest.raises(PreconditionViolated):
            p1p5_reduction(h.graph, h.labelling)

    def test_random_instances(self):
        rng = random.Random(5)
        done = 0
        while done < 60:
            g, l = random_p1p5_instance(rng, 12)
            if avoids(g, l, b_of("P_1+P_5")):
                done += 1
                out = p1p5_reduction(g, l)
                assert avoids(out.graph, out.labelling, b_of("P_1+2P_2"))


class TestWitnessFamily:
    def test_c4(self):
        g = unbounded_witness_family(cycle(4), "unlabelled", 2)
        assert are_isomorphic(g, subdivide(make_wall(2), 4)) and is_free(g, cycle(4))

    def test_k14(self):
        g = unbounded_witness_family(star(4), "unlabelled", 3)
        assert g.max_degree() == 3

    def test_claw_weak(self):
        wall = make_wall(2)
        g = unbounded_witness_family(b_of("K_{1,3}"), "weak", 2)
        assert g == subdivide(wall, 1)
        assert avoids(g, subdivision_white_labelling(wall), b_of("K_{1,3}"))

    def test_claw_opposite_weak(self):
        g = unbounded_witness_family(opposite(b_of("K_{1,3}")), "weak", 2)
        assert is_weakly_free(g, opposite(b_of("K_{1,3}")))

    def test_bounded_rejected(self):
        with pytest.raises(PreconditionViolated):
            unbounded_witness_family(from_name("S_{1,2,3}"), "unlabelled", 2)

    def test_unsupported(self):
        with pytest.raises(UnsupportedCase):
            unbounded_witness_family(from_name("2P_3"), "unlabelled", 2)

    def test_strong_outside_s(self):
        h = lab(cycle(4), {0, 2})
        g = unbounded_witness_family(h, "strong", 2)
        assert not in_class_s(h.graph) and g.n > 0
