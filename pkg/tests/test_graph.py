from itertools import combinations

import pytest
from hypothesis import given, settings

from bipfree.constructions import from_name, make_subdivided_claw, path, star
from bipfree.enumeration import all_graphs, bipartite_graphs as atlas_bipartite
from bipfree.errors import AmbiguousB, InvalidGraph, InvalidLabelling, NotBipartite
from bipfree.graph import (
    BWLabelling,
    Graph,
    LabelledBipartiteGraph,
    are_isomorphic,
    are_labelled_isomorphic,
    b_labelled,
    canonical_b_labelling,
    enumerate_labellings,
    find_induced_embedding,
    find_labelled_embedding,
    is_bipartite,
    is_induced_embedding,
    is_labelled_embedding,
    labellings_equivalent,
    nonequivalent_labellings,
    opposite,
)

import brute
from conftest import bipartite_graphs, graphs


def lab(g, black):
    return LabelledBipartiteGraph.from_black(g, black)


# S_{1,2,2}: colour classes {1,4,5} and {0,2,3} with no automorphism swapping them;
# first hit of scripts/find_ambiguous_b.py over the atlas
AMBIGUOUS_B = Graph(6, frozenset({(0, 1), (1, 2), (1, 3), (2, 4), (3, 5)}))


class TestBasics:
    def test_edges_normalised(self):
        assert Graph(3, frozenset({(2, 0)})).edges == {(0, 2)}

    @pytest.mark.parametrize("n,edges", [(-1, []), (2, [(0, 0)]), (2, [(0, 2)])])
    def test_invalid_graph(self, n, edges):
        with pytest.raises(InvalidGraph):
            Graph(n, frozenset(edges))

    def test_labelling_out_of_range(self):
        with pytest.raises(InvalidLabelling):
            BWLabelling(2, frozenset({3}))

    def test_invalid_labelling_for_graph(self):
        with pytest.raises(InvalidLabelling):
            lab(path(2), {0, 1})

    def test_components_ordered(self):
        g = Graph(5, frozenset({(3, 4), (0, 2)}))
        assert g.components() == [[0, 2], [1], [3, 4]]

    def test_induced_reindexes(self):
        g = path(4).induced([1, 2, 3])
        assert g.edges == {(0, 1), (1, 2)}


class TestBipartite:
    def test_triangle(self):
        assert is_bipartite(from_name("K_3")) is None

    def test_p4(self):
        l = is_bipartite(path(4))
        assert l.black == {0, 2} and l.white == {1, 3}

    def test_claw(self):
        l = is_bipartite(star(3))
        assert l.black == {0} and l.white == {1, 2, 3}

    @given(graphs(max_n=8))
    def test_agrees_with_subset_search(self, g):
        assert (is_bipartite(g) is None) == (not brute.labellings(g))


class TestEnumerateLabellings:
    def test_2p1(self):
        labs = enumerate_labellings(from_name("2P_1"))
        assert len(labs) == 4
        g = from_name("2P_1")
        classes = []
        for l in labs:
            h = LabelledBipartiteGraph(g, l)
            if not any(are_labelled_isomorphic(h, c) for c in classes):
                classes.append(h)
        assert len(classes) == 3

    def test_p3(self):
        assert len(enumerate_labellings(path(3))) == 2

    def test_2p2(self):
        assert len(enumerate_labellings(from_name("2P_2"))) == 4

    def test_empty_graph(self):
        assert enumerate_labellings(Graph(0)) == [BWLabelling(0, frozenset())]

    def test_not_bipartite(self):
        with pytest.raises(NotBipartite):
            enumerate_labellings(from_name("C_5"))

    def test_binary_counter_order(self):
        g = from_name("2P_1")
        assert [sorted(l.black) for l in enumerate_labellings(g)] == [[0, 1], [1], [0], []]

    @given(bipartite_graphs(max_n=8))
    def test_exactly_all_labellings(self, g):
        labs = enumerate_labellings(g)
        assert len(labs) == 2 ** len(g.components())
        assert {l.black for l in labs} == set(brute.labellings(g))


class TestEmbedding:
    def test_observation_instance(self):
        g = make_subdivided_claw(1, 1, 3)
        h = from_name("K_{1,3}+P_1")
        emb = find_induced_embedding(h, g)
        assert emb is not None and is_induced_embedding(h, g, emb)

    def test_pattern_larger(self):
        assert find_induced_embedding(path(5), path(4)) is None

    def test_2p2_in_c6(self):
        assert find_induced_embedding(from_name("2P_2"), from_name("C_6")) is not None

    def test_lexicographically_least(self):
        assert find_induced_embedding(path(2), path(4)) == (0, 1)
        assert find_induced_embedding(from_name("2P_1"), path(4)) == (0, 2)

    def test_observation_labelled_none(self):
        # K_{1,3}+P_1 with x1 centre, x5 isolated; blacks x2,x3,x4
        h = lab(from_name("K_{1,3}+P_1"), {1, 2, 3})
        g = lab(make_subdivided_claw(1, 1, 3), {0, 4})
        assert find_labelled_embedding(h, g) is None

    def test_identity_on_sp1(self):
        h = lab(from_name("4P_1"), range(4))
        assert find_labelled_embedding(h, h) == (0, 1, 2, 3)

    def test_2p1p3_into_k13_3p1(self):
        h = b_labelled(from_name("2P_1+P_3"))
        g = b_labelled(from_name("K_{1,3}+3P_1"))
        emb = find_labelled_embedding(h, g)
        assert emb is not None and is_labelled_embedding(h, g, emb)

    def test_exhaustive_against_injections(self):
        # every pattern up to 4 vertices against every host up to 6
        hosts = all_graphs(6)
        for h in all_graphs(4):
            for g in hosts[::3]:
                assert (find_induced_embedding(h, g) is not None) == brute.contains(h, g)

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=1, max_n=5), graphs(max_n=8))
    def test_matches_brute_force(self, h, g):
        emb = find_induced_embedding(h, g)
        assert (emb is not None) == brute.contains(h, g)
        if emb is not None:
            assert brute.is_embedding(h, g, emb)

    @settings(max_examples=100, deadline=None)
    @given(bipartite_graphs(min_n=1, max_n=5), bipartite_graphs(max_n=7))
    def test_labelled_implies_unlabelled(self, h, g):
        for lh in enumerate_labellings(h)[:2]:
            for lg in enumerate_labellings(g)[:4]:
                hl, gl = LabelledBipartiteGraph(h, lh), LabelledBipartiteGraph(g, lg)
                emb = find_labelled_embedding(hl, gl)
                assert (emb is not None) == brute.contains(h, g, lh.black, lg.black)
                if emb is not None:
                    assert find_induced_embedding(h, g) is not None


class TestIsomorphism:
    def test_two_black_singletons(self):
        g = from_name("2P_1")
        assert are_labelled_isomorphic(lab(g, {0, 1}), lab(g, {0, 1}))

    def test_black_vs_white(self):
        g = from_name("2P_1")
        assert not are_labelled_isomorphic(lab(g, {0, 1}), lab(g, set()))

    def test_mixed_vs_black(self):
        g = from_name("2P_1")
        assert not are_labelled_isomorphic(lab(g, {0}), lab(g, {0, 1}))

    def test_unlabelled(self):
        assert are_isomorphic(make_subdivided_claw(1, 1, 1), star(3))
        assert not are_isomorphic(path(4), star(3))

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=6), graphs(max_n=6))
    def test_matches_brute_force(self, g1, g2):
        assert are_isomorphic(g1, g2) == brute.isomorphic(g1, g2)

    @settings(max_examples=80, deadline=None)
    @given(bipartite_graphs(max_n=6), bipartite_graphs(max_n=6))
    def test_iso_iff_mutual_containment(self, g1, g2):
        for l1 in enumerate_labellings(g1)[:2]:
            for l2 in enumerate_labellings(g2)[:2]:
                h1, h2 = LabelledBipartiteGraph(g1, l1), LabelledBipartiteGraph(g2, l2)
                mutual = (find_labelled_embedding(h1, h2) is not None
                          and find_labelled_embedding(h2, h1) is not None)
                assert are_labelled_isomorphic(h1, h2) == mutual


class TestOpposite:
    def test_sp1(self):
        h = lab(from_name("3P_1"), range(3))
        assert opposite(h).black == frozenset()

    def test_involution(self):
        h = b_labelled(from_name("2P_1+P_3"))
        assert opposite(opposite(h)) == h

    def test_claw(self):
        h = lab(star(3), {1, 2, 3})
        assert opposite(h).black == {0}


class TestBLabelling:
    def test_k13_3p1(self):
        l = canonical_b_labelling(from_name("K_{1,3}+3P_1"))
        assert len(l.black) == 6 and l.white == {0}

    def test_p1p5(self):
        l = canonical_b_labelling(from_name("P_1+P_5"))
        assert (len(l.black), len(l.white)) == (4, 2)

    @pytest.mark.parametrize("name,black", [
        ("K_{1,3}+3P_1", {1, 2, 3, 4, 5, 6}),
        ("K_{1,3}+P_2", {1, 2, 3, 4}),
        ("P_1+S_{1,1,3}", {0, 2, 3, 4, 6}),
        ("S_{1,2,3}", {1, 2, 4, 6}),
        ("2P_1+P_3", {0, 1, 2, 4}),
        ("P_1+P_5", {0, 1, 3, 5}),
        ("P_2+P_4", {0, 2, 4}),
        ("P_6", {0, 2, 4}),
        ("P_1+2P_2", {0, 1, 3}),
    ])
    def test_case_graphs_pinned(self, name, black):
        assert canonical_b_labelling(from_name(name)).black == black

    def test_ambiguous_pinned(self):
        with pytest.raises(AmbiguousB):
            canonical_b_labelling(AMBIGUOUS_B)

    def test_ambiguous_is_smallest(self):
        for g in atlas_bipartite(6):
            if g.is_connected() and (g.n < 6 or len(g.edges) < 5):
                canonical_b_labelling(g)

    def test_rejects_empty(self):
        with pytest.raises(InvalidGraph):
            canonical_b_labelling(Graph(0))

    def test_rejects_non_bipartite(self):
        with pytest.raises(NotBipartite):
            canonical_b_labelling(from_name("C_3"))

    @given(bipartite_graphs(min_n=1, max_n=7))
    def test_maximises_black(self, g):
        try:
            l = canonical_b_labelling(g)
        except AmbiguousB:
            return
        assert len(l.black) == max(len(b) for b in brute.labellings(g))


class TestEquivalence:
    def test_p2(self):
        a, b = enumerate_labellings(path(2))
        assert labellings_equivalent(path(2), a, b)

    def test_3p2(self):
        g = from_name("3P_2")
        alt = BWLabelling(6, frozenset({0, 2, 4}))
        assert all(labellings_equivalent(g, alt, l) for l in enumerate_labellings(g))

    def test_2p1(self):
        g = from_name("2P_1")
        assert not labellings_equivalent(g, BWLabelling(2, frozenset({0, 1})), BWLabelling(2, frozenset({0})))

    @pytest.mark.parametrize("name,count", [
        ("2P_1+P_4", 2), ("4P_1+P_2", 3), ("P_2+P_4", 1),
        ("2P_1+2P_2", 2), ("3P_2", 1), ("2P_1", 2),
    ])
    def test_class_counts(self, name, count):
        assert len(nonequivalent_labellings(from_name(name))) == count

    def test_equivalence_relation_exhaustive(self):
        for g in atlas_bipartite(6):
            labs = enumerate_labellings(g)
            if len(labs) > 16:
                labs = labs[:16]
            rel = {(a, b): labellings_equivalent(g, a, b) for a in labs for b in labs}
            assert all(rel[a, a] for a in labs)
            assert all(rel[a, b] == rel[b, a] for a, b in combinations(labs, 2))
            for a in labs:
                for b in labs:
                    for c in labs:
                        if rel[a, b] and rel[b, c]:
                            assert rel[a, c]

    def test_representatives_cover(self):
        for g in atlas_bipartite(5):
            reps = nonequivalent_labellings(g)
            for l in enumerate_labellings(g):
                assert sum(labellings_equivalent(g, l, r) for r in reps) == 1
