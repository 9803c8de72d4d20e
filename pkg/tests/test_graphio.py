import pytest
from hypothesis import given, strategies as st

from bipfree.constructions import path
from bipfree.errors import ParseError
from bipfree.graph import BWLabelling, Graph, enumerate_labellings
from bipfree.graphio import parse_graph, read_graph, serialize_graph, write_graph

from conftest import bipartite_graphs, graphs


def test_p2():
    assert parse_graph("n 2\ne 0 1") == (path(2), None)


def test_labelled():
    g, l = parse_graph("n 3\ne 0 1\nblack 0 2")
    assert g == Graph(3, frozenset({(0, 1)})) and l.black == {0, 2}


def test_comments_and_blank_lines():
    g, _ = parse_graph("# a path\n\nn 3\n  e 0 1\n# middle\ne 1 2\n")
    assert g == path(3)


def test_empty_black_line():
    _, l = parse_graph("n 2\nblack")
    assert l == BWLabelling(2, frozenset())


@pytest.mark.parametrize("text,line", [
    ("n 2\ne 0 0", 2),
    ("n 2\ne 0 2", 2),
    ("e 0 1\nn 2", 1),
    ("n 2\nn 3", 2),
    ("n 3\ne 0 1\ne 1 0", 3),
    ("n 2\ne 0 x", 2),
    ("n -1", 1),
    ("n 2\nedge 0 1", 2),
    ("n 3\ne 0 1\nblack 0 1", 3),
    ("n 3\nblack 0 0", 2),
    ("n 3\nblack 0\nblack 1", 3),
    ("# nothing", 0),
])
def test_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}: ")


def test_serialize_format():
    g = Graph(3, frozenset({(1, 2), (0, 1)}))
    assert serialize_graph(g, BWLabelling(3, frozenset({1}))) == "n 3\ne 0 1\ne 1 2\nblack 1\n"


@given(graphs(max_n=9))
def test_round_trip_unlabelled(g):
    assert parse_graph(serialize_graph(g)) == (g, None)


@given(bipartite_graphs(max_n=9), st.integers(0, 7))
def test_round_trip_labelled(g, i):
    labs = enumerate_labellings(g)
    l = labs[i % len(labs)]
    text = serialize_graph(g, l)
    assert parse_graph(text) == (g, l)
    assert serialize_graph(*parse_graph(text)) == text


def test_files(tmp_path):
    p = tmp_path / "g.txt"
    write_graph(p, path(4), BWLabelling(4, frozenset({0, 2})))
    assert read_graph(p) == (path(4), BWLabelling(4, frozenset({0, 2})))
