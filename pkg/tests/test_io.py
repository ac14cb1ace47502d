import pytest

from ptmaxcut.errors import BadHeader, IdOutOfRange, SelfLoop, SyntaxErrorInGraph, WeightOverflow
from ptmaxcut.generators import obs6_tree, odd_clique, random_graph, rule_gallery, ucf
from ptmaxcut.graph import WeightedGraph
from ptmaxcut.io import parse_graph, read_graph, serialize_graph, write_graph

K3_TEXT = "p edge 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n"


def test_parse_examples():
    assert parse_graph(K3_TEXT) == WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    G = parse_graph("p edge 2 2\ne 1 2 1\ne 1 2 2\n")
    assert G.edges() == [(0, 1, 3)]


def test_self_loop_reported_with_line():
    with pytest.raises(SelfLoop) as info:
        parse_graph("e 1 1 1\n")
    assert info.value.line == 1
    with pytest.raises(SelfLoop) as info:
        parse_graph("c hi\np edge 2 1\ne 2 2 4\n")
    assert info.value.line == 3 and info.value.vertex == 2


@pytest.mark.parametrize("text, exc, line", [
    ("e 1 2 1\n", BadHeader, 1),
    ("c only comments\n", BadHeader, None),
    ("p edge 3\n", BadHeader, 1),
    ("p edge 3 1\np edge 3 1\n", BadHeader, 2),
    ("p edge 2 2\ne 1 2 1\n", BadHeader, None),
    ("p edge 2 1\ne 1 2\n", SyntaxErrorInGraph, 2),
    ("p edge 2 1\ne 1 2 x\n", SyntaxErrorInGraph, 2),
    ("p edge 2 1\ne 1 2 0\n", SyntaxErrorInGraph, 2),
    ("p edge 2 1\ne 1 2 1.5\n", SyntaxErrorInGraph, 2),
    ("p edge 2 1\nq 1 2 1\n", SyntaxErrorInGraph, 2),
    ("p edge 2 1\ne 1 3 1\n", IdOutOfRange, 2),
    ("p edge 2 1\ne 0 1 1\n", IdOutOfRange, 2),
])
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_graph(text)
    assert info.value.line == line
    if line is not None:
        assert str(info.value).startswith(f"line {line}:")


def test_weight_cap():
    with pytest.raises(WeightOverflow):
        parse_graph(f"p edge 2 1\ne 1 2 {2**32 + 1}\n")


def test_serialize_format():
    assert serialize_graph(odd_clique(1)) == "p edge 3 3\ne 1 2 1\ne 1 3 1\ne 2 3 1\n"
    assert serialize_graph(WeightedGraph.from_edges(2, []), comment="empty") == "c empty\np edge 2 0\n"


def test_round_trip_on_corpus():
    corpus = [obs6_tree(i) for i in (1, 4, 8)] + [odd_clique(t) for t in (1, 2, 4)]
    corpus += [random_graph(n, m, 5, s) for n, m, s in ((2, 1, 0), (10, 20, 1), (50, 200, 2))]
    corpus += [ucf(b, 5, 4, s) for b, s in ((1, 0), (6, 1), (20, 2))]
    corpus += [rule_gallery(r, s) for r in range(1, 9) for s in range(3)]
    for G in corpus:
        H = parse_graph(serialize_graph(G))
        assert H == G
        assert serialize_graph(H) == serialize_graph(G)


def test_files(tmp_path):
    path = tmp_path / "g.graph"
    write_graph(obs6_tree(3), path, comment="tree")
    assert read_graph(path) == obs6_tree(3)
