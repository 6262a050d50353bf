import pytest
from hypothesis import given
from hypothesis import strategies as st

from ntdom.edgelist import (
    EdgeListError,
    parse_edge_list,
    parse_edge_list_documents,
    serialize_edge_list,
    serialize_edge_list_documents,
)
from ntdom.enumerate import enumerate_trees
from ntdom.graph import Graph
from ntdom.named import cycle, path


def test_parse_examples():
    assert parse_edge_list("4\n0 1\n1 2\n2 3") == path(4)
    assert parse_edge_list("4\n0 1\n1 2\n2 3\n3 0") == cycle(4)


def test_comments_and_blank_lines():
    assert parse_edge_list("# header\n3\n\n0 1\n# mid\n1 2\n") == path(3)


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("3\n0 1\n0 1", 3, "duplicate"),
        ("3\n0 1\n1 0", 3, "duplicate"),
        ("3\n1 1", 2, "self-loop"),
        ("3\n0 3", 2, "out of range"),
        ("3\n0 x", 2, "expected"),
        ("3\n0 1 2", 2, "expected"),
        ("three\n0 1", 1, "vertex count"),
        ("# only a comment\n", 1, "empty"),
    ],
)
def test_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(EdgeListError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)


def test_serialize_is_sorted_and_lf_terminated():
    G = Graph.from_edges(4, [(3, 2), (0, 1), (2, 0)])
    assert serialize_edge_list(G) == "4\n0 1\n0 2\n2 3\n"


def test_empty_and_single_vertex():
    assert serialize_edge_list(Graph(1, (0,))) == "1\n"
    assert parse_edge_list("0\n") == Graph(0, ())


@given(st.integers(1, 10).flatmap(lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=25).map(lambda es: (n, es))))
def test_round_trip_normalized(doc):
    n, raw = doc
    edges = sorted({(min(u, v), max(u, v)) for u, v in raw if u != v})
    text = "\n".join([str(n)] + [f"{u} {v}" for u, v in edges]) + "\n"
    assert serialize_edge_list(parse_edge_list(text)) == text


def test_documents_round_trip():
    trees = list(enumerate_trees(6))
    text = serialize_edge_list_documents(trees)
    assert text.count("\n\n") == len(trees) - 1
    assert parse_edge_list_documents(text) == trees


def test_documents_report_absolute_line():
    with pytest.raises(EdgeListError) as info:
        parse_edge_list_documents("2\n0 1\n\n2\n0 1\n0 1\n")
    assert info.value.lineno == 6
