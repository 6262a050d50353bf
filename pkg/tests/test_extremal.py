import pytest

from ntdom.extremal import is_subdivided_star, spanning_trees
from ntdom.graph import Graph, canonical_tree_code, is_tree
from ntdom.named import b_graphs, cycle, path, star, subdivided_star


def test_small_subdivided_stars():
    assert is_subdivided_star(path(3)) == (True, 0)
    assert is_subdivided_star(path(5)) == (True, 2)


def test_p3_link_is_lowest_leaf_under_relabeling():
    G = Graph.from_edges(3, [(0, 1), (0, 2)])
    assert is_subdivided_star(G) == (True, 1)


def test_nine_vertex_star():
    assert is_subdivided_star(subdivided_star(4)) == (True, 0)


@pytest.mark.parametrize(
    "G, expected",
    [(path(4), False), (path(7), False), (star(3), False), (star(4), False), (cycle(5), False), (path(1), False), (subdivided_star(3), True)],
)
def test_examples(G, expected):
    assert is_subdivided_star(G)[0] is expected


def test_one_per_odd_order():
    from ntdom.enumerate import enumerate_trees

    for n in range(3, 14, 2):
        assert sum(is_subdivided_star(T)[0] for T in enumerate_trees(n)) == 1


def test_spanning_trees_of_cycles():
    assert len(list(spanning_trees(cycle(4)))) == 1
    assert len(list(spanning_trees(cycle(8)))) == 1
    assert len(list(spanning_trees(cycle(5), distinct=False))) == 5


def test_spanning_trees_of_a_tree_is_itself():
    trees = list(spanning_trees(star(3)))
    assert len(trees) == 1 and canonical_tree_code(trees[0]) == canonical_tree_code(star(3))


def test_spanning_trees_of_b_graphs():
    for G in b_graphs():
        trees = list(spanning_trees(G))
        assert trees and all(is_tree(T) for T in trees)
        assert len({canonical_tree_code(T) for T in trees}) == len(trees)
    k4 = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert len(list(spanning_trees(k4, distinct=False))) == 16  # Cayley


def test_spanning_tree_errors():
    with pytest.raises(ValueError):
        list(spanning_trees(Graph(2, (0, 0))))
    with pytest.raises(ValueError):
        list(spanning_trees(cycle(13)))
