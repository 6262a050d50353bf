"""Small named graphs: paths, cycles, stars and the fixed exceptional graphs."""
from __future__ import annotations

import json
from importlib import resources

from .edgelist import parse_edge_list
from .family import TCertificate
from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def double_star(a: int, b: int) -> Graph:
    """Adjacent centers 0 and 1 carrying ``a`` and ``b`` leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(2 + a + b, edges)


def subdivided_star(rays: int) -> Graph:
    """``K_{1,rays}`` with every edge subdivided once; center 0, ray ``i`` is ``2i-1, 2i``."""
    edges = []
    for i in range(1, rays + 1):
        edges += [(0, 2 * i - 1), (2 * i - 1, 2 * i)]
    return Graph.from_edges(2 * rays + 1, edges)


def c5() -> Graph:
    return cycle(5)


def b_graphs() -> list[Graph]:
    """``[B1, ..., B5]``: the connected graphs with minimum degree 2 and ``γnt = n/2``."""
    b1 = cycle(4)
    # t, a, b, c, d, e = 0..5: the 5-cycle t-a-b-c-d plus e joined to a and d
    b2 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (5, 4)])
    octagon = [(i, (i + 1) % 8) for i in range(8)]
    b3 = Graph.from_edges(8, octagon)
    b4 = Graph.from_edges(8, octagon + [(0, 4)])
    b5 = Graph.from_edges(8, octagon + [(0, 4), (1, 5)])
    return [b1, b2, b3, b4, b5]


def example_member() -> Graph:
    """The 36-vertex example member of the extremal tree family."""
    text = resources.files("ntdom.data").joinpath("example36.edges").read_text()
    return parse_edge_list(text)


def example_member_certificate() -> TCertificate:
    """Hand-read decomposition of :func:`example_member`: underlying tree on the top row."""
    text = resources.files("ntdom.data").joinpath("example36.cert.json").read_text()
    return TCertificate.from_json(json.loads(text))
