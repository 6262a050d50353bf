"""Subdivided stars and spanning trees of small graphs."""
from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graph import Graph, canonical_tree_code, is_connected, is_tree, members


def is_subdivided_star(T: Graph) -> tuple[bool, int | None]:
    """Whether ``T`` is ``K_{1,t}`` with every edge subdivided once, and its link vertex.

    The link vertex is the star's center; for ``P3`` it is the lower-labeled leaf.
    """
    if not is_tree(T) or T.n < 3 or T.n % 2 == 0:
        return False, None
    rays = (T.n - 1) // 2
    if T.n == 3:
        return True, min(v for v in range(3) if T.degree(v) == 1)
    for c in range(T.n):
        if T.degree(c) != rays:
            continue
        if all(T.degree(u) == 2 for u in members(T.adj[c])):
            # each neighbor's other neighbor must be a leaf
            if all(T.degree(w) == 1 for u in members(T.adj[c]) for w in members(T.adj[u]) if w != c):
                return True, c
    return False, None


def spanning_trees(G: Graph, distinct: bool = True) -> Iterator[Graph]:
    """Spanning trees of ``G`` by edge-subset enumeration.

    With ``distinct`` only the first tree of each isomorphism class is yielded.
    """
    if G.n == 0 or not is_connected(G):
        raise ValueError("spanning trees need a non-empty connected graph")
    if G.n > 12:
        raise ValueError("edge-subset enumeration is limited to 12 vertices")
    seen: set[bytes] = set()
    for subset in combinations(G.edges(), G.n - 1):
        T = Graph.from_edges(G.n, subset)
        if not is_connected(T):
            continue
        if distinct:
            code = canonical_tree_code(T)
            if code in seen:
                continue
            seen.add(code)
        yield T
