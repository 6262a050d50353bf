"""Bitset graphs and the neighborhood algebra used by every other module.

Vertices are ``0..n-1``. A vertex set is a plain ``int`` whose bit ``v`` is
set when ``v`` is a member, so union is ``|``, intersection is ``&`` and the
empty set is ``0``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64
INF = float("inf")

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    """Pack an iterable of vertex indices into a bitset."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertex indices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def lowest(mask: VertexSet) -> int:
    """Index of the lowest set bit; ``mask`` must be non-zero."""
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the open neighborhood of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


def open_neighborhood(G: Graph, S: VertexSet) -> VertexSet:
    out = 0
    adj = G.adj
    while S:
        low = S & -S
        out |= adj[low.bit_length() - 1]
        S ^= low
    return out


def closed_neighborhood(G: Graph, S: VertexSet) -> VertexSet:
    return open_neighborhood(G, S) | S


def induced_subgraph(G: Graph, S: VertexSet) -> Graph:
    """``G[S]`` relabeled so the i-th smallest member of ``S`` becomes ``i``."""
    keep = members(S)
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(vset(index[u] for u in members(G.adj[v] & S)))
    return Graph(len(keep), tuple(rows))


def has_isolated_vertex(G: Graph) -> bool:
    return any(row == 0 for row in G.adj)


def isolated_in(G: Graph, S: VertexSet) -> VertexSet:
    """Members of ``S`` with no neighbor inside ``S`` (isolates of ``G[S]`` without relabeling)."""
    out = 0
    rest = S
    while rest:
        low = rest & -rest
        if not G.adj[low.bit_length() - 1] & S:
            out |= low
        rest ^= low
    return out


def distances_from(G: Graph, v: int) -> list[float]:
    """BFS distances from ``v``; unreachable vertices get ``INF``."""
    dist: list[float] = [INF] * G.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in members(G.adj[u]):
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_2_packing(G: Graph, S: VertexSet) -> bool:
    """True iff members of ``S`` are pairwise at distance at least 3."""
    # distance <= 2 between u and w  <=>  N[u] and N[w] intersect
    seen = 0
    for v in members(S):
        ball = G.adj[v] | 1 << v
        if ball & seen:
            return False
        seen |= ball
    return True


def leaves_and_supports(G: Graph) -> tuple[VertexSet, VertexSet]:
    leaves = vset(v for v in range(G.n) if G.degree(v) == 1)
    return leaves, open_neighborhood(G, leaves)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    reached = 1
    frontier = 1
    while frontier:
        frontier = open_neighborhood(G, frontier) & ~reached
        reached |= frontier
    return reached == G.full


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def bfs_order(G: Graph, root: int) -> Iterator[tuple[int, int]]:
    """Yield ``(vertex, parent)`` pairs in BFS order; the root's parent is -1."""
    seen = 1 << root
    queue = deque([(root, -1)])
    while queue:
        v, p = queue.popleft()
        yield v, p
        for w in members(G.adj[v] & ~seen):
            seen |= 1 << w
            queue.append((w, v))


def tree_centers(T: Graph) -> list[int]:
    """One or two central vertices of a tree, found by repeated leaf stripping."""
    if not is_tree(T):
        raise ValueError("input is not a tree")
    deg = [T.degree(v) for v in range(T.n)]
    remaining = T.n
    layer = [v for v in range(T.n) if deg[v] <= 1]
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in members(T.adj[v]):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(T: Graph, root: int) -> bytes:
    parent = {root: -1}
    order = []
    for v, p in bfs_order(T, root):
        parent[v] = p
        order.append(v)
    codes: dict[int, list[bytes]] = {v: [] for v in order}
    done: dict[int, bytes] = {}
    for v in reversed(order):
        done[v] = b"(" + b"".join(sorted(codes[v])) + b")"
        if parent[v] >= 0:
            codes[parent[v]].append(done[v])
    return done[root]


def canonical_tree_code(T: Graph) -> bytes:
    """Isomorphism-invariant code: sorted nested parentheses rooted at the center.

    Bicentral trees take the smaller of the two rooted codes.
    """
    return min(_rooted_code(T, c) for c in tree_centers(T))


def canonical_root(T: Graph) -> int:
    """The center whose rooted code equals :func:`canonical_tree_code`."""
    return min(tree_centers(T), key=lambda c: (_rooted_code(T, c), c))
