"""Free trees up to isomorphism, plus an independent Prüfer-sequence count.

Free trees are assembled from rooted trees around their center: a
unicentral tree of radius ``r`` is a root carrying a multiset of rooted
subtrees of height at most ``r - 1``, at least two of them reaching it; a
bicentral tree is an unordered pair of rooted trees of equal height joined
at their roots. Listing multisets in non-increasing order of a fixed total
order on rooted trees yields each tree exactly once.
"""
from __future__ import annotations

import heapq
from collections import deque
from itertools import combinations_with_replacement, product
from typing import Iterator

from .graph import Graph, canonical_tree_code

MAX_ENUM_ORDER = 20
ORACLE_RANGE = (2, 14)


class _RootedPool:
    """All rooted trees up to a given size; tree ``i`` is a tuple of child indices."""

    def __init__(self) -> None:
        self.children: list[tuple[int, ...]] = [()]
        self.size = [1]
        self.height = [0]
        self.first_of_size = [0, 0, 1]  # trees of size s live in [first_of_size[s], first_of_size[s+1])
        self.max_size = 1

    def extend(self, size: int) -> None:
        while self.max_size < size:
            s = self.max_size + 1
            for forest in self._forests(s - 1, len(self.children) - 1):
                self.children.append(forest)
                self.size.append(s)
                self.height.append(1 + max(self.height[c] for c in forest))
            self.first_of_size.append(len(self.children))
            self.max_size = s

    def _forests(self, k: int, cap: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for s in range(min(k, self.size[cap]), 0, -1):
            top = cap if self.size[cap] == s else self.first_of_size[s + 1] - 1
            for idx in range(top, self.first_of_size[s] - 1, -1):
                for rest in self._forests(k - s, idx):
                    yield (idx,) + rest


_POOL = _RootedPool()


def _multisets(items: list[int], sizes: list[int], k: int, start: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing (by position in ``items``) selections with total size ``k``."""
    if k == 0:
        yield ()
        return
    for pos in range(start, -1, -1):
        s = sizes[items[pos]]
        if s <= k:
            for rest in _multisets(items, sizes, k - s, pos):
                yield (items[pos],) + rest


def _to_graph(n: int, root_children: list[int], pool: _RootedPool) -> Graph:
    # BFS labeling from the root; the root's subtrees are given explicitly
    edges = []
    queue = deque()
    label = 1
    for c in root_children:
        edges.append((0, label))
        queue.append((label, c))
        label += 1
    while queue:
        v, t = queue.popleft()
        for c in pool.children[t]:
            edges.append((v, label))
            queue.append((label, c))
            label += 1
    assert label == n
    return Graph.from_edges(n, edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Every free tree of order ``n`` exactly once, labeled in BFS order from its center."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_ENUM_ORDER}, got {n}")
    if n == 1:
        yield Graph(1, (0,))
        return
    pool = _POOL
    pool.extend(n - 1)
    sizes = pool.size
    # order rooted trees by (height, index); multisets list the tallest first
    ranked = sorted(range(pool.first_of_size[n]), key=lambda i: (pool.height[i], i))

    max_radius = n // 2
    for r in range(1, max_radius + 1):
        items = [i for i in ranked if pool.height[i] <= r - 1]
        tall = [p for p, i in enumerate(items) if pool.height[i] == r - 1]
        for p1 in reversed(tall):
            for p2 in reversed([p for p in tall if p <= p1]):
                k = n - 1 - sizes[items[p1]] - sizes[items[p2]]
                if k < 0:
                    continue
                for rest in _multisets(items, sizes, k, p2):
                    yield _to_graph(n, [items[p1], items[p2], *rest], pool)
        # bicentral trees of diameter 2r - 1: both halves have height r - 1
        halves = [p for p, i in enumerate(items) if pool.height[i] == r - 1]
        for pa in reversed(halves):
            for pb in reversed([p for p in halves if p <= pa]):
                a, b = items[pa], items[pb]
                if sizes[a] + sizes[b] == n:
                    yield _to_graph(n, [b, *pool.children[a]], pool)


def count_trees(n: int) -> int:
    return sum(1 for _ in enumerate_trees(n))


def prufer_decode(seq: tuple[int, ...] | list[int]) -> Graph:
    """Labeled tree on ``len(seq) + 2`` vertices with the given Prüfer sequence."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def prufer_oracle_codes(n: int, exhaustive: bool | None = None) -> set[bytes]:
    """Canonical codes of all labeled trees on ``n`` vertices.

    With ``exhaustive`` every one of the ``n**(n-2)`` sequences is decoded.
    Otherwise only non-decreasing sequences are decoded, which still reaches
    every isomorphism class: labeling a tree by reverse BFS order from any
    root makes each removed leaf's neighbor label non-decreasing. Defaults to
    exhaustive for ``n <= 7``.
    """
    lo, hi = ORACLE_RANGE
    if not lo <= n <= hi:
        raise ValueError(f"oracle order must be in {lo}..{hi}, got {n}")
    if exhaustive is None:
        exhaustive = n <= 7
    seqs = product(range(n), repeat=n - 2) if exhaustive else combinations_with_replacement(range(n), n - 2)
    return {canonical_tree_code(prufer_decode(s)) for s in seqs}


def prufer_oracle_count(n: int, exhaustive: bool | None = None) -> int:
    return len(prufer_oracle_codes(n, exhaustive))
