"""Set checkers and exact solvers for γ, γt and γnt."""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    VertexSet,
    bfs_order,
    closed_neighborhood,
    has_isolated_vertex,
    induced_subgraph,
    is_connected,
    is_tree,
    isolated_in,
    lowest,
    members,
    open_neighborhood,
    popcount,
    vset,
)


class ParamKind(enum.Enum):
    DOMINATION = "gamma"
    TOTAL_DOMINATION = "gamma-t"
    NTD = "gamma-nt"


class Method(enum.Enum):
    BRUTE_FORCE = "bruteforce"
    BRANCH_AND_BOUND = "bnb"
    TREE_DP = "treedp"


@dataclass(frozen=True)
class SolveResult:
    kind: ParamKind
    value: int
    witness: VertexSet
    method: Method
    nodes_explored: int
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "param": self.kind.value,
            "value": self.value,
            "witness": members(self.witness),
            "method": self.method.value,
            "nodes": self.nodes_explored,
            "seconds": round(self.elapsed, 6),
        }


class SolverError(Exception):
    pass


class PreconditionError(SolverError, ValueError):
    """The input graph violates a solver precondition."""


class Unsatisfiable(SolverError):
    """No set of the requested kind exists (e.g. γnt of ``K1``)."""


class SearchBudgetExceeded(SolverError):
    """Branch-and-bound ran out of time; ``lower <= optimum <= upper``."""

    def __init__(self, lower: int, upper: int, nodes: int):
        super().__init__(f"budget exhausted with {lower} <= optimum <= {upper} after {nodes} nodes")
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


def is_dominating_set(G: Graph, S: VertexSet) -> bool:
    return closed_neighborhood(G, S) == G.full


def is_total_dominating_set(G: Graph, S: VertexSet) -> bool:
    return open_neighborhood(G, S) == G.full


def is_ntd_set(G: Graph, S: VertexSet) -> bool:
    """Dominating, and the subgraph induced by ``N(S)`` has no isolated vertex."""
    if closed_neighborhood(G, S) != G.full:
        return False
    return not has_isolated_vertex(induced_subgraph(G, open_neighborhood(G, S)))


def _fast_ntd(G: Graph, S: VertexSet) -> bool:
    nbhd = open_neighborhood(G, S)
    return (nbhd | S) == G.full and not isolated_in(G, nbhd)


CHECKERS = {
    ParamKind.DOMINATION: is_dominating_set,
    ParamKind.TOTAL_DOMINATION: is_total_dominating_set,
    ParamKind.NTD: is_ntd_set,
}


def _check_preconditions(G: Graph, kind: ParamKind) -> None:
    if G.n == 0:
        raise PreconditionError("empty graph")
    if not is_connected(G):
        raise PreconditionError("graph is not connected")
    if G.n == 1 and kind is not ParamKind.DOMINATION:
        raise Unsatisfiable(f"{kind.value} is undefined for K1")


def brute_force(G: Graph, kind: ParamKind) -> tuple[int, VertexSet, int]:
    """Smallest set by ascending-size subset enumeration: ``(value, witness, sets tried)``."""
    fast = {
        ParamKind.DOMINATION: is_dominating_set,
        ParamKind.TOTAL_DOMINATION: is_total_dominating_set,
        ParamKind.NTD: _fast_ntd,
    }[kind]
    tried = 0
    for k in range(G.n + 1):
        for combo in combinations(range(G.n), k):
            tried += 1
            S = vset(combo)
            if fast(G, S):
                return k, S, tried
    raise Unsatisfiable(f"no {kind.value} set exists")


def _greedy_upper(G: Graph, kind: ParamKind) -> VertexSet:
    full = G.full
    S = 0
    if kind is ParamKind.TOTAL_DOMINATION:
        need = lambda: full & ~open_neighborhood(G, S)  # noqa: E731
        gain = lambda v, todo: popcount(G.adj[v] & todo)  # noqa: E731
    else:
        need = lambda: full & ~closed_neighborhood(G, S)  # noqa: E731
        gain = lambda v, todo: popcount((G.adj[v] | 1 << v) & todo)  # noqa: E731
    todo = need()
    while todo:
        best = max(range(G.n), key=lambda v: (gain(v, todo), -v))
        S |= 1 << best
        todo = need()
    if kind is ParamKind.NTD:
        while True:
            iso = isolated_in(G, open_neighborhood(G, S))
            if not iso:
                break
            # an isolate of G[N(S)] is never in S, so this always grows S
            S |= 1 << lowest(iso)
        if not _fast_ntd(G, S):
            S = full
    return S


class _Search:
    """Ascending-cardinality depth-first search over sets built by covering the lowest unsatisfied vertex."""

    def __init__(self, G: Graph, kind: ParamKind, deadline: float | None):
        self.G = G
        self.kind = kind
        self.deadline = deadline
        self.nodes = 0
        self.delta = G.max_degree()
        self.closed = tuple(G.adj[v] | 1 << v for v in range(G.n))
        self.second = tuple(open_neighborhood(G, G.adj[v]) for v in range(G.n))

    def _packing(self, todo: VertexSet, balls: tuple[int, ...]) -> int:
        # unsatisfied vertices with pairwise disjoint candidate sets need distinct choices
        used = 0
        count = 0
        while todo:
            v = lowest(todo)
            todo &= todo - 1
            if not balls[v] & used:
                used |= balls[v]
                count += 1
        return count

    def bound(self, S: VertexSet) -> tuple[int, VertexSet, tuple[int, ...]]:
        """``(extra vertices needed at least, unsatisfied set, candidate rows)``."""
        G = self.G
        if self.kind is ParamKind.TOTAL_DOMINATION:
            todo = G.full & ~open_neighborhood(G, S)
            if not todo:
                return 0, 0, G.adj
            ratio = -(-popcount(todo) // max(self.delta, 1))
            return max(ratio, self._packing(todo, G.adj)), todo, G.adj
        nbhd = open_neighborhood(G, S)
        todo = G.full & ~(nbhd | S)
        if todo:
            ratio = -(-popcount(todo) // (self.delta + 1))
            return max(ratio, self._packing(todo, self.closed)), todo, self.closed
        if self.kind is ParamKind.DOMINATION:
            return 0, 0, self.closed
        iso = isolated_in(G, nbhd)
        if not iso:
            return 0, 0, self.second
        # every isolate needs a new vertex within distance two of it
        return self._packing(iso, self.second), iso, self.second

    def run(self, limit: int) -> VertexSet | None:
        self.seen: set[int] = set()
        return self._dfs(0, 0, limit)

    def _dfs(self, S: VertexSet, size: int, limit: int) -> VertexSet | None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise TimeoutError
        extra, todo, rows = self.bound(S)
        if not todo:
            return S
        if size + extra > limit or S in self.seen:
            return None
        self.seen.add(S)
        branch = rows[lowest(todo)] & ~S
        while branch:
            w = lowest(branch)
            branch &= branch - 1
            found = self._dfs(S | 1 << w, size + 1, limit)
            if found is not None:
                return found
        return None


def branch_and_bound(G: Graph, kind: ParamKind, budget: float | None = None) -> tuple[int, VertexSet, int]:
    """Exact optimum ``(value, witness, nodes)`` on a connected graph."""
    # relabel by BFS from a max-degree vertex so "lowest index" follows the BFS layering
    start = max(range(G.n), key=lambda v: (G.degree(v), -v))
    order = [v for v, _ in bfs_order(G, start)]
    rank = {v: i for i, v in enumerate(order)}
    H = G.relabel([rank[v] for v in range(G.n)])

    upper = _greedy_upper(H, kind)
    best = popcount(upper)
    deadline = None if budget is None else time.monotonic() + budget
    search = _Search(H, kind, deadline)
    lower = search.bound(0)[0]
    nodes = 0
    try:
        for k in range(lower, best):
            found = search.run(k)
            if found is not None:
                upper, best = found, popcount(found)
                break
            lower = k + 1
    except TimeoutError:
        raise SearchBudgetExceeded(lower, best, search.nodes) from None
    nodes = search.nodes
    return best, vset(order[v] for v in members(upper)), nodes


def solve_exact(
    G: Graph,
    kind: ParamKind,
    method: Method = Method.BRANCH_AND_BOUND,
    budget: float | None = None,
) -> SolveResult:
    """Minimum cardinality of a set of the given kind, with an optimal witness.

    Raises :class:`PreconditionError` for empty or disconnected input,
    :class:`Unsatisfiable` for γt/γnt of ``K1`` and
    :class:`SearchBudgetExceeded` when ``budget`` seconds run out.
    """
    _check_preconditions(G, kind)
    t0 = time.perf_counter()
    if method is Method.BRUTE_FORCE:
        value, witness, nodes = brute_force(G, kind)
    elif method is Method.BRANCH_AND_BOUND:
        value, witness, nodes = branch_and_bound(G, kind, budget)
    elif method is Method.TREE_DP:
        if kind is not ParamKind.NTD:
            raise PreconditionError("the tree dynamic program only computes γnt")
        from .treedp import ntd_number_tree_dp

        return ntd_number_tree_dp(G)
    else:
        raise ValueError(f"unknown method {method!r}")
    return SolveResult(kind, value, witness, method, nodes, time.perf_counter() - t0)


def ntd_number(G: Graph, method: Method | None = None) -> int:
    """γnt, using the tree DP on trees unless told otherwise."""
    if method is None:
        method = Method.TREE_DP if is_tree(G) and G.n >= 2 else Method.BRANCH_AND_BOUND
    return solve_exact(G, ParamKind.NTD, method).value


def chain_values(G: Graph, method: Method = Method.BRANCH_AND_BOUND) -> tuple[int, int, int]:
    """``(γ, γnt, γt)`` solved exactly."""
    return tuple(solve_exact(G, k, method).value for k in (ParamKind.DOMINATION, ParamKind.NTD, ParamKind.TOTAL_DOMINATION))


def check_chain(G: Graph, method: Method = Method.BRANCH_AND_BOUND) -> bool:
    gamma, gamma_nt, gamma_t = chain_values(G, method)
    return gamma <= gamma_nt <= gamma_t


def check_half_bound(G: Graph, method: Method | None = None) -> bool:
    if G.n < 3:
        raise PreconditionError("the half bound needs order at least 3")
    return 2 * ntd_number(G, method) <= G.n + 1
