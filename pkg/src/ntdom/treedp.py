"""Linear-time γnt for trees.

The tree is rooted at vertex 0 and each subtree is summarised by the state
of its root ``v`` with respect to the chosen set ``S``:

``in_s``
    ``v`` is in ``S``.
``child_in_s``
    some child of ``v`` is in ``S`` (so ``v`` is in ``N(S)`` whatever its parent does).
``child_in_n``
    some child of ``v`` is in ``N(S)``, which gives ``v`` a neighbor inside ``N(S)``.
``needs_n``
    a child that lies in ``N(S)`` has no neighbor in ``N(S)`` among its own
    children, so ``v`` itself must end up in ``N(S)``.

A child's constraints are settled when it is merged into its parent, the only
time its last neighbor becomes known.
"""
from __future__ import annotations

import time

from .graph import Graph, bfs_order, is_tree, vset
from .solvers import Method, ParamKind, PreconditionError, SolveResult

State = tuple[bool, bool, bool, bool]


def _merge(v_state: State, w_state: State) -> State | None:
    in_s, child_in_s, child_in_n, needs_n = v_state
    w_in_s, w_child_in_s, w_child_in_n, w_needs_n = w_state
    if not (w_in_s or w_child_in_s or in_s):
        return None  # w undominated
    w_in_n = w_child_in_s or in_s
    if w_needs_n and not w_in_n:
        return None
    return (
        in_s,
        child_in_s or w_in_s,
        child_in_n or w_in_n,
        needs_n or (w_in_n and not w_child_in_n),
    )


def _root_ok(state: State) -> bool:
    in_s, child_in_s, child_in_n, needs_n = state
    if not (in_s or child_in_s):
        return False
    if needs_n and not child_in_s:
        return False
    # the root is in N(S) exactly when a child is in S
    return not (child_in_s and not child_in_n)


def ntd_number_tree_dp(T: Graph) -> SolveResult:
    if not is_tree(T):
        raise PreconditionError("input is not a tree")
    if T.n < 2:
        raise PreconditionError("γnt needs order at least 2")
    t0 = time.perf_counter()
    order = list(bfs_order(T, 0))
    children: dict[int, list[int]] = {v: [] for v, _ in order}
    for v, p in order[1:]:
        children[p].append(v)

    # table[v][state] = (cost, ((child, child_state), ...))
    table: dict[int, dict[State, tuple[int, tuple]]] = {}
    work = 0
    for v, _ in reversed(order):
        partial = {
            (False, False, False, False): (0, ()),
            (True, False, False, False): (1, ()),
        }
        for w in children[v]:
            merged: dict[State, tuple[int, tuple]] = {}
            for v_state, (cost, picks) in partial.items():
                for w_state, (w_cost, _) in table[w].items():
                    work += 1
                    key = _merge(v_state, w_state)
                    if key is None:
                        continue
                    total = cost + w_cost
                    if key not in merged or total < merged[key][0]:
                        merged[key] = (total, picks + ((w, w_state),))
            partial = merged
        table[v] = partial

    root_options = [(cost, state) for state, (cost, _) in table[0].items() if _root_ok(state)]
    value, state = min(root_options)

    chosen = []
    stack = [(0, state)]
    while stack:
        v, st = stack.pop()
        if st[0]:
            chosen.append(v)
        stack.extend(table[v][st][1])
    witness = vset(chosen)
    return SolveResult(ParamKind.NTD, value, witness, Method.TREE_DP, work, time.perf_counter() - t0)
