"""Exhaustive verification runs over enumerated trees and the fixed exceptional graphs.

Each run yields a :class:`VerificationReport` with one row per order (or per
named graph). A row's ``mismatches`` list holds canonical tree codes, so
reports do not depend on vertex labels; a row passes iff that list is empty.

Row counters by theorem:

========== ======================================= =====================================
theorem    ``extremal``                            ``accepted``
========== ======================================= =====================================
even       trees with γnt = n/2                    trees the family recognizer accepts
odd        trees with γnt = (n+1)/2                subdivided stars
half-bound trees with γnt = (n+1)/2                subdivided stars
chain      trees with γnt = γt                     trees with γ = γnt
bgraphs    graphs with γnt = ⌈n/2⌉                 graphs checked
spanning   spanning-tree classes with γnt = n/2    spanning-tree classes accepted
========== ======================================= =====================================
"""
from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .enumerate import enumerate_trees
from .extremal import is_subdivided_star, spanning_trees
from .family import recognize_T, validate_certificate
from .graph import Graph, canonical_tree_code
from .named import b_graphs, c5
from .solvers import Method, ParamKind, solve_exact

SCHEMA = 1


class Theorem(enum.Enum):
    EVEN_CHARACTERIZATION = "even"
    ODD_CHARACTERIZATION = "odd"
    HALF_BOUND = "half-bound"
    CHAIN = "chain"
    BGRAPHS = "bgraphs"
    SPANNING_COROLLARY = "spanning"


@dataclass
class OrderRow:
    order: int
    trees: int = 0
    extremal: int = 0
    accepted: int = 0
    mismatches: list[str] = field(default_factory=list)
    label: str | None = None

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        doc = {
            "order": self.order,
            "trees": self.trees,
            "extremal": self.extremal,
            "accepted": self.accepted,
            "mismatches": sorted(self.mismatches),
            "passed": self.passed,
        }
        if self.label is not None:
            doc["graph"] = self.label
        return doc


@dataclass
class VerificationReport:
    theorem: Theorem
    rows: list[OrderRow]
    wall_seconds: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def mismatches(self) -> list[str]:
        return [m for r in self.rows for m in r.mismatches]

    def to_json(self, timing: bool = True) -> dict:
        doc = {
            "schema": SCHEMA,
            "theorem": self.theorem.name,
            "params": self.params,
            "rows": [r.to_json() for r in self.rows],
            "totals": {
                "trees": sum(r.trees for r in self.rows),
                "extremal": sum(r.extremal for r in self.rows),
                "accepted": sum(r.accepted for r in self.rows),
                "mismatches": len(self.mismatches),
            },
            "passed": self.passed,
        }
        if timing:
            doc["timing"] = {"wall_seconds": round(self.wall_seconds, 3)}
        return doc

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)


def _code(T: Graph) -> str:
    return canonical_tree_code(T).decode("ascii")


def _ntd(T: Graph, method: Method) -> int:
    return solve_exact(T, ParamKind.NTD, method).value


# per-tree checks: return (extremal, accepted, mismatch)


def _even(T: Graph, method: Method) -> tuple[bool, bool, bool]:
    extremal = 2 * _ntd(T, method) == T.n
    cert = recognize_T(T)
    accepted = cert is not None
    broken = accepted and not validate_certificate(T, cert)
    return extremal, accepted, extremal != accepted or broken


def _odd(T: Graph, method: Method) -> tuple[bool, bool, bool]:
    extremal = 2 * _ntd(T, method) == T.n + 1
    star = is_subdivided_star(T)[0]
    return extremal, star, extremal != star


def _half(T: Graph, method: Method) -> tuple[bool, bool, bool]:
    value = _ntd(T, method)
    equal = 2 * value == T.n + 1
    star = is_subdivided_star(T)[0]
    return equal, star, 2 * value > T.n + 1 or (equal and not star)


def _chain(T: Graph, method: Method) -> tuple[bool, bool, bool]:
    g = solve_exact(T, ParamKind.DOMINATION, method if method is not Method.TREE_DP else Method.BRANCH_AND_BOUND).value
    t = solve_exact(T, ParamKind.TOTAL_DOMINATION, method if method is not Method.TREE_DP else Method.BRANCH_AND_BOUND).value
    nt = _ntd(T, method)
    return nt == t, g == nt, not g <= nt <= t


_CHECKS: dict[Theorem, Callable[[Graph, Method], tuple[bool, bool, bool]]] = {
    Theorem.EVEN_CHARACTERIZATION: _even,
    Theorem.ODD_CHARACTERIZATION: _odd,
    Theorem.HALF_BOUND: _half,
    Theorem.CHAIN: _chain,
}


def _check_batch(args: tuple[Theorem, Method, list[Graph]]) -> list[tuple[bool, bool, bool, str]]:
    theorem, method, trees = args
    check = _CHECKS[theorem]
    out = []
    for T in trees:
        ext, acc, bad = check(T, method)
        out.append((ext, acc, bad, _code(T) if bad else ""))
    return out


def _orders(theorem: Theorem, max_order: int, min_order: int | None) -> list[int]:
    lo = {
        Theorem.EVEN_CHARACTERIZATION: 4,
        Theorem.ODD_CHARACTERIZATION: 3,
        Theorem.HALF_BOUND: 3,
        Theorem.CHAIN: 2,
    }[theorem]
    lo = max(lo, min_order or lo)
    orders = range(lo, max_order + 1)
    if theorem is Theorem.EVEN_CHARACTERIZATION:
        return [n for n in orders if n % 2 == 0]
    if theorem is Theorem.ODD_CHARACTERIZATION:
        return [n for n in orders if n % 2 == 1]
    return list(orders)


def _chunks(items: list, size: int) -> Iterable[list]:
    for i in range(0, len(items), size):
        yield items[i : i + size]


def verify_trees(
    theorem: Theorem,
    max_order: int,
    parallel: int = 1,
    method: Method = Method.BRANCH_AND_BOUND,
    min_order: int | None = None,
) -> VerificationReport:
    """Run one tree-wide check over every tree of each relevant order up to ``max_order``."""
    t0 = time.perf_counter()
    rows = []
    pool = ProcessPoolExecutor(max_workers=parallel) if parallel > 1 else None
    try:
        for n in _orders(theorem, max_order, min_order):
            trees = list(enumerate_trees(n))
            batches = [(theorem, method, chunk) for chunk in _chunks(trees, 64)]
            results = pool.map(_check_batch, batches) if pool else map(_check_batch, batches)
            row = OrderRow(order=n)
            for batch in results:
                for ext, acc, bad, code in batch:
                    row.trees += 1
                    row.extremal += ext
                    row.accepted += acc
                    if bad:
                        row.mismatches.append(code)
            row.mismatches.sort()
            rows.append(row)
    finally:
        if pool:
            pool.shutdown()
    params = {"max_order": max_order, "method": method.value}
    return VerificationReport(theorem, rows, time.perf_counter() - t0, params)


def verify_bgraphs(method: Method = Method.BRANCH_AND_BOUND) -> VerificationReport:
    """γnt(Bi) = n/2 for the five exceptional graphs and γnt(C5) = 3."""
    t0 = time.perf_counter()
    rows = []
    named = [(f"B{i}", G) for i, G in enumerate(b_graphs(), start=1)] + [("C5", c5())]
    for label, G in named:
        value = solve_exact(G, ParamKind.NTD, method).value
        ok = 2 * value == G.n + (G.n % 2)
        rows.append(OrderRow(G.n, 1, int(ok), 1, [] if ok else [f"{label}: γnt={value}"], label))
    return VerificationReport(Theorem.BGRAPHS, rows, time.perf_counter() - t0, {"method": method.value})


def verify_spanning(
    graphs: list[tuple[str, Graph]] | None = None, method: Method = Method.BRANCH_AND_BOUND
) -> VerificationReport:
    """Every spanning tree of each graph (B1-B5 by default) is accepted by the recognizer."""
    t0 = time.perf_counter()
    if graphs is None:
        graphs = [(f"B{i}", G) for i, G in enumerate(b_graphs(), start=1)]
    rows = []
    for label, G in graphs:
        row = OrderRow(G.n, label=label)
        for T in spanning_trees(G):
            row.trees += 1
            row.extremal += 2 * _ntd(T, method) == T.n
            cert = recognize_T(T) if T.n >= 4 and T.n % 2 == 0 else None
            if cert is not None and validate_certificate(T, cert):
                row.accepted += 1
            else:
                row.mismatches.append(_code(T))
        row.mismatches.sort()
        rows.append(row)
    return VerificationReport(Theorem.SPANNING_COROLLARY, rows, time.perf_counter() - t0, {"method": method.value})


def verify(
    theorem: Theorem,
    max_order: int = 10,
    parallel: int = 1,
    method: Method = Method.BRANCH_AND_BOUND,
) -> VerificationReport:
    if theorem is Theorem.BGRAPHS:
        return verify_bgraphs(method if method is not Method.TREE_DP else Method.BRANCH_AND_BOUND)
    if theorem is Theorem.SPANNING_COROLLARY:
        return verify_spanning(method=method)
    return verify_trees(theorem, max_order, parallel, method)
