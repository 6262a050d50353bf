"""The extremal tree family: construction, certificates and recognition.

A member is grown from an underlying tree ``T0``. Every ``T0`` vertex gets
either a pendant leaf (a P2-unit) or a pendant ``P3`` joined by its center
(a star-unit), giving the base tree ``T1``. Then some leaves of ``T1`` that
are pairwise at distance at least 3 each receive ``k >= 1`` appended
``P2``s: a path ``s - l`` whose end ``s`` is joined to the leaf.
"""
from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field

from .enumerate import prufer_decode
from .graph import (
    Graph,
    VertexSet,
    bfs_order,
    induced_subgraph,
    is_2_packing,
    is_connected,
    is_tree,
    members,
    vset,
)


class UnitKind(enum.Enum):
    P2_UNIT = "P2_UNIT"
    STAR_UNIT = "STAR_UNIT"


P2_UNIT = UnitKind.P2_UNIT
STAR_UNIT = UnitKind.STAR_UNIT

# a leaf of T1 is named by its T0 vertex and a slot: the pendant leaf of a
# P2-unit, one of the two outer leaves of a star-unit, or the T0 vertex itself
# (a leaf of T1 only when T0 = K1)
SLOTS = ("t0", "leaf", "a", "b")
Designator = tuple[int, str]


class InvalidSpec(ValueError):
    pass


class InvalidCertificate(ValueError):
    pass


def _designator_key(d: Designator) -> str:
    return f"{d[0]}.{d[1]}"


def _parse_designator(key: str) -> Designator:
    head, _, slot = key.partition(".")
    if slot not in SLOTS or not head.isdigit():
        raise InvalidSpec(f"bad leaf designator {key!r}")
    return int(head), slot


@dataclass
class TSpec:
    t0_edges: list[tuple[int, int]]
    unit_of: dict[int, UnitKind]
    appended: dict[Designator, int] = field(default_factory=dict)

    @property
    def t0_order(self) -> int:
        return len(self.unit_of)

    def order(self) -> int:
        units = sum(2 if k is P2_UNIT else 4 for k in self.unit_of.values())
        return units + 2 * sum(self.appended.values())

    def to_json(self) -> dict:
        return {
            "t0_edges": [list(e) for e in self.t0_edges],
            "unit_of": {str(v): k.value for v, k in sorted(self.unit_of.items())},
            "appended": {_designator_key(d): k for d, k in sorted(self.appended.items())},
        }

    @classmethod
    def from_json(cls, doc: dict) -> "TSpec":
        try:
            edges = [(int(u), int(v)) for u, v in doc["t0_edges"]]
            unit_of = {int(v): UnitKind(k) for v, k in doc["unit_of"].items()}
            appended = {_parse_designator(d): int(k) for d, k in doc.get("appended", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSpec(f"malformed spec document: {exc}") from None
        return cls(edges, unit_of, appended)


@dataclass(frozen=True)
class Unit:
    """One block of the base-tree partition.

    ``added`` is ``(leaf,)`` for a P2-unit and ``(center, a, b)`` for a star-unit.
    """

    t0_vertex: int
    kind: UnitKind
    added: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.t0_vertex,) + self.added


@dataclass
class TCertificate:
    A: VertexSet
    unit_partition: list[Unit]
    L1: VertexSet
    appended_p2s: dict[int, list[tuple[int, int]]]

    # derived views

    @property
    def B(self) -> VertexSet:
        return vset(x for u in self.unit_partition for x in u.added)

    @property
    def B1(self) -> VertexSet:
        return vset(u.added[0] for u in self.unit_partition if u.kind is STAR_UNIT)

    @property
    def C1(self) -> VertexSet:
        return vset(l for pairs in self.appended_p2s.values() for _, l in pairs)

    @property
    def C2(self) -> VertexSet:
        return vset(s for pairs in self.appended_p2s.values() for s, _ in pairs)

    def star_leaves(self, unit: Unit) -> tuple[int, int]:
        """``(a_v, b_v)`` with ``a_v`` the outer leaf carrying appended P2s, if either does."""
        _, a, b = unit.added
        if b in self.appended_p2s and a not in self.appended_p2s:
            a, b = b, a
        return a, b

    @property
    def blocked(self) -> VertexSet:
        out = 0
        for unit in self.unit_partition:
            if unit.kind is not STAR_UNIT:
                continue
            center = unit.added[0]
            a, b = self.star_leaves(unit)
            out |= 1 << center
            if a in self.appended_p2s:
                out |= 1 << b
        return out

    def appended_type(self, anchor: int) -> int:
        """1 for P2s appended to a P2-unit vertex, 2 for a star-unit vertex."""
        for unit in self.unit_partition:
            if anchor in unit.vertices:
                return 1 if unit.kind is P2_UNIT else 2
        raise KeyError(anchor)

    @property
    def order(self) -> int:
        return sum(len(u.vertices) for u in self.unit_partition) + 2 * sum(
            len(p) for p in self.appended_p2s.values()
        )

    def to_json(self) -> dict:
        return {
            "A": members(self.A),
            "unit_partition": [
                {"t0_vertex": u.t0_vertex, "kind": u.kind.value, "added": list(u.added)}
                for u in self.unit_partition
            ],
            "L1": members(self.L1),
            "appended_p2s": {
                str(v): [list(p) for p in pairs] for v, pairs in sorted(self.appended_p2s.items())
            },
            "B": members(self.B),
            "B1": members(self.B1),
            "C1": members(self.C1),
            "C2": members(self.C2),
            "blocked": members(self.blocked),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, doc: dict) -> "TCertificate":
        """Parse a certificate; derived views, when present, must match the recomputed ones."""
        try:
            units = [
                Unit(int(u["t0_vertex"]), UnitKind(u["kind"]), tuple(int(x) for x in u["added"]))
                for u in doc["unit_partition"]
            ]
            cert = cls(
                A=vset(int(v) for v in doc["A"]),
                unit_partition=units,
                L1=vset(int(v) for v in doc["L1"]),
                appended_p2s={
                    int(v): [(int(s), int(l)) for s, l in pairs]
                    for v, pairs in doc["appended_p2s"].items()
                },
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidCertificate(f"malformed certificate document: {exc}") from None
        for name in ("B", "B1", "C1", "C2", "blocked"):
            if name in doc and vset(doc[name]) != getattr(cert, name):
                raise InvalidCertificate(f"derived field {name} does not match the construction")
        return cert


# ---------------------------------------------------------------- building


def _t1_leaf_label(spec_layout: dict[int, tuple[int, ...]], d: Designator) -> int:
    x, slot = d
    added = spec_layout[x]
    if slot == "t0":
        return x
    if slot == "leaf" and len(added) == 1:
        return added[0]
    if slot in ("a", "b") and len(added) == 3:
        return added[1 if slot == "a" else 2]
    raise InvalidSpec(f"designator {_designator_key(d)} does not match the unit of {x}")


def build_member(spec: TSpec) -> tuple[Graph, TCertificate]:
    """Grow the tree described by ``spec``; labels are T0 first, then units, then appended pairs."""
    m = spec.t0_order
    if set(spec.unit_of) != set(range(m)) or m == 0:
        raise InvalidSpec("unit_of must cover T0 vertices 0..m-1 with m >= 1")
    try:
        t0 = Graph.from_edges(m, spec.t0_edges)
    except ValueError as exc:
        raise InvalidSpec(f"bad t0 edge: {exc}") from None
    if not is_tree(t0):
        raise InvalidSpec("t0_edges do not form a tree")

    if spec.order() < 4:
        raise InvalidSpec("family members have order at least 4")

    edges = list(t0.edges())
    layout: dict[int, tuple[int, ...]] = {}
    units = []
    nxt = m
    for x in range(m):
        kind = spec.unit_of[x]
        if kind is P2_UNIT:
            added = (nxt,)
            edges.append((x, nxt))
            nxt += 1
        else:
            c, a, b = nxt, nxt + 1, nxt + 2
            added = (c, a, b)
            edges += [(x, c), (c, a), (c, b)]
            nxt += 3
        layout[x] = added
        units.append(Unit(x, kind, added))
    t1 = Graph.from_edges(nxt, edges)

    anchors = {}
    for d, k in sorted(spec.appended.items()):
        if k < 1:
            raise InvalidSpec(f"append count for {_designator_key(d)} must be at least 1")
        if d[0] not in layout:
            raise InvalidSpec(f"designator {_designator_key(d)} names no T0 vertex")
        v = _t1_leaf_label(layout, d)
        if t1.degree(v) != 1:
            raise InvalidSpec(f"{_designator_key(d)} is not a leaf of the base tree")
        if v in anchors:
            raise InvalidSpec(f"{_designator_key(d)} designated twice")
        anchors[v] = k
    L1 = vset(anchors)
    if not is_2_packing(t1, L1):
        raise InvalidSpec("appended leaves do not form a 2-packing in the base tree")

    appended: dict[int, list[tuple[int, int]]] = {}
    for v, k in anchors.items():
        pairs = []
        for _ in range(k):
            s, l = nxt, nxt + 1
            edges += [(v, s), (s, l)]
            pairs.append((s, l))
            nxt += 2
        appended[v] = pairs
    T = Graph.from_edges(nxt, edges)
    return T, TCertificate(vset(range(m)), units, L1, appended)


def random_spec(rng: random.Random, max_order: int = 24, max_t0: int = 8) -> TSpec:
    """A uniformly-ish random valid spec whose tree has at most ``max_order`` vertices."""
    while True:
        m = rng.randint(1, max(1, min(max_t0, max_order // 2)))
        if m == 1:
            t0_edges = []
        elif m == 2:
            t0_edges = [(0, 1)]
        else:
            t0_edges = prufer_decode([rng.randrange(m) for _ in range(m - 2)]).edges()
        unit_of = {x: rng.choice((P2_UNIT, STAR_UNIT)) for x in range(m)}
        budget = max_order - sum(2 if k is P2_UNIT else 4 for k in unit_of.values())
        if budget < 0:
            continue
        # candidate leaves of T1, tried in random order, kept while the 2-packing holds
        candidates: list[Designator] = []
        for x, kind in unit_of.items():
            candidates += [(x, "leaf")] if kind is P2_UNIT else [(x, "a"), (x, "b")]
            if m == 1:
                candidates.append((x, "t0"))
        rng.shuffle(candidates)
        appended: dict[Designator, int] = {}
        spec = TSpec(t0_edges, unit_of, appended)
        for d in candidates:
            if budget < 2 or rng.random() < 0.4:
                continue
            k = rng.randint(1, max(1, min(3, budget // 2)))
            appended[d] = k
            try:
                build_member(spec)
            except InvalidSpec:
                del appended[d]
                continue
            budget -= 2 * k
        if spec.order() >= 4:
            return spec


# ------------------------------------------------------------- validation


def certificate_violations(T: Graph, cert: TCertificate) -> list[str]:
    """Every structural condition of the certificate that fails on ``T``; empty when valid."""
    out: list[str] = []
    n = T.n
    refs = [v for u in cert.unit_partition for v in u.vertices]
    refs += list(cert.appended_p2s)
    refs += [x for pairs in cert.appended_p2s.values() for p in pairs for x in p]
    refs += members(cert.A) + members(cert.L1)
    if any(not 0 <= v < n for v in refs):
        return ["vertex reference out of range"]
    if not is_tree(T):
        out.append("graph is not a tree")

    # partition of V(T) into unit blocks and appended pairs
    blocks = [u.vertices for u in cert.unit_partition]
    blocks += [p for pairs in cert.appended_p2s.values() for p in pairs]
    covered = [v for blk in blocks for v in blk]
    if len(covered) != len(set(covered)):
        out.append("blocks overlap")
    if set(covered) != set(range(n)):
        out.append("blocks do not cover every vertex")
    t0_vertices = [u.t0_vertex for u in cert.unit_partition]
    if vset(t0_vertices) != cert.A or len(set(t0_vertices)) != len(t0_vertices):
        out.append("A is not the set of unit T0 vertices")
    if not cert.unit_partition:
        out.append("no units")

    # unit shapes and the set of edges the construction accounts for
    allowed: set[tuple[int, int]] = set()

    def need_edge(u: int, v: int, what: str) -> None:
        allowed.add((min(u, v), max(u, v)))
        if not T.adj[u] >> v & 1:
            out.append(f"{what}: missing edge {u}-{v}")

    for unit in cert.unit_partition:
        x = unit.t0_vertex
        if unit.kind is P2_UNIT:
            if len(unit.added) != 1:
                out.append(f"P2-unit of {x} must add exactly one vertex")
                continue
            need_edge(x, unit.added[0], f"P2-unit of {x}")
        else:
            if len(unit.added) != 3:
                out.append(f"star-unit of {x} must add exactly three vertices")
                continue
            c, a, b = unit.added
            for y in (x, a, b):
                need_edge(c, y, f"star-unit of {x}")
    A = cert.A
    for u, v in T.edges():
        if A >> u & 1 and A >> v & 1:
            allowed.add((u, v))
    if A and not is_connected(induced_subgraph(T, A)):
        out.append("the underlying vertices do not induce a connected subgraph")

    if vset(cert.appended_p2s) != cert.L1:
        out.append("L1 differs from the set of vertices carrying appended P2s")
    base = cert.A | cert.B
    for v, pairs in sorted(cert.appended_p2s.items()):
        if not pairs:
            out.append(f"L1 vertex {v} carries no appended P2")
        for s, l in pairs:
            need_edge(v, s, f"appended P2 at {v}")
            need_edge(s, l, f"appended P2 at {v}")
            if T.adj[s] != (1 << v | 1 << l):
                out.append(f"appended support {s} must be adjacent to exactly {v} and {l}")
            if T.adj[l] != 1 << s:
                out.append(f"appended leaf {l} must be adjacent only to {s}")

    for u, v in T.edges():
        if (u, v) not in allowed:
            out.append(f"edge {u}-{v} is not part of the construction")

    if base and not out:
        t1 = induced_subgraph(T, base)
        index = {v: i for i, v in enumerate(members(base))}
        l1_local = vset(index[v] for v in members(cert.L1))
        if any(t1.degree(index[v]) != 1 for v in members(cert.L1)):
            out.append("L1 contains a vertex that is not a leaf of the base tree")
        if not is_2_packing(t1, l1_local):
            out.append("L1 is not a 2-packing in the base tree")
    for unit in cert.unit_partition:
        if unit.kind is STAR_UNIT and len(unit.added) == 3:
            _, a, b = unit.added
            if a in cert.appended_p2s and b in cert.appended_p2s:
                out.append(f"both outer leaves of the star-unit of {unit.t0_vertex} carry appended P2s")

    expected = sum(2 if u.kind is P2_UNIT else 4 for u in cert.unit_partition)
    expected += 2 * sum(len(p) for p in cert.appended_p2s.values())
    if expected != n:
        out.append(f"order identity fails: construction has {expected} vertices, graph has {n}")
    return out


def validate_certificate(T: Graph, cert: TCertificate) -> bool:
    return not certificate_violations(T, cert)


def certificate_ntd_set(T: Graph, cert: TCertificate) -> VertexSet:
    """The set ``A ∪ B1 ∪ C1``: underlying vertices, star centers and appended leaves.

    When ``T0 = K1`` with a P2-unit and the T0 vertex itself carries the
    appended P2s, the T0 vertex and its unit leaf swap roles first; the two
    readings build the same tree, and only the swapped one makes the set an
    NTD-set.
    """
    problems = certificate_violations(T, cert)
    if problems:
        raise InvalidCertificate("; ".join(problems))
    A = cert.A
    for unit in cert.unit_partition:
        if unit.kind is P2_UNIT and unit.t0_vertex in cert.appended_p2s:
            A = A & ~(1 << unit.t0_vertex) | 1 << unit.added[0]
    return A | cert.B1 | cert.C1


# ------------------------------------------------------------ recognition

# vertex roles in a member: underlying, P2-unit leaf, star center, star outer
# leaf without / with appended P2s, appended support, appended leaf
ROLES = ("A", "P", "SC", "SL0", "SL1", "AS", "AL")
_R = {r: i for i, r in enumerate(ROLES)}
_CAP = 3

_NEIGHBOR_ROLES = {
    "A": {"A", "P", "SC"},
    "P": {"A", "AS"},
    "SC": {"A", "SL0", "SL1"},
    "SL0": {"SC"},
    "SL1": {"SC", "AS"},
    "AS": {"P", "SL1", "AL"},
    "AL": {"AS"},
}
_COMPATIBLE = [[ROLES[j] in _NEIGHBOR_ROLES[ROLES[i]] for j in range(len(ROLES))] for i in range(len(ROLES))]


def _role_ok(role: str, c: tuple[int, ...]) -> bool:
    g = lambda r: c[_R[r]]  # noqa: E731
    if role == "A":
        return g("P") + g("SC") == 1
    if role == "P":
        return g("A") == 1
    if role == "SC":
        return g("A") == 1 and g("SL0") + g("SL1") == 2 and g("SL1") <= 1
    if role == "SL0":
        return g("SC") == 1
    if role == "SL1":
        return g("SC") == 1 and g("AS") >= 1
    if role == "AS":
        return g("P") + g("SL1") == 1 and g("AL") == 1
    return g("AS") == 1  # AL


def _bump(c: tuple[int, ...], role: int) -> tuple[int, ...]:
    if c[role] >= _CAP:
        return c
    return c[:role] + (c[role] + 1,) + c[role + 1 :]


def _role_labeling(T: Graph) -> list[str] | None:
    """A role per vertex satisfying every local constraint of the construction, or ``None``."""
    order = list(bfs_order(T, 0))
    children: dict[int, list[int]] = {v: [] for v, _ in order}
    for v, p in order[1:]:
        children[p].append(v)
    none = len(ROLES)  # index for "no parent"
    zero = (0,) * len(ROLES)
    # plan[v][(role, parent_role)] = child roles, when feasible
    plan: dict[int, dict[tuple[int, int], tuple[int, ...]]] = {}
    for v, _ in reversed(order):
        table = {}
        for q in range(len(ROLES) + 1):
            for r in range(len(ROLES)):
                if q != none and not _COMPATIBLE[r][q]:
                    continue
                states = {zero if q == none else _bump(zero, q): ()}
                for w in children[v]:
                    nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
                    for c, picks in states.items():
                        for rw in range(len(ROLES)):
                            if _COMPATIBLE[r][rw] and (rw, r) in plan[w]:
                                key = _bump(c, rw)
                                if key not in nxt:
                                    nxt[key] = picks + (rw,)
                    states = nxt
                    if not states:
                        break
                for c, picks in states.items():
                    if _role_ok(ROLES[r], c):
                        table[(r, q)] = picks
                        break
        plan[v] = table

    root_role = next((r for r in range(len(ROLES)) if (r, none) in plan[0]), None)
    if root_role is None:
        return None
    roles = [""] * T.n
    stack = [(0, root_role, none)]
    while stack:
        v, r, q = stack.pop()
        roles[v] = ROLES[r]
        for w, rw in zip(children[v], plan[v][(r, q)]):
            stack.append((w, rw, r))
    return roles


def recognize_T(T: Graph) -> TCertificate | None:
    """A certificate of membership, or ``None`` when ``T`` is not in the family."""
    if not is_tree(T):
        raise ValueError("input is not a tree")
    if T.n < 4 or T.n % 2:
        raise ValueError("recognition needs a tree of even order at least 4")
    roles = _role_labeling(T)
    if roles is None:
        return None
    units = []
    appended: dict[int, list[tuple[int, int]]] = {}
    for x in range(T.n):
        if roles[x] != "A":
            continue
        (u,) = [w for w in T.neighbors(x) if roles[w] in ("P", "SC")]
        if roles[u] == "P":
            units.append(Unit(x, P2_UNIT, (u,)))
        else:
            outer = sorted(T.neighbors(u), key=lambda w: (roles[w] != "SL1", w))
            outer = [w for w in outer if w != x]
            units.append(Unit(x, STAR_UNIT, (u, outer[0], outer[1])))
    for v in range(T.n):
        if roles[v] in ("P", "SL1"):
            supports = [s for s in T.neighbors(v) if roles[s] == "AS"]
            if supports:
                appended[v] = [(s, next(l for l in T.neighbors(s) if roles[l] == "AL")) for s in supports]
    A = vset(x for x in range(T.n) if roles[x] == "A")
    return TCertificate(A, units, vset(appended), appended)


def is_member(T: Graph) -> bool:
    return T.n >= 4 and T.n % 2 == 0 and recognize_T(T) is not None


def count_units(cert: TCertificate) -> tuple[int, int, int]:
    """``(P2-units, star-units, appended pairs)``."""
    p2 = sum(1 for u in cert.unit_partition if u.kind is P2_UNIT)
    return p2, len(cert.unit_partition) - p2, sum(len(p) for p in cert.appended_p2s.values())

