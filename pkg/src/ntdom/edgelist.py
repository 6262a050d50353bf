"""Plain-text edge lists.

A document is the decimal order on its first line followed by one ``u v``
line per edge. Lines starting with ``#`` are comments. Several documents can
be concatenated with blank lines between them.
"""
from __future__ import annotations

from typing import Iterable

from .graph import Graph


class EdgeListError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


def parse_edge_list(text: str, first_line: int = 1) -> Graph:
    n = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=first_line):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise EdgeListError(lineno, f"expected vertex count, got {raw!r}")
            n = int(fields[0])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise EdgeListError(lineno, f"expected 'u v', got {raw!r}")
        u, v = int(fields[0]), int(fields[1])
        if u >= n or v >= n:
            raise EdgeListError(lineno, f"endpoint out of range for n={n}")
        if u == v:
            raise EdgeListError(lineno, f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(lineno, f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise EdgeListError(first_line, "empty document")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise EdgeListError(first_line, str(exc)) from None


def serialize_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list_documents(text: str) -> list[Graph]:
    """Split on blank lines and parse each block as one document."""
    graphs = []
    block: list[str] = []
    start = 1
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw.strip():
            if not block:
                start = lineno
            block.append(raw)
        elif block:
            graphs.append(parse_edge_list("\n".join(block), first_line=start))
            block = []
    if block:
        graphs.append(parse_edge_list("\n".join(block), first_line=start))
    return graphs


def serialize_edge_list_documents(graphs: Iterable[Graph]) -> str:
    return "\n".join(serialize_edge_list(G) for G in graphs)
