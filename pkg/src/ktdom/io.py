"""Text formats for graphs (``p``/``e`` lines) and hypergraphs (``h``/``s`` lines).

Files use 1-based vertex numbers; lines starting with ``c`` are comments.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import Graph
from .hypergraph import Hypergraph


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _header(fields: list[str], tag: str, lineno: int) -> tuple[int, int]:
    if fields[0] != tag or len(fields) != 3:
        raise ParseError(f"expected header '{tag} <n> <m>', got {' '.join(fields)!r}", lineno)
    try:
        n, m = int(fields[1]), int(fields[2])
    except ValueError:
        raise ParseError(f"non-integer header {' '.join(fields)!r}", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    return n, m


def _vertex(token: str, n: int, lineno: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"non-integer vertex {token!r}", lineno) from None
    if not 1 <= v <= n:
        raise ParseError(f"vertex {v} out of range 1..{n}", lineno)
    return v - 1


def parse_graph(text: str) -> Graph:
    records = _records(text)
    first = next(records, None)
    if first is None:
        raise ParseError("missing 'p <n> <m>' header", 1)
    lineno, fields = first
    n, m = _header(fields, "p", lineno)
    seen: set[tuple[int, int]] = set()
    last = lineno
    for lineno, fields in records:
        last = lineno
        if fields[0] != "e" or len(fields) != 3:
            raise ParseError(f"expected 'e <u> <v>', got {' '.join(fields)!r}", lineno)
        u, v = _vertex(fields[1], n, lineno), _vertex(fields[2], n, lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u + 1}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0] + 1}-{key[1] + 1}", lineno)
        seen.add(key)
    if len(seen) != m:
        raise ParseError(f"header promises {m} edges, found {len(seen)}", last)
    return Graph.from_edges(n, seen)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    records = _records(text)
    first = next(records, None)
    if first is None:
        raise ParseError("missing 'h <n> <m>' header", 1)
    lineno, fields = first
    n, m = _header(fields, "h", lineno)
    edges = []
    last = lineno
    for lineno, fields in records:
        last = lineno
        if fields[0] != "s" or len(fields) < 2:
            raise ParseError(f"expected 's <v1> <v2> ...', got {' '.join(fields)!r}", lineno)
        members = [_vertex(t, n, lineno) for t in fields[1:]]
        if len(set(members)) != len(members):
            raise ParseError("repeated vertex inside an edge", lineno)
        edges.append(frozenset(members))
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}", last)
    return Hypergraph(n, tuple(edges))


def serialize_hypergraph(h: Hypergraph) -> str:
    lines = [f"h {h.n} {h.m}"]
    lines.extend("s " + " ".join(str(v + 1) for v in sorted(e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(encoding="utf-8"))


def sniff_kind(text: str) -> str:
    """``"graph"`` or ``"hypergraph"`` judging by the first header line."""
    for _, fields in _records(text):
        return "hypergraph" if fields[0] == "h" else "graph"
    raise ParseError("empty input", 1)
