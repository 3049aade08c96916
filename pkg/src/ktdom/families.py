"""Named graph families and the ``name:args`` family grammar.

Numbering per family:

* ``path:n`` / ``cycle:n``: consecutive vertices adjacent (cycle closes n-1 to 0).
* ``atlas:i``: numbering of the networkx graph atlas.
* ``multipartite:a-b-c``: parts sorted ascending, each part a consecutive block.
* ``rook:n,m``: cell (i, j) is ``i*m + j``; identical to ``cart(complete:n,complete:m)``.
* ``sharp:b,delta,k``: b blocks of K_{k+1} first, then delta-k independent vertices
  joined to all of them.
* ``union(...)``, ``join(a,b)``, ``kjoin(a,b,k)``: left operand first.
* ``cart(a,b)`` / ``cross(a,b)``: pair (i, j) is ``i*n(b) + j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import ParameterError
from .graph import (
    Graph,
    cartesian_product,
    cross_product,
    disjoint_union,
    join,
    k_join,
)


def _positive(name: str, *values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ParameterError(f"{name}: size parameters must be positive integers, got {v!r}")


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self) -> None:
        _positive("path", self.n)

    def __str__(self) -> str:
        return f"path:{self.n}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self) -> None:
        _positive("cycle", self.n)
        if self.n < 3:
            raise ParameterError("cycle needs at least 3 vertices")

    def __str__(self) -> str:
        return f"cycle:{self.n}"


@dataclass(frozen=True)
class Complete:
    n: int

    def __post_init__(self) -> None:
        _positive("complete", self.n)

    def __str__(self) -> str:
        return f"complete:{self.n}"


@dataclass(frozen=True)
class Empty:
    n: int

    def __post_init__(self) -> None:
        _positive("empty", self.n)

    def __str__(self) -> str:
        return f"empty:{self.n}"


@dataclass(frozen=True)
class Atlas:
    """Graph number ``index`` of the networkx graph atlas (all graphs up to 7 vertices)."""

    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index <= 1252:
            raise ParameterError(f"atlas index must be in 0..1252, got {self.index}")

    def __str__(self) -> str:
        return f"atlas:{self.index}"


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ParameterError("multipartite needs at least one part")
        _positive("multipartite", *self.parts)
        object.__setattr__(self, "parts", tuple(sorted(self.parts)))

    def __str__(self) -> str:
        return "multipartite:" + "-".join(map(str, self.parts))


@dataclass(frozen=True)
class Rook:
    n: int
    m: int

    def __post_init__(self) -> None:
        _positive("rook", self.n, self.m)

    def __str__(self) -> str:
        return f"rook:{self.n},{self.m}"


@dataclass(frozen=True)
class SharpnessFamily:
    """b disjoint copies of K_{k+1} joined to an independent set of delta-k vertices."""

    b: int
    delta: int
    k: int

    def __post_init__(self) -> None:
        _positive("sharp", self.b, self.delta, self.k)
        if self.delta < self.k + 1:
            raise ParameterError("sharp: need delta >= k+1 >= 2")
        if self.b < math.ceil(self.delta / (self.k + 1)):
            raise ParameterError(f"sharp: need b >= ceil(delta/(k+1)) = {math.ceil(self.delta / (self.k + 1))}")

    def __str__(self) -> str:
        return f"sharp:{self.b},{self.delta},{self.k}"


@dataclass(frozen=True)
class DisjointUnion:
    specs: tuple[FamilySpec, ...]

    def __post_init__(self) -> None:
        if not self.specs:
            raise ParameterError("union needs at least one operand")

    def __str__(self) -> str:
        return "union(" + ",".join(map(str, self.specs)) + ")"


@dataclass(frozen=True)
class Join:
    left: FamilySpec
    right: FamilySpec

    def __str__(self) -> str:
        return f"join({self.left},{self.right})"


@dataclass(frozen=True)
class Cartesian:
    left: FamilySpec
    right: FamilySpec

    def __str__(self) -> str:
        return f"cart({self.left},{self.right})"


@dataclass(frozen=True)
class Cross:
    left: FamilySpec
    right: FamilySpec

    def __str__(self) -> str:
        return f"cross({self.left},{self.right})"


@dataclass(frozen=True)
class KJoin:
    f: FamilySpec
    h: FamilySpec
    k: int

    def __post_init__(self) -> None:
        _positive("kjoin", self.k)

    def __str__(self) -> str:
        return f"kjoin({self.f},{self.h},{self.k})"


FamilySpec = Union[
    Path, Cycle, Complete, Empty, Atlas, CompleteMultipartite, Rook, SharpnessFamily,
    DisjointUnion, Join, Cartesian, Cross, KJoin,
]


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(frozenset(u for u in range(n) if u != v) for v in range(n)))


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``."""
    if isinstance(spec, Path):
        return Graph.from_edges(spec.n, [(i, i + 1) for i in range(spec.n - 1)])
    if isinstance(spec, Cycle):
        return Graph.from_edges(spec.n, [(i, (i + 1) % spec.n) for i in range(spec.n)])
    if isinstance(spec, Complete):
        return complete_graph(spec.n)
    if isinstance(spec, Empty):
        return Graph.empty(spec.n)
    if isinstance(spec, Atlas):
        from .corpus import atlas_graph

        return atlas_graph(spec.index)
    if isinstance(spec, CompleteMultipartite):
        part_of = [p for p, size in enumerate(spec.parts) for _ in range(size)]
        n = len(part_of)
        return Graph(n, tuple(frozenset(u for u in range(n) if part_of[u] != part_of[v]) for v in range(n)))
    if isinstance(spec, Rook):
        return cartesian_product(complete_graph(spec.n), complete_graph(spec.m))
    if isinstance(spec, SharpnessFamily):
        blocks = disjoint_union(*[complete_graph(spec.k + 1)] * spec.b)
        return join(blocks, Graph.empty(spec.delta - spec.k))
    if isinstance(spec, DisjointUnion):
        return disjoint_union(*(generate(s) for s in spec.specs))
    if isinstance(spec, Join):
        return join(generate(spec.left), generate(spec.right))
    if isinstance(spec, Cartesian):
        return cartesian_product(generate(spec.left), generate(spec.right))
    if isinstance(spec, Cross):
        return cross_product(generate(spec.left), generate(spec.right))
    if isinstance(spec, KJoin):
        return k_join(generate(spec.f), generate(spec.h), spec.k)
    raise ParameterError(f"unknown family spec {spec!r}")


_SIMPLE = {"path": Path, "cycle": Cycle, "complete": Complete, "empty": Empty, "atlas": Atlas}
_COMBINATORS = {"cart", "cross", "join", "union", "kjoin"}


def _split_top(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParameterError(f"unbalanced ')' in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise ParameterError(f"unbalanced '(' in {text!r}")
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _regroup(pieces: list[str]) -> list[str]:
    # "rook:4,4" splits into "rook:4" and "4"; bare integers belong to the preceding simple family
    out: list[str] = []
    for piece in pieces:
        if out and piece.isdigit() and ":" in out[-1] and "(" not in out[-1]:
            out[-1] += "," + piece
        else:
            out.append(piece)
    return out


def _ints(name: str, raw: str, count: int | None = None, sep: str = ",") -> list[int]:
    try:
        values = [int(x) for x in raw.split(sep)]
    except ValueError:
        raise ParameterError(f"{name}: expected integers, got {raw!r}") from None
    if count is not None and len(values) != count:
        raise ParameterError(f"{name}: expected {count} argument(s), got {len(values)}")
    return values


def parse_family(text: str) -> FamilySpec:
    """Parse the family grammar, e.g. ``cross(complete:4,complete:2)``."""
    text = text.strip()
    head, paren, rest = text.partition("(")
    if paren and head in _COMBINATORS:
        if not rest.endswith(")"):
            raise ParameterError(f"missing ')' in {text!r}")
        pieces = _split_top(rest[:-1])
        if head == "kjoin":
            if len(pieces) < 3:
                raise ParameterError("kjoin takes (F, H, k)")
            args = _regroup(pieces[:-1]) + [pieces[-1]]
        else:
            args = _regroup(pieces)
        if head == "union":
            return DisjointUnion(tuple(parse_family(a) for a in args))
        if head == "kjoin":
            if len(args) != 3:
                raise ParameterError("kjoin takes (F, H, k)")
            return KJoin(parse_family(args[0]), parse_family(args[1]), _ints("kjoin", args[2], 1)[0])
        if len(args) != 2:
            raise ParameterError(f"{head} takes exactly two operands")
        left, right = parse_family(args[0]), parse_family(args[1])
        return {"cart": Cartesian, "cross": Cross, "join": Join}[head](left, right)

    name, colon, raw = text.partition(":")
    if not colon:
        raise ParameterError(f"family {text!r} is not of the form name:args")
    if name in _SIMPLE:
        (n,) = _ints(name, raw, 1)
        return _SIMPLE[name](n)
    if name == "multipartite":
        return CompleteMultipartite(tuple(_ints(name, raw, sep="-")))
    if name == "rook":
        n, m = _ints(name, raw, 2)
        return Rook(n, m)
    if name == "sharp":
        b, delta, k = _ints(name, raw, 3)
        return SharpnessFamily(b, delta, k)
    raise ParameterError(f"unknown family {name!r}")
