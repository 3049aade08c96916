"""Immutable simple graphs, vertex subsets, and graph constructions.

Vertices are ``0..n-1``. Products number the pair ``(i, j)`` as
``i * n(h) + j``; unions and joins place the left operand first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParameterError


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a host structure with ``host_size`` vertices."""

    host_size: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        for v in self.members:
            if not 0 <= v < self.host_size:
                raise ParameterError(f"vertex {v} outside [0, {self.host_size})")

    @classmethod
    def from_mask(cls, host_size: int, mask: int) -> VertexSet:
        return cls(host_size, frozenset(bits_of(mask)))

    @cached_property
    def mask(self) -> int:
        return mask_of(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.sorted())) + "}"


def as_vertex_set(s: VertexSet | Iterable[int], host_size: int) -> VertexSet:
    """Coerce ``s`` to a VertexSet on ``host_size`` vertices."""
    if isinstance(s, VertexSet):
        if s.host_size != host_size:
            raise ParameterError(f"vertex set lives on {s.host_size} vertices, host has {host_size}")
        return s
    return VertexSet(host_size, frozenset(s))


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph given by neighbor sets.

    Construct with :meth:`from_edges` unless you already hold a symmetric
    adjacency. Equality compares the adjacency exactly (labelled graphs).
    """

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError("vertex count must be nonnegative")
        adj = tuple(frozenset(a) for a in self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise ParameterError(f"adjacency has {len(adj)} rows for n={self.n}")
        for v, nbrs in enumerate(adj):
            if v in nbrs:
                raise ParameterError(f"loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ParameterError(f"neighbor {u} of {v} out of range")
                if v not in adj[u]:
                    raise ParameterError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks."""
        return tuple(mask_of(a) for a in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_regular(self, r: int | None = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        return r is None or degs <= {r}

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            tuple(frozenset(index[u] for u in self.adj[v] if u in index) for v in vertices),
        )


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[frozenset[int]] = []
    offset = 0
    for g in graphs:
        adj.extend(frozenset(u + offset for u in a) for a in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


def _with_cross_edges(g: Graph, h: Graph, cross: Sequence[Iterable[int]]) -> Graph:
    # cross[i] lists the h-vertices joined to g-vertex i
    base = disjoint_union(g, h)
    adj = [set(a) for a in base.adj]
    for i, targets in enumerate(cross):
        for j in targets:
            if not 0 <= j < h.n:
                raise ParameterError(f"cross target {j} outside the second graph")
            adj[i].add(g.n + j)
            adj[g.n + j].add(i)
    return Graph(base.n, tuple(frozenset(a) for a in adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between ``g`` and ``h``."""
    everything = range(h.n)
    return _with_cross_edges(g, h, [everything] * g.n)


def k_join(f: Graph, h: Graph, k: int) -> Graph:
    """Canonical k-join: each f-vertex is joined to the k lowest-indexed h-vertices."""
    _check_k_join(h, k)
    return _with_cross_edges(f, h, [range(k)] * f.n)


def k_join_explicit(f: Graph, h: Graph, k: int, cross: Sequence[Iterable[int]]) -> Graph:
    """k-join with caller-chosen attachments; each f-vertex needs at least k targets."""
    _check_k_join(h, k)
    cross = [sorted(set(c)) for c in cross]
    if len(cross) != f.n:
        raise ParameterError(f"need one attachment list per vertex of F ({f.n}), got {len(cross)}")
    for i, c in enumerate(cross):
        if len(c) < k:
            raise ParameterError(f"F-vertex {i} is joined to {len(c)} < k={k} vertices of H")
    return _with_cross_edges(f, h, cross)


def _check_k_join(h: Graph, k: int) -> None:
    if k < 1:
        raise ParameterError("k must be at least 1")
    if h.min_degree < k or h.n == 0:
        raise DomainError(f"k-join needs min degree of H >= k (got {h.min_degree} < {k})")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    nh = h.n
    adj = []
    for i in range(g.n):
        for j in range(nh):
            nbrs = {i * nh + jj for jj in h.adj[j]}
            nbrs.update(ii * nh + j for ii in g.adj[i])
            adj.append(frozenset(nbrs))
    return Graph(g.n * nh, tuple(adj))


def cross_product(g: Graph, h: Graph) -> Graph:
    nh = h.n
    adj = []
    for i in range(g.n):
        for j in range(nh):
            adj.append(frozenset(ii * nh + jj for ii in g.adj[i] for jj in h.adj[j]))
    return Graph(g.n * nh, tuple(adj))
