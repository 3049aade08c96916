"""Hypergraphs, the open neighborhood hypergraph, and k-transversal solvers."""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from . import engine
from .domination import SolveResult
from .errors import DomainError, ParameterError
from .graph import Graph, VertexSet, as_vertex_set, mask_of


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a multiset of nonempty edges (repeats are kept)."""

    n: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        edges = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for i, e in enumerate(edges):
            if not e:
                raise ParameterError(f"edge {i} is empty")
            for v in e:
                if not 0 <= v < self.n:
                    raise ParameterError(f"edge {i} has vertex {v} outside [0, {self.n})")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def min_edge_size(self) -> int:
        return min((len(e) for e in self.edges), default=0)


def open_neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """One edge per vertex: edge i is the open neighborhood of vertex i."""
    for v in range(g.n):
        if not g.adj[v]:
            raise DomainError(f"vertex {v} is isolated; its open neighborhood would be an empty edge")
    return Hypergraph(g.n, g.adj)


def is_k_transversal(h: Hypergraph, s: VertexSet | Iterable[int], k: int) -> bool:
    if k < 1:
        raise ParameterError("k must be at least 1")
    members = as_vertex_set(s, h.n).members
    return all(len(e & members) >= k for e in h.edges)


def is_minimal_k_transversal(h: Hypergraph, s: VertexSet | Iterable[int], k: int) -> bool:
    """Transversal that stops being one when any single member is removed."""
    vs = as_vertex_set(s, h.n)
    if not is_k_transversal(h, vs, k):
        return False
    return all(not is_k_transversal(h, vs.members - {v}, k) for v in vs.members)


def _solve(h: Hypergraph, k: int, objective: str, method: str, workers: int, time_budget: float | None) -> SolveResult:
    if k < 1:
        raise ParameterError("k must be at least 1")
    small = [i for i, e in enumerate(h.edges) if len(e) < k]
    if small:
        raise DomainError(f"edge {small[0]} has fewer than k={k} vertices; no k-transversal exists")
    t0 = time.perf_counter()
    system = engine.System(h.n, h.masks, k)
    out = engine.solve(system, objective, method=method, workers=workers, time_budget=time_budget)
    return SolveResult(out.value, VertexSet.from_mask(h.n, out.mask), out.nodes, time.perf_counter() - t0, out.method)


def tau_k(h: Hypergraph, k: int, *, method: str = "auto", workers: int = 1, time_budget: float | None = None) -> SolveResult:
    """k-transversal number: smallest k-transversal, least mask on ties."""
    return _solve(h, k, "min", method, workers, time_budget)


def upsilon_k(h: Hypergraph, k: int, *, method: str = "auto", workers: int = 1, time_budget: float | None = None) -> SolveResult:
    """Upper k-transversal number: largest minimal k-transversal, least mask on ties."""
    return _solve(h, k, "max", method, workers, time_budget)
