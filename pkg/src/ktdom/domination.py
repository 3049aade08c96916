"""k-tuple total dominating sets: predicates, private-neighbor witnesses, solvers."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import engine
from .errors import DomainError, ParameterError
from .graph import Graph, VertexSet, as_vertex_set


@dataclass(frozen=True)
class OpnWitness:
    """A k-open private neighbor ``witness`` of some member v of S.

    ``trace`` is N(witness) & S, which has exactly k elements and contains v.
    """

    witness: int
    trace: frozenset[int]
    external: bool


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet
    nodes_explored: int
    elapsed: float
    method: str = ""

    def __post_init__(self) -> None:
        if len(self.witness) != self.value:
            raise AssertionError(f"witness size {len(self.witness)} != value {self.value}")
        if self.value > self.witness.host_size:
            raise AssertionError("value exceeds the vertex count")


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be a positive integer, got {k!r}")


def system_of(g: Graph, k: int) -> engine.System:
    """Covering system whose feasible sets are the kTDSs of ``g``."""
    return engine.System(g.n, g.masks, k)


def is_ktds(g: Graph, s: VertexSet | Iterable[int], k: int) -> bool:
    _check_k(k)
    members = as_vertex_set(s, g.n).members
    return all(len(g.adj[x] & members) >= k for x in range(g.n))


def opn_k(g: Graph, s: VertexSet | Iterable[int], v: int, k: int) -> list[OpnWitness]:
    """All k-open private neighbors of ``v`` with respect to ``s``, by index."""
    _check_k(k)
    members = as_vertex_set(s, g.n).members
    if v not in members:
        raise ParameterError(f"vertex {v} is not in the set")
    out = []
    for w in sorted(g.adj[v]):
        trace = g.adj[w] & members
        if len(trace) == k:
            out.append(OpnWitness(w, trace, w not in members))
    return out


def is_minimal_ktds(g: Graph, s: VertexSet | Iterable[int], k: int, criterion: str = "witness") -> bool:
    """Minimality by private-neighbor witnesses or by single-vertex deletion.

    Both criteria agree on every input; ``"witness"`` is one pass over the
    members, ``"deletion"`` re-tests the kTDS property for each member.
    """
    vs = as_vertex_set(s, g.n)
    if not is_ktds(g, vs, k):
        return False
    if criterion == "witness":
        return all(opn_k(g, vs, v, k) for v in vs.members)
    if criterion == "deletion":
        return all(not is_ktds(g, vs.members - {v}, k) for v in vs.members)
    raise ParameterError(f"unknown minimality criterion {criterion!r}")


def _require_feasible(g: Graph, k: int) -> None:
    _check_k(k)
    if g.n == 0 or g.min_degree < k:
        raise DomainError(f"no kTDS exists: min degree {g.min_degree if g.n else 0} < k={k}")


def enumerate_minimal_ktds(
    g: Graph,
    k: int,
    visitor: Callable[[VertexSet], bool | None] | None = None,
    *,
    method: str = "auto",
) -> Iterator[VertexSet]:
    """Yield every minimal kTDS once, smallest characteristic mask first.

    If ``visitor`` is given it is called on each set before it is yielded;
    returning True stops the enumeration.
    """
    _require_feasible(g, k)
    for mask in engine.enumerate_minimal(system_of(g, k), method=method):
        vs = VertexSet.from_mask(g.n, mask)
        if visitor is not None and visitor(vs):
            yield vs
            return
        yield vs


def count_minimal_ktds(g: Graph, k: int) -> int:
    """Number of minimal kTDSs; zero when min degree < k."""
    if g.n == 0 or g.min_degree < k:
        return 0
    return sum(1 for _ in enumerate_minimal_ktds(g, k))


def _solve(g: Graph, k: int, objective: str, method: str, workers: int, time_budget: float | None) -> SolveResult:
    _require_feasible(g, k)
    cap = None
    if objective == "max" and g.min_degree >= k + 1:
        cap = g.n - g.min_degree + k
    t0 = time.perf_counter()
    out = engine.solve(system_of(g, k), objective, method=method, workers=workers, time_budget=time_budget, cap=cap)
    return SolveResult(out.value, VertexSet.from_mask(g.n, out.mask), out.nodes, time.perf_counter() - t0, out.method)


def gamma_ktt(g: Graph, k: int, *, method: str = "auto", workers: int = 1, time_budget: float | None = None) -> SolveResult:
    """k-tuple total domination number with the least-mask minimum kTDS."""
    return _solve(g, k, "min", method, workers, time_budget)


def Gamma_ktt(g: Graph, k: int, *, method: str = "auto", workers: int = 1, time_budget: float | None = None) -> SolveResult:  # noqa: N802
    """Upper k-tuple total domination number with the least-mask maximum minimal kTDS."""
    return _solve(g, k, "max", method, workers, time_budget)


def has_external_witnesses(g: Graph, s: VertexSet | Iterable[int], k: int) -> bool:
    vs = as_vertex_set(s, g.n)
    return all(any(w.external for w in opn_k(g, vs, v, k)) for v in vs.members)


def is_gamma_external(g: Graph, k: int) -> VertexSet | None:
    """A maximum minimal kTDS whose members all have external witnesses, if any.

    Returns the least-mask such set, or None when no maximum minimal kTDS
    qualifies.
    """
    _require_feasible(g, k)
    top = Gamma_ktt(g, k).value
    for vs in enumerate_minimal_ktds(g, k):
        if len(vs) == top and has_external_witnesses(g, vs, k):
            return vs
    return None


def witness_trace_intersections(g: Graph, s: VertexSet | Iterable[int], k: int) -> set[frozenset[int]]:
    """Every set obtainable as the intersection of one witness trace per member.

    Each member v of a minimal kTDS may have several private neighbors, each
    with its own trace; this ranges over all such choices.
    """
    vs = as_vertex_set(s, g.n)
    reachable: set[frozenset[int]] | None = None
    for v in sorted(vs.members):
        traces = {w.trace for w in opn_k(g, vs, v, k)}
        if not traces:
            return set()
        if reachable is None:
            reachable = set(traces)
        else:
            reachable = {acc & t for acc in reachable for t in traces}
    return reachable or set()
