"""Closed forms, bound checkers and the claim registry C1..C26.

Every check returns a :class:`ClaimReport`. Observed numbers always come
from the exact solvers; a report is ``violated`` only after every
precondition of the claim was verified on the instance.
"""

from __future__ import annotations

import inspect
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Sequence

from . import domination as dom
from . import hypergraph as hyp
from .errors import DomainError, InapplicableError, ParameterError
from .families import (
    Complete,
    CompleteMultipartite,
    Cross,
    Cycle,
    FamilySpec,
    Path,
    Rook,
    generate,
    parse_family,
)
from .graph import Graph, VertexSet, cartesian_product, cross_product, mask_of

HOLDS = "holds"
VIOLATED = "violated"
INAPPLICABLE = "inapplicable"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    params: str
    expected: str
    observed: str
    verdict: str
    gating: bool = True
    values: dict[str, Any] = field(default_factory=dict, compare=False, repr=False)

    @property
    def failed(self) -> bool:
        """A violation of a claim whose failure should stop a run."""
        return self.gating and self.verdict == VIOLATED


# ----------------------------------------------------------------- formulas


def formula_upper_total_path(n: int) -> int:
    if n < 2:
        raise DomainError("path formula needs n >= 2")
    return 2 * ((n + 1) // 3)


def formula_upper_total_cycle(n: int) -> int:
    if n < 3:
        raise DomainError("cycle formula needs n >= 3")
    return 2 * (n // 3) + (1 if n % 3 == 2 else 0)


def _multipartite_delta(parts: Sequence[int]) -> int:
    return sum(parts) - max(parts)


def _multipartite_candidates(parts: Sequence[int], k: int, top: bool) -> list[int]:
    parts = list(parts)
    if not parts or any(a > b for a, b in zip(parts, parts[1:])) or parts[0] < 1:
        raise ParameterError(f"parts must be positive and ascending, got {parts}")
    if k < 1:
        raise ParameterError("k must be at least 1")
    if _multipartite_delta(parts) < k:
        raise DomainError(f"min degree {_multipartite_delta(parts)} < k={k}")
    p = len(parts)
    xs = []
    for ell in range(2, p + 1):
        if k % (ell - 1):
            continue
        x = k // (ell - 1)
        chosen = parts[p - ell:] if top else parts[:ell]
        if x <= min(k, *chosen):
            xs.append(x)
    if not xs:
        raise InapplicableError(f"no (l, x) with (l-1)x = k fits parts {list(parts)} for k={k}")
    return xs


def formula_gamma_upper_multipartite(parts: Sequence[int], k: int) -> int:
    """k + max{x : (l-1)x = k, x <= min(k, largest l parts)}, l ranging over 2..p."""
    return k + max(_multipartite_candidates(parts, k, top=True))


def bound_gamma_multipartite(parts: Sequence[int], k: int) -> int:
    """k + min{x : (l-1)x = k, x <= min(k, smallest l parts)}: an upper bound on gamma."""
    return k + min(_multipartite_candidates(parts, k, top=False))


# -------------------------------------------------------------- decomposition


def decompose_k_join(g: Graph, k: int, m: int) -> tuple[VertexSet, VertexSet] | None:
    """Least-mask split V = S + (V - S) with |S| = m, G[S] of min degree >= k,
    and every outside vertex having >= k neighbors in S.

    Such an S is exactly a kTDS of size m, so G is K'_m or F o_k K'_m.
    Checked directly over all m-subsets, independently of the solvers.
    """
    if g.n and g.min_degree < k:
        raise DomainError(f"min degree {g.min_degree} < k={k}")
    if not 1 <= m <= g.n:
        raise ParameterError(f"need 1 <= m <= n, got m={m}")
    best = None
    for core in combinations(range(g.n), m):
        inside = set(core)
        if all(len(g.adj[v] & inside) >= k for v in core) and all(
            len(g.adj[v] & inside) >= k for v in range(g.n) if v not in inside
        ):
            mask = mask_of(core)
            if best is None or mask < best:
                best = mask
    if best is None:
        return None
    core = VertexSet.from_mask(g.n, best)
    return core, VertexSet(g.n, frozenset(range(g.n)) - core.members)


# ------------------------------------------------------------------- helpers


def _resolve(x: Graph | FamilySpec | str) -> tuple[str, Graph]:
    if isinstance(x, Graph):
        return f"graph[n={x.n},m={x.m}]", x
    if isinstance(x, str):
        x = parse_family(x)
    return str(x), generate(x)


def _report(cid: str, params: str, expected: str, observed: str, verdict: str, **values: Any) -> ClaimReport:
    return ClaimReport(cid, params, expected, observed, verdict, REGISTRY[cid].gating, values)


def _inapplicable(cid: str, params: str, expected: str, why: str) -> ClaimReport:
    return _report(cid, params, expected, why, INAPPLICABLE)


def _verdict(ok: bool) -> str:
    return HOLDS if ok else VIOLATED


# solver values memoized per (graph, k, objective); claims reuse factor and product values heavily
_VALUES: dict[tuple[Graph, int, str], int] = {}


def remember(g: Graph, k: int, objective: str, value: int) -> None:
    """Seed the value cache, e.g. with results computed under a time budget."""
    _VALUES[(g, k, objective)] = value


def clear_cache() -> None:
    _VALUES.clear()


def _upper(g: Graph, k: int) -> int:
    key = (g, k, "max")
    if key not in _VALUES:
        _VALUES[key] = dom.Gamma_ktt(g, k).value
    return _VALUES[key]


def _lower(g: Graph, k: int) -> int:
    key = (g, k, "min")
    if key not in _VALUES:
        _VALUES[key] = dom.gamma_ktt(g, k).value
    return _VALUES[key]


def _feasible(g: Graph, k: int) -> bool:
    return g.n > 0 and g.min_degree >= k


# -------------------------------------------------------------------- checks


def _c1(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "gamma <= Gamma <= n"
    if not _feasible(g, k):
        return _inapplicable("C1", p, exp, f"delta={g.min_degree} < k")
    lo, up = _lower(g, k), _upper(g, k)
    return _report("C1", p, exp, f"gamma={lo} Gamma={up} n={g.n}", _verdict(lo <= up <= g.n), gamma=lo, Gamma=up)


def _c2(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "deletion-minimal <=> every member has a k-opn"
    if not _feasible(g, k):
        return _inapplicable("C2", p, exp, f"delta={g.min_degree} < k")
    if g.n > 12:
        return _inapplicable("C2", p, exp, "exhaustive subset check limited to n <= 12")
    checked = disagree = 0
    for mask in range(1 << g.n):
        s = VertexSet.from_mask(g.n, mask)
        if not dom.is_ktds(g, s, k):
            continue
        checked += 1
        if dom.is_minimal_ktds(g, s, k, "deletion") != dom.is_minimal_ktds(g, s, k, "witness"):
            disagree += 1
    return _report("C2", p, exp, f"{checked} kTDS checked, {disagree} disagreements", _verdict(disagree == 0))


def _c3(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "N(v) inside every kTDS when deg(v)=k"
    if not _feasible(g, k):
        return _inapplicable("C3", p, exp, f"delta={g.min_degree} < k")
    forced = set()
    for v in range(g.n):
        if g.degree(v) == k:
            forced |= g.adj[v]
    bad = sum(1 for s in dom.enumerate_minimal_ktds(g, k) if not forced <= s.members)
    return _report("C3", p, exp, f"forced={sorted(forced)} offending sets={bad}", _verdict(bad == 0))


def _c4(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "Gamma = n for k-regular graphs"
    if g.n == 0 or not g.is_regular(k):
        return _inapplicable("C4", p, exp, "graph is not k-regular")
    up = _upper(g, k)
    return _report("C4", p, exp, f"Gamma={up} n={g.n}", _verdict(up == g.n), Gamma=up)


def _c5(n: int) -> ClaimReport:
    p = f"path:{n}"
    if n < 2:
        return _inapplicable("C5", p, "Gamma_t(P_n) = 2*floor((n+1)/3)", "n < 2")
    want = formula_upper_total_path(n)
    up = _upper(generate(Path(n)), 1)
    return _report("C5", p, f"Gamma_t = {want}", f"Gamma_t={up}", _verdict(up == want), Gamma=up)


def _c6(n: int) -> ClaimReport:
    p = f"cycle:{n}"
    if n < 3:
        return _inapplicable("C6", p, "cycle formula", "n < 3")
    want = formula_upper_total_cycle(n)
    up = _upper(generate(Cycle(n)), 1)
    return _report("C6", p, f"Gamma_t = {want}", f"Gamma_t={up}", _verdict(up == want), Gamma=up)


def _multipartite_case(parts: Sequence[int], k: int):
    spec = CompleteMultipartite(tuple(parts))
    return spec, f"{spec} k={k}", generate(spec)


def _c7(parts: Sequence[int], k: int) -> ClaimReport:
    spec, p, g = _multipartite_case(parts, k)
    try:
        want = formula_gamma_upper_multipartite(spec.parts, k)
    except DomainError as exc:  # includes InapplicableError
        return _inapplicable("C7", p, "Gamma = k + max{x | (l-1)x = k, ...}", str(exc))
    up = _upper(g, k)
    return _report("C7", p, f"Gamma = {want}", f"Gamma={up}", _verdict(up == want), Gamma=up, formula=want)


def _c8(parts: Sequence[int], k: int) -> ClaimReport:
    spec, p, g = _multipartite_case(parts, k)
    exp = f"Gamma = 2k = {2 * k}"
    if sum(1 for x in spec.parts if x >= k) < 2:
        return _inapplicable("C8", p, exp, "fewer than two parts of size >= k")
    if not _feasible(g, k):
        return _inapplicable("C8", p, exp, f"delta={g.min_degree} < k")
    up = _upper(g, k)
    return _report("C8", p, exp, f"Gamma={up}", _verdict(up == 2 * k), Gamma=up)


def _c9(parts: Sequence[int], k: int) -> ClaimReport:
    spec, p, g = _multipartite_case(parts, k)
    try:
        bound = bound_gamma_multipartite(spec.parts, k)
    except DomainError as exc:  # includes InapplicableError
        return _inapplicable("C9", p, "gamma <= k + min{x | (l-1)x = k, ...}", str(exc))
    lo = _lower(g, k)
    return _report("C9", p, f"gamma <= {bound}", f"gamma={lo}", _verdict(lo <= bound), gamma=lo, bound=bound)


def bound_n_minus_delta_plus_k(graph, k: int) -> ClaimReport:
    """Check Gamma <= n - delta + k (requires delta >= k+1 >= 2)."""
    label, g = _resolve(graph)
    p = f"{label} k={k}"
    if k < 1 or g.n == 0 or g.min_degree < k + 1:
        return _inapplicable("C10", p, "Gamma <= n - delta + k", "needs delta >= k+1 >= 2")
    bound = g.n - g.min_degree + k
    up = _upper(g, k)
    return _report(
        "C10", p, f"Gamma <= {bound}", f"Gamma={up}" + (" (equality)" if up == bound else ""),
        _verdict(up <= bound), Gamma=up, bound=bound,
    )


def _c11(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "Gamma_k <= Gamma_(k-l) + l, l = |intersection of traces| < k"
    if not _feasible(g, k):
        return _inapplicable("C11", p, exp, f"delta={g.min_degree} < k")
    best = dom.Gamma_ktt(g, k)
    sizes = sorted({len(x) for x in dom.witness_trace_intersections(g, best.witness, k)})
    points = []
    ok = True
    for ell in sizes:
        if ell >= k:
            continue
        other = _upper(g, k - ell)
        ok &= best.value <= other + ell
        points.append(f"l={ell}:{best.value}<={other}+{ell}")
    if not points:
        return _inapplicable("C11", p, exp, "no trace assignment gives l < k")
    return _report("C11", p, exp, " ".join(points), _verdict(ok), Gamma=best.value)


def _c12(n: int, m: int, k: int) -> ClaimReport:
    p = f"{Rook(n, m)} k={k}"
    exp = f"Gamma >= kn = {k * n}"
    if not n >= m >= k + 1 >= 3:
        return _inapplicable("C12", p, exp, "needs n >= m >= k+1 >= 3")
    up = _upper(generate(Rook(n, m)), k)
    tag = "equality" if up == k * n else "strict"
    return _report("C12", p, exp, f"Gamma={up} ({tag})", _verdict(up >= k * n), Gamma=up, equality=up == k * n)


def _c13(k: int) -> ClaimReport:
    p = f"{Rook(k + 1, k + 1)} k={k}"
    exp = f"Gamma = k(k+1) = {k * (k + 1)}"
    if k < 2:
        return _inapplicable("C13", p, exp, "needs k >= 2")
    up = _upper(generate(Rook(k + 1, k + 1)), k)
    return _report("C13", p, exp, f"Gamma={up}", _verdict(up == k * (k + 1)), Gamma=up)


def _c14(g, h, k: int) -> ClaimReport:
    (lg, gg), (lh, hh) = _resolve(g), _resolve(h)
    p = f"G={lg} H={lh} k={k}"
    exp = "Gamma(G)*Gamma(H) <= (k+1)/k * Gamma(G box H)"
    if k < 2 or not (_feasible(gg, k) and _feasible(hh, k)):
        return _inapplicable("C14", p, exp, "needs k >= 2 and both min degrees >= k")
    a, b = _upper(gg, k), _upper(hh, k)
    prod = _upper(cartesian_product(gg, hh), k)
    lhs, rhs = a * b, Fraction(k + 1, k) * prod
    ratio = Fraction(lhs, prod)
    return _report(
        "C14", p, exp, f"{a}*{b}={lhs} vs {rhs} (ratio {ratio})", _verdict(lhs <= rhs),
        Gamma_G=a, Gamma_H=b, Gamma_product=prod, ratio=ratio,
    )


def _external(g: Graph, k: int) -> VertexSet | None:
    return dom.is_gamma_external(g, k) if _feasible(g, k) else None


def _c15(g, h, k: int) -> ClaimReport:
    (lg, gg), (lh, hh) = _resolve(g), _resolve(h)
    p = f"G={lg} H={lh} k={k}"
    exp = "Gamma(G box H) >= max(Gamma(G)|V(H)|, Gamma(H)|V(G)|)"
    if k < 2 or not (_feasible(gg, k) and _feasible(hh, k)):
        return _inapplicable("C15", p, exp, "needs k >= 2 and both min degrees >= k")
    if _external(gg, k) is None or _external(hh, k) is None:
        return _inapplicable("C15", p, exp, "a factor is not Gamma-external")
    want = max(_upper(gg, k) * hh.n, _upper(hh, k) * gg.n)
    prod = _upper(cartesian_product(gg, hh), k)
    return _report("C15", p, f"Gamma >= {want}", f"Gamma={prod}", _verdict(prod >= want), Gamma_product=prod)


def _c16(g, h, k: int) -> ClaimReport:
    (lg, gg), (lh, hh) = _resolve(g), _resolve(h)
    p = f"G={lg} H={lh} k={k}"
    exp = "Gamma(G box H) >= Gamma(G)*Gamma(H) for Gamma-external G"
    if k < 2 or not (_feasible(gg, k) and _feasible(hh, k)):
        return _inapplicable("C16", p, exp, "needs k >= 2 and both min degrees >= k")
    if _external(gg, k) is None:
        return _inapplicable("C16", p, exp, "G is not Gamma-external")
    want = _upper(gg, k) * _upper(hh, k)
    prod = _upper(cartesian_product(gg, hh), k)
    return _report("C16", p, f"Gamma >= {want}", f"Gamma={prod}", _verdict(prod >= want), Gamma_product=prod)


def _c17(g, h, k: int) -> ClaimReport:
    (lg, gg), (lh, hh) = _resolve(g), _resolve(h)
    p = f"G={lg} H={lh} k={k}"
    exp = "Gamma(G box H) >= Gamma(G) * (case-dependent factor of H)"
    if not (_feasible(gg, k) and _feasible(hh, k)):
        return _inapplicable("C17", p, exp, "needs both min degrees >= k")
    if _external(gg, k) is None:
        return _inapplicable("C17", p, exp, "G is not Gamma-external")
    a, b = _upper(gg, k), _upper(hh, k)
    delta = hh.min_degree
    if delta >= k + 1:
        case, want = "i", a * (b + delta - k)
    elif hh.is_regular(k):
        case, want = "ii", a * b
    else:
        case, want = "iii", a * (b + 1)
    prod = _upper(cartesian_product(gg, hh), k)
    return _report("C17", p, f"({case}) Gamma >= {want}", f"Gamma={prod}", _verdict(prod >= want), case=case, Gamma_product=prod)


def _c18(g, h, k: int, l: int) -> ClaimReport:  # noqa: E741
    (lg, gg), (lh, hh) = _resolve(g), _resolve(h)
    p = f"G={lg} H={lh} k={k} l={l}"
    exp = "Gamma_kl(G x H) >= Gamma_k(G) * Gamma_l(H)"
    if not (_feasible(gg, k) and _feasible(hh, l)):
        return _inapplicable("C18", p, exp, "needs delta(G) >= k and delta(H) >= l")
    want = _upper(gg, k) * _upper(hh, l)
    prod = _upper(cross_product(gg, hh), k * l)
    return _report(
        "C18", p, f"Gamma >= {want}", f"Gamma={prod}" + (" (equality)" if prod == want else ""),
        _verdict(prod >= want), Gamma_product=prod, bound=want,
    )


def _c19(g, h, k: int) -> ClaimReport:
    (lg, gg), (lh, hh) = _resolve(g), _resolve(h)
    p = f"G={lg} H={lh} k={k}"
    exp = "Gamma_k(G x H) >= max(Gamma_k(G)Gamma_t(H), Gamma_k(H)Gamma_t(G))"
    if not (gg.n and hh.n and gg.min_degree >= hh.min_degree >= k >= 1):
        return _inapplicable("C19", p, exp, "needs delta(G) >= delta(H) >= k >= 1")
    want = max(_upper(gg, k) * _upper(hh, 1), _upper(hh, k) * _upper(gg, 1))
    prod = _upper(cross_product(gg, hh), k)
    return _report("C19", p, f"Gamma >= {want}", f"Gamma={prod}", _verdict(prod >= want), Gamma_product=prod)


def _c20(n: int, k: int) -> ClaimReport:
    spec = Cross(Complete(n), Complete(2))
    p, exp = f"{spec} k={k}", f"Gamma = 2k+2 = {2 * k + 2}"
    if not 1 <= k <= n - 1:
        return _inapplicable("C20", p, exp, "needs 1 <= k <= n-1")
    up = _upper(generate(spec), k)
    return _report("C20", p, exp, f"Gamma={up}", _verdict(up == 2 * k + 2), Gamma=up)


def _c21(n: int, m: int, k: int) -> ClaimReport:
    spec = Cross(Complete(n), Complete(m))
    p, exp = f"{spec} k={k}", f"Gamma = 2k+2 = {2 * k + 2}?"
    if n < 2 or m < 2 or max(n, m) < k + 1 or (n - 1) * (m - 1) < k or k < 1:
        return _inapplicable("C21", p, exp, "needs n,m >= 2, max(n,m) >= k+1, delta >= k")
    up = _upper(generate(spec), k)
    return _report("C21", p, exp, f"Gamma={up}", _verdict(up == 2 * k + 2), Gamma=up)


def _c22(parts_g: Sequence[int], parts_h: Sequence[int], k: int) -> ClaimReport:
    sg, sh = CompleteMultipartite(tuple(parts_g)), CompleteMultipartite(tuple(parts_h))
    spec = Cross(sg, sh)
    p, exp = f"{spec} k={k}", f"Gamma >= 4k = {4 * k}"
    g = generate(spec)
    if not _feasible(g, k):
        return _inapplicable("C22", p, exp, f"delta={g.min_degree} < k")
    ng, nh = sum(sg.parts), sum(sh.parts)
    cond_g = sum(1 for t in sg.parts if t * nh >= 2 * k) >= 2
    cond_h = sum(1 for s in sh.parts if s * ng >= 2 * k) >= 2
    if not (cond_g or cond_h):
        return _inapplicable("C22", p, exp, "no two parts reach the 2k threshold")
    up = _upper(g, k)
    return _report("C22", p, exp, f"Gamma={up}" + (" (equality)" if up == 4 * k else ""), _verdict(up >= 4 * k), Gamma=up)


def _hyper_pair(g: Graph, k: int):
    h = hyp.open_neighborhood_hypergraph(g)
    return hyp.tau_k(h, k).value, hyp.upsilon_k(h, k).value


def _c23(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "Gamma(G) = Upsilon_k(H_G)"
    if not _feasible(g, k):
        return _inapplicable("C23", p, exp, f"delta={g.min_degree} < k")
    up = _upper(g, k)
    _, ups = _hyper_pair(g, k)
    return _report("C23", p, exp, f"Gamma={up} Upsilon={ups}", _verdict(up == ups))


def _c24(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "Gamma = gamma  <=>  Upsilon_k = tau_k"
    if not _feasible(g, k):
        return _inapplicable("C24", p, exp, f"delta={g.min_degree} < k")
    lo, up = _lower(g, k), _upper(g, k)
    tau, ups = _hyper_pair(g, k)
    return _report(
        "C24", p, exp, f"gamma={lo} Gamma={up} tau={tau} Upsilon={ups}",
        _verdict((lo == up) == (tau == ups)),
    )


def _c25(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "gamma = least m admitting a k-join split G = F o_k K'_m (or G = K'_m)"
    if not _feasible(g, k):
        return _inapplicable("C25", p, exp, f"delta={g.min_degree} < k")
    lo = _lower(g, k)
    least = next((m for m in range(1, g.n + 1) if decompose_k_join(g, k, m) is not None), None)
    return _report("C25", p, exp, f"gamma={lo} least m={least}", _verdict(least == lo), gamma=lo)


def _c26(graph, k: int) -> ClaimReport:
    label, g = _resolve(graph)
    p, exp = f"{label} k={k}", "gamma(G) = tau_k(H_G)"
    if not _feasible(g, k):
        return _inapplicable("C26", p, exp, f"delta={g.min_degree} < k")
    lo = _lower(g, k)
    tau, _ = _hyper_pair(g, k)
    return _report("C26", p, exp, f"gamma={lo} tau={tau}", _verdict(lo == tau))


@dataclass(frozen=True)
class Claim:
    claim_id: str
    title: str
    kind: str  # "theorem", "conjecture" or "question"
    check: Callable[..., ClaimReport]
    gating: bool = True


def _claim(cid: str, title: str, check: Callable[..., ClaimReport], kind: str = "theorem", gating: bool = True) -> Claim:
    return Claim(cid, title, kind, check, gating)


REGISTRY: dict[str, Claim] = {
    c.claim_id: c
    for c in [
        _claim("C1", "gamma <= Gamma <= n", _c1),
        _claim("C2", "minimal iff every member has a k-open private neighbor", _c2),
        _claim("C3", "neighbors of degree-k vertices lie in every kTDS", _c3),
        _claim("C4", "Gamma = n for k-regular graphs", _c4),
        _claim("C5", "upper total domination of paths", _c5),
        _claim("C6", "upper total domination of cycles", _c6),
        _claim("C7", "Gamma of complete multipartite graphs", _c7),
        _claim("C8", "Gamma = 2k with two parts of size >= k", _c8),
        _claim("C9", "gamma bound for complete multipartite graphs", _c9),
        _claim("C10", "Gamma <= n - delta + k", bound_n_minus_delta_plus_k),
        _claim("C11", "Gamma_k <= Gamma_(k-l) + l", _c11, gating=False),
        _claim("C12", "rook's graph Gamma >= kn", _c12),
        _claim("C13", "Gamma(K_{k+1} box K_{k+1}) = k(k+1)", _c13),
        _claim("C14", "Vizing-like conjecture for upper k-tuple total domination", _c14, "conjecture", False),
        _claim("C15", "Cartesian product of two Gamma-external graphs", _c15),
        _claim("C16", "Cartesian product with a Gamma-external factor", _c16),
        _claim("C17", "Cartesian product cases (i)-(iii)", _c17),
        _claim("C18", "cross product Gamma_kl >= Gamma_k * Gamma_l", _c18),
        _claim("C19", "cross product bound with Gamma_t", _c19),
        _claim("C20", "Gamma(K_n x K_2) = 2k+2", _c20),
        _claim("C21", "is Gamma(K_n x K_m) = 2k+2?", _c21, "question", False),
        _claim("C22", "cross product of complete multipartite graphs >= 4k", _c22),
        _claim("C23", "Gamma(G) = Upsilon_k(H_G)", _c23),
        _claim("C24", "Gamma = gamma iff Upsilon = tau", _c24),
        _claim("C25", "gamma = m characterized by k-joins", _c25),
        _claim("C26", "gamma(G) = tau_k(H_G)", _c26),
    ]
}


def check_claim(claim_id: str, **params: Any) -> ClaimReport:
    """Run one claim on one parameter point, e.g. ``check_claim("C13", k=2)``."""
    try:
        claim = REGISTRY[claim_id.upper()]
    except KeyError:
        raise ParameterError(f"unknown claim id {claim_id!r}") from None
    try:
        inspect.signature(claim.check).bind(**params)
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {claim.claim_id}: {exc}") from None
    return claim.check(**params)
