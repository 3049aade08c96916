"""Grid runners for solves, claim verification and conjecture scans, plus the result ledger.

Ledger rows are deterministic for a given configuration: instances are
processed (or reassembled) in a fixed order and ``elapsed_ms`` is left blank
unless timing is requested.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence, TextIO

from . import claims as cl
from . import domination as dom
from . import hypergraph as hyp
from .corpus import parse_corpus
from .errors import ParameterError, SolveTimeout
from .families import generate, parse_family
from .graph import Graph, VertexSet, cartesian_product
from .io import parse_graph, parse_hypergraph, sniff_kind

LEDGER_COLUMNS = ("instance", "n", "delta", "k", "quantity", "value", "witness", "elapsed_ms", "claim", "verdict")
QUANTITIES = ("gamma", "Gamma", "tau", "upsilon")
TIMED_OUT = "timed-out"

DEFAULT_SCAN_FAMILIES = ("complete:3", "complete:4", "cycle:4", "cycle:5", "multipartite:2-2")
DEFAULT_CROSS_FAMILIES = ("complete:2", "complete:3", "cycle:4", "complete:4")
# atlas:47 is a 5-vertex graph that is Gamma-external for k=2
DEFAULT_EXTERNAL_FAMILIES = ("atlas:47", "complete:3", "cycle:4", "complete:4", "cycle:5")


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    input_path: str | None = None
    ks: list[int] | None = None
    n_range: list[int] | None = None
    claims: list[str] | None = None
    corpus: str | None = None
    families: list[str] | None = None
    quantity: str = "Gamma"
    as_hypergraph: str | None = None
    output: str | None = None
    fmt: str = "csv"
    workers: int = 1
    time_budget: float | None = None
    timing: bool = False
    max_n: int = 16
    method: str = "auto"
    question: bool = False

    def __post_init__(self) -> None:
        for name in ("ks", "n_range", "claims", "families"):
            value = getattr(self, name)
            if value is not None and len(value) == 0:
                raise ParameterError(f"{name} must not be empty")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ParameterError("time budget must be positive")
        if self.workers < 1:
            raise ParameterError("workers must be at least 1")
        if self.fmt not in ("csv", "json"):
            raise ParameterError("format must be csv or json")
        if self.quantity not in QUANTITIES:
            raise ParameterError(f"quantity must be one of {', '.join(QUANTITIES)}")


@dataclass
class LedgerRow:
    instance: str
    n: int | None = None
    delta: int | None = None
    k: int | None = None
    quantity: str = ""
    value: int | str | None = None
    witness: str = ""
    elapsed_ms: float | None = None
    claim: str = ""
    verdict: str = ""

    def __post_init__(self) -> None:
        if isinstance(self.value, int) and self.witness and len(self.witness.split()) != self.value:
            raise ValueError(f"witness {self.witness!r} does not have {self.value} members")

    def record(self) -> dict[str, Any]:
        out = asdict(self)
        if out["elapsed_ms"] is not None:
            out["elapsed_ms"] = f"{out['elapsed_ms']:.3f}"
        return {key: "" if out[key] is None else out[key] for key in LEDGER_COLUMNS}


def format_witness(s: VertexSet) -> str:
    """1-based, space separated, as in the file formats."""
    return " ".join(str(v + 1) for v in s.sorted())


def format_ledger(rows: Iterable[LedgerRow], fmt: str = "csv", header: bool = True) -> str:
    buf = io.StringIO()
    if fmt == "json":
        for row in rows:
            buf.write(json.dumps(row.record(), sort_keys=True) + "\n")
        return buf.getvalue()
    writer = csv.DictWriter(buf, fieldnames=LEDGER_COLUMNS, lineterminator="\n")
    if header:
        writer.writeheader()
    for row in rows:
        writer.writerow(row.record())
    return buf.getvalue()


def append_ledger(rows: Sequence[LedgerRow], path: str | Path, fmt: str = "csv") -> None:
    """Append rows; a fresh CSV file gets the header first. JSON ledgers are JSON lines."""
    path = Path(path)
    fresh = not path.exists() or path.stat().st_size == 0
    with path.open("a", encoding="utf-8", newline="") as fh:
        fh.write(format_ledger(rows, fmt, header=fresh))


def _map(fn: Callable, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _elapsed(result: dom.SolveResult, timing: bool) -> float | None:
    return result.elapsed * 1000 if timing else None


# --------------------------------------------------------------------- solve


def load_target(cfg: RunConfig) -> tuple[str, Graph | hyp.Hypergraph]:
    if (cfg.family is None) == (cfg.input_path is None):
        raise ParameterError("give exactly one of --family or --input")
    if cfg.family is not None:
        spec = parse_family(cfg.family)
        return str(spec), generate(spec)
    text = Path(cfg.input_path).read_text(encoding="utf-8")
    if sniff_kind(text) == "hypergraph":
        return cfg.input_path, parse_hypergraph(text)
    return cfg.input_path, parse_graph(text)


def run_solve(cfg: RunConfig) -> list[LedgerRow]:
    label, target = load_target(cfg)
    if cfg.quantity in ("tau", "upsilon"):
        if isinstance(target, Graph):
            if cfg.as_hypergraph != "ong":
                raise ParameterError("tau/upsilon on a graph needs --as-hypergraph ong")
            graph, target = target, hyp.open_neighborhood_hypergraph(target)
            label = f"ong({label})"
            delta = graph.min_degree
        else:
            delta = None
    elif not isinstance(target, Graph):
        raise ParameterError(f"{cfg.quantity} needs a graph, not a hypergraph")
    else:
        delta = target.min_degree
    solver = {
        "gamma": dom.gamma_ktt, "Gamma": dom.Gamma_ktt, "tau": hyp.tau_k, "upsilon": hyp.upsilon_k,
    }[cfg.quantity]
    rows = []
    for k in cfg.ks or [1]:
        try:
            res = solver(target, k, method=cfg.method, workers=cfg.workers, time_budget=cfg.time_budget)
        except SolveTimeout:
            rows.append(LedgerRow(label, target.n, delta, k, cfg.quantity, verdict=TIMED_OUT))
            continue
        rows.append(LedgerRow(
            label, target.n, delta, k, cfg.quantity, res.value, format_witness(res.witness), _elapsed(res, cfg.timing),
        ))
    return rows


# -------------------------------------------------------------------- verify


def _partitions(total: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest or total), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def multipartite_parts(max_total: int, min_total: int = 2) -> list[tuple[int, ...]]:
    """All ascending part lists with at least two parts and min_total <= sum <= max_total."""
    out = []
    for total in range(min_total, max_total + 1):
        out.extend(tuple(sorted(p)) for p in _partitions(total) if len(p) >= 2)
    return sorted(out, key=lambda p: (sum(p), p))


def _ks_for(delta: int, ks: list[int] | None, lo: int = 1) -> list[int]:
    return [k for k in (ks if ks is not None else range(lo, delta + 1)) if lo <= k <= delta]


def _graph_pool(cfg: RunConfig, default_corpus: str) -> list[tuple[str, Graph]]:
    if cfg.families:
        return [(str(parse_family(f)), generate(parse_family(f))) for f in cfg.families]
    return list(parse_corpus(cfg.corpus or default_corpus))


def _pairs(names: Sequence[str], max_n: int, ordered: bool = False):
    graphs = [(str(parse_family(f)), generate(parse_family(f))) for f in names]
    if ordered:
        combos = [(a, b) for a in graphs for b in graphs]
    else:
        combos = list(combinations_with_replacement(graphs, 2))
    return [(a, b) for a, b in combos if a[1].n * b[1].n <= max_n]


GRAPH_CLAIMS = {"C1", "C2", "C3", "C10", "C11", "C23", "C24", "C25", "C26"}


def claim_grid(cid: str, cfg: RunConfig) -> list[dict[str, Any]]:
    """Parameter points for one claim under the configured ranges."""
    ks, nr = cfg.ks, cfg.n_range
    if cid in GRAPH_CLAIMS:
        pool = _graph_pool(cfg, "all:<=6" if cid == "C2" else "connected:<=6")
        lo = 1
        return [{"graph": s, "k": k} for _, g in pool for s in [_labelled(_, g)] for k in _ks_for(g.min_degree, ks, lo)]
    if cid == "C4":
        if cfg.families:
            pool = _graph_pool(cfg, "")
        else:
            pool = [(f"cycle:{n}", generate(parse_family(f"cycle:{n}"))) for n in (nr or range(3, 13)) if n >= 3]
            pool += [(f"complete:{n}", generate(parse_family(f"complete:{n}"))) for n in range(2, 9)]
            pool += [(f"union(complete:{r + 1},complete:{r + 1})", generate(parse_family(f"union(complete:{r + 1},complete:{r + 1})"))) for r in range(1, 4)]
        return [{"graph": _labelled(lab, g), "k": g.max_degree} for lab, g in pool if g.n and g.is_regular() and g.max_degree >= 1]
    if cid == "C5":
        return [{"n": n} for n in (nr or range(2, 13)) if n >= 2]
    if cid == "C6":
        return [{"n": n} for n in (nr or range(3, 13)) if n >= 3]
    if cid in ("C7", "C8", "C9"):
        top = max(nr) if nr else 10
        low = min(nr) if nr else 2
        return [
            {"parts": parts, "k": k}
            for parts in multipartite_parts(top, low)
            for k in _ks_for(sum(parts) - max(parts), ks)
        ]
    if cid == "C12":
        out = []
        for n in range(3, cfg.max_n + 1):
            for m in range(3, n + 1):
                if n * m > cfg.max_n:
                    continue
                out.extend({"n": n, "m": m, "k": k} for k in (ks or range(2, m)) if n >= m >= k + 1 >= 3)
        return out
    if cid == "C13":
        return [{"k": k} for k in (ks or [2, 3]) if k >= 2]
    if cid in ("C14", "C15", "C16", "C17"):
        names = cfg.families or (DEFAULT_SCAN_FAMILIES if cid == "C14" else DEFAULT_EXTERNAL_FAMILIES)
        ordered = cid in ("C16", "C17")
        max_n = cfg.max_n if cid == "C14" else max(cfg.max_n, 25)
        out = []
        for (lg, g), (lh, h) in _pairs(names, max_n, ordered):
            for k in ks or [2, 3]:
                if g.min_degree >= k and h.min_degree >= k and k >= 2:
                    out.append({"g": lg, "h": lh, "k": k})
        return out
    if cid in ("C18", "C19"):
        names = cfg.families or DEFAULT_CROSS_FAMILIES
        out = []
        for (lg, g), (lh, h) in _pairs(names, cfg.max_n, ordered=True):
            if cid == "C18":
                out.extend(
                    {"g": lg, "h": lh, "k": k, "l": l}
                    for k in _ks_for(g.min_degree, ks) for l in range(1, h.min_degree + 1)  # noqa: E741
                )
            elif g.min_degree >= h.min_degree:
                out.extend({"g": lg, "h": lh, "k": k} for k in _ks_for(h.min_degree, ks))
        return out
    if cid == "C20":
        return [{"n": n, "k": k} for n in (nr or range(2, 9)) if 2 * n <= cfg.max_n for k in (ks or range(1, n)) if 1 <= k <= n - 1]
    if cid == "C21":
        top = max(nr) if nr else 5
        out = []
        for n in range(2, top + 1):
            for m in range(n, top + 1):
                if n * m <= cfg.max_n:
                    out.extend({"n": n, "m": m, "k": k} for k in _ks_for((n - 1) * (m - 1), ks) if max(n, m) >= k + 1)
        return out
    if cid == "C22":
        pool = multipartite_parts(6)
        out = []
        for pg in pool:
            for ph in pool:
                if pg <= ph and sum(pg) * sum(ph) <= min(cfg.max_n, 12):
                    delta = (sum(pg) - max(pg)) * (sum(ph) - max(ph))
                    out.extend({"parts_g": pg, "parts_h": ph, "k": k} for k in _ks_for(delta, ks))
        return out
    raise ParameterError(f"unknown claim id {cid!r}")


def _labelled(label: str, g: Graph) -> str | Graph:
    # family strings and atlas labels regenerate the same graph in worker processes
    return label if ":" in label or "(" in label else g


@dataclass
class VerifyResult:
    reports: list[cl.ClaimReport]
    rows: list[LedgerRow]
    exit_code: int

    def summary(self) -> str:
        counts: dict[str, Counter] = {}
        for r in self.reports:
            counts.setdefault(r.claim_id, Counter())[r.verdict] += 1
        lines = [f"{'claim':<6} {'holds':>6} {'violated':>9} {'inapplicable':>13}  gating"]
        for cid in sorted(counts, key=lambda c: int(c[1:])):
            c = counts[cid]
            gating = "yes" if cl.REGISTRY[cid].gating else "no"
            lines.append(f"{cid:<6} {c[cl.HOLDS]:>6} {c[cl.VIOLATED]:>9} {c[cl.INAPPLICABLE]:>13}  {gating}")
        for r in self.reports:
            if r.verdict == cl.VIOLATED:
                tag = "VIOLATION" if r.gating else "data point"
                lines.append(f"{tag}: {r.claim_id} {r.params}: expected {r.expected}, observed {r.observed}")
        return "\n".join(lines)


def _run_point(item: tuple[str, dict[str, Any]]) -> cl.ClaimReport:
    cid, params = item
    return cl.check_claim(cid, **params)


def _report_row(rep: cl.ClaimReport) -> LedgerRow:
    value = None
    quantity = ""
    for key in ("Gamma", "Gamma_product", "gamma"):
        if key in rep.values:
            quantity = "gamma" if key == "gamma" else "Gamma"
            value = rep.values[key]
            break
    k = None
    for token in rep.params.split():
        if token.startswith("k="):
            k = int(token[2:])
    return LedgerRow(rep.params, k=k, quantity=quantity, value=value, claim=rep.claim_id, verdict=rep.verdict)


def run_verify(cfg: RunConfig) -> VerifyResult:
    ids = [c.upper() for c in (cfg.claims or list(cl.REGISTRY))]
    for cid in ids:
        if cid not in cl.REGISTRY:
            raise ParameterError(f"unknown claim id {cid!r}")
    items = [(cid, params) for cid in ids for params in claim_grid(cid, cfg)]
    reports = _map(_run_point, items, cfg.workers)
    rows = [_report_row(r) for r in reports]
    exit_code = 2 if any(r.failed for r in reports) else 0
    return VerifyResult(reports, rows, exit_code)


# ---------------------------------------------------------------------- scan


@dataclass
class ScanPoint:
    g: str
    h: str
    k: int
    gamma_g: int | None = None
    gamma_h: int | None = None
    gamma_product: int | None = None
    timed_out: bool = False
    checks: list[cl.ClaimReport] = field(default_factory=list)

    @property
    def ratio(self) -> Fraction | None:
        if None in (self.gamma_g, self.gamma_h, self.gamma_product):
            return None
        return Fraction(self.gamma_g * self.gamma_h, self.gamma_product)

    @property
    def bound(self) -> Fraction:
        return Fraction(self.k + 1, self.k)

    @property
    def flagged(self) -> bool:
        """The conjecture fails at this point."""
        return self.ratio is not None and self.ratio > self.bound


@dataclass
class ScanResult:
    points: list[ScanPoint]
    rows: list[LedgerRow]
    exit_code: int

    def summary(self) -> str:
        lines = []
        for p in self.points:
            if p.h == "2k+2":
                lines.append(f"{p.g:<34} k={p.k}  Gamma={p.gamma_product}  2k+2={2 * p.k + 2}")
                continue
            if p.timed_out:
                lines.append(f"{p.g} box {p.h} k={p.k}: timed out")
                continue
            mark = "  CONJECTURE FAILS" if p.flagged else ""
            lines.append(
                f"{p.g:<18} {p.h:<18} k={p.k}  {p.gamma_g}*{p.gamma_h} / {p.gamma_product} = {p.ratio}"
                f"  (bound {p.bound}){mark}"
            )
        bad = [c for p in self.points for c in p.checks if c.failed]
        lines.append(f"{len(self.points)} points, {sum(p.flagged for p in self.points)} conjecture failures, "
                     f"{len(bad)} proved-claim violations")
        return "\n".join(lines)


def _solve_with_budget(g: Graph, k: int, budget: float | None) -> dom.SolveResult:
    res = dom.Gamma_ktt(g, k, time_budget=budget)
    cl.remember(g, k, "max", res.value)
    return res


def _scan_pair(item: tuple[str, str, int, float | None, bool]) -> tuple[ScanPoint, list[LedgerRow]]:
    lg, lh, k, budget, timing = item
    g, h = generate(parse_family(lg)), generate(parse_family(lh))
    prod = cartesian_product(g, h)
    point = ScanPoint(lg, lh, k)
    rows = []
    plabel = f"cart({lg},{lh})"
    try:
        for label, graph, attr in ((lg, g, "gamma_g"), (lh, h, "gamma_h"), (plabel, prod, "gamma_product")):
            res = _solve_with_budget(graph, k, budget)
            setattr(point, attr, res.value)
            rows.append(LedgerRow(label, graph.n, graph.min_degree, k, "Gamma", res.value,
                                  format_witness(res.witness), _elapsed(res, timing)))
    except SolveTimeout:
        point.timed_out = True
        rows.append(LedgerRow(plabel, prod.n, prod.min_degree, k, "Gamma", verdict=TIMED_OUT))
        return point, rows
    conj = cl.check_claim("C14", g=lg, h=lh, k=k)
    point.checks.append(conj)
    rows.append(LedgerRow(plabel, prod.n, prod.min_degree, k, "Gamma", point.gamma_product, claim="C14",
                          verdict=conj.verdict))
    for cid, a, b in (("C15", lg, lh), ("C16", lg, lh), ("C16", lh, lg), ("C17", lg, lh), ("C17", lh, lg)):
        if cid == "C15" and (a, b) != (lg, lh):
            continue
        rep = cl.check_claim(cid, g=a, h=b, k=k)
        point.checks.append(rep)
        if rep.verdict != cl.INAPPLICABLE:
            rows.append(LedgerRow(f"cart({a},{b})", prod.n, prod.min_degree, k, "Gamma", point.gamma_product,
                                  claim=cid, verdict=rep.verdict))
    return point, rows


def _question_point(item: tuple[int, int, int, float | None, bool]) -> tuple[ScanPoint, list[LedgerRow]]:
    n, m, k, budget, timing = item
    label = f"cross(complete:{n},complete:{m})"
    g = generate(parse_family(label))
    point = ScanPoint(label, "2k+2", k)
    try:
        res = _solve_with_budget(g, k, budget)
    except SolveTimeout:
        point.timed_out = True
        return point, [LedgerRow(label, g.n, g.min_degree, k, "Gamma", verdict=TIMED_OUT)]
    point.gamma_product = res.value
    rep = cl.check_claim("C21", n=n, m=m, k=k)
    point.checks.append(rep)
    return point, [LedgerRow(label, g.n, g.min_degree, k, "Gamma", res.value, format_witness(res.witness),
                             _elapsed(res, timing), "C21", rep.verdict)]


def run_scan(cfg: RunConfig) -> ScanResult:
    ks = cfg.ks or [2, 3]
    if cfg.question:
        top = max(cfg.n_range) if cfg.n_range else 5
        items = [
            (n, m, k, cfg.time_budget, cfg.timing)
            for n in range(2, top + 1) for m in range(n, top + 1) if n * m <= cfg.max_n
            for k in ks if max(n, m) >= k + 1 and (n - 1) * (m - 1) >= k
        ]
        results = _map(_question_point, items, cfg.workers)
    else:
        names = cfg.families or list(DEFAULT_SCAN_FAMILIES)
        items = [
            (lg, lh, k, cfg.time_budget, cfg.timing)
            for (lg, g), (lh, h) in _pairs(names, cfg.max_n)
            for k in ks if k >= 2 and g.min_degree >= k and h.min_degree >= k
        ]
        results = _map(_scan_pair, items, cfg.workers)
    points = [p for p, _ in results]
    rows = [r for _, rs in results for r in rs]
    failed = any(c.failed for p in points for c in p.checks)
    return ScanResult(points, rows, 2 if failed else 0)


def emit(rows: Sequence[LedgerRow], cfg: RunConfig, stream: TextIO | None = None, to_stream: bool = True) -> None:
    """Append to the configured ledger file (the single writer) and optionally echo."""
    if cfg.output:
        append_ledger(rows, cfg.output, cfg.fmt)
    if to_stream:
        (stream or sys.stdout).write(format_ledger(rows, cfg.fmt))
