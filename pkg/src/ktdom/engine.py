"""Exact subset search over covering systems.

A covering system is ``(n, sets, k)`` where every set is a bitmask over
``n`` vertices. A vertex subset ``S`` is *feasible* when every set holds at
least ``k`` members of ``S``, and *minimal* when in addition each member of
``S`` lies in some set holding exactly ``k`` members of ``S``. k-tuple total
domination uses the open neighborhoods as sets; k-transversals use the
hyperedges.

Subsets are ordered by their integer mask (bit ``v`` is vertex ``v``), so
"least" always means the smallest mask. Both search strategies visit
subsets in increasing mask order and keep only strict improvements, which
makes the reported optimum the least optimal mask regardless of how the
work is split.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Literal

import numpy as np

from .errors import ResourceError, SolveTimeout

Objective = Literal["min", "max"]

SCAN_MAX_N = 20
DEFAULT_MAX_N = 32
CHUNK_BITS = 16


def hard_limit() -> int:
    """Largest component size accepted by the solvers (``KTDOM_MAX_N`` overrides)."""
    raw = os.environ.get("KTDOM_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class System:
    n: int
    sets: tuple[int, ...]
    k: int

    @cached_property
    def containing(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, indices of the sets that contain it."""
        return tuple(
            tuple(i for i, e in enumerate(self.sets) if e >> v & 1) for v in range(self.n)
        )

    @property
    def full(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class Outcome:
    value: int
    mask: int
    nodes: int
    method: str


def is_feasible(system: System, mask: int) -> bool:
    k = system.k
    return all(popcount(e & mask) >= k for e in system.sets)


def is_minimal(system: System, mask: int) -> bool:
    """Feasible, and every member sits in a set hit exactly k times."""
    if not is_feasible(system, mask):
        return False
    tight = [popcount(e & mask) == system.k for e in system.sets]
    v = 0
    m = mask
    while m:
        if m & 1 and not any(tight[i] for i in system.containing[v]):
            return False
        m >>= 1
        v += 1
    return True


def components(system: System) -> list[tuple[list[int], System]]:
    """Split into independent subsystems; vertices keep their relative order.

    Vertices lying in no set are dropped: they never belong to a minimal
    feasible set and are never needed.
    """
    parent = list(range(system.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in system.sets:
        members = [v for v in range(system.n) if e >> v & 1]
        for v in members[1:]:
            a, b = find(members[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)

    covered = 0
    for e in system.sets:
        covered |= e
    groups: dict[int, list[int]] = {}
    for v in range(system.n):
        if covered >> v & 1:
            groups.setdefault(find(v), []).append(v)

    out = []
    for verts in sorted(groups.values()):
        local = {v: i for i, v in enumerate(verts)}
        root = find(verts[0])
        sets = []
        for e in system.sets:
            if e and find((e & -e).bit_length() - 1) == root:
                sets.append(sum(1 << local[v] for v in verts if e >> v & 1))
        out.append((verts, System(len(verts), tuple(sets), system.k)))
    return out


def _lift(mask: int, verts: list[int]) -> int:
    out = 0
    for i, v in enumerate(verts):
        if mask >> i & 1:
            out |= 1 << v
    return out


# ---------------------------------------------------------------- subset scan


def _chunk_masks(system: System, lo: int, hi: int, minimal: bool) -> np.ndarray:
    """Masks in [lo, hi) that are feasible (and minimal if requested), ascending."""
    k = system.k
    masks = np.arange(lo, hi, dtype=np.int64)
    for e in system.sets:
        masks = masks[np.bitwise_count(masks & e) >= k]
        if masks.size == 0:
            return masks
    if not minimal:
        return masks
    tight = [np.bitwise_count(masks & e) == k for e in system.sets]
    keep = np.ones(masks.size, dtype=bool)
    for v, idx in enumerate(system.containing):
        member = (masks >> v & 1).astype(bool)
        witnessed = np.zeros(masks.size, dtype=bool)
        for i in idx:
            witnessed |= tight[i]
        keep &= ~member | witnessed
    return masks[keep]


def _scan_block(system: System, objective: Objective, lo: int, hi: int, deadline: float | None):
    best_val, best_mask = None, None
    step = 1 << CHUNK_BITS
    for start in range(lo, hi, step):
        if deadline is not None and time.monotonic() > deadline:
            raise SolveTimeout("time budget exhausted during subset scan")
        cand = _chunk_masks(system, start, min(start + step, hi), objective == "max")
        if cand.size == 0:
            continue
        sizes = np.bitwise_count(cand)
        i = int(np.argmax(sizes) if objective == "max" else np.argmin(sizes))
        val = int(sizes[i])
        if best_val is None or (val > best_val if objective == "max" else val < best_val):
            best_val, best_mask = val, int(cand[i])
    return best_val, best_mask


def _scan(system: System, objective: Objective, workers: int, deadline: float | None) -> Outcome:
    total = 1 << system.n
    if workers <= 1 or total <= 1 << CHUNK_BITS:
        results = [_scan_block(system, objective, 0, total, deadline)]
    else:
        step = 1 << CHUNK_BITS
        n_chunks = total // step
        per = -(-n_chunks // workers)
        bounds = [(i * step, min((i + per) * step, total)) for i in range(0, n_chunks, per)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_block, system, objective, lo, hi, deadline) for lo, hi in bounds]
            results = [f.result() for f in futures]
    best_val, best_mask = None, None
    for val, mask in results:  # blocks are in mask order, so strict improvement keeps the least mask
        if val is None:
            continue
        if best_val is None or (val > best_val if objective == "max" else val < best_val):
            best_val, best_mask = val, mask
    if best_val is None:
        raise ValueError("covering system has no feasible subset")
    return Outcome(best_val, best_mask, total, "scan")


# ----------------------------------------------------------- branch and bound


class _Search:
    def __init__(self, system: System, need_minimal: bool, deadline: float | None) -> None:
        self.sys = system
        self.need_minimal = need_minimal
        self.deadline = deadline
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise SolveTimeout("time budget exhausted during branch-and-bound")

    def propagate(self, inc: int, exc: int) -> tuple[int, int] | None:
        """Fixpoint of the forcing rules; None when the node is dead.

        A set that can only just reach k forces its undecided members in
        (for a graph this generalizes "all neighbors of a degree-k vertex").
        A member whose only remaining witness set is already tight forces
        the rest of that set out.
        """
        sets, k, full = self.sys.sets, self.sys.k, self.sys.full
        changed = True
        while changed:
            changed = False
            und = full & ~inc & ~exc
            for e in sets:
                avail = e & ~exc
                c = popcount(avail)
                if c < k:
                    return None
                if c == k and avail & und:
                    inc |= avail & und
                    und &= ~avail
                    changed = True
            if not self.need_minimal:
                continue
            m, v = inc, 0
            while m:
                if m & 1:
                    cand = -1
                    count = 0
                    for i in self.sys.containing[v]:
                        if popcount(sets[i] & inc) <= k:
                            cand = i
                            count += 1
                            if count > 1:
                                break
                    if count == 0:
                        return None
                    if count == 1:
                        e = sets[cand]
                        if popcount(e & inc) == k and e & und:
                            exc |= e & und
                            und &= ~e
                            changed = True
                m >>= 1
                v += 1
        return inc, exc


def _bnb(system: System, objective: Objective, deadline: float | None, cap: int | None) -> Outcome:
    search = _Search(system, objective == "max", deadline)
    k, sets, full = system.k, system.sets, system.full
    best = [None, None]

    def dfs(inc: int, exc: int) -> None:
        search.tick()
        state = search.propagate(inc, exc)
        if state is None:
            return
        inc, exc = state
        und = full & ~inc & ~exc
        size = popcount(inc)
        if objective == "max":
            bound = size + popcount(und)
            if cap is not None:
                bound = min(bound, cap)
            if best[0] is not None and bound <= best[0]:
                return
        else:
            deficit = max(k - popcount(e & inc) for e in sets) if sets else 0
            if best[0] is not None and size + max(deficit, 0) >= best[0]:
                return
        if not und:
            best[0], best[1] = size, inc
            return
        v = und.bit_length() - 1
        dfs(inc, exc | 1 << v)
        dfs(inc | 1 << v, exc)

    dfs(0, 0)
    if best[0] is None:
        raise ValueError("covering system has no feasible subset")
    return Outcome(best[0], best[1], search.nodes, "bnb")


def _enumerate_bnb(system: System, deadline: float | None) -> Iterator[int]:
    search = _Search(system, True, deadline)
    full = system.full

    def dfs(inc: int, exc: int) -> Iterator[int]:
        search.tick()
        state = search.propagate(inc, exc)
        if state is None:
            return
        inc, exc = state
        und = full & ~inc & ~exc
        if not und:
            yield inc
            return
        v = und.bit_length() - 1
        yield from dfs(inc, exc | 1 << v)
        yield from dfs(inc | 1 << v, exc)

    yield from dfs(0, 0)


# ------------------------------------------------------------------ interface


def _pick_method(n: int, method: str) -> str:
    if n > hard_limit():
        raise ResourceError(
            f"component with {n} vertices exceeds the exact-search limit {hard_limit()} "
            "(set KTDOM_MAX_N to override at your own risk)"
        )
    if method == "auto":
        return "scan" if n <= SCAN_MAX_N else "bnb"
    if method not in ("scan", "bnb"):
        raise ValueError(f"unknown method {method!r}")
    return method


def solve(
    system: System,
    objective: Objective,
    *,
    method: str = "auto",
    workers: int = 1,
    time_budget: float | None = None,
    cap: int | None = None,
    decompose: bool = True,
) -> Outcome:
    """Least-mask optimum: smallest feasible set ("min") or largest minimal set ("max").

    ``cap`` is an extra upper bound on the "max" value, only used when the
    system does not split into components.
    """
    deadline = None if time_budget is None else time.monotonic() + time_budget
    parts = components(system) if decompose else [(list(range(system.n)), system)]
    if len(parts) != 1:
        cap = None
    value = mask = nodes = 0
    used = set()
    for verts, sub in parts:
        how = _pick_method(sub.n, method)
        used.add(how)
        if how == "scan":
            out = _scan(sub, objective, workers, deadline)
        else:
            out = _bnb(sub, objective, deadline, cap)
        value += out.value
        mask |= _lift(out.mask, verts)
        nodes += out.nodes
    label = "+".join(sorted(used)) or "trivial"
    return Outcome(value, mask, nodes, label)


def enumerate_minimal(system: System, *, method: str = "auto", time_budget: float | None = None) -> Iterator[int]:
    """Every minimal feasible mask, in increasing mask order."""
    deadline = None if time_budget is None else time.monotonic() + time_budget
    how = _pick_method(system.n, method)
    if how == "bnb":
        yield from _enumerate_bnb(system, deadline)
        return
    step = 1 << CHUNK_BITS
    for start in range(0, 1 << system.n, step):
        if deadline is not None and time.monotonic() > deadline:
            raise SolveTimeout("time budget exhausted during enumeration")
        for m in _chunk_masks(system, start, min(start + step, 1 << system.n), True):
            yield int(m)
