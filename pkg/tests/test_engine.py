import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ktdom import engine
from ktdom.errors import ResourceError, SolveTimeout
from ktdom.graph import bits_of
from oracles import lower_upper, minimal_covers


@st.composite
def systems(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, 3))
    sets = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=8))
    sets = [s for s in sets if bin(s).count("1") >= k]
    if not sets:
        sets = [(1 << n) - 1]
        k = min(k, n)
    return engine.System(n, tuple(sets), k)


def _as_sets(system):
    return [set(bits_of(e)) for e in system.sets]


def _least(masks):
    return min(masks)


@settings(max_examples=120, deadline=None)
@given(systems())
def test_solvers_match_oracle(system):
    sets = _as_sets(system)
    bounds = lower_upper(system.n, sets, system.k)
    mins = [sum(1 << v for v in s) for s in minimal_covers(system.n, sets, system.k)]
    for method in ("scan", "bnb"):
        for decompose in (True, False):
            lo = engine.solve(system, "min", method=method, decompose=decompose)
            hi = engine.solve(system, "max", method=method, decompose=decompose)
            assert (lo.value, hi.value) == bounds
            # least witness among all optimal minimal sets
            assert hi.mask == _least(m for m in mins if bin(m).count("1") == hi.value)
            assert engine.is_feasible(system, lo.mask)
            assert engine.is_minimal(system, hi.mask)


@settings(max_examples=80, deadline=None)
@given(systems(max_n=8))
def test_enumeration_matches_oracle(system):
    want = sorted(sum(1 << v for v in s) for s in minimal_covers(system.n, _as_sets(system), system.k))
    assert list(engine.enumerate_minimal(system, method="scan")) == want
    assert list(engine.enumerate_minimal(system, method="bnb")) == want


@settings(max_examples=60, deadline=None)
@given(systems(max_n=9))
def test_minimal_predicate_is_deletion_test(system):
    for mask in range(1 << system.n):
        deletion = engine.is_feasible(system, mask) and all(
            not engine.is_feasible(system, mask & ~(1 << v)) for v in bits_of(mask)
        )
        assert engine.is_minimal(system, mask) == deletion


def test_components_split_and_drop_unused():
    system = engine.System(5, (0b00011, 0b01100), 1)
    parts = engine.components(system)
    assert [verts for verts, _ in parts] == [[0, 1], [2, 3]]


def test_workers_do_not_change_result():
    # K_6 box K_3 style dense system on 18 vertices goes through the chunked scan
    n = 18
    sets = tuple(((1 << n) - 1) & ~(1 << v) for v in range(n))
    system = engine.System(n, sets, 3)
    one = engine.solve(system, "max", method="scan", workers=1)
    many = engine.solve(system, "max", method="scan", workers=3)
    assert (one.value, one.mask) == (many.value, many.mask) == (4, 0b1111)


def test_resource_limit(monkeypatch):
    monkeypatch.setenv("KTDOM_MAX_N", "6")
    system = engine.System(7, (0b1111111,), 1)
    with pytest.raises(ResourceError, match="KTDOM_MAX_N"):
        engine.solve(system, "min")
    monkeypatch.setenv("KTDOM_MAX_N", "7")
    assert engine.solve(system, "min").value == 1


def test_timeout():
    n = 24
    sets = tuple(((1 << n) - 1) & ~(1 << v) & ~(1 << ((v + 1) % n)) for v in range(n))
    with pytest.raises(SolveTimeout):
        engine.solve(engine.System(n, sets, 2), "max", method="bnb", time_budget=1e-9)
