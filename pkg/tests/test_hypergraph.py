import pytest
from hypothesis import given, settings

from ktdom.domination import Gamma_ktt, gamma_ktt
from ktdom.errors import DomainError, ParameterError
from ktdom.families import Cycle, complete_graph, generate, parse_family
from ktdom.hypergraph import (
    Hypergraph,
    is_k_transversal,
    is_minimal_k_transversal,
    open_neighborhood_hypergraph,
    tau_k,
    upsilon_k,
)
from oracles import lower_upper
from strategies import graphs

C4 = generate(Cycle(4))


def test_open_neighborhood_examples():
    assert open_neighborhood_hypergraph(C4).edges == tuple(map(frozenset, ({1, 3}, {0, 2}, {1, 3}, {0, 2})))
    assert open_neighborhood_hypergraph(complete_graph(3)).edges == tuple(map(frozenset, ({1, 2}, {0, 2}, {0, 1})))
    star = open_neighborhood_hypergraph(generate(parse_family("multipartite:1-3")))
    sizes = sorted(len(e) for e in star.edges)
    assert sizes == [1, 1, 1, 3] and len({e for e in star.edges if len(e) == 1}) == 1
    with pytest.raises(DomainError):
        open_neighborhood_hypergraph(generate(parse_family("union(complete:1,complete:2)")))


def test_transversal_examples():
    hc4 = open_neighborhood_hypergraph(C4)
    assert is_k_transversal(hc4, range(4), 2) and is_minimal_k_transversal(hc4, range(4), 2)
    hk3 = open_neighborhood_hypergraph(complete_graph(3))
    assert is_minimal_k_transversal(hk3, {0, 1}, 1)
    h = Hypergraph(3, (frozenset({0}), frozenset({0, 1, 2})))
    assert not is_k_transversal(h, range(3), 2)


def test_solver_examples():
    assert upsilon_k(open_neighborhood_hypergraph(C4), 2).value == 4
    assert tau_k(open_neighborhood_hypergraph(complete_graph(4)), 2).value == 3
    assert tau_k(Hypergraph(3, (frozenset({0, 1, 2}),)), 2).value == 2
    with pytest.raises(DomainError):
        tau_k(Hypergraph(3, (frozenset({0}),)), 2)


def test_invalid_edges():
    with pytest.raises(ParameterError):
        Hypergraph(2, (frozenset(),))
    with pytest.raises(ParameterError):
        Hypergraph(2, (frozenset({2}),))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_random_hypergraphs_match_oracle(g):
    edges = [a for a in g.adj if a]
    if not edges:
        return
    h = Hypergraph(g.n, tuple(edges))
    for k in range(1, h.min_edge_size() + 1):
        assert (tau_k(h, k).value, upsilon_k(h, k).value) == lower_upper(h.n, [set(e) for e in edges], k)


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=2, max_n=8, min_degree=1))
def test_engine_witness_passes_deletion_test(g):
    h = open_neighborhood_hypergraph(g)
    for k in range(1, g.min_degree + 1):
        up = upsilon_k(h, k)
        assert is_minimal_k_transversal(h, up.witness, k)
        assert up.value == Gamma_ktt(g, k).value
        assert tau_k(h, k).value == gamma_ktt(g, k).value
