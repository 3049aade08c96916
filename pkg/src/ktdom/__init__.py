"""Exact k-tuple total domination: solvers, hypergraph transversals and claim checks."""

from .claims import REGISTRY, ClaimReport, check_claim
from .domination import (
    Gamma_ktt,
    OpnWitness,
    SolveResult,
    count_minimal_ktds,
    enumerate_minimal_ktds,
    gamma_ktt,
    is_gamma_external,
    is_ktds,
    is_minimal_ktds,
    opn_k,
)
from .errors import (
    DomainError,
    InapplicableError,
    KtdomError,
    ParameterError,
    ParseError,
    ResourceError,
    SolveTimeout,
)
from .families import generate, parse_family
from .graph import Graph, VertexSet, cartesian_product, cross_product, disjoint_union, join, k_join
from .hypergraph import Hypergraph, is_k_transversal, is_minimal_k_transversal, open_neighborhood_hypergraph, tau_k, upsilon_k
from .io import parse_graph, parse_hypergraph, serialize_graph, serialize_hypergraph

__all__ = [
    "REGISTRY", "ClaimReport", "check_claim",
    "Gamma_ktt", "OpnWitness", "SolveResult", "count_minimal_ktds", "enumerate_minimal_ktds", "gamma_ktt",
    "is_gamma_external", "is_ktds", "is_minimal_ktds", "opn_k",
    "DomainError", "InapplicableError", "KtdomError", "ParameterError", "ParseError", "ResourceError", "SolveTimeout",
    "generate", "parse_family",
    "Graph", "VertexSet", "cartesian_product", "cross_product", "disjoint_union", "join", "k_join",
    "Hypergraph", "is_k_transversal", "is_minimal_k_transversal", "open_neighborhood_hypergraph", "tau_k", "upsilon_k",
    "parse_graph", "parse_hypergraph", "serialize_graph", "serialize_hypergraph",
]
