"""Small-graph corpora for exhaustive checks.

Graphs up to 7 vertices come from the networkx graph atlas, which lists
each isomorphism class once.
"""

from __future__ import annotations

import random
import re
from functools import lru_cache
from typing import Iterator

import networkx as nx

from .errors import ParameterError
from .graph import Graph

ATLAS_MAX_N = 7


def from_networkx(nxg: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(nxg.nodes()))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in nxg.edges()))


@lru_cache(maxsize=1)
def _atlas() -> list[nx.Graph]:
    return nx.graph_atlas_g()


def atlas_graph(index: int) -> Graph:
    atlas = _atlas()
    if not 0 <= index < len(atlas):
        raise ParameterError(f"atlas index {index} outside 0..{len(atlas) - 1}")
    return from_networkx(atlas[index])


def atlas_graphs(max_n: int, *, connected: bool, min_n: int = 1) -> Iterator[tuple[str, Graph]]:
    """Every graph (up to isomorphism) with ``min_n..max_n`` vertices, labelled ``atlas:<index>``."""
    if max_n > ATLAS_MAX_N:
        raise ParameterError(f"the atlas only covers graphs with at most {ATLAS_MAX_N} vertices")
    for idx, nxg in enumerate(_atlas()):
        n = nxg.number_of_nodes()
        if not min_n <= n <= max_n:
            continue
        if connected and not nx.is_connected(nxg):
            continue
        yield f"atlas:{idx}", from_networkx(nxg)


def random_graphs(n: int, count: int, seed: int, p: float = 0.5) -> Iterator[tuple[str, Graph]]:
    rng = random.Random(seed)
    for i in range(count):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        yield f"random:{n},{seed},{i}", Graph.from_edges(n, edges)


def random_circulant(n: int, rng: random.Random) -> Graph:
    """Circulant graph on n vertices with a random connection set."""
    half = list(range(1, n // 2 + 1))
    jumps = rng.sample(half, rng.randint(1, len(half)))
    return Graph.from_edges(n, {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps if (i + j) % n != i})


_CORPUS = re.compile(r"^(connected|all):<=(\d+)$|^random:(\d+),(\d+),(\d+)$")


def parse_corpus(text: str) -> Iterator[tuple[str, Graph]]:
    """``connected:<=7``, ``all:<=6`` or ``random:<n>,<count>,<seed>``."""
    match = _CORPUS.match(text.strip())
    if not match:
        raise ParameterError(f"bad corpus {text!r}; use connected:<=N, all:<=N or random:n,count,seed")
    if match.group(1):
        return atlas_graphs(int(match.group(2)), connected=match.group(1) == "connected")
    n, count, seed = (int(match.group(i)) for i in (3, 4, 5))
    return random_graphs(n, count, seed)
