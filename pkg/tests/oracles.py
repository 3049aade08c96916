"""Slow reference implementations built only on itertools and Python sets.

They share no code with the package so agreement is meaningful.
"""

from itertools import combinations


def neighborhoods(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def covers(sets, s, k):
    return all(len(e & s) >= k for e in sets)


def minimal_covers(n, sets, k):
    """Every inclusion-minimal S with |e & S| >= k for all e, in size order."""
    out = []
    for r in range(n + 1):
        for combo in combinations(range(n), r):
            s = set(combo)
            if covers(sets, s, k) and all(not covers(sets, s - {x}, k) for x in s):
                out.append(frozenset(s))
    return out


def lower_upper(n, sets, k):
    """(smallest, largest) size of a minimal cover, or None if there is none."""
    sizes = [len(s) for s in minimal_covers(n, sets, k)]
    return (min(sizes), max(sizes)) if sizes else None


def graph_lower_upper(n, edges, k):
    return lower_upper(n, neighborhoods(n, edges), k)


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def complete_edges(n):
    return list(combinations(range(n), 2))
