"""Exhaustive isomorph-free generation of small graphs.

Level-by-level vertex extension with canonical-form rejection: every class
on k+1 vertices arises from a class on k vertices by attaching one vertex
with some neighbourhood, so extending every class by every neighbourhood and
deduplicating is complete.  A hereditary filter (closed under induced
subgraphs) may prune each level without losing completeness.

This is desk-scale machinery: it seeds the small base families that the
extension chains start from and serves as the brute-force oracle in tests.
"""

from __future__ import annotations

from .arrowing import arrows
from .canon import GraphSet
from .cliques import has_clique, is_plus_kt
from .graphs import Graph, GraphError


def graph_classes(n: int, keep=None) -> list[Graph]:
    """All isomorphism classes on exactly n vertices, canonically labeled.

    ``keep`` is an optional hereditary predicate applied at every level.
    """
    if n < 0:
        raise GraphError("negative vertex count")
    if n == 0:
        return [Graph.empty(0)]
    level = [Graph.empty(1)]
    if keep is not None:
        level = [g for g in level if keep(g)]
    for _ in range(n - 1):
        level = extend_classes(level, keep)
    return level


def extend_classes(level: list[Graph], keep=None) -> list[Graph]:
    """All classes on k+1 vertices that contain some member of ``level``
    (a set of k-vertex classes) as an induced subgraph."""
    out = GraphSet()
    for g in level:
        k = g.n
        bit = 1 << k
        base = list(g.adj) + [0]
        for nb in range(1 << k):
            adj = list(base)
            adj[k] = nb
            rest = nb
            while rest:
                b = rest & -rest
                rest ^= b
                adj[b.bit_length() - 1] |= bit
            child = Graph(k + 1, adj)
            if keep is None or keep(child):
                out.insert(child)
    return out.graphs()


def bounded_classes(n: int, q: int, t: int) -> list[Graph]:
    """All classes on n vertices with clique number below q and independence
    number at most t.  Same level scheme as graph_classes, but the per-child
    test is local to the attached vertex: a new K_q needs a K_{q-1} in its
    neighbourhood, a new independent (t+1)-set needs t independent
    non-neighbours."""
    from . import _kernels as K
    from .cliques import complement_adj

    if n < 0:
        raise GraphError("negative vertex count")
    if q < 2 or t < 1:
        return []
    if n == 0:
        return [Graph.empty(0)]
    impl = K.impl
    level = [Graph.empty(1)]
    for _ in range(n - 1):
        out = GraphSet()
        for g in level:
            k = g.n
            bit = 1 << k
            full = (1 << k) - 1
            base = list(g.adj) + [0]
            cadj = complement_adj(g.adj)
            for nb in range(1 << k):
                if impl.has_clique_within(g.adj, nb, q - 1):
                    continue
                if impl.has_clique_within(cadj, full ^ nb, t):
                    continue
                adj = list(base)
                adj[k] = nb
                rest = nb
                while rest:
                    b = rest & -rest
                    rest ^= b
                    adj[b.bit_length() - 1] |= bit
                out.insert(Graph(k + 1, adj))
        level = out.graphs()
    return level


def ramsey_graphs(k: int, l: int, n: int) -> list[Graph]:
    """Classes on n vertices with no K_k and no independent set of size l."""
    return bounded_classes(n, k, l - 1)


def maximal_family_exhaustive(avec, q: int, n: int, t: int) -> GraphSet:
    """Brute-force construction of the edge-maximal members of
    H(avec; q; n) with independence number at most t.

    Levels are pruned to clique number below q and independence number at
    most t (both hereditary); the arrowing and maximality filters apply on
    the final level only.
    """
    entries = tuple(avec)
    out = GraphSet()
    for g in bounded_classes(n, q, t):
        if is_plus_kt(g, q) and arrows(g, entries):
            out.insert(g)
    return out
