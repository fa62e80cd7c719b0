"""Clique and independence computations on bitset graphs."""

from __future__ import annotations

from . import _kernels as K
from .graphs import EdgeEditError, Graph, GraphError


def complement_adj(adj):
    n = len(adj)
    full = (1 << n) - 1
    return tuple((full ^ row) & ~(1 << v) for v, row in enumerate(adj))


def clique_number(g: Graph) -> int:
    return K.impl.max_clique_size(g.adj)


def independence_number(g: Graph) -> int:
    return K.impl.max_clique_size(complement_adj(g.adj))


def has_clique(g: Graph, t: int) -> bool:
    """True iff the clique number is at least t; short-circuits."""
    if t < 0:
        raise GraphError(f"clique size {t} negative")
    return K.impl.has_clique_at_least(g.adj, t)


def has_independent_set(g: Graph, t: int) -> bool:
    if t < 0:
        raise GraphError(f"independent set size {t} negative")
    return K.impl.has_clique_at_least(complement_adj(g.adj), t)


def edge_completes_new_clique(g: Graph, u: int, v: int, t: int) -> bool:
    """Would adding the missing edge [u, v] create a new t-clique?"""
    if u == v:
        raise EdgeEditError(f"loop [{u}, {v}]")
    if g.has_edge(u, v):
        raise EdgeEditError(f"edge [{u}, {v}] already present")
    return K.impl.has_clique_within(g.adj, g.adj[u] & g.adj[v], t - 2)


def is_plus_kt(g: Graph, t: int) -> bool:
    """True iff every missing edge would create a new t-clique (vacuously
    true for complete graphs)."""
    if t < 2:
        raise GraphError(f"plus-clique threshold {t} below 2")
    return K.impl.is_plus_k(g.adj, t)


def is_maximal_kq_free(g: Graph, q: int) -> bool:
    """Maximality within the K_q-free world: no edge can be added without
    raising the clique number to q.  Requires clique number below q."""
    if has_clique(g, q):
        raise GraphError(f"clique number is not below {q}")
    return is_plus_kt(g, q)


def maximal_kt_free_subsets(g: Graph, t: int) -> list[int]:
    """All inclusion-maximal vertex masks whose induced subgraph has no
    K_t, in ascending mask order.

    Recursive include/exclude over vertices; X holds excluded vertices that
    could still be added (vertices blocked by the growing set are dropped
    for good, which is safe because blocking is monotone), so a leaf is
    maximal exactly when X is empty.
    """
    if t < 2:
        raise GraphError(f"subset clique threshold {t} below 2")
    n = g.n
    adj = g.adj
    impl = K.impl
    out = []

    def addable(S, v):
        return not impl.has_clique_within(adj, adj[v] & S, t - 1)

    def rec(S, X, i):
        if i == n:
            if X == 0:
                out.append(S)
            return
        bit = 1 << i
        if addable(S, i):
            S2 = S | bit
            X2 = 0
            m = X
            while m:
                b = m & -m
                m ^= b
                if addable(S2, b.bit_length() - 1):
                    X2 |= b
            rec(S2, X2, i + 1)
            rec(S, X | bit, i + 1)
        else:
            rec(S, X, i + 1)

    rec(0, 0, 0)
    out.sort()
    return out


def cone_vertex_count(g: Graph) -> int:
    """Vertices adjacent to all other vertices."""
    full = g.full_mask()
    return sum(1 for v in range(g.n) if g.adj[v] | (1 << v) == full)


def cone_vertex_mask(g: Graph) -> int:
    full = g.full_mask()
    m = 0
    for v in range(g.n):
        if g.adj[v] | (1 << v) == full:
            m |= 1 << v
    return m


def strip_cone_vertices(g: Graph) -> Graph:
    return g.delete_vertices(cone_vertex_mask(g))
