"""Generation engine for maximal K_q-free arrowing families.

Two cooperating constructions:

* ``plus_clique_descent`` walks down the edge-removal lattice from the
  edge-maximal members of a family and collects every graph of the family
  whose missing edges each complete a new (q-1)-clique.  Arrowing, the
  independence cap and the plus-clique property itself are all inherited
  upward along edge addition, so a graph failing any of them heads a
  subtree that can be skipped entirely; the search therefore touches only
  the collected set and its lower boundary.

* ``generate_family`` / ``generate_family_cone_split`` lift a complete
  family on n-r vertices (its smallest clique target lowered by one) to the
  complete family on n vertices with independence number in [r, t]: attach r
  new independent vertices whose neighbourhoods are maximal K_{q-1}-free
  sets chosen under the pair-intersection and independence-residue
  conditions, then keep the edge-maximal results that arrow the full target
  vector.  The cone-split variant restricts the expensive extension to
  cone-vertex-free hosts and recovers the coned part of the family directly
  from the one-smaller and one-sparser families.

Work units are single seed graphs; results merge through canonical
deduplication, so the output is identical for any worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from . import _kernels as K
from .arrowing import ArrowVector, arrows_adj, canonicalize
from .canon import GraphSet, canonical_graph
from .cliques import (
    complement_adj,
    cone_vertex_count,
    maximal_kt_free_subsets,
    strip_cone_vertices,
)
from .graphs import (
    CapacityError,
    Graph,
    GraphError,
    MAX_VERTICES,
    adj_to_graph6,
    bits_of,
    from_graph6,
    join,
    to_graph6,
)


@dataclass(frozen=True)
class FamilySpec:
    """Target family: vector avec, clique bound q, order n, independence
    window [r, t]."""

    avec: ArrowVector
    q: int
    n: int
    r: int
    t: int

    def __post_init__(self):
        vec = self.avec if isinstance(self.avec, ArrowVector) else ArrowVector(tuple(self.avec))
        object.__setattr__(self, "avec", vec.canonical())
        if not self.avec.entries:
            raise GraphError("empty target vector")
        if self.q <= self.avec.p:
            raise GraphError(
                f"family is empty unless q > max entry: q={self.q}, p={self.avec.p}"
            )
        if not 2 <= self.r <= self.t:
            raise GraphError(f"need 2 <= r <= t, got r={self.r}, t={self.t}")
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"order {self.n} outside 1..{MAX_VERTICES}")
        if self.n - self.r < 1:
            raise GraphError(f"order {self.n} too small for r={self.r}")

    def decremented(self) -> ArrowVector:
        return self.avec.decremented_first()

    def family_str(self) -> str:
        return f"H({self.avec}; {self.q}; {self.n})"


@dataclass
class AlgorithmResult:
    output: GraphSet
    plus_clique: GraphSet  # the descended set for the input family


def _pool_imap(fn, tasks, workers, chunksize=16):
    """Stream fn over tasks; result order is unspecified under workers > 1,
    so callers must merge into order-insensitive structures."""
    if workers <= 1:
        for t in tasks:
            yield fn(t)
        return
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        yield from pool.imap_unordered(fn, tasks, chunksize=chunksize)


def _canonical_line_adj(n, adj):
    perm = K.impl.canonical_perm(adj)
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    out = [0] * n
    for i, v in enumerate(perm):
        row = adj[v]
        m = 0
        while row:
            b = row & -row
            row ^= b
            m |= 1 << pos[b.bit_length() - 1]
        out[i] = m
    out = tuple(out)
    return adj_to_graph6(n, out), out


def _descent_worker(task):
    line, entries, q, t = task
    g = from_graph6(line)
    n, adj = g.n, g.adj
    impl = K.impl
    # Losing an edge can only shrink common neighbourhoods and add non-edges,
    # so a graph whose plus-clique test fails heads a subtree where it fails
    # everywhere: prune here.
    if not impl.is_plus_k(adj, q - 1):
        return line, False, ()
    cadj = list(complement_adj(adj))
    single = entries[0] if len(entries) == 1 else 0
    children = set()
    for u in range(n):
        row = adj[u] >> (u + 1) << (u + 1)
        for v in bits_of(row):
            bu, bv = 1 << u, 1 << v
            child = list(adj)
            child[u] &= ~bv
            child[v] &= ~bu
            # independence cap: a new independent (t+1)-set must contain both
            # endpoints, i.e. a (t-1)-clique in their common complement
            # neighbourhood
            cadj[u] |= bv
            cadj[v] |= bu
            grew = impl.has_clique_within(cadj, cadj[u] & cadj[v] & ~bu & ~bv, t - 1)
            cadj[u] &= ~bv
            cadj[v] &= ~bu
            if grew:
                continue
            if single:
                if not impl.has_clique_at_least(child, single):
                    continue
            elif not arrows_adj(child, entries):
                continue
            cline, _ = _canonical_line_adj(n, tuple(child))
            children.add(cline)
    return line, True, sorted(children)


def plus_clique_descent(maximals, avec, q, t, exclude_cone=False, workers=1):
    """All graphs of the family (avec; q; same order; independence <= t)
    whose every missing edge completes a new (q-1)-clique, one per
    isomorphism class.  ``maximals`` must be the complete edge-maximal
    family; ``avec`` is that family's own vector."""
    entries = canonicalize(avec).entries
    seeds = maximals.graphs() if isinstance(maximals, GraphSet) else list(maximals)
    result = GraphSet()
    if not seeds:
        return result
    order = seeds[0].n
    visited = set()
    frontier = []
    for g in seeds:
        if g.n != order:
            raise GraphError("descent seeds must share a vertex count")
        if K.impl.has_clique_at_least(g.adj, q):
            raise GraphError(f"seed has a K_{q}")
        if K.impl.has_clique_at_least(complement_adj(g.adj), t + 1):
            raise GraphError(f"seed has independence number above {t}")
        if not arrows_adj(g.adj, entries):
            raise GraphError(f"seed does not arrow ({', '.join(map(str, entries))})")
        line = to_graph6(canonical_graph(g))
        if line not in visited:
            visited.add(line)
            frontier.append(line)
    # Breadth-first over the edge-removal lattice with canonical rejection;
    # frontiers hold graph6 lines only, keeping big levels cheap.
    while frontier:
        tasks = ((line, entries, q, t) for line in frontier)
        nxt = []
        for line, plusk, children in _pool_imap(_descent_worker, tasks, workers):
            if plusk:
                result.insert_canonical(line, from_graph6(line))
            for cline in children:
                if cline not in visited:
                    visited.add(cline)
                    nxt.append(cline)
        frontier = nxt
    if exclude_cone:
        filtered = GraphSet()
        for g in result:
            if cone_vertex_count(g) == 0:
                filtered.insert_canonical(to_graph6(g), g)
        return filtered
    return result


def valid_multisets(h: Graph, q: int, r: int, t: int, subsets=None):
    """The r-element multisets of maximal K_{q-1}-free vertex sets of h that
    can serve as neighbourhoods of r new independent vertices: every pair
    (repeats included) intersects in a set carrying a K_{q-2}, and deleting
    the union of any k of them leaves independence number at most t - k.
    Returned as tuples of masks in nondecreasing set order."""
    if subsets is None:
        subsets = maximal_kt_free_subsets(h, q - 1)
    impl = K.impl
    adj = h.adj
    full = h.full_mask()
    cadj = complement_adj(adj)
    alpha_rest = {}

    def rest_ok(union, k):
        got = alpha_rest.get(union)
        if got is None:
            got = impl.max_clique_size_within(cadj, full & ~union)
            alpha_rest[union] = got
        return got <= t - k

    cand = [
        i
        for i, M in enumerate(subsets)
        if impl.has_clique_within(adj, M, q - 2) and rest_ok(M, 1)
    ]
    pair_ok = {}

    def compatible(i, j):
        key = (i, j) if i <= j else (j, i)
        got = pair_ok.get(key)
        if got is None:
            got = impl.has_clique_within(adj, subsets[i] & subsets[j], q - 2)
            pair_ok[key] = got
        return got

    out = []
    chosen = []

    def rec(start):
        d = len(chosen)
        if d == r:
            out.append(tuple(subsets[i] for i in chosen))
            return
        for pos in range(start, len(cand)):
            i = cand[pos]
            if any(not compatible(j, i) for j in chosen):
                continue
            # residue condition for every position subset ending at the new slot
            ok = True
            for sub in range(1 << d):
                union = subsets[i]
                k = 1
                rest = sub
                while rest:
                    b = rest & -rest
                    rest ^= b
                    union |= subsets[chosen[b.bit_length() - 1]]
                    k += 1
                if not rest_ok(union, k):
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(i)
            rec(pos)
            chosen.pop()

    rec(0)
    return out


def attach_vertices(h: Graph, masks) -> Graph:
    """h plus len(masks) new pairwise non-adjacent vertices, the j-th one
    adjacent exactly to masks[j]."""
    r = len(masks)
    n = h.n + r
    if n > MAX_VERTICES:
        raise CapacityError(f"extension would need {n} vertices")
    adj = list(h.adj) + [0] * r
    for j, mask in enumerate(masks):
        vj = h.n + j
        adj[vj] = mask
        for u in bits_of(mask):
            adj[u] |= 1 << vj
    return Graph(n, adj)


def _extension_worker(task):
    line, entries, q, r, t = task
    h = from_graph6(line)
    impl = K.impl
    results = set()
    for masks in valid_multisets(h, q, r, t):
        g = attach_vertices(h, masks)
        if impl.is_plus_k(g.adj, q) and arrows_adj(g.adj, entries):
            cline, _ = _canonical_line_adj(g.n, g.adj)
            results.add(cline)
    return sorted(results)


def _extend_hosts(hosts, spec, workers):
    entries = spec.avec.entries
    tasks = (
        (to_graph6(g), entries, spec.q, spec.r, spec.t) for g in hosts
    )
    out = GraphSet()
    for cands in _pool_imap(_extension_worker, tasks, workers):
        for line in cands:
            out.insert_canonical(line, from_graph6(line))
    return out


def _check_input_order(seeds, expected, what):
    for g in seeds:
        if g.n != expected:
            raise GraphError(f"{what} must have {expected} vertices, found {g.n}")


def generate_family(spec: FamilySpec, seeds, workers=1, descended=None) -> AlgorithmResult:
    """Complete edge-maximal family for ``spec`` (independence in [r, t])
    from the complete maximal family of the decremented vector on n - r
    vertices.  ``descended`` may carry a precomputed plus-clique set for the
    input family (e.g. reloaded from a checkpoint)."""
    seeds = seeds if isinstance(seeds, GraphSet) else _as_graph_set(seeds)
    _check_input_order(seeds, spec.n - spec.r, "input family")
    aprime = descended
    if aprime is None:
        aprime = plus_clique_descent(
            seeds, spec.decremented(), spec.q, spec.t, workers=workers
        )
    output = _extend_hosts(aprime.graphs(), spec, workers)
    return AlgorithmResult(output=output, plus_clique=aprime)


def generate_family_cone_split(
    spec: FamilySpec, seeds, cone_seeds, workers=1, descended=None
) -> AlgorithmResult:
    """Same output as generate_family, computed by extending only the
    cone-vertex-free part of the descended set.  ``cone_seeds`` is the
    complete maximal family of the decremented vector with clique bound
    q - 1 on n - 1 vertices; it contributes the coned outputs directly."""
    seeds = seeds if isinstance(seeds, GraphSet) else _as_graph_set(seeds)
    cone_seeds = (
        cone_seeds if isinstance(cone_seeds, GraphSet) else _as_graph_set(cone_seeds)
    )
    _check_input_order(seeds, spec.n - spec.r, "input family")
    _check_input_order(cone_seeds, spec.n - 1, "cone input family")
    aprime = descended
    if aprime is None:
        aprime = plus_clique_descent(
            seeds, spec.decremented(), spec.q, spec.t, workers=workers
        )
    hosts = [g for g in aprime.graphs() if cone_vertex_count(g) == 0]
    output = _extend_hosts(hosts, spec, workers)
    entries = spec.avec.entries
    if spec.t > spec.r:
        for w in seeds.graphs():
            if cone_vertex_count(w) == 1 and arrows_adj(w.adj, entries):
                output.insert(join(Graph.empty(spec.r + 1), strip_cone_vertices(w)))
    impl = K.impl
    for h in cone_seeds.graphs():
        if impl.has_clique_at_least(complement_adj(h.adj), spec.r):
            g = join(Graph.complete(1), h)
            if arrows_adj(g.adj, entries):
                output.insert(g)
    return AlgorithmResult(output=output, plus_clique=aprime)


def complete_base(avec, q, n, t) -> GraphSet:
    """The single-complete-graph base family: for a one-entry vector with
    a1 <= n <= q - 1 the edge-maximal family on n vertices is {K_n}."""
    vec = canonicalize(avec)
    if len(vec.entries) != 1:
        raise GraphError(f"complete base needs a single-entry vector, got ({vec})")
    a1 = vec.entries[0]
    if not a1 <= n <= q - 1:
        raise GraphError(f"complete base needs a1 <= n <= q-1, got a1={a1}, n={n}, q={q}")
    out = GraphSet()
    out.insert(Graph.complete(n))
    return out


def _as_graph_set(graphs) -> GraphSet:
    out = GraphSet()
    for g in graphs:
        out.insert(g)
    return out
