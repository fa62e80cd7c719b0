"""Bitset kernels: clique search, free-partition search, canonical labeling.

Pure-Python reference implementation.  ``_kernels_cy`` is a compiled port of
this module and has to stay behaviourally identical, including tie-breaking
and witness choices; tests/test_kernels.py compares the two on random inputs.

A graph arrives as a sequence ``adj`` of per-vertex neighbour bitmasks over
vertex indices 0..n-1 (symmetric, no loops, n <= 64).  Vertex subsets are
plain int masks.
"""

from __future__ import annotations

BACKEND = "python"

# Automorphisms recorded during canonical labeling are used only for search
# pruning, so capping the store is safe.  The compiled twin uses the same cap.
MAX_AUT_GENERATORS = 4096


def _color_bounds(adj, P):
    # Greedy-colour the candidate mask P into independent classes.  Returns
    # (vertices, bounds) where bounds is nondecreasing and bounds[i] is an
    # upper bound on the largest clique inside P restricted to
    # vertices[:i + 1].
    order = []
    bounds = []
    rest = P
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            bit = avail & -avail
            v = bit.bit_length() - 1
            order.append(v)
            bounds.append(color)
            rest ^= bit
            avail = (avail ^ bit) & ~adj[v]
    return order, bounds


def max_clique_size_within(adj, mask):
    """Clique number of the subgraph induced on the vertex mask."""
    if not mask:
        return 0
    best = 0

    def expand(P, size):
        nonlocal best
        order, bounds = _color_bounds(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            if size + 1 > best:
                best = size + 1
            sub = P & adj[v]
            if sub:
                expand(sub, size + 1)
            P ^= 1 << v

    expand(mask, 0)
    return best


def max_clique_size(adj):
    return max_clique_size_within(adj, (1 << len(adj)) - 1)


def has_clique_within(adj, mask, t):
    """True iff the subgraph induced on mask contains a t-clique."""
    if t <= 0:
        return True
    if t == 1:
        return mask != 0
    if mask.bit_count() < t:
        return False

    def expand(P, size):
        order, bounds = _color_bounds(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] < t:
                return False
            v = order[i]
            if size + 1 >= t:
                return True
            sub = P & adj[v]
            if sub and expand(sub, size + 1):
                return True
            P ^= 1 << v
        return False

    return expand(mask, 0)


def has_clique_at_least(adj, t):
    return has_clique_within(adj, (1 << len(adj)) - 1, t)


def is_plus_k(adj, t):
    """True iff adding any missing edge creates a new t-clique."""
    if t <= 2:
        return True
    n = len(adj)
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            if not (au >> v) & 1:
                if not has_clique_within(adj, au & adj[v], t - 2):
                    return False
    return True


def free_partition(adj, limits):
    """Partition the vertices into len(limits) classes with the clique number
    of class i at most limits[i].  Returns a tuple of class masks, or None
    when no such partition exists.  Deterministic: vertices are placed in
    order of decreasing degree (ties by index) and classes are tried left to
    right, skipping repeated empty classes with equal limits."""
    n = len(adj)
    s = len(limits)
    if n == 0:
        return (0,) * s
    if s == 0:
        return None
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    classes = [0] * s

    def place(i):
        if i == n:
            return True
        v = order[i]
        av = adj[v]
        bit = 1 << v
        tried_empty = []
        for c in range(s):
            cur = classes[c]
            if cur == 0:
                if limits[c] in tried_empty:
                    continue
                tried_empty.append(limits[c])
            if has_clique_within(adj, cur & av, limits[c]):
                continue
            classes[c] = cur | bit
            if place(i + 1):
                return True
            classes[c] = cur
        return False

    if place(0):
        return tuple(classes)
    return None


def _encode(adj, perm):
    # Upper-triangle bits of the relabeled graph, column-major, packed
    # MSB-first; lexicographic byte order equals bit order, and the bit
    # sequence is the graph6 edge stream.
    n = len(perm)
    out = bytearray((n * (n - 1) // 2 + 7) // 8)
    k = 0
    for j in range(1, n):
        aj = adj[perm[j]]
        for i in range(j):
            if (aj >> perm[i]) & 1:
                out[k >> 3] |= 0x80 >> (k & 7)
            k += 1
    return bytes(out)


def _refine(adj, cells):
    # Equitable refinement of an ordered partition (list of cell masks).
    # On a split the cell is replaced in place by its fragments ordered by
    # neighbour count; the scan restarts.  All choices depend only on the
    # partition structure, which keeps the outcome isomorphism-invariant.
    cells = list(cells)
    while True:
        stable = True
        for W in cells:
            for ci in range(len(cells)):
                C = cells[ci]
                if C.bit_count() <= 1:
                    continue
                groups = {}
                m = C
                while m:
                    b = m & -m
                    m ^= b
                    k = (adj[b.bit_length() - 1] & W).bit_count()
                    groups[k] = groups.get(k, 0) | b
                if len(groups) > 1:
                    cells[ci : ci + 1] = [groups[k] for k in sorted(groups)]
                    stable = False
                    break
            if not stable:
                break
        if stable:
            return cells


def _same_orbit(generators, fixed, tried, v, n):
    # Is v in the orbit of some vertex of the tried mask under the subgroup
    # of recorded automorphisms that fix the individualized prefix pointwise?
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        ok = True
        f = fixed
        while f:
            b = f & -f
            f ^= b
            u = b.bit_length() - 1
            if g[u] != u:
                ok = False
                break
        if not ok:
            continue
        for u in range(n):
            ru, rv = find(u), find(g[u])
            if ru != rv:
                parent[ru] = rv
    rv = find(v)
    m = tried
    while m:
        b = m & -m
        m ^= b
        if find(b.bit_length() - 1) == rv:
            return True
    return False


def canonical_perm(adj):
    """Permutation p (position -> original vertex) whose relabeling minimises
    the upper-triangle adjacency encoding.  Complete isomorphism invariant:
    two graphs get equal canonical encodings iff they are isomorphic."""
    n = len(adj)
    if n <= 1:
        return tuple(range(n))
    full = (1 << n) - 1

    best = {"code": None, "perm": None}
    generators = []

    def leaf(cells):
        perm = tuple(c.bit_length() - 1 for c in cells)
        code = _encode(adj, perm)
        if best["code"] is None or code < best["code"]:
            best["code"] = code
            best["perm"] = perm
        elif code == best["code"] and len(generators) < MAX_AUT_GENERATORS:
            bp = best["perm"]
            g = [0] * n
            for i in range(n):
                g[bp[i]] = perm[i]
            generators.append(tuple(g))

    def search(cells, fixed):
        ti = -1
        size = 65
        for i, c in enumerate(cells):
            pc = c.bit_count()
            if 1 < pc < size:
                ti = i
                size = pc
        if ti < 0:
            leaf(cells)
            return
        T = cells[ti]
        tried = 0
        m = T
        while m:
            b = m & -m
            m ^= b
            if tried and generators and _same_orbit(
                generators, fixed, tried, b.bit_length() - 1, n
            ):
                tried |= b
                continue
            child = cells[:ti] + [b, T ^ b] + cells[ti + 1 :]
            search(_refine(adj, child), fixed | b)
            tried |= b

    search(_refine(adj, [full]), 0)
    return best["perm"]
