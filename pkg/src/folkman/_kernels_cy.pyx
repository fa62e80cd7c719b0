# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernels_py.

Line-for-line port: every function must return exactly what the pure-Python
implementation returns, including witness choices and tie-breaking, so the
two backends stay interchangeable (tests/test_kernels.py enforces parity).
"""

from libc.string cimport memcmp, memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "compiled"
MAX_AUT_GENERATORS = 4096

DEF MAXN = 64
DEF MAXGEN = 4096
DEF CODEBYTES = 512


cdef inline int popc(u64 x) nogil:
    return __builtin_popcountll(x)

cdef inline int ctz(u64 x) nogil:
    return __builtin_ctzll(x)


cdef int _load(object adj, u64* out) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > MAXN:
        raise ValueError(f"at most {MAXN} vertices supported, got {n}")
    for i in range(n):
        out[i] = adj[i]
    return n


# -- greedy colouring bound ---------------------------------------------------

cdef int _color_bounds(u64* adj, u64 P, int* order, int* bounds) nogil:
    cdef int cnt = 0, color = 0, v
    cdef u64 rest = P, avail, bit
    while rest:
        color += 1
        avail = rest
        while avail:
            bit = avail & (0 - avail)
            v = ctz(bit)
            order[cnt] = v
            bounds[cnt] = color
            cnt += 1
            rest ^= bit
            avail = (avail ^ bit) & ~adj[v]
    return cnt


# -- max clique ---------------------------------------------------------------

cdef void _mc_expand(u64* adj, u64 P, int size, int* best) nogil:
    cdef int order[MAXN]
    cdef int bounds[MAXN]
    cdef int cnt = _color_bounds(adj, P, order, bounds)
    cdef int i, v
    cdef u64 sub
    for i in range(cnt - 1, -1, -1):
        if size + bounds[i] <= best[0]:
            return
        v = order[i]
        if size + 1 > best[0]:
            best[0] = size + 1
        sub = P & adj[v]
        if sub:
            _mc_expand(adj, sub, size + 1, best)
        P ^= (<u64>1) << v


cdef int _max_clique_within(u64* adj, u64 mask) nogil:
    cdef int best = 0
    if mask:
        _mc_expand(adj, mask, 0, &best)
    return best


def max_clique_size_within(adj, mask):
    cdef u64 a[MAXN]
    _load(adj, a)
    return _max_clique_within(a, <u64>mask)


def max_clique_size(adj):
    cdef u64 a[MAXN]
    cdef int n = _load(adj, a)
    cdef u64 full = 0 if n == 0 else (<u64>(-1)) >> (MAXN - n)
    return _max_clique_within(a, full)


# -- clique existence ---------------------------------------------------------

cdef bint _hc_expand(u64* adj, u64 P, int size, int t) nogil:
    cdef int order[MAXN]
    cdef int bounds[MAXN]
    cdef int cnt = _color_bounds(adj, P, order, bounds)
    cdef int i, v
    cdef u64 sub
    for i in range(cnt - 1, -1, -1):
        if size + bounds[i] < t:
            return False
        v = order[i]
        if size + 1 >= t:
            return True
        sub = P & adj[v]
        if sub and _hc_expand(adj, sub, size + 1, t):
            return True
        P ^= (<u64>1) << v
    return False


cdef bint _has_clique_within(u64* adj, u64 mask, int t) nogil:
    if t <= 0:
        return True
    if t == 1:
        return mask != 0
    if popc(mask) < t:
        return False
    return _hc_expand(adj, mask, 0, t)


def has_clique_within(adj, mask, t):
    cdef u64 a[MAXN]
    _load(adj, a)
    return _has_clique_within(a, <u64>mask, <int>t)


def has_clique_at_least(adj, t):
    cdef u64 a[MAXN]
    cdef int n = _load(adj, a)
    cdef u64 full = 0 if n == 0 else (<u64>(-1)) >> (MAXN - n)
    return _has_clique_within(a, full, <int>t)


# -- plus-clique test ---------------------------------------------------------

def is_plus_k(adj, t):
    cdef u64 a[MAXN]
    cdef int n = _load(adj, a)
    cdef int tt = t
    cdef int u, v
    cdef u64 au
    if tt <= 2:
        return True
    for u in range(n):
        au = a[u]
        for v in range(u + 1, n):
            if not (au >> v) & 1:
                if not _has_clique_within(a, au & a[v], tt - 2):
                    return False
    return True


# -- free partition -----------------------------------------------------------

cdef bint _fp_place(u64* adj, int n, int s, int* order, int* limits,
                    u64* classes, int i) nogil:
    if i == n:
        return True
    cdef int v = order[i]
    cdef u64 av = adj[v]
    cdef u64 bit = (<u64>1) << v
    cdef u64 cur
    cdef int tried_empty[MAXN]
    cdef int ne = 0
    cdef int c, j
    cdef bint dup
    for c in range(s):
        cur = classes[c]
        if cur == 0:
            dup = False
            for j in range(ne):
                if tried_empty[j] == limits[c]:
                    dup = True
                    break
            if dup:
                continue
            tried_empty[ne] = limits[c]
            ne += 1
        if _has_clique_within(adj, cur & av, limits[c]):
            continue
        classes[c] = cur | bit
        if _fp_place(adj, n, s, order, limits, classes, i + 1):
            return True
        classes[c] = cur
    return False


def free_partition(adj, limits):
    cdef u64 a[MAXN]
    cdef int n = _load(adj, a)
    cdef int s = len(limits)
    cdef int lim[MAXN]
    cdef int order[MAXN]
    cdef u64 classes[MAXN]
    cdef int i, j, v, key
    if s > MAXN:
        raise ValueError(f"at most {MAXN} colour classes supported")
    if n == 0:
        return (0,) * s
    if s == 0:
        return None
    for i in range(s):
        lim[i] = limits[i]
        classes[i] = 0
    # insertion sort by (-degree, vertex); keys are distinct per vertex
    cdef int deg[MAXN]
    for v in range(n):
        deg[v] = popc(a[v])
        order[v] = v
    for i in range(1, n):
        v = order[i]
        key = deg[v]
        j = i - 1
        while j >= 0 and (deg[order[j]] < key or (deg[order[j]] == key and order[j] > v)):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = v
    if _fp_place(a, n, s, order, lim, classes, 0):
        return tuple(classes[i] for i in range(s))
    return None


# -- canonical labeling -------------------------------------------------------

cdef u64 _cadj[MAXN]
cdef int _cn = 0
cdef int _ccodelen = 0
cdef bint _has_best = False
cdef unsigned char _best_code[CODEBYTES]
cdef int _best_perm[MAXN]
cdef int _ngens = 0
cdef unsigned char _gens[MAXGEN * MAXN]


cdef void _encode(int* perm, unsigned char* out) nogil:
    cdef int k = 0, i, j
    cdef u64 aj
    memset(out, 0, _ccodelen)
    for j in range(1, _cn):
        aj = _cadj[perm[j]]
        for i in range(j):
            if (aj >> perm[i]) & 1:
                out[k >> 3] |= 0x80 >> (k & 7)
            k += 1


cdef int _refine(u64* cells, int nc) nogil:
    cdef bint stable
    cdef int wi, ci, k, nfrag, i
    cdef u64 W, C, m, b
    cdef u64 groups[MAXN + 1]
    while True:
        stable = True
        for wi in range(nc):
            W = cells[wi]
            for ci in range(nc):
                C = cells[ci]
                if popc(C) <= 1:
                    continue
                for k in range(_cn + 1):
                    groups[k] = 0
                m = C
                while m:
                    b = m & (0 - m)
                    m ^= b
                    groups[popc(_cadj[ctz(b)] & W)] |= b
                nfrag = 0
                for k in range(_cn + 1):
                    if groups[k]:
                        nfrag += 1
                if nfrag > 1:
                    # shift the tail and splice the fragments in count order
                    for i in range(nc - 1, ci, -1):
                        cells[i + nfrag - 1] = cells[i]
                    i = ci
                    for k in range(_cn + 1):
                        if groups[k]:
                            cells[i] = groups[k]
                            i += 1
                    nc += nfrag - 1
                    stable = False
                    break
            if not stable:
                break
        if stable:
            return nc


cdef int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef bint _same_orbit(u64 fixed, u64 tried, int v) nogil:
    cdef int parent[MAXN]
    cdef int i, gi, u, ru, rv
    cdef u64 f, b, m
    cdef bint ok
    for i in range(_cn):
        parent[i] = i
    for gi in range(_ngens):
        ok = True
        f = fixed
        while f:
            b = f & (0 - f)
            f ^= b
            u = ctz(b)
            if _gens[gi * MAXN + u] != u:
                ok = False
                break
        if not ok:
            continue
        for u in range(_cn):
            ru = _find(parent, u)
            rv = _find(parent, _gens[gi * MAXN + u])
            if ru != rv:
                parent[ru] = rv
    rv = _find(parent, v)
    m = tried
    while m:
        b = m & (0 - m)
        m ^= b
        if _find(parent, ctz(b)) == rv:
            return True
    return False


cdef void _leaf(u64* cells, int nc) nogil:
    global _has_best, _ngens
    cdef int perm[MAXN]
    cdef unsigned char code[CODEBYTES]
    cdef int i, cmp
    for i in range(nc):
        perm[i] = ctz(cells[i])
    _encode(perm, code)
    if not _has_best:
        cmp = -1
    else:
        cmp = memcmp(code, _best_code, _ccodelen)
    if cmp < 0:
        memcpy(_best_code, code, _ccodelen)
        for i in range(_cn):
            _best_perm[i] = perm[i]
        _has_best = True
    elif cmp == 0 and _ngens < MAXGEN:
        for i in range(_cn):
            _gens[_ngens * MAXN + _best_perm[i]] = <unsigned char>perm[i]
        _ngens += 1


cdef void _search(u64* cells, int nc, u64 fixed) nogil:
    cdef int ti = -1, size = MAXN + 1, i, pc, cn
    cdef u64 T, m, b, tried
    cdef u64 child[MAXN]
    for i in range(nc):
        pc = popc(cells[i])
        if 1 < pc < size:
            ti = i
            size = pc
    if ti < 0:
        _leaf(cells, nc)
        return
    T = cells[ti]
    tried = 0
    m = T
    while m:
        b = m & (0 - m)
        m ^= b
        if tried != 0 and _ngens > 0 and _same_orbit(fixed, tried, ctz(b)):
            tried |= b
            continue
        for i in range(ti):
            child[i] = cells[i]
        child[ti] = b
        child[ti + 1] = T ^ b
        for i in range(ti + 1, nc):
            child[i + 1] = cells[i]
        cn = _refine(child, nc + 1)
        _search(child, cn, fixed | b)
        tried |= b


def canonical_perm(adj):
    global _cn, _ccodelen, _has_best, _ngens
    cdef int n = len(adj)
    cdef u64 cells[MAXN]
    cdef int nc, i
    if n <= 1:
        return tuple(range(n))
    _load(adj, _cadj)
    _cn = n
    _ccodelen = (n * (n - 1) // 2 + 7) // 8
    _has_best = False
    _ngens = 0
    cells[0] = (<u64>(-1)) >> (MAXN - n)
    nc = _refine(cells, 1)
    _search(cells, nc, 0)
    return tuple(_best_perm[i] for i in range(n))
