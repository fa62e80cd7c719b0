"""Immutable bitset graphs on at most 64 vertices, with graph6 I/O.

Vertices are 0..n-1 and every vertex subset is an int bitmask, so set algebra
is plain integer arithmetic.  Graphs are values: every edit returns a new
graph, which makes sharing across worker processes safe.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(Exception):
    pass


class CapacityError(GraphError):
    """More than 64 vertices requested."""


class EdgeEditError(GraphError):
    """Edge edit precondition violated (loop, missing or duplicate edge)."""


class Graph6ParseError(GraphError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of v."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"adjacency length {len(adj)} != n = {n}")
        if __debug__:
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                assert 0 <= row <= full, f"neighbour bits of {v} outside 0..n-1"
                assert not (row >> v) & 1, f"loop at vertex {v}"
            for v in range(n):
                for u in bits_of(adj[v]):
                    assert (adj[u] >> v) & 1, f"asymmetric edge [{u}, {v}]"
        self.n = n
        self.adj = adj

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("cycle needs at least 3 vertices")
        return cls(
            n, tuple((1 << ((v + 1) % n)) | (1 << ((v - 1) % n)) for v in range(n))
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise EdgeEditError(f"loop [{u}, {v}]")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph({self.n}, edges={sorted(self.edges())})"

    # -- queries -----------------------------------------------------------

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits_of(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.full_mask() >> (u + 1) << (u + 1)
            for v in bits_of(rest & ~self.adj[u]):
                yield (u, v)

    # -- construction operators --------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask()
        return Graph(self.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced(self, vertices) -> "Graph":
        """Subgraph induced on a mask or iterable of vertices, relabeled to
        0..k-1 in ascending original-index order."""
        mask = self._as_mask(vertices)
        keep = list(bits_of(mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            for u in bits_of(self.adj[v] & mask):
                adj[i] |= 1 << pos[u]
        return Graph(len(keep), adj)

    def delete_vertices(self, vertices) -> "Graph":
        mask = self._as_mask(vertices)
        return self.induced(self.full_mask() & ~mask)

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise EdgeEditError(f"edge [{u}, {v}] already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj)

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise EdgeEditError(f"edge [{u}, {v}] not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def relabel(self, perm) -> "Graph":
        """New graph with position i taking the role of old vertex perm[i]."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        adj = [0] * self.n
        for i, v in enumerate(perm):
            for u in bits_of(self.adj[v]):
                adj[i] |= 1 << pos[u]
        return Graph(self.n, adj)

    def _as_mask(self, vertices) -> int:
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        if mask < 0 or mask >> self.n:
            raise GraphError(f"vertex set {bin(mask)} outside universe 0..{self.n - 1}")
        return mask

    def _check_pair(self, u, v):
        if u == v:
            raise EdgeEditError(f"loop [{u}, {v}]")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise EdgeEditError(f"endpoint outside 0..{self.n - 1}")


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; g1 keeps its indices, g2 is
    shifted up by g1.n."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join would need {n} vertices")
    m1 = g1.full_mask()
    m2 = g2.full_mask() << g1.n
    adj = [row | m2 for row in g1.adj]
    adj += [(row << g1.n) | m1 for row in g2.adj]
    return Graph(n, adj)


# -- graph6 ----------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Standard graph6 line (without trailing newline)."""
    return adj_to_graph6(g.n, g.adj)


def adj_to_graph6(n: int, adj) -> str:
    if n <= 62:
        head = [chr(63 + n)]
    else:
        head = ["~", chr(63 + ((n >> 12) & 63)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    out = head
    acc = 0
    nbits = 0
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((aj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6ParseError("empty graph6 line", 0)

    def val(i):
        c = ord(s[i])
        if not 63 <= c <= 126:
            raise Graph6ParseError(f"byte {c!r} outside graph6 range", i)
        return c - 63

    if s[0] == "~":
        if len(s) < 4:
            raise Graph6ParseError("truncated long-form vertex count", len(s))
        if len(s) >= 2 and s[1] == "~":
            raise Graph6ParseError("vertex count beyond 64 unsupported", 1)
        n = (val(1) << 12) | (val(2) << 6) | val(3)
        body = 4
    else:
        n = val(0)
        body = 1
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} exceeds {MAX_VERTICES}", 0)

    nedgebits = n * (n - 1) // 2
    need = (nedgebits + 5) // 6
    if len(s) - body != need:
        raise Graph6ParseError(
            f"expected {need} edge bytes for n = {n}, got {len(s) - body}",
            min(len(s), body + need),
        )
    adj = [0] * n
    k = 0
    for idx in range(body, len(s)):
        group = val(idx)
        for shift in (5, 4, 3, 2, 1, 0):
            bit = (group >> shift) & 1
            if k >= nedgebits:
                if bit:
                    raise Graph6ParseError("nonzero padding bits", idx)
                continue
            if bit:
                # bit k is edge (i, j) in column-major upper-triangle order
                j = _col_of(k)
                i = k - j * (j - 1) // 2
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def _col_of(k: int) -> int:
    # Largest j with j*(j-1)/2 <= k.
    j = int((2 * k) ** 0.5) + 1
    while j * (j - 1) // 2 > k:
        j -= 1
    while (j + 1) * j // 2 <= k:
        j += 1
    return j


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(from_graph6(line))
    return out


def write_graph6_file(path, lines: Iterable[str]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for line in lines:
            fh.write(line)
            fh.write("\n")
