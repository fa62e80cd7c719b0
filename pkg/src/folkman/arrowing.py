"""The vertex arrowing relation and the clique-target vector calculus.

``arrows(g, v)`` asks whether every colouring of V(g) in len(v) colours
produces, for some i, a clique of size v[i] inside colour class i.
Equivalently (and this is how it is decided): no partition of the vertices
into classes exists with the clique number of class i below v[i].
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels as K
from .graphs import Graph, GraphError, bits_of


@dataclass(frozen=True)
class ArrowVector:
    """Multiset of clique targets with the derived threshold m and peak p.

    The canonical form drops entries equal to 1 (they never change the
    relation) and sorts ascending; m and p are invariant under that.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        if any(a < 1 for a in self.entries):
            raise GraphError(f"clique targets must be >= 1: {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> "ArrowVector":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "ArrowVector":
        parts = text.replace(",", " ").split()
        if not parts:
            return cls(())
        return cls(tuple(int(p) for p in parts))

    def canonical(self) -> "ArrowVector":
        return ArrowVector(tuple(sorted(a for a in self.entries if a >= 2)))

    @property
    def m(self) -> int:
        return sum(a - 1 for a in self.entries) + 1

    @property
    def p(self) -> int:
        return max(self.entries, default=1)

    def decremented_first(self) -> "ArrowVector":
        """Canonical vector with its smallest entry lowered by one (the form
        consumed by the generation step chains)."""
        c = self.canonical().entries
        if not c:
            raise GraphError("cannot decrement the empty vector")
        return ArrowVector((c[0] - 1,) + c[1:]).canonical()

    def __str__(self):
        return ", ".join(str(a) for a in self.entries)


def canonicalize(v) -> ArrowVector:
    return _as_vector(v).canonical()


def _as_vector(v) -> ArrowVector:
    if isinstance(v, ArrowVector):
        return v
    if isinstance(v, str):
        return ArrowVector.parse(v)
    return ArrowVector(tuple(v))


def arrows_adj(adj, entries) -> bool:
    """Low-level arrowing check on raw adjacency; entries already canonical."""
    if not entries:
        return True
    impl = K.impl
    if len(entries) == 1:
        return impl.has_clique_at_least(adj, entries[0])
    p = entries[-1]
    m = sum(a - 1 for a in entries) + 1
    # A graph without a p-clique never arrows (put everything in the p-class);
    # a graph with an m-clique always does.
    if not impl.has_clique_at_least(adj, p):
        return False
    if impl.has_clique_at_least(adj, m):
        return True
    limits = tuple(a - 1 for a in entries)
    return impl.free_partition(adj, limits) is None


def arrows(g: Graph, v) -> bool:
    return arrows_adj(g.adj, canonicalize(v).entries)


def find_free_partition(g: Graph, v):
    """Witness for the negative case: disjoint covering classes whose clique
    numbers stay below the corresponding entries, or None when g arrows v.
    Classes are aligned with the entries as given (1-entries get empty
    classes)."""
    vec = _as_vector(v)
    if not vec.canonical().entries:
        return None  # the empty vector arrows everything
    limits = tuple(a - 1 for a in vec.entries)
    return K.impl.free_partition(g.adj, limits)


def arrows_after_deletion(g: Graph, v, i: int, vertices) -> bool:
    """Arrowing of g minus an independent set against the vector with entry
    i lowered by one.  Matches direct evaluation; exposed because the chains
    use it as a pruning law."""
    vec = _as_vector(v)
    if not 0 <= i < len(vec.entries):
        raise GraphError(f"entry index {i} out of range")
    if vec.entries[i] < 2:
        raise GraphError(f"entry {vec.entries[i]} cannot be decremented")
    mask = g._as_mask(vertices)
    for u in bits_of(mask):
        if g.adj[u] & mask:
            raise GraphError("deleted set is not independent")
    entries = list(vec.entries)
    entries[i] -= 1
    return arrows(g.delete_vertices(mask), ArrowVector(tuple(entries)))
