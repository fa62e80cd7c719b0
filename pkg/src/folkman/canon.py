"""Canonical labeling and the isomorphism-deduplicated graph store.

The canonical form of a graph is the graph6 line of its canonically
relabeled copy: equal lines exactly for isomorphic graphs.  GraphSets key
their members by that line and persist as sorted line files, so two runs
that compute the same family produce byte-identical artifacts regardless of
insertion order or worker split.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Iterator

from . import _kernels as K
from .graphs import Graph, from_graph6, to_graph6


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(K.impl.canonical_perm(g.adj))


def canonical_form(g: Graph) -> str:
    return to_graph6(canonical_graph(g))


class GraphSet:
    """Deduplicated set of isomorphism classes keyed by canonical form."""

    def __init__(self):
        self._members: dict[str, Graph] = {}
        self.attempts = 0

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in self._members

    def __iter__(self) -> Iterator[Graph]:
        for line in self.lines():
            yield self._members[line]

    def insert(self, g: Graph) -> bool:
        """Insert an isomorphism class; returns True when it is new."""
        self.attempts += 1
        gc = canonical_graph(g)
        line = to_graph6(gc)
        if line in self._members:
            return False
        self._members[line] = gc
        return True

    def insert_canonical(self, line: str, g: Graph) -> bool:
        """Insert a graph already in canonical labeling (trusted path)."""
        self.attempts += 1
        if line in self._members:
            return False
        self._members[line] = g
        return True

    def lines(self) -> list[str]:
        return sorted(self._members)

    def graphs(self) -> list[Graph]:
        return [self._members[line] for line in self.lines()]

    def update(self, other: "GraphSet") -> None:
        for line, g in other._members.items():
            self.attempts += 1
            if line not in self._members:
                self._members[line] = g

    # -- persistence ---------------------------------------------------------

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            for line in self.lines():
                fh.write(line)
                fh.write("\n")

    @classmethod
    def load(cls, path) -> "GraphSet":
        """Load any graph6 file, re-canonicalizing every line."""
        out = cls()
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    out.insert(from_graph6(line))
        return out

    @classmethod
    def load_trusted(cls, path) -> "GraphSet":
        """Load a file produced by save(); lines are taken as canonical."""
        out = cls()
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    out.insert_canonical(line, from_graph6(line))
        return out


def merge(a: GraphSet, b: GraphSet) -> GraphSet:
    """Union of isomorphism classes (commutative, associative, idempotent)."""
    out = GraphSet()
    out.update(a)
    out.update(b)
    return out


def graph_set_of(graphs: Iterable[Graph]) -> GraphSet:
    out = GraphSet()
    for g in graphs:
        out.insert(g)
    return out


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def write_manifest(path, fields: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for key, value in fields.items():
            fh.write(f"{key} = {value}\n")


def read_manifest(path) -> dict:
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out
