"""Parity between the pure-Python kernels and the compiled twin, plus
correctness of both against definition-level brute force."""

import random

import pytest

from folkman import _kernels_py as py
from folkman._kernels import available_backends
from folkman.graphs import Graph
from tests.conftest import random_graph
from tests.oracles import clique_number_brute, has_mono_clique

cy = available_backends().get("compiled")

needs_compiled = pytest.mark.skipif(cy is None, reason="compiled backend unavailable")


def _random_adj(rng, n, p=None):
    return random_graph(rng, n, p if p is not None else rng.random()).adj


def test_pure_kernels_against_brute_force(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(0, 8), rng.random())
        w = clique_number_brute(g)
        assert py.max_clique_size(g.adj) == w
        for t in range(0, 9):
            assert py.has_clique_at_least(g.adj, t) == (t <= w)
        mask = rng.getrandbits(g.n) if g.n else 0
        assert py.max_clique_size_within(g.adj, mask) == clique_number_brute(
            g.induced(mask)
        )
        for t in range(0, 5):
            assert py.has_clique_within(g.adj, mask, t) == has_mono_clique(
                g, mask, t
            )


def test_free_partition_classes_are_valid(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 9), rng.random())
        s = rng.randint(1, 3)
        limits = tuple(rng.randint(0, 3) for _ in range(s))
        got = py.free_partition(g.adj, limits)
        if got is None:
            continue
        union = 0
        for mask, limit in zip(got, limits):
            assert union & mask == 0
            union |= mask
            assert py.max_clique_size_within(g.adj, mask) <= limit
        assert union == g.full_mask()


@needs_compiled
def test_backend_parity(rng):
    for trial in range(500):
        n = rng.randint(0, 15)
        adj = _random_adj(rng, n)
        assert py.max_clique_size(adj) == cy.max_clique_size(adj)
        mask = rng.getrandbits(n) if n else 0
        assert py.max_clique_size_within(adj, mask) == cy.max_clique_size_within(
            adj, mask
        )
        for t in range(0, 7):
            assert py.has_clique_at_least(adj, t) == cy.has_clique_at_least(adj, t)
            assert py.has_clique_within(adj, mask, t) == cy.has_clique_within(
                adj, mask, t
            )
            assert py.is_plus_k(adj, t + 2) == cy.is_plus_k(adj, t + 2)
        s = rng.randint(0, 4)
        limits = tuple(rng.randint(0, 3) for _ in range(s))
        assert py.free_partition(adj, limits) == cy.free_partition(adj, limits)
        assert py.canonical_perm(adj) == cy.canonical_perm(adj)


@needs_compiled
def test_backend_parity_large_sparse_and_dense(rng):
    for n in (20, 24, 32):
        for p in (0.1, 0.5, 0.9):
            adj = _random_adj(rng, n, p)
            assert py.max_clique_size(adj) == cy.max_clique_size(adj)
            assert py.canonical_perm(adj) == cy.canonical_perm(adj)


@needs_compiled
def test_backend_parity_structured_graphs():
    cases = [
        Graph.complete(10),
        Graph.empty(12),
        Graph.cycle(11),
        Graph.cycle(13).complement(),
    ]
    for g in cases:
        assert py.canonical_perm(g.adj) == cy.canonical_perm(g.adj)
        assert py.max_clique_size(g.adj) == cy.max_clique_size(g.adj)
        assert py.free_partition(g.adj, (1, 2)) == cy.free_partition(g.adj, (1, 2))


def test_backend_selection_env(monkeypatch):
    import importlib

    import folkman._kernels as K

    monkeypatch.setenv("FOLKMAN_PURE", "1")
    mod = importlib.reload(K)
    assert mod.impl.BACKEND == "python"
    monkeypatch.delenv("FOLKMAN_PURE")
    mod = importlib.reload(K)
    assert mod.backend_name() in ("python", "compiled")


def test_search_runs_on_pure_backend(rng):
    # swap the backend in place and run a tiny end-to-end generation
    import folkman._kernels as K

    old = K.impl
    K.impl = py
    try:
        from folkman.arrowing import ArrowVector
        from folkman.search import FamilySpec, complete_base, generate_family

        base = complete_base((3,), 8, 6, 3)
        out = generate_family(FamilySpec(ArrowVector((4,)), 8, 8, 2, 3), base)
        assert len(out.output) == 1
        assert len(out.plus_clique) == 1
    finally:
        K.impl = old
