import pytest

from folkman.cliques import (
    clique_number,
    cone_vertex_count,
    edge_completes_new_clique,
    has_clique,
    has_independent_set,
    independence_number,
    is_maximal_kq_free,
    is_plus_kt,
    maximal_kt_free_subsets,
    strip_cone_vertices,
)
from folkman.graphs import EdgeEditError, Graph, GraphError, join
from tests.conftest import random_graph
from tests.oracles import clique_number_brute, maximal_ktfree_brute


def test_clique_number_basics():
    assert clique_number(Graph.complete(6)) == 6
    assert clique_number(Graph.cycle(5)) == 2
    assert clique_number(Graph.cycle(7).complement()) == 3
    assert clique_number(Graph.empty(0)) == 0


def test_independence_number():
    assert independence_number(Graph.cycle(5)) == 2
    assert independence_number(Graph.empty(7)) == 7
    assert independence_number(Graph.complete(4)) == 1


def test_alpha_equals_omega_of_complement(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 10), rng.random())
        assert independence_number(g) == clique_number(g.complement())


def test_clique_number_matches_brute_force(rng):
    for _ in range(120):
        g = random_graph(rng, rng.randint(0, 8), rng.random())
        assert clique_number(g) == clique_number_brute(g)


def test_has_clique():
    assert has_clique(Graph.complete(5), 5)
    assert not has_clique(Graph.cycle(5), 3)
    assert has_clique(Graph.empty(0), 0)
    assert has_clique(Graph.cycle(4), 0)
    with pytest.raises(GraphError):
        has_clique(Graph.cycle(4), -1)


def test_edge_completes_new_clique():
    c5 = Graph.cycle(5)
    assert edge_completes_new_clique(c5, 0, 2, 3)
    assert edge_completes_new_clique(Graph.empty(2), 0, 1, 2)
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert not edge_completes_new_clique(p3, 0, 2, 4)
    with pytest.raises(EdgeEditError):
        edge_completes_new_clique(c5, 0, 1, 3)


def test_is_plus_kt():
    assert is_plus_kt(Graph.cycle(5), 3)
    assert is_plus_kt(Graph.complete(6), 3)
    assert is_plus_kt(Graph.complete(6), 9)
    assert not is_plus_kt(Graph.cycle(6), 3)


def test_is_plus_kt_matches_per_edge_definition(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        for t in range(3, 6):
            expected = all(
                edge_completes_new_clique(g, u, v, t) for u, v in g.non_edges()
            )
            assert is_plus_kt(g, t) == expected


def test_maximality_in_family():
    c5c = Graph.cycle(5).complement()
    assert is_maximal_kq_free(c5c, 3)
    # K_{q-1} plus an isolated vertex is never maximal
    k2_plus_iso = Graph.from_edges(3, [(0, 1)])
    assert not is_maximal_kq_free(k2_plus_iso, 3)
    assert is_maximal_kq_free(Graph.complete(4), 5)
    with pytest.raises(GraphError):
        is_maximal_kq_free(Graph.complete(4), 3)


def test_is_plus_kt_matches_clique_count_oracle(rng):
    from itertools import combinations

    def count_cliques(g, t):
        return sum(
            1
            for sub in combinations(range(g.n), t)
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2))
        )

    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 7), rng.random())
        for t in (3, 4):
            expected = all(
                count_cliques(g.add_edge(u, v), t) > count_cliques(g, t)
                for u, v in g.non_edges()
            )
            assert is_plus_kt(g, t) == expected


def test_maximal_ktfree_examples():
    k4 = Graph.complete(4)
    subsets = maximal_kt_free_subsets(k4, 3)
    assert len(subsets) == 6
    assert all(bin(s).count("1") == 2 for s in subsets)

    assert maximal_kt_free_subsets(Graph.empty(5), 2) == [0b11111]

    c5 = Graph.cycle(5)
    mis = maximal_kt_free_subsets(c5, 2)
    assert mis == maximal_ktfree_brute(c5, 2)
    assert len(mis) == 5 and all(bin(s).count("1") == 2 for s in mis)


def test_maximal_ktfree_matches_brute(rng):
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        for t in (2, 3, 4):
            assert maximal_kt_free_subsets(g, t) == maximal_ktfree_brute(g, t)


def test_edge_monotonicity(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 9), 0.4)
        non_edges = list(g.non_edges())
        if not non_edges:
            continue
        u, v = non_edges[rng.randrange(len(non_edges))]
        bigger = g.add_edge(u, v)
        assert clique_number(bigger) >= clique_number(g)
        assert independence_number(bigger) <= independence_number(g)


def test_cone_vertices():
    assert cone_vertex_count(Graph.complete(5)) == 5
    assert cone_vertex_count(Graph.cycle(5)) == 0
    w = join(Graph.complete(1), Graph.cycle(5))
    assert cone_vertex_count(w) == 1
    assert strip_cone_vertices(w) == Graph.cycle(5)


def test_has_independent_set():
    assert has_independent_set(Graph.cycle(5), 2)
    assert not has_independent_set(Graph.cycle(5), 3)
