"""Core graph types: construction, cliques, the brute-force oracle."""

from __future__ import annotations

import itertools
import random

import pytest

from ordo.graphs import (
    Digraph,
    EdgeColoring,
    SimpleGraph,
    Tournament,
    all_tournaments,
    complement,
    complete_graph,
    complete_multipartite,
    find_clique,
    find_independent_set,
    has_clique,
    has_independent_set,
    max_edges_without_clique_oracle,
    random_tournament,
)


def _random_graph(n: int, rng: random.Random) -> SimpleGraph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
    ]
    return SimpleGraph(n, edges)


class TestSimpleGraph:
    def test_basics(self):
        g = SimpleGraph(4, [(0, 1), (1, 0), (2, 3)])
        assert g.vertex_count == 4
        assert g.edge_count == 2  # duplicate orientation collapses
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(0, 2)
        assert g.degree(1) == 1
        assert g.edges == frozenset({(0, 1), (2, 3)})

    def test_rejects_loops_and_range(self):
        with pytest.raises(ValueError):
            SimpleGraph(3, [(1, 1)])
        with pytest.raises(ValueError):
            SimpleGraph(3, [(0, 3)])
        with pytest.raises(ValueError):
            SimpleGraph(-1)

    def test_equality_and_hash(self):
        a = SimpleGraph(3, [(0, 1)])
        b = SimpleGraph(3, [(1, 0)])
        assert a == b
        assert hash(a) == hash(b)
        assert a != SimpleGraph(3, [(0, 2)])
        assert a != SimpleGraph(4, [(0, 1)])

    def test_complete_graph(self):
        for n in range(8):
            g = complete_graph(n)
            assert g.edge_count == n * (n - 1) // 2
        assert complete_graph(0).vertex_count == 0

    def test_complement_involution(self):
        rng = random.Random(7)
        for _ in range(50):
            g = _random_graph(rng.randint(0, 10), rng)
            assert complement(complement(g)) == g

    def test_complement_partitions_pairs(self):
        rng = random.Random(8)
        for _ in range(20):
            n = rng.randint(0, 10)
            g = _random_graph(n, rng)
            h = complement(g)
            assert not (g.edges & h.edges)
            assert g.edges | h.edges == complete_graph(n).edges


class TestMultipartite:
    def test_part_layout(self):
        g = complete_multipartite([3, 2])
        assert g.vertex_count == 5
        assert g.edge_count == 6
        # first part is 0..2, second 3..4
        assert not g.has_edge(0, 1)
        assert g.has_edge(0, 3)

    def test_edge_count_formula(self):
        # edges = (sum^2 - sum of squares) / 2
        sizes = [4, 3, 3, 1]
        g = complete_multipartite(sizes)
        total = sum(sizes)
        expect = (total * total - sum(s * s for s in sizes)) // 2
        assert g.edge_count == expect

    def test_no_parts(self):
        with pytest.raises(ValueError, match="no parts"):
            complete_multipartite([])
        with pytest.raises(ValueError):
            complete_multipartite([2, 0])


def _brute_force_clique(g: SimpleGraph, size: int) -> tuple[int, ...] | None:
    for combo in itertools.combinations(range(g.vertex_count), size):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
            return combo
    return None


class TestCliques:
    def test_lexicographically_smallest_witness(self):
        rng = random.Random(11)
        for _ in range(100):
            g = _random_graph(rng.randint(1, 9), rng)
            size = rng.randint(1, 4)
            assert find_clique(g, size) == _brute_force_clique(g, size)

    def test_size_one_and_full(self):
        g = complete_graph(5)
        assert find_clique(g, 1) == (0,)
        assert find_clique(g, 5) == (0, 1, 2, 3, 4)
        assert find_clique(g, 6) is None

    def test_size_validation(self):
        with pytest.raises(ValueError):
            find_clique(complete_graph(3), 0)

    def test_independent_set_is_complement_clique(self):
        rng = random.Random(12)
        for _ in range(100):
            g = _random_graph(rng.randint(1, 10), rng)
            size = rng.randint(1, 4)
            witness = find_independent_set(g, size)
            assert has_independent_set(g, size) == has_clique(complement(g), size)
            if witness is not None:
                assert all(
                    not g.has_edge(u, v)
                    for u, v in itertools.combinations(witness, 2)
                )

    def test_clique_witness_is_a_clique(self):
        rng = random.Random(13)
        for _ in range(100):
            g = _random_graph(rng.randint(1, 10), rng)
            witness = find_clique(g, 3)
            if witness is not None:
                assert all(
                    g.has_edge(u, v) for u, v in itertools.combinations(witness, 2)
                )


class TestOracle:
    def test_known_values(self):
        assert max_edges_without_clique_oracle(5, 2) == 6
        assert max_edges_without_clique_oracle(4, 3) == 5
        assert max_edges_without_clique_oracle(6, 5) == 14
        assert max_edges_without_clique_oracle(3, 1) == 0
        assert max_edges_without_clique_oracle(0, 1) == 0

    def test_k_at_least_n_gives_complete(self):
        assert max_edges_without_clique_oracle(5, 5) == 10
        assert max_edges_without_clique_oracle(5, 7) == 10

    def test_limit(self):
        with pytest.raises(ValueError, match="oracle limit"):
            max_edges_without_clique_oracle(8, 2)
        with pytest.raises(ValueError):
            max_edges_without_clique_oracle(5, 0)


class TestDigraph:
    def test_basics(self):
        d = Digraph(3, [(0, 1), (1, 1), (2, 0)])
        assert d.arc_count == 3
        assert d.has_arc(0, 1) and not d.has_arc(1, 0)
        assert d.loops() == frozenset({1})
        assert d.out_degree(1) == 1 and d.in_degree(1) == 2

    def test_range(self):
        with pytest.raises(ValueError):
            Digraph(2, [(0, 2)])


class TestTournament:
    def test_validation(self):
        Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(ValueError, match="one arc per vertex pair"):
            Tournament.from_arcs(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError, match="both orientations"):
            Tournament.from_arcs(3, [(0, 1), (1, 0), (1, 2)])
        with pytest.raises(ValueError):
            Tournament.from_arcs(2, [(0, 0)])

    def test_random_is_a_tournament(self):
        rng = random.Random(0)
        for n in (0, 1, 2, 5, 17):
            t = random_tournament(n, rng)
            assert t.vertex_count == n
            assert len(t.arcs) == n * (n - 1) // 2

    def test_random_is_deterministic_per_seed(self):
        a = random_tournament(9, random.Random(42)).arcs
        b = random_tournament(9, random.Random(42)).arcs
        assert a == b

    def test_all_tournaments(self):
        seen = {t.arcs for t in all_tournaments(3)}
        assert len(seen) == 8
        assert all(len(arcs) == 3 for arcs in seen)
        assert [t.arcs for t in all_tournaments(0)] == [frozenset()]


class TestEdgeColoring:
    def test_pair_index_is_lexicographic(self):
        col = EdgeColoring(5, 1, [0] * 10)
        pairs = [(u, v) for u in range(5) for v in range(u + 1, 5)]
        assert [col.pair_index(u, v) for u, v in pairs] == list(range(10))
        assert col.pair_index(3, 1) == col.pair_index(1, 3)

    def test_color_of_and_classes(self):
        col = EdgeColoring.from_function(4, 2, lambda u, v: (u + v) % 2)
        assert col.color_of(0, 1) == 1
        assert col.color_of(1, 3) == 0
        class_sizes = [col.color_class(c).edge_count for c in range(2)]
        assert sum(class_sizes) == 6

    def test_from_graph(self):
        g = SimpleGraph(4, [(0, 1), (2, 3)])
        col = EdgeColoring.from_graph(g)
        assert col.color_of(0, 1) == 0
        assert col.color_of(0, 2) == 1
        assert col.color_class(0) == g

    def test_validation(self):
        with pytest.raises(ValueError, match="colors for K_4"):
            EdgeColoring(4, 2, [0, 1])
        with pytest.raises(ValueError):
            EdgeColoring(3, 2, [0, 1, 2])
        with pytest.raises(ValueError):
            EdgeColoring(3, 0, [0, 0, 0])
        col = EdgeColoring(3, 2, [0, 1, 0])
        with pytest.raises(ValueError):
            col.color_of(1, 1)
        with pytest.raises(ValueError):
            col.color_class(2)
