"""Graph family generators and the small exact solvers."""

import random
from itertools import combinations
from math import comb

import pytest

from gcff.errors import InvalidInputError, ResourceLimitError
from gcff.graphs import (
    Graph,
    add_universal_vertex,
    cartesian_product,
    chromatic_number,
    clique_number,
    complete,
    complete_bipartite,
    cycle,
    friendship,
    hamming,
    homomorphism_exists,
    loops_graph,
    make_family,
    matching,
    path,
    sperner_graph,
    star,
    wheel,
    windmill,
)


def random_graph(rng, n, p=0.5, ensure_edge=False) -> Graph:
    while True:
        edges = frozenset(e for e in combinations(range(n), 2) if rng.random() < p)
        if not ensure_edge or edges:
            return Graph(n, edges)


class TestGenerators:
    def test_counts(self):
        cases = [
            (path(7), 7, 6), (cycle(8), 8, 8), (star(9), 9, 8),
            (complete(6), 6, 15), (complete_bipartite(2, 3), 5, 6),
            (matching(8), 8, 4), (wheel(6), 6, 10), (wheel(3), 3, 3),
            (windmill(3, 4), 9, 12), (windmill(5, 4), 17, 40),
            (friendship(4), 9, 12), (sperner_graph(3), 8, 9),
            (hamming([2, 2, 2]), 8, 12),
        ]
        for g, n, m in cases:
            assert (g.n, len(g.edges)) == (n, m), g.family

    def test_handshake(self):
        for g in [path(9), cycle(10), wheel(8), windmill(4, 3), matching(6),
                  sperner_graph(4), hamming([2, 3])]:
            assert sum(len(g.adj[v]) for v in range(g.n)) == 2 * len(g.edges)

    def test_windmill_vertex_formula(self):
        for k in range(3, 7):
            for n in range(2, 5):
                assert windmill(k, n).n == n * (k - 1) + 1

    def test_matching_pairs(self):
        assert matching(8).edges == frozenset({(0, 1), (2, 3), (4, 5), (6, 7)})

    def test_wheel_is_cycle_plus_universal(self):
        assert wheel(6).edges == add_universal_vertex(cycle(5)).edges

    def test_sperner_graph_edges_are_incomparable_pairs(self):
        for z in (3, 4, 5):
            g = sperner_graph(z)
            for x in range(1 << z):
                for y in range(x + 1, 1 << z):
                    incomparable = bool(x & ~y) and bool(y & ~x)
                    assert g.has_edge(x, y) == incomparable

    def test_sperner_graph_isolated_vertices(self):
        # the empty set and the full set compare with everything
        assert sperner_graph(3).isolated_vertices == frozenset({0, 7})

    def test_loops(self):
        g = loops_graph(4)
        assert g.loops == frozenset(range(4)) and not g.edges

    def test_hamming_adjacency_is_distance_one(self):
        from itertools import product as iproduct

        dims = (2, 3, 2)
        g = hamming(dims)
        words = list(iproduct(*(range(d) for d in dims)))
        for i, j in combinations(range(len(words)), 2):
            d = sum(1 for a, b in zip(words[i], words[j]) if a != b)
            assert g.has_edge(i, j) == (d == 1)

    def test_size_preconditions(self):
        for bad in (lambda: path(1), lambda: cycle(2), lambda: matching(5),
                    lambda: wheel(2), lambda: windmill(1, 3)):
            with pytest.raises(InvalidInputError):
                bad()

    def test_isolated_detection(self):
        g = Graph(4, frozenset({(0, 1)}))
        assert g.isolated_vertices == frozenset({2, 3})
        stripped, kept = g.without_isolated()
        assert stripped.n == 2 and kept == (0, 1)


class TestCartesianProduct:
    def test_k2_square_k2_is_c4(self):
        g = cartesian_product(complete(2), complete(2))
        assert g.n == 4 and len(g.edges) == 4
        assert all(len(g.adj[v]) == 2 for v in range(4))

    def test_cube(self):
        g = cartesian_product(cartesian_product(complete(2), complete(2)), complete(2))
        assert (g.n, len(g.edges)) == (8, 12)
        assert g.edges == hamming([2, 2, 2]).edges

    def test_k3_square_k3_regularity(self):
        g = cartesian_product(complete(3), complete(3))
        assert g.n == 9
        assert all(len(g.adj[v]) == 4 for v in range(9))


class TestFileAndSpec:
    def test_text_round_trip(self):
        g = windmill(3, 3)
        g2 = Graph.from_text(g.to_text())
        assert (g2.n, g2.edges, g2.loops) == (g.n, g.edges, g.loops)

    def test_loops_in_file(self):
        g = Graph.from_text("3 2\n0 1\n2 2\n")
        assert g.loops == frozenset({2}) and g.edges == frozenset({(0, 1)})

    def test_make_family(self):
        assert make_family("cycle:12").family == "cycle(12)"
        assert make_family("bipartite:2,3").n == 5
        assert make_family("hamming:2x2x3").n == 12
        assert make_family("windmill:3,4").n == 9
        assert make_family("friendship:4").family == "windmill(3,4)"

    def test_make_family_errors(self):
        for spec in ("nope:3", "cycle", "cycle:x", "bipartite:3"):
            with pytest.raises(InvalidInputError):
                make_family(spec)


class TestExactSolvers:
    def test_chromatic_spot_values(self):
        assert chromatic_number(cycle(5)) == 3
        assert chromatic_number(cycle(6)) == 2
        assert chromatic_number(complete(4)) == 4
        assert chromatic_number(complete_bipartite(3, 4)) == 2
        assert chromatic_number(sperner_graph(3)) == 3

    def test_chromatic_witness_is_proper(self):
        rng = random.Random(3)
        for _ in range(25):
            g = random_graph(rng, rng.randrange(2, 9))
            k, colors = chromatic_number(g, with_witness=True)
            assert max(colors) + 1 == k
            assert all(colors[u] != colors[v] for u, v in g.edges)

    def test_clique_spot_values(self):
        assert clique_number(complete(5)) == 5
        assert clique_number(cycle(6)) == 2
        assert clique_number(sperner_graph(3)) == 3
        assert clique_number(wheel(6)) == 3

    def test_clique_le_chromatic(self):
        rng = random.Random(5)
        for _ in range(25):
            g = random_graph(rng, rng.randrange(2, 9))
            assert clique_number(g) <= chromatic_number(g)

    def test_sperner_graph_theorem_orders_3_and_4(self):
        for z in (3, 4):
            g = sperner_graph(z)
            want = comb(z, z // 2)
            assert clique_number(g) == want
            assert chromatic_number(g) == want

    def test_homomorphism_spot_values(self):
        assert homomorphism_exists(cycle(5), complete(3))
        assert not homomorphism_exists(cycle(5), complete(2))
        assert homomorphism_exists(complete(3), sperner_graph(3))

    def test_homomorphism_matches_coloring(self):
        rng = random.Random(9)
        for _ in range(15):
            g = random_graph(rng, rng.randrange(2, 7), ensure_edge=True)
            chi = chromatic_number(g)
            for k in range(max(2, chi - 1), chi + 2):
                assert homomorphism_exists(g, complete(k)) == (chi <= k)

    def test_homomorphism_witness(self):
        ok, image = homomorphism_exists(cycle(5), complete(3), with_witness=True)
        assert ok
        g, h = cycle(5), complete(3)
        assert all(h.has_edge(image[u], image[v]) for u, v in g.edges)

    def test_resource_limits(self):
        with pytest.raises(ResourceLimitError):
            chromatic_number(complete(21))
        with pytest.raises(ResourceLimitError):
            homomorphism_exists(complete(50), complete(50))
        with pytest.raises(InvalidInputError):
            chromatic_number(loops_graph(3))
