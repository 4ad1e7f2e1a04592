"""Explicit constructions: coloring, star, universal vertex, doubling,
windmill, catalog entries, isolated-vertex padding."""

import random
from itertools import combinations

import pytest

from gcff.constructions import (
    add_universal,
    catalog,
    double_cycle,
    double_path,
    from_coloring,
    inner_identity_optimal,
    star_cff,
    windmill_cff,
    with_isolated_vertices,
)
from gcff.core import IncidenceMatrix, is_g_cff, is_g_disjunct, is_g_sperner
from gcff.errors import InvalidInputError
from gcff.graphs import (
    Graph,
    add_universal_vertex,
    complete,
    complete_bipartite,
    cycle,
    matching,
    path,
    star,
    wheel,
    windmill,
)
from gcff.graycode import path_cycle_cff
from gcff.sperner import t1


def random_graph(rng, n, p=0.5) -> Graph:
    edges = frozenset(e for e in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


class TestFromColoring:
    def test_c6_bipartition(self):
        m = from_coloring(cycle(6), [0, 1, 0, 1, 0, 1])
        assert m.t == 2 * t1(3) == 6
        assert is_g_cff(m, cycle(6))

    def test_k22(self):
        m = from_coloring(complete_bipartite(2, 2))
        assert m.t == t1(2) + t1(2) == 4
        assert is_g_cff(m, complete_bipartite(2, 2))

    def test_c5_three_classes(self):
        m = from_coloring(cycle(5))
        assert m.t == t1(2) + t1(2) + 1 == 5
        assert is_g_cff(m, cycle(5))

    def test_complete_graph_gives_identity_rows(self):
        m = from_coloring(complete(4))
        assert m.t == 4
        assert is_g_cff(m, complete(4))

    def test_improper_coloring_rejected(self):
        with pytest.raises(InvalidInputError):
            from_coloring(cycle(4), [0, 0, 1, 1])

    def test_random_graphs_row_formula(self):
        rng = random.Random(31)
        for _ in range(25):
            g = random_graph(rng, rng.randrange(3, 15))
            m = from_coloring(g)
            assert is_g_cff(m, g)
            from gcff.graphs import chromatic_number

            _, colors = chromatic_number(g, with_witness=True)
            sizes = {}
            for v in range(g.n):
                sizes[colors[v]] = sizes.get(colors[v], 0) + 1
            assert m.t == sum(t1(s) for s in sizes.values())


class TestStar:
    def test_s9_shape(self):
        m = star_cff(9)
        assert (m.t, m.n) == (6, 9)
        # hub column: zeros over the leaf block, one in the final row
        assert m.cols[0] == 1 << 5
        from gcff.sperner import optimal_1cff

        leaves = optimal_1cff(8)
        assert [c & 0b11111 for c in m.cols[1:]] == list(leaves.cols)
        assert is_g_cff(m, star(9))

    def test_s3(self):
        m = star_cff(3)
        assert m.t == t1(2) + 1 == 3
        assert is_g_cff(m, star(3))

    def test_s7(self):
        assert star_cff(7).t == t1(6) + 1 == 5

    def test_row_formula_sweep(self):
        for n in range(3, 50):
            m = star_cff(n)
            assert m.t == t1(n - 1) + 1
            assert is_g_cff(m, star(n))

    def test_needs_three_vertices(self):
        with pytest.raises(InvalidInputError):
            star_cff(2)


class TestUniversal:
    def test_wheel_6_from_c5(self):
        base = path_cycle_cff(5)
        m = add_universal(base, cycle(5))
        assert (m.t, m.n) == (6, 6)
        assert is_g_cff(m, wheel(6))

    def test_star_plus_universal(self):
        for n in (3, 5, 9):
            m = add_universal(star_cff(n), star(n))
            assert m.t == t1(n - 1) + 2
            assert is_g_cff(m, add_universal_vertex(star(n)))

    def test_identity_to_k4(self):
        m = add_universal(IncidenceMatrix.identity(3), complete(3))
        assert (m.t, m.n) == (4, 4)
        assert is_g_cff(m, complete(4))

    def test_rejects_bad_input(self):
        bad = IncidenceMatrix(3, (1, 1, 2))  # duplicate columns on an edge
        with pytest.raises(InvalidInputError):
            add_universal(bad, cycle(3))


class TestDoubling:
    def test_i4_to_c8(self):
        m = double_cycle(IncidenceMatrix.identity(4))
        assert (m.t, m.n) == (6, 8)
        assert is_g_cff(m, cycle(8))

    def test_i3_to_c6(self):
        m = double_cycle(IncidenceMatrix.identity(3))
        assert (m.t, m.n) == (5, 6)
        assert is_g_cff(m, cycle(6))

    def test_c8_to_c16(self):
        m = double_cycle(path_cycle_cff(8))
        assert (m.t, m.n) == (8, 16)
        assert is_g_cff(m, cycle(16))

    def test_path_doubling(self):
        m = double_path(path_cycle_cff(5))
        assert (m.t, m.n) == (7, 10)
        assert is_g_cff(m, path(10))

    def test_doubling_catalog_instance(self):
        _, p10 = catalog("P10")
        m = double_path(p10)
        assert (m.t, m.n) == (8, 20)
        assert is_g_cff(m, path(20))

    def test_rejects_non_cff(self):
        with pytest.raises(InvalidInputError):
            double_cycle(IncidenceMatrix(2, (1, 1, 2)))


class TestWindmill:
    def test_friendship_f9(self):
        m = windmill_cff(3, 4)
        assert (m.t, m.n) == (t1(4) + 3, 9) == (7, 9)
        assert is_g_cff(m, windmill(3, 4))

    def test_k5_two_blades_with_identity_inner(self):
        m = windmill_cff(5, 2, inner=IncidenceMatrix.identity(4))
        assert m.t == t1(2) + 4 + 1 == 7
        assert is_g_cff(m, windmill(5, 2))

    def test_k4_three_blades(self):
        m = windmill_cff(4, 3)
        assert m.t == t1(3) + 3 + 1 == 7
        assert is_g_cff(m, windmill(4, 3))

    def test_sweep(self):
        for k in range(3, 7):
            for n in (*range(2, 8), 20):
                m = windmill_cff(k, n)
                inner_rows = 2 if k == 3 else k - 1
                assert m.t == t1(n) + inner_rows + 1
                assert is_g_cff(m, windmill(k, n))

    def test_inner_identity_optimality_flag(self):
        assert inner_identity_optimal(9)
        assert not inner_identity_optimal(10)

    def test_rejects_bad_inner(self):
        # a column contained in another is not even 1-disjunct
        bad = IncidenceMatrix(3, (1, 3, 4))
        with pytest.raises(InvalidInputError):
            windmill_cff(4, 3, inner=bad)

    def test_custom_2_disjunct_inner(self):
        m = windmill_cff(4, 2, inner=IncidenceMatrix.identity(3))
        assert is_g_cff(m, windmill(4, 2))


class TestCatalog:
    def test_e8(self):
        g, m = catalog("E8")
        assert (m.t, m.n) == (5, 8)
        assert g.edges == matching(8).edges
        assert is_g_cff(m, g)

    def test_p10(self):
        g, m = catalog("P10")
        assert (m.t, m.n) == (6, 10)
        assert is_g_cff(m, g)

    def test_p10_restriction_to_p9(self):
        _, m = catalog("P10")
        m9 = m.restrict_columns(range(9))
        assert is_g_cff(m9, path(9))

    def test_unknown(self):
        with pytest.raises(InvalidInputError):
            catalog("E10")


class TestIsolatedVertices:
    def test_identity_plus_one(self):
        g = Graph(4, frozenset({(0, 1), (0, 2), (1, 2)}))
        m = with_isolated_vertices(IncidenceMatrix.identity(3), g)
        assert m.n == 4 and m.cols[3] == 0b111
        assert is_g_cff(m, g)

    def test_e8_plus_two(self):
        base_g, base_m = catalog("E8")
        edges = base_g.edges
        g = Graph(10, edges)
        m = with_isolated_vertices(base_m, g)
        assert is_g_cff(m, g)

    def test_cycle_plus_one(self):
        g = Graph(6, cycle(5).edges)
        m = with_isolated_vertices(path_cycle_cff(5), g)
        assert is_g_cff(m, g)

    def test_needs_three_non_isolated(self):
        g = Graph(4, frozenset({(0, 1)}))
        with pytest.raises(InvalidInputError):
            with_isolated_vertices(IncidenceMatrix(2, (1, 2)), g)


class TestMinDegreeTwoCollapse:
    def test_disjunct_implies_full_property_on_outputs(self):
        cases = [
            (path_cycle_cff(9), cycle(9)),
            (double_cycle(IncidenceMatrix.identity(4)), cycle(8)),
            (windmill_cff(3, 3), windmill(3, 3)),
            (add_universal(path_cycle_cff(6), cycle(6)), wheel(7)),
        ]
        for m, g in cases:
            assert g.min_degree() >= 2
            assert is_g_disjunct(m, g)
            assert is_g_sperner(m, g)

    def test_pendant_counterexample_exists(self):
        # min degree 1 admits disjunct-but-not-Sperner matrices: the star's
        # edge-only construction has an all-zero hub column
        from gcff.sperner import optimal_1cff

        leaves = optimal_1cff(4)
        m1 = IncidenceMatrix(leaves.t, (0,) + leaves.cols)
        g = star(5)
        assert is_g_disjunct(m1, g)
        assert not is_g_sperner(m1, g)
