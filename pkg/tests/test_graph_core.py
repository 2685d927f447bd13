from fractions import Fraction
from itertools import combinations

import pytest

from families.generators import complete, gnp, path, psi
from graph_core.flow import disjoint_paths
from graph_core.graph import (
    Graph,
    cartesian_with_k2,
    component_masks,
    components,
    from_mask,
    is_connected_subset,
    to_mask,
)
from graph_core.verdict import Verdict
from utils.errors import InputError


class TestGraph:
    def test_from_edges_dedupes_and_orients(self):
        g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
        assert g.m == 2
        assert g.sorted_edges() == [(0, 1), (1, 2)]
        assert g.neighbors(1) == {0, 2}

    def test_self_loop_rejected(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(0, 2)])

    def test_check_vertices(self, p4):
        assert p4.check_vertices([0, 3]) == {0, 3}
        with pytest.raises(InputError):
            p4.check_vertices([4])

    def test_equality_ignores_insertion_order(self):
        assert Graph.from_edges(3, [(0, 1), (1, 2)]) == Graph.from_edges(3, [(2, 1), (1, 0)])

    def test_masks_round_trip(self):
        assert from_mask(to_mask([0, 3, 5])) == {0, 3, 5}


class TestComponents:
    def test_connected_path(self, p4):
        assert components(p4) == [frozenset({0, 1, 2, 3})]

    def test_cut_vertex(self, p4):
        assert components(p4, {1}) == [frozenset({0}), frozenset({2, 3})]

    def test_everything_removed(self, k4):
        assert components(k4, range(4)) == []

    def test_masks_agree_with_networkx(self):
        g = gnp(9, Fraction(1, 3), seed=4)
        for removed in ([], [0], [2, 5], [1, 3, 7]):
            expected = components(g, removed)
            assert [from_mask(m) for m in component_masks(g, to_mask(removed))] == expected
            assert all(is_connected_subset(g, part) for part in expected)
            assert set().union(*expected) == set(range(9)) - set(removed)


class TestConnectedSubset:
    def test_adjacent_pair(self, c4):
        assert is_connected_subset(c4, {0, 1})

    def test_opposite_corners(self, c4):
        assert not is_connected_subset(c4, {0, 2})

    def test_empty_set_is_not_connected(self, c4):
        assert not is_connected_subset(c4, set())


class TestCartesianWithK2:
    def test_k1(self):
        product = cartesian_with_k2(complete(1))
        assert (product.n, product.m) == (2, 1)

    def test_k2_is_c4(self):
        product = cartesian_with_k2(complete(2))
        assert product.n == 4 and product.m == 4
        assert all(product.degree(v) == 2 for v in range(4))

    def test_edge_count(self):
        g = psi(4, 2)
        product = cartesian_with_k2(g)
        assert product.n == 24
        assert product.m == 2 * g.m + 12

    def test_swapping_copies_is_an_automorphism(self, c4):
        product = cartesian_with_k2(c4)
        n = c4.n
        swapped = Graph.from_edges(
            product.n, (((u + n) % (2 * n), (v + n) % (2 * n)) for u, v in product.edges)
        )
        assert swapped == product


class TestDisjointPaths:
    def test_clique_direct_edges(self, k4):
        count, paths = disjoint_paths(k4, {0, 1}, {2, 3})
        assert count == 2
        assert len(paths) == 2

    def test_path_end_to_end(self, p4):
        assert disjoint_paths(p4, {0}, {3}) == (1, [[0, 1, 2, 3]])

    def test_forbidden_vertex_forces_detour(self, c4):
        count, paths = disjoint_paths(c4, {0}, {2}, forbidden_internal={1})
        assert count == 1
        assert paths == [[0, 3, 2]]

    def test_shared_vertex_is_a_singleton_path(self):
        assert disjoint_paths(path(3), {1}, {1}) == (1, [[1]])

    def test_no_path_between_components(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert disjoint_paths(g, {0}, {3})[0] == 0

    def test_paths_are_disjoint_and_real(self):
        g = gnp(8, Fraction(1, 2), seed=2)
        count, paths = disjoint_paths(g, {0, 1, 2}, {5, 6, 7})
        assert len(paths) == count
        used = [v for p in paths for v in p]
        assert len(used) == len(set(used))
        for p in paths:
            assert p[0] in {0, 1, 2} and p[-1] in {5, 6, 7}
            assert all(g.has_edge(u, v) for u, v in zip(p, p[1:]))

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_brute_force_min_cut(self, seed):
        g = gnp(7, Fraction(1, 2), seed=seed)
        a, b = {0, 1}, {5, 6}
        count, _ = disjoint_paths(g, a, b)

        def separates(cut):
            remaining = [c for c in components(g, cut)]
            return not any(part & (a - set(cut)) and part & (b - set(cut)) for part in remaining)

        smallest = next(
            size for size in range(g.n + 1) for cut in combinations(range(g.n), size) if separates(cut)
        )
        assert count == smallest


def test_verdict_truthiness():
    assert Verdict.passed()
    failed = Verdict.failed("nope", 3)
    assert not failed
    assert failed.witness == 3
