from fractions import Fraction

import pytest

from certificates.bramble import Bramble, bramble_order
from decompositions.treewidth import exact_treewidth
from families.generators import complete, gnp, grid, path
from graph_core.graph import Graph, cartesian_with_k2
from minors.fractional import bramble_from_model, fractional_order, had_f_small, integral_order, maximal_brambles
from minors.glm import (
    GridLikeMinorCert,
    WeightedBramble,
    glm_from_grid,
    intersection_graph,
    model_in_product_from_glm,
    validate_glm,
    validate_weighted_bramble,
    weighted_bramble_from_product_model,
)
from minors.hadwiger import connected_sets, find_clique_model, hadwiger_number
from minors.lp import solve_ip, solve_lp
from minors.model import Model, identity_model, require_model, validate_model
from tests.conftest import cycle, edgeless
from utils.errors import BudgetExceeded, CertificateError, InputError

C4_ARCS = Bramble.of([[0, 1], [1, 2], [2, 3], [3, 0]])


class TestModel:
    def test_triangle_in_c4(self, c4):
        assert validate_model(Model.complete(c4, [[0], [1], [2, 3]]))

    def test_triangle_not_in_path(self, p4):
        verdict = validate_model(Model.complete(p4, [[0], [1], [2, 3]]))
        assert not verdict
        assert verdict.witness == (0, 2)

    def test_overlap(self, c4):
        verdict = validate_model(Model.complete(c4, [[0, 1], [1, 2]]))
        assert not verdict and verdict.witness == (0, 1)

    def test_disconnected_branch(self, c4):
        verdict = validate_model(Model.complete(c4, [[0, 2], [1]]))
        assert not verdict and verdict.witness == 0

    def test_empty_branch(self, c4):
        assert not validate_model(Model.complete(c4, [[], [1]]))

    def test_branch_count_mismatch(self, c4):
        with pytest.raises(InputError):
            validate_model(Model.of(c4, complete(3), [[0], [1]]))

    def test_require(self, p4):
        with pytest.raises(CertificateError):
            require_model(Model.complete(p4, [[0], [2]]))

    def test_identity(self, grid3):
        assert validate_model(identity_model(grid3))


class TestHadwiger:
    @pytest.mark.parametrize(
        "graph,expected",
        [(complete(5), 5), (cycle(4), 3), (grid(3, 3), 4), (path(4), 2), (complete(1), 1), (edgeless(3), 1)],
    )
    def test_known_values(self, graph, expected):
        t, model = hadwiger_number(graph)
        assert t == expected
        assert model.order == t
        assert validate_model(model)

    def test_empty_graph(self):
        assert hadwiger_number(edgeless(0))[0] == 0

    @pytest.mark.parametrize("seed", range(5))
    def test_at_most_tw_plus_one(self, seed):
        g = gnp(8, Fraction(1, 2), seed)
        assert hadwiger_number(g)[0] <= exact_treewidth(g)[0] + 1

    def test_find_clique_model(self, c4):
        assert find_clique_model(c4, 4) is None
        assert len(find_clique_model(c4, 3)) == 3
        assert find_clique_model(c4, 0) == []

    def test_connected_sets_of_path(self):
        assert len(connected_sets(path(3))) == 6

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            hadwiger_number(path(11))


class TestGridLikeMinor:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_grid_orders(self, k):
        g, cert = glm_from_grid(k)
        assert validate_glm(g, cert) == k + 1

    def test_intersection_graph_of_grid(self):
        _, cert = glm_from_grid(3)
        meet = intersection_graph(cert.paths)
        assert meet.m == 9

    def test_empty_kt_model(self):
        g, cert = glm_from_grid(2)
        with pytest.raises(CertificateError):
            validate_glm(g, GridLikeMinorCert(cert.paths, cert.sides, ()))

    def test_same_side_meeting(self):
        g, cert = glm_from_grid(2)
        with pytest.raises(CertificateError):
            validate_glm(g, GridLikeMinorCert(cert.paths, (0, 0, 0, 0), cert.kt_branches))

    def test_not_a_path(self, c4):
        cert = GridLikeMinorCert.of([[0, 1, 2, 3]], [0], [[0]])
        with pytest.raises(CertificateError):
            validate_glm(c4, cert)

    def test_bad_side(self, p4):
        with pytest.raises(CertificateError):
            validate_glm(p4, GridLikeMinorCert.of([[0, 1]], [2], [[0]]))

    @pytest.mark.parametrize("k", [2, 3])
    def test_lift_into_product(self, k):
        g, cert = glm_from_grid(k)
        model = model_in_product_from_glm(g, cert)
        assert model.order == k + 1
        assert validate_model(model)
        assert model.host == cartesian_with_k2(g)

    def test_lift_bounded_by_product_hadwiger(self):
        g, cert = glm_from_grid(2)
        model = model_in_product_from_glm(g, cert)
        assert model.order <= hadwiger_number(cartesian_with_k2(g))[0]


class TestWeightedBramble:
    @pytest.mark.parametrize("r,total", [(2, Fraction(3, 2)), (3, Fraction(1)), (4, Fraction(3, 2))])
    def test_projection_totals(self, r, total):
        g, cert = glm_from_grid(2)
        wb = weighted_bramble_from_product_model(g, model_in_product_from_glm(g, cert), r)
        assert wb.total == total
        assert validate_weighted_bramble(g, wb, r)

    def test_total_at_least_a_third_of_order(self):
        g, cert = glm_from_grid(3)
        model = model_in_product_from_glm(g, cert)
        for r in (2, 3):
            assert weighted_bramble_from_product_model(g, model, r).total >= Fraction(model.order, 3)

    def test_overloaded_vertex(self, k3):
        b = Bramble.of([[0], [0, 1]])
        verdict = validate_weighted_bramble(k3, WeightedBramble(b, (Fraction(1), Fraction(1, 2))))
        assert not verdict and verdict.witness == 0

    def test_weight_not_multiple_of_one_over_r(self, k3):
        b = Bramble.of([[0]])
        assert not validate_weighted_bramble(k3, WeightedBramble(b, (Fraction(1, 2),)), r=3)

    def test_wrong_host(self, c4):
        with pytest.raises(CertificateError):
            weighted_bramble_from_product_model(c4, identity_model(c4), 2)

    def test_small_r(self):
        g, cert = glm_from_grid(2)
        with pytest.raises(InputError):
            weighted_bramble_from_product_model(g, model_in_product_from_glm(g, cert), 1)


class TestLinearPrograms:
    def test_fractional_optimum(self):
        value, x = solve_lp([1, 1], [[1, 0], [0, 1], [2, 2]], [1, 1, 3])
        assert value == Fraction(3, 2)
        assert sum(x) == Fraction(3, 2)

    def test_integer_optimum(self):
        value, x = solve_ip([1, 1], [[1, 0], [0, 1], [2, 2]], [1, 1, 3])
        assert value == 1
        assert sum(x) == 1

    def test_unbounded(self):
        with pytest.raises(InputError):
            solve_lp([1], [[0]], [1])

    def test_negative_rhs(self):
        with pytest.raises(InputError):
            solve_lp([1], [[1]], [-1])

    def test_ragged_rows(self):
        with pytest.raises(InputError):
            solve_lp([1, 1], [[1]], [1])


class TestFractionalHadwiger:
    def test_singletons_in_triangle(self, k3):
        assert fractional_order(k3, Bramble.of([[0], [1], [2]])) == 3

    def test_single_vertex(self):
        assert fractional_order(complete(1), Bramble.of([[0]])) == 1

    def test_arcs_of_c4(self, c4):
        assert fractional_order(c4, C4_ARCS) == 2
        assert integral_order(c4, C4_ARCS, 1) == 2
        assert bramble_order(c4, C4_ARCS)[0] == 2

    def test_integral_order_bad_r(self, c4):
        with pytest.raises(InputError):
            integral_order(c4, C4_ARCS, 0)

    def test_not_a_bramble(self, c4):
        with pytest.raises(CertificateError):
            fractional_order(c4, Bramble.of([[0], [2]]))

    def test_bramble_from_model(self, k4):
        _, model = hadwiger_number(k4)
        assert fractional_order(k4, bramble_from_model(model)) == 4

    def test_bramble_from_non_complete_model(self, p4):
        with pytest.raises(InputError):
            bramble_from_model(identity_model(p4))

    def test_maximal_brambles_of_edge(self):
        brambles = maximal_brambles(path(2))
        assert len(brambles) == 1
        assert set(brambles[0].elements) == {frozenset({0}), frozenset({1}), frozenset({0, 1})}

    @pytest.mark.parametrize("graph,expected", [(complete(4), 4), (complete(1), 1), (cycle(4), 3)])
    def test_had_f(self, graph, expected):
        assert had_f_small(graph) == expected

    def test_had_f_empty(self):
        assert had_f_small(Graph.from_edges(0, [])) == 0

    @pytest.mark.parametrize("graph", [path(4), cycle(4), complete(3), cycle(5)])
    def test_chain(self, graph):
        had = hadwiger_number(graph)[0]
        had_f = had_f_small(graph)
        assert had <= had_f <= exact_treewidth(graph)[0] + 1
        for r in (2, 3):
            assert had_f_small(graph, r=r) <= had_f

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            had_f_small(path(7))
