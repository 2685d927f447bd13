from fractions import Fraction
from itertools import combinations

import pytest
from pydantic import ValidationError

from certificates.bramble import bramble_order, validate_bramble
from config import Budget
from decompositions.treewidth import exact_treewidth
from families.generators import complete, complete_bipartite, gnp, grid, path, psi
from graph_core.flow import disjoint_paths
from graph_core.graph import Graph
from linkage.linked import bramble_from_linked_set, is_k_linked, linkedness, min_linking_cut
from linkage.query import LinkageQuery, run_linkage_query
from linkage.well_linked import is_k_connected_set, is_well_linked, is_well_linked_by_cuts, well_linked_number
from tests.conftest import cycle, edgeless, random_corpus_graph, random_corpus_indices
from utils.errors import BudgetExceeded, InputError


class TestLinked:
    @pytest.mark.parametrize(
        "graph,expected",
        [(complete(4), 2), (complete(5), 3), (complete(6), 3), (complete(8), 4), (psi(3, 2), 3), (path(4), 1)],
    )
    def test_linkedness(self, graph, expected):
        assert linkedness(graph)[0] == expected

    def test_edgeless(self):
        assert linkedness(edgeless(3)) == (1, frozenset({0}))

    def test_empty_graph(self):
        assert linkedness(edgeless(0)) == (0, frozenset())

    def test_witness_is_linked(self, grid3):
        k, s = linkedness(grid3)
        assert is_k_linked(grid3, s, k)
        assert not is_k_linked(grid3, s, k + 1)

    def test_is_k_linked(self, k4):
        assert is_k_linked(k4, range(4), 2)
        verdict = is_k_linked(k4, range(4), 3)
        assert not verdict
        assert len(verdict.witness) == 2

    def test_bad_k(self, k4):
        with pytest.raises(InputError):
            is_k_linked(k4, range(4), 0)

    def test_min_linking_cut(self, k5):
        size, x = min_linking_cut(k5, range(5))
        assert size == 3 and len(x) == 3

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            linkedness(path(11))

    def test_linkedness_respects_budget_override(self):
        assert linkedness(path(11), Budget(link_vertices=11))[0] == 1


class TestBrambleFromLinkedSet:
    def test_clique(self, k4):
        b = bramble_from_linked_set(k4, range(4), 2)
        assert validate_bramble(k4, b)
        assert bramble_order(k4, b)[0] >= 2

    def test_grid(self, grid3):
        k, s = linkedness(grid3)
        b = bramble_from_linked_set(grid3, s, k)
        assert validate_bramble(grid3, b)
        order = bramble_order(grid3, b)[0]
        assert k <= order <= exact_treewidth(grid3)[0] + 1

    def test_edgeless(self):
        b = bramble_from_linked_set(edgeless(3), {0}, 1)
        assert b.elements == (frozenset({0}),)

    def test_not_linked(self, k4):
        with pytest.raises(InputError):
            bramble_from_linked_set(k4, range(4), 3)


class TestWellLinked:
    def test_clique(self, k4):
        assert is_well_linked(k4, range(4))
        assert well_linked_number(k4)[0] == 4

    def test_path_three(self):
        g = path(3)
        verdict = is_well_linked(g, range(3))
        assert not verdict
        assert well_linked_number(g) == (2, frozenset({0, 1}))

    def test_external_forbids_s_inside_paths(self):
        g = path(3)
        assert is_well_linked(g, {0, 2}, external=True)
        assert not is_well_linked(g, {0, 1, 2}, external=True)

    @pytest.mark.parametrize("seed", range(6))
    def test_cut_oracle_agrees_with_flows(self, seed):
        g = gnp(6, Fraction(2, 5), seed)
        for size in range(1, 5):
            for s in combinations(range(6), size):
                assert bool(is_well_linked(g, s)) == bool(is_well_linked_by_cuts(g, s))

    @pytest.mark.parametrize("graph", [path(4), cycle(5), complete(4), grid(2, 3), psi(2, 2)])
    def test_bounds(self, graph):
        tw1 = exact_treewidth(graph)[0] + 1
        wl = well_linked_number(graph)[0]
        link = linkedness(graph)[0]
        assert tw1 <= wl <= 3 * link

    def test_larger_pair_passing_does_not_cover_smaller_pairs(self):
        # a=0, a'=1, b=2, b'=3 with edges a-b' and a'-b
        g = Graph.from_edges(4, [(0, 3), (1, 2)])
        assert disjoint_paths(g, [0, 1], [2, 3])[0] == 2
        assert disjoint_paths(g, [0], [2])[0] == 0
        assert not is_well_linked(g, range(4))
        assert not is_well_linked_by_cuts(g, range(4))

    @pytest.mark.slow
    def test_complete_bipartite(self):
        assert well_linked_number(complete_bipartite(6, 3))[0] == 6

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            well_linked_number(path(10))


class TestKConnectedSet:
    def test_clique(self, k5):
        assert is_k_connected_set(k5, range(5), 5)

    def test_edgeless(self):
        assert not is_k_connected_set(edgeless(3), range(3), 2)

    def test_too_small(self, k4):
        verdict = is_k_connected_set(k4, {0, 1}, 3)
        assert not verdict and verdict.witness == {0, 1}

    def test_external_clique(self, k4):
        assert is_k_connected_set(k4, range(4), 2, external=True)

    def test_external_path(self):
        g = path(3)
        assert is_k_connected_set(g, {0, 2}, 1, external=True)
        assert not is_k_connected_set(g, range(3), 1, external=True)
        assert is_k_connected_set(g, range(3), 1)


class TestLinkageQuery:
    def test_linked(self, k4):
        assert run_linkage_query(k4, LinkageQuery(s=(0, 1, 2, 3), k=2))
        assert not run_linkage_query(k4, LinkageQuery(s=(0, 1, 2, 3), k=3))

    @pytest.mark.parametrize(
        "mode,expected", [("well_linked", False), ("ext_well_linked", False), ("k_connected", True)]
    )
    def test_modes(self, mode, expected):
        assert bool(run_linkage_query(path(3), LinkageQuery(s=(0, 1, 2), mode=mode))) is expected

    def test_zero_k(self):
        with pytest.raises(ValidationError):
            LinkageQuery(s=(0,), k=0)

    def test_unknown_mode(self):
        with pytest.raises(ValidationError):
            LinkageQuery(s=(0,), mode="tangled")

    def test_out_of_range(self, k4):
        with pytest.raises(InputError):
            run_linkage_query(k4, LinkageQuery(s=(9,)))


class TestRandomCorpusChains:
    @pytest.mark.parametrize("index", random_corpus_indices())
    def test_linkedness_chain(self, index):
        g = random_corpus_graph(index)
        tw1 = exact_treewidth(g)[0] + 1
        link = linkedness(g)[0]
        assert link <= tw1 <= 2 * link

    @pytest.mark.parametrize("index", random_corpus_indices())
    def test_well_linked_chain(self, index):
        g = random_corpus_graph(index)
        tw1 = exact_treewidth(g)[0] + 1
        wl, s = well_linked_number(g)
        assert tw1 <= wl <= 3 * linkedness(g)[0]
        assert is_well_linked(g, s, external=True)
        if wl < g.n:
            larger = s | {min(set(range(g.n)) - s)}
            assert not is_well_linked_by_cuts(g, larger)
            assert not is_well_linked(g, larger, external=True)
