"""
Linear relation graph tests: edges, components, completeness and the
component factorization.
"""

import networkx as nx
import pytest

from app.core.exceptions import InputError
from app.domain.ideals import MonomialIdeal
from app.domain.relation_graph import (
    build_gamma,
    component_factorization,
    graph_analysis,
    is_complete,
    is_complete_on_all_variables,
)
from app.domain.stability import analytic_spread
from tests.helpers import ideal, mono


class TestBuildGamma:
    """{i, j} is an edge when x_i*u = x_j*v for generators u, v."""

    def test_k3_is_complete(self, k3):
        g = build_gamma(k3)
        assert g.edges == frozenset({(0, 1), (0, 2), (1, 2)})
        assert g.s == 1
        assert is_complete(g)
        assert is_complete_on_all_variables(g)

    def test_two_components(self, two_blocks):
        g = build_gamma(two_blocks)
        assert g.edge_list() == [[1, 2], [3, 4]]
        assert g.components == (frozenset({0, 1}), frozenset({2, 3}))
        assert g.s == 2
        assert not is_complete(g)

    def test_principal_ideal_has_empty_graph(self):
        g = build_gamma(ideal(2, (1, 1)))
        assert g.vertices == frozenset()
        assert g.s == 0
        assert not is_complete_on_all_variables(g)

    def test_single_variable_counts_as_complete(self):
        g = build_gamma(ideal(1, (2,)))
        assert is_complete_on_all_variables(g)

    def test_non_squarefree_relations(self):
        # x1*(x1*x2) = x2*(x1^2)
        g = build_gamma(ideal(2, (2, 0), (1, 1)))
        assert g.edges == frozenset({(0, 1)})

    def test_rejects_zero_and_mixed_degrees(self):
        with pytest.raises(InputError):
            build_gamma(MonomialIdeal.zero(2))
        with pytest.raises(InputError):
            build_gamma(ideal(2, (1, 0), (0, 2)))

    def test_networkx_view(self, two_blocks):
        G = build_gamma(two_blocks).to_networkx()
        assert nx.number_connected_components(G) == 2

    def test_spread_matches_component_count(self, k3, two_blocks, ex6):
        for I in (k3, two_blocks, ex6):
            assert analytic_spread(I) == I.n - build_gamma(I).s + 1


class TestGraphAnalysis:
    """Cutpoints and biconnected components."""

    def test_path_has_cutpoint(self):
        a = graph_analysis(nx.path_graph([1, 2, 3]))
        assert a.cutpoints == (2,)
        assert not a.is_biconnected

    def test_cycle_is_biconnected(self):
        a = graph_analysis(nx.cycle_graph(5))
        assert a.is_biconnected
        assert len(a.biconnected_components) == 1

    def test_two_triangles_sharing_a_vertex(self):
        G = nx.Graph([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
        a = graph_analysis(G)
        assert a.cutpoints == (3,)
        assert a.biconnected_components == (frozenset({1, 2, 3}), frozenset({3, 4, 5}))

    def test_disconnected_is_not_biconnected(self):
        G = nx.Graph([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        assert not graph_analysis(G).is_biconnected

    def test_self_loop_rejected(self):
        G = nx.Graph([(1, 1), (1, 2)])
        with pytest.raises(InputError):
            graph_analysis(G)


class TestComponentFactorization:
    """I = prod J_j over the components of the relation graph."""

    def test_two_blocks_factor(self, two_blocks):
        fact = component_factorization(two_blocks)
        assert fact.verified
        assert [f.variables for f in fact.factors] == [(0, 1), (2, 3)]
        assert all(f.ideal == MonomialIdeal.maximal(2) for f in fact.factors)
        assert all(f.degree == 1 for f in fact.factors)

    def test_connected_ideal_is_one_factor(self, k3):
        fact = component_factorization(k3)
        assert fact.verified
        assert len(fact.factors) == 1
        assert fact.factors[0].ideal == k3

    def test_isolated_support_variables_become_singletons(self):
        fact = component_factorization(ideal(2, (1, 1)))
        assert fact.verified
        assert [f.variables for f in fact.factors] == [(0,), (1,)]

    def test_failure_reports_witness(self):
        fact = component_factorization(ideal(4, (1, 0, 1, 0), (0, 1, 0, 1)))
        assert not fact.verified
        assert fact.witness == mono(1, 0, 1, 0)
