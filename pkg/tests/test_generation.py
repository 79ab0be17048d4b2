"""Exhaustive small-graph generation used as the census oracle."""

from __future__ import annotations

import itertools

import networkx as nx
import pytest

from conftest import to_networkx
from permgraph import (
    CapacityError,
    are_isomorphic,
    connected_cubic_graphs,
    connected_graphs_bounded_degree,
    is_connected,
    is_regular,
)


class TestBoundedDegreeGeneration:
    def test_degree_two_counts_paths_and_cycles(self):
        # connected graphs with max degree 2 are exactly paths and cycles
        assert len(connected_graphs_bounded_degree(1, 2)) == 1
        assert len(connected_graphs_bounded_degree(2, 2)) == 1
        for n in (3, 4, 5, 6):
            assert len(connected_graphs_bounded_degree(n, 2)) == 2

    def test_against_the_networkx_atlas(self):
        # the atlas holds every graph on up to 7 vertices
        atlas = nx.graph_atlas_g()
        for n in range(1, 8):
            for d in (2, 3):
                expected = sum(
                    1
                    for g in atlas
                    if g.number_of_nodes() == n
                    and nx.is_connected(g)
                    and max((deg for _, deg in g.degree()), default=0) <= d
                )
                assert len(connected_graphs_bounded_degree(n, d)) == expected

    def test_members_are_connected_within_bound_and_distinct(self):
        graphs = connected_graphs_bounded_degree(6, 3)
        for g in graphs:
            assert g.n == 6 and is_connected(g) and g.max_degree() <= 3
        for a, b in itertools.combinations(graphs, 2):
            assert are_isomorphic(a, b) is None


class TestCubicCensus:
    def test_literature_counts_through_ten(self):
        assert len(connected_cubic_graphs(4)) == 1
        assert len(connected_cubic_graphs(6)) == 2
        assert len(connected_cubic_graphs(8)) == 5
        assert len(connected_cubic_graphs(10)) == 19

    def test_no_cubic_graphs_on_odd_or_tiny_orders(self):
        assert connected_cubic_graphs(5) == []
        assert connected_cubic_graphs(7) == []
        assert connected_cubic_graphs(2) == []

    def test_members_are_cubic_connected_and_distinct(self):
        graphs = connected_cubic_graphs(8)
        for g in graphs:
            assert is_regular(g, 3) and is_connected(g)
        for a, b in itertools.combinations(graphs, 2):
            assert are_isomorphic(a, b) is None
        # agreement with networkx's isomorphism as well
        for a, b in itertools.combinations(graphs, 2):
            assert not nx.is_isomorphic(to_networkx(a), to_networkx(b))

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            connected_cubic_graphs(14)
