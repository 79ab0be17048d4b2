"""Shared fixtures: named graphs and permutations the tests keep returning to."""

from __future__ import annotations

import random

import pytest

from permgraph import Graph, build_graph, graph_from_permutation, parse_permutation

# A 12-vertex 4-regular blow-up of the 4-rung ladder, and a realizer of the ladder.
LADDER_BLOWUP_PERM = "[5,4,7,2,1,10,3,12,11,6,9,8]"
LADDER_PERM = "[3,5,1,7,2,8,4,6]"


@pytest.fixture
def ladder_blowup() -> Graph:
    return graph_from_permutation(parse_permutation(LADDER_BLOWUP_PERM))


@pytest.fixture
def petersen() -> Graph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    spokes = [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    return build_graph(10, outer + spokes + inner)


@pytest.fixture
def prism() -> Graph:
    return build_graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])


@pytest.fixture
def cube() -> Graph:
    return build_graph(
        8,
        [(1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7), (7, 8), (5, 8), (1, 5), (2, 6), (3, 7), (4, 8)],
    )


@pytest.fixture
def perimeter_ladder() -> Graph:
    """The 4-rung ladder labeled along its perimeter cycle."""
    return build_graph(
        8,
        [(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (1, 8), (2, 7), (3, 6), (4, 5)],
    )


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return build_graph(n, edges)


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    return h
