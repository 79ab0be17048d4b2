"""Acceptance suite: twelve end-to-end checks, one test each, run at the
stated exactness and time budgets.  `pytest -v tests/test_acceptance.py`
prints one pass/fail line per criterion.
"""

from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager

from conftest import LADDER_BLOWUP_PERM, LADDER_PERM
from permgraph import (
    Permutation,
    apply_blowup,
    are_isomorphic,
    blowup_realizer,
    boxcar_graph,
    boxcar_hamiltonian_path,
    certificate_realizes,
    complement,
    complete_bipartite_graph,
    complete_graph,
    compose,
    connected_cubic_graphs,
    connected_graphs_bounded_degree,
    count_compositions_23,
    count_cubic,
    derive_forbidden_catalog,
    find_realizer,
    generate_graphs,
    generate_sequences,
    graph_from_permutation,
    hamiltonian_path_bruteforce,
    has_ladder_subgraph,
    is_blowup_of_path,
    is_connected,
    is_cubic_permutation_graph_fast,
    is_planar,
    is_regular,
    ladder_graph,
    minimal_base,
    parse_blowup_spec,
    parse_permutation,
    regular_family,
    regular_family_realizer,
)

PERIMETER_LADDER_SPEC = "GhCiKC\nK2 K1 K1 K2 K2 K1 K1 K2\n"


@contextmanager
def budget(seconds: float):
    start = time.monotonic()
    yield
    elapsed = time.monotonic() - start
    assert elapsed < seconds, f"budget exceeded: {elapsed:.1f}s >= {seconds}s"


def test_criterion_01_base_counts_match_the_closed_form():
    with budget(1):
        for n in list(range(1, 61, 2)) + [2, 8, 12]:
            assert count_cubic(n) == 0, n
        for n in (4, 6, 10, 14, 16, 18, 20):
            assert count_cubic(n) == 1, n


def test_criterion_02_recurrence_equals_generation_to_sixty():
    with budget(10):
        for n in range(4, 41, 2):
            assert count_cubic(n) == len(generate_graphs(n)), n
        for n in range(42, 61, 2):
            assert count_cubic(n) == len(generate_sequences(n)), n


def test_criterion_03_census_oracle_totals_and_realizable_sizes():
    expected_total = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
    expected_realizable = {4: 1, 6: 1, 8: 0, 10: 1, 12: 0}
    for n, per_n_budget in [(4, 30), (6, 30), (8, 30), (10, 30), (12, 600)]:
        with budget(per_n_budget):
            census = connected_cubic_graphs(n)
            assert len(census) == expected_total[n], n
            realizable = [g for g in census if find_realizer(g, max_order=n) is not None]
            assert len(realizable) == expected_realizable[n], n
            assert len(realizable) == count_cubic(n), n


def test_criterion_04_ladder_blowup_pipeline():
    with budget(1):
        g = graph_from_permutation(parse_permutation(LADDER_BLOWUP_PERM))
        assert g.n == 12
        assert is_regular(g, 4)

        base, _ = minimal_base(g)
        assert are_isomorphic(base, ladder_graph(4)) is not None

        assert is_blowup_of_path(g) is None

        spec = parse_blowup_spec(PERIMETER_LADDER_SPEC)
        assert are_isomorphic(apply_blowup(spec), g) is not None

        ladder_realizer = parse_permutation(LADDER_PERM)
        assert are_isomorphic(
            graph_from_permutation(ladder_realizer), ladder_graph(4)
        ) is not None


def test_criterion_05_realizer_lift_property_suite():
    with budget(30):
        lifted = blowup_realizer(Permutation([2, 1]), [Permutation([2, 1]), Permutation([2, 1])])
        assert lifted.values == (4, 3, 2, 1)
        assert graph_from_permutation(lifted) == complete_graph(4)

        rng = random.Random(1311)
        for _ in range(500):
            k = rng.randint(1, 6)
            sizes = []
            remaining = 14
            for _ in range(k):
                size = rng.randint(1, min(3, remaining - (k - len(sizes) - 1)))
                sizes.append(size)
                remaining -= size
            sigma = Permutation(rng.sample(range(1, k + 1), k))
            taus = [Permutation(rng.sample(range(1, s + 1), s)) for s in sizes]
            composed = compose(
                graph_from_permutation(sigma), [graph_from_permutation(t) for t in taus]
            )
            assert graph_from_permutation(blowup_realizer(sigma, taus)) == composed


def test_criterion_06_regular_families_with_verified_realizers():
    with budget(5):
        for r in (3, 4, 5):
            for n in range(5):
                g = regular_family(r, n)
                assert g.n == 2 * n * r + r + 1
                assert is_regular(g, r)
                assert is_connected(g)
                assert certificate_realizes(g, regular_family_realizer(r, n))


def test_criterion_07_planarity_of_the_family():
    with budget(10):
        assert is_planar(complete_graph(4))
        assert not is_planar(complete_bipartite_graph(3, 3))
        for n in range(10, 31, 2):
            for seq in generate_sequences(n):
                assert is_planar(boxcar_graph(seq)), seq


def test_criterion_08_hamiltonian_paths():
    with budget(60):
        for n in range(10, 27, 2):
            for seq in generate_sequences(n):
                g = boxcar_graph(seq)
                path = boxcar_hamiltonian_path(seq)
                assert sorted(path) == list(g.vertices()), seq
                assert all(g.has_edge(u, v) for u, v in zip(path, path[1:])), seq
                if n <= 14:
                    assert hamiltonian_path_bruteforce(g) is not None, seq


def test_criterion_09_no_four_rung_ladder_inside_members():
    with budget(60):
        members = [complete_graph(4), complete_bipartite_graph(3, 3)]
        for n in range(10, 21, 2):
            members.extend(generate_graphs(n))
        for g in members:
            assert has_ladder_subgraph(g, 4) is None, g
        assert has_ladder_subgraph(ladder_graph(4), 4) is not None


def test_criterion_10_catalog_recognizer_equals_brute_force():
    with budget(600):
        catalog = derive_forbidden_catalog(8)
        assert len(catalog.graphs) == 6
        disagreements = []
        for n in range(1, 9):
            for g in connected_graphs_bounded_degree(n, 3):
                fast = is_cubic_permutation_graph_fast(g, catalog)
                slow = find_realizer(g, max_order=8) is not None
                if fast != slow:
                    disagreements.append(g)
        assert disagreements == []


def test_criterion_11_reversal_realizes_the_complement():
    with budget(10):
        rng = random.Random(211)
        for _ in range(200):
            n = rng.randint(1, 9)
            p = Permutation(rng.sample(range(1, n + 1), n))
            rev = Permutation(tuple(reversed(p.values)))
            assert are_isomorphic(
                graph_from_permutation(rev), complement(graph_from_permutation(p))
            ) is not None


def test_criterion_12_composition_table_to_forty():
    def brute(total: int) -> int:
        if total < 0:
            return 0
        if total == 0:
            return 1
        return brute(total - 2) + brute(total - 3)

    with budget(1):
        listed = {0: [()]}
        for x in range(1, 41):
            listed[x] = [
                (first,) + rest
                for first in (2, 3)
                if first <= x
                for rest in listed[x - first]
            ]
        for x in range(41):
            t = count_compositions_23(x)
            assert t == len(listed[x]), x
            assert all(sum(c) == x for c in listed[x])
            if x >= 3:
                assert t == count_compositions_23(x - 2) + count_compositions_23(x - 3)
