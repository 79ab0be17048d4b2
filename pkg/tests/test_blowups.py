"""Composition, blow-ups, realizer lifting, and twin quotients."""

from __future__ import annotations

import random

import pytest

from conftest import random_graph
from permgraph import (
    BlowupPart,
    BlowupSpec,
    MalformedInputError,
    ParseError,
    Permutation,
    apply_blowup,
    are_isomorphic,
    blowup_realizer,
    build_graph,
    complete_graph,
    compose,
    cycle_graph,
    empty_graph,
    format_blowup_spec,
    graph_from_permutation,
    is_blowup_of_path,
    ladder_graph,
    minimal_base,
    parse_blowup_spec,
    parse_part,
    path_graph,
    twin_partition,
)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    return Permutation(rng.sample(range(1, n + 1), n))


def random_spec(rng: random.Random, max_base: int = 5, max_part: int = 3) -> BlowupSpec:
    base_n = rng.randint(1, max_base)
    base = random_graph(rng, base_n, 0.5)
    parts = tuple(
        BlowupPart(rng.choice("KI"), rng.randint(1, max_part)) for _ in range(base_n)
    )
    return BlowupSpec(base, parts)


class TestParts:
    def test_size_one_normalizes_to_k(self):
        assert parse_part("I1") == BlowupPart("K", 1)
        assert parse_part("K1").token() == "K1"
        assert parse_part("I2").token() == "I2"

    def test_materialize(self):
        assert BlowupPart("K", 3).materialize() == complete_graph(3)
        assert BlowupPart("I", 3).materialize() == empty_graph(3)

    def test_bad_tokens(self):
        for text in ("X2", "K0", "K", "2K", "k2"):
            with pytest.raises((ParseError, MalformedInputError)):
                parse_part(text)


class TestCompose:
    def test_k4_from_edge_of_k2s(self):
        g = compose(complete_graph(2), [complete_graph(2), complete_graph(2)])
        assert g == complete_graph(4)

    def test_blocks_are_consecutive_in_base_vertex_order(self):
        g = compose(path_graph(2), [empty_graph(2), complete_graph(1)])
        assert g == build_graph(3, [(1, 3), (2, 3)])

    def test_part_count_must_match(self):
        with pytest.raises(MalformedInputError):
            compose(path_graph(3), [complete_graph(1)])

    def test_apply_blowup_equals_compose_with_materialized_parts(self):
        rng = random.Random(30)
        for _ in range(60):
            spec = random_spec(rng)
            assert apply_blowup(spec) == compose(
                spec.base, [p.materialize() for p in spec.parts]
            )

    def test_order_formula(self):
        rng = random.Random(31)
        for _ in range(30):
            spec = random_spec(rng)
            assert apply_blowup(spec).n == spec.order() == sum(p.size for p in spec.parts)


class TestBlowupRealizer:
    def test_k4_regression_is_exact(self):
        lifted = blowup_realizer(
            Permutation([2, 1]), [Permutation([2, 1]), Permutation([2, 1])]
        )
        assert lifted.values == (4, 3, 2, 1)
        assert graph_from_permutation(lifted) == complete_graph(4)

    def test_lift_matches_composition_exactly(self):
        # Label-for-label equality, not just isomorphism: block b of the
        # composed graph carries factor b shifted by the sizes before it.
        rng = random.Random(32)
        for _ in range(150):
            sigma = random_permutation(rng, rng.randint(1, 5))
            taus = [random_permutation(rng, rng.randint(1, 3)) for _ in sigma.values]
            lifted = blowup_realizer(sigma, taus)
            composed = compose(
                graph_from_permutation(sigma),
                [graph_from_permutation(t) for t in taus],
            )
            assert graph_from_permutation(lifted) == composed

    def test_factor_count_must_match(self):
        with pytest.raises(MalformedInputError):
            blowup_realizer(Permutation([2, 1]), [Permutation([1])])


class TestSpecText:
    def test_round_trip(self):
        rng = random.Random(33)
        for _ in range(40):
            spec = random_spec(rng)
            again = parse_blowup_spec(format_blowup_spec(spec))
            assert again.base == spec.base
            assert again.parts == spec.parts

    def test_format_is_graph6_line_then_token_line(self):
        spec = BlowupSpec(path_graph(2), (BlowupPart("K", 2), BlowupPart("I", 2)))
        assert format_blowup_spec(spec) == "A_\nK2 I2\n"

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            parse_blowup_spec("A_\n")
        with pytest.raises(MalformedInputError):
            parse_blowup_spec("A_\nK2\n")
        with pytest.raises((ParseError, MalformedInputError)):
            parse_blowup_spec("A_\nK2 X9\n")


class TestTwinPartition:
    def test_c4_has_two_independent_classes(self):
        part = twin_partition(cycle_graph(4))
        assert part.classes == ((1, 3), (2, 4))
        assert part.kinds == ("I", "I")

    def test_k4_is_one_clique_class(self):
        part = twin_partition(complete_graph(4))
        assert part.classes == ((1, 2, 3, 4),)
        assert part.kinds == ("K",)

    def test_ladder_has_no_twins(self):
        part = twin_partition(ladder_graph(4))
        assert all(len(c) == 1 for c in part.classes)


class TestMinimalBase:
    def test_c4_quotient_stops_at_k2_of_independents(self):
        # Iterating the twin quotient naively would continue K2 -> K1, but
        # C4 is not a blow-up of K1, so the fixed point is K2[I2, I2].
        base, spec = minimal_base(cycle_graph(4))
        assert base == complete_graph(2)
        assert spec.parts == (BlowupPart("I", 2), BlowupPart("I", 2))
        assert are_isomorphic(apply_blowup(spec), cycle_graph(4)) is not None

    def test_reconstruction_is_exact_for_invariant_labelings(self, perimeter_ladder):
        spec = BlowupSpec(
            perimeter_ladder,
            tuple(parse_part(t) for t in ["K2", "K1", "K1", "K2", "K2", "K1", "K1", "K2"]),
        )
        base, found = minimal_base(apply_blowup(spec))
        assert base == perimeter_ladder
        assert found.parts == spec.parts

    def test_ladder_blowup_quotient_is_the_ladder(self, ladder_blowup):
        base, spec = minimal_base(ladder_blowup)
        assert are_isomorphic(base, ladder_graph(4)) is not None
        assert sorted(p.token() for p in spec.parts) == ["K1"] * 4 + ["K2"] * 4

    def test_round_trips_up_to_isomorphism(self):
        rng = random.Random(34)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 8), 0.5)
            base, spec = minimal_base(g)
            assert are_isomorphic(apply_blowup(spec), g) is not None
            # fixed point: quotienting the reconstruction cannot shrink further
            again, _ = minimal_base(apply_blowup(spec))
            assert again.n == base.n


class TestIsBlowupOfPath:
    def test_recovers_random_path_specs(self):
        rng = random.Random(35)
        for _ in range(50):
            k = rng.randint(1, 6)
            parts = tuple(
                BlowupPart(rng.choice("KI"), rng.randint(1, 3)) for _ in range(k)
            )
            g = apply_blowup(BlowupSpec(path_graph(k), parts))
            found = is_blowup_of_path(g)
            assert found is not None
            base, spec = found
            assert base == path_graph(spec.base.n)
            assert are_isomorphic(apply_blowup(spec), g) is not None

    def test_direction_choice_is_canonical(self):
        parts = tuple(parse_part(t) for t in ["K2", "K1", "I2"])
        g = apply_blowup(BlowupSpec(path_graph(3), parts))
        flipped = apply_blowup(BlowupSpec(path_graph(3), tuple(reversed(parts))))
        _, spec1 = is_blowup_of_path(g)
        _, spec2 = is_blowup_of_path(flipped)
        assert [p.token() for p in spec1.parts] == [p.token() for p in spec2.parts]

    def test_rejects_non_path_quotients(self, ladder_blowup, petersen):
        assert is_blowup_of_path(cycle_graph(5)) is None
        assert is_blowup_of_path(ladder_blowup) is None
        assert is_blowup_of_path(petersen) is None
        assert is_blowup_of_path(ladder_graph(4)) is None
