"""Crystal graphs: components, highest weights, B(lambda), decompositions."""

import pytest

from gallery_crystals import (
    DominantWeight,
    NotConnected,
    ShapeInvalid,
    canonical_dominant_gallery,
    connected_component,
    count_galleries,
    decompose,
    e,
    empty_gallery,
    enumerate_ssyt,
    format_gallery,
    galleries_of_shape,
    gallery_from_word,
    highest_weight_crystal,
    highest_weight_vertex,
    is_dominant,
    is_isomorphic,
    weight,
    weyl_dimension,
    word,
)
from gallery_crystals.graphs import CrystalGraph
from _support import G

# The 8-vertex component of the dominant tableau "1,2|1" (rank 3), edges
# derived by hand from the tagging rules; it mirrors the standard two-ladder
# picture of the adjoint crystal.
ADJOINT_EDGES = {
    ("1,2|1", "1,2|2", 1),
    ("1,2|1", "1,3|1", 2),
    ("1,2|2", "1,2|3", 2),
    ("1,3|1", "1,3|2", 1),
    ("1,2|3", "1,3|3", 2),
    ("1,3|2", "2,3|2", 1),
    ("1,3|3", "2,3|3", 1),
    ("2,3|2", "2,3|3", 2),
}

# The same crystal drawn on the mirrored shape (reading order (2,1)).
ADJOINT_EDGES_MIRROR = {
    ("1|1,2", "2|1,2", 1),
    ("1|1,2", "1|1,3", 2),
    ("2|1,2", "2|1,3", 2),
    ("1|1,3", "1|2,3", 1),
    ("2|1,3", "3|1,3", 2),
    ("1|2,3", "2|2,3", 1),
    ("3|1,3", "3|2,3", 1),
    ("2|2,3", "3|2,3", 2),
}


def edge_strings(graph):
    return {(format_gallery(u), format_gallery(v), i) for u, v, i in graph.edges}


class TestConnectedComponent:
    def test_adjoint_component(self):
        comp = connected_component(G("1,2|1", 3))
        assert len(comp) == 8
        assert edge_strings(comp) == ADJOINT_EDGES

    def test_mirror_shape_component(self):
        comp = connected_component(G("1|1,2", 3))
        assert len(comp) == 8
        assert edge_strings(comp) == ADJOINT_EDGES_MIRROR

    def test_rank_two_box(self):
        comp = connected_component(G("1", 2))
        assert len(comp) == 2
        assert edge_strings(comp) == {("1", "2", 1)}

    def test_empty_gallery(self):
        comp = connected_component(empty_gallery(3))
        assert len(comp) == 1 and not comp.edges

    def test_closed_under_operators(self):
        comp = connected_component(G("1,2|1", 3))
        for v in comp.vertices:
            for i in (1, 2):
                from gallery_crystals import f

                for image in (f(v, i), e(v, i)):
                    assert image is None or image in comp.vertices


class TestHighestWeightVertex:
    def test_from_lowest(self):
        assert highest_weight_vertex(G("2,3|3", 3)) == G("1,2|1", 3)

    def test_fixed_point(self):
        nu = G("1,2|1", 3)
        assert highest_weight_vertex(nu) == nu

    def test_word_gallery(self):
        top = highest_weight_vertex(G("2|3|1", 3))
        assert is_dominant(top)
        assert all(e(top, i) is None for i in (1, 2))

    def test_unique_source_per_component(self):
        comp = connected_component(G("2|3|1", 3))
        sources = [
            v for v in comp.vertices if all(e(v, i) is None for i in (1, 2))
        ]
        assert len(sources) == 1
        assert is_dominant(sources[0])


class TestCanonicalDominantGallery:
    def test_adjoint(self):
        assert format_gallery(canonical_dominant_gallery(DominantWeight((1, 1)))) == "1,2|1"

    def test_zero(self):
        assert canonical_dominant_gallery(DominantWeight((0, 0))) == empty_gallery(3)

    def test_two_omega_one(self):
        assert format_gallery(canonical_dominant_gallery(DominantWeight((2, 0)))) == "1|1"

    def test_weight_and_dominance(self):
        for coeffs in [(1, 1), (3, 0), (0, 2), (2, 1)]:
            lam = DominantWeight(coeffs)
            g = canonical_dominant_gallery(lam)
            assert is_dominant(g)
            assert weight(g) == lam.to_weight_vector()


class TestHighestWeightCrystal:
    def test_adjoint_size(self):
        assert len(highest_weight_crystal(DominantWeight((1, 1)))) == 8

    def test_trivial(self):
        assert len(highest_weight_crystal(DominantWeight((0, 0)))) == 1

    def test_vector_representation(self):
        assert len(highest_weight_crystal(DominantWeight((1, 0)))) == 3

    def test_all_vertices_are_tableaux(self):
        from gallery_crystals import is_ssyt

        for coeffs in [(1, 1), (2, 0), (0, 2)]:
            crystal = highest_weight_crystal(DominantWeight(coeffs))
            assert all(is_ssyt(v) for v in crystal.vertices)


class TestIsIsomorphic:
    def test_shape_versus_word_reading(self):
        comp = connected_component(G("1|1,2", 3))
        words = connected_component(gallery_from_word(word(G("1|1,2", 3)), 3))
        ok, mapping = is_isomorphic(comp, words)
        assert ok
        for u, v, i in comp.edges:
            assert (mapping[u], mapping[v], i) in words.edges
        for u in comp.vertices:
            assert weight(mapping[u]) == weight(u)

    def test_different_weights(self):
        first = highest_weight_crystal(DominantWeight((1, 0)))
        second = highest_weight_crystal(DominantWeight((0, 1)))
        ok, mapping = is_isomorphic(first, second)
        assert not ok and mapping is None

    def test_identity(self):
        comp = highest_weight_crystal(DominantWeight((1, 1)))
        ok, mapping = is_isomorphic(comp, comp)
        assert ok
        assert all(mapping[v] == v for v in comp.vertices)

    def test_not_connected_rejected(self):
        a = G("1", 3)
        b = G("1|1", 3)
        disconnected = CrystalGraph(3, frozenset({a, b}), frozenset())
        with pytest.raises(NotConnected):
            is_isomorphic(disconnected, disconnected)


class TestDecompose:
    def test_three_boxes(self):
        dec = decompose((1, 1, 1), 3)
        assert dec.total == 27
        table = {entry.lam.coeffs: entry.multiplicity for entry in dec.entries}
        assert table == {(3, 0): 1, (1, 1): 2, (0, 0): 1}

    def test_single_box(self):
        dec = decompose((1,), 3)
        assert [(e_.lam.coeffs, e_.multiplicity) for e_ in dec.entries] == [((1, 0), 1)]

    def test_mirrored_adjoint_shape(self):
        dec = decompose((2, 1), 3)
        assert dec.multiplicity(DominantWeight((1, 1))) == 1
        reps = dec.entries
        assert any(
            format_gallery(g) == "1|1,2"
            for entry in reps
            for g in entry.representatives
        )

    def test_representatives_are_dominant(self):
        dec = decompose((1, 2), 3)
        for entry in dec.entries:
            for g in entry.representatives:
                assert is_dominant(g) and weight(g) == entry.lam.to_weight_vector()

    def test_dimension_sum(self):
        for shape, rank in [((1, 1, 1), 3), ((2, 1), 3), ((1, 2, 1), 4)]:
            dec = decompose(shape, rank)
            assert (
                sum(
                    entry.multiplicity * weyl_dimension(entry.lam)
                    for entry in dec.entries
                )
                == count_galleries(shape, rank)
                == dec.total
            )

    def test_invalid_shape(self):
        with pytest.raises(ShapeInvalid):
            decompose((3,), 3)


class TestWeylDimension:
    def test_adjoint(self):
        assert weyl_dimension(DominantWeight((1, 1))) == 8

    def test_trivial(self):
        assert weyl_dimension(DominantWeight((0, 0))) == 1

    def test_symmetric_cube(self):
        assert weyl_dimension(DominantWeight((3, 0))) == 10

    def test_fundamental_dimensions(self):
        # B(omega_k) for SL_4 has dimension C(4, k)
        assert weyl_dimension(DominantWeight((1, 0, 0))) == 4
        assert weyl_dimension(DominantWeight((0, 1, 0))) == 6
        assert weyl_dimension(DominantWeight((0, 0, 1))) == 4


class TestEnumerateSsyt:
    def test_adjoint_shape(self):
        tableaux = enumerate_ssyt((1, 2), 3)
        assert len(tableaux) == 8
        assert G("1,2|1", 3) in tableaux

    def test_row_shape(self):
        assert len(enumerate_ssyt((1, 1, 1), 3)) == 10

    def test_empty_shape(self):
        assert enumerate_ssyt((), 3) == [empty_gallery(3)]

    def test_non_monotone_shape(self):
        assert enumerate_ssyt((2, 1), 3) == []

    def test_matches_crystal_weights(self):
        from collections import Counter

        lam = DominantWeight((1, 1))
        crystal_weights = Counter(weight(v) for v in highest_weight_crystal(lam).vertices)
        tableau_weights = Counter(weight(t) for t in enumerate_ssyt(lam.column_shape(), 3))
        assert crystal_weights == tableau_weights

    def test_all_galleries_of_shape_count(self):
        assert sum(1 for _ in galleries_of_shape((1, 2, 1), 4)) == 4 * 6 * 4
