"""Affine crossing sets and the staircase splice wall checks."""

import random

import pytest

from gallery_crystals import (
    AffineRoot,
    RankMismatch,
    WeightVector,
    splice_disjointness,
    crossing_sets,
    empty_gallery,
    gallery_from_word,
    galleries_of_shape,
    path_vertices,
    positive_roots,
    random_gallery,
    spliced_gallery,
    stabilizer_condition,
    weight_of_full_column_word,
)
from _support import G, shapes_up_to


class TestPositiveRoots:
    def test_rank_three(self):
        assert positive_roots(3) == ((1, 2), (1, 3), (2, 3))

    def test_rank_two(self):
        assert positive_roots(2) == ((1, 2),)

    def test_rank_four_count(self):
        assert len(positive_roots(4)) == 6


class TestCrossingSets:
    def test_staircase_word(self):
        segments = crossing_sets(gallery_from_word((1, 2, 3), 3))
        assert segments == (
            (AffineRoot(1, 2, 0), AffineRoot(1, 3, 0)),
            (AffineRoot(2, 3, 0),),
            (),
        )

    def test_empty(self):
        assert crossing_sets(empty_gallery(3)) == ()

    def test_single_box_rank_two(self):
        assert crossing_sets(G("1", 2)) == ((AffineRoot(1, 2, 0),),)

    def test_count_bound(self):
        for g in [G("1,2|1", 3), G("3|1,2|5|2", 5), gallery_from_word((2, 2, 1), 3)]:
            bound = g.rank * (g.rank - 1) // 2
            assert all(len(segment) <= bound for segment in crossing_sets(g))

    def test_levels_sit_on_walls(self):
        g = G("2|1,3|2", 4)
        verts = path_vertices(g)
        for k, segment in enumerate(crossing_sets(g)):
            for root in segment:
                assert root.root_pairing(verts[k]) == root.level
                assert root.root_pairing(verts[k + 1]) > root.level

    def test_net_crossings_match_endpoint(self):
        # strictly-positive crossings minus strictly-negative moves equals the
        # total pairing change along the path, root by root
        for g in [G("2|3|1", 3), G("1,3|2|2,3", 4), gallery_from_word((3, 1, 2, 2), 3)]:
            verts = path_vertices(g)
            segments = crossing_sets(g)
            for a, b in positive_roots(g.rank):
                ups = sum(
                    1 for segment in segments for r in segment if (r.a, r.b) == (a, b)
                )
                downs = sum(
                    1
                    for cur, nxt in zip(verts, verts[1:])
                    if nxt[a - 1] - nxt[b - 1] < cur[a - 1] - cur[b - 1]
                )
                total = verts[-1][a - 1] - verts[-1][b - 1]
                assert ups - downs == total


class TestSplicedGallery:
    def test_reading_order(self):
        gamma = G("1", 3)
        delta = G("2", 3)
        eta, k = spliced_gallery(gamma, delta)
        assert k == 1
        assert eta.columns == ((2,), (1,), (2,), (3,), (1,))

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            spliced_gallery(G("1", 3), G("1", 4))


class TestWeightOfFullColumnWord:
    @pytest.mark.parametrize("rank", [2, 3, 5])
    def test_zero(self, rank):
        assert weight_of_full_column_word(rank) == WeightVector.zero(rank)


class TestAppendixChecks:
    def test_trivial_pair(self):
        assert splice_disjointness(empty_gallery(3), empty_gallery(3)).ok
        assert stabilizer_condition(empty_gallery(3), empty_gallery(3)).ok

    def test_single_box_gamma(self):
        assert splice_disjointness(G("1", 3), empty_gallery(3)).ok

    def test_repeated_column_gamma(self):
        assert stabilizer_condition(G("1|1", 3), empty_gallery(3)).ok

    def test_exhaustive_one_column_pairs(self):
        rank = 3
        singles = [empty_gallery(rank)] + [
            g for shape in shapes_up_to(2, rank - 1) if len(shape) == 1
            for g in galleries_of_shape(shape, rank)
        ]
        for gamma in singles:
            for delta in singles:
                assert splice_disjointness(gamma, delta).ok
                assert stabilizer_condition(gamma, delta).ok

    def test_random_pairs_are_reproducible(self):
        rng = random.Random(7)
        first = [random_gallery(rng, 3) for _ in range(10)]
        rng = random.Random(7)
        second = [random_gallery(rng, 3) for _ in range(10)]
        assert first == second
        for gamma, delta in zip(first, second):
            assert splice_disjointness(gamma, delta).ok
            assert stabilizer_condition(gamma, delta).ok
