"""MV cycle labels, fibers, image weights, surjectivity."""

import pytest

from gallery_crystals import (
    DominantWeight,
    InvalidLabel,
    WeightVector,
    connected_component,
    empty_gallery,
    f,
    fiber,
    format_gallery,
    gallery_from_word,
    highest_weight_crystal,
    image_weights,
    make_label,
    mv_label,
    normal_form,
    verify_surjectivity,
    weight,
)
from _support import G, shapes_up_to


class TestMvLabel:
    def test_word_gallery(self):
        label = mv_label(gallery_from_word((1, 2, 1), 3))
        assert label.lam == DominantWeight((1, 1))
        assert format_gallery(label.tableau) == "1,2|1"
        assert label.mu == WeightVector((2, 1, 0))

    def test_empty(self):
        label = mv_label(empty_gallery(3))
        assert label.lam.is_zero()
        assert label.tableau == empty_gallery(3)
        assert label.mu.is_zero()

    def test_staircase_word(self):
        label = mv_label(gallery_from_word((1, 2, 3), 3))
        assert label.lam.is_zero() and label.mu.is_zero()
        assert label.tableau == empty_gallery(3)

    def test_mu_matches_tableau(self):
        for g in [G("2|3|1", 3), G("3|1,2|5|2", 5), G("1,3|2", 3)]:
            label = mv_label(g)
            assert label.mu == weight(g) == weight(label.tableau)

    def test_label_validation(self):
        with pytest.raises(InvalidLabel):
            make_label(DominantWeight((1, 1)), G("1|1", 3))  # shape mismatch
        with pytest.raises(InvalidLabel):
            make_label(DominantWeight((2, 0)), G("2|1", 3))  # not an SSYT


class TestFiber:
    def test_adjoint_label(self):
        label = make_label(DominantWeight((1, 1)), G("1,2|1", 3))
        hits = fiber(label, (1, 1, 1))
        assert {format_gallery(g) for g in hits} == {"2|1|1", "1|2|1"}

    def test_zero_label(self):
        label = make_label(DominantWeight((0, 0)), empty_gallery(3))
        hits = fiber(label, (1, 1, 1))
        assert [format_gallery(g) for g in hits] == ["3|2|1"]
        assert hits[0] == gallery_from_word((1, 2, 3), 3)

    def test_empty_fiber(self):
        label = make_label(DominantWeight((2, 0)), G("1|1", 3))
        assert fiber(label, (2,)) == ()

    def test_fiber_members_map_back(self):
        label = make_label(DominantWeight((1, 1)), G("1,2|1", 3))
        for g in fiber(label, (2, 1)):
            assert normal_form(g) == label.tableau


class TestImageWeights:
    def test_three_boxes(self):
        table = {
            lam.coeffs: mult for lam, mult in image_weights((1, 1, 1), 3).items()
        }
        assert table == {(3, 0): 1, (1, 1): 2, (0, 0): 1}

    def test_single_box(self):
        table = image_weights((1,), 3)
        assert table == {DominantWeight((1, 0)): 1}

    def test_mirrored_adjoint(self):
        assert image_weights((2, 1), 3)[DominantWeight((1, 1))] >= 1


class TestSurjectivity:
    def test_three_boxes(self):
        report = verify_surjectivity((1, 1, 1), 3)
        assert report.ok and not report.misses
        # 10 tableaux for 3*omega_1, 8 for the adjoint, 1 empty
        assert report.labels_checked == 10 + 8 + 1

    def test_rank_two_box(self):
        report = verify_surjectivity((1,), 2)
        assert report.ok and report.labels_checked == 2

    def test_two_columns(self):
        report = verify_surjectivity((2, 2), 3)
        assert report.ok


class TestMorphismAndInjectivity:
    def test_label_map_commutes_with_lowering(self):
        for shape in [(1, 1, 1), (2, 1), (1, 2)]:
            from gallery_crystals import galleries_of_shape

            for g in galleries_of_shape(shape, 3):
                for i in (1, 2):
                    image = f(g, i)
                    tableau_image = f(mv_label(g).tableau, i)
                    if image is None:
                        assert tableau_image is None
                    else:
                        assert mv_label(image).tableau == tableau_image

    def test_injective_on_components_with_blambda_image(self):
        comp = connected_component(gallery_from_word((1, 2, 1), 3))
        forms = {normal_form(v) for v in comp.vertices}
        assert len(forms) == len(comp)
        lam = mv_label(gallery_from_word((1, 2, 1), 3)).lam
        assert forms == set(highest_weight_crystal(lam).vertices)

    def test_fibers_partition_small_shapes(self):
        from gallery_crystals import count_galleries, galleries_of_shape

        for shape in shapes_up_to(3, 2):
            groups = {}
            for g in galleries_of_shape(shape, 3):
                groups.setdefault(normal_form(g), []).append(g)
            assert sum(len(v) for v in groups.values()) == count_galleries(shape, 3)
            for tableau, members in groups.items():
                label = mv_label(members[0])
                assert set(fiber(label, shape)) == set(members)
