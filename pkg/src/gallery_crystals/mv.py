"""Combinatorial MV cycle labels and the gallery-to-label map.

An MV cycle is identified here purely by its label: a dominant weight lambda
together with a semistandard Young tableau of shape underline(lambda).  The
map sends a gallery to the label of its plactic normal form; its fiber over
a label, within a fixed shape, is the plactic class of the label's tableau
intersected with that shape.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidLabel
from .galleries import (
    DominantWeight,
    Gallery,
    Shape,
    WeightVector,
    dominance_leq,
    validate_shape,
    weight,
)
from .graphs import decompose, enumerate_ssyt, galleries_of_shape
from .plactic import is_ssyt, normal_form


@dataclass(frozen=True)
class MVLabel:
    """Label (lambda, tableau) with the tableau weight mu kept alongside."""

    lam: DominantWeight
    tableau: Gallery
    mu: WeightVector

    def __post_init__(self) -> None:
        if self.lam.rank != self.tableau.rank:
            raise InvalidLabel("weight and tableau ranks differ")
        if not is_ssyt(self.tableau):
            raise InvalidLabel(f"{self.tableau} is not a semistandard Young tableau")
        if self.tableau.shape != self.lam.column_shape():
            raise InvalidLabel(
                f"tableau shape {self.tableau.shape} does not match "
                f"underline(lambda) = {self.lam.column_shape()}"
            )
        if self.mu != weight(self.tableau):
            raise InvalidLabel("stored mu differs from the tableau weight")
        if not dominance_leq(self.mu, self.lam.to_weight_vector()):
            raise InvalidLabel("mu is not below lambda in dominance order")


def make_label(lam: DominantWeight, tableau: Gallery) -> MVLabel:
    return MVLabel(lam=lam, tableau=tableau, mu=weight(tableau))


def mv_label(gallery: Gallery) -> MVLabel:
    """The label of the gallery: lambda from the normal form's shape, mu = weight."""
    tableau = normal_form(gallery)
    coeffs = [0] * (gallery.rank - 1)
    for col in tableau.columns:
        coeffs[len(col) - 1] += 1
    return MVLabel(
        lam=DominantWeight(tuple(coeffs)),
        tableau=tableau,
        mu=weight(gallery),
    )


def fiber(label: MVLabel, shape: Shape, rank: int | None = None) -> tuple[Gallery, ...]:
    """All galleries of the shape whose normal form is the label's tableau."""
    n = label.tableau.rank if rank is None else rank
    shape = validate_shape(shape, n)
    hits = [
        gallery
        for gallery in galleries_of_shape(shape, n)
        if normal_form(gallery) == label.tableau
    ]
    return tuple(sorted(hits, key=lambda g: (g.shape, g.columns)))


def image_weights(shape: Shape, rank: int) -> dict[DominantWeight, int]:
    """The dominant weights hit by the shape, with component multiplicities."""
    decomposition = decompose(shape, rank)
    return {entry.lam: entry.multiplicity for entry in decomposition.entries}


@dataclass(frozen=True)
class SurjectivityReport:
    ok: bool
    shape: Shape
    rank: int
    labels_checked: int
    misses: tuple[tuple[DominantWeight, Gallery], ...]


def verify_surjectivity(shape: Shape, rank: int) -> SurjectivityReport:
    """Check that every tableau of every weight in the image is hit.

    For each lambda in the image of the shape, the tableaux of shape
    underline(lambda) are enumerated directly (no crystal operators) and
    compared against the normal forms realized by the shape's galleries.
    """
    shape = validate_shape(shape, rank)
    hit: set[Gallery] = {normal_form(g) for g in galleries_of_shape(shape, rank)}
    misses: list[tuple[DominantWeight, Gallery]] = []
    checked = 0
    for lam in image_weights(shape, rank):
        for tableau in enumerate_ssyt(lam.column_shape(), rank):
            checked += 1
            if tableau not in hit:
                misses.append((lam, tableau))
    return SurjectivityReport(
        ok=not misses,
        shape=shape,
        rank=rank,
        labels_checked=checked,
        misses=tuple(misses),
    )
