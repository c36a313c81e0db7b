"""Affine root bookkeeping along gallery paths: crossing sets and wall checks.

An affine root is a positive root epsilon_a - epsilon_b (a < b) together
with an integer level m; its pairing with a lattice point x is x_a - x_b.
For each segment of a gallery's path the crossing set collects the affine
roots whose wall contains the segment's start while the segment moves
strictly to the positive side:

    S_i = { (alpha, m) : (alpha, gamma_i) = m and (alpha, gamma_{i+1}) > m }.

All levels are computed on the raw partial-sum lift starting at the origin.
The two splice checks concern the gallery eta obtained by splicing
the full staircase word 1,2,...,n between two galleries: the n spliced
segments have pairwise disjoint crossing sets, and every root crossed there
sits at a level at least the pairing with the splice's start vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import RankMismatch
from .galleries import Gallery, WeightVector, gallery_from_word, path_vertices, weight


@dataclass(frozen=True, order=True)
class AffineRoot:
    """Positive root epsilon_a - epsilon_b with an integer wall level."""

    a: int
    b: int
    level: int

    def root_pairing(self, point: tuple[int, ...]) -> int:
        return point[self.a - 1] - point[self.b - 1]


def positive_roots(rank: int) -> tuple[tuple[int, int], ...]:
    """All pairs (a, b) with 1 <= a < b <= rank."""
    return tuple((a, b) for a in range(1, rank + 1) for b in range(a + 1, rank + 1))


def crossing_sets(gallery: Gallery) -> tuple[tuple[AffineRoot, ...], ...]:
    """Per-segment crossing sets along the gallery's path, in a fixed total order."""
    verts = path_vertices(gallery)
    roots = positive_roots(gallery.rank)
    segments = []
    for cur, nxt in zip(verts, verts[1:]):
        crossed = []
        for a, b in roots:
            level = cur[a - 1] - cur[b - 1]
            if nxt[a - 1] - nxt[b - 1] > level:
                crossed.append(AffineRoot(a, b, level))
        segments.append(tuple(sorted(crossed)))
    return tuple(segments)


def staircase_gallery(rank: int) -> Gallery:
    """The word gallery of 1, 2, ..., n."""
    return gallery_from_word(range(1, rank + 1), rank)


def weight_of_full_column_word(rank: int) -> WeightVector:
    """Weight of the staircase word gallery; equal to zero in the weight lattice."""
    return weight(staircase_gallery(rank))


def spliced_gallery(gamma: Gallery, delta: Gallery) -> tuple[Gallery, int]:
    """The gallery gamma * staircase * delta and the reading position of the splice.

    Reading order runs delta first, then the n staircase columns, then gamma,
    so the spliced segments are the n path segments starting at index
    k = len(delta).
    """
    if gamma.rank != delta.rank:
        raise RankMismatch(f"ranks {gamma.rank} and {delta.rank} differ")
    n = gamma.rank
    columns = delta.columns + staircase_gallery(n).columns + gamma.columns
    return Gallery._unsafe(n, columns), len(delta.columns)


@dataclass(frozen=True)
class WallCheck:
    """Outcome of a splice wall condition, with a witness on failure."""

    ok: bool
    witness: tuple | None = None


def splice_disjointness(gamma: Gallery, delta: Gallery) -> WallCheck:
    """Whether the n spliced segments have pairwise disjoint crossing sets.

    The witness on failure is (segment_i, segment_j, root) using absolute
    segment indices of the spliced gallery.
    """
    eta, k = spliced_gallery(gamma, delta)
    n = eta.rank
    segments = crossing_sets(eta)[k : k + n]
    seen: dict[AffineRoot, int] = {}
    for offset, segment in enumerate(segments):
        for root in segment:
            if root in seen:
                return WallCheck(ok=False, witness=(seen[root], k + offset, root))
            seen[root] = k + offset
    return WallCheck(ok=True)


def stabilizer_condition(gamma: Gallery, delta: Gallery) -> WallCheck:
    """Whether every root crossed on the spliced segments has level at least
    its pairing with the splice's start vertex.

    This is the membership condition for the stabilizer group of the start
    vertex: a wall (alpha, m) qualifies when (alpha, start) <= m.  The
    witness on failure is (segment, root).
    """
    eta, k = spliced_gallery(gamma, delta)
    n = eta.rank
    start = path_vertices(eta)[k]
    segments = crossing_sets(eta)[k : k + n]
    for offset, segment in enumerate(segments):
        for root in segment:
            if root.root_pairing(start) > root.level:
                return WallCheck(ok=False, witness=(k + offset, root))
    return WallCheck(ok=True)


def random_gallery(rng: random.Random, rank: int, max_columns: int = 4) -> Gallery:
    """A uniform-ish random proper gallery for seeded property checks."""
    num_columns = rng.randint(0, max_columns)
    columns = []
    for _ in range(num_columns):
        length = rng.randint(1, rank - 1)
        columns.append(tuple(sorted(rng.sample(range(1, rank + 1), length))))
    return Gallery(rank, tuple(columns))
