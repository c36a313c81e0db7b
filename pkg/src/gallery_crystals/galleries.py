"""Core gallery combinatorics for SL_n: columns, words, weights, paths.

A gallery is a sequence of strictly increasing columns over the alphabet
{1..n}.  Columns are stored in *reading order*, the order in which the word
and the lattice path traverse them; in the usual left-to-right display this
is right to left.  The display string ``"3|1,2|5|2"`` therefore denotes the
gallery with reading-order columns ``[2], [5], [1,2], [3]``.

Weights live in Z^n modulo the all-ones vector.  `WeightVector` keeps the
canonical representative with minimum coordinate 0; `path_vertices` returns
raw (non-canonical) partial sums in Z^n because affine wall levels depend on
the chosen lift, which is fixed here to start at the origin.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import chain

from .errors import (
    ColumnTooLong,
    IndexOutOfRange,
    InvalidRank,
    LetterOutOfRange,
    NonIncreasingColumn,
    NotDominant,
    ParseError,
    RankMismatch,
    ShapeInvalid,
)

Word = tuple[int, ...]
Shape = tuple[int, ...]
LatticePoint = tuple[int, ...]


@dataclass(frozen=True)
class Gallery:
    """A filling of a column arrangement, columns in reading order.

    Columns of length ``rank`` are tolerated by the constructor because they
    occur transiently as plactic insertion output; proper galleries have
    columns of length at most ``rank - 1``, which `validate_gallery` (and all
    parsing) enforces.
    """

    rank: int
    columns: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 2:
            raise InvalidRank(f"rank must be an integer >= 2, got {self.rank!r}")
        cols = tuple(tuple(int(a) for a in col) for col in self.columns)
        object.__setattr__(self, "columns", cols)
        for col in cols:
            if not col:
                raise ShapeInvalid("empty column in gallery")
            if len(col) > self.rank:
                raise ColumnTooLong(f"column {col} longer than rank {self.rank}")
            for a in col:
                if not 1 <= a <= self.rank:
                    raise LetterOutOfRange(f"letter {a} not in 1..{self.rank}")
            if any(x >= y for x, y in zip(col, col[1:])):
                raise NonIncreasingColumn(f"column {col} is not strictly increasing")

    @classmethod
    def _unsafe(cls, rank: int, columns: tuple[tuple[int, ...], ...]) -> "Gallery":
        # Fast path for internal construction from already-validated columns.
        obj = object.__new__(cls)
        object.__setattr__(obj, "rank", rank)
        object.__setattr__(obj, "columns", columns)
        return obj

    @property
    def shape(self) -> Shape:
        """Column lengths in reading order."""
        return tuple(len(col) for col in self.columns)

    def __len__(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        return format_gallery(self)


def validate_gallery(rank: int, columns) -> Gallery:
    """Build a proper gallery: strictly increasing columns of length <= rank-1."""
    gallery = Gallery(rank, tuple(tuple(col) for col in columns))
    for col in gallery.columns:
        if len(col) > rank - 1:
            raise ColumnTooLong(
                f"column {col} has length {len(col)}; galleries allow at most {rank - 1}"
            )
    return gallery


def empty_gallery(rank: int) -> Gallery:
    return Gallery(rank, ())


def word(gallery: Gallery) -> Word:
    """Concatenate the column entries, top to bottom, in reading order."""
    return tuple(a for col in gallery.columns for a in col)


def gallery_from_word(letters, rank: int) -> Gallery:
    """The gallery of shape (1,...,1) whose word is the given letter sequence."""
    return Gallery(rank, tuple((int(a),) for a in letters))


def concat(outer: Gallery, inner: Gallery) -> Gallery:
    """Concatenation ``outer * inner``: ``inner`` is traversed first.

    In display terms the columns of ``inner`` sit to the right of those of
    ``outer``, so the reading-order column list is ``inner`` then ``outer``.
    """
    if outer.rank != inner.rank:
        raise RankMismatch(f"cannot concatenate ranks {outer.rank} and {inner.rank}")
    return Gallery._unsafe(outer.rank, inner.columns + outer.columns)


def weight(gallery: Gallery) -> "WeightVector":
    """Letter multiplicities of the gallery, as a canonical weight vector."""
    tallies = Counter(chain.from_iterable(gallery.columns))
    return WeightVector(tuple(tallies.get(a, 0) for a in range(1, gallery.rank + 1)))


def path_vertices(gallery: Gallery) -> tuple[LatticePoint, ...]:
    """Lattice points visited by the gallery's path, starting at the origin.

    The vertices are raw partial sums in Z^n, not canonicalized, because
    affine level computations depend on this specific lift.
    """
    cur = [0] * gallery.rank
    out = [tuple(cur)]
    for col in gallery.columns:
        for a in col:
            cur[a - 1] += 1
        out.append(tuple(cur))
    return tuple(out)


def is_dominant(gallery: Gallery) -> bool:
    """Whether the path stays in the dominant chamber.

    Checked on path vertices only: each vertex must have weakly decreasing
    coordinates.  Segment containment follows because the chamber is convex.
    """
    cur = [0] * gallery.rank
    for col in gallery.columns:
        for a in col:
            cur[a - 1] += 1
        if any(cur[k] < cur[k + 1] for k in range(gallery.rank - 1)):
            return False
    return True


@dataclass(frozen=True)
class WeightVector:
    """Element of Z^n modulo the all-ones vector, stored with min coordinate 0."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        if len(counts) < 2:
            raise InvalidRank("weight vectors need at least 2 coordinates")
        low = min(counts)
        if low:
            counts = tuple(c - low for c in counts)
        object.__setattr__(self, "counts", counts)

    @property
    def rank(self) -> int:
        return len(self.counts)

    def pairing(self, i: int) -> int:
        """Pairing with the i-th simple (co)root: counts[i] - counts[i+1]."""
        if not 1 <= i <= self.rank - 1:
            raise IndexOutOfRange(f"simple root index {i} not in 1..{self.rank - 1}")
        return self.counts[i - 1] - self.counts[i]

    def __add__(self, other: "WeightVector") -> "WeightVector":
        if not isinstance(other, WeightVector):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatch("weight vectors of different ranks")
        return WeightVector(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def add_simple_root(self, i: int) -> "WeightVector":
        self.pairing(i)  # index check
        counts = list(self.counts)
        counts[i - 1] += 1
        counts[i] -= 1
        return WeightVector(tuple(counts))

    def subtract_simple_root(self, i: int) -> "WeightVector":
        self.pairing(i)  # index check
        counts = list(self.counts)
        counts[i - 1] -= 1
        counts[i] += 1
        return WeightVector(tuple(counts))

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.counts, self.counts[1:]))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.counts)

    def to_dominant_weight(self) -> "DominantWeight":
        if not self.is_dominant():
            raise NotDominant(f"counts {self.counts} are not weakly decreasing")
        coeffs = tuple(self.counts[k] - self.counts[k + 1] for k in range(self.rank - 1))
        return DominantWeight(coeffs)

    @staticmethod
    def zero(rank: int) -> "WeightVector":
        return WeightVector((0,) * rank)


def pairing(mu: WeightVector, i: int) -> int:
    return mu.pairing(i)


def dominance_leq(mu: WeightVector, lam: WeightVector) -> bool:
    """Whether lam - mu is a nonnegative integer combination of simple roots."""
    if mu.rank != lam.rank:
        raise RankMismatch("weight vectors of different ranks")
    n = mu.rank
    gap = sum(lam.counts) - sum(mu.counts)
    if gap % n:
        return False
    shift = gap // n
    prefix = 0
    for a, b in zip(mu.counts, lam.counts):
        prefix += b - (a + shift)
        if prefix < 0:
            return False
    return prefix == 0


@dataclass(frozen=True)
class DominantWeight:
    """Dominant weight in fundamental coordinates (m_1, ..., m_{n-1})."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(m) for m in self.coeffs)
        if not coeffs:
            raise InvalidRank("dominant weights need at least one fundamental coordinate")
        if any(m < 0 for m in coeffs):
            raise NotDominant(f"fundamental coordinates {coeffs} must be nonnegative")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs) + 1

    def to_weight_vector(self) -> WeightVector:
        """Counts (c_1, ..., c_n) with c_k the sum of m_i over i >= k (c_n = 0)."""
        counts = []
        tail = 0
        for m in reversed(self.coeffs):
            tail += m
            counts.append(tail)
        counts.reverse()
        counts.append(0)
        return WeightVector(tuple(counts))

    @classmethod
    def from_weight_vector(cls, mu: WeightVector) -> "DominantWeight":
        return mu.to_dominant_weight()

    def column_shape(self) -> Shape:
        """Reading-order shape with m_i columns of length i, weakly increasing."""
        shape: list[int] = []
        for i, m in enumerate(self.coeffs, start=1):
            shape.extend([i] * m)
        return tuple(shape)

    def is_zero(self) -> bool:
        return all(m == 0 for m in self.coeffs)

    @staticmethod
    def zero(rank: int) -> "DominantWeight":
        return DominantWeight((0,) * (rank - 1))

    def __str__(self) -> str:
        return ",".join(str(m) for m in self.coeffs)


def validate_shape(shape, rank: int) -> Shape:
    """Check a reading-order shape: every entry in 1..rank-1."""
    out = tuple(int(d) for d in shape)
    for d in out:
        if not 1 <= d <= rank - 1:
            raise ShapeInvalid(f"column length {d} not in 1..{rank - 1}")
    return out


# -- text formats -----------------------------------------------------------
#
# Gallery: display (left-to-right) columns separated by "|", entries within a
# column separated by ",".  The empty gallery is the empty string.
# Word: letters separated by spaces or commas; a bare digit string such as
# "25123" is accepted only when the rank is at most 9.

_TOKEN = re.compile(r"^\d+$")


def format_gallery(gallery: Gallery) -> str:
    return "|".join(",".join(str(a) for a in col) for col in reversed(gallery.columns))


def parse_gallery(text: str, rank: int) -> Gallery:
    text = text.strip()
    if not text:
        return validate_gallery(rank, ())
    display = []
    for chunk in text.split("|"):
        entries = [piece.strip() for piece in chunk.split(",")]
        if any(not _TOKEN.match(piece) for piece in entries):
            raise ParseError(f"malformed column {chunk!r}")
        display.append(tuple(int(piece) for piece in entries))
    return validate_gallery(rank, tuple(reversed(display)))


def format_word(letters) -> str:
    return " ".join(str(a) for a in letters)


def parse_word(text: str, rank: int) -> Word:
    text = text.strip()
    if not text:
        return ()
    tokens = [tok for tok in re.split(r"[,\s]+", text) if tok]
    if any(not _TOKEN.match(tok) for tok in tokens):
        raise ParseError(f"malformed word {text!r}")
    if len(tokens) == 1 and len(tokens[0]) > 1 and rank <= 9:
        letters = tuple(int(ch) for ch in tokens[0])
    else:
        letters = tuple(int(tok) for tok in tokens)
    for a in letters:
        if not 1 <= a <= rank:
            raise LetterOutOfRange(f"letter {a} not in 1..{rank}")
    return letters
