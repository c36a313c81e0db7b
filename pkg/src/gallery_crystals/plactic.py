"""Plactic monoid for SL_n and normalization to semistandard Young tableaux.

Words over {1..n} are considered modulo the Knuth relations, in the form
matching the right-to-left column reading convention used here:

    a.  y x z = y z x   for x <= y < z,
    b.  z x y = x z y   for x < y <= z,

together with the column relation

    c.  1 2 ... n = (empty word).

Every gallery is equivalent to a unique semistandard Young tableau with
columns of length at most n-1.  `normal_form` computes it by Schensted row
insertion of the gallery word (letters taken last to first, matching the
column reading convention) followed by removal of full columns, iterated
until stable.  `oracle_plactic_classes` is an independent brute-force
rewriting oracle used to certify the normal form at test scale.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import deque
from itertools import product

from .errors import RankMismatch
from .galleries import Gallery, Word, word


def is_ssyt(gallery: Gallery) -> bool:
    """Semistandard Young tableau test.

    Column lengths must be weakly increasing in reading order (so the display
    is a top-aligned Young diagram, longest column leftmost) and every row
    must be weakly increasing from left to right in display order.
    """
    lengths = gallery.shape
    if any(a > b for a, b in zip(lengths, lengths[1:])):
        return False
    display = tuple(reversed(gallery.columns))
    for left, right in zip(display, display[1:]):
        if any(left[t] > right[t] for t in range(len(right))):
            return False
    return True


def _rows_to_gallery(rows: list[list[int]], rank: int) -> Gallery:
    # Top-aligned rows to reading-order columns (rightmost display first).
    if not rows:
        return Gallery(rank, ())
    width = len(rows[0])
    display = []
    for j in range(width):
        display.append(tuple(row[j] for row in rows if j < len(row)))
    return Gallery(rank, tuple(reversed(display)))


def _gallery_to_rows(gallery: Gallery) -> list[list[int]]:
    display = tuple(reversed(gallery.columns))
    depth = max((len(col) for col in display), default=0)
    return [[col[t] for col in display if t < len(col)] for t in range(depth)]


def rsk_insert(letters, rank: int) -> Gallery:
    """Schensted row insertion of the letters, taken last to first.

    The output satisfies the row and column tableau conditions but may
    contain columns of length n; `strip_full_columns` removes those.
    """
    rows: list[list[int]] = []
    for x in reversed(tuple(letters)):
        x = int(x)
        i = 0
        while True:
            if i == len(rows):
                rows.append([x])
                break
            row = rows[i]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                break
            x, row[k] = row[k], x
            i += 1
    return _rows_to_gallery(rows, rank)


def strip_full_columns(tableau: Gallery) -> Gallery:
    """Drop every column of length n; such a column is necessarily 1,2,...,n."""
    n = tableau.rank
    kept = tuple(col for col in tableau.columns if len(col) < n)
    return Gallery._unsafe(n, kept)


def normal_form(gallery: Gallery) -> Gallery:
    """The unique equivalent semistandard Young tableau with columns <= n-1.

    Insertion can cascade: stripping full columns changes the word, so the
    remaining word is reinserted until the tableau is stable.
    """
    n = gallery.rank
    tableau = rsk_insert(word(gallery), n)
    while any(len(col) == n for col in tableau.columns):
        tableau = rsk_insert(word(strip_full_columns(tableau)), n)
    return tableau


def equivalent(gallery: Gallery, other: Gallery) -> bool:
    """Whether the two galleries lie in the same plactic class."""
    if gallery.rank != other.rank:
        raise RankMismatch(f"ranks {gallery.rank} and {other.rank} differ")
    return normal_form(gallery) == normal_form(other)


# -- brute-force rewriting oracle -------------------------------------------


def _knuth_neighbors(w: Word) -> list[Word]:
    # Both directions of relations a and b on each 3-letter window: a swaps
    # the last two letters, b swaps the first two.
    out = []
    for p in range(len(w) - 2):
        u, v, t = w[p], w[p + 1], w[p + 2]
        if (v <= u < t) or (t <= u < v):
            # a:  y x z <-> y z x  for x <= y < z
            out.append(w[: p + 1] + (t, v) + w[p + 3 :])
        if (v < t <= u) or (u < t <= v):
            # b:  z x y <-> x z y  for x < y <= z
            out.append(w[:p] + (v, u) + w[p + 2 :])
    return out


def _column_relation_neighbors(w: Word, staircase: Word, max_insert_len: int) -> list[Word]:
    n = len(staircase)
    out = []
    for p in range(len(w) - n + 1):
        if w[p : p + n] == staircase:
            out.append(w[:p] + w[p + n :])
    if len(w) <= max_insert_len:
        for p in range(len(w) + 1):
            out.append(w[:p] + staircase + w[p:])
    return out


def all_words(max_len: int, rank: int):
    """All words of length <= max_len over 1..rank, in shortlex order."""
    for length in range(max_len + 1):
        yield from product(range(1, rank + 1), repeat=length)


def oracle_plactic_classes(max_len: int, rank: int) -> tuple[tuple[Word, ...], ...]:
    """Partition all words of length <= max_len into plactic classes.

    The equivalence closure is explored by breadth-first search over single
    rewrites: relations a and b in both directions, and deletion or insertion
    of the factor 1...n at any position.  Intermediate words are allowed to
    grow to max_len + n, which suffices to connect classes at test scale.
    Classes are returned sorted, each class sorted shortlex, with only the
    words of length <= max_len reported.
    """
    staircase = tuple(range(1, rank + 1))
    seen: set[Word] = set()
    classes: list[tuple[Word, ...]] = []
    for start in all_words(max_len, rank):
        if start in seen:
            continue
        component: set[Word] = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            neighbors = _knuth_neighbors(w)
            neighbors += _column_relation_neighbors(w, staircase, max_len)
            for nb in neighbors:
                if nb not in component:
                    component.add(nb)
                    queue.append(nb)
        seen |= component
        members = sorted(
            (w for w in component if len(w) <= max_len), key=lambda w: (len(w), w)
        )
        classes.append(tuple(members))
    return tuple(sorted(classes, key=lambda cls: (len(cls[0]), cls[0])))
