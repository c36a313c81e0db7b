"""Finite crystal graphs of galleries: components, B(lambda), decompositions.

A crystal graph is a labeled digraph on galleries with an edge (u, v, i)
whenever v = f_i(u).  Connected components are closed under every e_i and
f_i; each component has a unique source vertex (all e_i inapplicable), which
is dominant, and the component is determined up to isomorphism by that
vertex's weight.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import NotConnected, ShapeInvalid
from .galleries import (
    DominantWeight,
    Gallery,
    Shape,
    validate_shape,
    weight,
)
from .operators import e, f, lower_and_raise


@dataclass(frozen=True)
class CrystalGraph:
    """Immutable labeled digraph; edges are (source, target, i) with target = f_i(source)."""

    rank: int
    vertices: frozenset[Gallery]
    edges: frozenset[tuple[Gallery, Gallery, int]]

    def sorted_vertices(self) -> list[Gallery]:
        """Canonical vertex order: lexicographic on (shape, columns in reading order)."""
        return sorted(self.vertices, key=lambda g: (g.shape, g.columns))

    def sorted_edges(self) -> list[tuple[Gallery, Gallery, int]]:
        index = {g: k for k, g in enumerate(self.sorted_vertices())}
        return sorted(self.edges, key=lambda edge: (index[edge[0]], edge[2], index[edge[1]]))

    def __len__(self) -> int:
        return len(self.vertices)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adjacency: dict[Gallery, list[Gallery]] = {g: [] for g in self.vertices}
        for u, v, _ in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        start = next(iter(self.vertices))
        seen = {start}
        queue = deque([start])
        while queue:
            for nb in adjacency[queue.popleft()]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return len(seen) == len(self.vertices)


def connected_component(gallery: Gallery) -> CrystalGraph:
    """Closure of the gallery under all e_i and f_i."""
    n = gallery.rank
    seen = {gallery}
    queue = deque([gallery])
    edges: set[tuple[Gallery, Gallery, int]] = set()
    while queue:
        v = queue.popleft()
        for i in range(1, n):
            w, u = lower_and_raise(v, i)
            if w is not None:
                edges.add((v, w, i))
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
            if u is not None:
                edges.add((u, v, i))
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return CrystalGraph(n, frozenset(seen), frozenset(edges))


def highest_weight_vertex(gallery: Gallery) -> Gallery:
    """Apply raising operators until none applies; smallest index first.

    The endpoint does not depend on the order of application (each step
    raises the weight and the component has a unique source); a randomized
    property test enforces this.
    """
    n = gallery.rank
    current = gallery
    while True:
        for i in range(1, n):
            raised = e(current, i)
            if raised is not None:
                current = raised
                break
        else:
            return current


def canonical_dominant_gallery(lam: DominantWeight) -> Gallery:
    """The dominant tableau of shape underline(lambda): each column filled 1..d."""
    columns = tuple(tuple(range(1, d + 1)) for d in lam.column_shape())
    return Gallery(lam.rank, columns)


def highest_weight_crystal(lam: DominantWeight) -> CrystalGraph:
    """The connected crystal B(lambda), generated from its dominant tableau."""
    return connected_component(canonical_dominant_gallery(lam))


def _source_vertex(graph: CrystalGraph) -> Gallery:
    sources = [v for v in graph.vertices if all(e(v, i) is None for i in range(1, graph.rank))]
    if len(sources) != 1:
        raise NotConnected(f"expected a unique source vertex, found {len(sources)}")
    return sources[0]


def is_isomorphic(
    first: CrystalGraph, second: CrystalGraph
) -> tuple[bool, dict[Gallery, Gallery] | None]:
    """Label-preserving crystal isomorphism test for connected graphs.

    Runs a simultaneous traversal from the two source vertices, matching
    f_i and e_i moves step for step.  Returns the vertex map on success; the
    map preserves weights because the sources agree and every edge shifts
    the weight by the same simple root on both sides.
    """
    for graph in (first, second):
        if not graph.is_connected():
            raise NotConnected("is_isomorphic requires connected crystal graphs")
    if first.rank != second.rank or len(first) != len(second):
        return False, None
    a = _source_vertex(first)
    b = _source_vertex(second)
    if weight(a) != weight(b):
        return False, None
    mapping = {a: b}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        v = mapping[u]
        for i in range(1, first.rank):
            for op in (f, e):
                nu = op(u, i)
                nv = op(v, i)
                if (nu is None) != (nv is None):
                    return False, None
                if nu is None:
                    continue
                known = mapping.get(nu)
                if known is None:
                    mapping[nu] = nv
                    queue.append(nu)
                elif known != nv:
                    return False, None
    if len(mapping) != len(first):
        return False, None
    return True, mapping


def weyl_dimension(lam: DominantWeight) -> int:
    """Dimension of the simple module of highest weight lambda, exactly.

    Product over pairs i < j of (c_i - c_j + j - i) / (j - i) on the
    canonical counts; used as an external oracle for crystal sizes.
    """
    counts = lam.to_weight_vector().counts
    n = len(counts)
    numerator = 1
    denominator = 1
    for i in range(n):
        for j in range(i + 1, n):
            numerator *= counts[i] - counts[j] + j - i
            denominator *= j - i
    assert numerator % denominator == 0
    return numerator // denominator


def galleries_of_shape(shape: Shape, rank: int):
    """All galleries of the given reading-order shape, in lexicographic order."""
    shape = validate_shape(shape, rank)
    alphabets = [tuple(combinations(range(1, rank + 1), d)) for d in shape]
    for cols in product(*alphabets):
        yield Gallery._unsafe(rank, cols)


def count_galleries(shape: Shape, rank: int) -> int:
    shape = validate_shape(shape, rank)
    total = 1
    for d in shape:
        total *= comb(rank, d)
    return total


@dataclass(frozen=True)
class DecompositionEntry:
    lam: DominantWeight
    multiplicity: int
    representatives: tuple[Gallery, ...]


@dataclass(frozen=True)
class Decomposition:
    """Connected components of the shape crystal, grouped by highest weight."""

    rank: int
    shape: Shape
    entries: tuple[DecompositionEntry, ...]
    total: int

    def multiplicity(self, lam: DominantWeight) -> int:
        for entry in self.entries:
            if entry.lam == lam:
                return entry.multiplicity
        return 0


def decompose(shape: Shape, rank: int) -> Decomposition:
    """Group all galleries of the shape into components and report multiplicities.

    The multiplicity of lambda equals the number of dominant galleries of the
    shape with weight lambda, one per component.
    """
    shape = validate_shape(shape, rank)
    seen: set[Gallery] = set()
    reps: dict[DominantWeight, list[Gallery]] = {}
    total = 0
    covered = 0
    for gallery in galleries_of_shape(shape, rank):
        total += 1
        if gallery in seen:
            continue
        component = connected_component(gallery)
        seen |= component.vertices
        covered += len(component)
        top = highest_weight_vertex(gallery)
        lam = weight(top).to_dominant_weight()
        reps.setdefault(lam, []).append(top)
    if covered != total:
        raise ShapeInvalid("component closure left the shape crystal")  # unreachable
    entries = tuple(
        DecompositionEntry(
            lam=lam,
            multiplicity=len(tops),
            representatives=tuple(sorted(tops, key=lambda g: (g.shape, g.columns))),
        )
        for lam, tops in sorted(reps.items(), key=lambda item: item[0].coeffs)
    )
    return Decomposition(rank=rank, shape=shape, entries=entries, total=total)


def enumerate_ssyt(shape: Shape, rank: int) -> list[Gallery]:
    """All semistandard Young tableaux of the reading-order shape.

    Direct row-by-row backtracking over cell fillings (weakly increasing
    rows, strictly increasing columns); independent of the crystal operators
    so it can serve as a counting oracle against them.  Iterative so that
    long one-row shapes do not hit recursion limits.
    """
    shape = validate_shape(shape, rank)
    if any(a > b for a, b in zip(shape, shape[1:])):
        return []
    display_lengths = tuple(reversed(shape))
    width = len(display_lengths)
    if width == 0:
        return [Gallery._unsafe(rank, ())]
    depth = display_lengths[0]
    row_lengths = [sum(1 for d in display_lengths if d > t) for t in range(depth)]

    # Row-major linearization; every cell's left and upper neighbors exist
    # whenever j > 0 / t > 0 because row lengths weakly decrease downwards.
    offsets = [0]
    for length in row_lengths[:-1]:
        offsets.append(offsets[-1] + length)
    total = offsets[-1] + row_lengths[-1]
    left = [-1] * total
    up = [-1] * total
    for t, length in enumerate(row_lengths):
        base = offsets[t]
        for j in range(length):
            if j > 0:
                left[base + j] = base + j - 1
            if t > 0:
                up[base + j] = offsets[t - 1] + j
    column_cells = tuple(
        tuple(offsets[t] + j for t in range(display_lengths[j]))
        for j in range(width - 1, -1, -1)  # reading order
    )

    out: list[Gallery] = []
    values = [0] * total
    last = total - 1
    k = 0
    values[0] = 0  # first cell starts probing at 1
    while True:
        value = values[k] + 1
        if value > rank:
            k -= 1
            if k < 0:
                return out
            continue
        values[k] = value
        if k == last:
            out.append(
                Gallery._unsafe(
                    rank,
                    tuple(tuple(values[ix] for ix in cell) for cell in column_cells),
                )
            )
            continue
        k += 1
        low = 1
        neighbor = left[k]
        if neighbor >= 0 and values[neighbor] > low:
            low = values[neighbor]
        neighbor = up[k]
        if neighbor >= 0 and values[neighbor] >= low:
            low = values[neighbor] + 1
        values[k] = low - 1
