"""Affine wall crossings along gallery paths and the staircase splice checks.

For each path segment, the crossing set records the affine roots whose wall
contains the segment's start while the segment moves strictly to the
positive side.  Splicing the staircase word 1..n between two galleries
crosses each wall group at most once: the n spliced crossing sets are
pairwise disjoint, and each crossed wall lies weakly above the splice start.
"""

import random

from gallery_crystals import (
    splice_disjointness,
    crossing_sets,
    empty_gallery,
    format_gallery,
    gallery_from_word,
    parse_gallery,
    path_vertices,
    random_gallery,
    spliced_gallery,
    stabilizer_condition,
    weight_of_full_column_word,
)

staircase = gallery_from_word((1, 2, 3), 3)
print("gallery:", format_gallery(staircase))
print("path   :", path_vertices(staircase))
for k, segment in enumerate(crossing_sets(staircase)):
    pretty = ", ".join(f"(e{r.a}-e{r.b}, {r.level})" for r in segment) or "(none)"
    print(f"  segment {k}: {pretty}")

print("\nweight of the staircase word is zero:", weight_of_full_column_word(3).is_zero())

gamma = parse_gallery("1|1", 3)
delta = parse_gallery("2,3", 3)
eta, k = spliced_gallery(gamma, delta)
print("\nspliced gallery:", format_gallery(eta), " splice starts at segment", k)
print("disjointness   :", splice_disjointness(gamma, delta))
print("stabilizer     :", stabilizer_condition(gamma, delta))

rng = random.Random(7)
trials = 200
ok = sum(
    1
    for _ in range(trials)
    if splice_disjointness(g := random_gallery(rng, 3), d := random_gallery(rng, 3)).ok
    and stabilizer_condition(g, d).ok
)
print(f"\nrandomized check: {ok}/{trials} pairs satisfy both conditions")

print("\ntrivial splice (both factors empty):",
      splice_disjointness(empty_gallery(3), empty_gallery(3)).ok)
