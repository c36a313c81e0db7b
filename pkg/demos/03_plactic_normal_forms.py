"""Plactic equivalence and normalization to semistandard Young tableaux.

Insertion works on the gallery word read last letter first; full columns
1..n are struck out afterwards, which is what makes the staircase word
collapse to the empty tableau.
"""

from gallery_crystals import (
    equivalent,
    format_gallery,
    gallery_from_word,
    is_ssyt,
    normal_form,
    oracle_plactic_classes,
    parse_gallery,
    rsk_insert,
    strip_full_columns,
)

for text in ["1,2|1", "1|2|1", "1|2|1|3|2|1"]:
    g = parse_gallery(text, 3)
    print(f"normal_form({text!r:16}) = {format_gallery(normal_form(g))!r}")

staircase = gallery_from_word((1, 2, 3), 3)
print("\nstaircase word gallery:", format_gallery(staircase))
inserted = rsk_insert((1, 2, 3), 3)
print("raw insertion tableau :", format_gallery(inserted), "(a full column)")
print("after stripping       :", repr(format_gallery(strip_full_columns(inserted))))
print("normal form is empty  :", normal_form(staircase).columns == ())

print("\nis_ssyt('1,2|1') :", is_ssyt(parse_gallery("1,2|1", 3)))
print("is_ssyt('1|1,2') :", is_ssyt(parse_gallery("1|1,2", 3)), "(display column lengths must not increase)")

print("\nequivalent('3|1,2|5|2', '3|2|1|5|2') :", equivalent(
    parse_gallery("3|1,2|5|2", 5), parse_gallery("3|2|1|5|2", 5)))

# the brute-force rewriting oracle partitions short words into classes
print("\nplactic classes of words of length <= 3 over {1,2,3}:")
for cls in oracle_plactic_classes(3, 3):
    if len(cls) > 1:
        print("  ", " ~ ".join("".join(map(str, w)) or "()" for w in cls))
