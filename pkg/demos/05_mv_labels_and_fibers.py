"""MV cycle labels: the gallery-to-label map, its image and its fibers.

Each gallery maps to the pair (lambda, tableau) where the tableau is its
plactic normal form and lambda records the normal form's column lengths.
Within a fixed shape, the fiber over a label is a full plactic class.
"""

from gallery_crystals import (
    format_gallery,
    fiber,
    galleries_of_shape,
    gallery_from_word,
    image_weights,
    mv_label,
    verify_surjectivity,
)

g = gallery_from_word((1, 2, 1), 3)
label = mv_label(g)
print("gallery :", format_gallery(g))
print("lambda  :", label.lam)
print("tableau :", format_gallery(label.tableau))
print("mu      :", label.mu.counts)

print("\nfiber of that label in shape (1,1,1):")
for member in fiber(label, (1, 1, 1)):
    print("  ", format_gallery(member))

print("\nweights hit by shape (1,1,1), rank 3, with multiplicities:")
for lam, mult in image_weights((1, 1, 1), 3).items():
    print(f"  lambda {str(lam):5} -> {mult}")

report = verify_surjectivity((1, 1, 1), 3)
print("\nsurjectivity check:", "ok" if report.ok else "MISSES",
      f"({report.labels_checked} tableaux checked)")

print("\nlabel of every gallery of shape (2,):")
for g in galleries_of_shape((2,), 3):
    label = mv_label(g)
    print(f"  {format_gallery(g):6} -> lambda {label.lam}, tableau {format_gallery(label.tableau)}")
