"""Galleries, their words, and their lattice paths.

A gallery is a sequence of strictly increasing columns over {1..n}.  Columns
are traversed in reading order, right to left in the display string, and the
word of a gallery concatenates the column entries in that order.
"""

from gallery_crystals import (
    concat,
    format_gallery,
    format_word,
    gallery_from_word,
    is_dominant,
    parse_gallery,
    path_vertices,
    weight,
    word,
)

star = parse_gallery("3|1,2|5|2", 5)
print("gallery     :", format_gallery(star))
print("shape       :", star.shape, "(reading order: rightmost display column first)")
print("word        :", format_word(word(star)))

# a different gallery with the same word
beta = parse_gallery("3|2|1|5|2", 5)
print("\nbeta        :", format_gallery(beta))
print("same word?  :", word(beta) == word(star))

# every word has a canonical gallery of shape (1,...,1)
print("\nword gallery of 1 3 2:", format_gallery(gallery_from_word((1, 3, 2), 3)))

# concatenation: the second argument is traversed first
nu = concat(parse_gallery("1,2", 3), parse_gallery("1", 3))
print("\nnu = [1,2] * [1]      :", format_gallery(nu))
print("path vertices of nu   :", path_vertices(nu))
print("weight of nu          :", weight(nu).counts)
print("nu dominant?          :", is_dominant(nu))

delta = parse_gallery("2|3|1", 3)
print("\ndelta                 :", format_gallery(delta))
print("path vertices of delta:", path_vertices(delta))
print("weight of delta       :", weight(delta).counts, "(the zero weight)")
print("delta dominant?       :", is_dominant(delta))
