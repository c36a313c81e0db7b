"""Crystal combinatorics of column galleries for SL_n.

Galleries (sequences of strictly increasing columns over {1..n}) carry a
crystal structure through tagging root operators.  This package implements
the operators, word reading, plactic normalization to semistandard Young
tableaux, crystal graph generation and decomposition, the combinatorial MV
cycle labeling map with its fibers, and affine wall-crossing bookkeeping
along gallery paths.
"""

from .errors import (
    BrokenColumn,
    ColumnTooLong,
    GalleryError,
    IndexOutOfRange,
    InvalidLabel,
    InvalidRank,
    LetterOutOfRange,
    NonIncreasingColumn,
    NotConnected,
    NotDominant,
    ParseError,
    RankMismatch,
    ShapeInvalid,
    SvgRankUnsupported,
)
from .galleries import (
    DominantWeight,
    Gallery,
    WeightVector,
    concat,
    dominance_leq,
    empty_gallery,
    format_gallery,
    format_word,
    gallery_from_word,
    is_dominant,
    pairing,
    parse_gallery,
    parse_word,
    path_vertices,
    validate_gallery,
    validate_shape,
    weight,
    word,
)
from .operators import (
    SignatureReduction,
    Tag,
    e,
    epsilon,
    f,
    i_signature,
    phi,
    reduce_signature,
)
from .plactic import (
    equivalent,
    is_ssyt,
    normal_form,
    oracle_plactic_classes,
    rsk_insert,
    strip_full_columns,
)
from .graphs import (
    CrystalGraph,
    Decomposition,
    DecompositionEntry,
    canonical_dominant_gallery,
    connected_component,
    count_galleries,
    decompose,
    enumerate_ssyt,
    galleries_of_shape,
    highest_weight_crystal,
    highest_weight_vertex,
    is_isomorphic,
    weyl_dimension,
)
from .mv import (
    MVLabel,
    SurjectivityReport,
    fiber,
    image_weights,
    make_label,
    mv_label,
    verify_surjectivity,
)
from .affine import (
    AffineRoot,
    WallCheck,
    splice_disjointness,
    crossing_sets,
    positive_roots,
    random_gallery,
    spliced_gallery,
    stabilizer_condition,
    staircase_gallery,
    weight_of_full_column_word,
)

__version__ = "0.1.0"

__all__ = [
    "AffineRoot",
    "BrokenColumn",
    "ColumnTooLong",
    "CrystalGraph",
    "Decomposition",
    "DecompositionEntry",
    "DominantWeight",
    "Gallery",
    "GalleryError",
    "IndexOutOfRange",
    "InvalidLabel",
    "InvalidRank",
    "LetterOutOfRange",
    "MVLabel",
    "NonIncreasingColumn",
    "NotConnected",
    "NotDominant",
    "ParseError",
    "RankMismatch",
    "ShapeInvalid",
    "SignatureReduction",
    "SurjectivityReport",
    "SvgRankUnsupported",
    "Tag",
    "WallCheck",
    "WeightVector",
    "splice_disjointness",
    "canonical_dominant_gallery",
    "concat",
    "connected_component",
    "count_galleries",
    "crossing_sets",
    "decompose",
    "dominance_leq",
    "e",
    "empty_gallery",
    "enumerate_ssyt",
    "epsilon",
    "equivalent",
    "f",
    "fiber",
    "format_gallery",
    "format_word",
    "galleries_of_shape",
    "gallery_from_word",
    "highest_weight_crystal",
    "highest_weight_vertex",
    "i_signature",
    "image_weights",
    "is_dominant",
    "is_isomorphic",
    "is_ssyt",
    "make_label",
    "mv_label",
    "normal_form",
    "oracle_plactic_classes",
    "pairing",
    "parse_gallery",
    "parse_word",
    "path_vertices",
    "phi",
    "positive_roots",
    "random_gallery",
    "reduce_signature",
    "rsk_insert",
    "spliced_gallery",
    "stabilizer_condition",
    "staircase_gallery",
    "strip_full_columns",
    "validate_gallery",
    "validate_shape",
    "verify_surjectivity",
    "weight",
    "weight_of_full_column_word",
    "weyl_dimension",
    "word",
]
