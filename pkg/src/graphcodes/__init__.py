"""Self-dual binary codes from bicubic planar graphs.

Build self-dual codes from face-vertex incidence matrices of connected
cubic planar bipartite graphs, lift them to the 16-element ring
F2+uF2+vF2+uvF2, analyze the Gray images by exhaustive enumeration, and
extend them by the building-up construction.  The bundled reference
tables of published codes can be reproduced end to end via the
`graphcodes` command-line tool.
"""

from .analysis import (
    EnumeratorReport,
    analyze,
    classify_type,
    classify_w64,
    classify_w66,
    naive_distribution_oracle,
    novelty_check,
    pair_invariant_a12,
    weight_distribution,
)
from .extension import build_gray_generator, expand_x, extend
from .gf2 import BinaryCode, BinaryMatrix, BitVector, inner_product, rank, standard_form
from .graphs import (
    PlanarBicubicGraph,
    builtin_graph,
    graph_to_selfdual_code,
    incidence_matrix,
    three_face_coloring,
    validate,
)
from .lifts import (
    LiftCandidate,
    complete_lower,
    decode_upper,
    encode_upper,
    is_lrm,
    random_lift,
    repair_hex,
    repair_substitution,
    search_lifts,
)
from .repro import reproduce
from .ring import R2Matrix, gray_map, hex_decode, hex_encode, mul, projection

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "BinaryMatrix",
    "BitVector",
    "EnumeratorReport",
    "LiftCandidate",
    "PlanarBicubicGraph",
    "R2Matrix",
    "analyze",
    "build_gray_generator",
    "builtin_graph",
    "classify_type",
    "classify_w64",
    "classify_w66",
    "complete_lower",
    "decode_upper",
    "encode_upper",
    "expand_x",
    "extend",
    "graph_to_selfdual_code",
    "gray_map",
    "hex_decode",
    "hex_encode",
    "incidence_matrix",
    "inner_product",
    "is_lrm",
    "mul",
    "naive_distribution_oracle",
    "novelty_check",
    "pair_invariant_a12",
    "projection",
    "random_lift",
    "rank",
    "repair_hex",
    "repair_substitution",
    "reproduce",
    "search_lifts",
    "standard_form",
    "three_face_coloring",
    "validate",
    "weight_distribution",
]
