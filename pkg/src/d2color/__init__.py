"""Distance-two colourings of cubic and quartic plane graphs."""

from .coloring import EdgeColoring, FaceColoring, VertexColoring, verify_distance_two
from .exact_solver import count_up_to_permutation, solve, square_chromatic_number
from .plane_graph import PlaneGraph, canonical_code, classify

__all__ = [
    "EdgeColoring",
    "FaceColoring",
    "PlaneGraph",
    "VertexColoring",
    "canonical_code",
    "classify",
    "count_up_to_permutation",
    "solve",
    "square_chromatic_number",
    "verify_distance_two",
]
__version__ = "0.1.0"
