"""Bundled example inputs: the cut-square family.

One generic cut of a labeled square produces every object the library's
headline checks need: the pentagon and hollow-triangle pieces, their
path intersection, the 4-cycle connected sum, and the 2x5 extended
characteristic matrix whose rows define the rank-2 polynomial subring.
"""

from importlib import resources

from ..complexes import SimplicialComplex
from ..files import (PolytopeFile, parse_complex_text, parse_matrix_text,
                     parse_polytope_text)
from ..intmat import IntegerMatrix

__all__ = ["fixture_text", "pentagon", "hollow_triangle", "path_complex",
           "four_cycle", "square_file", "subring_matrix"]


def fixture_text(name: str) -> str:
    return (resources.files(__package__) / name).read_text(encoding="ascii")


def _complex(name: str) -> SimplicialComplex:
    return parse_complex_text(fixture_text(name), name)


def pentagon() -> SimplicialComplex:
    """Boundary complex of the plus piece (no ghosts)."""
    return _complex("pentagon.cx")


def hollow_triangle() -> SimplicialComplex:
    """Boundary complex of the minus piece; vertices 1, 4 are ghosts."""
    return _complex("hollow_triangle.cx")


def path_complex() -> SimplicialComplex:
    """The path 3-5-2, intersection of the two pieces."""
    return _complex("path.cx")


def four_cycle() -> SimplicialComplex:
    """The whole square's boundary; the cut vertex 5 is a ghost."""
    return _complex("four_cycle.cx")


def square_file() -> PolytopeFile:
    """The labeled square together with its generic corner cut."""
    return parse_polytope_text(fixture_text("square.poly"), "square.poly")


def subring_matrix() -> IntegerMatrix:
    """Extended characteristic matrix of the cut square, rows = forms."""
    return parse_matrix_text(fixture_text("square_subring.mat"),
                             "square_subring.mat")
