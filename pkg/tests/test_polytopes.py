"""Exact H-representation polytopes, generic cuts, and facet matrices.

The cut-square fixture family pins the worked quartet of complexes and
the subring matrix; random boxes with corner slices exercise the
self-asserted postconditions of cut().
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from connsum.complexes import connected_sum, face_of
from connsum.fixtures import (four_cycle, hollow_triangle, pentagon,
                              square_file, subring_matrix)
from connsum.generators import random_generic_cut, random_polytope
from connsum.polytopes import (CutSpec, LabeledPolytope, RationalPolytope,
                               characteristic_matrix, complex_of_polytope,
                               cut, extended_matrix, is_generic_cut,
                               is_simple, primitive_vector)

UNIT_SQUARE = [((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((0, -1), 1)]


@st.composite
def polytopes(draw):
    seed = draw(st.integers(0, 10**6))
    n = draw(st.integers(1, 3))
    return random_polytope(random.Random(seed), n)


@st.composite
def polytopes_with_cut(draw):
    seed = draw(st.integers(0, 10**6))
    n = draw(st.integers(1, 3))
    rng = random.Random(seed)
    p = random_polytope(rng, n)
    return p, random_generic_cut(rng, p)


def test_unit_square_vertices():
    p = RationalPolytope(2, UNIT_SQUARE)
    assert p.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert p.facet_kinds() == ("facet",) * 4


def test_triangle_complex_is_hollow():
    p = RationalPolytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)])
    k = complex_of_polytope(p)
    assert k.faces == frozenset(
        {0, face_of([1]), face_of([2]), face_of([3]),
         face_of([1, 2]), face_of([1, 3]), face_of([2, 3])})


def test_contains():
    p = RationalPolytope(2, UNIT_SQUARE)
    assert p.contains((Fraction(1, 2), Fraction(1, 3)))
    assert p.contains((0, 1))
    assert not p.contains((2, 0))


def test_empty_polytope_rejected():
    with pytest.raises(ValueError):
        RationalPolytope(1, [((1,), 0), ((-1,), -1)])


def test_unbounded_rejected():
    with pytest.raises(ValueError, match="unbounded"):
        RationalPolytope(2, [((1, 0), 0), ((0, 1), 0)])


def test_bad_inequalities_rejected():
    with pytest.raises(ValueError):
        RationalPolytope(2, [((0, 0), 1)])
    with pytest.raises(ValueError):
        RationalPolytope(2, [((1, 0, 0), 0)])
    with pytest.raises(ValueError):
        RationalPolytope(2, [])


def test_facet_kinds_ghost_and_low():
    # x + y + 5 >= 0 misses the square; x + y >= 0 touches one corner
    p = RationalPolytope(2, UNIT_SQUARE + [((1, 1), 5), ((1, 1), 0)])
    assert p.facet_kinds() == ("facet",) * 4 + ("ghost", "low")
    assert not is_simple(p)  # corner (0,0) now lies on three hyperplanes
    assert is_simple(RationalPolytope(2, UNIT_SQUARE))


def test_complex_of_polytope_vertex_count():
    p = RationalPolytope(2, UNIT_SQUARE)
    k = complex_of_polytope(p, vertex_count=6)
    assert k.m == 6
    assert face_of([1, 2]) in k.faces
    assert face_of([5]) not in k.faces  # ghost slot
    with pytest.raises(ValueError):
        complex_of_polytope(p, vertex_count=3)


def test_primitive_vector():
    assert primitive_vector([Fraction(2, 3), Fraction(-4, 3)]) == (1, -2)
    assert primitive_vector([6, -4]) == (3, -2)
    with pytest.raises(ValueError):
        primitive_vector([0, 0])


def test_cutspec_validation():
    with pytest.raises(ValueError, match="primitive"):
        CutSpec((2, 4), 1)
    with pytest.raises(ValueError, match="nonzero"):
        CutSpec((0, 0), 1)
    with pytest.raises(ValueError, match="positive"):
        CutSpec((1, 0), 1, label=0)


def test_generic_cut_certificate():
    p = RationalPolytope(2, UNIT_SQUARE)
    good = is_generic_cut(p, CutSpec((-1, 1), Fraction(1, 2)))
    assert bool(good)
    through_vertex = is_generic_cut(p, CutSpec((1, -1), 0))
    assert not through_vertex
    assert through_vertex.meets_both_sides
    assert not through_vertex.no_vertex_on_plane
    missing = is_generic_cut(p, CutSpec((1, 0), 5))
    assert not missing
    assert not missing.meets_both_sides


def test_cut_square_fixture():
    f = square_file()
    res = cut(f.polytope, f.cut)
    assert res.section_vertex == 5
    assert res.whole_complex == four_cycle()
    assert res.plus_complex == pentagon()
    assert res.minus_complex == hollow_triangle()
    assert res.z_cut.members == {face_of([5]), face_of([2, 5]),
                                 face_of([3, 5])}
    # boundary arc strictly on the plus side, endpoints 2 and 3 excluded
    assert res.z_plus.members == {face_of([1]), face_of([4]),
                                  face_of([1, 2]), face_of([1, 4]),
                                  face_of([3, 4])}
    assert connected_sum(res.plus_complex, res.minus_complex,
                         res.z_cut) == res.whole_complex
    assert connected_sum(res.plus_complex, res.whole_complex,
                         res.z_plus) == res.minus_complex


def test_cut_rejects_bad_input():
    notsimple = RationalPolytope(2, UNIT_SQUARE + [((1, 1), 0)])
    with pytest.raises(ValueError, match="simple"):
        cut(notsimple, CutSpec((-1, 1), Fraction(1, 2)))
    p = RationalPolytope(2, UNIT_SQUARE)
    with pytest.raises(ValueError, match="generic"):
        cut(p, CutSpec((1, -1), 0))


def test_characteristic_matrix_square():
    f = square_file()
    lp = LabeledPolytope(f.polytope, f.labels)
    assert characteristic_matrix(lp).dense() == [[1, 0, -2, 0],
                                                 [0, 2, 0, -1]]
    assert extended_matrix(lp, f.cut) == subring_matrix()


def test_labeled_polytope_validation():
    p = RationalPolytope(2, UNIT_SQUARE)
    with pytest.raises(ValueError, match="per inequality"):
        LabeledPolytope(p, (1, 2))
    with pytest.raises(ValueError, match="positive"):
        LabeledPolytope(p, (1, 2, 0, 1))


@settings(max_examples=40, deadline=None)
@given(polytopes())
def test_random_polytopes_are_simple_and_contain_vertices(p):
    assert is_simple(p)
    for v in p.vertices:
        assert p.contains(v)
    assert all(kind == "facet" for kind in p.facet_kinds())


@settings(max_examples=25, deadline=None)
@given(polytopes_with_cut())
def test_random_cut_postconditions(pc):
    """cut() asserts the sum identities internally; re-check the headline
    one and the ghost status of the section vertex here."""
    p, c = pc
    res = cut(p, c)
    o = res.section_vertex
    assert o == p.n_inequalities + 1
    assert face_of([o]) not in res.whole_complex.faces
    assert face_of([o]) in res.plus_complex.faces
    got = connected_sum(res.plus_complex, res.minus_complex, res.z_cut)
    assert got == res.whole_complex
