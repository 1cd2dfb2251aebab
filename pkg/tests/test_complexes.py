"""Combinatorial operations on bitmask complexes.

Brute-force re-definitions act as oracles for the bit-twiddled
implementations; the cut-square fixture family pins down the worked
examples.
"""

import pytest
from hypothesis import given, settings, strategies as st

from connsum.complexes import (ConnectedSumError, FaceSubset,
                               SimplicialComplex, closure, connected_sum,
                               deletion, face_of, intersection,
                               is_strong_connected_sum, open_neighborhood,
                               seam, star, union, vertices_of)
from connsum.fixtures import four_cycle, hollow_triangle, path_complex, pentagon


@st.composite
def complexes(draw, max_m=6):
    m = draw(st.integers(1, max_m))
    n_gens = draw(st.integers(0, m + 2))
    gens = [draw(st.integers(1, (1 << m) - 1)) for _ in range(n_gens)]
    return SimplicialComplex.from_facets(m, gens)


@st.composite
def complex_with_subset(draw):
    k = draw(complexes())
    pool = sorted(f for f in k.faces if f)
    members = [] if not pool else draw(
        st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return k, FaceSubset(k, members)


@st.composite
def complex_with_subcomplex(draw):
    k = draw(complexes())
    pool = sorted(f for f in k.faces if f)
    gens = [] if not pool else draw(
        st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return k, SimplicialComplex.from_facets(k.m, gens)


def test_from_facets_counts():
    k = SimplicialComplex.from_facets(4, [{1, 4}, {4, 3}, {3, 2}, {1, 2}])
    assert len(k.faces) == 9  # empty + 4 vertices + 4 edges
    assert SimplicialComplex.from_facets(3, []).faces == frozenset({0})
    assert len(SimplicialComplex.from_facets(3, [{1, 2, 3}]).faces) == 8


def test_from_facets_range_error():
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets(3, [{4}])


def test_ghost_vertices():
    k = SimplicialComplex.from_facets(5, [{1, 2}])
    assert k.ghost_vertices() == (3, 4, 5)
    assert k.vertices() == (1, 2)


def test_equality_depends_on_vertex_count():
    a = SimplicialComplex.from_facets(2, [{1}])
    b = SimplicialComplex.from_facets(3, [{1}])
    assert a != b


def test_closure_of_one_edge():
    k = SimplicialComplex.from_facets(4, [{1, 4}, {4, 3}, {3, 2}, {1, 2}])
    c = closure(FaceSubset(k, [{1, 2}]))
    assert c.faces == frozenset({0, face_of([1]), face_of([2]),
                                 face_of([1, 2])})


def test_closure_of_facets_is_identity():
    k = pentagon()
    assert closure(FaceSubset(k, [f for f in k.facets() if f])).faces \
        == k.faces


def test_closure_of_path_edges():
    big = union(pentagon(), hollow_triangle())
    c = closure(FaceSubset(big, [{3, 5}, {5, 2}]))
    assert c.faces == path_complex().faces


def test_open_neighborhood_of_cut_vertex():
    big = union(pentagon(), hollow_triangle())
    o = open_neighborhood(big, FaceSubset(big, [{5}]))
    assert o.members == frozenset(
        {face_of([5]), face_of([3, 5]), face_of([5, 2])})


def test_open_neighborhood_of_facet_is_itself():
    k = pentagon()
    f = next(iter(face for face in k.facets() if face))
    o = open_neighborhood(k, FaceSubset(k, [f]))
    assert o.members == frozenset({f})


@given(complex_with_subset())
@settings(max_examples=120)
def test_open_neighborhood_idempotent(kz):
    k, z = kz
    o1 = open_neighborhood(k, z)
    o2 = open_neighborhood(k, FaceSubset(k, o1.members))
    assert o1.members == o2.members


@given(complex_with_subset())
@settings(max_examples=120)
def test_open_neighborhood_brute_force(kz):
    k, z = kz
    got = open_neighborhood(k, z).members
    want = {s for s in k.faces if any(t & s == t for t in z.members)}
    assert got == want


def test_star_of_cut_vertex_in_pentagon():
    s = star(pentagon(), FaceSubset(pentagon(), [{5}]))
    assert s.faces == path_complex().faces


def test_star_of_ghost_vertex_rejected():
    k = four_cycle()  # vertex 5 is a ghost
    with pytest.raises(ValueError):
        FaceSubset(k, [{5}])


def test_deletion_gives_four_cycle():
    big = union(pentagon(), hollow_triangle())
    d = deletion(big, FaceSubset(big, [{5}]))
    assert d.faces == four_cycle().faces


@given(complex_with_subset())
@settings(max_examples=120)
def test_deletion_partition(kz):
    """Del_Z(K) and O_K(Z) partition the faces of K."""
    k, z = kz
    d = deletion(k, z)
    o = open_neighborhood(k, z).members
    assert d.faces | o == k.faces
    assert not d.faces & o


def test_deletion_of_empty_subset_is_identity():
    k = pentagon()
    assert deletion(k, FaceSubset(k, [])).faces == k.faces


@given(complex_with_subset())
@settings(max_examples=120)
def test_fixed_point_iff_complement_closed(kz):
    k, z = kz
    fixed = open_neighborhood(k, z).members == z.members
    rest = k.faces - z.members
    closed = all(t in rest for s in rest for t in k.faces if t & s == t)
    assert fixed == closed


def test_union_intersection_fixture():
    big = union(pentagon(), hollow_triangle())
    edges = [f for f in big.faces if bin(f).count("1") == 2]
    assert len(edges) == 6
    assert intersection(pentagon(), hollow_triangle()).faces \
        == path_complex().faces


@given(complexes())
def test_union_idempotent(k):
    assert union(k, k).faces == k.faces
    assert intersection(k, k).faces == k.faces


def test_union_requires_common_vertex_count():
    with pytest.raises(ValueError):
        union(SimplicialComplex.from_facets(2, []),
              SimplicialComplex.from_facets(3, []))


def test_connected_sum_fixture():
    got = connected_sum(pentagon(), hollow_triangle(), [{5}])
    assert got.faces == four_cycle().faces


def test_connected_sum_along_facet():
    """Classical facet sum: shared top face removed, nothing else.

    The shared face must be a facet of both summands so its open
    neighborhood in the union is itself.
    """
    k1 = SimplicialComplex.from_facets(5, [{1, 2, 3}, {2, 3, 4}])
    k2 = SimplicialComplex.from_facets(5, [{1, 2, 3}, {1, 3, 5}])
    got = connected_sum(k1, k2, [{1, 2, 3}])
    assert got.faces == (k1.faces | k2.faces) - {face_of([1, 2, 3])}
    assert not got.is_pure()  # facets {2,3,4},{1,3,5} and edge {1,2}


def test_connected_sum_hypothesis_violation():
    with pytest.raises(ConnectedSumError) as err:
        connected_sum(pentagon(), hollow_triangle(), [{2}])
    assert err.value.witness in union(pentagon(), hollow_triangle()).faces


def test_seam_of_pentagon_along_path():
    z = seam(pentagon(), path_complex())
    assert z.members == frozenset(
        {face_of([5]), face_of([3, 5]), face_of([2, 5])})


def test_seam_of_whole_complex():
    k = pentagon()
    assert seam(k, k).members == k.faces - {0}


def test_seam_requires_subcomplex():
    with pytest.raises(ValueError):
        seam(path_complex(), pentagon())


@given(complex_with_subcomplex())
@settings(max_examples=150)
def test_seam_annihilation_oracle(kw):
    """Both descriptions of the seam, computed independently."""
    k, w = kw
    z = seam(k, w).members  # internal cross-check also runs here
    outside = k.faces - w.faces
    want = {t for t in w.faces if t
            and all((t | s) not in k.faces for s in outside)}
    assert z == want


def test_strong_sum_fixture():
    cert = is_strong_connected_sum(
        pentagon(), hollow_triangle(), [{5}, {3, 5}, {2, 5}])
    assert bool(cert)
    assert cert.failures() == ()


def test_strong_sum_along_facet():
    """Boundaries of two tetrahedra glued along a shared triangle.

    Every proper face of the shared triangle lies in another facet on
    each side, so the seam on either side is exactly the triangle.
    """
    b1 = SimplicialComplex.from_facets(5, [{1, 2, 3}, {1, 2, 4},
                                           {1, 3, 4}, {2, 3, 4}])
    b2 = SimplicialComplex.from_facets(5, [{1, 2, 3}, {1, 2, 5},
                                           {1, 3, 5}, {2, 3, 5}])
    cert = is_strong_connected_sum(b1, b2, [{1, 2, 3}])
    assert bool(cert)
    assert cert.failures() == ()
    got = connected_sum(b1, b2, [{1, 2, 3}])
    assert got.is_pure() and got.dim() == 2
    # tunnelling two hollow tetrahedra together leaves six triangles
    assert len(got.facets()) == 6


def test_strong_sum_dimension_mismatch():
    k1 = SimplicialComplex.from_facets(5, [{1, 2, 3}])
    k2 = SimplicialComplex.from_facets(5, [{4, 5}])
    cert = is_strong_connected_sum(k1, k2, [])
    assert not cert
    assert "dims_equal" in cert.failures()


def test_link_of_cut_vertex():
    lk = pentagon().link({5})
    assert lk.faces == frozenset({0, face_of([2]), face_of([3])})


def test_link_of_empty_face():
    k = pentagon()
    assert k.link(0).faces == k.faces


def test_link_requires_face():
    with pytest.raises(ValueError):
        four_cycle().link({5})


@given(complexes(), st.data())
@settings(max_examples=120)
def test_link_brute_force(k, data):
    f = data.draw(st.sampled_from(sorted(k.faces)))
    got = k.link(f).faces
    want = {t for t in k.faces if not t & f and (t | f) in k.faces}
    assert got == want


@given(complex_with_subcomplex())
@settings(max_examples=100)
def test_star_of_outside_equals_closure(kw):
    """star_K(K \\ W) = closure(K \\ W) for subcomplexes W."""
    k, w = kw
    outside = k.faces - w.faces
    if not outside - {0}:
        return
    z = FaceSubset(k, outside - {0})
    assert star(k, z).faces == closure(z).faces


@given(complexes(), complexes())
@settings(max_examples=100)
def test_connected_sum_bounds(k1, k2):
    if k1.m != k2.m:
        return
    w = intersection(k1, k2)
    big = union(k1, k2)
    z = seam(big, w)
    if not z.members:
        return
    s = connected_sum(k1, k2, z)
    o = open_neighborhood(big, FaceSubset(big, z.members))
    assert s.faces | closure(FaceSubset(big, z.members)).faces <= big.faces
    assert w.faces - o.members <= s.faces
