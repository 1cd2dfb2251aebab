"""Connected sums: what the hypothesis buys and how it fails.

Two solid triangles sharing an edge look summable, but deleting the
open neighborhood of the shared edge punches through both interiors:
the hypothesis O(Z) <= K1 & K2 rejects exactly that."""

from connsum.complexes import (ConnectedSumError, SimplicialComplex,
                               connected_sum, is_strong_connected_sum,
                               vertices_of)


def show(label, k):
    names = sorted(sorted(vertices_of(f)) for f in k.facets())
    print(f"  {label}: facets {names}")


left = SimplicialComplex.from_facets(4, [{1, 2, 3}])
right = SimplicialComplex.from_facets(4, [{1, 2, 4}])
print("solid triangles 123 and 124, Z = {{1,2}}:")
try:
    connected_sum(left, right, [{1, 2}])
except ConnectedSumError as e:
    print(f"  rejected: {e}")

# gluing along a shared FACET works: nothing open leaks out of the
# intersection because the facet is maximal on both sides
k1 = SimplicialComplex.from_facets(5, [{1, 2, 3}, {2, 3, 4}])
k2 = SimplicialComplex.from_facets(5, [{1, 2, 3}, {1, 3, 5}])
s = connected_sum(k1, k2, [{1, 2, 3}])
print("triangle fans glued along 123:")
show("sum", s)
print(f"  pure: {s.is_pure()}  (the seam triangle is gone, its edges stay)")

# boundaries of two tetrahedra: the textbook picture, strong both ways
t1 = SimplicialComplex.from_facets(5, [f for f in ({1, 2, 3}, {1, 2, 4},
                                                   {1, 3, 4}, {2, 3, 4})])
t2 = SimplicialComplex.from_facets(5, [f for f in ({1, 2, 3}, {1, 2, 5},
                                                   {1, 3, 5}, {2, 3, 5})])
cert = is_strong_connected_sum(t1, t2, [{1, 2, 3}])
s2 = connected_sum(t1, t2, [{1, 2, 3}])
print("tetrahedron boundaries glued along 123:")
show("sum", s2)
print(f"  strong: {bool(cert)}, pure of dimension {s2.dim()} "
      f"with {len(s2.facets())} facets")
