"""Regularity of face rings read off from topology.

The six-vertex projective plane carries a lone Z/2, so its face ring is
Cohen-Macaulay over Q and F_3 but not F_2, and Gorenstein nowhere.  The
tetrahedron boundary is a sphere, hence Gorenstein; puncturing it gives
a cone over the rim circle, which stays Gorenstein, while the flat fan
over a path is a disk whose rim shows (Cohen-Macaulay only).
"""

from connsum.complexes import SimplicialComplex
from connsum.homology import (is_cohen_macaulay, is_gorenstein,
                              reduced_homology)

RP2 = SimplicialComplex.from_facets(6, [
    {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
    {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}])

print("projective plane on six vertices:")
print(f"  reduced homology: {reduced_homology(RP2)}")
for label, p in (("Q", None), ("F_2", 2), ("F_3", 3)):
    print(f"  over {label}: Cohen-Macaulay {is_cohen_macaulay(RP2, p)}, "
          f"Gorenstein {is_gorenstein(RP2, p)}")

sphere = SimplicialComplex.from_facets(4, [{1, 2, 3}, {1, 2, 4},
                                           {1, 3, 4}, {2, 3, 4}])
punctured = SimplicialComplex.from_facets(4, [{1, 2, 4}, {1, 3, 4},
                                              {2, 3, 4}])
fan = SimplicialComplex.from_facets(5, [{1, 2, 5}, {2, 3, 5}, {3, 4, 5}])

print("\nsphere vs disks, over Q:")
for label, k in (("tetrahedron boundary", sphere),
                 ("sphere minus one facet", punctured),
                 ("fan over a path", fan)):
    print(f"  {label}: Cohen-Macaulay {is_cohen_macaulay(k)}, "
          f"Gorenstein {is_gorenstein(k)}")
print("the punctured sphere is a cone over its rim circle, so it keeps")
print("the Gorenstein property; the fan's rim is a bare path and does not")
