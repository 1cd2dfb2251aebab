"""Slice the labeled square and read the subring matrix off the pieces.

The slice adds one facet, so every complex in sight lives on five
vertices; the fifth is a ghost of the uncut square's complex.  Both
ways of reassembling the pieces are strong connected sums.
"""

from connsum.complexes import connected_sum, intersection, vertices_of
from connsum.fixtures import square_file
from connsum.polytopes import LabeledPolytope, cut, extended_matrix
from connsum.generators import strong_sums_from_cut


def facets(k):
    return sorted(sorted(vertices_of(f)) for f in k.facets())


pf = square_file()
print(f"square: {pf.polytope.n_inequalities} inequalities, "
      f"labels {pf.labels}, cut {pf.cut.normal} | {pf.cut.offset}")

res = cut(pf.polytope, pf.cut)
print(f"whole complex (ghost {res.section_vertex}): "
      f"{facets(res.whole_complex)}")
print(f"plus piece:  {facets(res.plus_complex)}")
print(f"minus piece: {facets(res.minus_complex)}")
w = intersection(res.plus_complex, res.minus_complex)
print(f"intersection: {facets(w)}")

for inst in strong_sums_from_cut(res):
    z = sorted(sorted(vertices_of(f)) for f in inst.z.members)
    total = connected_sum(inst.k1, inst.k2, inst.z)
    print(f"sum along {z} gives {facets(total)} "
          f"(matches expected: {total == inst.expected})")

mat = extended_matrix(LabeledPolytope(pf.polytope, pf.labels), pf.cut)
print("extended characteristic matrix:")
for row in mat.dense():
    print(f"  {row}")
