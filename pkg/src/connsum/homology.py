"""Reduced integral homology and face-ring regularity criteria.

Homology is computed from the augmented chain complex (the empty face
generates in dimension -1), entirely over Z via Smith normal forms, so
both ranks and torsion come out exact.  Field coefficients are then a
matter of universal coefficients: dim over F_p picks up torsion from
two neighboring dimensions, dim over Q sees only ranks.

The Cohen-Macaulay test is the usual local one (every link's reduced
homology vanishes below its top dimension); the Gorenstein test peels
off ghost vertices and cone points first and then requires every link
of the remaining core to look like a sphere of its own dimension,
including the link of the empty face, i.e. the core itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from .complexes import SimplicialComplex, star, vertices_of
from .intmat import IntegerMatrix, invariant_factors


def _group_str(rank: int, torsion: Tuple[int, ...]) -> str:
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append(f"Z^{rank}")
    parts.extend(f"Z/{t}" for t in torsion)
    return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class GradedAbelianGroup:
    """Finitely generated abelian group in each integer degree.

    Components map degree -> (free rank, torsion invariant factors);
    degrees with the zero group are simply absent.
    """

    components: Mapping[int, Tuple[int, Tuple[int, ...]]]

    def __post_init__(self):
        cleaned = {}
        for d, (r, tors) in self.components.items():
            tors = tuple(t for t in tors if t > 1)
            if r or tors:
                cleaned[int(d)] = (int(r), tors)
        object.__setattr__(self, "components", cleaned)

    def rank(self, d: int) -> int:
        return self.components.get(d, (0, ()))[0]

    def torsion(self, d: int) -> Tuple[int, ...]:
        return self.components.get(d, (0, ()))[1]

    def is_trivial(self) -> bool:
        return not self.components

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(self.components))

    def dim_over(self, d: int, p: Optional[int] = None) -> int:
        """Dimension of the degree-d piece tensored with Q (p None) or F_p.

        Over F_p this is only the tensor part; the Tor part from the
        degree below is the caller's business (see `field_dimension`).
        """
        r, tors = self.components.get(d, (0, ()))
        if p is None:
            return r
        return r + sum(1 for t in tors if t % p == 0)

    def __str__(self):
        if self.is_trivial():
            return "0"
        return ", ".join(f"{d}: {_group_str(*self.components[d])}"
                         for d in self.degrees())


def field_dimension(h: GradedAbelianGroup, d: int, p: Optional[int]) -> int:
    """dim over the field of the degree-d homology, universal coefficients.

    For F_p: rank + p-torsion in degree d + p-torsion in degree d - 1.
    """
    if p is None:
        return h.rank(d)
    tor_below = sum(1 for t in h.torsion(d - 1) if t % p == 0)
    return h.dim_over(d, p) + tor_below


def boundary_matrix(k: SimplicialComplex, i: int) -> IntegerMatrix:
    """The boundary C_i -> C_{i-1} of the augmented chain complex.

    C_i is free on the faces with i+1 vertices; C_{-1} is free on the
    empty face.  Faces are ordered by mask value, signs follow the
    ascending vertex order.
    """
    top = sorted(f for f in k.faces if bin(f).count("1") == i + 1)
    bot = {f: idx for idx, f in enumerate(
        sorted(f for f in k.faces if bin(f).count("1") == i))}
    entries = {}
    for j, f in enumerate(top):
        sign = 1
        for v in vertices_of(f):
            sub = f ^ (1 << (v - 1))
            entries[(bot[sub], j)] = sign
            sign = -sign
    return IntegerMatrix(len(bot), len(top), entries)


def reduced_homology(k: SimplicialComplex) -> GradedAbelianGroup:
    """Reduced integral homology, dimensions -1 through dim K.

    The only complex with homology in dimension -1 is {∅}, where it is
    a single Z.

    >>> circle = SimplicialComplex.from_facets(3, [{1,2},{2,3},{1,3}])
    >>> str(reduced_homology(circle))
    '1: Z'
    """
    top = k.dim()
    mats: Dict[int, IntegerMatrix] = {}
    for i in range(0, top + 1):
        mats[i] = boundary_matrix(k, i)
    for i in range(1, top + 1):
        assert (mats[i - 1] @ mats[i]).is_zero(), "boundary squared nonzero"
    comps = {}
    for i in range(-1, top + 1):
        n_i = len([f for f in k.faces if bin(f).count("1") == i + 1])
        out_factors = invariant_factors(mats[i]) if i in mats else []
        inc = mats.get(i + 1)
        in_factors = invariant_factors(inc) if inc is not None else []
        rank_h = n_i - len(out_factors) - len(in_factors)
        torsion = tuple(t for t in in_factors if t > 1)
        comps[i] = (rank_h, torsion)
    return GradedAbelianGroup(comps)


def is_cohen_macaulay(k: SimplicialComplex, p: Optional[int] = None) -> bool:
    """Reisner's criterion over Q (p None) or over F_p.

    Every link, the whole complex included, must have vanishing reduced
    homology below its own dimension.
    """
    for f in k.faces:
        link = k.link(f)
        d = link.dim()
        h = reduced_homology(link)
        for i in range(-1, d):
            if field_dimension(h, i, p):
                return False
    return True


def core(k: SimplicialComplex) -> SimplicialComplex:
    """Drop ghost vertices, then every vertex whose star is everything.

    The result is a complex on the same labeled vertex set whose
    removed vertices are ghosts; taking the core twice changes nothing.
    """
    live = 0
    for v in k.vertices():
        live |= 1 << (v - 1)
    k = k.restrict(live)
    keep = 0
    for v in k.vertices():
        sub = k.subset([{v}])
        if star(k, sub) != k:
            keep |= 1 << (v - 1)
    return k.restrict(keep)


def is_gorenstein_star(k: SimplicialComplex, p: Optional[int] = None) -> bool:
    """Every link, including the complex itself, is a homology sphere
    of its own dimension over the chosen field."""
    for f in k.faces:
        link = k.link(f)
        d = link.dim()
        h = reduced_homology(link)
        for i in range(-1, d):
            if field_dimension(h, i, p):
                return False
        if field_dimension(h, d, p) != 1:
            return False
    return True


def is_gorenstein(k: SimplicialComplex, p: Optional[int] = None) -> bool:
    """Gorenstein test for the face ring over Z localized at a field.

    The face ring is Gorenstein over the field iff the core of the
    complex (ghosts and cone points removed) passes the sphere-link
    test.  Cones and polynomial extensions never change the answer,
    which is why the core is taken first.

    >>> path = SimplicialComplex.from_facets(5, [{3,5},{5,2}])
    >>> is_gorenstein(path)
    True
    >>> two_points_plus_one = SimplicialComplex.from_facets(3, [{1},{2},{3}])
    >>> is_gorenstein(two_points_plus_one)
    False
    """
    return is_gorenstein_star(core(k), p)
