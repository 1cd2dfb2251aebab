"""Rational convex polytopes in H-representation, cuts, and their complexes.

A polytope is the set of x with <x, lam_i> + eta_i >= 0 for each listed
inequality.  All arithmetic is exact (fractions.Fraction); vertices are
enumerated brute-force from n-subsets of the inequalities, which is the
right tool at desk scale (n <= 8, m <= 24).

The combinatorial bridge: inequality i corresponds to vertex i of a
simplicial complex, and a subset sigma is a face iff the facets indexed
by sigma meet.  Redundant inequalities whose hyperplane misses the
polytope give ghost vertices.

Cutting with a hyperplane <x, gamma> + xi = 0 produces the
"section-vertex" picture: both pieces acquire facet m+1, and the three
complexes (whole, plus piece, minus piece) are related by connected
sums.  :func:`cut` asserts those relations on every run.
"""

from __future__ import annotations

import itertools as it
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .complexes import (FaceSubset, SimplicialComplex, connected_sum,
                        intersection, is_strong_connected_sum,
                        open_neighborhood, star, union)
from .intmat import IntegerMatrix, rank

MAX_DIM = 8
MAX_INEQUALITIES = 24

Vector = Tuple[Fraction, ...]


def _fracs(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _solve_square(rows: List[List[Fraction]], rhs: List[Fraction]
                  ) -> Optional[List[Fraction]]:
    """Solve an n x n rational system; None if singular."""
    n = len(rows)
    a = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [v / pv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def _kernel_direction(rows: List[List[Fraction]], n: int) -> Optional[List[Fraction]]:
    """A nonzero kernel vector of an (n-1) x n system, None if rank < n-1."""
    a = [row[:] for row in rows]
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for rr in range(r, len(a)):
            if a[rr][col] != 0:
                piv = rr
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][col]
        a[r] = [v / pv for v in a[r]]
        for rr in range(len(a)):
            if rr != r and a[rr][col] != 0:
                f = a[rr][col]
                a[rr] = [v - f * w for v, w in zip(a[rr], a[r])]
        pivots.append(col)
        r += 1
    if r != n - 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    d = [Fraction(0)] * n
    d[free] = Fraction(1)
    for row_idx, col in enumerate(pivots):
        d[col] = -a[row_idx][free]
    return d


def primitive_vector(v: Sequence) -> Tuple[int, ...]:
    """Scale a nonzero rational vector to primitive integers, same direction.

    >>> primitive_vector([Fraction(2, 3), Fraction(-4, 3)])
    (1, -2)
    """
    fr = _fracs(v)
    if all(x == 0 for x in fr):
        raise ValueError("zero vector has no primitive form")
    denom = 1
    for x in fr:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


class RationalPolytope:
    """Bounded nonempty polytope { x : <x, lam_i> + eta_i >= 0 }.

    Construction enumerates all vertices exactly and records, for each
    vertex, the set of inequality indices (0-based) active there.
    Emptiness and unboundedness are rejected.
    """

    __slots__ = ("dim", "inequalities", "vertices", "active_sets",
                 "_facet_kind")

    def __init__(self, dim: int, inequalities: Sequence[Tuple[Sequence, object]]):
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}")
        ineqs = []
        for lam, eta in inequalities:
            lam = _fracs(lam)
            if len(lam) != dim:
                raise ValueError("normal vector length != dim")
            if all(x == 0 for x in lam):
                raise ValueError("zero normal vector")
            ineqs.append((lam, Fraction(eta)))
        if not ineqs:
            raise ValueError("need at least one inequality")
        if len(ineqs) > MAX_INEQUALITIES:
            raise ValueError(f"more than {MAX_INEQUALITIES} inequalities")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "inequalities", tuple(ineqs))

        verts: dict = {}
        m = len(ineqs)
        for subset in it.combinations(range(m), dim):
            rows = [list(ineqs[i][0]) for i in subset]
            rhs = [-ineqs[i][1] for i in subset]
            x = _solve_square(rows, rhs)
            if x is None:
                continue
            vals = [self._value(i, x) for i in range(m)]
            if any(v < 0 for v in vals):
                continue
            key = tuple(x)
            if key not in verts:
                verts[key] = frozenset(i for i, v in enumerate(vals) if v == 0)
        if not verts:
            raise ValueError("polytope is empty or has no vertex")
        order = sorted(verts)
        object.__setattr__(self, "vertices", tuple(order))
        object.__setattr__(self, "active_sets",
                           tuple(verts[v] for v in order))
        object.__setattr__(self, "_facet_kind", None)
        ray = self._unbounded_ray()
        if ray is not None:
            raise ValueError(f"polytope is unbounded along {ray}")

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RationalPolytope is immutable")

    def _value(self, i: int, x: Sequence[Fraction]) -> Fraction:
        lam, eta = self.inequalities[i]
        return sum(a * b for a, b in zip(lam, x)) + eta

    def _unbounded_ray(self) -> Optional[Vector]:
        # A pointed polyhedron is unbounded iff some vertex emits an
        # extreme ray: n-1 independent active constraints whose kernel
        # direction satisfies every inequality's normal.
        n = self.dim
        seen = set()
        for act in self.active_sets:
            for subset in it.combinations(sorted(act), n - 1):
                if subset in seen:
                    continue
                seen.add(subset)
                rows = [list(self.inequalities[i][0]) for i in subset]
                d = _kernel_direction(rows, n)
                if d is None:
                    continue
                for cand in (d, [-x for x in d]):
                    if all(sum(a * b for a, b in zip(lam, cand)) >= 0
                           for lam, _ in self.inequalities):
                        return tuple(cand)
        return None

    # -- queries ---------------------------------------------------------

    @property
    def n_inequalities(self) -> int:
        return len(self.inequalities)

    def contains(self, point: Sequence) -> bool:
        x = _fracs(point)
        return all(self._value(i, x) >= 0 for i in range(self.n_inequalities))

    def facet_kinds(self) -> Tuple[str, ...]:
        """Per inequality: 'facet', 'ghost', or 'low' (touches in dim < n-1).

        The hyperplane of a valid inequality meets the polytope in a
        face; 'ghost' means that face is empty.
        """
        cached = self._facet_kind
        if cached is not None:
            return cached
        kinds = []
        for i in range(self.n_inequalities):
            pts = [v for v, act in zip(self.vertices, self.active_sets)
                   if i in act]
            if not pts:
                kinds.append("ghost")
                continue
            base = pts[0]
            dirs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
            r = _rational_rank(dirs, self.dim)
            kinds.append("facet" if r == self.dim - 1 else "low")
        out = tuple(kinds)
        object.__setattr__(self, "_facet_kind", out)
        return out

    def __repr__(self):
        return (f"RationalPolytope(dim={self.dim}, "
                f"{self.n_inequalities} inequalities, "
                f"{len(self.vertices)} vertices)")


def _rational_rank(rows: List[List[Fraction]], n: int) -> int:
    a = [list(map(Fraction, row)) for row in rows]
    r = 0
    for col in range(n):
        piv = None
        for rr in range(r, len(a)):
            if a[rr][col] != 0:
                piv = rr
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][col]
        for rr in range(r + 1, len(a)):
            if a[rr][col] != 0:
                f = a[rr][col] / pv
                a[rr] = [v - f * w for v, w in zip(a[rr], a[r])]
        r += 1
    return r


def is_simple(p: RationalPolytope) -> bool:
    """Every vertex lies on exactly dim facet hyperplanes.

    Ghost inequalities are never active at a vertex, so they cannot
    spoil simplicity; duplicated or merely touching hyperplanes can.
    """
    return all(len(a) == p.dim for a in p.active_sets)


def complex_of_polytope(p: RationalPolytope,
                        vertex_count: Optional[int] = None) -> SimplicialComplex:
    """The complex with sigma a face iff the facets indexed by sigma meet.

    Inequality i (0-based) becomes vertex i + 1.  `vertex_count` may
    exceed the inequality count to leave room for ghost vertices, which
    is how the uncut polytope's complex is placed on the cut vertex set.
    """
    m = p.n_inequalities
    count = m if vertex_count is None else vertex_count
    if count < m:
        raise ValueError("vertex_count below the number of inequalities")
    # A nonempty intersection of facets is a face of the polytope, so it
    # owns a vertex of the polytope; the active sets see everything.
    facets = []
    for act in p.active_sets:
        facets.append({i + 1 for i in act})
    return SimplicialComplex.from_facets(count, facets)


@dataclass(frozen=True)
class CutSpec:
    """Cutting hyperplane <x, normal> + offset = 0, with a facet label.

    The positive side (value > 0) is the "plus" piece.  The normal must
    be a primitive integer vector; the label is the positive integer
    attached to the new facet in characteristic-matrix constructions.
    """

    normal: Tuple[int, ...]
    offset: Fraction
    label: int = 1

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(int(x) for x in self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if not self.normal or all(x == 0 for x in self.normal):
            raise ValueError("cut normal must be nonzero")
        if primitive_vector(self.normal) != self.normal:
            raise ValueError("cut normal must be primitive")
        if self.label < 1:
            raise ValueError("facet labels are positive")

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum(a * b for a, b in zip(self.normal, x)) + self.offset


@dataclass(frozen=True)
class GenericCutCertificate:
    """Why a cut is or is not generic for a given polytope."""

    meets_both_sides: bool
    no_vertex_on_plane: bool
    pieces_simple: bool

    def __bool__(self) -> bool:
        return (self.meets_both_sides and self.no_vertex_on_plane
                and self.pieces_simple)


def is_generic_cut(p: RationalPolytope, c: CutSpec) -> GenericCutCertificate:
    """A generic cut meets the interior, misses all vertices, and keeps
    every vertex of both pieces on exactly dim of the m+1 hyperplanes."""
    vals = [c.value(v) for v in p.vertices]
    no_vertex = all(v != 0 for v in vals)
    meets = any(v > 0 for v in vals) and any(v < 0 for v in vals)
    pieces_simple = False
    if meets and no_vertex:
        plus, minus = _pieces(p, c)
        pieces_simple = is_simple(plus) and is_simple(minus)
    return GenericCutCertificate(meets, no_vertex, pieces_simple)


def _pieces(p: RationalPolytope, c: CutSpec
            ) -> Tuple[RationalPolytope, RationalPolytope]:
    base = [(lam, eta) for lam, eta in p.inequalities]
    plus = RationalPolytope(p.dim, base + [(c.normal, c.offset)])
    neg = tuple(-x for x in c.normal)
    minus = RationalPolytope(p.dim, base + [(neg, -c.offset)])
    return plus, minus


@dataclass(frozen=True)
class CutResult:
    """Everything produced by slicing a simple polytope generically.

    The complexes all live on m+1 vertices, where vertex m+1 (the
    "section vertex") stands for the new facet; it is a ghost of
    `whole_complex`.  `z_cut` is the open neighborhood of the section
    vertex; `z_plus` indexes the facet intersections that survive
    strictly inside the plus piece.
    """

    plus: RationalPolytope
    minus: RationalPolytope
    whole_complex: SimplicialComplex
    plus_complex: SimplicialComplex
    minus_complex: SimplicialComplex
    z_cut: FaceSubset
    z_plus: FaceSubset
    section_vertex: int


def cut(p: RationalPolytope, c: CutSpec) -> CutResult:
    """Slice `p` by a generic hyperplane and assemble the sum picture.

    Postconditions (asserted): the whole complex is the strong connected
    sum of the two piece complexes along z_cut, and the minus complex is
    the strong connected sum of the plus piece with the whole along
    z_plus.  The pieces' intersection is the closed star of the section
    vertex in their union.
    """
    if not is_simple(p):
        raise ValueError("cut requires a simple polytope")
    cert = is_generic_cut(p, c)
    if not cert:
        raise ValueError(f"cut is not generic: {cert}")
    m = p.n_inequalities
    o = m + 1
    plus, minus = _pieces(p, c)
    k_whole = complex_of_polytope(p, vertex_count=o)
    k_plus = complex_of_polytope(plus)
    k_minus = complex_of_polytope(minus)

    big = union(k_plus, k_minus)
    z_cut = open_neighborhood(big, big.subset([{o}]))

    # sigma contributes to z_plus iff its facet intersection is nonempty
    # and stays strictly on the positive side of the cut.
    vals = [c.value(v) for v in p.vertices]
    z_plus_members = set()
    for f in k_whole.faces:
        if not f or f >> m:
            continue
        incident = [vals[i] for i, act in enumerate(p.active_sets)
                    if all(j in act for j in _bits(f))]
        if incident and all(v > 0 for v in incident):
            z_plus_members.add(f)
    kpw = union(k_plus, k_whole)
    z_plus = FaceSubset(kpw, z_plus_members)

    # the three lemma-level identities, cheap enough to check every time
    assert intersection(k_plus, k_minus) == star(big, big.subset([{o}]))
    assert big.faces - k_whole.faces == z_cut.members
    assert connected_sum(k_plus, k_minus, z_cut) == k_whole
    assert bool(is_strong_connected_sum(k_plus, k_minus, z_cut))
    assert connected_sum(k_plus, k_whole, z_plus) == k_minus
    assert bool(is_strong_connected_sum(k_plus, k_whole, z_plus))
    return CutResult(plus, minus, k_whole, k_plus, k_minus,
                     z_cut, z_plus, o)


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class LabeledPolytope:
    """A polytope with a positive integer label on each inequality."""

    polytope: RationalPolytope
    labels: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(b) for b in self.labels))
        if len(self.labels) != self.polytope.n_inequalities:
            raise ValueError("one label per inequality")
        if any(b < 1 for b in self.labels):
            raise ValueError("facet labels are positive")


def characteristic_matrix(lp: LabeledPolytope) -> IntegerMatrix:
    """Columns b_i * beta_i, beta_i the primitive inward normal of facet i.

    Raises if the columns do not span Q^n; a rank drop means the labeled
    normals cannot define a subring of full height.
    """
    p = lp.polytope
    cols = []
    for (lam, _), b in zip(p.inequalities, lp.labels):
        beta = primitive_vector(lam)
        cols.append([b * x for x in beta])
    mat = IntegerMatrix.from_rows([[col[i] for col in cols]
                                   for i in range(p.dim)])
    if rank(mat) != p.dim:
        raise ValueError("characteristic matrix rank below the dimension")
    return mat


def extended_matrix(lp: LabeledPolytope, c: CutSpec) -> IntegerMatrix:
    """Characteristic matrix with the section-facet column appended."""
    base = characteristic_matrix(lp)
    entries = dict(base.entries)
    for i, x in enumerate(c.normal):
        if c.label * x:
            entries[(i, base.cols)] = c.label * x
    out = IntegerMatrix(base.rows, base.cols + 1, entries)
    if rank(out) != lp.polytope.dim:
        raise ValueError("extended matrix rank below the dimension")
    return out
