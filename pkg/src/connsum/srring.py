"""Stanley-Reisner rings: graded bases, Hilbert series, exactness checks.

The face ring of a complex K on m vertices is Z[x_1..x_m] modulo the
monomials whose support is a non-face.  A Z-basis in each degree is the
set of monomials with support a face of K.  Degrees here are monomial
degrees; the topological convention that each x_i sits in degree 2 only
shows up in display strings.

The heavy lifting is integral: short exact sequences of graded pieces
are verified over Z with Smith normal forms, so torsion problems cannot
hide.  Sequences checked per degree d:

    0 -> Z[K1 | K2] -> Z[K1] (+) Z[K2] -> Z[K1 & K2] -> 0
    0 -> I_Z -> Z[K1] x_W Z[K2] -> Z[K1 #_Z K2] -> 0

with the second one routed through the first (the fiber product is the
verified image of Z[K1 | K2] in the middle term).
"""

from __future__ import annotations

import itertools as it
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .complexes import (FaceSubset, SimplicialComplex, connected_sum,
                        face_str, intersection, seam, union, vertices_of)
from .intmat import IntegerMatrix, invariant_factors, kernel_basis, rank

Exponent = Tuple[int, ...]


def _support(a: Exponent) -> int:
    mask = 0
    for i, e in enumerate(a):
        if e:
            mask |= 1 << i
    return mask


def minimal_nonfaces(k: SimplicialComplex) -> Tuple[int, ...]:
    """Masks of the minimal non-faces, sorted.

    Every minimal non-face is a face plus one vertex, so candidates are
    harvested from the boundary of K rather than from all of 2^[m].
    """
    cands = set()
    for f in k.faces:
        for v in range(k.m):
            bit = 1 << v
            if f & bit or (f | bit) in k.faces:
                continue
            cands.add(f | bit)
    out = []
    for c in cands:
        minimal = True
        v = c
        while v:
            bit = v & -v
            if (c ^ bit) not in k.faces:
                minimal = False
                break
            v ^= bit
        if minimal:
            out.append(c)
    return tuple(sorted(out))


@dataclass(frozen=True)
class SRPresentation:
    """Presentation data of the face ring of a complex."""

    complex: SimplicialComplex
    nonface_generators: Tuple[int, ...]

    @classmethod
    def of(cls, k: SimplicialComplex) -> "SRPresentation":
        return cls(k, minimal_nonfaces(k))

    def generator_strings(self) -> Tuple[str, ...]:
        return tuple("".join(f"x{v}" for v in vertices_of(f))
                     for f in self.nonface_generators)

    def __str__(self):
        gens = ", ".join(self.generator_strings()) or "0"
        return (f"Z[x1..x{self.complex.m}] / ({gens})")


@lru_cache(maxsize=None)
def graded_basis(k: SimplicialComplex, d: int) -> Tuple[Exponent, ...]:
    """Monomial Z-basis of the face ring in monomial degree d, sorted."""
    if d < 0:
        return ()
    if d == 0:
        return ((0,) * k.m,)
    out = []
    for f in k.faces:
        verts = vertices_of(f)
        s = len(verts)
        if not 1 <= s <= d:
            continue
        # compositions of d into s positive parts
        for cuts in it.combinations(range(1, d), s - 1):
            parts = []
            prev = 0
            for cpos in cuts:
                parts.append(cpos - prev)
                prev = cpos
            parts.append(d - prev)
            a = [0] * k.m
            for v, e in zip(verts, parts):
                a[v - 1] = e
            out.append(tuple(a))
    out.sort()
    return tuple(out)


def basis_index(k: SimplicialComplex, d: int) -> Dict[Exponent, int]:
    return {a: i for i, a in enumerate(graded_basis(k, d))}


def count_basis(k: SimplicialComplex, d: int) -> int:
    """Number of degree-d monomials, counted by faces and compositions."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    total = 0
    for f in k.faces:
        s = bin(f).count("1")
        if 1 <= s <= d:
            total += comb(d - 1, s - 1)
    return total


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1 - t)^denominator_exponent, in monomial degrees.

    Stored in reduced form (numerator not divisible by 1 - t unless the
    exponent is zero).  The conventional display doubles degrees, i.e.
    replaces t by t^2.
    """

    numerator: Tuple[int, ...]
    denominator_exponent: int

    def __post_init__(self):
        num = list(self.numerator)
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        d = self.denominator_exponent
        while d > 0:
            # numerator divisible by (1 - t)?  synthetic division at t = 1
            if sum(num) != 0:
                break
            q = []
            acc = 0
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num = q or [0]
            d -= 1
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        object.__setattr__(self, "numerator", tuple(num))
        object.__setattr__(self, "denominator_exponent", d)

    def coefficient(self, d: int) -> int:
        """Coefficient of t^d in the power-series expansion."""
        if d < 0:
            return 0
        e = self.denominator_exponent
        total = 0
        for kk, c in enumerate(self.numerator):
            if kk > d:
                break
            if c:
                total += c * (comb(d - kk + e - 1, e - 1) if e else (kk == d))
        return total

    def display(self) -> str:
        """Conventional form with generators in degree 2."""
        terms = []
        for kk, c in enumerate(self.numerator):
            if not c:
                continue
            if kk == 0:
                terms.append(f"{c}")
            else:
                sign = "+" if c > 0 else "-"
                mag = abs(c)
                coeff = "" if mag == 1 else f"{mag}*"
                terms.append(f"{sign} {coeff}t^{2 * kk}")
        num = " ".join(terms) or "0"
        if self.denominator_exponent == 0:
            return num
        return f"({num}) / (1 - t^2)^{self.denominator_exponent}"


def hilbert_series(k: SimplicialComplex, check_up_to: int = 12) -> HilbertSeries:
    """Hilbert series of the face ring, with a per-degree self-check.

    Sums t^|sigma| / (1-t)^|sigma| over faces and verifies the expansion
    against direct monomial counts up to `check_up_to`.
    """
    dd = k.dim() + 1
    num = [0] * (dd + 1)
    for f in k.faces:
        s = bin(f).count("1")
        # t^s (1-t)^(dd-s)
        for j in range(dd - s + 1):
            num[s + j] += (-1) ** j * comb(dd - s, j)
    series = HilbertSeries(tuple(num), dd)
    for d in range(check_up_to + 1):
        assert series.coefficient(d) == count_basis(k, d), \
            f"Hilbert series self-check failed in degree {d}"
    return series


# -- graded maps -------------------------------------------------------


def restriction_matrix(k_from: SimplicialComplex, k_to: SimplicialComplex,
                       d: int) -> IntegerMatrix:
    """Matrix of Z[k_from]_d -> Z[k_to]_d killing monomials that leave k_to.

    k_to must be a subcomplex of k_from; rows are indexed by the target
    basis, columns by the source basis, and every surviving monomial
    maps to itself.
    """
    if not k_to.is_subcomplex_of(k_from):
        raise ValueError("restriction needs a subcomplex target")
    src = graded_basis(k_from, d)
    tgt = basis_index(k_to, d)
    entries = {}
    for j, a in enumerate(src):
        i = tgt.get(a)
        if i is not None:
            entries[(i, j)] = 1
    return IntegerMatrix(len(tgt), len(src), entries)


def monomial_multiplication(k: SimplicialComplex, exponent: Exponent,
                            d: int) -> IntegerMatrix:
    """Multiplication by x^exponent from degree d to degree d + |exponent|."""
    step = sum(exponent)
    src = graded_basis(k, d)
    tgt = basis_index(k, d + step)
    entries = {}
    for j, a in enumerate(src):
        b = tuple(x + y for x, y in zip(a, exponent))
        i = tgt.get(b)
        if i is not None:
            entries[(i, j)] = 1
    return IntegerMatrix(len(tgt), len(src), entries)


def variable_multiplication(k: SimplicialComplex, var: int, d: int
                            ) -> IntegerMatrix:
    """Multiplication by x_var (1-based) from degree d to d + 1."""
    e = tuple(1 if i == var - 1 else 0 for i in range(k.m))
    return monomial_multiplication(k, e, d)


def ideal_coordinates(k: SimplicialComplex, gens: Iterable[int], d: int
                      ) -> List[int]:
    """Indices of degree-d basis monomials divisible by some x_sigma."""
    gen_masks = list(gens)
    out = []
    for j, a in enumerate(graded_basis(k, d)):
        supp = _support(a)
        if any(g & supp == g for g in gen_masks):
            out.append(j)
    return out


def _all_unit(factors: Sequence[int]) -> bool:
    return all(f == 1 for f in factors)


# -- theorem-level verifications ---------------------------------------


@dataclass(frozen=True)
class DegreeExactness:
    """Exactness bookkeeping for one graded piece of a three-term sequence."""

    degree: int
    injective: bool
    exact_mid: bool
    surjective: bool
    ranks: Tuple[int, int, int]  # dims of left, middle, right pieces

    @property
    def exact(self) -> bool:
        return self.injective and self.exact_mid and self.surjective

    def as_dict(self) -> dict:
        return {"degree": self.degree, "injective": self.injective,
                "exact_mid": self.exact_mid, "surjective": self.surjective,
                "ranks": list(self.ranks)}


@dataclass(frozen=True)
class FiberProductReport:
    """Per-degree verification of the union/intersection sequence."""

    degrees: Tuple[DegreeExactness, ...]

    @property
    def all_exact(self) -> bool:
        return all(d.exact for d in self.degrees)

    def as_dict(self) -> dict:
        return {"all_exact": self.all_exact,
                "degrees": [d.as_dict() for d in self.degrees]}


def _glue_matrices(k1: SimplicialComplex, k2: SimplicialComplex, d: int):
    """The two maps of the union sequence in degree d.

    Returns (f, g, dims) with f = (restrict, restrict) into the direct
    sum and g = difference of restrictions onto the intersection.
    """
    big = union(k1, k2)
    w = intersection(k1, k2)
    bbig = graded_basis(big, d)
    i1 = basis_index(k1, d)
    i2 = basis_index(k2, d)
    iw = basis_index(w, d)
    n1, n2 = len(i1), len(i2)
    fe = {}
    for j, a in enumerate(bbig):
        if a in i1:
            fe[(i1[a], j)] = 1
        if a in i2:
            fe[(n1 + i2[a], j)] = 1
    f = IntegerMatrix(n1 + n2, len(bbig), fe)
    ge = {}
    for a, jj in i1.items():
        if a in iw:
            ge[(iw[a], jj)] = 1
    for a, jj in i2.items():
        if a in iw:
            ge[(iw[a], n1 + jj)] = -1
    g = IntegerMatrix(len(iw), n1 + n2, ge)
    return f, g, (len(bbig), n1 + n2, len(iw))


def _degree_exactness(f: IntegerMatrix, g: IntegerMatrix,
                      dims: Tuple[int, int, int], d: int) -> DegreeExactness:
    if not (g @ f).is_zero():
        return DegreeExactness(d, False, False, False, dims)
    ff = invariant_factors(f)
    gf = invariant_factors(g)
    injective = len(ff) == dims[0]
    # image of f is saturated and has complementary rank to ker g
    exact_mid = _all_unit(ff) and (len(ff) + len(gf) == dims[1])
    surjective = len(gf) == dims[2] and _all_unit(gf)
    return DegreeExactness(d, injective, exact_mid, surjective, dims)


def verify_fiber_product(k1: SimplicialComplex, k2: SimplicialComplex,
                         d_max: int = 8) -> FiberProductReport:
    """Integral exactness of the union sequence in degrees 0..d_max.

    In degree d this checks that the face ring of K1 | K2 is exactly the
    fiber product of those of K1 and K2 over their intersection: the
    glue map is injective with saturated image equal to the kernel of
    the difference map, which is onto.
    """
    rows = []
    for d in range(d_max + 1):
        f, g, dims = _glue_matrices(k1, k2, d)
        rows.append(_degree_exactness(f, g, dims, d))
    return FiberProductReport(tuple(rows))


@dataclass(frozen=True)
class ConnectedSumDegree:
    degree: int
    union_sequence: DegreeExactness
    ideal_sequence: DegreeExactness
    compatible: bool        # restriction through the middle == direct
    ideal_match: bool       # I_Z and J_Z have the same monomial basis

    @property
    def exact(self) -> bool:
        return (self.union_sequence.exact and self.ideal_sequence.exact
                and self.compatible and self.ideal_match)

    def as_dict(self) -> dict:
        return {"degree": self.degree,
                "union_sequence": self.union_sequence.as_dict(),
                "ideal_sequence": self.ideal_sequence.as_dict(),
                "compatible": self.compatible,
                "ideal_match": self.ideal_match}


@dataclass(frozen=True)
class ConnectedSumRingReport:
    sum_complex: SimplicialComplex
    degrees: Tuple[ConnectedSumDegree, ...]

    @property
    def all_exact(self) -> bool:
        return all(d.exact for d in self.degrees)

    def as_dict(self) -> dict:
        return {"all_exact": self.all_exact,
                "degrees": [d.as_dict() for d in self.degrees]}


def verify_connected_sum_ring(k1: SimplicialComplex, k2: SimplicialComplex,
                              z, d_max: int = 8) -> ConnectedSumRingReport:
    """Check that Z[K1 #_Z K2] is the fiber product modulo the ideal of Z.

    Two short exact sequences are verified in every degree up to d_max:
    the union sequence (which identifies the fiber product with the face
    ring of K1 | K2) and

        0 -> I_Z -> Z[K1 | K2] -> Z[K1 #_Z K2] -> 0,

    plus the compatibility that routes the second through the fiber
    product, and the degreewise identification of I_Z with the ideal
    J_Z inside Z[W] generated by the same faces.
    """
    ksum = connected_sum(k1, k2, z)
    big = union(k1, k2)
    w = intersection(k1, k2)
    zmasks = z.members if isinstance(z, FaceSubset) else frozenset(
        f if isinstance(f, int) else sum(1 << (v - 1) for v in f) for f in z)
    rows = []
    for d in range(d_max + 1):
        f, g, dims = _glue_matrices(k1, k2, d)
        union_row = _degree_exactness(f, g, dims, d)

        bbig = graded_basis(big, d)
        ideal_cols = ideal_coordinates(big, zmasks, d)
        incl = IntegerMatrix(len(bbig), len(ideal_cols),
                             {(jj, i): 1 for i, jj in enumerate(ideal_cols)})
        h = restriction_matrix(big, ksum, d)
        ideal_row = _degree_exactness(
            incl, h, (len(ideal_cols), len(bbig), len(graded_basis(ksum, d))), d)

        # the projection out of the middle term that realizes the map
        # fiber product -> Z[K]: read a monomial off whichever summand
        # carries it
        i1 = basis_index(k1, d)
        i2 = basis_index(k2, d)
        ik = basis_index(ksum, d)
        n1 = len(i1)
        pe = {}
        for a, row_i in ik.items():
            if a in i1:
                pe[(row_i, i1[a])] = 1
            else:
                pe[(row_i, n1 + i2[a])] = 1
        proj = IntegerMatrix(len(ik), dims[1], pe)
        compatible = (proj @ f) == h

        jz = set(ideal_coordinates(w, zmasks, d))
        bw = graded_basis(w, d)
        ideal_monoms = {bbig[j] for j in ideal_cols}
        jz_monoms = {bw[j] for j in jz}
        ideal_match = ideal_monoms == jz_monoms

        rows.append(ConnectedSumDegree(d, union_row, ideal_row,
                                       compatible, ideal_match))
    return ConnectedSumRingReport(ksum, tuple(rows))


# -- annihilators ------------------------------------------------------


def annihilator_generators(k: SimplicialComplex, w: SimplicialComplex
                           ) -> FaceSubset:
    """Faces generating the annihilator of the ideal of K \\ W in Z[K].

    These are exactly the seam faces of W inside K.  When W = K the
    annihilated ideal is zero and the true annihilator is the whole
    ring; the returned generators then span everything in positive
    degrees only.
    """
    return seam(k, w)


@dataclass(frozen=True)
class AnnihilatorTruncation:
    """Kernel bases of multiplication into the ideal of K \\ W, by degree."""

    generators_outside: Tuple[int, ...]         # minimal faces of K \ W
    kernels: Dict[int, Tuple[Tuple[int, ...], ...]]  # degree -> basis vectors


def _minimal_members(masks: Iterable[int]) -> List[int]:
    ms = list(masks)
    return [a for a in ms if not any(b != a and a & b == b for b in ms)]


def annihilator_truncated(k: SimplicialComplex, w: SimplicialComplex,
                          d_max: int = 4) -> AnnihilatorTruncation:
    """Degreewise annihilator of I_{K \\ W} by exact kernel computation.

    For each degree d <= d_max, stacks the multiplication maps by the
    minimal faces of K \\ W and returns a saturated basis of the common
    kernel, in the coordinates of the degree-d monomial basis.
    """
    if not w.is_subcomplex_of(k):
        raise ValueError("W must be a subcomplex of K")
    outs = _minimal_members(k.faces - w.faces)
    kernels: Dict[int, Tuple[Tuple[int, ...], ...]] = {}
    for d in range(d_max + 1):
        n = len(graded_basis(k, d))
        stacked = IntegerMatrix.zeros(0, n)
        for t in sorted(outs):
            e = tuple(1 if (t >> i) & 1 else 0 for i in range(k.m))
            stacked = stacked.stack_below(monomial_multiplication(k, e, d))
        kern = kernel_basis(stacked)
        kernels[d] = tuple(tuple(v) for v in kern)
    return AnnihilatorTruncation(tuple(sorted(outs)), kernels)


@dataclass(frozen=True)
class AnnihilatorDegree:
    degree: int
    ideal_rank: int
    kernel_rank: int
    ideal_inside_kernel: bool
    kernel_inside_span: bool

    @property
    def match(self) -> bool:
        return (self.ideal_rank == self.kernel_rank
                and self.ideal_inside_kernel and self.kernel_inside_span)


@dataclass(frozen=True)
class AnnihilatorReport:
    generators: FaceSubset
    annihilator_is_unit: bool     # K \ W empty: everything annihilates
    degrees: Tuple[AnnihilatorDegree, ...]

    @property
    def all_match(self) -> bool:
        return all(d.match for d in self.degrees)

    def as_dict(self) -> dict:
        return {"generators": [list(vertices_of(f)) for f in self.generators],
                "annihilator_is_unit": self.annihilator_is_unit,
                "all_match": self.all_match,
                "degrees": [{"degree": d.degree, "ideal_rank": d.ideal_rank,
                             "kernel_rank": d.kernel_rank,
                             "match": d.match} for d in self.degrees]}


def verify_annihilator(k: SimplicialComplex, w: SimplicialComplex,
                       d_max: int = 4) -> AnnihilatorReport:
    """Compare the seam-generated ideal with the computed annihilator.

    Positive degrees must agree exactly: the coordinate span of the
    monomials divisible by a seam face equals the kernel of
    multiplication into the ideal of K \\ W.  Degree zero is special
    solely when W = K (zero ideal, unit annihilator) and is reported via
    `annihilator_is_unit` instead.
    """
    gens = annihilator_generators(k, w)
    trunc = annihilator_truncated(k, w, d_max)
    is_unit = not (k.faces - w.faces)
    rows = []
    for d in range(1, d_max + 1):
        cols = set(ideal_coordinates(k, gens.members, d))
        kern = trunc.kernels[d]
        n = len(graded_basis(k, d))
        inside = all(
            all(v[i] == 0 for i in range(n) if i not in cols) for v in kern)
        # every ideal monomial actually annihilates: its column in each
        # stacked multiplication map must vanish
        ideal_ok = True
        for t in trunc.generators_outside:
            e = tuple(1 if (t >> i) & 1 else 0 for i in range(k.m))
            mt = monomial_multiplication(k, e, d)
            if any(j in cols for (_, j) in mt.entries):
                ideal_ok = False
                break
        rows.append(AnnihilatorDegree(d, len(cols), len(kern),
                                      ideal_ok, inside))
    return AnnihilatorReport(gens, is_unit, tuple(rows))
