"""Koszul-complex Tor over integer subrings of face rings.

An n x m integer matrix B of full rank n singles out the linear forms
u_i = sum_j B[i][j] x_j inside Z[K] and the polynomial subring
Z[u_1..u_n].  Tor_p of Z[K] over that subring is the homology of the
Koszul complex Lambda^p(Z^n) (x) Z[K] with

    d(e_{i_1} ^ ... ^ e_{i_p} (x) f)
        = sum_k (-1)^(k+1) e_{i_1} ^ ... omit k ... (x) u_{i_k} f.

Each exterior generator carries one unit of monomial degree, so the
degree-d slice of level p uses Z[K]_{d-p}.  Everything is integral:
ranks and torsion come from Smith invariant factors of the two
neighboring differentials.

Degrees here are monomial units throughout; a display layer that doubles
them (t^2 grading) is purely cosmetic and lives elsewhere.

`verify_tor_fiber_product` pushes the Tor_0 presentations through the
union and ideal short exact sequences degree by degree, deciding
exactness of the induced maps by exact lattice computations.
"""

from __future__ import annotations

import itertools as it
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .complexes import (FaceSubset, SimplicialComplex, connected_sum,
                        intersection, seam, union, vertices_of)
from .homology import GradedAbelianGroup
from .intmat import (IntegerMatrix, column_hermite, invariant_factors,
                     kernel_basis, lattice_contains, rank)
from .srring import (SRPresentation, basis_index, count_basis, graded_basis,
                     ideal_coordinates, restriction_matrix,
                     variable_multiplication)

ComplexLike = Union[SimplicialComplex, SRPresentation]


def _complex_of(r: ComplexLike) -> SimplicialComplex:
    return r if isinstance(r, SimplicialComplex) else r.complex


@dataclass(frozen=True)
class SubringSpec:
    """The subring Z[u_1..u_n] of Z[x_1..x_m] cut out by a matrix.

    Row i holds the coefficients of u_i; full row rank over Q required.
    """

    matrix: IntegerMatrix

    def __post_init__(self):
        if rank(self.matrix) != self.matrix.rows:
            raise ValueError("subring matrix must have full row rank")

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def m(self) -> int:
        return self.matrix.cols

    def form_multiplication(self, k: SimplicialComplex, i: int, d: int
                            ) -> IntegerMatrix:
        """Multiplication by u_i (1-based) from degree d to d + 1."""
        if k.m != self.m:
            raise ValueError("vertex count does not match matrix columns")
        out: Dict[Tuple[int, int], int] = {}
        for j in range(1, self.m + 1):
            c = self.matrix[i - 1, j - 1]
            if not c:
                continue
            for key, v in variable_multiplication(k, j, d).entries.items():
                out[key] = out.get(key, 0) + c * v
        return IntegerMatrix(len(graded_basis(k, d + 1)),
                             len(graded_basis(k, d)), out)


def _koszul_differential(k: SimplicialComplex, spec: SubringSpec,
                         p: int, d: int,
                         mults: Dict[Tuple[int, int], IntegerMatrix]
                         ) -> IntegerMatrix:
    """d_p in total degree d, from Lambda^p (x) Z[K]_{d-p}.

    Blocks are laid out combination-major: flat index is
    combo_index * len(monomial basis) + monomial_index, combinations in
    lexicographic order.
    """
    n = spec.n
    src_combos = list(it.combinations(range(1, n + 1), p))
    tgt_combos = {c: i for i, c in
                  enumerate(it.combinations(range(1, n + 1), p - 1))}
    src_mono = len(graded_basis(k, d - p))
    tgt_mono = len(graded_basis(k, d - p + 1))
    entries: Dict[Tuple[int, int], int] = {}
    for ci, combo in enumerate(src_combos):
        for pos, i_var in enumerate(combo):
            sign = 1 if pos % 2 == 0 else -1
            ti = tgt_combos[combo[:pos] + combo[pos + 1:]]
            mult = mults.get((i_var, d - p))
            if mult is None:
                mult = spec.form_multiplication(k, i_var, d - p)
                mults[(i_var, d - p)] = mult
            for (r, c), v in mult.entries.items():
                key = (ti * tgt_mono + r, ci * src_mono + c)
                entries[key] = entries.get(key, 0) + sign * v
    return IntegerMatrix(len(tgt_combos) * tgt_mono,
                         len(src_combos) * src_mono, entries)


@dataclass(frozen=True)
class TorTable(Sequence):
    """Tor_p for p = 0..p_max, each graded by monomial degree.

    Indexes like a list of GradedAbelianGroup: table[p], len(table).
    """

    complex: SimplicialComplex
    spec: SubringSpec
    p_max: int
    d_max: int
    groups: Tuple[GradedAbelianGroup, ...]

    def __len__(self) -> int:
        return len(self.groups)

    def __getitem__(self, p):
        return self.groups[p]

    def group(self, p: int) -> GradedAbelianGroup:
        """Like table[p] but out-of-range levels read as zero."""
        if 0 <= p < len(self.groups):
            return self.groups[p]
        return GradedAbelianGroup({})

    def as_rows(self) -> List[dict]:
        rows = []
        for p, g in enumerate(self.groups):
            for d in g.degrees():
                rows.append({"p": p, "degree": d, "rank": g.rank(d),
                             "torsion": list(g.torsion(d))})
        return rows


def koszul_tor(r: ComplexLike, spec: SubringSpec,
               p_max: Optional[int] = None, d_max: int = 10) -> TorTable:
    """Integral Tor of the face ring over Z[u], degrees 0..d_max.

    p_max defaults to n, beyond which the exterior algebra and hence Tor
    vanish.  Raises when the degree window cannot contain the requested
    level (level p lives in degrees >= p).
    """
    k = _complex_of(r)
    if k.m != spec.m:
        raise ValueError("vertex count does not match matrix columns")
    if p_max is None:
        p_max = spec.n
    if p_max < 0 or d_max < 0:
        raise ValueError("window bounds must be nonnegative")
    if d_max < p_max:
        raise ValueError(f"d_max={d_max} cannot see homological level {p_max}")
    n = spec.n
    mults: Dict[Tuple[int, int], IntegerMatrix] = {}
    comps: List[Dict[int, Tuple[int, Tuple[int, ...]]]] = \
        [dict() for _ in range(p_max + 1)]
    for d in range(d_max + 1):
        diffs: Dict[int, IntegerMatrix] = {}
        top = min(p_max + 1, n, d)
        for p in range(1, top + 1):
            diffs[p] = _koszul_differential(k, spec, p, d, mults)
        for p in range(1, top):
            assert (diffs[p] @ diffs[p + 1]).is_zero(), \
                "Koszul differential does not square to zero"
        for p in range(0, min(p_max, d) + 1):
            dim_c = comb(n, p) * count_basis(k, d - p)
            out_f = invariant_factors(diffs[p]) if p in diffs else []
            in_f = invariant_factors(diffs[p + 1]) if p + 1 in diffs else []
            free = dim_c - len(out_f) - len(in_f)
            assert free >= 0
            tors = tuple(t for t in in_f if t > 1)
            if free or tors:
                comps[p][d] = (free, tors)
    return TorTable(k, spec, p_max, d_max,
                    tuple(GradedAbelianGroup(c) for c in comps))


def lsop_check(r: ComplexLike, spec: SubringSpec) -> bool:
    """Do the forms restrict to a linear system of parameters over Q?

    True iff for every facet the matrix columns at its vertices are
    linearly independent; ghost vertices never enter.  Guarantees the
    face ring is a finite module over Q[u] after tensoring with Q.
    """
    k = _complex_of(r)
    if k.m != spec.m:
        raise ValueError("vertex count does not match matrix columns")
    for f in k.facets():
        verts = vertices_of(f)
        sub = IntegerMatrix(spec.n, len(verts),
                            {(i, jj): spec.matrix[i, v - 1]
                             for i in range(spec.n)
                             for jj, v in enumerate(verts)
                             if spec.matrix[i, v - 1]})
        if rank(sub) != len(verts):
            return False
    return True


def euler_polynomial(r: ComplexLike, spec: SubringSpec, d_max: int
                     ) -> List[int]:
    """Coefficients of Hilb(Z[K]) * (1-t)^n up to degree d_max.

    Degree d holds the alternating sum over p of the Tor ranks; when the
    forms are a system of parameters this series is a polynomial.
    """
    k = _complex_of(r)
    n = spec.n
    return [sum((-1) ** j * comb(n, j) * count_basis(k, d - j)
                for j in range(min(n, d) + 1))
            for d in range(d_max + 1)]


def euler_check(table: TorTable) -> bool:
    """Alternating Tor ranks match Hilb * (1-t)^n in every window degree.

    Only meaningful when the table covers all levels (p_max >= n).
    """
    if table.p_max < table.spec.n:
        raise ValueError("Euler check needs the full level range")
    poly = euler_polynomial(table.complex, table.spec, table.d_max)
    return all(
        sum((-1) ** p * table.group(p).rank(d)
            for p in range(table.p_max + 1)) == poly[d]
        for d in range(table.d_max + 1))


def tor1_trivial(table: TorTable) -> bool:
    return table.group(1).is_trivial()


def franz_puppe_holds(table: TorTable) -> bool:
    """Tor_1 = 0 in the window forces Tor_i = 0 there for all i >= 2."""
    if not tor1_trivial(table):
        return True
    return all(table.group(p).is_trivial()
               for p in range(2, table.p_max + 1))


@dataclass(frozen=True)
class VanishingVerdict:
    """How confidently a window certifies Tor_{>=1} = 0.

    The observation itself is always "zero up to degree d_max".  It is
    promoted to an unconditional "zero" only when the forms are a linear
    system of parameters, the Euler polynomial's degree sits strictly
    inside the window, and every Tor group (level 0 included, torsion
    included) vanishes between that degree and the window's end; under
    those conditions the quotient by the forms is concentrated in
    degrees the window fully covers.  Anything less is reported as
    bounded evidence, and a window with visible Tor_{>=1} as nonzero.
    """

    window_trivial: bool
    lsop: bool
    euler_degree: Optional[int]
    beyond_clean: bool
    d_max: int

    @property
    def confidence(self) -> str:
        if not self.window_trivial:
            return "nonzero"
        if self.lsop and self.euler_degree is not None and self.beyond_clean:
            return "unconditional"
        return "bounded evidence"

    def as_dict(self) -> dict:
        return {"window_trivial": self.window_trivial, "lsop": self.lsop,
                "euler_degree": self.euler_degree,
                "beyond_clean": self.beyond_clean, "d_max": self.d_max,
                "confidence": self.confidence}


def vanishing_verdict(table: TorTable) -> VanishingVerdict:
    window_trivial = all(table.group(p).is_trivial()
                         for p in range(1, table.p_max + 1))
    lsop = lsop_check(table.complex, table.spec)
    poly = euler_polynomial(table.complex, table.spec, table.d_max)
    degree: Optional[int] = None
    for d, c in enumerate(poly):
        if c:
            degree = d
    # a nonzero trailing coefficient leaves the true degree unknown
    if degree is not None and degree == table.d_max:
        degree = None
    beyond = degree is not None and all(
        table.group(p).rank(d) == 0 and not table.group(p).torsion(d)
        for p in range(table.p_max + 1)
        for d in range(degree + 1, table.d_max + 1))
    return VanishingVerdict(window_trivial, lsop, degree, beyond, table.d_max)


# -- Tor_0 through unions and connected sums ---------------------------


def _u_relations(k: SimplicialComplex, spec: SubringSpec, d: int
                 ) -> IntegerMatrix:
    """Relation columns of Tor_0(Z[K])_d: images of every u_i from d-1."""
    if d == 0:
        return IntegerMatrix.zeros(len(graded_basis(k, 0)), 0)
    mat = spec.form_multiplication(k, 1, d - 1)
    for i in range(2, spec.n + 1):
        mat = mat.stack_right(spec.form_multiplication(k, i, d - 1))
    return mat


def _cols(m: IntegerMatrix) -> List[List[int]]:
    cols: List[List[int]] = [[0] * m.rows for _ in range(m.cols)]
    for (i, j), v in m.entries.items():
        cols[j][i] = v
    return cols


def _preimage_lattice(map_mat: IntegerMatrix, rel: IntegerMatrix
                      ) -> List[List[int]]:
    """Generators of {x : map(x) lies in the column span of rel}.

    Projection of the integer kernel of [map | -rel]; the kernel basis
    spans all integer solutions, so the projections generate.
    """
    aug = map_mat.stack_right(-rel)
    return [v[:map_mat.cols] for v in kernel_basis(aug)]


def _span_equal(gens_a: Sequence[Sequence[int]],
                gens_b: Sequence[Sequence[int]], dim: int) -> bool:
    return column_hermite(gens_a, dim) == column_hermite(gens_b, dim)


def _full_lattice(gens: Sequence[Sequence[int]], dim: int) -> bool:
    return column_hermite(gens, dim) == \
        [[1 if i == r else 0 for i in range(dim)] for r in range(dim)]


@dataclass(frozen=True)
class InducedSequenceDegree:
    """Exactness of one degree of an induced sequence of quotients.

    The three presented groups are cokernels of integer relation
    matrices; each clause is decided by exact lattice comparisons.
    """

    degree: int
    well_defined: bool
    left_exact: bool
    mid_exact: bool
    right_exact: bool

    @property
    def exact(self) -> bool:
        return (self.well_defined and self.left_exact and self.mid_exact
                and self.right_exact)

    def as_dict(self) -> dict:
        return {"degree": self.degree, "well_defined": self.well_defined,
                "left_exact": self.left_exact, "mid_exact": self.mid_exact,
                "right_exact": self.right_exact}


def _induced_ses_degree(d: int, f: IntegerMatrix, g: IntegerMatrix,
                        rel_a: IntegerMatrix, rel_b: IntegerMatrix,
                        rel_c: IntegerMatrix) -> InducedSequenceDegree:
    """Exactness of coker(rel_a) -> coker(rel_b) -> coker(rel_c).

    f and g are the maps on the free level; g f = 0 there (asserted).
    Left exactness compares the preimage of im(rel_b) with im(rel_a),
    mid exactness the preimage of im(rel_c) with im(f) + im(rel_b),
    right exactness demands im(g) + im(rel_c) be everything.
    """
    assert (g @ f).is_zero(), "composite not zero on the free level"
    dim_b, dim_c = rel_b.rows, rel_c.rows
    hb = column_hermite(_cols(rel_b), dim_b)
    hc = column_hermite(_cols(rel_c), dim_c)
    wd = all(lattice_contains(hb, col, dim_b) for col in _cols(f @ rel_a)) \
        and all(lattice_contains(hc, col, dim_c) for col in _cols(g @ rel_b))
    left = _span_equal(_preimage_lattice(f, rel_b), _cols(rel_a), f.cols)
    mid = _span_equal(_preimage_lattice(g, rel_c),
                      _cols(f) + _cols(rel_b), g.cols)
    right = _full_lattice(_cols(g) + _cols(rel_c), dim_c)
    return InducedSequenceDegree(d, wd, left, mid, right)


@dataclass(frozen=True)
class TorFiberProductReport:
    """Hypothesis checks and induced Tor_0 sequences for a connected sum.

    `union_rows` tracks the degreewise exactness of
    0 -> T(union) -> T(K1) + T(K2) -> T(W) -> 0 (the fiber-product
    conclusion) and `ideal_rows` tracks 0 -> T(ideal) -> T(union) ->
    T(sum) -> 0, with T = Tor_0 over the subring.  When Tor_1 of the
    union is trivial in the window, the degrees where the ideal sequence
    loses left exactness are exactly the degrees carrying Tor_1 of the
    sum; `failure_matches_tor1` records that comparison.
    `pieces_match_union` records the equivalence "Tor_1(union) = 0 iff
    Tor_1(K1) = Tor_1(K2) = 0", checked when Tor_1(W) is trivial.
    """

    tor1_trivial: Dict[str, bool]
    tor_tables: Dict[str, TorTable]
    union_rows: Tuple[InducedSequenceDegree, ...]
    ideal_rows: Tuple[InducedSequenceDegree, ...]
    pieces_match_union: Optional[bool]
    failure_matches_tor1: Optional[bool]

    @property
    def hypotheses_hold(self) -> bool:
        """Tor_1 of all of K1, K2, W and the sum vanish in the window."""
        t = self.tor1_trivial
        return t["k1"] and t["k2"] and t["intersection"] and t["sum"]

    @property
    def union_exact(self) -> bool:
        return all(r.exact for r in self.union_rows)

    @property
    def ideal_exact(self) -> bool:
        return all(r.exact for r in self.ideal_rows)

    def ideal_left_failures(self) -> Tuple[int, ...]:
        return tuple(r.degree for r in self.ideal_rows if not r.left_exact)

    def as_dict(self) -> dict:
        return {
            "hypotheses": dict(self.tor1_trivial),
            "conclusions": {
                "union_exact": self.union_exact,
                "ideal_exact": self.ideal_exact,
                "ideal_left_failures": list(self.ideal_left_failures()),
                "pieces_match_union": self.pieces_match_union,
                "failure_matches_tor1": self.failure_matches_tor1,
            },
            "union_rows": [r.as_dict() for r in self.union_rows],
            "ideal_rows": [r.as_dict() for r in self.ideal_rows],
        }


def verify_tor_fiber_product(k1: ComplexLike, k2: ComplexLike,
                             spec: SubringSpec, d_max: int = 10,
                             z=None) -> TorFiberProductReport:
    """Check the Tor_1 hypotheses and the induced Tor_0 sequences.

    z defaults to the seam of K1 against the intersection, the strong
    connected-sum locus.  Tor tables are computed for all five rings;
    then both short sequences of presented groups are verified degree by
    degree.  A hypothesis failure is a finding, not an error.
    """
    k1 = _complex_of(k1)
    k2 = _complex_of(k2)
    big = union(k1, k2)
    w = intersection(k1, k2)
    if z is None:
        z = seam(k1, w)
    ksum = connected_sum(k1, k2, z)
    zmasks = z.members if isinstance(z, FaceSubset) else frozenset(
        f if isinstance(f, int) else sum(1 << (v - 1) for v in f) for f in z)

    p_cap = min(spec.n, 2, d_max)
    tables = {
        "k1": koszul_tor(k1, spec, p_cap, d_max),
        "k2": koszul_tor(k2, spec, p_cap, d_max),
        "intersection": koszul_tor(w, spec, p_cap, d_max),
        "union": koszul_tor(big, spec, p_cap, d_max),
        "sum": koszul_tor(ksum, spec, p_cap, d_max),
    }
    triv = {name: tor1_trivial(t) for name, t in tables.items()}

    union_rows = []
    ideal_rows = []
    for d in range(d_max + 1):
        bbig = graded_basis(big, d)
        i1 = basis_index(k1, d)
        i2 = basis_index(k2, d)
        n1, n2 = len(i1), len(i2)
        fe: Dict[Tuple[int, int], int] = {}
        for j, a in enumerate(bbig):
            if a in i1:
                fe[(i1[a], j)] = 1
            if a in i2:
                fe[(n1 + i2[a], j)] = 1
        f = IntegerMatrix(n1 + n2, len(bbig), fe)
        iw = basis_index(w, d)
        ge: Dict[Tuple[int, int], int] = {}
        for a, j in i1.items():
            if a in iw:
                ge[(iw[a], j)] = 1
        for a, j in i2.items():
            if a in iw:
                ge[(iw[a], n1 + j)] = -1
        g = IntegerMatrix(len(iw), n1 + n2, ge)

        rel_big = _u_relations(big, spec, d)
        rel1 = _u_relations(k1, spec, d)
        rel2 = _u_relations(k2, spec, d)
        rel_mid = IntegerMatrix(
            n1 + n2, rel1.cols + rel2.cols,
            {**rel1.entries,
             **{(i + n1, j + rel1.cols): v
                for (i, j), v in rel2.entries.items()}})
        rel_w = _u_relations(w, spec, d)
        union_rows.append(_induced_ses_degree(d, f, g, rel_big, rel_mid,
                                              rel_w))

        ideal_now = ideal_coordinates(big, zmasks, d)
        ideal_prev = ideal_coordinates(big, zmasks, d - 1) if d else []
        pos_now = {j: i for i, j in enumerate(ideal_now)}
        pos_prev = {j: i for i, j in enumerate(ideal_prev)}
        prev_len = len(graded_basis(big, d - 1)) if d else 0
        # the ideal is spanned by basis monomials, so its relation matrix
        # is the coordinate restriction of the ambient one
        ie: Dict[Tuple[int, int], int] = {}
        for (r, c), v in rel_big.entries.items():
            mono_col = c % prev_len if prev_len else 0
            if mono_col in pos_prev:
                slot = c // prev_len
                assert r in pos_now, "ideal is not closed under the forms"
                ie[(pos_now[r], slot * len(ideal_prev) + pos_prev[mono_col])] = v
        rel_ideal = IntegerMatrix(len(ideal_now),
                                  spec.n * len(ideal_prev), ie)
        incl = IntegerMatrix(len(bbig), len(ideal_now),
                             {(j, i): 1 for i, j in enumerate(ideal_now)})
        h = restriction_matrix(big, ksum, d)
        rel_sum = _u_relations(ksum, spec, d)
        ideal_rows.append(_induced_ses_degree(d, incl, h, rel_ideal,
                                              rel_big, rel_sum))

    pieces: Optional[bool] = None
    if triv["intersection"]:
        pieces = triv["union"] == (triv["k1"] and triv["k2"])
    match: Optional[bool] = None
    if triv["union"]:
        failures = {r.degree for r in ideal_rows if not r.left_exact}
        match = failures == set(tables["sum"].group(1).degrees())
    return TorFiberProductReport(triv, tables, tuple(union_rows),
                                 tuple(ideal_rows), pieces, match)
