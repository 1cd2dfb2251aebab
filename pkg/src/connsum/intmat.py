"""Exact integer matrices and normal forms.

Everything here works over arbitrary-precision Python ints.  Two Smith
normal form routines are provided on purpose:

* :func:`smith_normal_form` is a dense algorithm that also returns the
  unimodular transforms and self-verifies ``U @ M @ V == D``.  Use it
  when kernels or change-of-basis data are needed; it is comfortable up
  to a few hundred rows and columns.
* :func:`invariant_factors` is a sparse eliminator that only returns the
  diagonal.  It is the workhorse for large exactness and homology
  computations where the transforms would dominate memory and time.

The two are cross-checked against each other in the test suite.
"""

from __future__ import annotations

import itertools as it
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = a*x + b*y and g >= 0.

    >>> xgcd(12, 18)
    (6, -1, 1)
    >>> xgcd(0, -7)
    (7, 0, -1)
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class IntegerMatrix:
    """Immutable sparse matrix with integer entries.

    Entries are stored as a dict mapping (row, col) to a nonzero int, so
    huge mostly-zero matrices (graded multiplication maps, Koszul
    differentials) stay cheap.  Dense access is available through
    :meth:`dense` and plain indexing.
    """

    __slots__ = ("rows", "cols", "_entries", "_row_index")

    def __init__(self, rows: int, cols: int,
                 entries: Mapping[Tuple[int, int], int]):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        cleaned: Dict[Tuple[int, int], int] = {}
        for (i, j), v in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry ({i},{j}) outside {rows}x{cols}")
            if v:
                cleaned[(i, j)] = int(v)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_entries", cleaned)
        object.__setattr__(self, "_row_index", None)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("IntegerMatrix is immutable")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]]) -> "IntegerMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = int(v)
        return cls(rows, cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, {(i, i): d for i, d in enumerate(diag) if d})

    @property
    def entries(self) -> Mapping[Tuple[int, int], int]:
        return self._entries

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntegerMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self._entries == other._entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def is_zero(self) -> bool:
        return not self._entries

    def dense(self) -> List[List[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows,
                             {(j, i): v for (i, j), v in self._entries.items()})

    def _rows_of(self) -> Dict[int, List[Tuple[int, int]]]:
        cached = self._row_index
        if cached is None:
            cached = {}
            for (i, j), v in self._entries.items():
                cached.setdefault(i, []).append((j, v))
            object.__setattr__(self, "_row_index", cached)
        return cached

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ "
                             f"{other.rows}x{other.cols}")
        brows = other._rows_of()
        acc: Dict[Tuple[int, int], int] = {}
        for (i, k), va in self._entries.items():
            row = brows.get(k)
            if not row:
                continue
            for j, vb in row:
                key = (i, j)
                acc[key] = acc.get(key, 0) + va * vb
        return IntegerMatrix(self.rows, other.cols, acc)

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        acc = dict(self._entries)
        for key, v in other._entries.items():
            acc[key] = acc.get(key, 0) - v
        return IntegerMatrix(self.rows, self.cols, acc)

    def column(self, j: int) -> List[int]:
        col = [0] * self.rows
        for (i, jj), v in self._entries.items():
            if jj == j:
                col[i] = v
        return col

    def stack_below(self, other: "IntegerMatrix") -> "IntegerMatrix":
        """Vertical stack: self on top of other (same column count)."""
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        entries = dict(self._entries)
        for (i, j), v in other._entries.items():
            entries[(i + self.rows, j)] = v
        return IntegerMatrix(self.rows + other.rows, self.cols, entries)

    def stack_right(self, other: "IntegerMatrix") -> "IntegerMatrix":
        """Horizontal stack: self left of other (same row count)."""
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        entries = dict(self._entries)
        for (i, j), v in other._entries.items():
            entries[(i, j + self.cols)] = v
        return IntegerMatrix(self.rows, self.cols + other.cols, entries)

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols,
                             {k: -v for k, v in self._entries.items()})

    def max_abs(self) -> int:
        return max((abs(v) for v in self._entries.values()), default=0)

    def __repr__(self):
        if self.rows * self.cols <= 64:
            return f"IntegerMatrix({self.dense()!r})"
        return (f"IntegerMatrix({self.rows}x{self.cols}, "
                f"{self.nnz} nonzero)")


@dataclass(frozen=True)
class SmithNormalForm:
    """Verified decomposition U @ M @ V == D with U, V unimodular.

    The diagonal of D is nonnegative and each entry divides the next.
    """

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    diagonal: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        diag = []
        n = min(self.D.rows, self.D.cols)
        for i in range(n):
            d = self.D[i, i]
            if d:
                diag.append(d)
        for a, b in it.pairwise(diag):
            assert a > 0 and b % a == 0, "diagonal is not a divisibility chain"
        object.__setattr__(self, "diagonal", tuple(diag))

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.diagonal


def _verify_umv(U: IntegerMatrix, M: IntegerMatrix, V: IntegerMatrix,
                D: IntegerMatrix) -> bool:
    # Fast path: int64 matmul, guarded against overflow by a crude bound.
    bound = (M.cols or 1) * (M.rows or 1)
    worst = bound * U.max_abs() * M.max_abs() * V.max_abs()
    if 0 < worst < 2 ** 62 and M.rows * M.cols:
        u = np.array(U.dense(), dtype=np.int64).reshape(U.rows, U.cols)
        m = np.array(M.dense(), dtype=np.int64).reshape(M.rows, M.cols)
        v = np.array(V.dense(), dtype=np.int64).reshape(V.rows, V.cols)
        d = np.array(D.dense(), dtype=np.int64).reshape(D.rows, D.cols)
        return bool(np.array_equal(u @ m @ v, d))
    return ((U @ M) @ V - D).is_zero()


def smith_normal_form(M: IntegerMatrix) -> SmithNormalForm:
    """Smith normal form with transforms, verified by multiplication.

    >>> snf = smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]]))
    >>> snf.diagonal
    (1, 6)
    >>> snf = smith_normal_form(IntegerMatrix.from_rows([[4, 6], [6, 9]]))
    >>> snf.diagonal
    (1,)
    """
    r, c = M.rows, M.cols
    A = M.dense()
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_op(dst, src, q):  # row dst -= q * row src
        Ad, As = A[dst], A[src]
        for j in range(c):
            Ad[j] -= q * As[j]
        Ud, Us = U[dst], U[src]
        for j in range(r):
            Ud[j] -= q * Us[j]

    def col_op(dst, src, q):  # col dst -= q * col src
        for i in range(r):
            A[i][dst] -= q * A[i][src]
        for i in range(c):
            V[i][dst] -= q * V[i][src]

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    t = 0
    n = min(r, c)
    while t < n:
        # locate a pivot of minimal absolute value in the active block
        best = None
        for i in range(t, r):
            Ai = A[i]
            for j in range(t, c):
                v = Ai[j]
                if v:
                    if best is None or abs(v) < best[0]:
                        best = (abs(v), i, j)
                        if best[0] == 1:
                            break
            if best and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])

        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, r):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t]:  # remainder smaller than pivot: promote it
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear the pivot row
            for j in range(t + 1, c):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            piv = A[t][t]
            if piv in (1, -1):
                break
            offender = None
            for i in range(t + 1, r):
                Ai = A[i]
                for j in range(t + 1, c):
                    if Ai[j] % piv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # pull the offending row into play
        if A[t][t] < 0:
            for j in range(c):
                A[t][j] = -A[t][j]
            for j in range(r):
                U[t][j] = -U[t][j]
        t += 1

    Um = IntegerMatrix.from_rows(U) if r else IntegerMatrix.zeros(0, 0)
    Vm = IntegerMatrix.from_rows(V) if c else IntegerMatrix.zeros(0, 0)
    Dm = IntegerMatrix(r, c, {(i, i): A[i][i] for i in range(n) if A[i][i]})
    result = SmithNormalForm(Um, Dm, Vm)
    assert _verify_umv(Um, M, Vm, Dm), "SNF self-check failed"
    return result


def _bareiss_rank_and_minor(dense: List[List[int]]) -> Tuple[int, int]:
    """Rank and the absolute value of one nonzero maximal minor.

    Fraction-free elimination with full pivoting; every intermediate
    entry is an exact minor of the input, so sizes stay within the
    Hadamard bound instead of doubling per step.
    """
    a = [row[:] for row in dense]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    prev = 1
    k = 0
    while True:
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            return k, abs(prev)
        _, bi, bj = best
        if bi != k:
            a[k], a[bi] = a[bi], a[k]
        if bj != k:
            for row in a:
                row[k], row[bj] = row[bj], row[k]
        piv = a[k][k]
        prow = a[k]
        for i in range(k + 1, nr):
            arow = a[i]
            aik = arow[k]
            for j in range(k + 1, nc):
                arow[j] = (piv * arow[j] - aik * prow[j]) // prev
            arow[k] = 0
        prev = piv
        k += 1


def _chain_factors(vals: List[int]) -> List[int]:
    """Rewrite a multiset of cyclic orders as a divisibility chain.

    Z/a + Z/b and Z/gcd + Z/lcm present the same group, so pairwise
    fix-ups converge to the canonical invariant factors.
    """
    g = sorted(vals)
    changed = True
    while changed:
        changed = False
        for x in range(len(g)):
            for y in range(x + 1, len(g)):
                if g[y] % g[x]:
                    d = gcd(g[x], g[y])
                    g[x], g[y] = d, g[x] * g[y] // d
                    changed = True
        g.sort()
    return g


def invariant_factors(M: IntegerMatrix) -> List[int]:
    """Nonzero Smith invariant factors of M, without transforms.

    Sparse row-list elimination with unit-pivot preference; suitable for
    the large graded matrices that show up in exactness checks.  Once no
    unit pivot remains the leftover block is finished modulo twice one
    of its maximal minors: reducing entries into that window is a
    legitimate column operation on the block augmented with N*identity,
    and it stops the coefficient explosion that plain elimination
    suffers on dense tails.  The factors of the block are recovered from
    the modular diagonal by gcd with N; the count of diagonal N's must
    then agree with the fraction-free rank, which is asserted.
    """
    rows: Dict[int, Dict[int, int]] = {}
    col_index: Dict[int, set] = {}
    for (i, j), v in M.entries.items():
        rows.setdefault(i, {})[j] = v
        col_index.setdefault(j, set()).add(i)

    modulus: Optional[int] = None

    def fold(v: int) -> int:
        if modulus is None:
            return v
        v %= modulus
        if 2 * v > modulus:
            v -= modulus
        return v

    def row_add(dst: int, src: int, mult: int):
        rdst = rows.setdefault(dst, {})
        for j, v in list(rows[src].items()):
            nv = fold(rdst.get(j, 0) + mult * v)
            if nv:
                rdst[j] = nv
                col_index.setdefault(j, set()).add(dst)
            elif j in rdst:
                del rdst[j]
                col_index[j].discard(dst)
        if not rdst:
            del rows[dst]

    def col_add(dst: int, src: int, mult: int):
        for i in list(col_index.get(src, ())):
            v = rows[i].get(src, 0)
            if not v:
                continue
            nv = fold(rows[i].get(dst, 0) + mult * v)
            if nv:
                rows[i][dst] = nv
                col_index.setdefault(dst, set()).add(i)
            else:
                rows[i].pop(dst, None)
                col_index[dst].discard(i)

    def balanced(v: int, pv: int) -> int:
        q, r = divmod(v, pv)
        if pv > 0 and 2 * r > pv:
            q += 1
        elif pv < 0 and 2 * r < pv:
            q += 1
        return q

    diag: List[int] = []
    block_rank = 0
    switch_at = 0
    while rows:
        # pivot: smallest |value|, then least fill-in
        best = None
        for i, row in rows.items():
            for j, v in row.items():
                key = (abs(v), (len(row) - 1) * (len(col_index[j]) - 1))
                if best is None or key < best[0]:
                    best = (key, i, j)
            if best is not None and best[0] == (1, 0):
                break
        if best[0][0] > 1 and modulus is None:
            # no unit pivot left: bound the endgame before it explodes
            live_rows = sorted(rows)
            live_cols = sorted({j for r in rows.values() for j in r})
            cpos = {j: x for x, j in enumerate(live_cols)}
            dense = [[0] * len(live_cols) for _ in live_rows]
            for x, i in enumerate(live_rows):
                for j, v in rows[i].items():
                    dense[x][cpos[j]] = v
            block_rank, minor = _bareiss_rank_and_minor(dense)
            modulus = 2 * minor
            switch_at = len(diag)
            for i in list(rows):
                for j, v in list(rows[i].items()):
                    nv = fold(v)
                    if nv != v:
                        if nv:
                            rows[i][j] = nv
                        else:
                            del rows[i][j]
                            col_index[j].discard(i)
                if not rows[i]:
                    del rows[i]
            continue
        _, pi, pj = best

        while True:
            # clear the pivot column with row operations
            progressed = True
            while progressed:
                progressed = False
                pv = rows[pi][pj]
                for i in list(col_index.get(pj, ())):
                    if i == pi:
                        continue
                    v = rows[i].get(pj)
                    if not v:
                        continue
                    row_add(i, pi, -balanced(v, pv))
                    if rows.get(i, {}).get(pj):  # nonzero remainder
                        pi = i
                        progressed = True
                        break
            # clear the pivot row with column operations (only row pi left)
            pv = rows[pi][pj]
            while True:
                done = True
                for j in list(rows[pi]):
                    if j == pj:
                        continue
                    v = rows[pi][j]
                    col_add(j, pj, -balanced(v, pv))
                    if rows[pi].get(j):
                        pj = j
                        pv = rows[pi][pj]
                        done = False
                        break
                if done:
                    break
            if len(col_index.get(pj, set())) > 1:
                continue  # column ops refilled nothing, but recheck anyway
            break
        diag.append(abs(rows[pi][pj]))
        del rows[pi][pj]
        col_index[pj].discard(pi)
        if not rows[pi]:
            del rows[pi]

    if modulus is not None:
        folded = _chain_factors(
            [gcd(v, modulus) for v in diag[switch_at:]])
        padding = sum(1 for v in folded if v == modulus)
        assert len(folded) - padding == block_rank, \
            "modular diagonal disagrees with fraction-free rank"
        kept = [v for v in folded if v != modulus]
        kept = [1] * (block_rank - len(kept)) + kept
        diag = diag[:switch_at] + kept

    diag.sort()
    for a, b in it.pairwise(diag):
        assert b % a == 0, "invariant factor chain broken"
    return diag


def rank(M: IntegerMatrix) -> int:
    """Rank over Q (equivalently over Z) via invariant factors."""
    return len(invariant_factors(M))


def kernel_basis(M: IntegerMatrix) -> List[List[int]]:
    """Basis of the integer kernel lattice {x : Mx = 0}.

    The result is saturated: any integer solution is an integer
    combination of the returned vectors.
    """
    if M.cols == 0:
        return []
    if M.rows == 0 or M.is_zero():
        return [IntegerMatrix.identity(M.cols).column(j) for j in range(M.cols)]
    snf = smith_normal_form(M)
    return [snf.V.column(j) for j in range(snf.rank, M.cols)]


def column_hermite(columns: Iterable[Sequence[int]], dim: int) -> List[List[int]]:
    """Canonical column Hermite form of the lattice spanned by `columns`.

    Pivots are positive and entries left of a pivot are reduced into
    [0, pivot).  Two generating sets span the same lattice iff their
    Hermite forms are equal.
    """
    cols = [list(map(int, c)) for c in columns if any(c)]
    for c in cols:
        if len(c) != dim:
            raise ValueError("column length mismatch")
    pivot_cols: List[List[int]] = []
    pivot_rows: List[int] = []
    ptr = 0
    for row in range(dim):
        j0 = None
        for j in range(ptr, len(cols)):
            if cols[j][row]:
                j0 = j
                break
        if j0 is None:
            continue
        cols[ptr], cols[j0] = cols[j0], cols[ptr]
        for j in range(ptr + 1, len(cols)):
            a, b = cols[ptr][row], cols[j][row]
            if not b:
                continue
            g, x, y = xgcd(a, b)
            p, q = a // g, b // g
            c0, c1 = cols[ptr], cols[j]
            for rr in range(dim):
                u, v = c0[rr], c1[rr]
                c0[rr] = x * u + y * v
                c1[rr] = p * v - q * u
        if cols[ptr][row] < 0:
            cols[ptr] = [-v for v in cols[ptr]]
        piv = cols[ptr][row]
        for pc in pivot_cols:
            q = pc[row] // piv
            if q:
                for rr in range(dim):
                    pc[rr] -= q * cols[ptr][rr]
        pivot_cols.append(cols[ptr])
        pivot_rows.append(row)
        ptr += 1
    return pivot_cols


def lattices_equal(gens_a: Iterable[Sequence[int]],
                   gens_b: Iterable[Sequence[int]], dim: int) -> bool:
    return column_hermite(gens_a, dim) == column_hermite(gens_b, dim)


def lattice_contains(gens: Iterable[Sequence[int]], vector: Sequence[int],
                     dim: int) -> bool:
    base = column_hermite(gens, dim)
    return column_hermite(list(base) + [list(vector)], dim) == base
