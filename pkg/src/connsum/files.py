"""Text formats for complexes, polytopes with cuts, and integer matrices.

Three small line-oriented formats, all of which round-trip:

* complex files: `vertices: m`, then `facets: {1,4} {4,3} ...`
* polytope files: `dim: n`, lines `ineq: l1 ... ln | eta [label b]`,
  and at most one `cut: g1 ... gn | xi`
* matrix files: one row of integers per line

`#` starts a comment; blank lines are ignored.  Parse failures raise
:class:`ParseError` carrying the path and 1-based line number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .complexes import SimplicialComplex, face_of, vertices_of
from .intmat import IntegerMatrix
from .polytopes import CutSpec, RationalPolytope


class ParseError(Exception):
    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line
        self.message = message


def _content_lines(path: str, text: str) -> List[Tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _read(path: str) -> List[Tuple[int, str]]:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(path, 0, f"cannot read file: {e.strerror}")
    return _content_lines(path, text)


def _face_token(path: str, line: int, tok: str) -> int:
    if not (tok.startswith("{") and tok.endswith("}")):
        raise ParseError(path, line, f"facet token {tok!r} is not {{v,...}}")
    body = tok[1:-1]
    if not body:
        raise ParseError(path, line, "empty facet token")
    try:
        verts = [int(p) for p in body.split(",")]
    except ValueError:
        raise ParseError(path, line, f"bad vertex in facet token {tok!r}")
    if any(v < 1 for v in verts):
        raise ParseError(path, line, "vertex labels are 1-based")
    return face_of(verts)


def parse_complex_text(text: str, path: str = "<string>") -> SimplicialComplex:
    m: Optional[int] = None
    facets: Optional[List[int]] = None
    for i, line in _content_lines(path, text):
        key, _, rest = line.partition(":")
        key = key.strip()
        if key == "vertices":
            if m is not None:
                raise ParseError(path, i, "duplicate vertices line")
            try:
                m = int(rest)
            except ValueError:
                raise ParseError(path, i, f"bad vertex count {rest.strip()!r}")
            if not 1 <= m <= 62:
                raise ParseError(path, i, "vertex count out of range 1..62")
        elif key == "facets":
            if facets is not None:
                raise ParseError(path, i, "duplicate facets line")
            facets = [_face_token(path, i, t) for t in rest.split()]
        else:
            raise ParseError(path, i, f"unknown directive {key!r}")
    if m is None:
        raise ParseError(path, 0, "missing vertices line")
    if facets is None:
        raise ParseError(path, 0, "missing facets line")
    for f in facets:
        if f >> m:
            raise ParseError(path, 0,
                             f"facet {set(vertices_of(f))} exceeds {m} vertices")
    return SimplicialComplex.from_facets(m, facets)


def parse_complex_file(path: str) -> SimplicialComplex:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(path, 0, f"cannot read file: {e.strerror}")
    return parse_complex_text(text, path)


def serialize_complex(k: SimplicialComplex) -> str:
    toks = []
    for f in sorted(k.facets()):
        if f:
            toks.append("{" + ",".join(map(str, vertices_of(f))) + "}")
    body = (" " + " ".join(toks)) if toks else ""
    return f"vertices: {k.m}\nfacets:{body}\n"


def _fraction_token(path: str, line: int, tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(path, line, f"bad number {tok!r}")


@dataclass(frozen=True)
class PolytopeFile:
    """One polytope description: inequalities, labels, optional cut."""

    polytope: RationalPolytope
    labels: Tuple[int, ...]
    cut: Optional[CutSpec]


def _parse_ineq(path: str, i: int, rest: str, n: int
                ) -> Tuple[Tuple[Fraction, ...], Fraction, int]:
    head, _, lab = rest.partition("label")
    lab = lab.strip()
    label = 1
    if lab:
        try:
            label = int(lab)
        except ValueError:
            raise ParseError(path, i, f"bad label {lab!r}")
    lhs, bar, rhs = head.partition("|")
    if not bar:
        raise ParseError(path, i, "expected 'coeffs | offset'")
    coeffs = tuple(_fraction_token(path, i, t) for t in lhs.split())
    if len(coeffs) != n:
        raise ParseError(path, i, f"expected {n} coefficients, got {len(coeffs)}")
    toks = rhs.split()
    if len(toks) != 1:
        raise ParseError(path, i, "expected one offset after '|'")
    return coeffs, _fraction_token(path, i, toks[0]), label


def parse_polytope_text(text: str, path: str = "<string>") -> PolytopeFile:
    n: Optional[int] = None
    ineqs: List[Tuple[Tuple[Fraction, ...], Fraction]] = []
    labels: List[int] = []
    cut: Optional[CutSpec] = None
    cut_line = 0
    for i, line in _content_lines(path, text):
        key, colon, rest = line.partition(":")
        key = key.strip()
        if not colon:
            raise ParseError(path, i, "expected 'directive: ...'")
        if key == "dim":
            if n is not None:
                raise ParseError(path, i, "duplicate dim line")
            try:
                n = int(rest)
            except ValueError:
                raise ParseError(path, i, f"bad dimension {rest.strip()!r}")
            if n < 1:
                raise ParseError(path, i, "dimension must be positive")
        elif key == "ineq":
            if n is None:
                raise ParseError(path, i, "ineq before dim")
            coeffs, eta, label = _parse_ineq(path, i, rest, n)
            ineqs.append((coeffs, eta))
            labels.append(label)
        elif key == "cut":
            if n is None:
                raise ParseError(path, i, "cut before dim")
            if cut is not None:
                raise ParseError(path, i, "duplicate cut line")
            coeffs, xi, label = _parse_ineq(path, i, rest, n)
            if any(c.denominator != 1 for c in coeffs):
                raise ParseError(path, i, "cut normal entries must be integers")
            cut_line = i
            try:
                cut = CutSpec(tuple(int(c) for c in coeffs), xi, label)
            except ValueError as e:
                raise ParseError(path, i, str(e))
        else:
            raise ParseError(path, i, f"unknown directive {key!r}")
    if n is None:
        raise ParseError(path, 0, "missing dim line")
    if not ineqs:
        raise ParseError(path, 0, "no inequalities")
    try:
        p = RationalPolytope(n, ineqs)
    except ValueError as e:
        raise ParseError(path, 0, str(e))
    if cut is not None and len(cut.normal) != n:
        raise ParseError(path, cut_line, "cut dimension mismatch")
    return PolytopeFile(p, tuple(labels), cut)


def parse_polytope_file(path: str) -> PolytopeFile:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(path, 0, f"cannot read file: {e.strerror}")
    return parse_polytope_text(text, path)


def _num(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_polytope(pf: PolytopeFile) -> str:
    lines = [f"dim: {pf.polytope.dim}"]
    for (lam, eta), b in zip(pf.polytope.inequalities, pf.labels):
        row = " ".join(_num(Fraction(c)) for c in lam)
        suffix = f" label {b}" if b != 1 else ""
        lines.append(f"ineq: {row} | {_num(Fraction(eta))}{suffix}")
    if pf.cut is not None:
        row = " ".join(str(c) for c in pf.cut.normal)
        suffix = f" label {pf.cut.label}" if pf.cut.label != 1 else ""
        lines.append(f"cut: {row} | {_num(pf.cut.offset)}{suffix}")
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str, path: str = "<string>") -> IntegerMatrix:
    rows: List[List[int]] = []
    width: Optional[int] = None
    for i, line in _content_lines(path, text):
        try:
            row = [int(t) for t in line.split()]
        except ValueError:
            raise ParseError(path, i, f"bad integer row {line!r}")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(path, i,
                             f"row has {len(row)} entries, expected {width}")
        rows.append(row)
    if not rows or width == 0:
        raise ParseError(path, 0, "empty matrix")
    return IntegerMatrix.from_rows(rows)


def parse_matrix_file(path: str) -> IntegerMatrix:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(path, 0, f"cannot read file: {e.strerror}")
    return parse_matrix_text(text, path)


def serialize_matrix(mat: IntegerMatrix) -> str:
    return "\n".join(" ".join(str(v) for v in row)
                     for row in mat.dense()) + "\n"
