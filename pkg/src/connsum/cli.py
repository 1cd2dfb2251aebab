"""Command-line verifiers over the file formats.

Exit codes: 0 all checks passed, 1 a mathematical check failed (a
"finding", e.g. a nonvanishing Tor or a violated hypothesis), 2 usage
or parse error.  Reports go to stdout as versioned JSON unless --text
is given; parse diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from .complexes import (ConnectedSumError, FaceSubset, SimplicialComplex,
                        closure, connected_sum, deletion, intersection,
                        open_neighborhood, seam, star, union, vertices_of)
from .files import (ParseError, PolytopeFile, parse_complex_file,
                    parse_matrix_file, parse_polytope_file,
                    serialize_complex, serialize_matrix)
from .generators import random_pair, random_sum_data
from .homology import is_cohen_macaulay, is_gorenstein, reduced_homology
from .polytopes import (LabeledPolytope, cut, extended_matrix,
                        is_generic_cut)
from .srring import (hilbert_series, verify_annihilator,
                     verify_connected_sum_ring, verify_fiber_product)
from .tor import (SubringSpec, euler_check, koszul_tor, lsop_check,
                  tor1_trivial, vanishing_verdict)

SCHEMA = "connsum-report/1"
DEFAULT_SEED = 2024


class Usage(Exception):
    """Bad inputs discovered after argparse: reported on stderr, exit 2."""


def _faces_json(k: SimplicialComplex) -> dict:
    return {"vertices": k.m,
            "facets": [list(vertices_of(f)) for f in sorted(k.facets()) if f]}


def _face_list(subset: FaceSubset) -> List[List[int]]:
    return [list(vertices_of(f)) for f in sorted(subset.members)]


def _parse_face_arg(text: str) -> List[int]:
    from .files import _face_token
    return [_face_token("<arg>", 0, tok) for tok in text.split()]


def _load_complex(path: str) -> SimplicialComplex:
    return parse_complex_file(path)


def _emit(report: dict, text_lines: List[str], args) -> None:
    if args.text:
        print("\n".join(text_lines))
    else:
        print(json.dumps(report, sort_keys=True, indent=2))


# -- complex-op ----------------------------------------------------------

UNARY_OPS = ("facets",)
FACE_OPS = ("star", "open-neighborhood", "deletion", "link")
BINARY_OPS = ("union", "intersection", "seam")


def cmd_complex_op(args) -> int:
    k = _load_complex(args.infile)
    op = args.op
    if op in BINARY_OPS:
        if not args.with_file:
            raise Usage(f"{op} needs --with")
        other = _load_complex(args.with_file)
        if other.m != k.m:
            raise Usage("vertex counts differ")
        if op == "union":
            out = union(k, other)
        elif op == "intersection":
            out = intersection(k, other)
        else:
            if not other.is_subcomplex_of(k):
                raise Usage("seam needs --with to be a subcomplex of --in")
            z = seam(k, other)
            report = {"schema": SCHEMA, "command": "complex-op", "op": op,
                      "ok": True, "seam": _face_list(z)}
            _emit(report, ["seam: " + " ".join(
                "{" + ",".join(map(str, vertices_of(f))) + "}"
                for f in sorted(z.members))], args)
            return 0
    elif op in FACE_OPS:
        if args.face is None:
            raise Usage(f"{op} needs --face")
        faces = _parse_face_arg(args.face)
        if op == "link":
            if len(faces) != 1:
                raise Usage("link takes exactly one face")
            out = k.link(faces[0])
        else:
            z = FaceSubset(k, faces)
            if op == "star":
                out = star(k, z)
            elif op == "deletion":
                out = deletion(k, z)
            else:
                report = {"schema": SCHEMA, "command": "complex-op",
                          "op": op, "ok": True,
                          "faces": _face_list(open_neighborhood(k, z))}
                _emit(report, ["open neighborhood: " + json.dumps(
                    report["faces"])], args)
                return 0
    else:  # facets: echo the complex in normalized form
        out = k
    report = {"schema": SCHEMA, "command": "complex-op", "op": op,
              "ok": True, "result": _faces_json(out)}
    _emit(report, [serialize_complex(out).rstrip()], args)
    return 0


# -- sum-check -----------------------------------------------------------

def cmd_sum_check(args) -> int:
    if args.random:
        return _sum_check_random(args)
    k1 = _load_complex(args.k1)
    k2 = _load_complex(args.k2)
    if k1.m != k2.m:
        raise Usage("vertex counts differ")
    if args.z is not None:
        z = _parse_face_arg(args.z)
    else:
        z = seam(union(k1, k2), intersection(k1, k2))
    try:
        ksum = connected_sum(k1, k2, z)
    except ConnectedSumError as e:
        report = {"schema": SCHEMA, "command": "sum-check", "ok": False,
                  "finding": "hypothesis violated",
                  "witness": list(vertices_of(e.witness)),
                  "detail": str(e)}
        _emit(report, [f"FINDING: {e}"], args)
        return 1
    rep = verify_connected_sum_ring(k1, k2, z, d_max=args.dmax)
    ok = rep.all_exact
    report = {"schema": SCHEMA, "command": "sum-check", "ok": ok,
              "finding": None if ok else "ring sequence not exact",
              "sum": _faces_json(ksum), "ring": rep.as_dict()}
    lines = [f"sum: {serialize_complex(ksum).strip()}",
             f"ring sequences exact through degree {args.dmax}: {ok}"]
    _emit(report, lines, args)
    return 0 if ok else 1


def _sum_check_random(args) -> int:
    rng = random.Random(args.seed)
    failures = []
    for i in range(args.random):
        k1, k2, z = random_sum_data(rng, args.m)
        rep = verify_connected_sum_ring(k1, k2, z, d_max=args.dmax)
        if not rep.all_exact:
            failures.append(i)
    ok = not failures
    report = {"schema": SCHEMA, "command": "sum-check", "ok": ok,
              "finding": None if ok else "ring sequence not exact",
              "random": args.random, "m": args.m, "seed": args.seed,
              "failures": failures}
    _emit(report, [f"{args.random} random sums on {args.m} vertices: "
                   f"{'all exact' if ok else f'failures {failures}'}"], args)
    return 0 if ok else 1


# -- polytope-cut --------------------------------------------------------

def cmd_polytope_cut(args) -> int:
    pf = parse_polytope_file(args.infile)
    if pf.cut is None:
        raise Usage("polytope file has no cut line")
    cert = is_generic_cut(pf.polytope, pf.cut)
    if not cert:
        report = {"schema": SCHEMA, "command": "polytope-cut", "ok": False,
                  "finding": "cut is not generic",
                  "certificate": {
                      "meets_both_sides": cert.meets_both_sides,
                      "no_vertex_on_plane": cert.no_vertex_on_plane,
                      "pieces_simple": cert.pieces_simple}}
        _emit(report, ["FINDING: cut is not generic: "
                       + json.dumps(report["certificate"])], args)
        return 1
    res = cut(pf.polytope, pf.cut)
    whole_is_sum = connected_sum(
        res.plus_complex, res.minus_complex, res.z_cut).faces \
        == res.whole_complex.faces
    minus_is_sum = connected_sum(
        res.plus_complex, res.whole_complex, res.z_plus).faces \
        == res.minus_complex.faces
    ok = whole_is_sum and minus_is_sum
    lp = LabeledPolytope(pf.polytope, pf.labels)
    ext = extended_matrix(lp, pf.cut)
    report = {"schema": SCHEMA, "command": "polytope-cut", "ok": ok,
              "finding": None if ok else "cut decomposition mismatch",
              "whole_is_sum_of_pieces": whole_is_sum,
              "minus_is_sum_of_plus_and_whole": minus_is_sum,
              "whole": _faces_json(res.whole_complex),
              "plus": _faces_json(res.plus_complex),
              "minus": _faces_json(res.minus_complex),
              "z_cut": _face_list(res.z_cut),
              "z_plus": _face_list(res.z_plus),
              "extended_matrix": ext.dense()}
    lines = [f"whole = plus # minus along the cut locus: {whole_is_sum}",
             f"minus = plus # whole along the plus locus: {minus_is_sum}",
             "extended matrix:",
             serialize_matrix(ext).rstrip()]
    _emit(report, lines, args)
    return 0 if ok else 1


# -- sr-verify -----------------------------------------------------------

def _hilbert_additivity(k1, k2, d_max: int) -> bool:
    hu = hilbert_series(union(k1, k2))
    hw = hilbert_series(intersection(k1, k2))
    h1 = hilbert_series(k1)
    h2 = hilbert_series(k2)
    return all(hu.coefficient(d) + hw.coefficient(d)
               == h1.coefficient(d) + h2.coefficient(d)
               for d in range(d_max + 1))


def cmd_sr_verify(args) -> int:
    if args.random:
        return _sr_verify_random(args)
    k1 = _load_complex(args.k1)
    k2 = _load_complex(args.k2)
    if k1.m != k2.m:
        raise Usage("vertex counts differ")
    rep = verify_fiber_product(k1, k2, d_max=args.dmax)
    additive = _hilbert_additivity(k1, k2, args.dmax)
    ok = rep.all_exact and additive
    report = {"schema": SCHEMA, "command": "sr-verify", "ok": ok,
              "finding": None if ok else "fiber product sequence not exact",
              "hilbert_additive": additive, "report": rep.as_dict()}
    _emit(report, [f"fiber product exact through degree {args.dmax}: "
                   f"{rep.all_exact}",
                   f"Hilbert additivity: {additive}"], args)
    return 0 if ok else 1


def _sr_verify_random(args) -> int:
    rng = random.Random(args.seed)
    failures = []
    for i in range(args.random):
        k1 = None
        while k1 is None:
            a, b = random_pair(rng, args.m)
            if a.m == b.m:
                k1, k2 = a, b
        rep = verify_fiber_product(k1, k2, d_max=args.dmax)
        if not (rep.all_exact and _hilbert_additivity(k1, k2, args.dmax)):
            failures.append(i)
    ok = not failures
    report = {"schema": SCHEMA, "command": "sr-verify", "ok": ok,
              "finding": None if ok else "fiber product sequence not exact",
              "random": args.random, "m": args.m, "seed": args.seed,
              "failures": failures}
    _emit(report, [f"{args.random} random pairs on {args.m} vertices: "
                   f"{'all exact' if ok else f'failures {failures}'}"], args)
    return 0 if ok else 1


# -- annihilator ---------------------------------------------------------

def cmd_annihilator(args) -> int:
    k = _load_complex(args.infile)
    w = _load_complex(args.with_file)
    if not w.is_subcomplex_of(k):
        raise Usage("--with must be a subcomplex of --in")
    rep = verify_annihilator(k, w, d_max=args.dmax)
    ok = rep.all_match
    report = {"schema": SCHEMA, "command": "annihilator", "ok": ok,
              "finding": None if ok else "annihilator mismatch",
              "report": rep.as_dict()}
    gens = " ".join("{" + ",".join(map(str, vertices_of(f))) + "}"
                    for f in sorted(rep.generators.members))
    _emit(report, [f"generators: {gens or '(none)'}",
                   f"unit annihilator: {rep.annihilator_is_unit}",
                   f"matches brute-force kernel through degree {args.dmax}: "
                   f"{ok}"], args)
    return 0 if ok else 1


# -- tor -----------------------------------------------------------------

def cmd_tor(args) -> int:
    k = _load_complex(args.complex)
    mat = parse_matrix_file(args.matrix)
    try:
        spec = SubringSpec(mat)
    except ValueError as e:
        raise Usage(str(e))
    if args.pmax is not None and args.pmax > spec.n:
        raise Usage(f"pmax exceeds the number of forms ({spec.n})")
    try:
        table = koszul_tor(k, spec, p_max=args.pmax, d_max=args.dmax)
    except ValueError as e:
        raise Usage(str(e))
    lsop = lsop_check(k, spec)
    euler_checked = table.p_max == spec.n
    if euler_checked:
        euler_check(table)
    verdict = vanishing_verdict(table)
    trivial = tor1_trivial(table)
    report = {"schema": SCHEMA, "command": "tor", "ok": trivial,
              "finding": None if trivial else
              "Tor_1 does not vanish in the window",
              "lsop": lsop, "euler_checked": euler_checked,
              "verdict": verdict.as_dict(),
              "groups": table.as_rows()}
    lines = []
    for p in range(table.p_max + 1):
        g = table.group(p)
        lines.append(f"Tor_{p}: {g}")
    lines.append(f"linear system of parameters: {lsop}")
    lines.append(f"Tor_1 vanishing: {verdict.confidence}")
    if not trivial:
        lines.append("FINDING: Tor_1 is nonzero")
    _emit(report, lines, args)
    return 0 if trivial else 1


# -- gorenstein ----------------------------------------------------------

def _parse_field(text: str) -> Optional[int]:
    if text == "Q":
        return None
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise Usage(f"bad field {text!r}")
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise Usage(f"{p} is not prime")
        return p
    raise Usage(f"field must be Q or Fp:<p>, got {text!r}")


def cmd_gorenstein(args) -> int:
    k = _load_complex(args.infile)
    p = _parse_field(args.field)
    cm = is_cohen_macaulay(k, p)
    gor = is_gorenstein(k, p)
    h = reduced_homology(k)
    field = "Q" if p is None else f"F{p}"
    report = {"schema": SCHEMA, "command": "gorenstein", "ok": gor,
              "finding": None if gor else f"not Gorenstein over {field}",
              "field": field, "cohen_macaulay": cm, "gorenstein": gor,
              "reduced_homology": [
                  {"degree": d, "rank": h.rank(d),
                   "torsion": list(h.torsion(d))} for d in h.degrees()]}
    _emit(report, [f"Cohen-Macaulay over {field}: {cm}",
                   f"Gorenstein over {field}: {gor}"], args)
    return 0 if gor else 1


# -- wiring --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="connsum",
        description="verifiers for connected sums of simplicial complexes, "
                    "polytope cuts, face rings, and graded Tor")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--text", action="store_true",
                       help="human-readable output instead of JSON")

    p = sub.add_parser("complex-op", help="apply one complex operation")
    p.add_argument("op", choices=UNARY_OPS + FACE_OPS + BINARY_OPS)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--with", dest="with_file")
    p.add_argument("--face", help="face tokens like '{1,3}'")
    common(p)
    p.set_defaults(func=cmd_complex_op)

    p = sub.add_parser("sum-check", help="verify a connected sum and its "
                                         "face-ring sequences")
    p.add_argument("--k1")
    p.add_argument("--k2")
    p.add_argument("--z", help="deleted faces, e.g. '{5} {2,5}'")
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--random", type=int, metavar="N",
                   help="check N seeded random sums instead of files")
    p.add_argument("--m", type=int, default=5)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(p)
    p.set_defaults(func=cmd_sum_check)

    p = sub.add_parser("polytope-cut", help="cut a polytope and verify the "
                                            "piece decompositions")
    p.add_argument("--in", dest="infile", required=True)
    common(p)
    p.set_defaults(func=cmd_polytope_cut)

    p = sub.add_parser("sr-verify", help="fiber-product exactness and "
                                         "Hilbert additivity")
    p.add_argument("--k1")
    p.add_argument("--k2")
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--random", type=int, metavar="N")
    p.add_argument("--m", type=int, default=5)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(p)
    p.set_defaults(func=cmd_sr_verify)

    p = sub.add_parser("annihilator", help="annihilator of the outside "
                                           "ideal vs its generators")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--with", dest="with_file", required=True)
    p.add_argument("--dmax", type=int, default=4)
    common(p)
    p.set_defaults(func=cmd_annihilator)

    p = sub.add_parser("tor", help="graded Tor over a form-defined subring")
    p.add_argument("--complex", required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--pmax", type=int)
    common(p)
    p.set_defaults(func=cmd_tor)

    p = sub.add_parser("gorenstein", help="Cohen-Macaulay and Gorenstein "
                                          "tests over a field")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--field", default="Q", help="Q or Fp:<p>")
    common(p)
    p.set_defaults(func=cmd_gorenstein)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command in ("sum-check", "sr-verify"):
        if args.random is None and (not args.k1 or not args.k2):
            ap.error(f"{args.command} needs --k1 and --k2 (or --random N)")
    try:
        return args.func(args)
    except ParseError as e:
        print(str(e), file=sys.stderr)
        return 2
    except Usage as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        # bad input data discovered inside the library (stray faces,
        # dimension mismatches); distinct from mathematical findings
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
