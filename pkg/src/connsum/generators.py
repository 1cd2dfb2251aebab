"""Seeded random sources of complexes, polytopes, cuts and sums.

Every generator takes an explicit random.Random so test runs are
reproducible from a single seed.  Polytope generators only emit simple
polytopes whose inequalities are all honest facets; cut generators only
emit certified generic cuts.  Exhaustion of a retry budget raises
RuntimeError rather than silently degrading.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Tuple

from .complexes import (FaceSubset, SimplicialComplex, intersection, seam,
                        union)
from .polytopes import (CutResult, CutSpec, LabeledPolytope,
                        RationalPolytope, cut, is_generic_cut, is_simple,
                        primitive_vector)


def random_complex(rng: random.Random, m: int) -> SimplicialComplex:
    """Downward closure of a few random generator faces on [m]."""
    if not 1 <= m <= 10:
        raise ValueError("vertex count out of range")
    count = rng.randint(0, m + 2)
    gens = [rng.randint(1, (1 << m) - 1) for _ in range(count)]
    return SimplicialComplex.from_facets(m, gens)


def random_subcomplex(rng: random.Random,
                      k: SimplicialComplex) -> SimplicialComplex:
    """Closure of a random subset of k's faces; always a subcomplex."""
    keep_rate = rng.uniform(0.2, 0.9)
    gens = [f for f in k.faces if f and rng.random() < keep_rate]
    return SimplicialComplex.from_facets(k.m, gens)


def random_pair(rng: random.Random, m: int
                ) -> Tuple[SimplicialComplex, SimplicialComplex]:
    """A complex together with a random subcomplex of it."""
    k = random_complex(rng, m)
    return k, random_subcomplex(rng, k)


def random_sum_data(rng: random.Random, m: int, attempts: int = 200
                    ) -> Tuple[SimplicialComplex, SimplicialComplex,
                               FaceSubset]:
    """(K1, K2, Z) satisfying the connected-sum hypothesis.

    Z is a random nonempty subset of seam(K1 | K2, K1 & K2), which is
    exactly the set of faces whose open neighborhood in the union stays
    inside the intersection.
    """
    for _ in range(attempts):
        k1 = random_complex(rng, m)
        k2 = random_complex(rng, m)
        w = intersection(k1, k2)
        candidates = sorted(seam(union(k1, k2), w).members)
        if not candidates:
            continue
        z = {f for f in candidates if rng.random() < 0.6}
        if not z:
            z = {rng.choice(candidates)}
        return k1, k2, FaceSubset(w, z)
    raise RuntimeError("no valid connected-sum data found")


def _integer_inequality(lam: List[Fraction], eta: Fraction
                        ) -> Tuple[Tuple[int, ...], int]:
    q = lcm(*(x.denominator for x in lam), eta.denominator)
    return tuple(int(x * q) for x in lam), int(eta * q)


def random_polytope(rng: random.Random, n: int,
                    max_inequalities: int = 8) -> RationalPolytope:
    """Random simple polytope: a box with a few vertices truncated.

    Truncating a single vertex of a simple polytope keeps it simple;
    candidate slices that break simplicity, cut nothing, or demote an
    old facet are rejected.
    """
    if n < 1 or 2 * n > max_inequalities:
        raise ValueError("dimension too large for the inequality budget")
    ineqs: List[Tuple[Tuple[int, ...], int]] = []
    for i in range(n):
        axis = tuple(1 if j == i else 0 for j in range(n))
        ineqs.append((axis, 0))
        ineqs.append((tuple(-x for x in axis), rng.randint(2, 5)))
    p = RationalPolytope(n, ineqs)
    for _ in range(rng.randint(0, max_inequalities - 2 * n)):
        sliced = _try_slice(rng, p, ineqs)
        if sliced is not None:
            p, ineqs = sliced
    return p


def _try_slice(rng, p, ineqs, candidates: int = 12
               ) -> Optional[Tuple[RationalPolytope, list]]:
    for _ in range(candidates):
        lam = [Fraction(rng.randint(-2, 2)) for _ in range(p.dim)]
        if all(x == 0 for x in lam):
            continue
        values = sorted({sum(a * b for a, b in zip(lam, v))
                         for v in p.vertices})
        if len(values) < 2:
            continue
        # shave off the top slab only: one vertex if values are distinct
        threshold = (values[-1] + values[-2]) / 2
        cand = ineqs + [_integer_inequality([-x for x in lam], threshold)]
        try:
            q = RationalPolytope(p.dim, cand)
        except ValueError:
            continue
        if not is_simple(q):
            continue
        if any(kind != "facet" for kind in q.facet_kinds()):
            continue
        return q, cand
    return None


def random_generic_cut(rng: random.Random, p: RationalPolytope,
                       attempts: int = 60) -> CutSpec:
    """A certified generic cut of p with a random small normal."""
    for _ in range(attempts):
        gamma = tuple(rng.randint(-3, 3) for _ in range(p.dim))
        if all(x == 0 for x in gamma):
            continue
        gamma = primitive_vector(gamma)
        values = sorted({sum(a * b for a, b in zip(gamma, v))
                         for v in p.vertices})
        if len(values) < 2:
            continue
        j = rng.randrange(len(values) - 1)
        offset = -(values[j] + values[j + 1]) / 2
        spec = CutSpec(gamma, offset, label=rng.randint(1, 3))
        if is_generic_cut(p, spec):
            return spec
    raise RuntimeError("no generic cut found")


def random_cut(rng: random.Random, n: int, attempts: int = 20) -> CutResult:
    """A full verified cut of a random simple polytope."""
    for _ in range(attempts):
        p = random_polytope(rng, n)
        try:
            spec = random_generic_cut(rng, p)
        except RuntimeError:
            continue
        return cut(p, spec)
    raise RuntimeError("no cuttable polytope found")


@dataclass(frozen=True)
class StrongSumInstance:
    """A strong connected sum with its expected value, for harnesses."""

    k1: SimplicialComplex
    k2: SimplicialComplex
    z: FaceSubset
    expected: SimplicialComplex

    @property
    def w(self) -> SimplicialComplex:
        return intersection(self.k1, self.k2)


def strong_sums_from_cut(res: CutResult) -> List[StrongSumInstance]:
    """The two strong sums every generic cut certifies.

    The whole boundary complex is the sum of the two pieces along the
    cut locus, and the minus piece is the sum of the plus piece with the
    whole complex along the strictly-positive locus.
    """
    return [
        StrongSumInstance(res.plus_complex, res.minus_complex, res.z_cut,
                          res.whole_complex),
        StrongSumInstance(res.plus_complex, res.whole_complex, res.z_plus,
                          res.minus_complex),
    ]


def random_strong_sum(rng: random.Random, n: int) -> StrongSumInstance:
    res = random_cut(rng, n)
    return rng.choice(strong_sums_from_cut(res))


def random_labeled_polytope(rng: random.Random, n: int) -> LabeledPolytope:
    p = random_polytope(rng, n)
    labels = tuple(rng.randint(1, 3) for _ in range(p.n_inequalities))
    return LabeledPolytope(p, labels)
