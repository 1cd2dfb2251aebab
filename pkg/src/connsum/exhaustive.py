"""Exhaustive enumeration of small complexes and seam cross-validation.

A family of faces on [m] is packed into a single integer: bit s is set
when the face with vertex mask s belongs to the family.  The
downward-closed families containing the empty face are exactly the
complexes on [m], ghost vertices included, so full enumeration is
feasible through m = 5 (7580 complexes, 7.8M subcomplex pairs).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .complexes import SimplicialComplex, seam

# Dedekind numbers D(m) count downward-closed families of subsets of
# [m]; complexes exclude only the empty family, and (K, W) pairs with
# W ⊆ K biject with downward-closed families on [m+1], W nonempty.
COMPLEX_COUNTS = {1: 2, 2: 5, 3: 19, 4: 167, 5: 7580}
PAIR_COUNTS = {1: 3, 2: 14, 3: 148, 4: 7413, 5: 7820773}


def downward_closed_families(m: int) -> List[int]:
    """All complexes on [m] as family masks, empty face included."""
    if not 1 <= m <= 5:
        raise ValueError("enumeration is sized for 1 <= m <= 5")
    n = 1 << m
    # need[s]: family mask of the one-smaller subsets of s
    need = [0] * n
    for s in range(n):
        for i in range(m):
            if s >> i & 1:
                need[s] |= 1 << (s & ~(1 << i))
    out: List[int] = []

    def rec(s: int, fm: int) -> None:
        if s == n:
            out.append(fm)
            return
        rec(s + 1, fm)
        # numeric order refines inclusion, so the predecessors of s
        # have already been decided
        if fm & need[s] == need[s]:
            rec(s + 1, fm | (1 << s))

    rec(1, 1)
    assert m not in COMPLEX_COUNTS or len(out) == COMPLEX_COUNTS[m]
    return out


def subset_closure_masks(m: int) -> List[int]:
    """For each face mask s, the family mask of all subsets of s."""
    n = 1 << m
    subs = [0] * n
    subs[0] = 1
    for s in range(1, n):
        low = s & -s
        subs[s] = subs[s & ~low] | (subs[s & ~low] << low)
    return subs


def complex_from_family(m: int, fm: int) -> SimplicialComplex:
    faces = frozenset(s for s in range(1 << m) if fm >> s & 1)
    return SimplicialComplex(m, faces)


def family_of_complex(k: SimplicialComplex) -> int:
    fm = 0
    for f in k.faces:
        fm |= 1 << f
    return fm


@dataclass(frozen=True)
class SeamCensus:
    """Outcome of one exhaustive seam comparison on [m]."""

    m: int
    complexes: int
    pairs: int
    mismatches: Tuple[Tuple[int, int], ...]

    @property
    def agree(self) -> bool:
        return not self.mismatches


def seam_census(m: int, mismatch_cap: int = 20) -> SeamCensus:
    """Compare the two descriptions of the seam over every pair on [m].

    For each complex K and each subcomplex W the closure form
    W minus closure(K minus W) is checked against the annihilation form
    (nonempty faces of W whose union with every outside face is a
    non-face).  Complexes are the packed integers of
    :func:`downward_closed_families`; the inner loop over W is a numpy
    sweep, so the full m = 5 census finishes in seconds.
    """
    fams = downward_closed_families(m)
    n = 1 << m
    subs = np.array(subset_closure_masks(m), dtype=np.uint64)
    arr = np.array(fams, dtype=np.uint64)
    s_range = np.arange(n, dtype=np.uint64)
    one = np.uint64(1)
    pairs = 0
    mismatches: List[Tuple[int, int]] = []
    for k in fams:
        ku = np.uint64(k)
        w_arr = arr[(arr & ~ku) == 0]
        pairs += len(w_arr)
        out = ku & ~w_arr
        # closure of the outside faces, seeded with the empty face
        cl = np.full(len(w_arr), 1, dtype=np.uint64)
        for s in range(n):
            if k >> s & 1:
                cl |= ((out >> np.uint64(s)) & one) * subs[s]
        zc = w_arr & ~cl
        # kill[t]: mask of faces sigma with t | sigma still in K
        unions = s_range[:, None] | s_range[None, :]
        in_k = (ku >> unions) & one
        kill = np.bitwise_or.reduce(in_k << s_range[None, :], axis=1)
        za = np.zeros(len(w_arr), dtype=np.uint64)
        for t in range(1, n):
            if k >> t & 1:
                alive = (out & kill[t]) == 0
                za |= alive.astype(np.uint64) << np.uint64(t)
        za &= w_arr & ~one
        bad = np.nonzero(zc != za)[0]
        for idx in bad[: max(0, mismatch_cap - len(mismatches))]:
            mismatches.append((k, int(w_arr[idx])))
    if m in PAIR_COUNTS:
        assert pairs == PAIR_COUNTS[m], (pairs, PAIR_COUNTS[m])
    return SeamCensus(m, len(fams), pairs, tuple(mismatches))


def spot_check_library(m: int, count: int,
                       rng: Optional[random.Random] = None) -> int:
    """Replay `count` random census pairs through the public seam().

    Ties the packed-integer sweep to the object-level implementation;
    returns the number of pairs checked.
    """
    rng = rng or random.Random(0)
    fams = downward_closed_families(m)
    subs = subset_closure_masks(m)
    done = 0
    while done < count:
        k_fm = rng.choice(fams)
        w_fm = rng.choice(fams)
        if w_fm & ~k_fm:
            continue
        cl = 1
        outside = k_fm & ~w_fm
        for s in range(1 << m):
            if outside >> s & 1:
                cl |= subs[s]
        expect = w_fm & ~cl
        k = complex_from_family(m, k_fm)
        w = complex_from_family(m, w_fm)
        got = 0
        for f in seam(k, w).members:
            got |= 1 << f
        assert got == expect, (k_fm, w_fm)
        done += 1
    return done
