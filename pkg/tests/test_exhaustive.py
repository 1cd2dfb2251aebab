"""Exhaustive seam census for small vertex counts.

The enumeration sizes are pinned to the antichain-counting sequence:
complexes containing the empty face are downward-closed families, and
(complex, subcomplex) pairs on [m] biject with families on [m+1].  The
full m = 5 sweep lives in the acceptance tests; here m <= 4 keeps the
suite quick.
"""

import random

from hypothesis import given, settings, strategies as st

from connsum.complexes import SimplicialComplex
from connsum.exhaustive import (COMPLEX_COUNTS, PAIR_COUNTS,
                                complex_from_family, downward_closed_families,
                                family_of_complex, seam_census,
                                spot_check_library, subset_closure_masks)


def test_family_counts():
    for m in range(1, 5):
        fams = downward_closed_families(m)
        assert len(fams) == COMPLEX_COUNTS[m]
        assert len(set(fams)) == len(fams)


def test_pair_count_bookkeeping():
    # pairs on [m] biject with families on [m+1] that are not on [m]
    for m in range(1, 5):
        assert PAIR_COUNTS[m] == COMPLEX_COUNTS[m + 1] - COMPLEX_COUNTS[m]


def test_subset_closure_masks():
    subs = subset_closure_masks(2)
    # subsets of {1,2} as a bitmask over face indices 0..3
    assert subs[0] == 0b0001
    assert subs[1] == 0b0011
    assert subs[2] == 0b0101
    assert subs[3] == 0b1111


def test_family_round_trip():
    for m in range(1, 4):
        for fm in downward_closed_families(m):
            k = complex_from_family(m, fm)
            assert family_of_complex(k) == fm


def test_complex_from_family_example():
    # family {∅, {1}, {2}} on two vertices: both points, no edge
    k = complex_from_family(2, 0b0111)
    assert k == SimplicialComplex.from_facets(2, [{1}, {2}])


def test_census_small():
    for m in range(1, 4):
        census = seam_census(m)
        assert census.agree
        assert census.mismatches == ()
        assert census.complexes == COMPLEX_COUNTS[m]
        assert census.pairs == PAIR_COUNTS[m]


def test_census_m4():
    census = seam_census(4)
    assert census.agree
    assert census.pairs == 7413


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_spot_check_matches_library(seed, m):
    assert spot_check_library(m, 25, random.Random(seed))
