"""Seeded input generators: determinism and validity of every draw."""

import random

from hypothesis import given, settings, strategies as st

from connsum.complexes import (connected_sum, intersection,
                               is_strong_connected_sum, seam, union)
from connsum.generators import (random_complex, random_cut,
                                random_generic_cut, random_labeled_polytope,
                                random_pair, random_polytope,
                                random_strong_sum, random_subcomplex,
                                random_sum_data, strong_sums_from_cut)
from connsum.polytopes import is_generic_cut, is_simple

SEEDS = st.integers(0, 10**6)


def test_seeded_determinism():
    a = random_complex(random.Random(7), 5)
    b = random_complex(random.Random(7), 5)
    assert a == b
    p1 = random_polytope(random.Random(7), 2)
    p2 = random_polytope(random.Random(7), 2)
    assert p1.inequalities == p2.inequalities
    t1 = random_sum_data(random.Random(7), 4)
    t2 = random_sum_data(random.Random(7), 4)
    assert t1[0] == t2[0] and t1[1] == t2[1]
    assert t1[2].members == t2[2].members


@settings(max_examples=30, deadline=None)
@given(SEEDS, st.integers(1, 6))
def test_random_complex_and_subcomplex(seed, m):
    rng = random.Random(seed)
    k = random_complex(rng, m)
    assert k.m == m
    w = random_subcomplex(rng, k)
    assert w.is_subcomplex_of(k)


@settings(max_examples=30, deadline=None)
@given(SEEDS, st.integers(2, 6))
def test_random_sum_data_is_always_summable(seed, m):
    rng = random.Random(seed)
    k1, k2, z = random_sum_data(rng, m)
    assert k1.m == k2.m == m
    allowed = seam(union(k1, k2), intersection(k1, k2)).members
    assert z.members and z.members <= allowed
    connected_sum(k1, k2, z)   # must not raise


@settings(max_examples=20, deadline=None)
@given(SEEDS, st.integers(1, 3))
def test_random_polytope_is_simple(seed, n):
    p = random_polytope(random.Random(seed), n)
    assert p.dim == n
    assert is_simple(p)
    assert all(kind == "facet" for kind in p.facet_kinds())


@settings(max_examples=15, deadline=None)
@given(SEEDS, st.integers(1, 3))
def test_random_generic_cut_is_generic(seed, n):
    rng = random.Random(seed)
    p = random_polytope(rng, n)
    c = random_generic_cut(rng, p)
    assert bool(is_generic_cut(p, c))
    assert 1 <= c.label <= 3


@settings(max_examples=10, deadline=None)
@given(SEEDS, st.integers(1, 3))
def test_strong_sums_from_cut(seed, n):
    rng = random.Random(seed)
    res = random_cut(rng, n)
    instances = strong_sums_from_cut(res)
    assert len(instances) == 2
    for inst in instances:
        assert connected_sum(inst.k1, inst.k2, inst.z) == inst.expected
        assert bool(is_strong_connected_sum(inst.k1, inst.k2, inst.z))
        assert inst.w == intersection(inst.k1, inst.k2)


@settings(max_examples=10, deadline=None)
@given(SEEDS, st.integers(1, 3))
def test_random_strong_sum(seed, n):
    inst = random_strong_sum(random.Random(seed), n)
    assert connected_sum(inst.k1, inst.k2, inst.z) == inst.expected


@settings(max_examples=15, deadline=None)
@given(SEEDS, st.integers(1, 3))
def test_random_labeled_polytope(seed, n):
    lp = random_labeled_polytope(random.Random(seed), n)
    assert len(lp.labels) == lp.polytope.n_inequalities
    assert all(1 <= b <= 3 for b in lp.labels)
