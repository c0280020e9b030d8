import random
from itertools import product

import pytest

from arfs2 import (AffineSemigroup, BoundExceeded, DegenerateCone, conductor_element, cone_rays,
                   lattice_basis, member, minimal_algebra_generators, saturation,
                   saturation_module_generators)
from arfs2 import oracles
from arfs2.selftest import random_semigroup
from arfs2.vectors import hermite_rows


def test_minimal_generators_drop_redundant():
    S = AffineSemigroup([(5, 0), (1, 4), (0, 5), (6, 4), (10, 0)])
    assert set(S.gens) == {(5, 0), (1, 4), (0, 5)}


def test_collinear_generators_rejected():
    with pytest.raises(DegenerateCone):
        AffineSemigroup([(1, 2), (2, 4)])


def test_bad_input_rejected():
    with pytest.raises(ValueError):
        AffineSemigroup([(1, -1), (0, 1)])
    with pytest.raises(ValueError):
        AffineSemigroup([])


def test_lattice_and_cone(ring_R):
    L = lattice_basis(ring_R)
    assert L.index == 5
    assert (1, 4) in L and (2, 3) in L and (1, 0) not in L
    C = cone_rays(ring_R)
    assert set(C.rays) == {(1, 0), (0, 1)}


def test_membership_examples(ring_R):
    assert member(ring_R, (6, 9))
    assert not member(ring_R, (9, 6))
    assert not member(ring_R, (2, 3))
    assert member(ring_R, (0, 0))


def test_saturation_golden(ring_R):
    assert set(saturation(ring_R).gens) == {(5, 0), (4, 1), (3, 2), (2, 3), (1, 4), (0, 5)}


def test_saturation_numerical():
    assert saturation(AffineSemigroup([3, 5])).gens == ((1,),)
    assert saturation(AffineSemigroup([4, 6])).gens == ((2,),)


def test_hermite_rows():
    assert list(hermite_rows([(5, 0), (1, 4), (0, 5)])) == [(1, 4), (0, 5)]


@pytest.mark.parametrize("seed", range(20))
def test_saturation_idempotent_and_contains(seed):
    S = random_semigroup(random.Random(seed))
    Sb = saturation(S)
    assert saturation(Sb) == Sb
    assert all(g in Sb for g in S.gens)
    assert Sb.is_normal()


@pytest.mark.parametrize("seed", range(15))
def test_member_matches_enumeration(seed):
    S = random_semigroup(random.Random(100 + seed))
    pts = oracles.box_points(list(S.gens), 15)
    for v in product(range(15), repeat=S.dim):
        assert (v in S) == (v in pts) == oracles.member(list(S.gens), v)


@pytest.mark.parametrize("seed", range(15))
def test_saturation_matches_group_and_cone(seed):
    S = random_semigroup(random.Random(200 + seed))
    Sb = saturation(S)
    brute = oracles.normalization_points(list(S.gens), 14)
    for v in product(range(14), repeat=S.dim):
        assert (v in Sb) == (v in brute)


def test_conductor_examples(ring_R, ring_RA):
    assert conductor_element(AffineSemigroup([3, 5])) == (8,)
    a = conductor_element(ring_RA)
    assert a == (0, 10)
    for u in saturation_module_generators(ring_RA):
        assert tuple(x + y for x, y in zip(a, u)) in ring_RA
    assert conductor_element(AffineSemigroup([(1, 0), (0, 1)])) == (0, 1)


@pytest.mark.parametrize("seed", range(15))
def test_conductor_property(seed):
    S = random_semigroup(random.Random(300 + seed))
    a = conductor_element(S)
    assert any(a) and a in S
    for u in saturation_module_generators(S):
        assert tuple(x + y for x, y in zip(a, u)) in S


def test_minimal_algebra_generators(ring_R):
    T = minimal_algebra_generators(ring_R, {(3, 7), (4, 6), (9, 6)})
    assert set(T.gens) == {(5, 0), (1, 4), (0, 5), (3, 7), (4, 6)}
    assert minimal_algebra_generators(ring_R, [(6, 9), (0, 0)]) == ring_R


def test_large_coordinates():
    S = AffineSemigroup([(300, 0), (1, 299), (0, 300)])
    assert (301, 299) in S
    assert (2, 298) not in S
    assert (599, 1) not in S and (600, 0) in S and (302, 598) in S


def test_box_limit_raises():
    S = AffineSemigroup([(3000, 0), (1, 2999), (0, 3000)], max_box=256)
    with pytest.raises(BoundExceeded):
        _ = S.apery
