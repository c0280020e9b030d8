import random
from itertools import product

import pytest

from arfs2 import (AffineSemigroup, MonIdeal, NotFound, choose_sop_partner, colon_principal,
                   colon_stabilize, integral_closure_principal, is_sop, u_part)
from arfs2 import oracles
from arfs2.ideals import FracMonModule, equals, ideal_square, intersect, principal, translate
from arfs2.selftest import random_element, random_semigroup

N2 = AffineSemigroup([(1, 0), (0, 1)])


def test_principal_and_square(ring_R):
    I = principal(ring_R, (1, 4))
    assert I.gens == ((1, 4),)
    assert ideal_square(I) == principal(ring_R, (2, 8))
    assert (6, 4) in I and (1, 5) not in I


def test_semantic_equality_ignores_redundancy(ring_R):
    assert MonIdeal(ring_R, [(1, 4), (6, 4), (2, 8)]) == MonIdeal(ring_R, [(1, 4)])
    assert equals(MonIdeal(ring_R, [(5, 0)]), translate(MonIdeal(ring_R, [(0, 0)]), (5, 0)))


def test_intersection(ring_R):
    I = intersect(principal(ring_R, (5, 0)), principal(ring_R, (0, 5)))
    assert (5, 5) in I and (5, 0) not in I


def test_frac_module_equality(ring_R):
    A = FracMonModule((5, 0), principal(ring_R, (5, 0)))
    B = FracMonModule((0, 5), principal(ring_R, (0, 5)))
    assert A == B


def test_colon_golden(ring_RA):
    U, n = colon_stabilize(ring_RA, (0, 10), (5, 0))
    assert n == 1
    assert set(U.gens) == {(0, 10), (3, 17), (4, 16)}
    # the stabilized ideal satisfies I^2 = aI
    assert ideal_square(U) == translate(U, (0, 10))


def test_colon_n2():
    assert colon_principal(N2, (1, 0), (0, 1)).gens == ((1, 0),)
    U, n = colon_stabilize(N2, (1, 0), (0, 1))
    assert n == 1 and U.gens == ((1, 0),)


def test_colon_monotone(ring_R):
    prev = None
    for k in range(1, 5):
        C = colon_principal(ring_R, (0, 5), (5 * k, 0))
        if prev is not None:
            assert prev.issubset(C)
        prev = C


def test_is_sop_examples(ring_RA):
    assert is_sop(ring_RA, (0, 10), (5, 0))
    assert not is_sop(N2, (1, 0), (2, 0))
    assert is_sop(N2, (1, 0), (0, 1))


def test_is_sop_interior_never(ring_R):
    assert not is_sop(ring_R, (6, 9), (5, 0))


def test_choose_partner(ring_RA):
    assert choose_sop_partner(ring_RA, (0, 10)) == (5, 0)
    assert choose_sop_partner(N2, (1, 0)) == (0, 1)
    with pytest.raises(NotFound):
        choose_sop_partner(N2, (1, 1))


def test_u_part_examples(ring_RA, ring_R):
    assert set(u_part(ring_RA, (0, 10)).gens) == {(0, 10), (3, 17), (4, 16)}
    assert u_part(N2, (2, 3)) == principal(N2, (2, 3))
    # R is Cohen-Macaulay: aR has no embedded component
    assert u_part(ring_R, (5, 0)) == principal(ring_R, (5, 0))


@pytest.mark.parametrize("seed", range(10))
def test_u_part_partner_independent(seed):
    rng = random.Random(seed)
    S = random_semigroup(rng, dim=2)
    g1, g2 = S.frame.basis
    a = g1
    ref = u_part(S, a)
    for k in range(1, 11):
        b = tuple(k * c for c in g2)
        assert colon_stabilize(S, a, b)[0] == ref


@pytest.mark.parametrize("seed", range(10))
def test_u_part_sandwich(seed):
    rng = random.Random(50 + seed)
    S = random_semigroup(rng, dim=2)
    a = random_element(rng, S)
    U = u_part(S, a)
    Ibar = integral_closure_principal(S, a)
    assert a in U
    assert all(g in Ibar for g in U.gens)


def test_integral_closure(ring_R):
    Ibar = integral_closure_principal(ring_R, (5, 0))
    for m in product(range(20), repeat=2):
        want = m in ring_R and m[0] >= 5 and (m[0] - 5, m[1]) in ring_R.saturation
        assert (m in Ibar) == want


@pytest.mark.parametrize("seed", range(15))
def test_colon_matches_brute_force(seed):
    rng = random.Random(400 + seed)
    S = random_semigroup(rng)
    a, b = random_element(rng, S, 8), random_element(rng, S, 8)
    C = colon_principal(S, a, b)
    brute = oracles.colon(list(S.gens), a, b, 16)
    for m in product(range(16), repeat=S.dim):
        assert (m in C) == (m in brute)


def test_sop_complement_finite_matches_scan(ring_RA):
    # points of S outside (a+S) u (b+S) in a 60x60 box; none near the far edges
    cover = ring_RA.ideal_points([(0, 10), (5, 0)])
    left = [m for m in product(range(60), repeat=2) if m in ring_RA and m not in cover]
    assert left and max(max(m) for m in left) < 30
