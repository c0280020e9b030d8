import random

import pytest

from arfs2 import (AffineSemigroup, is_weakly_arf_bounded, reduction_check, s2ify,
                   saturation, wa_s2ify, wap_violations, weak_arf_closure)
from arfs2 import oracles
from arfs2.weak_arf import binomial_violations

RA = [(5, 0), (1, 4), (0, 5), (9, 6), (8, 7), (4, 11)]


def test_closure_golden(ring_R):
    rep = weak_arf_closure(ring_R, bound=60)
    assert set(rep.new_generators) == {(9, 6), (8, 7), (4, 11)}
    assert rep.certified


def test_binomial_probe_finds_87(ring_R):
    # (8,7) comes from x = XY^4 + Y^5, not from any monomial triple
    mono = {v.witness for v in wap_violations(ring_R, 60)}
    assert (8, 7) not in mono
    hits = binomial_violations(ring_R, 60)
    assert any((8, 7) in h.witnesses for h in hits)


def test_monomial_closure_differs(ring_R):
    rep = weak_arf_closure(ring_R, bound=60, probes="monomial")
    assert (8, 7) not in rep.new_generators


def test_closure_idempotent(ring_R):
    T = weak_arf_closure(ring_R, 60).closure
    assert weak_arf_closure(T, 60).new_generators == []


def test_sandwich(ring_R):
    T = weak_arf_closure(ring_R, 60).closure
    Sb = saturation(ring_R)
    assert all(g in T for g in ring_R.gens) and all(g in Sb for g in T.gens)


def test_verdicts(ring_R):
    assert str(is_weakly_arf_bounded(ring_R, 60)) == "false"
    A = AffineSemigroup(RA)
    v = is_weakly_arf_bounded(A, 60)
    assert v.holds and str(v) == "true_within_bound"
    assert is_weakly_arf_bounded(saturation(ring_R), 40).holds


def test_wap_preserved_by_s2(ring_R):
    A = AffineSemigroup(RA)
    assert is_weakly_arf_bounded(s2ify(A).s2_gens, 60).holds


def test_end_to_end(ring_R):
    rep = wa_s2ify(ring_R, 60)
    assert set(rep.result.gens) == {(5, 0), (1, 4), (0, 5), (3, 7), (4, 6)}
    assert str(rep.wap) == "true_within_bound"
    assert rep.s2_fixed and rep.certified


def test_minimality_evidence():
    # drop one added generator: the scan finds it (or something generating it) again
    for g in [(9, 6), (8, 7), (4, 11)]:
        S = AffineSemigroup([v for v in RA if v != g])
        T = weak_arf_closure(S, 60).closure
        assert g in T


def test_bound_too_small(ring_R):
    with pytest.raises(ValueError):
        wap_violations(ring_R, 3)


def test_reduction_check(ring_R):
    A = AffineSemigroup(RA)
    assert all(reduction_check(A, a) for a in [(5, 0), (0, 5), (1, 4), (9, 6), (6, 9)])
    assert not all(reduction_check(ring_R, a)
                   for a in [(i, j) for i in range(41) for j in range(41)
                             if (i, j) in ring_R and (i or j)])


@pytest.mark.parametrize("gens", [[3, 5], [4, 6, 7], [5, 7, 9], [6, 7, 11], [4, 9]])
def test_numerical_closure_matches_oracle(gens):
    S = AffineSemigroup(gens)
    T = weak_arf_closure(S, 2 * gens[0] * gens[-1]).closure
    want = oracles.arf_closure_1d(gens)
    assert [v for v in range(want[-1] + 1) if (v,) in T] == want
    assert (want[-1] + 1,) in T


@pytest.mark.parametrize("seed", range(10))
def test_triple_vs_reduction_agreement(seed):
    from arfs2.selftest import suite_triple_vs_reduction
    assert suite_triple_vs_reduction(random.Random(seed), 3) == []
