"""Fractional monomial ideals over an affine semigroup ring.

Ideals are stored by their unique minimal generating set; all comparisons go
through the exact orthant point sets of the ambient semigroup, never through
the generator lists.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable

from .errors import BoundExceeded, NotFound
from .orthants import OrthantSet
from .semigroup import AffineSemigroup
from .vectors import ExpVec, add, cross, grlex_key, grlex_sorted, scale, sub, zero

MAX_STABILIZE = 2 ** 16


class MonIdeal:
    """Monomial ideal ``U (g + S)`` with generators in the group of ``S``.

    Generators may lie outside ``S`` (fractional ideals); ``integral`` tells
    whether they all lie inside.
    """

    def __init__(self, ambient: AffineSemigroup, gens: Iterable[ExpVec]):
        self.ambient = ambient
        gens = [tuple(g) for g in gens]
        pts = ambient.ideal_points(gens)
        self.gens: tuple[ExpVec, ...] = tuple(grlex_sorted(
            pts.minimal_over(ambient.gens)))
        self.__dict__["points"] = pts

    @classmethod
    def from_points(cls, ambient: AffineSemigroup, pts: OrthantSet) -> "MonIdeal":
        ideal = cls.__new__(cls)
        ideal.ambient = ambient
        ideal.gens = tuple(grlex_sorted(pts.minimal_over(ambient.gens)))
        ideal.__dict__["points"] = pts
        return ideal

    @cached_property
    def points(self) -> OrthantSet:
        return self.ambient.ideal_points(self.gens)

    def __repr__(self) -> str:
        return f"MonIdeal({list(self.gens)})"

    def __contains__(self, v: ExpVec) -> bool:
        return tuple(v) in self.points

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonIdeal):
            return NotImplemented
        return equals(self, other)

    __hash__ = None  # type: ignore[assignment]

    @property
    def integral(self) -> bool:
        return all(g in self.ambient for g in self.gens)

    def issubset(self, other: "MonIdeal") -> bool:
        return all(g in other.points for g in self.gens)


class FracMonModule:
    """``(1/denom) * numerator`` inside the fraction field of ``k[S]``."""

    def __init__(self, denom: ExpVec, numerator: MonIdeal):
        self.denom = tuple(denom)
        self.numerator = numerator

    @property
    def ambient(self) -> AffineSemigroup:
        return self.numerator.ambient

    @cached_property
    def points(self) -> OrthantSet:
        return self.numerator.points.translate(scale(-1, self.denom))

    def __repr__(self) -> str:
        return f"FracMonModule(denom={self.denom}, gens={list(self.numerator.gens)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FracMonModule):
            return NotImplemented
        # cross-translate so both sides are integral-looking
        left = self.numerator.points.translate(other.denom)
        right = other.numerator.points.translate(self.denom)
        return left == right

    __hash__ = None  # type: ignore[assignment]


# -- basic ideal arithmetic -----------------------------------------------

def principal(S: AffineSemigroup, a: ExpVec) -> MonIdeal:
    return MonIdeal(S, [a])


def ideal_square(I: MonIdeal) -> MonIdeal:
    return MonIdeal(I.ambient, (add(g, h) for g in I.gens for h in I.gens))


def translate(I: MonIdeal, v: ExpVec) -> MonIdeal:
    return MonIdeal(I.ambient, (add(g, v) for g in I.gens))


def equals(I: MonIdeal, J: MonIdeal) -> bool:
    return I.points == J.points


def intersect(I: MonIdeal, J: MonIdeal) -> MonIdeal:
    return MonIdeal.from_points(I.ambient, I.points.intersection(J.points))


# -- colons ---------------------------------------------------------------

def colon_principal(S: AffineSemigroup, a: ExpVec, b: ExpVec) -> MonIdeal:
    """``aA :_A b``, i.e. ``{m in S : m + b - a in S}``."""
    pts = S.points.intersection(S.points.translate(sub(a, b)))
    return MonIdeal.from_points(S, pts)


def _colon_power(S: AffineSemigroup, a: ExpVec, b: ExpVec, n: int) -> OrthantSet:
    return S.points.intersection(S.points.translate(sub(a, scale(n, b))))


def colon_stabilize(S: AffineSemigroup, a: ExpVec, b: ExpVec,
                    max_power: int = MAX_STABILIZE) -> tuple[MonIdeal, int]:
    """Return ``(aA :_A b^n, n)`` for the least ``n >= 1`` with
    ``aA : b^n == aA : b^(n+1)``.

    The chain ``aA : b^n`` is increasing and constant once two consecutive
    terms agree, so the least such ``n`` is found by doubling then bisection.
    """
    def stable(n: int) -> bool:
        return _colon_power(S, a, b, n) == _colon_power(S, a, b, n + 1)

    hi = 1
    while not stable(hi):
        hi *= 2
        if hi > max_power:
            raise BoundExceeded(f"aA : b^n did not stabilize for n <= {max_power}")
    lo = hi // 2  # not stable (or 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if stable(mid):
            hi = mid
        else:
            lo = mid
    return MonIdeal.from_points(S, _colon_power(S, a, b, hi)), hi


def is_sop(S: AffineSemigroup, a: ExpVec, b: ExpVec) -> bool:
    """True iff only finitely many points of ``S`` avoid ``(a+S) U (b+S)``."""
    a, b = tuple(a), tuple(b)
    if not any(a) or not any(b):
        return False
    cover = S.ideal_points([a, b])
    return cover.cofinite_in(S.points)


def choose_sop_partner(S: AffineSemigroup, a: ExpVec) -> ExpVec:
    """First element, in graded-lex order, completing ``a`` to a parameter system.

    Generators are scanned first, then sums of two generators.
    """
    a = tuple(a)
    if not any(a):
        raise ValueError("a must be nonzero")
    gens = list(S.gens)
    cands = gens + grlex_sorted(add(g, h) for g, h in
                                combinations_with_replacement(gens, 2))
    for b in cands:
        if S.dim == 2 and cross(a, b) == 0:
            continue
        if is_sop(S, a, b):
            return b
    raise NotFound(f"no parameter partner for {a} among small elements of S")


def u_part(S: AffineSemigroup, a: ExpVec) -> MonIdeal:
    """Height-one part ``U(aA)`` of the principal ideal ``aA``.

    For ``a`` on an extreme ray this is ``aA : b^n`` with ``b`` a parameter
    partner and ``n`` the stabilizing power. For interior ``a`` no monomial
    partner exists; then the embedded component at the irrelevant ideal is
    removed by saturating separately along one element of each ray.
    """
    a = tuple(a)
    if S.dim == 1:
        return principal(S, a)
    if S.on_ray(a) is not None:
        b = choose_sop_partner(S, a)
        return colon_stabilize(S, a, b)[0]
    pts = None
    for g in S.frame.basis:
        part = colon_stabilize(S, a, g)[0].points
        pts = part if pts is None else pts.intersection(part)
    return MonIdeal.from_points(S, pts)


def integral_closure_principal(S: AffineSemigroup, a: ExpVec) -> MonIdeal:
    """Monomial integral closure of ``aA``: ``{m in S : m - a in saturation}``."""
    pts = S.points.intersection(S.normal_points.translate(tuple(a)))
    return MonIdeal.from_points(S, pts)
