"""Brute-force reference implementations used by the property suites.

Nothing here shares code with the engines it checks: no orthant frames, no
numpy tables, no Groebner bases. Everything is plain enumeration in a box.
"""
from __future__ import annotations

from functools import reduce
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from .vectors import ExpVec


def box_points(gens: Sequence[ExpVec], side: int) -> set[ExpVec]:
    """All sums of generators with every coordinate below ``side``."""
    d = len(gens[0])
    seen = {(0,) * d}
    frontier = [(0,) * d]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(a + b for a, b in zip(v, g))
                if all(c < side for c in w) and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def member(gens: Sequence[ExpVec], v: ExpVec) -> bool:
    """Coefficient enumeration: is ``v`` a nonnegative integer combination?"""
    gens = [g for g in gens if any(g)]
    if any(c < 0 for c in v):
        return False
    if not gens:
        return not any(v)

    def rec(i: int, rest: tuple[int, ...]) -> bool:
        if not any(rest):
            return True
        if i == len(gens):
            return False
        g = gens[i]
        k = 0
        while all(r - k * c >= 0 for r, c in zip(rest, g)):
            if rec(i + 1, tuple(r - k * c for r, c in zip(rest, g))):
                return True
            k += 1
        return False

    return rec(0, tuple(v))


def colon(gens: Sequence[ExpVec], a: ExpVec, b: ExpVec, side: int) -> set[ExpVec]:
    """Points ``m`` of S in the box with ``m + b`` in ``a + S``."""
    pts = box_points(gens, side)
    big = box_points(gens, side + max(b) + 1)
    return {m for m in pts
            if tuple(x + y - z for x, y, z in zip(m, b, a)) in big}


def _in_cone(gens: Sequence[ExpVec], v: ExpVec) -> bool:
    # Caratheodory: a cone point is a nonnegative combination of at most d gens
    if not any(v):
        return True
    if len(v) == 1:
        return v[0] >= 0
    for g in gens:
        if g[0] * v[1] == g[1] * v[0] and g[0] * v[0] + g[1] * v[1] > 0:
            return True
    for i, g in enumerate(gens):
        for h in gens[i + 1:]:
            det = g[0] * h[1] - g[1] * h[0]
            if det == 0:
                continue
            al = v[0] * h[1] - v[1] * h[0]
            be = g[0] * v[1] - g[1] * v[0]
            if al * det >= 0 and be * det >= 0:
                return True
    return False


def _index(vecs: Sequence[ExpVec]) -> int:
    if len(vecs[0]) == 1:
        return reduce(gcd, (v[0] for v in vecs))
    return reduce(gcd, (abs(g[0] * h[1] - g[1] * h[0])
                        for i, g in enumerate(vecs) for h in vecs[i + 1:]), 0)


def in_normalization(gens: Sequence[ExpVec], v: ExpVec) -> bool:
    """``v`` in the group generated by S and in the cone over S.

    Group test: adjoining ``v`` leaves the index (gcd of maximal minors)
    unchanged. Cone test: Caratheodory over generator pairs.
    """
    return _index(list(gens)) == _index(list(gens) + [v]) and _in_cone(gens, v)


def normalization_points(gens: Sequence[ExpVec], side: int) -> set[ExpVec]:
    return {v for v in product(range(side), repeat=len(gens[0]))
            if in_normalization(gens, v)}


def arf_closure_1d(gens: Iterable[int]) -> list[int]:
    """Arf closure of a numerical semigroup: its elements up to the conductor.

    Repeatedly adds ``x + y - z`` for ``x >= y >= z`` in S until nothing
    changes, working below ``limit`` where everything already belongs to S.
    """
    gens = sorted(set(gens))
    if reduce(gcd, gens) != 1:
        raise ValueError("generators must be coprime")
    limit = gens[0] * gens[-1]
    S = {v[0] for v in box_points([(x,) for x in gens], limit)} | set(range(limit, 2 * limit))
    changed = True
    while changed:
        changed = False
        elems = sorted(S)
        for i, z in enumerate(elems):
            for j in range(i, len(elems)):
                for k in range(j, len(elems)):
                    w = elems[j] + elems[k] - z
                    if w >= 2 * limit:
                        break
                    if w not in S:
                        S.add(w)
                        changed = True
    c = max(v for v in range(2 * limit) if v not in S) + 1 if len(S) < 2 * limit else 0
    return sorted(v for v in S if v <= c)


def gf_rank(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination."""
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def dense_module_member(gens, v, max_degree: int, p: int) -> bool:
    """Is ``v`` a combination of ``gens`` with cofactors of degree <= ``max_degree``?

    ``gens`` and ``v`` are VecPoly values; the test compares matrix ranks with
    and without ``v`` over GF(p).
    """
    monos = [(i, d - i) for d in range(max_degree + 1) for i in range(d + 1)]
    cols: dict[tuple[int, int, int], int] = {}

    def flat(vec, shift):
        out = {}
        for k, comp in enumerate(vec.components):
            for (i, j), c in comp.terms.items():
                out[(k, i + shift[0], j + shift[1])] = c
        return out

    vecs = [flat(g, m) for g in gens for m in monos]
    target = flat(v, (0, 0))
    for f in vecs + [target]:
        for t in f:
            cols.setdefault(t, len(cols))
    rows = []
    for f in vecs:
        row = [0] * len(cols)
        for t, c in f.items():
            row[cols[t]] = c
        rows.append(row)
    trow = [0] * len(cols)
    for t, c in target.items():
        trow[cols[t]] = c
    if not rows:
        return not target
    return gf_rank(rows, p) == gf_rank(rows + [trow], p)
