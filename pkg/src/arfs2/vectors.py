"""Exponent vectors and the integer linear algebra they need.

An exponent vector is a plain tuple of Python ints, so arithmetic never
overflows. Dimension is 1 or 2 throughout the package.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

ExpVec = tuple[int, ...]


def add(u: ExpVec, v: ExpVec) -> ExpVec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: ExpVec, v: ExpVec) -> ExpVec:
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, v: ExpVec) -> ExpVec:
    return tuple(k * a for a in v)


def zero(d: int) -> ExpVec:
    return (0,) * d


def is_nonneg(v: ExpVec) -> bool:
    return all(a >= 0 for a in v)


def leq(u: ExpVec, v: ExpVec) -> bool:
    """Componentwise order."""
    return all(a <= b for a, b in zip(u, v))


def grlex_key(v: ExpVec) -> tuple:
    """Sort key for graded-lex order: total degree first, then lexicographic."""
    return (sum(v), v)


def grlex_sorted(vs: Iterable[ExpVec]) -> list[ExpVec]:
    return sorted(set(vs), key=grlex_key)


def primitive(v: ExpVec) -> ExpVec:
    g = 0
    for a in v:
        g = gcd(g, a)
    return tuple(a // g for a in v) if g else v


def cross(u: ExpVec, v: ExpVec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hermite_rows(vectors: Sequence[ExpVec]) -> list[ExpVec]:
    """Row-style Hermite normal form of the group generated by ``vectors``.

    The result is upper triangular with positive pivots and entries above each
    pivot reduced into ``[0, pivot)``. Zero rows are dropped.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    d = len(rows[0])
    basis: list[list[int]] = []
    col = 0
    while rows and col < d:
        pivot = None
        rest = []
        for r in rows:
            if pivot is None:
                pivot = r
                continue
            g, s, t = xgcd(pivot[col], r[col])
            if g == 0:
                rest.append(r)
                continue
            p, q = pivot[col] // g, r[col] // g
            new_pivot = [s * x + t * y for x, y in zip(pivot, r)]
            reduced = [p * y - q * x for x, y in zip(pivot, r)]
            pivot = new_pivot
            rest.append(reduced)
        assert pivot is not None
        if pivot[col] == 0:
            col += 1
            rows = [pivot] + rest
            rows = [r for r in rows if any(r)]
            continue
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        rows = [r for r in rest if any(r)]
        col += 1
    # reduce entries above pivots
    for i in range(len(basis)):
        pc = next(j for j, x in enumerate(basis[i]) if x)
        for k in range(i):
            q = basis[k][pc] // basis[i][pc]
            basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return [tuple(r) for r in basis]
