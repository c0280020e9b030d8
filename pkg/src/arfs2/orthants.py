"""Finite unions of translated orthants of a free subsemigroup.

Fix generators ``g_1, ..., g_d`` of a semigroup ``S``, one on each extreme ray
of its cone, and let ``F = N g_1 + ... + N g_d``. Every ``S``-module inside the
group of ``S`` that is finitely generated (``S`` itself, its saturation,
monomial ideals, fractional ideals) is then a finite union of sets
``c + F``. Intersections, translates, sums and containment of such unions are
exact integer computations, with no enumeration box.

Coordinates: with ``B`` the matrix whose rows are the ``g_i`` and
``D = |det B|``, the scaled coordinate of ``v`` is ``K(v) = v adj(B)`` with
the sign fixed so that ``K(g_i) = D e_i``. Then ``v - c`` lies in ``F`` iff
``K(v) - K(c)`` lies in ``D N^d``, and the cone of ``S`` is ``K >= 0``.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .vectors import ExpVec, add, grlex_key, sub


class Frame:
    """Coordinate system attached to the free subsemigroup ``F``."""

    def __init__(self, basis: tuple[ExpVec, ...]):
        self.basis = basis
        self.dim = len(basis)
        if self.dim == 1:
            (g,) = basis
            self._adj = ((1,),)
            det = g[0]
        else:
            (a, b), (c, d) = basis
            self._adj = ((d, -b), (-c, a))
            det = a * d - b * c
        if det == 0:
            raise ValueError("frame basis must be linearly independent")
        self._sign = 1 if det > 0 else -1
        self.det = abs(det)

    def coords(self, v: ExpVec) -> tuple[int, ...]:
        adj = self._adj
        s = self._sign
        return tuple(s * sum(v[i] * adj[i][j] for i in range(self.dim))
                     for j in range(self.dim))

    def from_coords(self, base: ExpVec, steps: Iterable[int]) -> ExpVec:
        """``base + sum(steps[i] * g_i)``."""
        v = list(base)
        for k, g in zip(steps, self.basis):
            for i in range(self.dim):
                v[i] += k * g[i]
        return tuple(v)

    def in_cone(self, v: ExpVec) -> bool:
        return all(k >= 0 for k in self.coords(v))

    def covers(self, corner: ExpVec, v: ExpVec) -> bool:
        """True iff ``v`` lies in ``corner + F``."""
        D = self.det
        for kv, kc in zip(self.coords(v), self.coords(corner)):
            diff = kv - kc
            if diff < 0 or diff % D:
                return False
        return True

    def meet(self, x: ExpVec, y: ExpVec) -> ExpVec | None:
        """Corner of ``(x + F) & (y + F)``, or None when the two are disjoint."""
        D = self.det
        kx, ky = self.coords(x), self.coords(y)
        steps = []
        for a, b in zip(kx, ky):
            if (a - b) % D:
                return None
            steps.append(max(0, (b - a) // D))
        return self.from_coords(x, steps)

    def reduce(self, corners: Iterable[ExpVec]) -> tuple[ExpVec, ...]:
        """Drop corners contained in another corner's orthant; sort graded-lex."""
        cs = sorted(set(corners), key=grlex_key)
        kept: list[ExpVec] = []
        for c in cs:
            # a covering corner has strictly smaller scaled coordinates, hence
            # smaller degree, so it was already kept
            if not any(self.covers(k, c) for k in kept):
                kept.append(c)
        return tuple(kept)


class OrthantSet:
    """A finite union ``U (c + F)`` over a fixed frame."""

    __slots__ = ("frame", "corners")

    def __init__(self, frame: Frame, corners: Iterable[ExpVec]):
        self.frame = frame
        self.corners = frame.reduce(corners)

    def __repr__(self) -> str:
        return f"OrthantSet({list(self.corners)})"

    def __iter__(self) -> Iterator[ExpVec]:
        return iter(self.corners)

    def __len__(self) -> int:
        return len(self.corners)

    def __contains__(self, v: ExpVec) -> bool:
        return any(self.frame.covers(c, v) for c in self.corners)

    def translate(self, v: ExpVec) -> "OrthantSet":
        return OrthantSet(self.frame, (add(c, v) for c in self.corners))

    def union(self, other: "OrthantSet") -> "OrthantSet":
        return OrthantSet(self.frame, self.corners + other.corners)

    def intersection(self, other: "OrthantSet") -> "OrthantSet":
        meet = self.frame.meet
        out = []
        for x in self.corners:
            for y in other.corners:
                z = meet(x, y)
                if z is not None:
                    out.append(z)
        return OrthantSet(self.frame, out)

    def minkowski(self, other: "OrthantSet") -> "OrthantSet":
        return OrthantSet(self.frame, (add(x, y) for x in self.corners
                                       for y in other.corners))

    def issubset(self, other: "OrthantSet") -> bool:
        return all(c in other for c in self.corners)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrthantSet):
            return NotImplemented
        return self.issubset(other) and other.issubset(self)

    __hash__ = None  # type: ignore[assignment]

    def is_empty(self) -> bool:
        return not self.corners

    def minimal_over(self, gens: Iterable[ExpVec]) -> tuple[ExpVec, ...]:
        """Elements ``m`` of the set with ``m - h`` outside it for every ``h``.

        When ``gens`` generate a semigroup containing ``F`` these are the
        minimal generators of the set as a module over that semigroup; they are
        necessarily corners.
        """
        gens = tuple(gens)
        return tuple(c for c in self.corners
                     if not any(sub(c, h) in self for h in gens))

    def cofinite_in(self, other: "OrthantSet") -> bool:
        """True iff ``other`` minus ``self`` is a finite set.

        An orthant ``e + F`` minus the union has finite complement exactly when
        for every axis ``i`` some corner of the union in the same residue class
        meets the orthant in a set touching the ``i``-th edge.
        """
        fr = self.frame
        D = fr.det
        mine = [(c, fr.coords(c)) for c in self.corners]
        for e in other.corners:
            ke = fr.coords(e)
            for i in range(fr.dim):
                ok = False
                for _, kc in mine:
                    if any((a - b) % D for a, b in zip(kc, ke)):
                        continue
                    if all(kc[j] <= ke[j] for j in range(fr.dim) if j != i):
                        ok = True
                        break
                if not ok:
                    return False
        return True
