"""Affine semigroups in N^1 and N^2: membership, lattice, cone, saturation.

An :class:`AffineSemigroup` stands for the semigroup ring ``k[S]``. Besides the
box-based membership table it carries an exact description of ``S`` as a
finite union of orthants over the free subsemigroup spanned by one generator
on each extreme ray (see :mod:`arfs2.orthants`), which is what the ideal
computations run on.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable

import numpy as np

from .errors import BoundExceeded, DegenerateCone
from .orthants import Frame, OrthantSet
from .vectors import (ExpVec, add, cross, grlex_key, grlex_sorted,
                      hermite_rows, is_nonneg, primitive, scale, sub, zero)

DEFAULT_BOX = 64
MAX_BOX = 1024


@dataclass(frozen=True)
class Lattice:
    """Subgroup of Z^d in Hermite normal form."""

    basis: tuple[ExpVec, ...]
    index: int

    def __contains__(self, v: ExpVec) -> bool:
        rem = list(v)
        for row in self.basis:
            pc = next(j for j, x in enumerate(row) if x)
            q, r = divmod(rem[pc], row[pc])
            if r:
                return False
            rem = [a - q * b for a, b in zip(rem, row)]
        return not any(rem)


@dataclass(frozen=True)
class Cone:
    """Primitive extreme rays, ordered by increasing angle from the x-axis."""

    rays: tuple[ExpVec, ...]

    def __contains__(self, v: ExpVec) -> bool:
        if len(self.rays) == 1:
            return v[0] >= 0
        r1, r2 = self.rays
        return cross(r1, v) >= 0 and cross(v, r2) >= 0


def _as_vec(g, dim: int | None) -> ExpVec:
    if isinstance(g, (int, np.integer)):
        return (int(g),)
    return tuple(int(x) for x in g)


class AffineSemigroup:
    """Finitely generated subsemigroup of N^d, d in {1, 2}.

    The generator set is reduced to the unique minimal one and stored in
    graded-lex order. Instances are immutable and compare by generators.

    Parameters
    ----------
    gens : iterable of tuples (or ints for d = 1)
        Nonzero vectors with nonnegative entries.
    dim : int, optional
        Needed only when ``gens`` is empty, which is rejected anyway.
    max_box : int
        Largest side of the membership table before :class:`BoundExceeded`.
    """

    def __init__(self, gens: Iterable, dim: int | None = None,
                 max_box: int = MAX_BOX):
        vecs = [_as_vec(g, dim) for g in gens]
        if not vecs:
            raise DegenerateCone("a semigroup needs at least one generator")
        d = len(vecs[0]) if dim is None else dim
        if d not in (1, 2):
            raise ValueError(f"dimension must be 1 or 2, got {d}")
        for v in vecs:
            if len(v) != d:
                raise ValueError(f"generator {v} does not have dimension {d}")
            if not is_nonneg(v) or not any(v):
                raise ValueError(f"generator {v} must be nonzero and nonnegative")
        self.dim = d
        self.max_box = max_box
        self._side = 0
        self._table: np.ndarray | None = None
        raw = grlex_sorted(vecs)
        self._raw = tuple(raw)
        if d == 2 and all(cross(raw[0], v) == 0 for v in raw):
            raise DegenerateCone(f"generators {raw} are collinear")
        self.gens: tuple[ExpVec, ...] = tuple(
            g for g in raw if not any(h != g and self._member_raw(sub(g, h))
                                      for h in raw))

    # -- identity -----------------------------------------------------------
    def __repr__(self) -> str:
        return f"AffineSemigroup({list(self.gens)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineSemigroup):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    # -- membership table ---------------------------------------------------
    def _grow(self, need: int) -> None:
        side = max(self._side, DEFAULT_BOX)
        while side <= need:
            side *= 2
        if side > self.max_box:
            if need < self.max_box:
                side = self.max_box
            else:
                raise BoundExceeded(
                    f"membership box {need + 1} exceeds max_box={self.max_box}")
        if side == self._side:
            return
        self._table = membership_table(self._raw, side, self.dim)
        self._side = side

    def _member_raw(self, v: ExpVec) -> bool:
        if not is_nonneg(v):
            return False
        if max(v) >= self._side:
            self._grow(max(v))
        return bool(self._table[v])

    def table(self, side: int) -> np.ndarray:
        """Boolean membership array over the box ``[0, side)^d``."""
        if side > self._side:
            self._grow(side - 1)
        return self._table[(slice(0, side),) * self.dim]

    def __contains__(self, v: ExpVec) -> bool:
        v = _as_vec(v, self.dim)
        if not is_nonneg(v):
            return False
        if max(v) < self.max_box:
            return self._member_raw(v)
        return v in self.points

    # -- lattice and cone ---------------------------------------------------
    @cached_property
    def lattice(self) -> Lattice:
        basis = tuple(hermite_rows(self.gens))
        index = 1
        for i, row in enumerate(basis):
            index *= row[i]
        return Lattice(basis, index)

    @cached_property
    def cone(self) -> Cone:
        if self.dim == 1:
            return Cone(((1,),))
        lo = hi = self.gens[0]
        for g in self.gens[1:]:
            if cross(g, lo) > 0:
                lo = g
            if cross(hi, g) > 0:
                hi = g
        return Cone((primitive(lo), primitive(hi)))

    @cached_property
    def frame(self) -> Frame:
        """Frame spanned by the graded-lex smallest generator on each ray."""
        if self.dim == 1:
            return Frame((self.gens[0],))
        basis = []
        for r in self.cone.rays:
            basis.append(next(g for g in self.gens if cross(g, r) == 0))
        return Frame(tuple(basis))

    def on_ray(self, v: ExpVec) -> int | None:
        """Index of the extreme ray containing ``v`` (nonzero), else None."""
        if not any(v):
            return None
        if self.dim == 1:
            return 0
        for i, r in enumerate(self.cone.rays):
            if cross(v, r) == 0 and all(a * b >= 0 for a, b in zip(v, r)):
                return i
        return None

    # -- exact point sets ---------------------------------------------------
    @cached_property
    def apery(self) -> tuple[ExpVec, ...]:
        """Elements of ``S`` not of the form ``s + g_i`` with ``s`` in ``S``."""
        basis = self.frame.basis
        found = {zero(self.dim)}
        frontier = [zero(self.dim)]
        while frontier:
            nxt = []
            for e in frontier:
                for h in self.gens:
                    s = add(e, h)
                    if s in found:
                        continue
                    if any(self._member_raw(sub(s, g)) for g in basis):
                        continue
                    found.add(s)
                    nxt.append(s)
            frontier = nxt
        return tuple(grlex_sorted(found))

    @cached_property
    def points(self) -> OrthantSet:
        return OrthantSet(self.frame, self.apery)

    def ideal_points(self, gens: Iterable[ExpVec]) -> OrthantSet:
        """Point set of the (fractional) ideal ``U (g + S)``."""
        return OrthantSet(self.frame, (add(g, e) for g in gens
                                       for e in self.apery))

    def in_normalization(self, v: ExpVec) -> bool:
        return v in self.lattice and v in self.cone

    @cached_property
    def normal_points(self) -> OrthantSet:
        """The saturation as a union of orthants in this semigroup's frame."""
        fr = self.frame
        top = [sum(col) for col in zip(*fr.basis)]
        corners = []
        for v in product(*(range(t + 1) for t in top)):
            if not self.in_normalization(v):
                continue
            if all(0 <= k < fr.det for k in fr.coords(v)):
                corners.append(v)
        return OrthantSet(fr, corners)

    @cached_property
    def saturation(self) -> "AffineSemigroup":
        if self.dim == 1:
            return AffineSemigroup([self.lattice.basis[0]], max_box=self.max_box)
        ws = []
        for r in self.cone.rays:
            k = 1
            while scale(k, r) not in self.lattice:
                k += 1
            ws.append(scale(k, r))
        w1, w2 = ws
        area = cross(w1, w2)
        top = add(w1, w2)
        cand = []
        for p in product(*(range(t + 1) for t in top)):
            if not any(p) or p not in self.lattice:
                continue
            alpha, beta = cross(p, w2), cross(w1, p)
            if 0 <= alpha <= area and 0 <= beta <= area:
                cand.append(p)
        hilbert = []
        for p in cand:
            reducible = any(
                any(q) and q != p and self.in_normalization(q)
                and self.in_normalization(sub(p, q))
                for q in product(*(range(t + 1) for t in p)))
            if not reducible:
                hilbert.append(p)
        return AffineSemigroup(hilbert, max_box=self.max_box)

    @cached_property
    def module_generators(self) -> tuple[ExpVec, ...]:
        """Minimal ``U`` with ``saturation = U (u + S)``."""
        return self.normal_points.minimal_over(self.gens)

    @cached_property
    def conductor_points(self) -> OrthantSet:
        """The conductor ideal ``{a in S : a + saturation in S}``."""
        pts = self.points
        out = pts
        for u in self.module_generators:
            if any(u):
                out = out.intersection(pts.translate(scale(-1, u)))
        return out

    def is_normal(self) -> bool:
        return self.module_generators == (zero(self.dim),)


def membership_table(gens: Iterable[ExpVec], side: int, dim: int) -> np.ndarray:
    """DP membership over the box ``[0, side)^dim``.

    Closing the box under each generator in turn is exact because generators
    are nonnegative, so every partial sum of a point in the box stays in it.
    Each closure uses shifts by ``g, 2g, 4g, ...``.
    """
    table = np.zeros((side,) * dim, dtype=bool)
    table[(0,) * dim] = True
    for g in gens:
        step = g
        while all(s < side for s in step):
            dst = tuple(slice(s, side) for s in step)
            src = tuple(slice(0, side - s) for s in step)
            table[dst] = table[dst] | table[src]
            step = scale(2, step)
    return table


# -- operation-style API --------------------------------------------------

def lattice_basis(S: AffineSemigroup) -> Lattice:
    return S.lattice


def cone_rays(S: AffineSemigroup) -> Cone:
    return S.cone


def member(S: AffineSemigroup, v) -> bool:
    return v in S


def saturation(S: AffineSemigroup) -> AffineSemigroup:
    return S.saturation


def saturation_module_generators(S: AffineSemigroup) -> tuple[ExpVec, ...]:
    return S.module_generators


def conductor_element(S: AffineSemigroup) -> ExpVec:
    """Graded-lex smallest nonzero conductor element, preferring extreme rays.

    Only ray elements can be completed to a monomial system of parameters, so
    a ray element is returned whenever the conductor has one. When ``S`` is
    non-normal along both rays the conductor has none, and the smallest
    interior element is returned instead.
    """
    fr = S.frame
    on_ray, inner = [], []
    for c in S.conductor_points:
        kc = fr.coords(c)
        if not any(c):
            on_ray.extend(fr.basis)
            continue
        for i in range(fr.dim):
            if all(kc[j] == 0 for j in range(fr.dim) if j != i):
                on_ray.append(c)
                break
        else:
            inner.append(c)
    return min(on_ray or inner, key=grlex_key)


def minimal_algebra_generators(S: AffineSemigroup,
                               extra: Iterable[ExpVec] = ()) -> AffineSemigroup:
    extra = [tuple(e) for e in extra if any(e)]
    if all(e in S for e in extra):
        return S
    return AffineSemigroup(list(S.gens) + extra, max_box=S.max_box)
