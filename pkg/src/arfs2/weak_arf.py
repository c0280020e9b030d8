"""Weakly Arf property at the monomial level, weak Arf closure, and the
weakly Arf (S2)-ification.

A triple ``x, y, z`` of elements of ``S`` violates the property when
``y - x`` and ``z - x`` lie in the saturation but ``y + z - x`` is not in ``S``.
Two prunings are sound and always applied: ``u = y - x`` and ``v = z - x`` may
be taken in ``saturation \\ S`` (otherwise ``y + z - x = z + u`` is in ``S``),
and ``x`` may be taken outside the conductor (otherwise ``x + u + v`` is in ``S``).

Triple searches are confined to a box, so positive verdicts are reported as
holding *within a bound*; negative verdicts always carry a witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import IterationLimit
from .ideals import equals, ideal_square, integral_closure_principal, translate
from .s2 import S2Report, is_s2_fixed, s2ify
from .semigroup import AffineSemigroup, minimal_algebra_generators
from .vectors import ExpVec, grlex_key, grlex_sorted


@dataclass(frozen=True)
class WapViolation:
    x: ExpVec
    y: ExpVec
    z: ExpVec

    @property
    def witness(self) -> ExpVec:
        return tuple(b + c - a for a, b, c in zip(self.x, self.y, self.z))


@dataclass(frozen=True)
class BoundedVerdict:
    """``holds`` is only ever claimed relative to ``bound``."""

    holds: bool
    bound: int
    witness: WapViolation | None = None

    def __str__(self) -> str:
        return "true_within_bound" if self.holds else "false"


@dataclass
class ClosureReport:
    input: AffineSemigroup
    closure: AffineSemigroup
    added: list[list[ExpVec]]
    iterations: int
    search_bound: int
    certified: bool

    @property
    def new_generators(self) -> list[ExpVec]:
        return [g for g in self.closure.gens if g not in self.input.gens]


@dataclass
class WeakArfS2Report:
    closure: ClosureReport
    s2: S2Report
    wap: BoundedVerdict
    s2_fixed: bool
    notes: list[str] = field(default_factory=list)

    @property
    def result(self) -> AffineSemigroup:
        return self.s2.s2_gens

    @property
    def certified(self) -> bool:
        return (self.closure.certified and self.s2.certified
                and self.wap.holds and self.s2_fixed)


def normal_table(S: AffineSemigroup, side: int) -> np.ndarray:
    """Boolean array of saturation membership over ``[0, side)^d``."""
    grid = np.indices((side,) * S.dim)
    rem = [grid[i].copy() for i in range(S.dim)]
    ok = np.ones((side,) * S.dim, dtype=bool)
    for row in S.lattice.basis:
        pc = next(j for j, x in enumerate(row) if x)
        ok &= rem[pc] % row[pc] == 0
        q = rem[pc] // row[pc]
        for j in range(S.dim):
            rem[j] = rem[j] - q * row[j]
    if S.dim == 2:
        (r1, r2) = S.cone.rays
        x, y = grid
        ok &= (r1[0] * y - r1[1] * x >= 0) & (x * r2[1] - y * r2[0] >= 0)
    return ok


def _check_bound(S: AffineSemigroup, bound: int) -> None:
    top = max(max(g) for g in S.gens)
    if bound < top:
        raise ValueError(f"bound {bound} is below the largest generator coordinate {top}")


def _scan(S: AffineSemigroup, bound: int, first_only: bool) -> list[WapViolation]:
    _check_bound(S, bound)
    side = bound + 1
    big = S.table(2 * bound + 1)
    inS = big[(slice(0, side),) * S.dim]
    holes = np.argwhere(normal_table(S, side) & ~inS)
    if holes.size == 0:
        return []
    cond = S.conductor_points
    xs = [tuple(int(c) for c in p) for p in np.argwhere(inS)]
    xs.sort(key=grlex_key)
    out: list[WapViolation] = []
    for x in xs:
        if x in cond:
            continue
        xa = np.array(x)
        ys = holes + xa
        keep = np.all(ys <= bound, axis=1)
        ys = ys[keep]
        if len(ys) == 0:
            continue
        keep = inS[tuple(ys.T)]
        us = ys[keep] - xa
        if len(us) == 0:
            continue
        w = us[:, None, :] + us[None, :, :] + xa
        bad = ~big[tuple(np.moveaxis(w, -1, 0))]
        iu = np.triu_indices(len(us))
        found = []
        for i, j in zip(*iu):
            if bad[i, j]:
                y = tuple(int(c) for c in us[i] + xa)
                z = tuple(int(c) for c in us[j] + xa)
                if grlex_key(z) < grlex_key(y):
                    y, z = z, y
                found.append(WapViolation(x, y, z))
        if found:
            found.sort(key=lambda t: (grlex_key(t.y), grlex_key(t.z)))
            if first_only:
                return found[:1]
            out.extend(found)
    return out


def wap_violations(S: AffineSemigroup, bound: int) -> list[WapViolation]:
    """All pruned monomial violating triples with ``x, y, z`` in ``[0, bound]^d``.

    Ordered by ``x``, then ``y``, then ``z`` in graded-lex order, with ``y <= z``.
    """
    return _scan(S, bound, first_only=False)


@dataclass(frozen=True)
class BinomialViolation:
    """``x = X^p + X^q`` with ``f, g`` in ``R/x & Rbar`` but ``x f g`` not in ``R``.

    ``f`` and ``g`` are alternating chains ``sum (-1)^i X^(m_i)`` listed by their
    monomials; ``witnesses`` are the monomials of ``x f g`` outside ``S``.
    """

    p: ExpVec
    q: ExpVec
    f: tuple[ExpVec, ...]
    g: tuple[ExpVec, ...]
    witnesses: tuple[ExpVec, ...]


def _shifted(table: np.ndarray, v: ExpVec, side: int) -> np.ndarray:
    """``out[m] = table[m + v]`` over ``[0, side)^d``, False past the table."""
    out = np.zeros((side,) * table.ndim, dtype=bool)
    n = table.shape[0]
    src, dst = [], []
    for c in v:
        hi = min(side, n - c)
        if hi <= 0:
            return out
        src.append(slice(c, c + hi))
        dst.append(slice(0, hi))
    out[tuple(dst)] = table[tuple(src)]
    return out


def _probe_points(S: AffineSemigroup, probe_bound: int) -> list[ExpVec]:
    tab = S.table(probe_bound + 1)
    pts = [tuple(int(c) for c in v) for v in np.argwhere(tab)]
    return grlex_sorted(v for v in pts if any(v))


def binomial_violations(S: AffineSemigroup, bound: int, probe_bound: int | None = None,
                        first_only: bool = False) -> list[BinomialViolation]:
    """Violations of the weakly Arf property by binomials ``x = X^p + X^q``.

    ``p != q`` range over nonzero points of ``S`` in ``[0, probe_bound]^d``
    (default: the largest generator coordinate), skipping pairs with both
    points in the conductor. Over an infinite field every binomial is a torus
    translate of one with unit coefficients, and the weak Arf closure is torus
    stable, so every monomial of a violating ``x f g`` belongs to the closure.

    ``{f in Rbar : x f in R}`` is spanned by alternating chains along
    ``q - p``; only chains of length >= 2 can give anything beyond the
    monomial check, so every reported pair involves one. Chain monomials and
    the monomials of ``x f`` lie in ``[0, bound]^d``.
    """
    _check_bound(S, bound)
    if S.dim == 1:
        # numerical case: binomials add nothing beyond monomial triples
        return []
    if probe_bound is None:
        probe_bound = max(max(g) for g in S.gens)
    side = bound + 1
    big = S.table(2 * bound + 1)
    inS = big[(slice(0, side),) * S.dim]
    normal = normal_table(S, side)
    cond = S.conductor_points
    probes = _probe_points(S, probe_bound)
    out: list[BinomialViolation] = []
    for i, p in enumerate(probes):
        p_in_cond = p in cond
        for q in probes[i + 1:]:
            if p_in_cond and q in cond:
                continue
            found = _binomial_pair(p, q, normal, inS, big, bound)
            if found:
                if first_only:
                    return found[:1]
                out.extend(found)
    return out


def _binomial_pair(p, q, normal, inS, big, bound) -> list[BinomialViolation]:
    side = bound + 1
    d = tuple(b - a for a, b in zip(p, q))
    startable = normal & _shifted(inS, p, side)
    closes = normal & _shifted(inS, q, side)
    # chains of length >= 2 start where X^m p-term is in S but q-term is not
    longs = []
    for m in np.argwhere(startable & ~closes):
        m = tuple(int(c) for c in m)
        chain = [m]
        cur = m
        while True:
            t = tuple(a + b for a, b in zip(cur, q))
            if max(t) > bound:
                chain = None
                break
            if inS[t]:
                break
            cur = tuple(a + b for a, b in zip(cur, d))
            if min(cur) < 0 or max(cur) > bound or not normal[cur]:
                chain = None
                break
            chain.append(cur)
        if chain:
            longs.append(tuple(chain))
    if not longs:
        return []
    monos = [tuple(int(c) for c in n) for n in np.argwhere(startable & closes)]
    monos.sort(key=grlex_key)
    mono_arr = np.array(monos).reshape(-1, len(p))
    chains = sorted(longs, key=lambda c: grlex_key(c[0]))
    out = []
    for f in chains:
        a = tuple(x + y for x, y in zip(f[0], p))
        b = tuple(x + y for x, y in zip(f[-1], q))
        if len(mono_arr):
            ta = mono_arr + np.array(a)
            tb = mono_arr + np.array(b)
            bad = ~big[tuple(ta.T)] | ~big[tuple(tb.T)]
            for k in np.flatnonzero(bad):
                n = monos[k]
                wits = [w for w in (tuple(int(c) for c in ta[k]),
                                    tuple(int(c) for c in tb[k])) if not big[w]]
                out.append(BinomialViolation(p, q, f, (n,), tuple(grlex_sorted(wits))))
        for g in chains:
            if grlex_key(g[0]) < grlex_key(f[0]):
                continue
            coeff: dict[ExpVec, int] = {}
            sb = (-1) ** (len(f) - 1)
            for j, n in enumerate(g):
                sg = (-1) ** j
                for base, sgn in ((a, sg), (b, sg * sb)):
                    t = tuple(x + y for x, y in zip(base, n))
                    coeff[t] = coeff.get(t, 0) + sgn
            wits = [t for t, c in coeff.items() if c and not big[t]]
            if wits:
                out.append(BinomialViolation(p, q, f, g, tuple(grlex_sorted(wits))))
    return out


def _violation_witnesses(S: AffineSemigroup, bound: int, probes: str,
                         probe_bound: int | None) -> set[ExpVec]:
    wits = {v.witness for v in wap_violations(S, bound)}
    if probes == "binomial":
        for v in binomial_violations(S, bound, probe_bound):
            wits.update(v.witnesses)
    return wits


def is_weakly_arf_bounded(S: AffineSemigroup, bound: int, probes: str = "binomial",
                          probe_bound: int | None = None) -> BoundedVerdict:
    """Search for a violation in the box; ``probes`` is "monomial" or "binomial"."""
    _check_probes(probes)
    hits = _scan(S, bound, first_only=True)
    if hits:
        return BoundedVerdict(False, bound, hits[0])
    if probes == "binomial":
        bhits = binomial_violations(S, bound, probe_bound, first_only=True)
        if bhits:
            return BoundedVerdict(False, bound, bhits[0])
    return BoundedVerdict(True, bound)


def _check_probes(probes: str) -> None:
    if probes not in ("monomial", "binomial"):
        raise ValueError(f"probes must be 'monomial' or 'binomial', not {probes!r}")


def reduction_check(S: AffineSemigroup, a: ExpVec) -> bool:
    """True iff the integral closure ``I`` of ``aA`` satisfies ``I^2 = aI``."""
    I = integral_closure_principal(S, a)
    return equals(ideal_square(I), translate(I, a))


def weak_arf_closure(S: AffineSemigroup, bound: int = 60, max_iter: int = 64,
                     batch: bool = True, probes: str = "binomial",
                     probe_bound: int | None = None) -> ClosureReport:
    """Smallest extension inside the saturation with no violations in the box.

    Each round adds every current witness (``batch``) or only the first one.
    The result is ``certified`` when a further scan with the bound doubled
    finds nothing.
    """
    _check_probes(probes)
    T = S
    added: list[list[ExpVec]] = []
    rounds = 0
    b = bound
    while True:
        b = max(b, max(max(g) for g in T.gens))
        found = _violation_witnesses(T, b, probes, probe_bound)
        if not found:
            break
        rounds += 1
        if rounds > max_iter:
            raise IterationLimit(f"weak Arf closure did not settle in {max_iter} rounds")
        wits = grlex_sorted(found)
        if not batch:
            wits = wits[:1]
        T2 = minimal_algebra_generators(T, wits)
        added.append([g for g in T2.gens if g not in T.gens])
        T = T2
    certified = is_weakly_arf_bounded(T, 2 * b, probes, probe_bound).holds
    return ClosureReport(S, T, added, rounds, b, certified)


def wa_s2ify(S: AffineSemigroup, bound: int = 60, max_iter: int = 64,
             certify: bool = False, probes: str = "binomial",
             probe_bound: int | None = None) -> WeakArfS2Report:
    """Weakly Arf (S2)-ification: the (S2)-ification of the weak Arf closure.

    The result is re-checked for the weakly Arf property (it must be inherited
    by the (S2)-ification) and for being its own (S2)-ification.
    """
    closure = weak_arf_closure(S, bound, max_iter, probes=probes,
                               probe_bound=probe_bound)
    rep = s2ify(closure.closure, certify=certify)
    final = rep.s2_gens
    wap = is_weakly_arf_bounded(final, max(bound, max(max(g) for g in final.gens)),
                                probes, probe_bound)
    notes = [f"weakly Arf checks use {probes} elements x"]
    return WeakArfS2Report(closure, rep, wap, is_s2_fixed(final), notes)
