"""Submodules of free modules over k[x, y], k = GF(p).

A small Groebner engine: one term order (position over term, graded-lex with
``x > y`` inside a position, lower positions larger), Buchberger completion,
reduced bases, membership, and intersection by a two-block projection.
That is enough to compute fraction modules ``M/a & M/b = (aM & bM)/(ab)``.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .errors import DegreeCapExceeded

DEFAULT_CHAR = 32003
DEFAULT_DEGREE_CAP = 40

Mono = tuple[int, int]
Term = tuple[int, int, int]  # (position, x-exponent, y-exponent)


class Poly:
    """Polynomial in x, y over GF(p); ``terms`` maps exponent pairs to coefficients."""

    __slots__ = ("terms", "p")

    def __init__(self, terms: dict[Mono, int] | None = None, p: int = DEFAULT_CHAR):
        self.p = p
        self.terms = {m: c % p for m, c in (terms or {}).items() if c % p}

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1, p: int = DEFAULT_CHAR) -> "Poly":
        return cls({(i, j): c}, p)

    @classmethod
    def const(cls, c: int, p: int = DEFAULT_CHAR) -> "Poly":
        return cls({(0, 0): c}, p)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out, self.p)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()}, self.p)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self.terms.items()}, self.p)
        out: dict[Mono, int] = {}
        for (a, b), c in self.terms.items():
            for (e, f), d in other.terms.items():
                k = (a + e, b + f)
                out[k] = (out.get(k, 0) + c * d) % self.p
        return Poly(out, self.p)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1, self.p)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        from .io import format_poly
        return f"Poly({format_poly(self)!r})"


class VecPoly:
    """Element of the free module of rank ``len(components)``."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Poly]):
        self.components = tuple(components)

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def p(self) -> int:
        return self.components[0].p

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "VecPoly") -> "VecPoly":
        return VecPoly(a + b for a, b in zip(self.components, other.components))

    def scaled(self, f: Poly) -> "VecPoly":
        return VecPoly(f * c for c in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VecPoly):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        from .io import format_vector
        return f"VecPoly({format_vector(self)!r})"


# -- flat representation used by the engine --------------------------------

Flat = dict[Term, int]


def _okey(t: Term) -> tuple[int, int, int]:
    return (-t[0], t[1] + t[2], t[1])


def _to_flat(v: VecPoly) -> Flat:
    return {(k, i, j): c for k, comp in enumerate(v.components)
            for (i, j), c in comp.terms.items()}


def _from_flat(f: Flat, rank: int, p: int) -> VecPoly:
    comps: list[dict[Mono, int]] = [{} for _ in range(rank)]
    for (k, i, j), c in f.items():
        comps[k][(i, j)] = c
    return VecPoly(Poly(c, p) for c in comps)


def _lead(f: Flat, key=_okey) -> Term:
    return max(f, key=key)


def _divides(s: Term, t: Term) -> bool:
    return s[0] == t[0] and s[1] <= t[1] and s[2] <= t[2]


def _sub_multiple(h: Flat, g: Flat, c: int, di: int, dj: int, p: int) -> None:
    """``h -= c * x^di y^dj * g`` in place."""
    for (k, i, j), d in g.items():
        t = (k, i + di, j + dj)
        v = (h.get(t, 0) - c * d) % p
        if v:
            h[t] = v
        else:
            h.pop(t, None)


class _Basis:
    """Working basis: monic flats with cached leading terms."""

    def __init__(self, p: int, key=_okey):
        self.p = p
        self.key = key
        self.polys: list[Flat] = []
        self.leads: list[Term] = []

    def normal_form(self, f: Flat, skip: int | None = None) -> Flat:
        p = self.p
        h = dict(f)
        rem: Flat = {}
        while h:
            t = max(h, key=self.key)
            c = h[t]
            for idx, s in enumerate(self.leads):
                if idx != skip and _divides(s, t):
                    _sub_multiple(h, self.polys[idx], c, t[1] - s[1], t[2] - s[2], p)
                    break
            else:
                rem[t] = c
                del h[t]
        return rem

    def add(self, f: Flat) -> int:
        t = _lead(f, self.key)
        inv = pow(f[t], -1, self.p)
        self.polys.append({k: v * inv % self.p for k, v in f.items()})
        self.leads.append(t)
        return len(self.polys) - 1


def _spoly(f: Flat, g: Flat, s: Term, t: Term, p: int) -> Flat:
    li, lj = max(s[1], t[1]), max(s[2], t[2])
    h: Flat = {}
    _sub_multiple(h, f, p - 1, li - s[1], lj - s[2], p)  # h = +x^.. f
    _sub_multiple(h, g, 1, li - t[1], lj - t[2], p)
    return h


def _groebner(flats: Sequence[Flat], p: int, degree_cap: int, key=_okey) -> list[Flat]:
    B = _Basis(p, key)
    pairs: list[tuple[int, int, int]] = []

    def push(h: Flat) -> None:
        n = B.add(h)
        s = B.leads[n]
        for m in range(n):
            t = B.leads[m]
            if t[0] == s[0]:
                deg = max(s[1], t[1]) + max(s[2], t[2])
                pairs.append((deg, m, n))

    for f in flats:
        if f:
            h = B.normal_form(f)
            if h:
                push(h)
    done: set[tuple[int, int]] = set()
    while pairs:
        pairs.sort()
        deg, i, j = pairs.pop(0)
        done.add((i, j))
        if deg > degree_cap:
            raise DegreeCapExceeded(f"S-pair of degree {deg} exceeds cap {degree_cap}")
        s, t = B.leads[i], B.leads[j]
        lcm = (s[0], max(s[1], t[1]), max(s[2], t[2]))
        # Buchberger's chain criterion
        if any(k not in (i, j) and _divides(B.leads[k], lcm)
               and (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done
               for k in range(len(B.leads))):
            continue
        h = B.normal_form(_spoly(B.polys[i], B.polys[j], s, t, p))
        if h:
            push(h)
    # minimalize then interreduce
    keep = []
    for idx, s in enumerate(B.leads):
        if not any(_divides(B.leads[k], s) and (B.leads[k] != s or k < idx)
                   for k in range(len(B.leads)) if k != idx):
            keep.append(idx)
    R = _Basis(p, key)
    for idx in keep:
        R.add(B.polys[idx])
    out = []
    for n in range(len(R.polys)):
        out.append(R.normal_form(R.polys[n], skip=n) | {R.leads[n]: 1})
    out.sort(key=lambda f: key(_lead(f, key)), reverse=True)
    return out


def buchberger(gens: Sequence[VecPoly], degree_cap: int = DEFAULT_DEGREE_CAP
               ) -> list[VecPoly]:
    """Reduced Groebner basis of the submodule generated by ``gens``.

    The result is sorted by decreasing leading term and is unique for the
    module, whatever the order or redundancy of the input.
    """
    gens = list(gens)
    if not gens:
        return []
    rank, p = gens[0].rank, gens[0].p
    if any(g.rank != rank for g in gens):
        raise ValueError("generators have different ranks")
    return [_from_flat(f, rank, p) for f in
            _groebner([_to_flat(g) for g in gens], p, degree_cap)]


class Submodule:
    """Finitely generated submodule of ``R^rank``; basis computed on demand."""

    def __init__(self, rank: int, gens: Iterable[VecPoly], p: int = DEFAULT_CHAR,
                 degree_cap: int = DEFAULT_DEGREE_CAP):
        self.rank = rank
        self.p = p
        self.degree_cap = degree_cap
        self.gens = tuple(g for g in gens if not g.is_zero())
        for g in self.gens:
            if g.rank != rank:
                raise ValueError(f"generator of rank {g.rank} in a rank-{rank} module")

    @cached_property
    def _flat_gb(self) -> list[Flat]:
        return _groebner([_to_flat(g) for g in self.gens], self.p, self.degree_cap)

    @property
    def gb(self) -> list[VecPoly]:
        return [_from_flat(f, self.rank, self.p) for f in self._flat_gb]

    @cached_property
    def _basis(self) -> _Basis:
        B = _Basis(self.p)
        for f in self._flat_gb:
            B.add(f)
        return B

    def normal_form(self, v: VecPoly) -> VecPoly:
        return _from_flat(self._basis.normal_form(_to_flat(v)), self.rank, self.p)

    def __contains__(self, v: VecPoly) -> bool:
        return not self._basis.normal_form(_to_flat(v))

    def issubset(self, other: "Submodule") -> bool:
        return all(g in other for g in self.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.rank == other.rank and self.issubset(other) and other.issubset(self)

    __hash__ = None  # type: ignore[assignment]

    def scaled(self, f: Poly) -> "Submodule":
        return Submodule(self.rank, (g.scaled(f) for g in self.gens), self.p,
                         self.degree_cap)

    def __repr__(self) -> str:
        from .io import format_module
        return f"Submodule({format_module(self)!r})"


class FracSubmodule:
    """``(1/denom) * num`` in the fraction module; equality is semantic."""

    def __init__(self, denom: Poly, num: Submodule):
        if denom.is_zero():
            raise ValueError("denominator must be nonzero")
        self.denom = denom
        self.num = num

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FracSubmodule):
            return NotImplemented
        return self.num.scaled(other.denom) == other.num.scaled(self.denom)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FracSubmodule(denom={self.denom!r}, num={self.num!r})"


def free_module(rank: int, p: int = DEFAULT_CHAR) -> Submodule:
    one, zero = Poly.const(1, p), Poly({}, p)
    return Submodule(rank, (VecPoly(one if i == k else zero for i in range(rank))
                            for k in range(rank)), p)


def member(M: Submodule, v: VecPoly) -> bool:
    if v.rank != M.rank:
        raise ValueError("rank mismatch")
    return v in M


def intersect(M: Submodule, N: Submodule) -> Submodule:
    """``M & N`` from the submodule of ``R^(2r)`` spanned by ``(m, m)`` and ``(n, 0)``.

    Its elements are ``(m + n, m)``; those with zero first block are exactly
    ``(0, m)`` for ``m`` in the intersection. Under any order that ranks every
    first-block term above every second-block term, basis elements led in the
    second block generate that part; a degree-first order inside each block
    keeps the completion far cheaper than plain position-over-term.
    """
    if M.rank != N.rank:
        raise ValueError("rank mismatch")
    r, p = M.rank, M.p
    zero = Poly({}, p)
    gens = [_to_flat(VecPoly(m.components + m.components)) for m in M.gens]
    gens += [_to_flat(VecPoly(n.components + (zero,) * r)) for n in N.gens]

    def block_key(t: Term) -> tuple[int, int, int, int]:
        # eliminates the first block; term-over-position inside each block
        return (-(t[0] >= r), t[1] + t[2], -t[0], t[1])

    gb = _groebner(gens, p, max(M.degree_cap, N.degree_cap), block_key)
    out = [VecPoly(_from_flat(f, 2 * r, p).components[r:])
           for f in gb if _lead(f, block_key)[0] >= r]
    return Submodule(r, out, p, M.degree_cap)


def frac_intersect(M: Submodule, a: Poly, b: Poly) -> FracSubmodule:
    """``M/a & M/b`` as ``(aM & bM) / (ab)``."""
    if a.is_zero() or b.is_zero():
        raise ValueError("a and b must be nonzero")
    return FracSubmodule(a * b, intersect(M.scaled(a), M.scaled(b)))


def ab_module_sides(M: Submodule, a: Poly, b: Poly) -> tuple[bool, bool]:
    """Return ``(M/a & M/b == M/a^2 & M/b^2, a,b regular on M/a & M/b)``.

    With ``N = aM & bM`` (so the fraction module is ``N/(ab)``), ``b`` is
    regular on ``N/aN`` iff ``aN & bN = abN``; ``a`` is regular because the
    ambient free module is torsion-free.
    """
    L1 = frac_intersect(M, a, b)
    L2 = frac_intersect(M, a * a, b * b)
    N = L1.num
    meet = intersect(N.scaled(a), N.scaled(b))
    regular = meet.issubset(N.scaled(a * b))
    return L1 == L2, regular


def verify_theorem_ab_modules(M: Submodule, a: Poly, b: Poly) -> bool:
    """True iff equality of the two fraction modules matches regularity."""
    equal, regular = ab_module_sides(M, a, b)
    return equal == regular
