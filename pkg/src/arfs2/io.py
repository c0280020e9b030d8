"""Text and JSON formats for semigroups, monomial ideals and polynomial modules.

Semigroups: ``"(5,0) (1,4) (0,5)"``, ``"x^5, x*y^4, y^5"``, bare integers
``"3 5 7"`` (or ``"t^3, t^5"``) in dimension one, or JSON
``{"dim": 2, "gens": [[5, 0], ...]}``.
Ideals: ``"Y^10, X^3*Y^17, X^4*Y^16"``, optionally followed by ``"/ Y^10"``,
or JSON ``{"denom": [0, 10], "gens": [[0, 10], ...]}``.
Modules: ``"[x, 0]; [y, x]; [0, y]"`` or JSON ``{"char": p, "gens": [["x", "0"], ...]}``.
"""
from __future__ import annotations

import json
import re
from typing import Any

from .ideals import FracMonModule, MonIdeal
from .polymod import DEFAULT_CHAR, Poly, Submodule, VecPoly
from .semigroup import AffineSemigroup
from .vectors import ExpVec, grlex_sorted

_TUPLE = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)")
_FACTOR = re.compile(r"^([a-z])(?:\^(\d+))?$")


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


# -- monomials ---------------------------------------------------------------

def parse_monomial(text: str, variables: str = "xy") -> ExpVec:
    """``"x^3*y^2"`` -> (3, 2); ``"1"`` -> zero vector. Case-insensitive."""
    exps = [0] * len(variables)
    s = text.strip().lower().replace(" ", "")
    if s == "1":
        return tuple(exps)
    for factor in s.split("*"):
        m = _FACTOR.match(factor)
        if not m or m.group(1) not in variables:
            raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
        exps[variables.index(m.group(1))] += int(m.group(2) or 1)
    return tuple(exps)


def format_monomial(v: ExpVec, variables: str = "XY") -> str:
    parts = []
    for name, e in zip(variables, v):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


# -- semigroups --------------------------------------------------------------

def parse_gens(text: str) -> list[ExpVec]:
    """Generator vectors from any of the accepted text forms."""
    s = text.strip()
    if not s:
        raise ValueError("empty semigroup description")
    if "(" in s:
        rest = _TUPLE.sub(" ", s)
        if rest.replace(",", " ").strip():
            raise ValueError(f"unparsed text {rest.strip()!r}")
        return [tuple(int(x) for x in m.split(",")) for m in _TUPLE.findall(s)]
    tokens = [t for t in re.split(r"[,\s]+", s) if t]
    if all(re.fullmatch(r"\d+", t) for t in tokens):
        return [(int(t),) for t in tokens]
    low = s.lower()
    if "t" in low and not re.search(r"[xy]", low):
        return [parse_monomial(t, "t") for t in re.split(r"\s*,\s*", s) if t]
    return [parse_monomial(t, "xy") for t in re.split(r"\s*,\s*", s) if t]


def parse_semigroup(text: str) -> AffineSemigroup:
    if _is_json(text):
        return semigroup_from_json(json.loads(text))
    gens = parse_gens(text)
    dims = {len(g) for g in gens}
    if len(dims) != 1:
        raise ValueError("generators of mixed dimension")
    return AffineSemigroup(gens, dim=dims.pop())


def format_semigroup(S: AffineSemigroup) -> str:
    if S.dim == 1:
        return " ".join(str(g[0]) for g in S.gens)
    return " ".join("(" + ",".join(map(str, g)) + ")" for g in S.gens)


def semigroup_to_json(S: AffineSemigroup) -> dict[str, Any]:
    return {"dim": S.dim, "gens": [list(g) for g in S.gens]}


def semigroup_from_json(obj: dict[str, Any]) -> AffineSemigroup:
    if "gens" not in obj:
        raise ValueError("semigroup JSON needs a 'gens' field")
    return AffineSemigroup([tuple(g) for g in obj["gens"]], dim=obj.get("dim"))


# -- monomial ideals -----------------------------------------------------------

def parse_ideal_parts(text: str, dim: int = 2) -> tuple[ExpVec | None, list[ExpVec]]:
    """Return ``(denom, gens)``; ``denom`` is None when the text has none."""
    if _is_json(text):
        obj = json.loads(text)
        denom = tuple(obj["denom"]) if obj.get("denom") is not None else None
        return denom, [tuple(g) for g in obj["gens"]]
    variables = "xy" if dim == 2 else "t"
    num, _, den = text.partition("/")
    gens = [parse_monomial(t, variables) for t in re.split(r"\s*,\s*", num.strip()) if t]
    if not gens:
        raise ValueError("ideal needs at least one generator")
    return (parse_monomial(den, variables) if den.strip() else None), gens


def parse_ideal(text: str, ambient: AffineSemigroup) -> MonIdeal | FracMonModule:
    denom, gens = parse_ideal_parts(text, ambient.dim)
    I = MonIdeal(ambient, gens)
    return I if denom is None else FracMonModule(denom, I)


def format_ideal(I: MonIdeal | FracMonModule) -> str:
    names = "XY" if _ambient(I).dim == 2 else "T"
    if isinstance(I, FracMonModule):
        num = ", ".join(format_monomial(g, names) for g in I.numerator.gens)
        return f"{num} / {format_monomial(I.denom, names)}"
    return ", ".join(format_monomial(g, names) for g in I.gens)


def ideal_to_json(I: MonIdeal | FracMonModule) -> dict[str, Any]:
    if isinstance(I, FracMonModule):
        return {"denom": list(I.denom), "gens": [list(g) for g in I.numerator.gens]}
    return {"denom": None, "gens": [list(g) for g in I.gens]}


def _ambient(I: MonIdeal | FracMonModule) -> AffineSemigroup:
    return I.ambient


# -- polynomials and modules ----------------------------------------------------

def parse_poly(text: str, p: int = DEFAULT_CHAR) -> Poly:
    """Sum of terms ``c*x^i*y^j``; signs and integer coefficients allowed."""
    s = text.strip().lower().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    terms: dict[tuple[int, int], int] = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        factors = body.split("*")
        coeff = 1
        if re.fullmatch(r"\d+", factors[0]):
            coeff = int(factors.pop(0))
        mono = parse_monomial("*".join(factors), "xy") if factors else (0, 0)
        c = -coeff if sign == "-" else coeff
        terms[mono] = terms.get(mono, 0) + c
    if re.sub(r"[+-]?[^+-]+", "", s):
        raise ValueError(f"bad polynomial {text!r}")
    return Poly(terms, p)


def format_poly(f: Poly) -> str:
    """Terms by decreasing degree, coefficients as signed residues."""
    if f.is_zero():
        return "0"
    items = sorted(f.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]), reverse=True)
    out = ""
    for (i, j), c in items:
        if c > f.p // 2:
            c -= f.p
        mono = format_monomial((i, j), "xy")
        mag = abs(c)
        body = str(mag) if mono == "1" else (mono if mag == 1 else f"{mag}*{mono}")
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


def parse_vector(text: str, p: int = DEFAULT_CHAR) -> VecPoly:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"vector must be bracketed: {text!r}")
    return VecPoly(parse_poly(c, p) for c in s[1:-1].split(","))


def format_vector(v: VecPoly) -> str:
    return "[" + ", ".join(format_poly(c) for c in v.components) + "]"


def parse_module(text: str, p: int = DEFAULT_CHAR) -> Submodule:
    if _is_json(text):
        return module_from_json(json.loads(text), p)
    vecs = [parse_vector(part, p) for part in text.split(";") if part.strip()]
    if not vecs:
        raise ValueError("module needs at least one generator")
    return Submodule(vecs[0].rank, vecs, p)


def format_module(M: Submodule) -> str:
    return "; ".join(format_vector(g) for g in M.gens)


def module_to_json(M: Submodule) -> dict[str, Any]:
    return {"char": M.p, "rank": M.rank,
            "gens": [[format_poly(c) for c in g.components] for g in M.gens]}


def module_from_json(obj: dict[str, Any], p: int = DEFAULT_CHAR) -> Submodule:
    p = obj.get("char", p)
    vecs = [VecPoly(parse_poly(c, p) for c in g) for g in obj["gens"]]
    rank = obj.get("rank", vecs[0].rank if vecs else None)
    if rank is None:
        raise ValueError("module JSON needs 'rank' when it has no generators")
    return Submodule(rank, vecs, p)


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, so output is byte-stable."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


__all__ = [n for n in dir() if n.startswith(("parse_", "format_")) or n.endswith("_json")
           ] + ["dumps", "grlex_sorted"]
