"""Seeded property suites and embedded golden fixtures.

``run(seed)`` returns a plain dict that serializes to the same bytes for the
same seed: no timings, no set iteration order, one RNG per suite.
"""
from __future__ import annotations

import random
from itertools import product
from typing import Callable

from . import oracles
from .ideals import colon_principal, u_part
from .io import parse_module, parse_poly
from .polymod import (DEFAULT_CHAR, FracSubmodule, Poly, Submodule, VecPoly, buchberger,
                      frac_intersect, free_module, ab_module_sides)
from .s2 import is_s2_fixed, s2ify, ab_sides
from .semigroup import AffineSemigroup, saturation
from .vectors import ExpVec, grlex_sorted, sub
from .weak_arf import is_weakly_arf_bounded, reduction_check, wa_s2ify, weak_arf_closure
from .ideals import colon_stabilize

SCHEMA = "arf-s2/1"
WORKED_R = [(5, 0), (1, 4), (0, 5)]
WORKED_RA = WORKED_R + [(9, 6), (8, 7), (4, 11)]
MODULE_M = "[x, 0]; [y, x]; [0, y]"


# -- random instances -----------------------------------------------------------

def random_semigroup(rng: random.Random, max_gens: int = 5, max_coord: int = 8,
                     dim: int | None = None) -> AffineSemigroup:
    """A random affine semigroup; two-dimensional ones have a full cone."""
    if dim is None:
        dim = 1 if rng.random() < 0.2 else 2
    while True:
        k = rng.randint(2, max_gens)
        if dim == 1:
            gens = [(rng.randint(2, max(3, max_coord + 4)),) for _ in range(k)]
        else:
            gens = [(rng.randint(0, max_coord), rng.randint(0, max_coord)) for _ in range(k)]
            gens = [g for g in gens if any(g)]
            if len(gens) < 2 or all(g[0] * gens[0][1] == g[1] * gens[0][0] for g in gens):
                continue
        return AffineSemigroup(gens, dim=dim)


def random_element(rng: random.Random, S: AffineSemigroup, max_coord: int = 12) -> ExpVec:
    """A nonzero element of S, uniform among box points when there are any."""
    pts = [v for v in product(range(max_coord + 1), repeat=S.dim) if any(v) and v in S]
    if pts:
        return rng.choice(pts)
    return rng.choice(S.gens)


def random_poly(rng: random.Random, max_deg: int, p: int, min_deg: int = 0,
                nonzero: bool = False) -> Poly:
    if not nonzero and rng.random() < 0.3:
        return Poly({}, p)
    monos = [(i, d - i) for d in range(min_deg, max_deg + 1) for i in range(d + 1)]
    chosen = rng.sample(monos, min(rng.randint(1, 3), len(monos)))
    return Poly({m: rng.choice([1, 1, 1, -1, 2]) for m in chosen}, p)


def random_module(rng: random.Random, p: int = DEFAULT_CHAR, max_rank: int = 3,
                  max_deg: int = 3) -> Submodule:
    r = rng.randint(1, max_rank)
    while True:
        gens = []
        for _ in range(rng.randint(1, r + 1)):
            comps = [random_poly(rng, max_deg, p) for _ in range(r)]
            gens.append(VecPoly(comps))
        M = Submodule(r, gens, p)
        if M.gens:
            return M


# -- suites ----------------------------------------------------------------------

Suite = Callable[[random.Random, int], list[str]]


def suite_ab_modules(rng: random.Random, n: int, p: int = DEFAULT_CHAR) -> list[str]:
    fails = []
    for i in range(n):
        M = random_module(rng, p)
        a = random_poly(rng, 2, p, min_deg=1, nonzero=True)
        b = random_poly(rng, 2, p, min_deg=1, nonzero=True)
        equal, regular = ab_module_sides(M, a, b)
        if equal != regular:
            fails.append(f"#{i}: equal={equal} regular={regular} on {M!r} a={a!r} b={b!r}")
    return fails


def suite_ab_monomial(rng: random.Random, n: int) -> list[str]:
    fails = []
    for i in range(n):
        S = random_semigroup(rng, dim=2)
        a, b = random_element(rng, S), random_element(rng, S)
        equal, regular = ab_sides(S, a, b)
        if equal != regular:
            fails.append(f"#{i}: equal={equal} regular={regular} on {S!r} a={a} b={b}")
    return fails


def suite_s2_idempotence(rng: random.Random, n: int) -> list[str]:
    fails = []
    for i in range(n):
        S = random_semigroup(rng)
        T = s2ify(S).s2_gens
        Sbar = saturation(S)
        if not s2ify(T).is_fixed:
            fails.append(f"#{i}: s2ify not idempotent on {S!r}")
        elif not all(g in T for g in S.gens) or not all(g in Sbar for g in T.gens):
            fails.append(f"#{i}: sandwich S <= T <= saturation fails on {S!r}")
    return fails


def suite_intersection(rng: random.Random, n: int, side: int = 30) -> list[str]:
    fails = []
    for i in range(n):
        S = random_semigroup(rng, dim=2)
        a = random_element(rng, S)
        U = u_part(S, a)
        T = s2ify(S).s2_gens
        for m in product(range(side), repeat=2):
            lhs = m in U
            d = sub(m, a)
            rhs = m in S and min(d) >= 0 and d in T
            if lhs != rhs:
                fails.append(f"#{i}: m={m} U={lhs} aT&S={rhs} on {S!r} a={a}")
                break
    return fails


def suite_triple_vs_reduction(rng: random.Random, n: int, bound: int = 16) -> list[str]:
    fails = []
    for i in range(n):
        S = random_semigroup(rng, max_gens=4, max_coord=6)
        triples = is_weakly_arf_bounded(S, bound, probes="monomial").holds
        reductions = all(reduction_check(S, a)
                         for a in product(range(bound + 1), repeat=S.dim)
                         if any(a) and a in S)
        if triples != reductions:
            fails.append(f"#{i}: triples={triples} reductions={reductions} on {S!r}")
    return fails


def suite_oracle_membership(rng: random.Random, n: int, side: int = 15) -> list[str]:
    fails = []
    for i in range(n):
        S = random_semigroup(rng)
        gens = list(S.gens)
        box = oracles.box_points(gens, side)
        for v in product(range(side), repeat=S.dim):
            if (v in S) != (v in box):
                fails.append(f"#{i}: member{v} disagrees on {S!r}")
                break
        else:
            a, b = random_element(rng, S, 8), random_element(rng, S, 8)
            C = colon_principal(S, a, b)
            brute = oracles.colon(gens, a, b, side)
            bad = [m for m in product(range(side), repeat=S.dim) if (m in C) != (m in brute)]
            if bad:
                fails.append(f"#{i}: colon disagrees at {bad[0]} on {S!r} a={a} b={b}")
                continue
            Sbar = saturation(S)
            nb = oracles.normalization_points(gens, side)
            bad = [m for m in product(range(side), repeat=S.dim) if (m in Sbar) != (m in nb)]
            if bad:
                fails.append(f"#{i}: saturation disagrees at {bad[0]} on {S!r}")
    return fails


def suite_arf_1d(rng: random.Random, n: int) -> list[str]:
    fails = []
    for i in range(n):
        while True:
            gens = sorted({rng.randint(3, 11) for _ in range(rng.randint(2, 3))})
            if len(gens) >= 2 and oracles.reduce(oracles.gcd, gens) == 1:
                break
        S = AffineSemigroup([(g,) for g in gens], dim=1)
        T = weak_arf_closure(S, bound=2 * gens[0] * gens[-1]).closure
        want = oracles.arf_closure_1d(gens)
        got = [v for v in range(want[-1] + 1) if (v,) in T]
        if got != want or (want[-1] + 1,) not in T:
            fails.append(f"#{i}: closure of {gens} gives {got}, oracle {want}")
    return fails


def _homogeneous(rng: random.Random, d: int, p: int) -> Poly:
    return random_poly(rng, d, p, min_deg=d)


def suite_module_membership(rng: random.Random, n: int, p: int = DEFAULT_CHAR) -> list[str]:
    """Graded modules: membership versus dense linear algebra, basis uniqueness."""
    fails = []
    checked = 0
    for i in range(n):
        r = rng.randint(1, 2)
        degs = [rng.randint(1, 3) for _ in range(rng.randint(1, r + 1))]
        gens = [VecPoly(_homogeneous(rng, d, p) for _ in range(r)) for d in degs]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        M = Submodule(r, gens, p)
        D = rng.randint(max(degs), 6)
        combo = VecPoly([Poly({}, p)] * r)
        for g, d in zip(gens, degs):
            combo = combo + g.scaled(_homogeneous(rng, D - d, p))
        for v in (combo, VecPoly(_homogeneous(rng, D, p) for _ in range(r))):
            if v.is_zero():
                continue
            checked += 1
            truth = oracles.dense_module_member(gens, v, D, p)
            if (v in M) != truth:
                fails.append(f"#{i}: member({v!r}) = {v in M}, dense = {truth} on {M!r}")
        perm = gens[:]
        rng.shuffle(perm)
        if buchberger(perm) != buchberger(gens):
            fails.append(f"#{i}: reduced basis depends on generator order for {M!r}")
    if checked < n // 2:
        fails.append(f"only {checked} membership probes were nontrivial")
    return fails


SUITES: dict[str, tuple[Suite, int]] = {
    "ab_biconditional_modules": (suite_ab_modules, 100),
    "ab_biconditional_monomial": (suite_ab_monomial, 50),
    "s2_idempotence": (suite_s2_idempotence, 50),
    "intersection_scan": (suite_intersection, 25),
    "triple_vs_reduction": (suite_triple_vs_reduction, 30),
    "oracle_membership_colon": (suite_oracle_membership, 100),
    "arf_closure_1d": (suite_arf_1d, 20),
    "module_membership": (suite_module_membership, 50),
}


def run_suite(name: str, seed: int = 0, count: int | None = None) -> dict:
    fn, default = SUITES[name]
    n = default if count is None else count
    rng = random.Random(f"{seed}:{name}")
    fails = fn(rng, n)
    return {"instances": n, "failures": len(fails), "examples": fails[:3]}


# -- fixtures --------------------------------------------------------------------

def _gens(S: AffineSemigroup) -> list[list[int]]:
    return [list(g) for g in S.gens]


def fixtures() -> dict:
    """Golden values for the worked two-dimensional example and the module example."""
    R = AffineSemigroup(WORKED_R)
    RA = AffineSemigroup(WORKED_RA)
    out: dict = {}
    out["saturation"] = _gens(saturation(R))
    clo = weak_arf_closure(R, 60)
    out["weak_arf_added"] = [list(g) for g in clo.new_generators]
    U, n = colon_stabilize(RA, (0, 10), (5, 0))
    out["colon"] = {"n": n, "gens": [list(g) for g in U.gens]}
    rep = s2ify(RA)
    out["s2ify_added"] = [list(g) for g in rep.added]
    out["s2ify_normal"] = rep.s2_gens == saturation(R)
    was = wa_s2ify(R, 60)
    out["wa_s2ify"] = {"gens": _gens(was.result), "wap": str(was.wap)}
    M = parse_module(MODULE_M)
    x, y = parse_poly("x"), parse_poly("y")
    one = Poly.const(1)
    mm = parse_module("[x, 0]; [y, 0]; [0, x]; [0, y]")
    out["modules"] = {
        "x,y=m+m": frac_intersect(M, x, y) == FracSubmodule(one, mm),
        "x2,y2=R2": frac_intersect(M, x ** 2, y ** 2) == FracSubmodule(one, free_module(2)),
        "x3,y3=R2": frac_intersect(M, x ** 3, y ** 3) == FracSubmodule(one, free_module(2)),
    }
    expected = {
        "saturation": [[0, 5], [1, 4], [2, 3], [3, 2], [4, 1], [5, 0]],
        "weak_arf_added": [[4, 11], [8, 7], [9, 6]],
        "colon": {"n": 1, "gens": [[0, 10], [3, 17], [4, 16]]},
        "s2ify_added": [[3, 7], [4, 6]],
        "s2ify_normal": False,
        "wa_s2ify": {"gens": [[0, 5], [1, 4], [5, 0], [3, 7], [4, 6]], "wap": "true_within_bound"},
        "modules": {"x,y=m+m": True, "x2,y2=R2": True, "x3,y3=R2": True},
    }
    return {"values": out, "match": {k: out[k] == expected[k] for k in expected}}


def run(seed: int = 0, suites: list[str] | None = None, scale: float = 1.0) -> dict:
    names = list(SUITES) if suites is None else suites
    res = {}
    for name in names:
        default = SUITES[name][1]
        res[name] = run_suite(name, seed, max(1, round(default * scale)))
    fx = fixtures()
    ok = all(fx["match"].values()) and all(r["failures"] == 0 for r in res.values())
    return {"schema": SCHEMA, "command": "selftest", "seed": seed,
            "fixtures": fx, "suites": res, "passed": ok}
