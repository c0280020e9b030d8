"""Acceptance criteria, one test each, at their stated limits.

Each test records a PASS/FAIL line that is printed in the terminal summary
(and immediately, when run with ``-s`` or as a script).
"""
from __future__ import annotations

import subprocess
import sys
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE

from arfs2 import (AffineSemigroup, FracSubmodule, Poly, colon_stabilize, frac_intersect,
                   is_weakly_arf_bounded, s2ify, saturation, wa_s2ify, weak_arf_closure)
from arfs2.io import parse_module, parse_poly
from arfs2.polymod import free_module
from arfs2.selftest import run_suite

R_GENS = [(5, 0), (1, 4), (0, 5)]
RA_GENS = R_GENS + [(9, 6), (8, 7), (4, 11)]


@contextmanager
def criterion(key: str, limit: float):
    t0 = time.perf_counter()
    state = {"ok": False}
    try:
        yield state
    finally:
        dt = time.perf_counter() - t0
        ok = state["ok"] and dt < limit
        lim = "no time limit" if limit == float("inf") else f"limit {limit:g}s"
        detail = f"{dt:.2f}s ({lim}){'' if state['ok'] else ' wrong result'}"
        ACCEPTANCE[key] = (ok, detail)
        print(f"{key} {'PASS' if ok else 'FAIL'} {detail}")
    assert state["ok"], f"{key}: wrong result"
    assert dt < limit, f"{key}: took {dt:.2f}s, limit {limit}s"


def test_ac1_saturation_golden():
    with criterion("AC1", 1.0) as c:
        S = AffineSemigroup(R_GENS)
        got = set(saturation(S).gens)
        c["ok"] = got == {(5, 0), (4, 1), (3, 2), (2, 3), (1, 4), (0, 5)}


def test_ac2_weak_arf_closure_golden():
    with criterion("AC2", 30.0) as c:
        rep = weak_arf_closure(AffineSemigroup(R_GENS), bound=60)
        c["ok"] = set(rep.new_generators) == {(9, 6), (8, 7), (4, 11)}


def test_ac3_colon_golden():
    with criterion("AC3", 5.0) as c:
        U, n = colon_stabilize(AffineSemigroup(RA_GENS), (0, 10), (5, 0))
        c["ok"] = n == 1 and set(U.gens) == {(0, 10), (3, 17), (4, 16)}


def test_ac4_s2ify_golden():
    with criterion("AC4", 5.0) as c:
        S = AffineSemigroup(RA_GENS)
        rep = s2ify(S)
        c["ok"] = (set(rep.added) == {(3, 7), (4, 6)}
                   and rep.s2_gens != saturation(AffineSemigroup(R_GENS)))


def test_ac5_end_to_end():
    with criterion("AC5", 60.0) as c:
        rep = wa_s2ify(AffineSemigroup(R_GENS), bound=60)
        final = rep.result
        verdict = is_weakly_arf_bounded(final, 60)
        c["ok"] = (set(final.gens) == {(5, 0), (1, 4), (0, 5), (3, 7), (4, 6)}
                   and str(verdict) == "true_within_bound")


def test_ac6_module_golden():
    with criterion("AC6", 5.0) as c:
        M = parse_module("[x, 0]; [y, x]; [0, y]")
        x, y = parse_poly("x"), parse_poly("y")
        one = Poly.const(1)
        mm = FracSubmodule(one, parse_module("[x, 0]; [y, 0]; [0, x]; [0, y]"))
        R2 = FracSubmodule(one, free_module(2))
        c["ok"] = (frac_intersect(M, x, y) == mm
                   and frac_intersect(M, x ** 2, y ** 2) == R2
                   and frac_intersect(M, x ** 3, y ** 3) == R2)


AC7_SUITES = [
    ("ab_biconditional_modules", 100),
    ("ab_biconditional_monomial", 50),
    ("s2_idempotence", 50),
    ("intersection_scan", 25),
    ("triple_vs_reduction", 30),
    ("oracle_membership_colon", 100),
]


def test_ac7_property_suites():
    with criterion("AC7", 600.0) as c:
        results = {name: run_suite(name, seed=0, count=n) for name, n in AC7_SUITES}
        for name, r in results.items():
            print(f"  {name}: {r['failures']} failures in {r['instances']}")
            for ex in r["examples"]:
                print(f"    {ex}")
        c["ok"] = all(r["failures"] == 0 for r in results.values())


def test_ac8_selftest_deterministic():
    with criterion("AC8", float("inf")) as c:
        cmd = [sys.executable, "-m", "arfs2", "selftest", "--seed", "0", "--json"]
        runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
        c["ok"] = (runs[0].returncode == 0 and runs[0].stdout
                   and runs[0].stdout == runs[1].stdout)


if __name__ == "__main__":
    import pytest
    sys.exit(pytest.main([__file__, "-q", "-s"]))
